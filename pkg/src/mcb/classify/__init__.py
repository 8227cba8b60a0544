from .canonical import *
from .candidates import *
from .involution import *
from .patterns import *
from .pipeline import *

__all__ = []
__all__.extend(canonical.__all__)
__all__.extend(candidates.__all__)
__all__.extend(involution.__all__)
__all__.extend(patterns.__all__)
__all__.extend(pipeline.__all__)
