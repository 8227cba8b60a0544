from .types import *
from .hj import *
from .tables import *

__all__ = []
__all__.extend(types.__all__)
__all__.extend(hj.__all__)
__all__.extend(tables.__all__)
