from .cyclotomic import *
from .linalg import *
from .family import *
from .equivariance import *
from .fiber import *
from .fixed import *
from .builtin import *
from .parser import *

__all__ = []
__all__.extend(cyclotomic.__all__)
__all__.extend(linalg.__all__)
__all__.extend(family.__all__)
__all__.extend(equivariance.__all__)
__all__.extend(fiber.__all__)
__all__.extend(fixed.__all__)
__all__.extend(builtin.__all__)
__all__.extend(parser.__all__)
