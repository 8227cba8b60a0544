from .local import *
from .report import *
from .budget import *

__all__ = []
__all__.extend(local.__all__)
__all__.extend(report.__all__)
__all__.extend(budget.__all__)
