from .model import *
from .axioms import *
from .predicates import *
from .chart import *

__all__ = []
__all__.extend(model.__all__)
__all__.extend(axioms.__all__)
__all__.extend(predicates.__all__)
__all__.extend(chart.__all__)
