from .residue import *
from .monomial import *
from .search import *

__all__ = []
__all__.extend(residue.__all__)
__all__.extend(monomial.__all__)
__all__.extend(search.__all__)
