# -----------------------------------------------------------------------------
# Copyright (C) 2024-2026 The python-mcb authors
#
# This file is part of python-mcb.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# -----------------------------------------------------------------------------
from typing import Any, Optional


class McbError(Exception):
    """
    Base class of all errors raised by python-mcb.
    """
    pass


class ResidueMismatch(McbError, ValueError):
    """
    Raised when combining two residues with different moduli.

    :ivar left: modulus of the left operand.
    :vartype left: int
    :ivar right: modulus of the right operand.
    :vartype right: int
    """
    left: int
    right: int

    def __init__(self, left: int, right: int):
        super().__init__(f'Cannot combine residues mod {left} and mod {right}')
        self.left = left
        self.right = right


class MonomialError(McbError, ValueError):
    """
    Raised on an invalid exponent vector, or a monomial that violates the
    precondition of an operation (non-invariant where an invariant is required,
    involving x4 where only x1..x3 are allowed).
    """
    pass


class GermStructureError(McbError, ValueError):
    """
    Raised when a germ datum is malformed: wrong arity, ``m != mbar * d``,
    non-positive orders, or a weight pattern that does not fit its series.
    """
    pass


class GermValidationError(McbError):
    """
    Raised when a germ is required to be normalized but fails an axiom.

    :ivar axiom: the number of the first failing axiom (1-5).
    :vartype axiom: int
    :ivar detail: human readable reason.
    :vartype detail: str
    :ivar witness: optional witness of the failure.
    :vartype witness: Any
    """
    axiom: int
    detail: str
    witness: Any

    def __init__(self, axiom: int, detail: str, witness: Any = None):
        super().__init__(f'Axiom ({axiom}) fails: {detail}')
        self.axiom = axiom
        self.detail = detail
        self.witness = witness


class SearchExhausted(McbError):
    """
    Raised when a bounded search hits its cap before finding a witness.
    A truncated minimum is never returned in its place.

    :ivar what: what was searched for.
    :vartype what: str
    :ivar cap: the order cap in t-units.
    :vartype cap: int
    """
    what: str
    cap: int

    def __init__(self, what: str, cap: int):
        super().__init__(f'Search for {what} exhausted at order cap {cap}')
        self.what = what
        self.cap = cap


class NoInvariantOfOrder(McbError):
    """
    Raised by chart extension when no weight-0 monomial of order exactly ``mbar`` exists.

    :ivar mbar: the required order.
    :vartype mbar: int
    """
    mbar: int

    def __init__(self, mbar: int):
        super().__init__(f'No invariant monomial of order {mbar}')
        self.mbar = mbar


class UnsupportedGerm(McbError):
    """
    Raised when an invariant is requested for a germ outside its supported class,
    e.g. exact i_P of an exceptional or general-hypersurface germ.
    """
    pass


class TableError(McbError, ValueError):
    """
    Raised on an inconsistent request to the surface singularity tables:
    out of range DuVal subscripts, non-coprime cyclic quotients,
    or a (type, row) pair that does not fit the involution table.
    """
    pass


class GermDocumentError(McbError, ValueError):
    """
    Raised when a germ document is not well formed: bad syntax, a missing or unknown field,
    or a value of the wrong type.
    """
    pass


class UnknownGerm(McbError, KeyError):
    """
    Raised when a name is neither a built-in germ nor a prefix of one.
    """
    def __str__(self):
        return str(self.args[0]) if self.args else ''


class FamilyError(McbError):
    """
    Raised for an unknown family name, bad parameters or a malformed action.
    """
    pass


class UnsupportedShape(FamilyError):
    """
    Raised when a specialized generator does not split into linear forms.

    :ivar poly: the offending polynomial, as a string.
    :vartype poly: str
    """
    poly: str

    def __init__(self, poly: str):
        super().__init__(f'Does not split into linear forms: {poly}')
        self.poly = poly


class FamilyParseError(FamilyError):
    """
    Raised when a family text file cannot be parsed.

    :ivar line: the line number, if known.
    :vartype line: Optional[int]
    """
    line: Optional[int]

    def __init__(self, msg: str, line: Optional[int] = None):
        super().__init__(msg if line is None else f'line {line}: {msg}')
        self.line = line
