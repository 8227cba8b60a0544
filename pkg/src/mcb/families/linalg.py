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
from __future__ import annotations
from typing import Optional, Sequence
from sympy.polys.matrices import DomainMatrix
from .cyclotomic import Cyclotomic, CyclotomicField


__all__ = ['Vector', 'to_domain_matrix', 'from_domain_matrix', 'rref', 'rank', 'nullspace', 'reduce_against',
           'solve', 'matmul', 'matpow', 'identity']


Vector = list[Cyclotomic]


def to_domain_matrix(rows: Sequence[Sequence[Cyclotomic]], field: Optional[CyclotomicField] = None,
                     ncols: Optional[int] = None) -> DomainMatrix:
    r"""
    A dense :class:`DomainMatrix` over the field's number field domain.
    ``field`` and ``ncols`` are only needed when ``rows`` is empty.
    """
    if rows:
        field = field or rows[0][0].field
        ncols = len(rows[0])
    return DomainMatrix([[field.element(c).value for c in r] for r in rows],
                        (len(rows), ncols or 0), field.domain).to_dense()


def from_domain_matrix(mat: DomainMatrix, field: CyclotomicField) -> list[Vector]:
    nrows, ncols = mat.shape
    return [[Cyclotomic(field, mat[i, j].element) for j in range(ncols)] for i in range(nrows)]


def rref(rows: Sequence[Sequence[Cyclotomic]]) -> tuple[list[Vector], list[int]]:
    r"""
    Reduced row echelon form over a cyclotomic field.

    :return: the nonzero rows, each with a leading one, and their pivot columns.
    """
    if not rows:
        return [], []
    field = rows[0][0].field
    red, pivots = to_domain_matrix(rows).rref()
    return from_domain_matrix(red, field)[:len(pivots)], list(pivots)


def rank(rows: Sequence[Sequence[Cyclotomic]]) -> int:
    return to_domain_matrix(rows).rank() if rows else 0


def nullspace(rows: Sequence[Sequence[Cyclotomic]], field: CyclotomicField, ncols: int) -> list[Vector]:
    r"""
    A basis of ``{v : A v = 0}``, one vector per free column, scaled so that its last nonzero
    entry (the free column) is one.
    """
    if not rows:
        return identity(field, ncols)
    basis = from_domain_matrix(to_domain_matrix(rows, field, ncols).nullspace(), field)
    ret = []
    for vec in basis:
        lead = next(c for c in reversed(vec) if not c.is_zero()).inverse()
        ret.append([c * lead for c in vec])
    return ret


def reduce_against(red: Sequence[Vector], pivots: Sequence[int], vec: Sequence[Cyclotomic]) -> Vector:
    r"""
    Remainder of ``vec`` modulo the row space of an RREF matrix. Zero iff ``vec`` lies in the span.
    """
    if not red:
        return list(vec)
    field = vec[0].field
    coeffs = to_domain_matrix([[vec[pc] for pc in pivots]])
    rem = to_domain_matrix([vec]) - coeffs.matmul(to_domain_matrix(red))
    return from_domain_matrix(rem, field)[0]


def solve(columns: Sequence[Sequence[Cyclotomic]], target: Sequence[Cyclotomic],
          field: CyclotomicField) -> Optional[Vector]:
    r"""
    Find ``c`` with ``sum(c[j] * columns[j]) == target``, or ``None`` if there is none.
    Free unknowns are set to zero.
    """
    nvars = len(columns)
    aug = [[col[r] for col in columns] + [target[r]] for r in range(len(target))]
    red, pivots = rref(aug)
    if nvars in pivots:
        return None
    ret = [field.zero] * nvars
    for row, pc in zip(red, pivots):
        ret[pc] = row[nvars]
    return ret


def matmul(a: Sequence[Sequence[Cyclotomic]], b: Sequence[Sequence[Cyclotomic]]) -> list[Vector]:
    field = a[0][0].field
    return from_domain_matrix(to_domain_matrix(a).matmul(to_domain_matrix(b)), field)


def matpow(a: Sequence[Sequence[Cyclotomic]], k: int) -> list[Vector]:
    field = a[0][0].field
    return from_domain_matrix(to_domain_matrix(a).pow(k), field)


def identity(field: CyclotomicField, size: int) -> list[Vector]:
    return from_domain_matrix(DomainMatrix.eye(size, field.domain).to_dense(), field)
