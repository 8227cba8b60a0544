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
from __future__ import annotations
import logging
import re
from dataclasses import dataclass
from typing import Optional, Sequence, Union
import sympy
from .cyclotomic import EPS, VARS
from .family import EquivariantFamily
from .linalg import matmul, rank, nullspace


__all__ = ['Candidate', 'CandidateResult', 'Eigenspace', 'FixedLocusReport', 'parse_point', 'fixed_points_check']


Candidate = Union[str, Sequence]
r"""A hyperplane tag such as ``'t=0'``, or a point ``(x, y, z, t, u, v)``."""

HYPERPLANE_RE = re.compile(r'^\s*([xyzt])\s*=\s*0\s*$')


@dataclass(frozen=True)
class CandidateResult:
    r"""
    :ivar on_family: ``None`` for hyperplanes.
    :ivar jacobian_rank: rank of the Jacobian of the generators at a point on the family.
    """
    candidate: str
    fixed: bool
    on_family: Optional[bool] = None
    jacobian_rank: Optional[int] = None
    detail: str = ''
    codim: int = 2

    @property
    def smooth(self) -> Optional[bool]:
        return None if self.jacobian_rank is None else self.jacobian_rank == self.codim

    @property
    def passed(self) -> bool:
        return self.fixed and self.on_family is not False


@dataclass(frozen=True)
class Eigenspace:
    exponent: int
    r"""The eigenvalue is ``e^exponent``."""
    basis: tuple[tuple[sympy.Expr, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __str__(self):
        pts = ', '.join('(' + ':'.join(str(c) for c in v) + ')' for v in self.basis)
        return f'e^{self.exponent}: P({pts})'


@dataclass(frozen=True)
class FixedLocusReport:
    family: EquivariantFamily
    power: int
    results: tuple[CandidateResult, ...]
    eigenspaces: tuple[Eigenspace, ...]
    base_identity: bool

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __str__(self):
        lines = [f'sigma^{self.power}: base action is {"" if self.base_identity else "not "}the identity']
        for r in self.results:
            state = 'fixed' if r.fixed else 'not fixed'
            if r.on_family is not None:
                state += ', on family' if r.on_family else ', not on family'
            if r.jacobian_rank is not None:
                state += f', jacobian rank {r.jacobian_rank}'
            lines.append(f'  {r.candidate}: {state}' + (f' ({r.detail})' if r.detail else ''))
        lines.extend(f'  eigenspace {e}' for e in self.eigenspaces)
        return '\n'.join(lines)


def parse_point(text: str) -> tuple[sympy.Expr, ...]:
    r"""
    Parse ``'0,0,0,1;0,0'`` into six coordinates. Entries may use ``e``.

    :raises ValueError: on a malformed point.
    """
    parts = text.split(';')
    if len(parts) != 2:
        raise ValueError(f'Point needs projective and base parts separated by ";": {text}')
    fiber = [p.strip() for p in parts[0].split(',')]
    base = [p.strip() for p in parts[1].split(',')]
    if len(fiber) != 4 or len(base) != 2:
        raise ValueError(f'Point needs 4 + 2 coordinates: {text}')
    try:
        return tuple(sympy.sympify(c, locals={'e': EPS}) for c in fiber + base)
    except (sympy.SympifyError, SyntaxError) as e:
        raise ValueError(f'Malformed coordinate in {text}') from e


def _check_hyperplane(tag: str, fiber, base_identity: bool) -> CandidateResult:
    idx = 'xyzt'.index(HYPERPLANE_RE.match(tag).group(1))
    others = [j for j in range(4) if j != idx]
    lam = fiber[others[0]][others[0]]
    pointwise = all(fiber[i][j] == (lam if i == j else 0) for j in others for i in range(4))
    detail = '' if pointwise else 'action is not scalar on the hyperplane'
    if pointwise and not base_identity:
        detail = 'base is moved'
    return CandidateResult(tag.replace(' ', ''), pointwise and base_identity, detail=detail)


def _check_point(point: Sequence, family: EquivariantFamily, fiber, base) -> CandidateResult:
    field = family.field
    if len(point) != 6:
        raise ValueError(f'A point has 6 coordinates, got {len(point)}')
    coords = [field.element(c) for c in point]
    p, b = coords[:4], coords[4:]
    label = '(' + ','.join(str(c) for c in coords[:4]) + ';' + ','.join(str(c) for c in coords[4:]) + ')'
    if all(c.is_zero() for c in p):
        return CandidateResult(label, False, detail='not a projective point')
    image = [r[0] for r in matmul(fiber, [[c] for c in p])]
    base_image = [r[0] for r in matmul(base, [[c] for c in b])]
    fixed = rank([p, image]) == 1 and base_image == b
    values = dict(zip(VARS, (c.as_expr() for c in coords)))
    on_family = all(field.reduce(g.xreplace(values)) == 0 for g in family.generators)
    jac = None
    if on_family:
        rows = [[field.element(field.reduce(sympy.diff(g, var).xreplace(values))) for var in VARS]
                for g in family.generators]
        jac = rank(rows)
    return CandidateResult(label, fixed, on_family, jac, codim=len(family.generators))


def fixed_points_check(family: EquivariantFamily, candidates: Sequence[Candidate], power: int = 1) -> FixedLocusReport:
    r"""
    Check candidate fixed points and fixed hyperplanes of ``sigma^power``, and list the projective
    fixed locus of its matrix as eigenspaces.
    """
    field = family.field
    act = family.action.power(power)
    base_identity = act.base == family.action.power(0).base
    results = []
    for cand in candidates:
        if isinstance(cand, str) and HYPERPLANE_RE.match(cand):
            results.append(_check_hyperplane(cand, act.fiber, base_identity))
        elif isinstance(cand, str):
            results.append(_check_point(parse_point(cand), family, act.fiber, act.base))
        else:
            results.append(_check_point(cand, family, act.fiber, act.base))
    eigen = []
    for k in range(field.n):
        lam = field.root(k)
        rows = [[act.fiber[i][j] - (lam if i == j else 0) for j in range(4)] for i in range(4)]
        basis = nullspace(rows, field, 4)
        if basis:
            eigen.append(Eigenspace(k, tuple(tuple(c.as_expr() for c in v) for v in basis)))
    logging.getLogger(__name__).debug(f'{family.name}: sigma^{power} has {len(eigen)} eigenspace(s)')
    return FixedLocusReport(family, power, tuple(results), tuple(eigen), base_identity)
