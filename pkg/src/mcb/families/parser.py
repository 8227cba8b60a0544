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
from dataclasses import dataclass, field
from typing import Optional
import lark
import sympy
from ..types import FamilyError, FamilyParseError
from .cyclotomic import EPS, VARS, CyclotomicField
from .family import Action, EquivariantFamily
from .grammar import family_grammar


__all__ = ['FamilyFile', 'Parser', 'parse_family_text', 'parse_family', 'load_family']


SYMBOLS = {str(s): s for s in VARS + (EPS,)}


@dataclass
class FamilyFile:
    order: Optional[int] = None
    name: Optional[str] = None
    generators: list[sympy.Expr] = field(default_factory=list)
    rows: list[list[sympy.Expr]] = field(default_factory=list)
    base: list[list[sympy.Expr]] = field(default_factory=list)


class Parser(lark.Transformer):
    @staticmethod
    def number(args: list[lark.Token]):
        return sympy.Integer(int(args[0].value))

    @staticmethod
    def var(args: list[lark.Token]):
        return SYMBOLS[args[0].value]

    @staticmethod
    def add(args):
        return args[0] + args[1]

    @staticmethod
    def sub(args):
        return args[0] - args[1]

    @staticmethod
    def mul(args):
        return args[0] * args[1]

    @staticmethod
    def neg(args):
        return -args[0]

    @staticmethod
    def pos_exp(args: list[lark.Token]):
        return int(args[0].value)

    @staticmethod
    def neg_exp(args: list[lark.Token]):
        return -int(args[0].value)

    @staticmethod
    def pow(args):
        base, exp = args
        if exp < 0 and base != EPS:
            raise FamilyParseError(f'Negative power of {base}; only e may be inverted')
        return base ** exp

    @staticmethod
    def order_stmt(args: list[lark.Token]):
        return 'order', int(args[0].value)

    @staticmethod
    def name_stmt(args: list[lark.Token]):
        return 'name', args[0].value

    @staticmethod
    def gen_stmt(args):
        return 'gen', args[0]

    @staticmethod
    def row_stmt(args):
        return 'row', list(args)

    @staticmethod
    def base_stmt(args):
        return 'base', list(args)

    @staticmethod
    def file_input(args):
        ret = FamilyFile()
        for kind, value in args:
            if kind == 'order':
                if ret.order is not None:
                    raise FamilyParseError('Duplicate order statement')
                ret.order = value
            elif kind == 'name':
                ret.name = value
            elif kind == 'gen':
                ret.generators.append(value)
            elif kind == 'row':
                ret.rows.append(value)
            else:
                ret.base.append(value)
        return ret


def parse_family_text(text: str) -> FamilyFile:
    r"""
    Parse the family text format without building the family.

    :raises FamilyParseError: on a syntax error.
    """
    parser = lark.Lark(family_grammar, parser='lalr', transformer=Parser())
    try:
        return parser.parse(text)
    except lark.exceptions.VisitError as e:
        if isinstance(e.orig_exc, FamilyParseError):
            raise e.orig_exc from None
        raise FamilyParseError(str(e.orig_exc)) from e
    except lark.exceptions.UnexpectedInput as e:
        raise FamilyParseError(f'Unexpected input: {e.get_context(text).strip()}', getattr(e, 'line', None)) from e


def parse_family(text: str, name: str = 'file') -> EquivariantFamily:
    r"""
    Parse and build a family from text::

        order 4
        gen x*y - u*t^2
        row 0, 1, 0, 0
        ...
        base -1, 0
        base 0, -1

    :raises FamilyParseError: on a syntax error or a missing statement.
    :raises FamilyError: when the action or generators are not well formed.
    """
    doc = parse_family_text(text)
    if doc.order is None:
        raise FamilyParseError('Missing order statement')
    if not doc.generators:
        raise FamilyParseError('Missing gen statements')
    if len(doc.rows) != 4 or len(doc.base) != 2:
        raise FamilyParseError(f'Expected 4 row and 2 base statements, got {len(doc.rows)} and {len(doc.base)}')
    try:
        field = CyclotomicField(doc.order)
    except FamilyError as e:
        raise FamilyParseError(str(e)) from e
    action = Action.from_rows(field, doc.rows, doc.base)
    return EquivariantFamily(doc.name or name, doc.order, tuple(doc.generators), action)


def load_family(path: str) -> EquivariantFamily:
    with open(path) as f:
        text = f.read()
    return parse_family(text, name=path)
