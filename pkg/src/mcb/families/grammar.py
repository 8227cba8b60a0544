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
family_grammar = r'''
    ?start: file_input

    file_input: statement*

    ?statement: "order" INT                 -> order_stmt
              | "name" NAME                 -> name_stmt
              | "gen" sum                   -> gen_stmt
              | "row" sum ("," sum)*        -> row_stmt
              | "base" sum ("," sum)*       -> base_stmt

    ?sum: product
        | sum "+" product                   -> add
        | sum "-" product                   -> sub
    ?product: unary
            | product "*" unary             -> mul
    ?unary: power
          | "-" unary                       -> neg
    ?power: atom
          | atom "^" exponent               -> pow
    exponent: INT                           -> pos_exp
            | "-" INT                       -> neg_exp
    ?atom: INT                              -> number
         | VAR                              -> var
         | "(" sum ")"

    VAR: /[xyztuve]/
    INT: /[0-9]+/
    NAME: /[A-Za-z][A-Za-z0-9_\-]*/
    COMMENT: /#[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
'''
