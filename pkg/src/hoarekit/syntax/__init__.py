"""Shared abstract syntax and evidence tokens."""

from .ast import (
    KEYWORDS, Pos, Path, check_var_name,
    Term, Var, Zero, Succ, Plus, Mult,
    Formula, Atom, Eq, ForAll, Exists, Prop, Not, And, Or, Imp,
    Command, Skip, Assign, Seq, IfElse, While, Assert,
    formula_eq, numeral,
)
from .evidence import Theorem, HoareTriple

__all__ = [
    'KEYWORDS', 'Pos', 'Path', 'check_var_name',
    'Term', 'Var', 'Zero', 'Succ', 'Plus', 'Mult',
    'Formula', 'Atom', 'Eq', 'ForAll', 'Exists', 'Prop', 'Not', 'And', 'Or', 'Imp',
    'Command', 'Skip', 'Assign', 'Seq', 'IfElse', 'While', 'Assert',
    'formula_eq', 'numeral',
    'Theorem', 'HoareTriple',
]
