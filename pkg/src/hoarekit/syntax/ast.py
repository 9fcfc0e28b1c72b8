"""Abstract syntax shared by every kernel: terms, formulas, commands and paths.

All nodes are frozen dataclasses and can be shared between threads. Equality
and hashing are structural and walk the tree with an explicit stack, since a
numeral nests as deep as its value and a program as deep as its length.
"""

import re
from dataclasses import dataclass, fields
from enum import Enum
from typing import Tuple

KEYWORDS = frozenset({
    "forall", "exists", "skip", "if", "then", "else", "while", "do", "assert",
    "program", "proof", "triple", "fantasy", "as", "return", "qed",
})

_VAR_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def check_var_name(name: str) -> str:
    """Validate a variable name and return it unchanged.

    Args:
        name: Candidate identifier

    Returns:
        The same name

    Raises:
        ValueError: If the name is not an identifier, is a keyword, or starts
            with the successor letter ``S``
    """
    if not isinstance(name, str) or not _VAR_NAME.match(name):
        raise ValueError(f"Invalid variable name: {name!r}")
    if name in KEYWORDS:
        raise ValueError(f"Variable name is a keyword: {name!r}")
    if name.startswith("S"):
        raise ValueError(f"Variable name may not start with the successor symbol S: {name!r}")
    return name


class Pos(Enum):
    """One step of a path: descend into the left or right child."""
    LEFT = "L"
    RIGHT = "R"


Path = Tuple[Pos, ...]


_FIELD_NAMES = {}


def _field_names(cls) -> Tuple[str, ...]:
    names = _FIELD_NAMES.get(cls)
    if names is None:
        names = _FIELD_NAMES[cls] = tuple(f.name for f in fields(cls))
    return names


def _same_tree(a: "_Node", b: "_Node") -> bool:
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if x is y:
            continue
        if type(x) is not type(y):
            return False
        for name in _field_names(type(x)):
            u, v = getattr(x, name), getattr(y, name)
            if isinstance(u, _Node):
                stack.append((u, v))
            elif u != v:
                return False
    return True


def _preorder(node: "_Node"):
    # node classes stand in for the constructors; every class has a fixed arity
    stack = [node]
    while stack:
        current = stack.pop()
        if isinstance(current, _Node):
            cls = type(current)
            yield cls
            stack.extend(getattr(current, name) for name in reversed(_field_names(cls)))
        else:
            yield current


class _Node:
    def __eq__(self, other):
        if not isinstance(other, _Node):
            return NotImplemented
        return _same_tree(self, other)

    def __hash__(self) -> int:
        return hash(tuple(_preorder(self)))

    def __str__(self) -> str:
        from ..surface.printer import render
        return render(self)


# Terms

@dataclass(frozen=True, eq=False)
class Term(_Node):
    pass


@dataclass(frozen=True, eq=False)
class Var(Term):
    name: str

    def __post_init__(self):
        check_var_name(self.name)


@dataclass(frozen=True, eq=False)
class Zero(Term):
    pass


@dataclass(frozen=True, eq=False)
class Succ(Term):
    term: Term


@dataclass(frozen=True, eq=False)
class Plus(Term):
    left: Term
    right: Term


@dataclass(frozen=True, eq=False)
class Mult(Term):
    left: Term
    right: Term


# Formulas. Atoms are formulas in their own right; the propositional layer
# wraps them directly.

@dataclass(frozen=True, eq=False)
class Formula(_Node):
    pass


@dataclass(frozen=True, eq=False)
class Atom(Formula):
    pass


@dataclass(frozen=True, eq=False)
class Eq(Atom):
    left: Term
    right: Term


@dataclass(frozen=True, eq=False)
class ForAll(Atom):
    var: str
    body: Formula

    def __post_init__(self):
        check_var_name(self.var)


@dataclass(frozen=True, eq=False)
class Exists(Atom):
    var: str
    body: Formula

    def __post_init__(self):
        check_var_name(self.var)


@dataclass(frozen=True, eq=False)
class Prop(Atom):
    """Sentence letter of the pure propositional fragment."""
    name: str

    def __post_init__(self):
        check_var_name(self.name)


@dataclass(frozen=True, eq=False)
class Not(Formula):
    body: Formula


@dataclass(frozen=True, eq=False)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, eq=False)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, eq=False)
class Imp(Formula):
    left: Formula
    right: Formula


# Commands

@dataclass(frozen=True, eq=False)
class Command(_Node):
    pass


@dataclass(frozen=True, eq=False)
class Skip(Command):
    pass


@dataclass(frozen=True, eq=False)
class Assign(Command):
    var: str
    expr: Term

    def __post_init__(self):
        check_var_name(self.var)


@dataclass(frozen=True, eq=False)
class Seq(Command):
    first: Command
    second: Command


@dataclass(frozen=True, eq=False)
class IfElse(Command):
    cond: Formula
    then_branch: Command
    else_branch: Command


@dataclass(frozen=True, eq=False)
class While(Command):
    cond: Formula
    body: Command


@dataclass(frozen=True, eq=False)
class Assert(Command):
    pre: Formula
    body: Command
    post: Formula


def formula_eq(f1: Formula, f2: Formula) -> bool:
    """Structural equality, bound-variable names included (no alpha-equivalence)."""
    return f1 == f2


def numeral(n: int) -> Term:
    """Zero under ``n`` successors."""
    if n < 0:
        raise ValueError(f"numeral expects a natural number, got {n}")
    term: Term = Zero()
    for _ in range(n):
        term = Succ(term)
    return term
