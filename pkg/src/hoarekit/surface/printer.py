"""Pretty-printer for terms, formulas, programs, theorems and triples.

Unicode output is the canonical transcript form (``⊢ A∨B→A∨¬¬B``,
``{A=SSS0} ; {A=SSS0}``). Parentheses appear only where a child binds looser than its parent; quantifier bodies are the
exception and are always bracketed unless they start with another
quantifier (``∀C:∀D:(D+SC=SD+C)``). Everything printed parses back to the
same tree.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Union

from ..syntax import (
    And, Assert, Assign, Command, Eq, Exists, ForAll, Formula, HoareTriple, IfElse, Imp,
    Mult, Not, Or, Plus, Prop, Seq, Skip, Succ, Term, Theorem, Var, While, Zero,
)


class Style(Enum):
    UNICODE = "unicode"
    ASCII = "ascii"

    @classmethod
    def parse(cls, value) -> "Style":
        if isinstance(value, Style):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"Unknown print style: {value!r} (expected 'unicode' or 'ascii')")


@dataclass(frozen=True)
class _Symbols:
    turnstile: str
    neg: str
    conj: str
    disj: str
    imp: str
    forall: str
    exists: str


_SYMBOLS = {
    Style.UNICODE: _Symbols("⊢ ", "¬", "∧", "∨", "→", "∀", "∃"),
    Style.ASCII: _Symbols("|- ", "!", "&", "|", "->", "forall ", "exists "),
}

StyleLike = Union[Style, str, None]


def _symbols(style: StyleLike) -> _Symbols:
    return _SYMBOLS[Style.parse(style or Style.UNICODE)]


# Terms

def _term_prec(t: Term) -> int:
    if isinstance(t, Plus):
        return 1
    if isinstance(t, Mult):
        return 2
    if isinstance(t, Succ):
        return 3
    return 4


def print_term(t: Term) -> str:
    """Terms print identically in both styles: ``S(D+0)``, ``SD+0``, ``A*SB``."""
    count = 0
    while isinstance(t, Succ):
        count += 1
        t = t.term
    if isinstance(t, Var):
        body = t.name
    elif isinstance(t, Zero):
        body = "0"
    elif isinstance(t, Plus):
        right = print_term(t.right)
        if _term_prec(t.right) <= 1:
            right = f"({right})"
        body = f"{print_term(t.left)}+{right}"
    elif isinstance(t, Mult):
        left, right = print_term(t.left), print_term(t.right)
        if _term_prec(t.left) < 2:
            left = f"({left})"
        if _term_prec(t.right) <= 2:
            right = f"({right})"
        body = f"{left}*{right}"
    else:
        raise TypeError(f"Not a term: {t!r}")
    if count and isinstance(t, (Plus, Mult)):
        body = f"({body})"
    return "S" * count + body


# Formulas

_FORMULA_PREC = {Imp: 1, Or: 2, And: 3, Not: 4}


def _prec(f: Formula) -> int:
    return _FORMULA_PREC.get(type(f), 5)


def _strip_negations(f: Formula):
    count = 0
    while isinstance(f, Not):
        count += 1
        f = f.body
    return count, f


def _formula(f: Formula, sym: _Symbols) -> str:
    if isinstance(f, Eq):
        return f"{print_term(f.left)}={print_term(f.right)}"
    if isinstance(f, Prop):
        return f.name
    if isinstance(f, Not):
        count, inner = _strip_negations(f)
        text = _formula(inner, sym)
        if _prec(inner) < 4:
            text = f"({text})"
        return sym.neg * count + text
    if isinstance(f, (ForAll, Exists)):
        head = sym.forall if isinstance(f, ForAll) else sym.exists
        count, inner = _strip_negations(f.body)
        text = _formula(inner, sym)
        if not isinstance(inner, (ForAll, Exists)):
            text = f"({text})"
        return f"{head}{f.var}:{sym.neg * count}{text}"
    if isinstance(f, (And, Or, Imp)):
        p = _prec(f)
        op = {And: sym.conj, Or: sym.disj, Imp: sym.imp}[type(f)]
        left, right = _formula(f.left, sym), _formula(f.right, sym)
        # implication associates to the right, conjunction and disjunction to the left
        if _prec(f.left) < p or (isinstance(f, Imp) and _prec(f.left) == p):
            left = f"({left})"
        if _prec(f.right) < p or (not isinstance(f, Imp) and _prec(f.right) == p):
            right = f"({right})"
        return f"{left}{op}{right}"
    raise TypeError(f"Not a formula: {f!r}")


def print_formula(f: Formula, style: StyleLike = Style.UNICODE) -> str:
    return _formula(f, _symbols(style))


def print_theorem(theorem: Theorem, style: StyleLike = Style.UNICODE) -> str:
    sym = _symbols(style)
    return sym.turnstile + _formula(theorem.formula, sym)


# Programs

def _command(c: Command, sym: _Symbols) -> str:
    if isinstance(c, Seq):
        parts = []
        # walk the right spine; a left-nested sequence keeps its braces
        while isinstance(c, Seq):
            first = _command(c.first, sym)
            parts.append(f"{{{first}}}" if isinstance(c.first, Seq) else first)
            c = c.second
        parts.append(_command(c, sym))
        return " ".join(parts)
    if isinstance(c, Skip):
        return ";"
    if isinstance(c, Assign):
        return f"{c.var} := {print_term(c.expr)};"
    if isinstance(c, IfElse):
        return (f"if ({_formula(c.cond, sym)}) then {{{_command(c.then_branch, sym)}}} "
                f"else {{{_command(c.else_branch, sym)}}};")
    if isinstance(c, While):
        return f"while ({_formula(c.cond, sym)}) do {{{_command(c.body, sym)}}};"
    if isinstance(c, Assert):
        return (f"assert {{{_formula(c.pre, sym)}}} {{{_command(c.body, sym)}}} "
                f"{{{_formula(c.post, sym)}}};")
    raise TypeError(f"Not a command: {c!r}")


def print_program(c: Command, style: StyleLike = Style.UNICODE) -> str:
    return _command(c, _symbols(style))


def print_triple(triple: HoareTriple, style: StyleLike = Style.UNICODE) -> str:
    sym = _symbols(style)
    return f"{{{_formula(triple.pre, sym)}}} {_command(triple.cmd, sym)} {{{_formula(triple.post, sym)}}}"


def render(node, style: StyleLike = Style.UNICODE) -> str:
    """Print any syntax node or evidence token."""
    if isinstance(node, Term):
        return print_term(node)
    if isinstance(node, Formula):
        return print_formula(node, style)
    if isinstance(node, Command):
        return print_program(node, style)
    if isinstance(node, Theorem):
        return print_theorem(node, style)
    if isinstance(node, HoareTriple):
        return print_triple(node, style)
    raise TypeError(f"Cannot print {node!r}")
