"""Unforgeable evidence tokens: theorems and Hoare triples.

Neither class can be instantiated from outside the kernel. The constructors
demand a module-private seal, and the kernels obtain instances through
``_mint_theorem`` / ``_mint_triple``, which are not exported.
"""

from .ast import Command, Formula, formula_eq

_SEAL = object()


class Theorem:
    """A formula together with the evidence that kernel rules produced it."""

    __slots__ = ("_formula",)

    def __init__(self, formula: Formula, *, _seal: object = None):
        if _seal is not _SEAL:
            raise TypeError("Theorem values can only be produced by kernel rules")
        object.__setattr__(self, "_formula", formula)

    @property
    def formula(self) -> Formula:
        return self._formula

    def __setattr__(self, name, value):
        raise AttributeError("Theorem is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Theorem) and formula_eq(other._formula, self._formula)

    def __hash__(self) -> int:
        return hash(("Theorem", self._formula))

    def __repr__(self) -> str:
        return f"Theorem({self._formula!r})"

    def __str__(self) -> str:
        from ..surface.printer import print_theorem
        return print_theorem(self)


class HoareTriple:
    """Partial-correctness claim {pre} cmd {post} certified by Hoare rules."""

    __slots__ = ("_pre", "_cmd", "_post")

    def __init__(self, pre: Formula, cmd: Command, post: Formula, *, _seal: object = None):
        if _seal is not _SEAL:
            raise TypeError("HoareTriple values can only be produced by Hoare rules")
        object.__setattr__(self, "_pre", pre)
        object.__setattr__(self, "_cmd", cmd)
        object.__setattr__(self, "_post", post)

    @property
    def pre(self) -> Formula:
        return self._pre

    @property
    def cmd(self) -> Command:
        return self._cmd

    @property
    def post(self) -> Formula:
        return self._post

    def __setattr__(self, name, value):
        raise AttributeError("HoareTriple is immutable")

    def __eq__(self, other) -> bool:
        return (isinstance(other, HoareTriple)
                and formula_eq(other._pre, self._pre)
                and other._cmd == self._cmd
                and formula_eq(other._post, self._post))

    def __hash__(self) -> int:
        return hash(("HoareTriple", self._pre, self._cmd, self._post))

    def __repr__(self) -> str:
        return f"HoareTriple({self._pre!r}, {self._cmd!r}, {self._post!r})"

    def __str__(self) -> str:
        from ..surface.printer import print_triple
        return print_triple(self)


def _mint_theorem(formula: Formula) -> Theorem:
    return Theorem(formula, _seal=_SEAL)


def _mint_triple(pre: Formula, cmd: Command, post: Formula) -> HoareTriple:
    return HoareTriple(pre, cmd, post, _seal=_SEAL)
