"""Rule plumbing shared by the kernels: directions, checking modes, chaining.

A rule is any callable taking a Theorem and returning a Theorem (or raising
KernelError). Path-directed application in STRICT mode only admits rules
that replace a formula by an equivalent one; those are registered here with
``equivalence_rule``.
"""

import functools
from enum import Enum
from typing import Callable, Tuple

from ..errors import KernelError
from ..syntax import Theorem
from ..utils import get_logger

logger = get_logger("kernel")

Rule = Callable[[Theorem], Theorem]


class Direction(Enum):
    INTRO = "intro"
    ELIM = "elim"
    FORWARD = "forward"
    BACKWARD = "backward"


class Mode(Enum):
    DEFAULT = "default"
    STRICT = "strict"

    @classmethod
    def parse(cls, value) -> "Mode":
        if isinstance(value, Mode):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"Unknown checking mode: {value!r} (expected 'default' or 'strict')")


_EQUIVALENCE_RULES = set()


def equivalence_rule(func):
    """Mark a kernel rule as rewriting its input into an equivalent formula."""
    _EQUIVALENCE_RULES.add(func)
    return func


class RuleChain:
    """Rules applied left to right, each to the previous result."""

    def __init__(self, *rules: Rule):
        self.rules: Tuple[Rule, ...] = rules

    def __call__(self, theorem: Theorem) -> Theorem:
        for rule in self.rules:
            theorem = rule(theorem)
        return theorem

    def __repr__(self) -> str:
        return f"RuleChain{self.rules!r}"


def chain(*rules: Rule) -> RuleChain:
    """Compose rules left to right.

    Args:
        *rules: Rules to apply in order

    Returns:
        A RuleChain; it counts as an equivalence rule when every stage does
    """
    return RuleChain(*rules)


class ShapeDirected:
    """Interchange rule whose direction is picked by the theorem's shape.

    The forward direction is tried first; when its pattern does not match,
    the backward direction is applied.
    """

    def __init__(self, rule: Callable[[Theorem, Direction], Theorem]):
        self.rule = rule

    def __call__(self, theorem: Theorem) -> Theorem:
        try:
            return self.rule(theorem, Direction.FORWARD)
        except KernelError:
            return self.rule(theorem, Direction.BACKWARD)

    def __repr__(self) -> str:
        return f"ShapeDirected({getattr(self.rule, '__name__', self.rule)!r})"


@equivalence_rule
def identity(theorem: Theorem) -> Theorem:
    return theorem


def is_equivalence_rule(rule) -> bool:
    """Whether STRICT mode admits ``rule`` under a path.

    Args:
        rule: A registered rule, a RuleChain, a ShapeDirected rule or a
            ``functools.partial`` of any of these

    Returns:
        True if the rule rewrites its input into an equivalent formula
    """
    if isinstance(rule, RuleChain):
        return all(is_equivalence_rule(stage) for stage in rule.rules)
    if isinstance(rule, ShapeDirected):
        return is_equivalence_rule(rule.rule)
    if isinstance(rule, functools.partial):
        return is_equivalence_rule(rule.func)
    return rule in _EQUIVALENCE_RULES


def refuse(rule: str, detail: str = None) -> KernelError:
    """Build (and log) the error a rule raises when its side-conditions fail."""
    logger.debug("%s refused: %s", rule, detail or "shape mismatch")
    return KernelError(rule, detail)
