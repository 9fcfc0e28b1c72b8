"""Big-step evaluation of terms, formulas and commands."""

from typing import Dict, Mapping, Optional

from ..config import config
from ..errors import (
    BudgetExhausted, NaturalOverflow, PostconditionFailed, PreconditionFailed, UnboundVariable,
)
from ..syntax import (
    And, Assert, Assign, Command, Eq, Exists, ForAll, Formula, IfElse, Imp, Mult, Not, Or, Plus,
    Prop, Seq, Skip, Succ, Term, Var, While, Zero,
)
from ..utils import get_logger

Context = Mapping[str, int]


class _Budget:
    """Counts command-node evaluations; ``None`` means unbounded."""

    def __init__(self, limit: Optional[int]):
        self.limit = limit
        self.remaining = limit

    def tick(self) -> None:
        if self.limit is None:
            return
        if self.remaining <= 0:
            raise BudgetExhausted(self.limit)
        self.remaining -= 1


class Evaluator:
    """Evaluates expressions and commands over naturals bounded by a machine width."""

    def __init__(self, max_natural: Optional[int] = None):
        """Initialize the evaluator.

        Args:
            max_natural: Largest representable natural; defaults to
                ``interpreter.max_natural`` from the configuration
        """
        self.logger = get_logger('interpreter')
        self.max_natural = max_natural if max_natural is not None else config.get(
            'interpreter.max_natural', 2**63 - 1)

    def _checked(self, value: int) -> int:
        if value > self.max_natural:
            raise NaturalOverflow(value, self.max_natural)
        return value

    def aeval(self, ctx: Context, t: Term) -> int:
        """Evaluate an arithmetic term under ``ctx``.

        Args:
            ctx: Variable bindings
            t: Term to evaluate

        Returns:
            The natural number the term denotes
        """
        # Succ chains can be long (numerals); walk them instead of recursing.
        offset = 0
        while isinstance(t, Succ):
            offset += 1
            t = t.term
        if isinstance(t, Var):
            if t.name not in ctx:
                raise UnboundVariable(t.name)
            value = ctx[t.name]
        elif isinstance(t, Zero):
            value = 0
        elif isinstance(t, Plus):
            value = self._checked(self.aeval(ctx, t.left) + self.aeval(ctx, t.right))
        elif isinstance(t, Mult):
            value = self._checked(self.aeval(ctx, t.left) * self.aeval(ctx, t.right))
        else:
            raise TypeError(f"Not a term: {t!r}")
        return self._checked(value + offset)

    def beval(self, ctx: Context, f: Formula) -> bool:
        """Evaluate a formula under ``ctx``; quantifiers are erased."""
        if isinstance(f, Eq):
            return self.aeval(ctx, f.left) == self.aeval(ctx, f.right)
        if isinstance(f, (ForAll, Exists)):
            return self.beval(ctx, f.body)
        if isinstance(f, Prop):
            if f.name not in ctx:
                raise UnboundVariable(f.name)
            return ctx[f.name] != 0
        if isinstance(f, Not):
            return not self.beval(ctx, f.body)
        if isinstance(f, And):
            left = self.beval(ctx, f.left)
            right = self.beval(ctx, f.right)
            return left and right
        if isinstance(f, Or):
            left = self.beval(ctx, f.left)
            right = self.beval(ctx, f.right)
            return left or right
        if isinstance(f, Imp):
            left = self.beval(ctx, f.left)
            right = self.beval(ctx, f.right)
            return (not left) or right
        raise TypeError(f"Not a formula: {f!r}")

    def exec_command(self, ctx: Context, c: Command, budget: Optional[int] = None) -> Dict[str, int]:
        """Run ``c`` starting from ``ctx`` and return the final context.

        Args:
            ctx: Initial bindings; never mutated
            c: Command to run
            budget: Optional limit on command-node evaluations

        Returns:
            A fresh dictionary holding the final bindings
        """
        state = dict(ctx)
        self._run(state, c, _Budget(budget))
        return state

    def _run(self, state: Dict[str, int], c: Command, budget: _Budget) -> None:
        budget.tick()
        # walk the right spine of a sequence; every Seq node still costs a step
        while isinstance(c, Seq):
            self._run(state, c.first, budget)
            c = c.second
            budget.tick()
        if isinstance(c, Skip):
            return
        if isinstance(c, Assign):
            state[c.var] = self.aeval(state, c.expr)
        elif isinstance(c, IfElse):
            self._run(state, c.then_branch if self.beval(state, c.cond) else c.else_branch, budget)
        elif isinstance(c, While):
            # each further iteration re-evaluates the While node
            while self.beval(state, c.cond):
                self._run(state, c.body, budget)
                budget.tick()
        elif isinstance(c, Assert):
            if not self.beval(state, c.pre):
                raise PreconditionFailed()
            self._run(state, c.body, budget)
            if not self.beval(state, c.post):
                raise PostconditionFailed()
        else:
            raise TypeError(f"Not a command: {c!r}")


_default = Evaluator()


def aeval(ctx: Context, t: Term) -> int:
    return _default.aeval(ctx, t)


def beval(ctx: Context, f: Formula) -> bool:
    return _default.beval(ctx, f)


def exec_command(ctx: Context, c: Command, budget: Optional[int] = None) -> Dict[str, int]:
    return _default.exec_command(ctx, c, budget)
