"""Elaborates parsed scripts into kernel calls and collects a per-item report."""

from dataclasses import dataclass, field
from enum import Enum
from functools import partial
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ..config import config
from ..errors import KernelError, ScriptError
from ..kernel import (
    Direction, Mode, RuleChain, ShapeDirected, add_s, apply_fol_rule, apply_prop_rule,
    contrapositive, de_morgan, detach, double_tilde, drop_s, existence, fantasy, generalize,
    h_assign, h_conditional, h_consequence, h_sequence, h_skip, h_while, identity, induction,
    interchange, join, peano_axiom, sep, spec, switcheroo, symmetry, transitivity,
)
from ..lint import Finding, check_program, check_substitution
from ..syntax import (
    Command, ForAll, HoareTriple, Imp, Pos, Succ, Theorem, Var, check_var_name, formula_eq, numeral,
)
from ..utils import get_logger
from .printer import Style, StyleLike, print_formula, print_program, render
from .script import (
    Bind, CallArg, ChainArg, ExpectedTriple, FantasyBind, FormulaArg, ListArg, NameArg, NumberArg,
    OccArg, ProgramDef, ProofDef, RuleCall, ScriptItem, TermArg, TripleDef,
)

PASS_MARK = "✓"
FAIL_MARK = "✗"


class Kind(Enum):
    THM = "theorem"
    TRIPLE = "triple"
    FORMULA = "formula"
    TERM = "term"
    VAR = "variable"
    PATH = "path"
    OCCS = "occurrence list"
    RULE = "rule"
    INT = "number"


@dataclass(frozen=True)
class _Env:
    mode: Mode
    premises: Tuple[Theorem, ...] = ()

    def opened(self, hypothesis: Theorem) -> "_Env":
        return _Env(self.mode, self.premises + (hypothesis,))


@dataclass(frozen=True)
class RuleEntry:
    """Script-level signature of one kernel rule.

    Theorem-to-theorem rules provide ``bind``: given every argument except the
    final theorem it returns the rule as a callable, so the same entry serves
    full calls and rule-valued arguments (``apply_fol([L], spec(`SC`), x)``).
    Other rules provide ``run`` over the full argument list.
    """
    params: Tuple[Kind, ...]
    bind: Optional[Callable[[Sequence[Any], _Env], Callable[[Theorem], Theorem]]] = None
    run: Optional[Callable[[Sequence[Any], _Env], Any]] = None
    optional: int = 0

    def accepts(self, count: int) -> bool:
        return len(self.params) - self.optional <= count <= len(self.params)

    def apply(self, values: Sequence[Any], env: _Env) -> Any:
        if self.bind is not None:
            return self.bind(values[:-1], env)(values[-1])
        return self.run(values, env)


def _theorem_rule(params, bind) -> RuleEntry:
    return RuleEntry(tuple(params), bind=bind)


def _fixed(rule) -> Callable:
    return lambda values, env: rule


def _interchange_entries(name: str, rule) -> Dict[str, RuleEntry]:
    return {
        name: _theorem_rule([Kind.THM], _fixed(ShapeDirected(rule))),
        f"{name}_fwd": _theorem_rule([Kind.THM], _fixed(partial(rule, direction=Direction.FORWARD))),
        f"{name}_back": _theorem_rule([Kind.THM], _fixed(partial(rule, direction=Direction.BACKWARD))),
    }


def _axiom(n: int) -> Callable:
    return lambda values, env: peano_axiom(n, *(Var(name) for name in values))


def _build_registry() -> Dict[str, RuleEntry]:
    T = Kind
    registry = {
        "identity": _theorem_rule([T.THM], _fixed(identity)),
        "join": _theorem_rule([T.THM, T.THM], lambda v, env: partial(join, v[0])),
        "sep_l": _theorem_rule([T.THM], _fixed(partial(sep, side=Pos.LEFT))),
        "sep_r": _theorem_rule([T.THM], _fixed(partial(sep, side=Pos.RIGHT))),
        "detach": _theorem_rule([T.THM, T.THM], lambda v, env: partial(detach, v[0])),
        "double_tilde_intro": _theorem_rule([T.THM], _fixed(partial(double_tilde, direction=Direction.INTRO))),
        "double_tilde_elim": _theorem_rule([T.THM], _fixed(partial(double_tilde, direction=Direction.ELIM))),
        "apply_prop": _theorem_rule([T.PATH, T.RULE, T.THM],
                                    lambda v, env: partial(apply_prop_rule, v[0], v[1], mode=env.mode)),
        "spec": _theorem_rule([T.TERM, T.THM], lambda v, env: partial(spec, v[0])),
        "generalize": _theorem_rule([T.VAR, T.THM], lambda v, env: partial(generalize, v[0], env.premises)),
        "existence": _theorem_rule([T.VAR, T.OCCS, T.THM], lambda v, env: partial(existence, v[0], v[1])),
        "symmetry": _theorem_rule([T.THM], _fixed(symmetry)),
        "transitivity": _theorem_rule([T.THM, T.THM], lambda v, env: partial(transitivity, v[0])),
        "add_s": _theorem_rule([T.THM], _fixed(add_s)),
        "drop_s": _theorem_rule([T.THM], _fixed(drop_s)),
        "induction": _theorem_rule([T.THM, T.THM], lambda v, env: partial(induction, v[0])),
        "apply_fol": _theorem_rule([T.PATH, T.RULE, T.THM],
                                   lambda v, env: partial(apply_fol_rule, v[0], v[1], env.premises, mode=env.mode)),
        "axiom": RuleEntry((T.INT, T.VAR, T.VAR), optional=1,
                           run=lambda v, env: peano_axiom(v[0], *(Var(name) for name in v[1:]))),
        "h_skip": RuleEntry((T.FORMULA,), run=lambda v, env: h_skip(v[0])),
        "h_assign": RuleEntry((T.VAR, T.TERM, T.FORMULA), run=lambda v, env: h_assign(*v)),
        "h_consequence": RuleEntry((T.THM, T.TRIPLE, T.THM), run=lambda v, env: h_consequence(*v)),
        "h_sequence": RuleEntry((T.TRIPLE, T.TRIPLE), run=lambda v, env: h_sequence(*v)),
        "h_conditional": RuleEntry((T.TRIPLE, T.TRIPLE), run=lambda v, env: h_conditional(*v)),
        "h_while": RuleEntry((T.TRIPLE,), run=lambda v, env: h_while(*v)),
    }
    for n, arity in ((1, 1), (2, 1), (3, 2), (4, 1), (5, 2)):
        registry[f"axiom{n}"] = RuleEntry((T.VAR,) * arity, run=_axiom(n))
    registry.update(_interchange_entries("contra", contrapositive))
    registry.update(_interchange_entries("de_morgan", de_morgan))
    registry.update(_interchange_entries("switcheroo", switcheroo))
    registry.update(_interchange_entries("interchange", interchange))
    return registry


RULES: Dict[str, RuleEntry] = _build_registry()


class _Scope:
    """Name bindings of one block; lookups fall back to the enclosing block."""

    def __init__(self, parent: Optional["_Scope"] = None, bindings: Optional[Dict[str, Any]] = None):
        self.parent = parent
        self.bindings: Dict[str, Any] = dict(bindings or {})

    def define(self, name: str, value: Any) -> None:
        self.bindings[name] = value

    def lookup(self, name: str) -> Any:
        scope = self
        while scope is not None:
            if name in scope.bindings:
                return scope.bindings[name]
            scope = scope.parent
        raise KeyError(name)


@dataclass(frozen=True)
class ItemResult:
    """Outcome of checking one script item."""
    name: str
    kind: str
    value: Any = None
    error: Optional[str] = None
    findings: Tuple[Finding, ...] = ()

    @property
    def ok(self) -> bool:
        return self.error is None

    def line(self, style: StyleLike = Style.UNICODE) -> Optional[str]:
        """Report line; programs have none."""
        if not self.ok:
            return f"{FAIL_MARK} {self.name}: {self.error}"
        if self.kind == "program":
            return None
        return f"{render(self.value, style)} {PASS_MARK}"


@dataclass(frozen=True)
class CheckReport:
    items: Tuple[ItemResult, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(item.ok for item in self.items)

    @property
    def failures(self) -> List[ItemResult]:
        return [item for item in self.items if not item.ok]

    def result(self, name: str) -> Any:
        for item in self.items:
            if item.name == name:
                return item.value
        raise KeyError(name)

    def lines(self, style: StyleLike = Style.UNICODE) -> List[str]:
        return [line for line in (item.line(style) for item in self.items) if line is not None]


class ScriptChecker:
    """Checks script items in order, threading earlier results into later ones."""

    def __init__(self, mode=None):
        """Initialize the checker.

        Args:
            mode: DEFAULT or STRICT; defaults to ``checker.mode`` from the configuration
        """
        self.logger = get_logger('checker')
        self.mode = Mode.parse(mode if mode is not None else config.get('checker.mode', 'default'))

    def check(self, items: Sequence[ScriptItem]) -> CheckReport:
        """Check every item and return the report.

        Args:
            items: Parsed script items

        Returns:
            One ItemResult per item, in input order
        """
        results = []
        known: Dict[str, Any] = {}
        for item in items:
            findings: List[Finding] = []
            if isinstance(item, ProgramDef):
                findings.extend(check_program(item.command))
                known[item.name] = item.command
                results.append(ItemResult(item.name, "program", item.command, None, tuple(findings)))
                continue
            kind = "proof" if isinstance(item, ProofDef) else "triple"
            try:
                value = self._check_item(item, known, findings)
            except ScriptError as e:
                self.logger.info("%s %s failed: %s", kind, item.name, e)
                results.append(ItemResult(item.name, kind, None, str(e), tuple(findings)))
                continue
            self.logger.debug("%s %s checked", kind, item.name)
            known[item.name] = value
            results.append(ItemResult(item.name, kind, value, None, tuple(findings)))
        return CheckReport(tuple(results))

    def _check_item(self, item, known: Dict[str, Any], findings: List[Finding]):
        scope = _Scope(_Scope(bindings=known))
        self._run(item.statements, scope, _Env(self.mode), findings)
        value = self._lookup(scope, item.result, item)

        if isinstance(item, ProofDef):
            if not isinstance(value, Theorem):
                raise ScriptError(f"{item.result} is not a theorem", item.line, item.column)
            if item.expected is not None and not formula_eq(value.formula, item.expected):
                raise ScriptError(
                    f"qed mismatch: expected {print_formula(item.expected)}, got {print_formula(value.formula)}",
                    item.line, item.column)
            return value

        if not isinstance(value, HoareTriple):
            raise ScriptError(f"{item.result} is not a Hoare triple", item.line, item.column)
        expected = item.expected
        if isinstance(expected, ExpectedTriple):
            program = known.get(expected.program)
            if not isinstance(program, Command):
                raise ScriptError(f"Unknown program {expected.program!r}", item.line, item.column)
            if not (formula_eq(value.pre, expected.pre) and value.cmd == program
                    and formula_eq(value.post, expected.post)):
                raise ScriptError(
                    f"qed mismatch: expected {{{print_formula(expected.pre)}}} {print_program(program)} "
                    f"{{{print_formula(expected.post)}}}, got {render(value)}",
                    item.line, item.column)
        return value

    def _lookup(self, scope: _Scope, name: str, at) -> Any:
        try:
            return scope.lookup(name)
        except KeyError:
            raise ScriptError(f"Unknown identifier {name!r}", at.line, at.column) from None

    def _run(self, statements, scope: _Scope, env: _Env, findings: List[Finding]) -> None:
        for statement in statements:
            if isinstance(statement, Bind):
                scope.define(statement.target, self._call(statement.call, scope, env, findings))
            elif isinstance(statement, FantasyBind):
                scope.define(statement.target, self._fantasy(statement, scope, env, findings))

    def _fantasy(self, statement: FantasyBind, scope: _Scope, env: _Env, findings: List[Finding]) -> Theorem:
        def derive(premise: Theorem) -> Theorem:
            inner = _Scope(scope, {statement.premise: premise})
            self._run(statement.body, inner, env.opened(premise), findings)
            result = self._lookup(inner, statement.result.name, statement.result)
            if not isinstance(result, Theorem):
                raise ScriptError(f"{statement.result.name} is not a theorem",
                                  statement.result.line, statement.result.column)
            return result

        try:
            return fantasy(statement.hypothesis, derive)
        except KernelError as e:
            raise ScriptError(str(e), statement.line, statement.column) from e

    def _entry(self, call: RuleCall) -> RuleEntry:
        entry = RULES.get(call.name)
        if entry is None:
            raise ScriptError(f"Unknown rule {call.name!r}", call.line, call.column)
        return entry

    def _call(self, call: RuleCall, scope: _Scope, env: _Env, findings: List[Finding]) -> Any:
        entry = self._entry(call)
        if not entry.accepts(len(call.args)):
            raise ScriptError(
                f"{call.name} expects {len(entry.params)} argument(s), got {len(call.args)}",
                call.line, call.column)
        values = [self._coerce(arg, kind, call, scope, env, findings)
                  for arg, kind in zip(call.args, entry.params)]
        findings.extend(self._lint(call.name, values))
        try:
            return entry.apply(values, env)
        except KernelError as e:
            raise ScriptError(str(e), call.line, call.column) from e

    def _rule(self, call: RuleCall, scope: _Scope, env: _Env, findings: List[Finding]):
        entry = self._entry(call)
        if entry.bind is None:
            raise ScriptError(f"{call.name} cannot be used as a rule argument", call.line, call.column)
        if len(call.args) != len(entry.params) - 1:
            raise ScriptError(
                f"{call.name} as a rule argument takes {len(entry.params) - 1} argument(s), got {len(call.args)}",
                call.line, call.column)
        values = [self._coerce(arg, kind, call, scope, env, findings)
                  for arg, kind in zip(call.args, entry.params)]
        return entry.bind(values, env)

    def _coerce(self, arg, kind: Kind, call: RuleCall, scope: _Scope, env: _Env,
                findings: List[Finding]) -> Any:
        def mismatch() -> ScriptError:
            return ScriptError(f"{call.name} expects a {kind.value} argument", call.line, call.column)

        if kind in (Kind.THM, Kind.TRIPLE):
            wanted = Theorem if kind is Kind.THM else HoareTriple
            if isinstance(arg, NameArg):
                value = self._lookup(scope, arg.name, call)
            elif isinstance(arg, CallArg):
                value = self._call(arg.call, scope, env, findings)
            else:
                raise mismatch()
            if not isinstance(value, wanted):
                raise mismatch()
            return value
        if kind is Kind.FORMULA and isinstance(arg, FormulaArg):
            return arg.formula
        if kind is Kind.TERM:
            if isinstance(arg, TermArg):
                return arg.term
            if isinstance(arg, NumberArg):
                return numeral(arg.value)
            if isinstance(arg, NameArg):
                return Var(self._var_name(arg.name, call))
        if kind is Kind.VAR:
            if isinstance(arg, NameArg):
                return self._var_name(arg.name, call)
            if isinstance(arg, TermArg) and isinstance(arg.term, Var):
                return arg.term.name
        if kind is Kind.PATH and isinstance(arg, ListArg):
            if all(isinstance(item, NameArg) and item.name in ("L", "R") for item in arg.items):
                return tuple(Pos(item.name) for item in arg.items)
        if kind is Kind.OCCS and isinstance(arg, ListArg):
            if all(isinstance(item, OccArg) for item in arg.items):
                return tuple(item.ref for item in arg.items)
        if kind is Kind.RULE:
            if isinstance(arg, NameArg):
                return self._rule(RuleCall(arg.name, (), call.line, call.column), scope, env, findings)
            if isinstance(arg, CallArg):
                return self._rule(arg.call, scope, env, findings)
            if isinstance(arg, ChainArg):
                return RuleChain(*(self._rule(stage, scope, env, findings) for stage in arg.calls))
        if kind is Kind.INT and isinstance(arg, NumberArg):
            return arg.value
        raise mismatch()

    def _var_name(self, name: str, call: RuleCall) -> str:
        try:
            return check_var_name(name)
        except ValueError as e:
            raise ScriptError(str(e), call.line, call.column) from None

    def _lint(self, rule: str, values: Sequence[Any]) -> List[Finding]:
        if rule == "spec" and isinstance(values[1].formula, ForAll):
            quantified = values[1].formula
            return check_substitution(rule, quantified.body, quantified.var, values[0])
        if rule == "h_assign":
            var, expr, post = values
            return check_substitution(rule, post, var, expr)
        if rule == "induction":
            step = values[1].formula
            if isinstance(step, ForAll) and isinstance(step.body, Imp):
                return check_substitution(rule, step.body.left, step.var, Succ(Var(step.var)))
        return []


def check_script(items: Sequence[ScriptItem], mode=Mode.DEFAULT) -> CheckReport:
    """Check parsed script items in DEFAULT or STRICT mode."""
    return ScriptChecker(mode).check(items)
