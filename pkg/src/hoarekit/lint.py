"""Warnings for constructs the kernels accept but that rarely mean what they say.

Substitution in the kernels is syntactic: it reaches under inner binders and
does not rename them. Evaluation erases quantifiers, so a quantified variable
in a program condition is read from the context like any other.
"""

from dataclasses import dataclass
from typing import Iterable, List, Set

from .kernel.fol import vars_of_term
from .syntax import (
    And, Assert, Assign, Command, Exists, ForAll, Formula, IfElse, Imp, Not, Or, Seq,
    Term, While,
)
from .utils import get_logger

logger = get_logger('lint')

SHADOWED_SUBSTITUTION = "shadowed-substitution"
CAPTURED_SUBSTITUTION = "captured-substitution"
QUANTIFIED_READ = "quantified-read"


@dataclass(frozen=True)
class Finding:
    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


def binders(f: Formula) -> Set[str]:
    """Every variable bound by some quantifier inside ``f``."""
    names = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, (ForAll, Exists)):
            names.add(node.var)
            stack.append(node.body)
        elif isinstance(node, Not):
            stack.append(node.body)
        elif isinstance(node, (And, Or, Imp)):
            stack.extend((node.left, node.right))
    return names


def _report(findings: List[Finding]) -> List[Finding]:
    for finding in findings:
        logger.warning("%s", finding)
    return findings


def check_substitution(rule: str, f: Formula, var: str, replacement: Term) -> List[Finding]:
    """Lint the substitution of ``replacement`` for ``var`` throughout ``f``.

    Args:
        rule: Name of the rule performing the substitution, used in messages
        f: Formula the substitution runs over
        var: Variable being replaced
        replacement: Term inserted in its place

    Returns:
        Findings, already logged at WARNING
    """
    inner = binders(f)
    findings = []
    if var in inner:
        findings.append(Finding(
            SHADOWED_SUBSTITUTION,
            f"{rule} replaces {var} under an inner quantifier that rebinds it"))
    for name in vars_of_term(replacement):
        if name in inner:
            findings.append(Finding(
                CAPTURED_SUBSTITUTION,
                f"{rule} inserts {name} where an inner quantifier captures it"))
    return _report(findings)


def _conditions(c: Command) -> Iterable[Formula]:
    stack = [c]
    while stack:
        node = stack.pop()
        if isinstance(node, Seq):
            stack.extend((node.second, node.first))
        elif isinstance(node, IfElse):
            yield node.cond
            stack.extend((node.else_branch, node.then_branch))
        elif isinstance(node, While):
            yield node.cond
            stack.append(node.body)
        elif isinstance(node, Assert):
            yield node.pre
            stack.append(node.body)
            yield node.post


def assigned_vars(c: Command) -> Set[str]:
    names = set()
    stack = [c]
    while stack:
        node = stack.pop()
        if isinstance(node, Assign):
            names.add(node.var)
        elif isinstance(node, Seq):
            stack.extend((node.first, node.second))
        elif isinstance(node, IfElse):
            stack.extend((node.then_branch, node.else_branch))
        elif isinstance(node, (While, Assert)):
            stack.append(node.body)
    return names


def check_program(c: Command, supplied: Iterable[str] = ()) -> List[Finding]:
    """Flag conditions that quantify a variable the context will supply.

    Args:
        c: Program to inspect
        supplied: Variables bound by the initial context

    Returns:
        Findings, already logged at WARNING
    """
    known = assigned_vars(c) | set(supplied)
    findings = []
    seen = set()
    for cond in _conditions(c):
        for name in sorted(binders(cond) & known):
            if (cond, name) in seen:
                continue
            seen.add((cond, name))
            findings.append(Finding(
                QUANTIFIED_READ,
                f"quantified variable {name} is evaluated with its value from the context"))
    return _report(findings)
