"""Propositional rules: the only producers of propositional theorems."""

from ..syntax import And, Formula, Imp, Not, Or, Pos, Theorem, formula_eq
from ..syntax.evidence import _mint_theorem
from .rules import Direction, Mode, Rule, equivalence_rule, is_equivalence_rule, refuse


def fantasy(hypothesis: Formula, derive: Rule) -> Theorem:
    """Fantasy rule: if ``hypothesis`` were a theorem, ``derive`` would yield ``y``.

    The hypothesis need not be proven. Theorems from the enclosing scope stay
    usable inside ``derive`` (carry-over). The hypothesis theorem handed to
    ``derive`` is valid only inside that call; a copy kept afterwards is an
    unproven assumption, not a theorem.

    Args:
        hypothesis: Assumed formula
        derive: Callback receiving the hypothesis as a theorem

    Returns:
        Theorem ``hypothesis → y``
    """
    conclusion = derive(_mint_theorem(hypothesis))
    if not isinstance(conclusion, Theorem):
        raise refuse("ruleFantasy", "the fantasy body did not produce a theorem")
    return _mint_theorem(Imp(hypothesis, conclusion.formula))


def detach(x: Theorem, imp: Theorem) -> Theorem:
    """Rule of detachment: from x and x→y conclude y."""
    f = imp.formula
    if isinstance(f, Imp) and formula_eq(f.left, x.formula):
        return _mint_theorem(f.right)
    raise refuse("ruleDetachment", "antecedent does not match")


def join(x: Theorem, y: Theorem) -> Theorem:
    """Joining rule. Never fails."""
    return _mint_theorem(And(x.formula, y.formula))


def sep(x: Theorem, side: Pos) -> Theorem:
    """Sep rule: take one conjunct of a conjunction."""
    rule = "ruleSepL" if side is Pos.LEFT else "ruleSepR"
    f = x.formula
    if not isinstance(f, And):
        raise refuse(rule, "not a conjunction")
    return _mint_theorem(f.left if side is Pos.LEFT else f.right)


@equivalence_rule
def double_tilde(x: Theorem, direction: Direction) -> Theorem:
    f = x.formula
    if direction is Direction.INTRO:
        return _mint_theorem(Not(Not(f)))
    if direction is Direction.ELIM:
        if isinstance(f, Not) and isinstance(f.body, Not):
            return _mint_theorem(f.body.body)
        raise refuse("ruleDoubleTildeElim", "no double negation")
    raise refuse("ruleDoubleTilde", f"direction must be intro or elim, got {direction.value}")


@equivalence_rule
def contrapositive(x: Theorem, direction: Direction) -> Theorem:
    """x→y and ¬y→¬x are interchangeable."""
    f = x.formula
    if direction is Direction.FORWARD and isinstance(f, Imp):
        return _mint_theorem(Imp(Not(f.right), Not(f.left)))
    if (direction is Direction.BACKWARD and isinstance(f, Imp)
            and isinstance(f.left, Not) and isinstance(f.right, Not)):
        return _mint_theorem(Imp(f.right.body, f.left.body))
    raise refuse("ruleContra")


@equivalence_rule
def de_morgan(x: Theorem, direction: Direction) -> Theorem:
    """¬x∧¬y and ¬(x∨y) are interchangeable."""
    f = x.formula
    if (direction is Direction.FORWARD and isinstance(f, And)
            and isinstance(f.left, Not) and isinstance(f.right, Not)):
        return _mint_theorem(Not(Or(f.left.body, f.right.body)))
    if direction is Direction.BACKWARD and isinstance(f, Not) and isinstance(f.body, Or):
        return _mint_theorem(And(Not(f.body.left), Not(f.body.right)))
    raise refuse("ruleDeMorgan")


@equivalence_rule
def switcheroo(x: Theorem, direction: Direction) -> Theorem:
    """x∨y and ¬x→y are interchangeable."""
    f = x.formula
    if direction is Direction.FORWARD and isinstance(f, Or):
        return _mint_theorem(Imp(Not(f.left), f.right))
    if direction is Direction.BACKWARD and isinstance(f, Imp) and isinstance(f.left, Not):
        return _mint_theorem(Or(f.left.body, f.right))
    raise refuse("ruleSwitcheroo")


def _descend(path, rule: Rule, f: Formula) -> Formula:
    # Not consumes a step whatever its value; an exhausted path or an atom
    # stops the descent and the rule fires on the current node.
    if path:
        step, rest = path[0], path[1:]
        if isinstance(f, Not):
            return Not(_descend(rest, rule, f.body))
        if isinstance(f, (And, Or, Imp)):
            if step is Pos.LEFT:
                return type(f)(_descend(rest, rule, f.left), f.right)
            return type(f)(f.left, _descend(rest, rule, f.right))
    return rule(_mint_theorem(f)).formula


def apply_prop_rule(path, rule: Rule, x: Theorem, mode: Mode = Mode.DEFAULT) -> Theorem:
    """Apply ``rule`` to the subformula of ``x`` addressed by ``path``.

    In DEFAULT mode any rule is accepted, which can yield non-tautologies
    (for instance sep under an implication). STRICT mode only admits
    equivalence rules.

    Args:
        path: Sequence of Pos steps
        rule: Rule applied to the addressed subformula
        x: Theorem to rewrite
        mode: Checking mode

    Returns:
        Theorem with the subformula replaced
    """
    if mode is Mode.STRICT and not is_equivalence_rule(rule):
        raise refuse("applyPropRule", "strict mode admits only equivalence rules")
    return _mint_theorem(_descend(tuple(path), rule, x.formula))
