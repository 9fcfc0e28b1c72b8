"""Number-theory rules, substitution, variable analysis and Peano's axioms."""

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Tuple

from ..syntax import (
    And, Eq, Exists, ForAll, Formula, Imp, Mult, Not, Or, Plus, Pos,
    Succ, Term, Theorem, Var, Zero, formula_eq,
)
from ..syntax.evidence import _mint_theorem
from .rules import Direction, Mode, Rule, equivalence_rule, is_equivalence_rule, refuse


TermRule = Callable[[Term], Term]


@dataclass(frozen=True)
class OccurrenceRef:
    """Address of one term occurrence.

    ``fol_path`` leads through the formula to an Eq atom, ``side`` picks its
    left or right operand and ``term_path`` descends into that term.
    """
    side: Pos
    fol_path: Tuple[Pos, ...] = ()
    term_path: Tuple[Pos, ...] = ()


def _ordered(names: Iterable[str]) -> Tuple[str, ...]:
    return tuple(dict.fromkeys(names))


# Substitution

def subst_term(t: Term, pattern: Term, replacement: Term) -> Term:
    """Replace every subterm equal to ``pattern``; inserted material is not re-scanned."""
    # successor chains are peeled in a loop; numerals nest as deep as their value
    depth = 0
    while t != pattern and isinstance(t, Succ):
        depth += 1
        t = t.term
    if t == pattern:
        result = replacement
    elif isinstance(t, (Plus, Mult)):
        result = type(t)(subst_term(t.left, pattern, replacement),
                         subst_term(t.right, pattern, replacement))
    else:
        result = t
    for _ in range(depth):
        result = Succ(result)
    return result


def subst_formula(f: Formula, pattern: Term, replacement: Term) -> Formula:
    """Apply subst_term in every equation; binders themselves are left alone."""
    if isinstance(f, Eq):
        return Eq(subst_term(f.left, pattern, replacement),
                  subst_term(f.right, pattern, replacement))
    if isinstance(f, (ForAll, Exists)):
        return type(f)(f.var, subst_formula(f.body, pattern, replacement))
    if isinstance(f, Not):
        return Not(subst_formula(f.body, pattern, replacement))
    if isinstance(f, (And, Or, Imp)):
        return type(f)(subst_formula(f.left, pattern, replacement),
                       subst_formula(f.right, pattern, replacement))
    return f


# Variable analysis

def _term_occurrences(t: Term):
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            yield node.name
        elif isinstance(node, Succ):
            stack.append(node.term)
        elif isinstance(node, (Plus, Mult)):
            stack.extend((node.right, node.left))


def vars_of_term(t: Term) -> Tuple[str, ...]:
    """Variables of ``t`` in order of first occurrence."""
    return _ordered(_term_occurrences(t))


def bound_vars(f: Formula) -> Tuple[str, ...]:
    """Variables of the leading quantifier chain only.

    Quantifiers below a connective are not collected; the specification and
    generalization side-conditions depend on exactly this traversal.
    """
    names = []
    while isinstance(f, (ForAll, Exists)):
        names.append(f.var)
        f = f.body
    return _ordered(names)


def _free_occurrences(f: Formula, bound: frozenset):
    if isinstance(f, Eq):
        for name in _term_occurrences(f.left):
            if name not in bound:
                yield name
        for name in _term_occurrences(f.right):
            if name not in bound:
                yield name
    elif isinstance(f, (ForAll, Exists)):
        yield from _free_occurrences(f.body, bound | {f.var})
    elif isinstance(f, Not):
        yield from _free_occurrences(f.body, bound)
    elif isinstance(f, (And, Or, Imp)):
        yield from _free_occurrences(f.left, bound)
        yield from _free_occurrences(f.right, bound)


def free_vars(f: Formula) -> Tuple[str, ...]:
    """Variables with at least one occurrence outside a binder for them."""
    return _ordered(_free_occurrences(f, frozenset()))


# Quantifier rules

def spec(e: Term, x: Theorem) -> Theorem:
    """Rule of specification: from ∀u:body conclude body[u := e]."""
    f = x.formula
    if not isinstance(f, ForAll):
        raise refuse("ruleSpec", "not a universal formula")
    clash = [v for v in bound_vars(f.body) if v in vars_of_term(e)]
    if clash:
        raise refuse("ruleSpec", f"term mentions quantified variable {clash[0]}")
    return _mint_theorem(subst_formula(f.body, Var(f.var), e))


def generalize(u: str, premises: Sequence[Theorem], x: Theorem) -> Theorem:
    """Rule of generalization; ``premises`` are the open fantasy hypotheses."""
    if u in bound_vars(x.formula):
        raise refuse("ruleGeneralize", f"{u} is already quantified")
    for premise in premises:
        if u in free_vars(premise.formula):
            raise refuse("ruleGeneralize", f"{u} occurs free in a fantasy premise")
    return _mint_theorem(ForAll(u, x.formula))


@equivalence_rule
def interchange(x: Theorem, direction: Direction) -> Theorem:
    """∀u:¬ and ¬∃u: are interchangeable."""
    f = x.formula
    if direction is Direction.FORWARD and isinstance(f, ForAll) and isinstance(f.body, Not):
        return _mint_theorem(Not(Exists(f.var, f.body.body)))
    if direction is Direction.BACKWARD and isinstance(f, Not) and isinstance(f.body, Exists):
        return _mint_theorem(ForAll(f.body.var, Not(f.body.body)))
    raise refuse("ruleInterchange")


# Occurrence addressing

def _eq_at(fol_path: Sequence[Pos], f: Formula) -> Eq:
    for step in fol_path:
        if isinstance(f, (Not, ForAll, Exists)):
            f = f.body
        elif isinstance(f, (And, Or, Imp)):
            f = f.left if step is Pos.LEFT else f.right
        else:
            raise refuse("getTerm", "formula path runs past an atom")
    if not isinstance(f, Eq):
        raise refuse("getTerm", "formula path does not end at an equation")
    return f


def _term_at(term_path: Sequence[Pos], t: Term) -> Term:
    for step in term_path:
        if isinstance(t, Succ):
            t = t.term
        elif isinstance(t, (Plus, Mult)):
            t = t.left if step is Pos.LEFT else t.right
        else:
            raise refuse("getTerm", "term path runs past a leaf")
    return t


def get_term(ref: OccurrenceRef, f: Formula) -> Term:
    eq = _eq_at(ref.fol_path, f)
    return _term_at(ref.term_path, eq.left if ref.side is Pos.LEFT else eq.right)


def _rewrite_term(term_path: Sequence[Pos], term_rule: TermRule, t: Term) -> Term:
    if not term_path:
        return term_rule(t)
    step, rest = term_path[0], term_path[1:]
    if isinstance(t, Succ):
        return Succ(_rewrite_term(rest, term_rule, t.term))
    if isinstance(t, (Plus, Mult)):
        if step is Pos.LEFT:
            return type(t)(_rewrite_term(rest, term_rule, t.left), t.right)
        return type(t)(t.left, _rewrite_term(rest, term_rule, t.right))
    raise refuse("getTerm", "term path runs past a leaf")


def _rewrite_occurrence(ref: OccurrenceRef, term_rule: TermRule, f: Formula,
                        fol_path: Sequence[Pos]) -> Formula:
    if fol_path:
        step, rest = fol_path[0], fol_path[1:]
        if isinstance(f, Not):
            return Not(_rewrite_occurrence(ref, term_rule, f.body, rest))
        if isinstance(f, (ForAll, Exists)):
            return type(f)(f.var, _rewrite_occurrence(ref, term_rule, f.body, rest))
        if isinstance(f, (And, Or, Imp)):
            if step is Pos.LEFT:
                return type(f)(_rewrite_occurrence(ref, term_rule, f.left, rest), f.right)
            return type(f)(f.left, _rewrite_occurrence(ref, term_rule, f.right, rest))
        raise refuse("getTerm", "formula path runs past an atom")
    if not isinstance(f, Eq):
        raise refuse("getTerm", "formula path does not end at an equation")
    if ref.side is Pos.LEFT:
        return Eq(_rewrite_term(ref.term_path, term_rule, f.left), f.right)
    return Eq(f.left, _rewrite_term(ref.term_path, term_rule, f.right))


def apply_fol_arith_rule(ref: OccurrenceRef, term_rule: TermRule, x: Theorem) -> Theorem:
    """Replace the addressed term by ``term_rule``'s output.

    This is a kernel-internal utility (the rule of existence is built on it);
    it is not itself a sound inference rule.
    """
    return _mint_theorem(_rewrite_occurrence(ref, term_rule, x.formula, ref.fol_path))


def existence(u: str, occurrences: Sequence[OccurrenceRef], x: Theorem) -> Theorem:
    """Rule of existence: abstract the addressed occurrences of one term into ∃u."""
    f = x.formula
    if u in bound_vars(f):
        raise refuse("ruleExistence", f"{u} is already quantified")
    if not occurrences:
        return _mint_theorem(Exists(u, f))
    terms = [get_term(ref, f) for ref in occurrences]
    if any(t != terms[0] for t in terms[1:]):
        raise refuse("ruleExistence", "addressed terms differ")
    if u in vars_of_term(terms[0]):
        raise refuse("ruleExistence", f"{u} occurs in the replaced term")
    if u in free_vars(f):
        raise refuse("ruleExistence", f"{u} already occurs free in the theorem")
    current = x
    for ref in occurrences:
        current = apply_fol_arith_rule(ref, lambda _: Var(u), current)
    return _mint_theorem(Exists(u, current.formula))


# Equality rules

def symmetry(x: Theorem) -> Theorem:
    """Rule of symmetry: from r=s conclude s=r.

    Args:
        x: Theorem whose formula is an equation

    Returns:
        The equation with its sides swapped
    """
    f = x.formula
    if not isinstance(f, Eq):
        raise refuse("ruleSymmetry", "not an equation")
    return _mint_theorem(Eq(f.right, f.left))


def transitivity(x: Theorem, y: Theorem) -> Theorem:
    """Rule of transitivity: from r=s and s=t conclude r=t.

    Args:
        x: Equation r=s
        y: Equation s=t; its left side must equal the right side of ``x``

    Returns:
        Theorem r=t
    """
    f, g = x.formula, y.formula
    if not (isinstance(f, Eq) and isinstance(g, Eq)):
        raise refuse("ruleTransitivity", "both premises must be equations")
    if f.right != g.left:
        raise refuse("ruleTransitivity", "middle terms differ")
    return _mint_theorem(Eq(f.left, g.right))


def add_s(x: Theorem) -> Theorem:
    """Add S: from r=s conclude Sr=Ss.

    Args:
        x: Theorem whose formula is an equation

    Returns:
        The equation with a successor on both sides
    """
    f = x.formula
    if not isinstance(f, Eq):
        raise refuse("ruleAddS", "not an equation")
    return _mint_theorem(Eq(Succ(f.left), Succ(f.right)))


def drop_s(x: Theorem) -> Theorem:
    """Drop S: from Sr=Ss conclude r=s.

    Args:
        x: Equation whose sides both start with a successor

    Returns:
        The equation with one successor removed from each side
    """
    f = x.formula
    if not (isinstance(f, Eq) and isinstance(f.left, Succ) and isinstance(f.right, Succ)):
        raise refuse("ruleDropS", "both sides must start with S")
    return _mint_theorem(Eq(f.left.term, f.right.term))


def induction(base: Theorem, step: Theorem) -> Theorem:
    """From X[0] and ∀u:(X[u]→X[Su]) conclude ∀u:X[u]."""
    f = step.formula
    if not (isinstance(f, ForAll) and isinstance(f.body, Imp)):
        raise refuse("ruleInduction", "step must have the shape ∀u:(X→Y)")
    u = Var(f.var)
    hypothesis, conclusion = f.body.left, f.body.right
    if not formula_eq(subst_formula(hypothesis, u, Zero()), base.formula):
        raise refuse("ruleInduction", "base case does not match")
    if not formula_eq(subst_formula(hypothesis, u, Succ(u)), conclusion):
        raise refuse("ruleInduction", "step conclusion does not match")
    return _mint_theorem(ForAll(f.var, hypothesis))


# Peano's axioms

def _axiom_body(n: int, names: Sequence[str]) -> Formula:
    a = Var(names[0])
    if n == 1:
        return ForAll(a.name, Not(Eq(Succ(a), Zero())))
    if n == 2:
        return ForAll(a.name, Eq(Plus(a, Zero()), a))
    if n == 4:
        return ForAll(a.name, Eq(Mult(a, Zero()), Zero()))
    b = Var(names[1])
    if n == 3:
        return ForAll(a.name, ForAll(b.name, Eq(Plus(a, Succ(b)), Succ(Plus(a, b)))))
    return ForAll(a.name, ForAll(b.name, Eq(Mult(a, Succ(b)), Plus(Mult(a, b), a))))


AXIOM_ARITY = {1: 1, 2: 1, 3: 2, 4: 1, 5: 2}


def peano_axiom(n: int, *args: Term) -> Theorem:
    """Axiom ``n`` (1..5) instantiated on the given variables.

    Args:
        n: Axiom number
        args: One variable term (axioms 1, 2, 4) or two distinct ones (3, 5)

    Returns:
        The closed axiom as a theorem
    """
    if n not in AXIOM_ARITY:
        raise refuse("axiom", f"there is no axiom {n}")
    rule = f"axiom{n}"
    if len(args) != AXIOM_ARITY[n]:
        raise refuse(rule, f"expects {AXIOM_ARITY[n]} variable(s), got {len(args)}")
    if not all(isinstance(arg, Var) for arg in args):
        raise refuse(rule, "arguments must be variables")
    names = [arg.name for arg in args]
    if len(set(names)) != len(names):
        raise refuse(rule, "variables must be distinct")
    return _mint_theorem(_axiom_body(n, names))


# Path-directed application

def _descend(path, rule: Rule, f: Formula, crossed: Tuple[str, ...], guarded: frozenset) -> Formula:
    if path:
        step, rest = path[0], path[1:]
        if isinstance(f, Not):
            return Not(_descend(rest, rule, f.body, crossed, guarded))
        if isinstance(f, (ForAll, Exists)):
            return type(f)(f.var, _descend(rest, rule, f.body, crossed + (f.var,), guarded))
        if isinstance(f, (And, Or, Imp)):
            if step is Pos.LEFT:
                return type(f)(_descend(rest, rule, f.left, crossed, guarded), f.right)
            return type(f)(f.left, _descend(rest, rule, f.right, crossed, guarded))
    result = rule(_mint_theorem(f)).formula
    changed = set(free_vars(f)) ^ set(free_vars(result))
    clash = sorted(changed & (set(crossed) | guarded))
    if clash:
        raise refuse("applyFOLRule", f"rule changes the free occurrences of {clash[0]}")
    return result


def apply_fol_rule(path, rule: Rule, premises: Sequence[Theorem], x: Theorem,
                   mode: Mode = Mode.DEFAULT) -> Theorem:
    """Apply ``rule`` to the subformula of ``x`` addressed by ``path``.

    The rule may not change which occurrences of a variable are free when
    that variable is bound by a quantifier crossed on the way down, or free
    in one of ``premises``.

    ``rule`` receives the addressed subformula as a theorem. That value is
    only meaningful for the rewrite; keeping it outside this call asserts a
    formula nothing proved.

    Args:
        path: Sequence of Pos steps; quantifiers and negations consume one step
        rule: Rule applied to the addressed subformula
        premises: Open fantasy hypotheses the rewrite must respect
        x: Theorem to rewrite
        mode: Checking mode

    Returns:
        Theorem with the subformula replaced
    """
    if mode is Mode.STRICT and not is_equivalence_rule(rule):
        raise refuse("applyFOLRule", "strict mode admits only equivalence rules")
    guarded = frozenset(name for premise in premises for name in free_vars(premise.formula))
    return _mint_theorem(_descend(tuple(path), rule, x.formula, (), guarded))
