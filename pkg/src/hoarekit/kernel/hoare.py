"""Hoare rules: the only producers of HoareTriple values."""

from ..syntax import (
    And, Assign, Formula, HoareTriple, IfElse, Imp, Not, Seq, Skip, Term, Theorem, Var, While, formula_eq,
)
from ..syntax.evidence import _mint_triple
from .fol import subst_formula
from .rules import refuse


def h_skip(p: Formula) -> HoareTriple:
    """{P} skip {P}; ``p`` is any well-formed formula, not necessarily proven."""
    return _mint_triple(p, Skip(), p)


def h_assign(v: str, e: Term, q: Formula) -> HoareTriple:
    """{Q[E/v]} v := E {Q}."""
    return _mint_triple(subst_formula(q, Var(v), e), Assign(v, e), q)


def h_consequence(strengthen: Theorem, t: HoareTriple, weaken: Theorem) -> HoareTriple:
    """Strengthen the precondition and weaken the postcondition of ``t``.

    Args:
        strengthen: Theorem P1→P2 where P2 is the precondition of ``t``
        t: Triple {P2} c {Q2}
        weaken: Theorem Q2→Q1 where Q2 is the postcondition of ``t``

    Returns:
        Triple {P1} c {Q1}
    """
    pre, post = strengthen.formula, weaken.formula
    if not (isinstance(pre, Imp) and isinstance(post, Imp)):
        raise refuse("hoareConsequence", "both side theorems must be implications")
    if not formula_eq(pre.right, t.pre):
        raise refuse("hoareConsequence", "implication does not end in the precondition")
    if not formula_eq(post.left, t.post):
        raise refuse("hoareConsequence", "implication does not start from the postcondition")
    return _mint_triple(pre.left, t.cmd, post.right)


def h_sequence(t1: HoareTriple, t2: HoareTriple) -> HoareTriple:
    """From {P} S {Q} and {Q} T {R} conclude {P} S; T {R}.

    Args:
        t1: Triple for the first command
        t2: Triple for the second command; its precondition must equal the
            postcondition of ``t1``

    Returns:
        Triple for the sequence of both commands
    """
    if not formula_eq(t1.post, t2.pre):
        raise refuse("hoareSequence", "postcondition of the first triple differs from the precondition of the second")
    return _mint_triple(t1.pre, Seq(t1.cmd, t2.cmd), t2.post)


def h_conditional(t_then: HoareTriple, t_else: HoareTriple) -> HoareTriple:
    """From {B∧P} S {Q} and {¬B∧P} T {Q} conclude {P} if B then S else T {Q}."""
    p1, p2 = t_then.pre, t_else.pre
    if not (isinstance(p1, And) and isinstance(p2, And) and isinstance(p2.left, Not)):
        raise refuse("hoareConditional", "preconditions must be B∧P and ¬B∧P")
    if not (formula_eq(p1.left, p2.left.body) and formula_eq(p1.right, p2.right)):
        raise refuse("hoareConditional", "branch preconditions disagree")
    if not formula_eq(t_then.post, t_else.post):
        raise refuse("hoareConditional", "branch postconditions disagree")
    return _mint_triple(p1.right, IfElse(p1.left, t_then.cmd, t_else.cmd), t_then.post)


def h_while(t_body: HoareTriple) -> HoareTriple:
    """From {B∧P} S {P} conclude {P} while B do S {¬B∧P}. Partial correctness only."""
    pre = t_body.pre
    if not isinstance(pre, And):
        raise refuse("hoareWhile", "body precondition must be B∧P")
    if not formula_eq(pre.right, t_body.post):
        raise refuse("hoareWhile", "invariant is not preserved by the body triple")
    return _mint_triple(pre.right, While(pre.left, t_body.cmd), And(Not(pre.left), pre.right))
