from functools import partial

import pytest

from hoarekit.errors import KernelError
from hoarekit.kernel import (
    fantasy, h_assign, h_conditional, h_consequence, h_sequence, h_skip, h_while, identity,
    join, peano_axiom, sep, spec,
)
from hoarekit.syntax import (
    And, Assign, Eq, IfElse, Not, Plus, Pos, Seq, Skip, Succ, Var, While, Zero, numeral,
)

A, B, C = Var("A"), Var("B"), Var("C")
TRUE = Eq(Zero(), Zero())


def test_skip():
    assert str(h_skip(Eq(A, numeral(3)))) == "{A=SSS0} ; {A=SSS0}"


def test_skip_accepts_unproven_formulas():
    t = h_skip(Eq(Succ(Zero()), Zero()))
    assert t.pre == t.post == Eq(Succ(Zero()), Zero())
    assert t.cmd == Skip()


def test_assignment():
    t = h_assign("A", Plus(B, Succ(Zero())), And(Eq(A, numeral(2)), TRUE))
    assert str(t) == "{B+S0=SS0∧0=0} A := B+S0; {A=SS0∧0=0}"


def test_assignment_substitutes_every_occurrence():
    t = h_assign("A", Succ(A), Eq(Plus(A, A), B))
    assert t.pre == Eq(Plus(Succ(A), Succ(A)), B)
    assert t.cmd == Assign("A", Succ(A))


def test_consequence():
    t = h_assign("A", Plus(B, Succ(Zero())), And(Eq(A, numeral(2)), TRUE))
    pre = fantasy(t.pre, identity)
    post = fantasy(t.post, partial(sep, side=Pos.LEFT))
    assert str(h_consequence(pre, t, post)) == "{B+S0=SS0∧0=0} A := B+S0; {A=SS0}"


def test_consequence_refusals():
    t = h_skip(TRUE)
    good = fantasy(TRUE, identity)
    other = fantasy(Eq(A, A), identity)
    with pytest.raises(KernelError) as e:
        h_consequence(other, t, good)
    assert e.value.rule == "hoareConsequence"
    with pytest.raises(KernelError):
        h_consequence(good, t, other)
    with pytest.raises(KernelError):
        h_consequence(spec(Zero(), peano_axiom(2, A)), t, good)


def test_sequence():
    first = h_assign("B", Zero(), And(Eq(B, Zero()), Eq(A, A)))
    second = h_assign("C", A, And(Eq(B, Zero()), Eq(C, A)))
    t = h_sequence(first, second)
    assert str(t) == "{0=0∧A=A} B := 0; C := A; {B=0∧C=A}"
    assert t.cmd == Seq(Assign("B", Zero()), Assign("C", A))


def test_sequence_refuses_mismatched_middle():
    with pytest.raises(KernelError) as e:
        h_sequence(h_skip(TRUE), h_skip(Eq(A, A)))
    assert e.value.rule == "hoareSequence"


def test_conditional():
    goal = And(Not(Eq(A, Zero())), TRUE)
    then_branch = h_assign("A", Succ(A), goal)

    def strengthen(pq):
        return join(spec(A, peano_axiom(1, A)), sep(pq, Pos.RIGHT))

    pre = fantasy(And(Eq(A, Zero()), TRUE), strengthen)
    then_triple = h_consequence(pre, then_branch, fantasy(goal, identity))
    t = h_conditional(then_triple, h_skip(goal))
    assert str(t) == "{0=0} if (A=0) then {A := SA;} else {;}; {¬A=0∧0=0}"
    assert isinstance(t.cmd, IfElse)


@pytest.mark.parametrize("then_pre, else_pre", [
    (TRUE, And(Not(TRUE), TRUE)),
    (And(TRUE, TRUE), And(TRUE, TRUE)),
    (And(Eq(A, Zero()), TRUE), And(Not(Eq(B, Zero())), TRUE)),
    (And(Eq(A, Zero()), TRUE), And(Not(Eq(A, Zero())), Eq(A, A))),
])
def test_conditional_refusals(then_pre, else_pre):
    then_triple = h_skip(then_pre)
    with pytest.raises(KernelError) as e:
        h_conditional(then_triple, h_skip(else_pre))
    assert e.value.rule == "hoareConditional"


def test_conditional_refuses_different_postconditions():
    then_triple = h_skip(And(Eq(A, Zero()), TRUE))
    else_triple = h_skip(And(Not(Eq(A, Zero())), TRUE))
    with pytest.raises(KernelError):
        h_conditional(then_triple, else_triple)


def test_while_proves_anything_about_a_loop_that_never_stops():
    body = h_consequence(fantasy(And(TRUE, TRUE), partial(sep, side=Pos.RIGHT)), h_skip(TRUE),
                         fantasy(TRUE, identity))
    t = h_while(body)
    assert str(t) == "{0=0} while (0=0) do {;}; {¬0=0∧0=0}"
    assert t.cmd == While(TRUE, Skip())


def test_while_refusals():
    with pytest.raises(KernelError) as e:
        h_while(h_skip(TRUE))
    assert e.value.rule == "hoareWhile"
    with pytest.raises(KernelError):
        h_while(h_assign("A", Succ(A), And(TRUE, Eq(A, A))))
