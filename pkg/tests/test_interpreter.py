import pytest
from hypothesis import given, settings

from hoarekit.errors import (
    BudgetExhausted, NaturalOverflow, PostconditionFailed, PreconditionFailed, RunError,
    UnboundVariable,
)
from hoarekit.interpreter import Evaluator, aeval, beval, exec_command
from hoarekit.surface import parse_formula, parse_program, parse_term
from hoarekit.surface.parser import sequence
from hoarekit.syntax import (
    And, Assert, Assign, Eq, Exists, ForAll, IfElse, Imp, Mult, Not, Or, Plus, Prop, Seq, Skip,
    Succ, Var, While, Zero, numeral,
)

from .strategies import contexts, small_commands, small_conditions, small_terms

A, B = Var("A"), Var("B")

COUNT_TO_B = parse_program("A := 0; while (!(A = B)) { A := S(A); }")


@pytest.mark.parametrize("text, ctx, value", [
    ("0", {}, 0),
    ("SSS0", {}, 3),
    ("A+S0", {"A": 4}, 5),
    ("A*SB", {"A": 3, "B": 2}, 9),
    ("S(A*A)+B", {"A": 3, "B": 1}, 11),
    ("12", {}, 12),
])
def test_aeval(text, ctx, value):
    assert aeval(ctx, parse_term(text)) == value


def test_aeval_unbound_variable():
    with pytest.raises(UnboundVariable) as e:
        aeval({"A": 1}, Plus(A, B))
    assert str(e.value) == "Element not found: B"


def test_aeval_long_numeral():
    assert aeval({}, numeral(5000)) == 5000


@pytest.mark.parametrize("text, ctx, value", [
    ("A = SS0", {"A": 2}, True),
    ("!(A = B)", {"A": 1, "B": 1}, False),
    ("A = 0 | B = 0", {"A": 1, "B": 0}, True),
    ("A = 0 & B = 0", {"A": 1, "B": 0}, False),
    ("A = 0 -> B = 0", {"A": 1, "B": 7}, True),
    ("A = 0 -> B = 0", {"A": 0, "B": 7}, False),
    ("exists C: (A + C = B)", {"A": 1, "B": 3, "C": 2}, True),
    ("forall C: (C = 0)", {"C": 4}, False),
])
def test_beval(text, ctx, value):
    assert beval(ctx, parse_formula(text)) is value


def test_beval_sentence_letters_read_the_context():
    assert beval({"A": 2}, Prop("A")) is True
    assert beval({"A": 0}, Prop("A")) is False
    with pytest.raises(UnboundVariable):
        beval({}, Prop("A"))


def test_beval_quantified_variable_must_be_bound():
    with pytest.raises(UnboundVariable):
        beval({"A": 0}, ForAll("C", Eq(Var("C"), A)))


def test_count_to_b():
    assert exec_command({"B": 3}, COUNT_TO_B) == {"A": 3, "B": 3}


def test_count_to_b_step_count():
    assert exec_command({"B": 3}, COUNT_TO_B, 9) == {"A": 3, "B": 3}
    with pytest.raises(BudgetExhausted):
        exec_command({"B": 3}, COUNT_TO_B, 8)


def test_long_sequence_runs_and_counts_every_node():
    program = sequence([Assign("A", Succ(A))] * 3000)
    # 3000 assignments plus 2999 Seq nodes
    assert exec_command({"A": 0}, program, 5999) == {"A": 3000}
    with pytest.raises(BudgetExhausted):
        exec_command({"A": 0}, program, 5998)


def test_input_context_is_not_mutated():
    ctx = {"B": 2}
    exec_command(ctx, COUNT_TO_B)
    assert ctx == {"B": 2}


def test_assert_passes():
    program = Assert(Eq(numeral(5), B), COUNT_TO_B, Eq(B, A))
    assert exec_command({"B": 5}, program) == {"A": 5, "B": 5}


def test_assert_precondition_fails():
    program = Assert(Eq(numeral(4), B), COUNT_TO_B, Eq(numeral(5), A))
    with pytest.raises(PreconditionFailed) as e:
        exec_command({"B": 5}, program)
    assert str(e.value) == "Assert: Pre-condition does not match!"


def test_assert_postcondition_fails():
    program = Assert(Eq(numeral(4), B), COUNT_TO_B, Eq(numeral(5), A))
    with pytest.raises(PostconditionFailed) as e:
        exec_command({"B": 4}, program)
    assert str(e.value) == "Assert: Post-condition does not match!"


def test_loop_exhausts_budget():
    spin = While(Eq(Zero(), Zero()), Skip())
    with pytest.raises(BudgetExhausted) as e:
        exec_command({}, spin, 100)
    assert e.value.steps == 100


def test_overflow():
    evaluator = Evaluator(max_natural=10)
    assert evaluator.aeval({"A": 5}, Plus(A, A)) == 10
    with pytest.raises(NaturalOverflow):
        evaluator.aeval({"A": 5}, Succ(Plus(A, A)))
    with pytest.raises(NaturalOverflow):
        evaluator.exec_command({"A": 4}, Assign("A", Mult(A, A)))


def test_assignment_to_unbound_reads():
    with pytest.raises(UnboundVariable):
        exec_command({}, Assign("A", Succ(B)))


def test_conditional_and_sequence():
    program = Seq(IfElse(Eq(A, Zero()), Assign("A", Succ(A)), Skip()), Assign("B", A))
    assert exec_command({"A": 0}, program) == {"A": 1, "B": 1}
    assert exec_command({"A": 4}, program) == {"A": 4, "B": 4}


def test_implication_and_disjunction_are_classical():
    for ctx in ({"A": 0}, {"A": 1}):
        assert beval(ctx, Or(Eq(A, Zero()), Not(Eq(A, Zero()))))
        assert beval(ctx, Imp(And(Eq(A, Zero()), Not(Eq(A, Zero()))), Eq(A, numeral(9))))
    assert beval({"A": 0}, Exists("A", Eq(A, Zero())))


@settings(max_examples=500, deadline=None)
@given(contexts, small_terms, small_terms)
def test_aeval_is_a_homomorphism(ctx, s, t):
    assert aeval(ctx, Plus(s, t)) == aeval(ctx, s) + aeval(ctx, t)
    assert aeval(ctx, Mult(s, t)) == aeval(ctx, s) * aeval(ctx, t)
    assert aeval(ctx, Succ(s)) == aeval(ctx, s) + 1


@settings(max_examples=500, deadline=None)
@given(contexts, small_commands)
def test_skip_is_neutral(ctx, c):
    try:
        plain = exec_command(ctx, c, 2000)
    except RunError:
        return
    assert exec_command(ctx, Seq(Skip(), c), 4000) == plain
    assert exec_command(ctx, Seq(c, Skip()), 4000) == plain


@settings(max_examples=500, deadline=None)
@given(contexts, small_conditions, small_commands)
def test_while_unrolls(ctx, b, c):
    loop = While(b, c)
    try:
        direct = exec_command(ctx, loop, 2000)
    except RunError:
        return
    unrolled = IfElse(b, Seq(c, loop), Skip())
    assert exec_command(ctx, unrolled, 4000) == direct


@settings(max_examples=500, deadline=None)
@given(contexts, small_commands)
def test_more_budget_never_changes_the_result(ctx, c):
    try:
        result = exec_command(ctx, c, 500)
    except RunError:
        return
    assert exec_command(ctx, c, 5000) == result
    assert exec_command(ctx, c) == result
