"""Hypothesis strategies for random syntax trees."""

import hypothesis.strategies as st

from hoarekit.kernel import fantasy
from hoarekit.syntax import (
    And, Assert, Assign, Eq, Exists, ForAll, IfElse, Imp, Mult, Not, Or, Plus, Prop, Seq, Skip,
    Succ, Var, While, Zero,
)

NAMES = st.sampled_from(["A", "B", "C", "D", "x", "Foo", "n1"])
LETTERS = st.sampled_from(["A", "B", "C", "D"])

terms = st.recursive(
    st.one_of(st.builds(Var, NAMES), st.just(Zero())),
    lambda children: st.one_of(
        st.builds(Succ, children),
        st.builds(Plus, children, children),
        st.builds(Mult, children, children),
    ),
    max_leaves=8,
)

formulas = st.recursive(
    st.one_of(st.builds(Eq, terms, terms), st.builds(Prop, NAMES)),
    lambda children: st.one_of(
        st.builds(Not, children),
        st.builds(And, children, children),
        st.builds(Or, children, children),
        st.builds(Imp, children, children),
        st.builds(ForAll, NAMES, children),
        st.builds(Exists, NAMES, children),
    ),
    max_leaves=6,
)

# Sentence letters and connectives only, for truth-table checks.
prop_formulas = st.recursive(
    st.builds(Prop, LETTERS),
    lambda children: st.one_of(
        st.builds(Not, children),
        st.builds(And, children, children),
        st.builds(Or, children, children),
        st.builds(Imp, children, children),
    ),
    max_leaves=5,
)

commands = st.recursive(
    st.one_of(st.just(Skip()), st.builds(Assign, NAMES, terms)),
    lambda children: st.one_of(
        st.builds(Seq, children, children),
        st.builds(IfElse, formulas, children, children),
        st.builds(While, formulas, children),
        st.builds(Assert, formulas, children, formulas),
    ),
    max_leaves=6,
)

# Over the two variables A and B only, so a context binding both is complete.
small_terms = st.recursive(
    st.one_of(st.builds(Var, st.sampled_from(["A", "B"])), st.just(Zero())),
    lambda children: st.one_of(st.builds(Succ, children), st.builds(Plus, children, children)),
    max_leaves=4,
)

small_conditions = st.recursive(
    st.builds(Eq, small_terms, small_terms),
    lambda children: st.one_of(
        st.builds(Not, children),
        st.builds(And, children, children),
        st.builds(Or, children, children),
    ),
    max_leaves=3,
)

small_commands = st.recursive(
    st.one_of(st.just(Skip()), st.builds(Assign, st.sampled_from(["A", "B"]), small_terms)),
    lambda children: st.one_of(
        st.builds(Seq, children, children),
        st.builds(IfElse, small_conditions, children, children),
        st.builds(While, small_conditions, children),
    ),
    max_leaves=5,
)

contexts = st.fixed_dictionaries({
    "A": st.integers(min_value=0, max_value=20),
    "B": st.integers(min_value=0, max_value=20),
})


def hypothetically(formula, body):
    """Run ``body`` on ``formula`` assumed as a theorem and return its result.

    The result rests on the assumption; tests use it to get theorems of
    arbitrary shape without deriving them.
    """
    results = []

    def derive(hypothesis):
        results.append(body(hypothesis))
        return hypothesis

    fantasy(formula, derive)
    return results[0]
