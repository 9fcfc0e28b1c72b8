"""Trusted kernels: propositional, number-theory and Hoare rules."""

from .rules import Direction, Mode, Rule, RuleChain, ShapeDirected, chain, identity, is_equivalence_rule
from .prop import (
    fantasy, detach, join, sep, double_tilde, contrapositive, de_morgan, switcheroo,
    apply_prop_rule,
)
from .fol import (
    OccurrenceRef, subst_term, subst_formula, vars_of_term, bound_vars, free_vars,
    spec, generalize, interchange, existence, symmetry, transitivity, add_s, drop_s,
    induction, peano_axiom, apply_fol_rule, get_term, apply_fol_arith_rule, AXIOM_ARITY,
)
from .hoare import h_skip, h_assign, h_consequence, h_sequence, h_conditional, h_while

__all__ = [
    'Direction', 'Mode', 'Rule', 'RuleChain', 'ShapeDirected', 'chain', 'identity', 'is_equivalence_rule',
    'fantasy', 'detach', 'join', 'sep', 'double_tilde', 'contrapositive', 'de_morgan',
    'switcheroo', 'apply_prop_rule',
    'OccurrenceRef', 'subst_term', 'subst_formula', 'vars_of_term', 'bound_vars',
    'free_vars', 'spec', 'generalize', 'interchange', 'existence', 'symmetry',
    'transitivity', 'add_s', 'drop_s', 'induction', 'peano_axiom', 'apply_fol_rule',
    'get_term', 'apply_fol_arith_rule', 'AXIOM_ARITY',
    'h_skip', 'h_assign', 'h_consequence', 'h_sequence', 'h_conditional', 'h_while',
]
