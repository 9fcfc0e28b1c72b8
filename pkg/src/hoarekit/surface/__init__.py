"""Surface language: lexer, parsers, printer and the script checker."""

from .lexer import Token, tokenize
from .parser import Parser, parse_formula, parse_program, parse_term
from .printer import (
    Style, print_formula, print_program, print_term, print_theorem, print_triple, render,
)
from .script import (
    Bind, ExpectedTriple, FantasyBind, ProgramDef, ProofDef, Return, RuleCall, ScriptItem,
    TripleDef, format_script, parse_script,
)
from .checker import RULES, CheckReport, ItemResult, ScriptChecker, check_script

__all__ = [
    'Token', 'tokenize',
    'Parser', 'parse_formula', 'parse_program', 'parse_term',
    'Style', 'print_formula', 'print_program', 'print_term', 'print_theorem', 'print_triple',
    'render',
    'Bind', 'ExpectedTriple', 'FantasyBind', 'ProgramDef', 'ProofDef', 'Return', 'RuleCall',
    'ScriptItem', 'TripleDef', 'format_script', 'parse_script',
    'RULES', 'CheckReport', 'ItemResult', 'ScriptChecker', 'check_script',
]
