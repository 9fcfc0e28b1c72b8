"""Recursive-descent parser for terms, formulas and programs."""

from typing import Iterable, List, Optional

from ..errors import ParseError
from ..syntax import (
    And, Assert, Assign, Command, Eq, Exists, ForAll, Formula, IfElse, Imp, Mult, Not, Or,
    Plus, Prop, Seq, Skip, Succ, Term, Var, While, check_var_name, numeral,
)
from .lexer import EOF, IDENT, NUMBER, SUCC, Token, tokenize


def sequence(commands: List[Command]) -> Command:
    """Right-nested sequence of ``commands``; an empty list is skip."""
    if not commands:
        return Skip()
    result = commands[-1]
    for command in reversed(commands[:-1]):
        result = Seq(command, result)
    return result


class Parser:
    """Token cursor plus the expression and command grammars.

    The script grammar builds on this class, so every production reports
    errors the same way: the offending token's position and the set of
    token kinds that would have been accepted there.
    """

    def __init__(self, source: str):
        self.tokens: List[Token] = tokenize(source)
        self.pos = 0

    # Cursor

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def at(self, *kinds: str) -> bool:
        return self.peek().kind in kinds

    def advance(self) -> Token:
        tok = self.peek()
        if tok.kind != EOF:
            self.pos += 1
        return tok

    def accept(self, kind: str) -> Optional[Token]:
        if self.at(kind):
            return self.advance()
        return None

    def expect(self, kind: str) -> Token:
        if not self.at(kind):
            raise self.error(f"Unexpected {self.peek().describe()}", {kind})
        return self.advance()

    def error(self, message: str, expected: Iterable[str] = ()) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.line, tok.column, frozenset(expected))

    def expect_end(self) -> None:
        if not self.at(EOF):
            raise self.error(f"Unexpected {self.peek().describe()}", {EOF})

    def var_name(self) -> str:
        tok = self.expect(IDENT)
        try:
            return check_var_name(tok.text)
        except ValueError as e:
            raise ParseError(str(e), tok.line, tok.column)

    # Terms

    def term(self) -> Term:
        left = self.product()
        while self.accept("+"):
            left = Plus(left, self.product())
        return left

    def product(self) -> Term:
        left = self.prefix()
        while self.accept("*"):
            left = Mult(left, self.prefix())
        return left

    def prefix(self) -> Term:
        count = 0
        while self.accept(SUCC):
            count += 1
        result = self.atom()
        for _ in range(count):
            result = Succ(result)
        return result

    def atom(self) -> Term:
        tok = self.peek()
        if tok.kind == NUMBER:
            self.advance()
            return numeral(int(tok.text))
        if tok.kind == IDENT:
            return Var(self.var_name())
        if self.accept("("):
            inner = self.term()
            self.expect(")")
            return inner
        raise self.error(f"Unexpected {tok.describe()}", {NUMBER, IDENT, SUCC, "("})

    # Formulas

    def formula(self) -> Formula:
        return self.implication()

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.accept("->"):
            return Imp(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.accept("|"):
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.unary()
        while self.accept("&"):
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        if self.accept("!"):
            return Not(self.unary())
        if self.at("forall", "exists"):
            quantifier = ForAll if self.advance().kind == "forall" else Exists
            name = self.var_name()
            self.expect(":")
            return quantifier(name, self.unary())
        return self.primary()

    def primary(self) -> Formula:
        start = self.pos
        opening = self.peek().kind
        try:
            left = self.term()
            if self.accept("="):
                return Eq(left, self.term())
            if isinstance(left, Var) and self.pos == start + 1:
                return Prop(left.name)
            raise self.error(f"Unexpected {self.peek().describe()}", {"="})
        except ParseError as term_error:
            if opening not in ("(", "<"):
                raise
            # Not an equation: read a parenthesized (or angle-bracketed) formula.
            self.pos = start + 1
            try:
                inner = self.formula()
                self.expect(")" if opening == "(" else ">")
                return inner
            except ParseError as group_error:
                furthest = max(term_error, group_error, key=lambda e: (e.line, e.column))
                raise furthest from None

    # Programs

    def commands(self, closing: str) -> Command:
        items = []
        while not self.at(closing):
            if self.at(EOF):
                raise self.error("Unexpected end of input", {closing})
            items.append(self.command())
        return sequence(items)

    def block(self) -> Command:
        self.expect("{")
        body = self.commands("}")
        self.expect("}")
        return body

    def condition(self) -> Formula:
        self.expect("(")
        cond = self.formula()
        self.expect(")")
        return cond

    def command(self) -> Command:
        if self.accept(";"):
            return Skip()
        if self.accept("skip"):
            self.expect(";")
            return Skip()
        if self.accept("if"):
            cond = self.condition()
            self.accept("then")
            then_branch = self.block()
            self.expect("else")
            else_branch = self.block()
            self.accept(";")
            return IfElse(cond, then_branch, else_branch)
        if self.accept("while"):
            cond = self.condition()
            self.accept("do")
            body = self.block()
            self.accept(";")
            return While(cond, body)
        if self.accept("assert"):
            self.expect("{")
            pre = self.formula()
            self.expect("}")
            body = self.block()
            self.expect("{")
            post = self.formula()
            self.expect("}")
            self.accept(";")
            return Assert(pre, body, post)
        if self.at("{"):
            return self.block()
        if self.at(IDENT):
            name = self.var_name()
            self.expect(":=")
            expr = self.term()
            self.expect(";")
            return Assign(name, expr)
        raise self.error(f"Unexpected {self.peek().describe()}",
                         {";", "skip", "if", "while", "assert", "{", IDENT})


def parse_term(text: str) -> Term:
    parser = Parser(text)
    result = parser.term()
    parser.expect_end()
    return result


def parse_formula(text: str) -> Formula:
    """Parse one formula, accepting both ASCII and Unicode connectives."""
    parser = Parser(text)
    result = parser.formula()
    parser.expect_end()
    return result


def parse_program(text: str) -> Command:
    parser = Parser(text)
    return parser.commands(EOF)
