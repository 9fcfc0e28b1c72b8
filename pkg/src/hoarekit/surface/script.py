"""Proof and triple scripts: syntax tree, parser and formatter.

A script is a sequence of items::

    program countToB { A := 0; while (!(A = B)) { A := S(A); } }

    proof and_comm {
        f = fantasy {A & B} as pq {
            l = sep_r(pq)
            r = sep_l(pq)
            j = join(l, r)
            return j
        }
        qed f : {A & B -> B & A}
    }

Each statement binds the result of one rule call; later items may refer to
earlier ones by name.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from ..errors import ParseError, ScriptError
from ..kernel.fol import OccurrenceRef
from ..syntax import Command, Formula, Pos, Term
from .lexer import EOF, IDENT, NUMBER
from .parser import Parser
from .printer import Style, StyleLike, print_formula, print_program, print_term


# Arguments

@dataclass(frozen=True)
class FormulaArg:
    formula: Formula


@dataclass(frozen=True)
class TermArg:
    term: Term


@dataclass(frozen=True)
class NameArg:
    """Bare identifier: a proof id, a variable, a rule name or a path step."""
    name: str


@dataclass(frozen=True)
class NumberArg:
    value: int


@dataclass(frozen=True)
class ListArg:
    items: Tuple["Argument", ...]


@dataclass(frozen=True)
class OccArg:
    ref: OccurrenceRef


@dataclass(frozen=True)
class RuleCall:
    name: str
    args: Tuple["Argument", ...] = ()
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class CallArg:
    call: RuleCall


@dataclass(frozen=True)
class ChainArg:
    calls: Tuple[RuleCall, ...]


Argument = Union[FormulaArg, TermArg, NameArg, NumberArg, ListArg, OccArg, CallArg, ChainArg]


# Statements

@dataclass(frozen=True)
class Bind:
    target: str
    call: RuleCall
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Return:
    name: str
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class FantasyBind:
    """``target = fantasy {hypothesis} as premise { body return id }``."""
    target: str
    hypothesis: Formula
    premise: str
    body: Tuple["Statement", ...]
    result: Return
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


Statement = Union[Bind, FantasyBind]


# Items

@dataclass(frozen=True)
class ProgramDef:
    name: str
    command: Command
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ProofDef:
    name: str
    statements: Tuple[Statement, ...]
    result: str
    expected: Optional[Formula] = None
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ExpectedTriple:
    pre: Formula
    program: str
    post: Formula


@dataclass(frozen=True)
class TripleDef:
    name: str
    statements: Tuple[Statement, ...]
    result: str
    expected: Optional[ExpectedTriple] = None
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


ScriptItem = Union[ProgramDef, ProofDef, TripleDef]


class ScriptParser(Parser):
    """Adds the item, statement and argument productions to the base grammar."""

    def script(self) -> List[ScriptItem]:
        items: List[ScriptItem] = []
        seen = {}
        while not self.at(EOF):
            item = self.item()
            if item.name in seen:
                raise ScriptError(f"Duplicate item name {item.name!r} (first defined on line {seen[item.name]})",
                                  item.line, item.column)
            seen[item.name] = item.line
            items.append(item)
        return items

    def item(self) -> ScriptItem:
        tok = self.peek()
        if self.accept("program"):
            name = self.expect(IDENT).text
            command = self.block()
            return ProgramDef(name, command, tok.line, tok.column)
        if self.accept("proof"):
            name = self.expect(IDENT).text
            self.expect("{")
            statements = self.statements("qed")
            self.expect("qed")
            result = self.expect(IDENT).text
            expected = None
            if self.accept(":"):
                expected = self.braced_formula()
            self.accept(";")
            self.expect("}")
            return ProofDef(name, statements, result, expected, tok.line, tok.column)
        if self.accept("triple"):
            name = self.expect(IDENT).text
            self.expect("{")
            statements = self.statements("qed")
            self.expect("qed")
            result = self.expect(IDENT).text
            expected = None
            if self.accept(":"):
                pre = self.braced_formula()
                program = self.expect(IDENT).text
                post = self.braced_formula()
                expected = ExpectedTriple(pre, program, post)
            self.accept(";")
            self.expect("}")
            return TripleDef(name, statements, result, expected, tok.line, tok.column)
        raise self.error(f"Unexpected {tok.describe()}", {"program", "proof", "triple"})

    def braced_formula(self) -> Formula:
        self.expect("{")
        f = self.formula()
        self.expect("}")
        return f

    def statements(self, terminator: str) -> Tuple[Statement, ...]:
        body = []
        while not self.at(terminator):
            if self.accept(";"):
                continue
            body.append(self.statement())
        return tuple(body)

    def statement(self) -> Statement:
        tok = self.peek()
        if tok.kind != IDENT:
            raise self.error(f"Unexpected {tok.describe()}", {IDENT, "qed", "return"})
        target = self.advance().text
        self.expect("=")
        if self.accept("fantasy"):
            hypothesis = self.braced_formula()
            self.expect("as")
            premise = self.expect(IDENT).text
            self.expect("{")
            body = self.statements("return")
            ret = self.expect("return")
            result = Return(self.expect(IDENT).text, ret.line, ret.column)
            self.accept(";")
            self.expect("}")
            return FantasyBind(target, hypothesis, premise, body, result, tok.line, tok.column)
        return Bind(target, self.call(), tok.line, tok.column)

    def call(self) -> RuleCall:
        tok = self.expect(IDENT)
        self.expect("(")
        return RuleCall(tok.text, self.arguments(")"), tok.line, tok.column)

    def arguments(self, closing: str) -> Tuple[Argument, ...]:
        args = []
        if not self.at(closing):
            args.append(self.argument())
            while self.accept(","):
                args.append(self.argument())
        self.expect(closing)
        return tuple(args)

    def argument(self) -> Argument:
        tok = self.peek()
        if tok.kind == "{":
            return FormulaArg(self.braced_formula())
        if self.accept("`"):
            term = self.term()
            self.expect("`")
            return TermArg(term)
        if tok.kind == NUMBER:
            self.advance()
            return NumberArg(int(tok.text))
        if self.accept("["):
            return ListArg(self.arguments("]"))
        if self.accept("("):
            return OccArg(self.occurrence())
        if tok.kind == IDENT:
            return self.rule_reference()
        raise self.error(f"Unexpected {tok.describe()}", {"{", "`", "[", "(", NUMBER, IDENT})

    def occurrence(self) -> OccurrenceRef:
        side = self.step()
        self.expect(",")
        fol_path = self.path()
        self.expect(",")
        term_path = self.path()
        self.expect(")")
        return OccurrenceRef(side, fol_path, term_path)

    def step(self) -> Pos:
        tok = self.expect(IDENT)
        if tok.text not in ("L", "R"):
            raise ParseError(f"Path step must be L or R, got {tok.text!r}", tok.line, tok.column)
        return Pos(tok.text)

    def path(self) -> Tuple[Pos, ...]:
        self.expect("[")
        steps = []
        if not self.at("]"):
            steps.append(self.step())
            while self.accept(","):
                steps.append(self.step())
        self.expect("]")
        return tuple(steps)

    def rule_reference(self) -> Argument:
        first = self.chain_stage()
        if not self.at("then"):
            if first.args or self.tokens[self.pos - 1].kind == ")":
                return CallArg(first)
            return NameArg(first.name)
        stages = [first]
        while self.accept("then"):
            stages.append(self.chain_stage())
        return ChainArg(tuple(stages))

    def chain_stage(self) -> RuleCall:
        tok = self.expect(IDENT)
        args: Tuple[Argument, ...] = ()
        if self.accept("("):
            args = self.arguments(")")
        return RuleCall(tok.text, args, tok.line, tok.column)


def parse_script(text: str) -> List[ScriptItem]:
    """Parse a ``.prf`` script into its items.

    Raises:
        ParseError: On a syntax error
        ScriptError: When two items share a name
    """
    return ScriptParser(text).script()


# Formatting

_INDENT = "    "


def _format_call(call: RuleCall, style: StyleLike, bare: bool = False) -> str:
    if bare and not call.args:
        return call.name
    return f"{call.name}({', '.join(_format_arg(arg, style) for arg in call.args)})"


def _format_path(path) -> str:
    return "[" + ", ".join(step.value for step in path) + "]"


def _format_arg(arg: Argument, style: StyleLike) -> str:
    if isinstance(arg, FormulaArg):
        return "{" + print_formula(arg.formula, style) + "}"
    if isinstance(arg, TermArg):
        return "`" + print_term(arg.term) + "`"
    if isinstance(arg, NameArg):
        return arg.name
    if isinstance(arg, NumberArg):
        return str(arg.value)
    if isinstance(arg, ListArg):
        return "[" + ", ".join(_format_arg(item, style) for item in arg.items) + "]"
    if isinstance(arg, OccArg):
        ref = arg.ref
        return f"({ref.side.value}, {_format_path(ref.fol_path)}, {_format_path(ref.term_path)})"
    if isinstance(arg, CallArg):
        return _format_call(arg.call, style)
    if isinstance(arg, ChainArg):
        return " then ".join(_format_call(call, style, bare=True) for call in arg.calls)
    raise TypeError(f"Not a script argument: {arg!r}")


def _format_statements(statements, style: StyleLike, depth: int) -> List[str]:
    pad = _INDENT * depth
    lines = []
    for statement in statements:
        if isinstance(statement, Bind):
            lines.append(f"{pad}{statement.target} = {_format_call(statement.call, style)}")
        else:
            hypothesis = print_formula(statement.hypothesis, style)
            lines.append(f"{pad}{statement.target} = fantasy {{{hypothesis}}} as {statement.premise} {{")
            lines.extend(_format_statements(statement.body, style, depth + 1))
            lines.append(f"{pad}{_INDENT}return {statement.result.name}")
            lines.append(f"{pad}}}")
    return lines


def format_script(items: List[ScriptItem], style: StyleLike = Style.UNICODE) -> str:
    """Canonical text of a script; formatting it again changes nothing."""
    blocks = []
    for item in items:
        if isinstance(item, ProgramDef):
            blocks.append(f"program {item.name} {{\n{_INDENT}{print_program(item.command, style)}\n}}")
            continue
        keyword = "proof" if isinstance(item, ProofDef) else "triple"
        lines = [f"{keyword} {item.name} {{"]
        lines.extend(_format_statements(item.statements, style, 1))
        qed = f"{_INDENT}qed {item.result}"
        if isinstance(item.expected, ExpectedTriple):
            pre = print_formula(item.expected.pre, style)
            post = print_formula(item.expected.post, style)
            qed += f" : {{{pre}}} {item.expected.program} {{{post}}}"
        elif item.expected is not None:
            qed += f" : {{{print_formula(item.expected, style)}}}"
        lines.append(qed)
        lines.append("}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n" if blocks else ""
