"""Tokenizer shared by the formula, program and script grammars.

Unicode connectives are folded into their ASCII spelling here, so the parsers
only ever see one alphabet. An upper-case ``S`` is always a successor token:
``SSS0`` reads as three successors of zero and ``SA`` as the successor of A.
"""

from dataclasses import dataclass
from typing import List

from ..errors import ParseError
from ..syntax import KEYWORDS

EOF = "EOF"
IDENT = "IDENT"
NUMBER = "NUMBER"
SUCC = "S"

ALIASES = {
    "¬": "!",
    "∧": "&",
    "∨": "|",
    "→": "->",
    "∀": "forall",
    "∃": "exists",
    "·": "*",
}

_TWO_CHAR = (":=", "->")
_ONE_CHAR = frozenset("!&|+*=(){}[]<>,;:`")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int

    def describe(self) -> str:
        if self.kind == EOF:
            return "end of input"
        return repr(self.text)


def tokenize(source: str) -> List[Token]:
    """Split ``source`` into tokens, ending with a single EOF token.

    Args:
        source: Program, formula or script text

    Returns:
        Token list

    Raises:
        ParseError: On a character no token starts with
    """
    tokens: List[Token] = []
    idx, line, col = 0, 1, 1
    n = len(source)

    def emit(kind: str, text: str, start_col: int) -> None:
        tokens.append(Token(kind, text, line, start_col))

    while idx < n:
        c = source[idx]
        if c == "\n":
            idx, line, col = idx + 1, line + 1, 1
            continue
        if c.isspace():
            idx, col = idx + 1, col + 1
            continue
        if c == "#":
            while idx < n and source[idx] != "\n":
                idx += 1
            continue
        if c in ALIASES:
            alias = ALIASES[c]
            emit(alias, alias, col)
            idx, col = idx + 1, col + 1
            continue
        pair = source[idx:idx + 2]
        if pair in _TWO_CHAR:
            emit(pair, pair, col)
            idx, col = idx + 2, col + 2
            continue
        if c in _ONE_CHAR:
            emit(c, c, col)
            idx, col = idx + 1, col + 1
            continue
        if c.isdigit():
            start = idx
            while idx < n and source[idx].isdigit():
                idx += 1
            emit(NUMBER, source[start:idx], col)
            col += idx - start
            continue
        if c == "S":
            emit(SUCC, c, col)
            idx, col = idx + 1, col + 1
            continue
        if c.isascii() and c.isalpha():
            start = idx
            while idx < n and source[idx].isascii() and (source[idx].isalnum() or source[idx] == "_"):
                idx += 1
            word = source[start:idx]
            emit(word if word in KEYWORDS else IDENT, word, col)
            col += idx - start
            continue
        raise ParseError(f"Unexpected character {c!r}", line, col)

    tokens.append(Token(EOF, "", line, col))
    return tokens
