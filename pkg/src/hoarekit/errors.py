"""Exception hierarchy shared by the kernels, the interpreter and the surface language."""

from typing import FrozenSet, Optional


class HoarekitError(Exception):
    """Base class for every error raised by hoarekit."""


class ConfigError(HoarekitError):
    """Raised when the configuration file cannot be read or parsed."""


class KernelError(HoarekitError):
    """A proof rule refused to construct a theorem or triple.

    Args:
        rule: Canonical rule name, e.g. ``ruleSpec`` or ``hoareWhile``
        detail: Optional human-readable reason
    """

    def __init__(self, rule: str, detail: Optional[str] = None):
        self.rule = rule
        self.detail = detail
        message = f"{rule}: Cannot construct proof"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class RunError(HoarekitError):
    """Evaluation of an expression or command failed."""


class UnboundVariable(RunError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Element not found: {name}")


class PreconditionFailed(RunError):
    def __init__(self):
        super().__init__("Assert: Pre-condition does not match!")


class PostconditionFailed(RunError):
    def __init__(self):
        super().__init__("Assert: Post-condition does not match!")


class BudgetExhausted(RunError):
    def __init__(self, steps: int):
        self.steps = steps
        super().__init__(f"Step budget exhausted after {steps} steps")


class NaturalOverflow(RunError):
    def __init__(self, value: int, limit: int):
        self.value = value
        self.limit = limit
        super().__init__(f"Natural number overflow: {value} exceeds {limit}")


class SurfaceError(HoarekitError):
    """Error located in surface-language source text."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        if line:
            super().__init__(f"line {line}, column {column}: {message}")
        else:
            super().__init__(message)


class ParseError(SurfaceError):
    """Syntax error; ``expected`` lists the token kinds that would have been accepted."""

    def __init__(self, message: str, line: int = 0, column: int = 0,
                 expected: FrozenSet[str] = frozenset()):
        self.expected = frozenset(expected)
        if self.expected:
            message = f"{message} (expected one of: {', '.join(sorted(self.expected))})"
        super().__init__(message, line, column)


class ScriptError(SurfaceError):
    """Scope, arity, unknown-rule or kernel failure inside a proof script."""
