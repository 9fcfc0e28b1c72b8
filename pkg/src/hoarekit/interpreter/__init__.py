"""Big-step interpreter for terms, formulas and commands."""

from .evaluator import Context, Evaluator, aeval, beval, exec_command

__all__ = ['Context', 'Evaluator', 'aeval', 'beval', 'exec_command']
