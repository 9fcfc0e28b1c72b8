"""Command-line interface: ``hoarekit check|run|fmt``.

stdout carries only the documented output (check reports, final contexts,
formatted source); diagnostics and log records go to stderr. Exit codes are
0 on success, 1 on a semantic failure and 2 on a syntax or IO failure or
on input nested too deeply to process.
"""

import concurrent.futures
from pathlib import Path
from typing import Dict, Tuple, Union

import click

from .. import __version__
from ..config import config
from ..errors import HoarekitError, ParseError, RunError, SurfaceError
from ..interpreter import Evaluator
from ..kernel import Mode
from ..lint import check_program
from ..surface import (
    CheckReport, Style, check_script, format_script, parse_formula, parse_program, parse_script,
    parse_term, print_formula, print_program, print_term,
)
from ..surface.checker import FAIL_MARK
from ..syntax import Assert, check_var_name
from ..utils import get_logger, setup_logging

logger = get_logger('cli')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2

_STYLES = click.Choice([style.value for style in Style], case_sensitive=False)
_MODES = click.Choice([mode.value for mode in Mode], case_sensitive=False)

TOO_DEEP = "Input is nested too deeply to process"


def _read(path: str) -> str:
    return Path(path).read_text(encoding='utf-8')


def _check_file(path: str, mode: Mode) -> Union[CheckReport, Exception]:
    try:
        return check_script(parse_script(_read(path)), mode)
    except (SurfaceError, OSError, UnicodeDecodeError) as e:
        return e
    except RecursionError:
        return SurfaceError(TOO_DEEP)


def _parse_bindings(ctx, param, values) -> Dict[str, int]:
    bindings = {}
    for raw in values:
        name, sep, number = raw.partition('=')
        try:
            name = check_var_name(name.strip())
            value = int(number.strip())
        except ValueError:
            raise click.BadParameter(f"expected VAR=NAT, got {raw!r}")
        if not sep or value < 0:
            raise click.BadParameter(f"expected VAR=NAT, got {raw!r}")
        bindings[name] = value
    return bindings


@click.group()
@click.version_option(__version__, prog_name='hoarekit')
@click.option('--log-level', default=None, help='Logging level (default from logging.level).')
@click.option('--log-file', type=click.Path(), default=None, help='Also write log records to this file.')
def cli(log_level, log_file):
    """Check proofs, run programs and format sources of the hoarekit languages."""
    setup_logging(log_level or config.get('logging.level', 'WARNING'),
                  log_file or config.get_path('logging.file'))


@cli.command()
@click.argument('files', nargs=-1, required=True, type=click.Path())
@click.option('--mode', type=_MODES, default=None, help='Checking mode (default from checker.mode).')
@click.option('--print', 'style', type=_STYLES, default=None, help='Output style (default unicode).')
@click.option('--workers', type=click.IntRange(min=1), default=None, help='Files checked in parallel.')
@click.pass_context
def check(ctx, files: Tuple[str, ...], mode, style, workers):
    """Check .prf scripts and print one line per proof or triple."""
    mode = Mode.parse(mode or config.get('checker.mode', 'default'))
    style = Style.parse(style or config.print_style())
    workers = workers or config.get('checker.workers', 4)

    # map() keeps the reports in input order whatever order the workers finish in
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        outcomes = list(executor.map(lambda path: _check_file(path, mode), files))

    exit_code = EXIT_OK
    passed = failed = 0
    for path, outcome in zip(files, outcomes):
        if isinstance(outcome, Exception):
            click.echo(f"{FAIL_MARK} {path}: {outcome}", err=True)
            exit_code = EXIT_INVALID
            continue
        for line in outcome.lines(style):
            click.echo(line)
        failed += len(outcome.failures)
        passed += len(outcome.items) - len(outcome.failures)
        if not outcome.ok:
            exit_code = max(exit_code, EXIT_FAILED)

    logger.info("Checked %d file(s): %d item(s) passed, %d failed", len(files), passed, failed)
    ctx.exit(exit_code)


@cli.command()
@click.argument('file', type=click.Path())
@click.option('--set', 'bindings', multiple=True, metavar='VAR=NAT', callback=_parse_bindings,
              help='Initial binding; repeatable.')
@click.option('--max-steps', type=click.IntRange(min=0), default=None,
              help='Step budget (default from interpreter.max_steps).')
@click.option('--assert', 'assertion', nargs=2, default=None, metavar='PRE POST',
              help='Wrap the program in a runtime assertion.')
@click.pass_context
def run(ctx, file: str, bindings: Dict[str, int], max_steps, assertion):
    """Run an .imp program and print the final context."""
    try:
        command = parse_program(_read(file))
        if assertion:
            pre, post = (parse_formula(text) for text in assertion)
            command = Assert(pre, command, post)
    except (SurfaceError, OSError, UnicodeDecodeError) as e:
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_INVALID)
    except RecursionError:
        click.echo(f"Error: {TOO_DEEP}", err=True)
        ctx.exit(EXIT_INVALID)

    check_program(command, bindings)
    budget = max_steps if max_steps is not None else config.get('interpreter.max_steps')
    try:
        final = Evaluator().exec_command(bindings, command, budget)
    except RunError as e:
        click.echo(str(e), err=True)
        ctx.exit(EXIT_FAILED)
    except RecursionError:
        click.echo(f"Error: {TOO_DEEP}", err=True)
        ctx.exit(EXIT_INVALID)

    for name in sorted(final):
        click.echo(f"{name}={final[name]}")


def _format_lines(text: str, style: Style) -> str:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        try:
            out.append(print_formula(parse_formula(line), style))
        except ParseError as formula_error:
            try:
                out.append(print_term(parse_term(line)))
            except ParseError:
                raise SurfaceError(formula_error.message, lineno, formula_error.column) from None
    return "".join(f"{line}\n" for line in out)


@cli.command()
@click.argument('file', type=click.Path())
@click.option('--style', type=_STYLES, default=None, help='Output style (default unicode).')
@click.pass_context
def fmt(ctx, file: str, style):
    """Print the canonical form of a program, script or formula list."""
    style = Style.parse(style or config.print_style())
    suffix = Path(file).suffix
    try:
        text = _read(file)
        if suffix == '.imp':
            output = print_program(parse_program(text), style) + "\n"
        elif suffix == '.prf':
            output = format_script(parse_script(text), style)
        else:
            output = _format_lines(text, style)
    except (SurfaceError, OSError, UnicodeDecodeError) as e:
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_INVALID)
    except RecursionError:
        click.echo(f"Error: {TOO_DEEP}", err=True)
        ctx.exit(EXIT_INVALID)
    click.echo(output, nl=False)


def main():
    """Console entry point."""
    try:
        cli(prog_name='hoarekit')
    except HoarekitError as e:
        click.echo(f"Error: {e}", err=True)
        raise SystemExit(EXIT_INVALID)
