"""Main script-launcher for evaluation and verification of character trigonometric sums.

Commands:
    eval     exact value of one sum by direct summation
    verify   direct value against the closed form, exactly
    tables   every published value, verified and compared
    grid     verification over the parameter grids of config.py
    char     the real primitive character mod k and its constants

Parameters are comma-separated in the family's own order, see --help.
When --k is missing the last parameter is taken as the modulus, so
`eval --family S8 --params 7,2,13` evaluates S8 with a=7, b=2 at k=13.
"""


#region IMPORTS
import argparse
import json
import logging
import sys

import pandas as pd

from config import config, default, generate_config

from src.harness.constants import character_constants, render_constants
from src.harness.grids import families_from_grid
from src.harness.paper_tables import run_paper_tables
from src.harness.report import RENDERERS, summarize, value_record
from src.harness.verification import run_grid, verify_identity
from src.sums.evaluation import eval_direct_float, sum_value
from src.sums.exceptions import DecompositionError, FamilyError
from src.sums.families import AVAILABLE_FAMILIES, make_family, parse_tag
#endregion

logger = logging.getLogger('gauss_analogue')

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2

COMMANDS = ('eval', 'verify', 'tables', 'grid', 'char')


#region ARGUMENTS
def _int_list(text):
    try:
        return tuple(int(v) for v in text.split(',') if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _family_help():
    lines = []
    for tag, definition in AVAILABLE_FAMILIES.items():
        names = 'a,L,b..,c..,J,d..' if definition.parameter_names is None else ','.join(definition.parameter_names)
        lines.append(f"  {tag.value:<12} ({names or '-'}): {definition.summary}")
    return '\n'.join(lines)


def init_arguments():
    """Initialize arguments replacing the default ones.
    """
    parser = argparse.ArgumentParser(
        description='Exact evaluation and verification of character trigonometric sums',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog='families:\n' + _family_help())

    parser.add_argument('command', nargs='?', default=default.command, choices=COMMANDS,
                        help='What to run.')
    parser.add_argument('--family', default=None,
                        help='Sum family tag, e.g. S2, S8, GeneralEven.')
    parser.add_argument('--k', type=int, default=None,
                        help='Modulus: odd, squarefree for the character families.')
    parser.add_argument('--params', type=_int_list, default=(),
                        help='Family parameters, comma-separated.')
    parser.add_argument('--format', default=default.format, choices=tuple(RENDERERS),
                        help='Output format.')
    parser.add_argument('--float-check', default=default.float_check, action=argparse.BooleanOptionalAction,
                        help='Cross-check the exact value against a floating-point sum.')
    parser.add_argument('--max-field-order', type=int, default=default.max_field_order,
                        help='Largest cyclotomic field order M allowed.')
    parser.add_argument('--threads', type=int, default=default.threads,
                        help='Worker threads for tables and grid (env GAUSS_ANALOGUE_THREADS).')
    parser.add_argument('--output', default=None,
                        help='Write the output to this file instead of stdout.')
    parser.add_argument('--verbose', action='store_true',
                        help='Debug logging.')
    return parser


def check_arguments(parser, args):
    """Check arguments compatibility and correctness.
    """
    if args.command in ('eval', 'verify') and args.family is None:
        parser.error(f"{args.command} needs --family")
    if args.command == 'char' and args.k is None:
        parser.error('char needs --k')
    if args.threads < 1:
        parser.error('--threads must be positive')

    # modulus as the last parameter
    if args.command in ('eval', 'verify') and args.k is None:
        try:
            fixed = AVAILABLE_FAMILIES[parse_tag(args.family)].fixed_modulus
        except ValueError as e:
            parser.error(str(e))
        if fixed is not None:
            args.k = fixed
        elif args.params:
            args.params, args.k = args.params[:-1], args.params[-1]
        else:
            parser.error(f"{args.command} needs --k or the modulus as the last of --params")


def load_arguments(argv=None):
    """Initialize, check and pass arguments.
    """
    parser = init_arguments()
    args = parser.parse_args(argv)
    check_arguments(parser, args)
    generate_config(args.command, {
        'format': args.format,
        'float_check': args.float_check,
        'max_field_order': args.max_field_order,
        'threads': args.threads,
        'output': args.output,
        'log_level': 'DEBUG' if args.verbose else default.log_level,
    })
    return args
#endregion


#region COMMANDS
def _verify_kwargs():
    return {
        'float_check': config.float_check,
        'max_field_order': config.max_field_order,
        'float_mode': config.float_mode,
        'mp_dps': config.mp_dps,
    }


def _float_ok(report):
    if report.float_residual is None or report.float_residual <= config.float_tolerance:
        return True
    logger.error(f"{report.family.label}: float residual {report.float_residual:.3e} above {config.float_tolerance}")
    return False


def _eval_float_only(family):
    # values outside Q + Q*sqrt(k) have no exact rendering, report the float sum
    value = eval_direct_float(family)
    logger.warning(f"{family.label}: no exact value of the form c*sqrt({family.k}) + t, reporting the float sum")
    record = {
        'family_tag': family.tag.value,
        'k': family.k,
        'params': list(family.params),
        'value': None,
        'rendered': f"{value:.15g}  [float]",
        'float_value': value,
    }
    if config.format == 'json':
        return json.dumps(record, indent=2), EXIT_OK
    if config.format == 'csv':
        flat = dict(record, params=','.join(str(v) for v in family.params))
        del flat['value']
        return pd.DataFrame([flat]).to_csv(index=False), EXIT_OK
    return record['rendered'], EXIT_OK


def run_eval(args):
    family = make_family(args.family, args.k, args.params)
    try:
        value = sum_value(family, max_field_order=config.max_field_order)
    except DecompositionError:
        return _eval_float_only(family)
    residual = None
    if config.float_check:
        residual = abs(eval_direct_float(family) - value.to_float()) / max(1.0, abs(value.to_float()))

    record = {
        'family_tag': family.tag.value,
        'k': family.k,
        'params': list(family.params),
        'value': value_record(value),
        'rendered': value.render(),
        'float_residual': residual,
    }
    if config.format == 'json':
        text = json.dumps(record, indent=2)
    elif config.format == 'csv':
        flat = dict(record, params=','.join(str(v) for v in family.params), **record['value'])
        del flat['value']
        text = pd.DataFrame([flat]).to_csv(index=False)
    else:
        text = value.render()

    code = EXIT_OK
    if residual is not None and residual > config.float_tolerance:
        logger.error(f"{family.label}: float residual {residual:.3e} above {config.float_tolerance}")
        code = EXIT_MISMATCH
    return text, code


def run_verify(args):
    family = make_family(args.family, args.k, args.params)
    report = verify_identity(family, **_verify_kwargs())
    text = RENDERERS[config.format]([report])
    if report.rejected is not None:
        return text, EXIT_INVALID
    return text, EXIT_OK if report.passed and _float_ok(report) else EXIT_MISMATCH


def run_tables(args):
    reports = run_paper_tables(threads=config.threads, **_verify_kwargs())
    failed = [r for r in reports if not (r.passed and _float_ok(r))]
    unexplained = [r for r in reports if r.matches_paper is False and not r.known_erratum]
    if config.fail_on_suspected_erratum:
        unexplained += [r for r in reports if r.suspected_erratum and r.known_erratum]

    summary = summarize(reports)
    logger.info(f"tables: {summary}")
    for report in unexplained:
        logger.error(f"{report.family.label}: computed {report.lhs_exact}, printed {report.paper_expected}")
    return RENDERERS[config.format](reports), EXIT_MISMATCH if failed or unexplained else EXIT_OK


def run_grid_command(args):
    grid = config.grid
    if args.family is not None:
        tag = parse_tag(args.family)
        grid = {name: spec for name, spec in grid.items() if parse_tag(name) is tag}
        if not grid:
            raise FamilyError(f"no grid section for {tag.value} in config.py")
    if args.k is not None:
        grid = {name: dict(spec, k=[args.k]) for name, spec in grid.items()}
    families = families_from_grid(grid)
    if not families:
        raise FamilyError(f"the grid sections {', '.join(grid) or '(none)'} expand to no sums")
    reports = run_grid(families, threads=config.threads, **_verify_kwargs())

    summary = summarize(reports)
    logger.info(f"grid: {summary}")
    failed = [r for r in reports if r.rejected is None and not (r.passed and _float_ok(r))]
    return RENDERERS[config.format](reports), EXIT_MISMATCH if failed else EXIT_OK


def run_char(args):
    constants = character_constants(args.k)
    if config.format == 'json':
        return json.dumps(constants, indent=2), EXIT_OK
    if config.format == 'csv':
        row = dict(constants, values=','.join(str(v) for v in constants['values']))
        return pd.DataFrame([row]).to_csv(index=False), EXIT_OK
    return render_constants(constants), EXIT_OK


COMMAND_RUNNERS = {
    'eval': run_eval,
    'verify': run_verify,
    'tables': run_tables,
    'grid': run_grid_command,
    'char': run_char,
}
#endregion


def _write(text):
    if config.output:
        with open(config.output, 'w') as f:
            f.write(text.rstrip('\n') + '\n')
        logger.info(f"output written to {config.output}")
    else:
        print(text.rstrip('\n'))


def main(argv=None):
    try:
        args = load_arguments(argv)
    except SystemExit as e:
        return e.code

    logging.basicConfig(level=config.log_level, stream=sys.stderr, force=True,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')

    try:
        text, code = COMMAND_RUNNERS[args.command](args)
    except ValueError as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID
    except ArithmeticError as e:
        logger.error(f"{args.command} failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MISMATCH

    _write(text)
    return code


if __name__ == '__main__':
    sys.exit(main())
