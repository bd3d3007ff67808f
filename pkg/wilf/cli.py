# cli.py
"""
Command line entry point.

    wilf pyramid 592738164
    wilf count s --n 10
    wilf count d --table --n-max 12
    wilf equiv 32415 31524 --relation shift --witness
    wilf reps --n 5 --decompose
    wilf prefixes --i 2 --n 5
    wilf shift-orbit 32415 --with-reversals
    wilf oracle --check all --n-max 7
    wilf table 4

Output goes to stdout, logs go to stderr.
"""
import argparse
import json
import logging
import sys
from dataclasses import replace
from typing import List, Optional, Sequence

from pythonjsonlogger import jsonlogger

from .config import load_settings
from .counting import a_noninterval, d_count, p_count, s_count, s_j_count, sh_count
from .exceptions import InputError, InvariantViolation, LimitExceeded, OutOfRange, WilfError
from .oracle import cross_check
from .perm import parse_permutation, render_letters
from .pyramid import canonical_member, class_size_exponent, is_ss_equivalent, pyramidal_sequence
from .representatives import representatives_C, representatives_R
from .shift import (
    find_shift_path,
    is_shift_equivalent,
    is_strong_shift_equivalent,
    orbit,
)
from .tables import build_table, render_json, render_text
from .trapezoid import phi, prefixes_D
from .types import OutputFormat, Settings

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_INVARIANT = 3

FAMILY_TABLES = {'d': 1, 's': 2, 'sh': 3, 'sjn': 4}


def configure_logging(level: str = 'WARNING', json_format: bool = False):
    handler = logging.StreamHandler(sys.stderr)
    if json_format:
        handler.setFormatter(jsonlogger.JsonFormatter(LOG_FORMAT))
    else:
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root = logging.getLogger()
    for existing in list(root.handlers):
        root.removeHandler(existing)
    root.addHandler(handler)
    root.setLevel(level)


def _emit(data, fmt: OutputFormat, text: Optional[str] = None):
    if fmt.is_json:
        print(json.dumps(data, indent=2))
    else:
        print(text if text is not None else data)


def _format_vector(vector) -> str:
    return '(' + ', '.join(str(entry) for entry in vector) + ')'


def cmd_pyramid(args, settings: Settings, fmt: OutputFormat) -> int:
    u = parse_permutation(args.perm)
    if u.n == 1:
        _emit({'permutation': u.to_json(), 'levels': [], 'exponent': 0, 'canonical_member': [1]},
              fmt, "empty pyramid (n = 1)")
        return EXIT_OK

    p = pyramidal_sequence(u)
    exponent = class_size_exponent(p)
    member = canonical_member(p)
    lines = [f"Δ_{i} = {_format_vector(level)}" for i, level in p.top_down()]
    lines.append(f"class size: 2^{exponent} = {2 ** exponent}")
    lines.append(f"canonical member: {member}")
    _emit(
        {
            'permutation': u.to_json(),
            'levels': p.to_json(),
            'exponent': exponent,
            'class_size': 2 ** exponent,
            'canonical_member': member.to_json(),
        },
        fmt,
        '\n'.join(lines),
    )
    return EXIT_OK


def _require(value: Optional[int], flag: str, family: str) -> int:
    if value is None:
        raise OutOfRange(f"count {family} needs {flag}")
    return value


def cmd_count(args, settings: Settings, fmt: OutputFormat) -> int:
    family = args.family
    if args.table:
        if family not in FAMILY_TABLES:
            raise OutOfRange(f"There is no appendix table for {family}; use one of {sorted(FAMILY_TABLES)}")
        table = build_table(FAMILY_TABLES[family], args.n_max or settings.table_n_max)
        _emit(render_json(table), fmt, render_text(table, fmt).rstrip('\n'))
        return EXIT_OK

    n = _require(args.n, '--n', family)
    if family == 's':
        value = s_count(n)
    elif family == 'sh':
        value = sh_count(n)
    elif family == 'a':
        value = a_noninterval(n)
    elif family == 'd':
        value = d_count(_require(args.i, '--i', family), n)
    elif family == 'p':
        value = p_count(_require(args.i, '--i', family), n)
    else:
        value = s_j_count(_require(args.j, '--j', family), n)
    _emit({'family': family, 'i': args.i, 'j': args.j, 'n': n, 'value': value}, fmt, fmt.number(value))
    return EXIT_OK


def cmd_equiv(args, settings: Settings, fmt: OutputFormat) -> int:
    u = parse_permutation(args.u)
    v = parse_permutation(args.v)
    if args.relation == 'ss':
        result = is_ss_equivalent(u, v)
    elif args.relation == 'strong-shift':
        result = is_strong_shift_equivalent(u, v)
    else:
        result = is_shift_equivalent(u, v)

    data = {'u': u.to_json(), 'v': v.to_json(), 'relation': args.relation, 'equivalent': result}
    lines = ['true' if result else 'false']
    if args.witness and result:
        path = find_shift_path(u, v, with_reversals=args.relation == 'shift')
        data['witness'] = [step.to_json() for step in path]
        current = u
        for step in path:
            label = 'reverse' if step.is_reversal else f"shift h={step.move.h} delta={step.move.delta}"
            lines.append(f"{current} -> {step.result}  ({label})")
            current = step.result
    _emit(data, fmt, '\n'.join(lines))
    if args.strict and not result:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_reps(args, settings: Settings, fmt: OutputFormat) -> int:
    if args.n > settings.prefix_limit:
        raise LimitExceeded(f"Representatives are limited to n <= {settings.prefix_limit}, got n = {args.n}")
    reps = representatives_C(args.n) if args.invert else representatives_R(args.n)
    if fmt.is_json:
        _emit({'n': args.n, 'inverted': args.invert, 'members': [entry.to_json() for entry in reps.entries]}, fmt)
        return EXIT_OK
    lines = []
    for entry in reps.entries:
        if args.decompose:
            lines.append(f"{entry.member}  i={entry.i}  prefix={render_letters(entry.prefix)}  tau={entry.tau}")
        else:
            lines.append(str(entry.member))
    print('\n'.join(lines))
    return EXIT_OK


def cmd_prefixes(args, settings: Settings, fmt: OutputFormat) -> int:
    if args.n > settings.prefix_limit:
        raise LimitExceeded(f"Prefix sets are limited to n <= {settings.prefix_limit}, got n = {args.n}")
    prefixes = prefixes_D(args.i, args.n)
    if fmt.is_json:
        data = [list(u.letters) for u in prefixes]
        if args.trapezoid:
            data = [{'prefix': list(u.letters), 'trapezoid': phi(u).to_json()} for u in prefixes]
        _emit(data, fmt)
        return EXIT_OK
    lines = []
    for u in prefixes:
        line = render_letters(u.letters)
        if args.trapezoid:
            line += '  ' + ' '.join(_format_vector(level) for level in phi(u).levels)
        lines.append(line)
    print('\n'.join(lines))
    return EXIT_OK


def cmd_shift_orbit(args, settings: Settings, fmt: OutputFormat) -> int:
    u = parse_permutation(args.perm)
    members = sorted(orbit(u, with_reversals=args.with_reversals))
    _emit([member.to_json() for member in members], fmt, '\n'.join(str(member) for member in members))
    return EXIT_OK


def cmd_oracle(args, settings: Settings, fmt: OutputFormat) -> int:
    results = cross_check(args.check, args.n_max, settings)
    failed = [result for result in results if not result.passed]
    if fmt.is_json:
        _emit({'passed': not failed, 'results': [result.to_json() for result in results]}, fmt)
    else:
        lines = []
        for result in results:
            status = 'PASS' if result.passed else 'FAIL'
            lines.append(f"{status}  {result.check:<22} n={result.n:<2}  expected={result.expected}  actual={result.actual}")
            lines.extend(f"      {detail}" for detail in result.details)
        lines.append('PASS' if not failed else f"FAIL ({len(failed)} of {len(results)} checks)")
        print('\n'.join(lines))
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_table(args, settings: Settings, fmt: OutputFormat) -> int:
    table = build_table(args.number, args.n_max)
    _emit(render_json(table), fmt, render_text(table, fmt).rstrip('\n'))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='wilf', description="Super-strong Wilf and shift equivalence of permutations")
    parser.add_argument('--json', action='store_true', help="emit JSON instead of text")
    parser.add_argument('--thousands', action='store_true', help="print numbers with thousands separators")
    parser.add_argument('--log-json', action='store_true', help="write logs as JSON lines")
    parser.add_argument('--log-level', default=None, help="override the configured log level")
    parser.add_argument('--set', dest='overrides', action='append', default=[], metavar='KEY=VALUE',
                        help="hydra override, e.g. oracle.ss_limit=8")
    sub = parser.add_subparsers(dest='command', required=True)

    pyramid = sub.add_parser('pyramid', help="pyramidal sequence, class size and canonical member")
    pyramid.add_argument('perm')
    pyramid.set_defaults(handler=cmd_pyramid)

    count = sub.add_parser('count', help="evaluate a counting recurrence")
    count.add_argument('family', choices=['s', 'sjn', 'd', 'p', 'a', 'sh'])
    count.add_argument('--n', type=int)
    count.add_argument('--i', type=int)
    count.add_argument('--j', type=int)
    count.add_argument('--table', action='store_true', help="print the whole appendix table")
    count.add_argument('--n-max', type=int)
    count.set_defaults(handler=cmd_count)

    equiv = sub.add_parser('equiv', help="test two permutations for equivalence")
    equiv.add_argument('u')
    equiv.add_argument('v')
    equiv.add_argument('--relation', choices=['ss', 'strong-shift', 'shift'], default='ss')
    equiv.add_argument('--witness', action='store_true', help="print a sequence of moves from u to v")
    equiv.add_argument('--strict', action='store_true', help="exit with 1 when the answer is false")
    equiv.set_defaults(handler=cmd_equiv)

    reps = sub.add_parser('reps', help="one representative per super-strong class")
    reps.add_argument('--n', type=int, required=True)
    reps.add_argument('--invert', action='store_true', help="print C_n instead of R_n")
    reps.add_argument('--decompose', action='store_true', help="show prefix, its length and the reduced suffix")
    reps.set_defaults(handler=cmd_reps)

    prefixes = sub.add_parser('prefixes', help="the minimal prefixes D_{i,n}")
    prefixes.add_argument('--i', type=int, required=True)
    prefixes.add_argument('--n', type=int, required=True)
    prefixes.add_argument('--trapezoid', action='store_true', help="also print the trapezoidal sequence")
    prefixes.set_defaults(handler=cmd_prefixes)

    shift_orbit = sub.add_parser('shift-orbit', help="all permutations reachable by rigid shifts")
    shift_orbit.add_argument('perm')
    shift_orbit.add_argument('--with-reversals', action='store_true')
    shift_orbit.set_defaults(handler=cmd_shift_orbit)

    oracle = sub.add_parser('oracle', help="cross-check recurrences against brute force")
    oracle.add_argument('--check', choices=['ss', 'shift', 'prefixes', 'all'], default='all')
    oracle.add_argument('--n-max', type=int, default=7)
    oracle.add_argument('--limit', type=int, help="raise every brute-force size limit to this value")
    oracle.add_argument('--workers', type=int, help="worker processes for the partition sweep")
    oracle.set_defaults(handler=cmd_oracle)

    table = sub.add_parser('table', help="reproduce one of the appendix tables")
    table.add_argument('number', type=int, choices=[1, 2, 3, 4, 5])
    table.add_argument('--n-max', type=int)
    table.set_defaults(handler=cmd_table)
    return parser


def _apply_flags(args, settings: Settings) -> Settings:
    changes = {}
    if getattr(args, 'limit', None) is not None:
        changes.update(ss_limit=args.limit, shift_limit=args.limit, prefix_limit=args.limit)
    if getattr(args, 'workers', None) is not None:
        changes['workers'] = args.workers
    if args.log_level:
        changes['log_level'] = args.log_level.upper()
    if not changes:
        return settings
    return replace(settings, **changes)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging('WARNING', args.log_json)

    try:
        settings = _apply_flags(args, load_settings(args.overrides))
        configure_logging(settings.log_level, args.log_json)
        fmt = OutputFormat('json' if args.json else 'text', args.thousands)
        return args.handler(args, settings, fmt)
    except InputError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_INPUT
    except InvariantViolation as e:
        logger.error(f"Internal check failed: {type(e).__name__}: {e}")
        return EXIT_INVARIANT
    except WilfError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_INVARIANT


def run(argv: Optional[List[str]] = None):
    sys.exit(main(argv))
