"""
Command-line entry point, ``free-cumulants``.

Exit codes: 0 success, 1 identity mismatch, 2 only conjectures failed,
64 usage error, 65 size guard exceeded.
"""
import argparse
import json
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from ._version import __version__
from .combinatorics import Permutation, enumerate_trees, gamma_of, integer_partitions
from .config import Config, MAX_TABLE_N
from .cumulants import (INVERSION_METHODS, MOMENT_METHODS, CumulantTable, MomentTable, cumulant_defect,
                        cumulant_of_profile, cumulant_table, method_p_limit, moment_of_profile, moment_table)
from .cumulants.inversion import MAX_GAMMA_FORM_N
from .exceptions import ConfigError, FreeCumulantsError, SizeGuardError, UnknownIdentityError
from .hurwitz import gamma_closed, monotone_hurwitz, weingarten_oracle_series, weingarten_series
from .identities import exit_status, identity_names, verify, verify_all
from .maps import count_maps_M, enumerate_ns, ns_census, random_map

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_CONJECTURE = 2
EXIT_USAGE = 64
EXIT_GUARD = 65

CONVERSIONS = ('moments-from-cumulants', 'cumulants-from-moments')


class _Parser(argparse.ArgumentParser):
    """Reports usage errors as :class:`ConfigError` instead of exiting."""

    def error(self, message):
        raise ConfigError(message)


def _profile(text: str) -> List[int]:
    try:
        parts = [int(t) for t in text.replace('+', ',').split(',') if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated positive integers, got {text!r}") from None
    if not parts or min(parts) < 1:
        raise argparse.ArgumentTypeError(f"expected comma-separated positive integers, got {text!r}")
    return parts


def _add_output(parser: argparse.ArgumentParser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument('--json', action='store_true', help='machine-readable JSON')
    group.add_argument('--csv', action='store_true', help='one row per entry')
    parser.add_argument('--out', metavar='FILE', help='write to FILE instead of stdout')


def _add_mode(parser: argparse.ArgumentParser, default_mode: Optional[str] = None):
    parser.add_argument('--depth', type=int, help='truncation depth of the series')
    parser.add_argument('--mode', choices=('symbolic', 'specialized'), default=default_mode)
    parser.add_argument('--seed', type=int, help='specialisation seed of the first-order cumulants')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='free-cumulants', description='Higher-order free cumulants and moments.')
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v info, -vv debug (on stderr)')
    sub = parser.add_subparsers(dest='command', parser_class=_Parser)
    sub.required = True

    maps = sub.add_parser('maps', help='planar connected bipartite maps')
    maps.add_argument('action', choices=('count', 'census', 'decompose'))
    maps.add_argument('--white', type=_profile, help='white vertex degrees')
    maps.add_argument('--black', type=_profile, help='black vertex degrees')
    maps.add_argument('--n', type=int, help='number of edges of the random map')
    maps.add_argument('--seed', type=int, default=0)
    _add_output(maps)

    ns = sub.add_parser('ns', help='non-separable hypermaps')
    ns.add_argument('action', choices=('census', 'list'))
    ns.add_argument('--profile', type=_profile, required=True, help='white vertex degrees')
    _add_output(ns)

    trees = sub.add_parser('trees', help='labelled bipartite trees')
    trees.add_argument('--p', type=int, required=True, help='number of white vertices')
    trees.add_argument('--kind', choices=('G', 'T'), default='G')
    _add_output(trees)

    hurwitz = sub.add_parser('hurwitz', help='monotone Hurwitz numbers and their genus-zero closed form')
    hurwitz.add_argument('action', choices=('gamma', 'monotone'))
    hurwitz.add_argument('--cycle-type', type=_profile, required=True)
    hurwitz.add_argument('--genus', type=int, default=0)
    _add_output(hurwitz)

    weingarten = sub.add_parser('weingarten', help='1/N expansion of the unitary Weingarten function')
    which = weingarten.add_mutually_exclusive_group(required=True)
    which.add_argument('--perm', help='permutation in cycle notation, e.g. "(1 2)(3)"')
    which.add_argument('--cycle-type', type=_profile, help='the canonical permutation of this cycle type')
    weingarten.add_argument('--depth', dest='power', type=int, default=8, help='largest power of 1/N')
    weingarten.add_argument('--oracle', action='store_true', help='also expand the Gram-matrix inverse')
    _add_output(weingarten)

    convert = sub.add_parser('convert', help='moments <-> cumulants, one profile or a whole table')
    convert.add_argument('direction', choices=CONVERSIONS)
    convert.add_argument('--profile', type=_profile, help='convert this profile only')
    source = convert.add_mutually_exclusive_group()
    source.add_argument('--table', metavar='FILE', help='JSON or CSV table of the known side')
    source.add_argument('--symbolic', action='store_true', help='keep every cumulant as a symbol')
    convert.add_argument('--method', help=f"inversion: {', '.join(INVERSION_METHODS)}; "
                                          f"moments: {', '.join(MOMENT_METHODS)}")
    convert.add_argument('--max-n', type=int, help='largest |lambda| to convert')
    _add_output(convert)

    verify_parser = sub.add_parser('verify', help='check the registered functional identities')
    verify_parser.add_argument('names', nargs='*', help=f"any of: {', '.join(identity_names())}")
    verify_parser.add_argument('--all', action='store_true', help='every registered identity')
    verify_parser.add_argument('--p', type=int, help='order, for identities registered at several orders')
    verify_parser.add_argument('--dump-series', action='store_true', help='print both sides of every comparison')
    _add_mode(verify_parser)
    _add_output(verify_parser)

    tables = sub.add_parser('tables', help='moment and cumulant tables of every profile up to a size')
    tables.add_argument('--max-n', type=int, required=True)
    tables.add_argument('--max-p', type=int, help='largest number of parts (the limit of --method when omitted)')
    tables.add_argument('--method', choices=sorted(MOMENT_METHODS), default='bruteforce')
    tables.add_argument('--check', action='store_true', help='invert the table and report the defect')
    tables.add_argument('--seed', type=int, help='specialise the first-order cumulants')
    _add_output(tables)
    return parser


# emission

def _emit(config: Config, plain: str, payload=None, frame: Optional[pd.DataFrame] = None):
    if config.output_format == 'json':
        text = json.dumps(payload, indent=2, sort_keys=True) + '\n'
    elif config.output_format == 'csv':
        if frame is None:
            raise ConfigError(f"{config.command} has no CSV form")
        text = frame.to_csv(index=False)
    else:
        text = plain if plain.endswith('\n') else plain + '\n'
    if config.out:
        with open(config.out, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _read_table(path: str, kind):
    if path.endswith('.csv'):
        return kind.read_csv(path)
    with open(path) as f:
        return kind.loads(f.read())


# subcommands

def _run_maps(args, config: Config) -> int:
    if args.action == 'count':
        if not args.white or not args.black:
            raise ConfigError("maps count needs --white and --black")
        count = count_maps_M(args.white, args.black)
        _emit(config, str(count), {'white': args.white, 'black': args.black, 'count': count})
        return EXIT_OK
    if args.action == 'census':
        if not args.white:
            raise ConfigError("maps census needs --white")
        n = sum(args.white)
        rows = [{'black': str(lam), 'count': count_maps_M(args.white, lam.parts)} for lam in integer_partitions(n)]
        frame = pd.DataFrame(rows, columns=['black', 'count'])
        plain = frame.to_string(index=False) + f"\ntotal {int(frame['count'].sum())}"
        _emit(config, plain, {'white': args.white, 'census': rows, 'total': int(frame['count'].sum())}, frame)
        return EXIT_OK
    if args.n is None:
        raise ConfigError("maps decompose needs --n")
    rng = np.random.default_rng(args.seed)
    m = random_map(args.n, rng)
    parts = m.decompose(rng)
    blocks = [[a + 1 for a in b] for b in parts.blocks]
    _emit(config, f"{m}\n{parts}", {'map': str(m), 'components': blocks})
    return EXIT_OK


def _run_ns(args, config: Config) -> int:
    if args.action == 'census':
        census = ns_census(args.profile)
        frame = pd.DataFrame([{'black': r, 'count': c} for r, c in census['by_black_count'].items()],
                             columns=['black', 'count'])
        plain = f"total {census['total']}\n" + '\n'.join(f"{r} black: {c}" for r, c in census['by_black_count'].items())
        _emit(config, plain, census, frame)
        return EXIT_OK
    maps = [str(nu) for nu in enumerate_ns(args.profile)]
    _emit(config, '\n'.join(maps), {'profile': args.profile, 'maps': maps},
          pd.DataFrame({'black': maps}))
    return EXIT_OK


def _run_trees(args, config: Config) -> int:
    trees = [str(t) for t in enumerate_trees(args.p, args.kind)]
    plain = '\n'.join(trees) + f"\ntotal {len(trees)}"
    _emit(config, plain, {'p': args.p, 'kind': args.kind, 'trees': trees, 'total': len(trees)},
          pd.DataFrame({'tree': trees}))
    return EXIT_OK


def _run_hurwitz(args, config: Config) -> int:
    if args.action == 'gamma':
        value = gamma_closed(args.cycle_type)
    else:
        value = monotone_hurwitz(args.cycle_type, args.genus)
    _emit(config, str(value), {'cycle_type': args.cycle_type, 'action': args.action, 'genus': args.genus,
                               'value': str(value)})
    return EXIT_OK


def _run_weingarten(args, config: Config) -> int:
    nu = Permutation.parse(args.perm) if args.perm else gamma_of(args.cycle_type)
    series = weingarten_series(nu, args.power)
    payload = {'perm': str(nu), 'cycle_type': list(nu.cycle_type.parts), 'coeffs': series.to_dict()}
    plain = str(series)
    if args.oracle:
        oracle = weingarten_oracle_series(nu, args.power)
        payload['oracle_agrees'] = series.agrees_with(oracle)
        plain += f"\noracle {'agrees' if payload['oracle_agrees'] else 'DIFFERS'}"
    frame = pd.DataFrame([{'power': k, 'coefficient': v} for k, v in series.to_dict().items()],
                         columns=['power', 'coefficient'])
    _emit(config, plain, payload, frame)
    return EXIT_OK


def _table_lines(table) -> List[str]:
    return [f"{','.join(map(str, lam))}: {table[lam]}" for lam in table.profiles()]


def _emit_table(config: Config, table):
    _emit(config, '\n'.join(_table_lines(table)), table.to_json(), table.to_frame())


def _emit_tables(config: Config, moments: MomentTable, cumulants: CumulantTable):
    plain = '\n'.join(['moments'] + _table_lines(moments) + ['', 'cumulants'] + _table_lines(cumulants))
    frame = pd.concat([t.to_frame().assign(table=t.kind) for t in (moments, cumulants)], ignore_index=True)
    frame = frame[['table'] + [c for c in frame.columns if c != 'table']]
    _emit(config, plain, {'moments': moments.to_json(), 'cumulants': cumulants.to_json()}, frame)


def _max_p(max_p: Optional[int], method: str) -> Optional[int]:
    limit = method_p_limit(method)
    if max_p is None and limit is not None:
        logger.info("%s moments stop at p=%d", method, limit)
        return limit
    return max_p


def _cumulants_from_moments(args, config: Config) -> CumulantTable:
    if args.table is None:
        raise ConfigError("cumulants-from-moments needs --table of moments")
    method = args.method or 'gamma'
    moments = _read_table(args.table, MomentTable)
    if args.profile:
        return CumulantTable({tuple(args.profile): cumulant_of_profile(args.profile, moments, method)})
    return cumulant_table(moments, config.max_n or max(sum(lam) for lam in moments), method=method)


def _moments_from_cumulants(args, config: Config) -> MomentTable:
    if args.table is None and not args.symbolic:
        raise ConfigError("moments-from-cumulants needs --table of cumulants or --symbolic")
    method = args.method or 'bruteforce'
    kappa = None if args.symbolic else _read_table(args.table, CumulantTable)
    if args.profile:
        return MomentTable({tuple(args.profile): moment_of_profile(args.profile, method, kappa)})
    if kappa is None and config.max_n is None:
        raise ConfigError("--symbolic without --profile needs --max-n")
    max_n = config.max_n or max(sum(lam) for lam in kappa)
    return moment_table(max_n, _max_p(None, method), method, kappa)


def _run_convert(args, config: Config) -> int:
    if args.direction == 'cumulants-from-moments':
        table = _cumulants_from_moments(args, config)
    else:
        table = _moments_from_cumulants(args, config)
    _emit_table(config, table)
    return EXIT_OK


def _run_tables(args, config: Config) -> int:
    moments = moment_table(config.max_n, _max_p(args.max_p, args.method), args.method)
    cumulant_n = min(config.max_n, MAX_GAMMA_FORM_N)
    if cumulant_n < config.max_n:
        logger.warning("cumulants are inverted up to n=%d only", cumulant_n)
    cumulants = cumulant_table(moments, cumulant_n, _max_p(args.max_p, args.method))
    if args.check:
        defect = cumulant_defect(cumulants)
        if defect:
            for lam, diff in defect.items():
                logger.warning("inversion defect at %s: %s", lam, diff)
            _emit_tables(config, moments, cumulants)
            return EXIT_MISMATCH
        logger.info("cumulants recovered exactly for every profile up to n=%d", cumulant_n)
    if args.seed is not None:
        moments = moments.specialize(args.seed, (1,))
        cumulants = cumulants.specialize(args.seed, (1,))
    _emit_tables(config, moments, cumulants)
    return EXIT_OK


def _dump_lines(report) -> List[str]:
    lines = []
    for entry in report.series:
        for side in ('lhs', 'rhs'):
            lines.append(f"-- {report.name} {entry['label']} {side}")
            lines.append(entry[side].rstrip('\n'))
    return lines


def _run_verify(args, config: Config) -> int:
    if args.all == bool(args.names):
        raise ConfigError("name identities or pass --all, not both")
    if args.all and args.p is not None:
        raise ConfigError("--p selects one order of a named identity and cannot be combined with --all")
    if args.dump_series and config.output_format == 'csv':
        raise ConfigError("--dump-series has no CSV form, use --json or plain output")
    mode = args.mode
    if mode == 'specialized' and args.seed is None:
        raise ConfigError("--mode specialized needs --seed")
    if args.all:
        reports = verify_all(config.depth, mode, args.seed, dump=args.dump_series)
    else:
        reports = [verify(name, config.depth, mode, args.seed, args.p, dump=args.dump_series) for name in args.names]
    plain = '\n'.join(str(r) for r in reports)
    if args.dump_series:
        plain = '\n'.join([plain] + [line for r in reports for line in _dump_lines(r)])
    frame = pd.DataFrame([{'name': r.name, 'depth': r.depth, 'mode': r.mode, 'passed': r.passed,
                           'millis': r.millis} for r in reports])
    _emit(config, plain, [r.to_json() for r in reports], frame)
    return exit_status(reports)


COMMANDS: Dict[str, Callable[..., int]] = {
    'maps': _run_maps,
    'ns': _run_ns,
    'trees': _run_trees,
    'hurwitz': _run_hurwitz,
    'weingarten': _run_weingarten,
    'convert': _run_convert,
    'verify': _run_verify,
    'tables': _run_tables,
}


def _configure_logging(verbosity: int):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse ``argv`` and run one subcommand.
    :return: exit code
    """
    try:
        args = build_parser().parse_args(argv)
        config = Config.from_namespace(args)
        if args.command == 'tables' and config.max_n is None:
            raise ConfigError(f"--max-n is required (at most {MAX_TABLE_N})")
        _configure_logging(config.verbosity)
        return COMMANDS[args.command](args, config)
    except SizeGuardError as e:
        sys.stderr.write(f"free-cumulants: {e}\n")
        return EXIT_GUARD
    except (ConfigError, UnknownIdentityError) as e:
        sys.stderr.write(f"free-cumulants: {e}\n")
        return EXIT_USAGE
    except (FreeCumulantsError, ValueError, OSError) as e:
        sys.stderr.write(f"free-cumulants: {e}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
