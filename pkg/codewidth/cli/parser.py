"""Argument parser for the codewidth command line."""

import argparse

from codewidth import __version__
from codewidth.cnfgen import GENERATORS
from codewidth.compiler import HEURISTICS
from . import commands


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _add_compile_flags(parser: argparse.ArgumentParser):
    parser.add_argument('--heuristic', choices=HEURISTICS, default='fixed',
                        help='branching variable order')
    parser.add_argument('--budget', type=_positive, default=None,
                        help='maximum number of circuit nodes (default: CODEWIDTH_COMPILE_BUDGET)')


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='codewidth',
        description='Hard CNF encodings of GF(2) codes, width analysis and DNNF compilation.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('--log-level', default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                        help='overrides CODEWIDTH_LOG_LEVEL')
    sub = parser.add_subparsers(dest='command', required=True, metavar='command')

    p = sub.add_parser('generate', help='encode a parity-check matrix as CNF')
    p.add_argument('--mode', choices=GENERATORS, required=True)
    p.add_argument('-k', type=_positive, default=1, help='row blocks')
    p.add_argument('-b', type=_positive, default=1, help='equations per row block')
    p.add_argument('-c', type=_positive, default=1, help='column blocks per row block (nd mode)')
    p.add_argument('-n', type=_positive, default=None, help='code length (nd mode: c*k*b)')
    p.add_argument('--seed', type=int, default=None, help='matrix sampling seed')
    p.add_argument('--matrix', metavar='FILE', help='read the parity-check matrix instead of sampling')
    p.add_argument('-o', '--output', metavar='PATH', help='DIMACS output')
    p.add_argument('--abstract', metavar='PATH', help='abstract-instance output')
    p.set_defaults(handler=commands.cmd_generate)

    p = sub.add_parser('analyze', help='incidence-graph widths of a DIMACS file')
    p.add_argument('input', metavar='FILE')
    p.add_argument('--no-exact', dest='exact', action='store_false',
                   help='skip the exact modular pathwidth search')
    p.add_argument('--graph', metavar='PATH', help='also write the incidence graph')
    p.add_argument('--decomposition', metavar='PATH',
                   help='also write the modular path decomposition (blockpw instances)')
    p.set_defaults(handler=commands.cmd_analyze)

    p = sub.add_parser('count', help='model count by compilation, checked against an oracle')
    p.add_argument('input', metavar='FILE')
    _add_compile_flags(p)
    p.set_defaults(handler=commands.cmd_count)

    p = sub.add_parser('compile', help='compile a DIMACS file to decision-DNNF')
    p.add_argument('input', metavar='FILE')
    p.add_argument('-o', '--output', metavar='PATH', required=True)
    p.add_argument('--no-cache', dest='cache', action='store_false')
    _add_compile_flags(p)
    p.set_defaults(handler=commands.cmd_compile)

    p = sub.add_parser('check', help='check decomposability and determinism of an NNF file')
    p.add_argument('input', metavar='FILE')
    p.add_argument('--deterministic', action='store_true', help='also require determinism')
    p.set_defaults(handler=commands.cmd_check)

    p = sub.add_parser('forget', help='existentially quantify variables out of an NNF file')
    p.add_argument('input', metavar='FILE')
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--vars', metavar='LIST', help='comma-separated variable indices')
    group.add_argument('--keep', type=int, metavar='N', help='keep variables 1..N, forget the rest')
    p.add_argument('-o', '--output', metavar='PATH', required=True)
    p.set_defaults(handler=commands.cmd_forget)

    p = sub.add_parser('rectcover', help='minimum balanced rectangle cover of a small function')
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument('--truth-table', metavar='FILE')
    source.add_argument('--matrix', metavar='FILE', help='characteristic function of the code')
    source.add_argument('--random', nargs=2, type=_non_negative, metavar=('M', 'N'),
                        help='characteristic function of a sampled M x N code (needs --seed)')
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--beta', default=None, help='balance, e.g. 1/3 (default: CODEWIDTH_DEFAULT_BETA)')
    p.add_argument('--verify', metavar='COVER', help='verify a cover file instead of searching')
    p.set_defaults(handler=commands.cmd_rectcover)

    p = sub.add_parser('experiment', help='run a scaling experiment grid')
    p.add_argument('grid', metavar='GRID.toml')
    p.add_argument('-o', '--output', metavar='PATH', help='report path (default: stdout)')
    p.add_argument('--csv', metavar='PATH', help='also write the rows as CSV')
    p.add_argument('--workers', type=_positive, default=None)
    p.add_argument('--no-timing', dest='timing', action='store_false',
                   help='omit the wall-time section')
    p.set_defaults(handler=commands.cmd_experiment)

    return parser
