import argparse
import logging
import sys

from ast_visualize import draw
from classes.block_sum import gap_profile
from classes.exceptions import OrderTypeError
from classes.normalizer import iso_check, normalize
from classes.order_term import Rj4Ref, ZSumRef
from classes.parser import parse, parse_sequence, render
from classes.scattered import cut_types, end_data, spectrum
from classes.sequences import flatten_check, label, tail_equiv, tail_equiv2
from classes.verification import Config, verify_all
from config import (
    DEFAULT_ALPHABET_BOUND, DEFAULT_FLATTEN_SAMPLES, DEFAULT_LAW_SAMPLES, DEFAULT_PAIR_RANGE, DEFAULT_RANGE_I, DEFAULT_SEED,
    LOG_FORMAT, SPECTRUM_PREFIX_LENGTH,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _rj4_operand(text):
    term = normalize(parse(text))
    if not isinstance(term, Rj4Ref):
        raise UsageError(f'{render(term)} is not an RJ4 order')
    return term.schema


def run_parse(args):
    term = parse(args.expression)
    print(repr(term))
    return EXIT_OK


def run_normalize(args):
    print(render(normalize(parse(args.expression))))
    return EXIT_OK


def run_iso(args):
    print(iso_check(parse(args.first), parse(args.second)))
    return EXIT_OK


def run_spectrum(args):
    if args.length < 1:
        raise UsageError(f'--length must be positive, got {args.length}')
    values = spectrum(_rj4_operand(args.expression)).expand(args.length)
    print(', '.join(map(str, values)))
    return EXIT_OK


def run_cuts(args):
    term = normalize(parse(args.expression))
    if isinstance(term, Rj4Ref):
        ends = end_data(term.schema)
        print('cut types:', ', '.join(sorted(map(str, cut_types(term.schema)))))
        print(f'end data: ({ends.coinitiality}, {ends.cofinality})')
    elif isinstance(term, ZSumRef):
        profile = gap_profile(term.schema)
        print('cut types inside blocks:', ', '.join(sorted(map(str, profile.interior))))
        print(f'block boundaries: {profile.boundary}')
    else:
        raise UsageError(f'no cut analysis for {render(term)}')
    return EXIT_OK


def run_tail_equiv(args):
    u, v = parse_sequence(args.first), parse_sequence(args.second)
    relation = tail_equiv2 if args.mod2 else tail_equiv
    print(str(relation(u, v)).lower())
    return EXIT_OK


def run_label(args):
    print(label(parse_sequence(args.sequence)).value)
    return EXIT_OK


def run_flatten_demo(args):
    if args.alphabet < 2:
        raise UsageError(f'--alphabet must be at least 2, got {args.alphabet}')
    if args.samples < 1:
        raise UsageError(f'--samples must be positive, got {args.samples}')
    report = flatten_check(args.alphabet, args.samples, args.seed)
    for key, value in report.as_record().items():
        print(f'{key}: {value}')
    return EXIT_OK if report.passed else EXIT_FAILED


def run_verify(args):
    cfg = Config(range_i=tuple(args.range), pair_range=tuple(args.pairs), law_samples=args.samples,
                 flatten_samples=args.samples, seed=args.seed)
    report = verify_all(cfg)
    if args.json:
        print(report.to_json())
    elif args.table:
        print(report.to_frame().reset_index().to_string(index=False))
    else:
        print(report.to_text())
    return EXIT_OK if report.passed else EXIT_FAILED


def run_draw(args):
    term = parse(args.expression)
    draw(term, args.output, label=render(term))
    print(f'Wrote {args.output}')
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        description='Calculator and verifier for order types under the lexicographic product',
        fromfile_prefix_chars='@')
    parser.add_argument('-v', '--verbose', action='store_true', help='Log rewriting and check progress')
    commands = parser.add_subparsers(dest='command', required=True)

    command = commands.add_parser('parse', help='Print the syntax tree of an expression')
    command.add_argument('expression')
    command.set_defaults(handler=run_parse)

    command = commands.add_parser('normalize', help='Rewrite an expression to normal form')
    command.add_argument('expression')
    command.set_defaults(handler=run_normalize)

    command = commands.add_parser('iso', help='Decide isomorphism of two expressions when a criterion applies')
    command.add_argument('first')
    command.add_argument('second')
    command.set_defaults(handler=run_iso)

    command = commands.add_parser('spectrum', help='Expanded spectrum of an RJ4 order such as L(0)')
    command.add_argument('expression')
    command.add_argument('--length', type=int, default=SPECTRUM_PREFIX_LENGTH)
    command.set_defaults(handler=run_spectrum)

    command = commands.add_parser('cuts', help='Cut types of an RJ4 order or gap profile of a block sum')
    command.add_argument('expression')
    command.set_defaults(handler=run_cuts)

    command = commands.add_parser('tail-equiv', help='Tail-equivalence of two eventually periodic sequences')
    command.add_argument('first')
    command.add_argument('second')
    command.add_argument('--mod2', action='store_true', help='Require deleted prefixes of equal parity')
    command.set_defaults(handler=run_tail_equiv)

    command = commands.add_parser('label', help='Label (even, odd or full) of a sequence')
    command.add_argument('sequence')
    command.set_defaults(handler=run_label)

    command = commands.add_parser('flatten-demo', help='Sampled check of the flattening map')
    command.add_argument('--alphabet', type=int, default=DEFAULT_ALPHABET_BOUND)
    command.add_argument('--samples', type=int, default=DEFAULT_FLATTEN_SAMPLES)
    command.add_argument('--seed', type=int, default=DEFAULT_SEED)
    command.set_defaults(handler=run_flatten_demo)

    command = commands.add_parser('verify', help='Replay every check of the construction')
    command.add_argument('--range', nargs=2, type=int, default=DEFAULT_RANGE_I, metavar=('A', 'B'))
    command.add_argument('--pairs', nargs=2, type=int, default=DEFAULT_PAIR_RANGE, metavar=('A', 'B'))
    command.add_argument('--samples', type=int, default=DEFAULT_LAW_SAMPLES,
                         help='Sample count of the law suite and the flattening check')
    command.add_argument('--seed', type=int, default=DEFAULT_SEED)
    command.add_argument('--json', action='store_true', help='Emit the report as JSON')
    command.add_argument('--table', action='store_true', help='Emit the report as a table')
    command.set_defaults(handler=run_verify)

    command = commands.add_parser('draw', help='Write the graphviz source of an expression tree')
    command.add_argument('expression')
    command.add_argument('--output', default='term.gv')
    command.set_defaults(handler=run_draw)
    return parser


def cli_dispatch(argv):
    """
    Runs one subcommand
    :return: exit status: 0 success, 1 failed verification, 2 usage or expression error
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format=LOG_FORMAT)
    logger.debug('Running %s', args.command)

    try:
        return args.handler(args)
    except (OrderTypeError, UsageError) as e:
        # Handle malformed expressions, sequences and configurations
        print(str(e).strip(), file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(cli_dispatch(sys.argv[1:]))
