# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""
Command line interface.

Exit codes: 0 a flexible labeling exists (or the command succeeded),
1 none exists, 2 error, 3 undecided within the configured bounds.
"""
import argparse
import json
import logging
import os
import sys

import yaml

from nacrig.colorings.coloring import NacColoring, parse_coloring
from nacrig.colorings.search import enumerate_nac, find_nac
from nacrig.config import active_config, build_component, get_config, \
    set_config
from nacrig.exceptions import ContractError, NacRigError
from nacrig.graphs.fixtures import FIXTURES, load_fixture
from nacrig.graphs.io import guess_format, read_graph, serialize_graph6
from nacrig.laman.conjecture import verify_conjecture
from nacrig.motions.construction import default_alphas
from nacrig.motions.export import animated_svg, write_svg_frames
from nacrig.motions.grid import component_grid
from nacrig.reports.analysis import analyze, nac_listing
from nacrig.structure.delta import delta_classes

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NONE = 1
EXIT_ERROR = 2
EXIT_UNKNOWN = 3


def load_input(source, fmt=None):
    """
    Reads a graph from a file, from stdin ('-') or from the bundled
    fixtures. Returns the graph and the name of the format used.
    """
    if source == '-':
        text = sys.stdin.read()
    elif os.path.exists(source):
        with open(source, 'r') as f:
            text = f.read()
    elif source.upper() in FIXTURES and fmt is None:
        return load_fixture(source), 'fixture'
    else:
        raise ContractError(f'No such file or fixture: {source}')
    fmt = fmt or guess_format(text)
    return read_graph(text, fmt), fmt


def _dump(data, output=None):
    text = json.dumps(data, indent=2) + '\n'
    if output:
        with open(output, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _max_colorings(args):
    return None if args.all else -1


def cmd_analyze(args):
    g, fmt = load_input(args.input, args.format)
    report = analyze(g, fmt, max_cut_size=args.max_cut_size,
                     up_to_swap=args.up_to_swap,
                     max_colorings=_max_colorings(args))
    _dump(report.to_json(), args.output)
    return report.exit_code


def cmd_nac(args):
    g, _ = load_input(args.input, args.format)
    schema = active_config()['report']['schema']
    n_classes = len(delta_classes(g).classes)
    max_classes = active_config()['nac']['max_classes']
    if n_classes > max_classes:
        logger.warning(f'{n_classes} triangle classes exceed nac.max_classes '
                       f'= {max_classes}, not enumerating')
        _dump({'schema': schema, 'graph6': serialize_graph6(g),
               'exists': None, 'count': None, 'upToSwap': args.up_to_swap,
               'truncated': True, 'colorings': []}, args.output)
        return EXIT_UNKNOWN
    colorings = enumerate_nac(g, up_to_swap=args.up_to_swap)
    listing = nac_listing(colorings, args.up_to_swap, None if args.all else
                          active_config()['report']['max_colorings'])
    listing = dict(schema=schema, graph6=serialize_graph6(g), **listing)
    _dump(listing, args.output)
    return EXIT_OK if colorings else EXIT_NONE


def _load_coloring(g, path):
    with open(path, 'r') as f:
        return NacColoring.from_coloring(parse_coloring(f.read(), g))


def cmd_flex(args):
    g, _ = load_input(args.input, args.format)
    motion_config = active_config()['motion']
    mode = args.mode or motion_config['construction']['_name']
    n_frames = args.frames or motion_config['n_frames']

    if mode == '3d':
        if args.pair:
            # A bad pair is a usage error, left to main.
            pair = tuple(g.index_of(name) for name in args.pair)
            construction = build_component({'_name': '3d'}, graph=g,
                                           pair=pair)
        else:
            try:
                construction = build_component({'_name': '3d'}, graph=g)
            except ContractError as e:
                print(f'nacrig: {e}', file=sys.stderr)
                return EXIT_NONE
    else:
        if args.auto or args.coloring in (None, 'auto'):
            coloring = find_nac(g)
            if coloring is None:
                print('nacrig: the graph has no NAC-coloring', file=sys.stderr)
                return EXIT_NONE
        else:
            coloring = _load_coloring(g, args.coloring)
        config = dict(motion_config['construction'], _name=mode)
        construction = build_component(config,
                                       assignment=component_grid(g, coloring))

    motion = construction(default_alphas(n_frames))
    if not motion.validate():
        logger.warning('The constructed motion failed validation')

    if args.out == 'json':
        _dump(motion.to_json(), args.output)
    elif args.animate:
        output = args.output or 'motion.svg'
        with open(output, 'w') as f:
            f.write(animated_svg(motion))
    else:
        write_svg_frames(motion, args.output or '.', stem=args.stem)
    return EXIT_OK


def cmd_verify(args):
    max_n = args.max_n or active_config()['laman']['max_n']
    report = verify_conjecture(max_n, checkpoint=args.checkpoint,
                               progress=not args.no_progress)
    data = report.to_json()
    _dump(data)
    _dump(data, args.output)
    return EXIT_OK if report.ok else EXIT_NONE


def _add_input(parser):
    parser.add_argument('input', help='graph file, "-" for stdin or the '
                                      'name of a bundled graph')
    parser.add_argument('--format', choices=['graph6', 'edges'],
                        default=None, help='input format (guessed if absent)')


def get_parser():
    parser = argparse.ArgumentParser(
        prog='nacrig',
        description='NAC-colorings, flexible labelings and their motions.')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    parser.add_argument('--config', default=None,
                        help='YAML file overriding the default configuration')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    analyze_parser = sub.add_parser('analyze', help='decide flexibility')
    _add_input(analyze_parser)
    analyze_parser.add_argument('--max-cut-size', type=int, default=None)
    analyze_parser.add_argument('--up-to-swap', action='store_true')
    analyze_parser.add_argument('--all', action='store_true',
                                help='list every NAC-coloring')
    analyze_parser.add_argument('--output', default=None)
    analyze_parser.set_defaults(func=cmd_analyze)

    nac_parser = sub.add_parser('nac', help='list NAC-colorings')
    _add_input(nac_parser)
    nac_parser.add_argument('--up-to-swap', action='store_true')
    nac_parser.add_argument('--all', action='store_true')
    nac_parser.add_argument('--output', default=None)
    nac_parser.set_defaults(func=cmd_nac)

    flex_parser = sub.add_parser('flex', help='build a motion')
    _add_input(flex_parser)
    flex_parser.add_argument('--coloring', default=None,
                             help='"u v r|b" coloring file or "auto"')
    flex_parser.add_argument('--auto', action='store_true',
                             help='use the first NAC-coloring found')
    flex_parser.add_argument('--mode', choices=['grid', 'zigzag', '3d'],
                             default=None)
    flex_parser.add_argument('--pair', nargs=2, default=None,
                             metavar=('U', 'V'),
                             help='non-adjacent pair flexed in 3d mode')
    flex_parser.add_argument('--frames', type=int, default=None)
    flex_parser.add_argument('--out', choices=['json', 'svg'],
                             default='json')
    flex_parser.add_argument('--animate', action='store_true',
                             help='single SMIL-animated SVG file')
    flex_parser.add_argument('--output', default=None,
                             help='output file, or directory of SVG frames')
    flex_parser.add_argument('--stem', default='frame')
    flex_parser.set_defaults(func=cmd_flex)

    verify_parser = sub.add_parser('verify', help='sweep small Laman graphs')
    verify_parser.add_argument('--max-n', type=int, default=None)
    verify_parser.add_argument('--checkpoint', default=None)
    verify_parser.add_argument('--output', default='nacrig-verify.json')
    verify_parser.add_argument('--no-progress', action='store_true')
    verify_parser.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = get_parser().parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level,
                        format='%(levelname)s:%(name)s:%(message)s')
    try:
        set_config(get_config(args.config))
        return args.func(args)
    except (NacRigError, OSError, ValueError, yaml.YAMLError) as e:
        print(f'nacrig: error: {e}', file=sys.stderr)
        return EXIT_ERROR
    finally:
        set_config(None)


if __name__ == '__main__':
    sys.exit(main())
