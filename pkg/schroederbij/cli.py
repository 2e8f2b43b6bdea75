#!/usr/bin/env python
# -*- coding: utf-8 -*-

# The MIT License (MIT)
# Copyright (c) 2026 The schroederbij developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
# MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
# IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM,
# DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR
# OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE
# OR OTHER DEALINGS IN THE SOFTWARE.

__all__ = ['main', 'build_parser', 'MAPS']

__docformat__ = 'restructuredtext'

from . import __version__
from .bijections.paths import (phi, phi_inv, big_phi, big_phi_inv, psi, psi_inv, big_psi,
                               big_psi_inv)
from .bijections.trees import rho, rho_inv, path_to_tree, tree_to_path
from .errors import SchroederError, TreeError, PathError, VerificationFailure
from .helpers import parse_bits, parse_trits, format_digits, compare_with_bfile
from .structures.paths import (parse_path, render_path, enumerate_words, hill_triangle,
                               swap_h0_hills)
from .structures.permutations import enumerate_separable, iar_triangle
from .structures.riordan import uv_triangle, specialize
from .structures.trees import parse_tree, render_tree, enumerate_trees, tau, first_minus_index
from .verifications.suites import SUITES, SUITE_ALIASES, get_suite
from argparse import ArgumentParser
import json
import logging
import sys

log = logging.getLogger('schroederbij')

FORMAT = '%(asctime)-15s | %(levelname)-8s | %(message)s'

# name: (inputs, forward, inverse given the parsed inputs and the image)
MAPS = {
    'phi': (('path', 'b'), lambda a: phi(a['path'], a['b']),
            lambda a, x: phi_inv(x) == (a['path'], a['b'])),
    'phi-inv': (('path',), lambda a: phi_inv(a['path']),
                lambda a, x: phi(*x) == a['path']),
    'Phi': (('path', 'b', 'k'), lambda a: big_phi(a['path'], a['b'], a['k']),
            lambda a, x: big_phi_inv(x) == (a['path'], a['b'])),
    'Phi-inv': (('path',), lambda a: big_phi_inv(a['path']),
                lambda a, x: big_phi(*x, a['path'].hills) == a['path']),
    'psi': (('path', 't'), lambda a: psi(a['path'], a['t']),
            lambda a, x: psi_inv(x) == (a['path'], a['t'])),
    'psi-inv': (('path',), lambda a: psi_inv(a['path']),
                lambda a, x: psi(*x) == a['path']),
    'Psi': (('path', 't', 'k'), lambda a: big_psi(a['path'], a['t'], a['k']),
            lambda a, x: big_psi_inv(x) == (a['path'], a['t'])),
    'Psi-inv': (('path',), lambda a: big_psi_inv(a['path']),
                lambda a, x: big_psi(*x, a['path'].hills) == a['path']),
    'rho': (('tree', 'b', 'k'), lambda a: rho(a['tree'], a['b'], a['k']),
            lambda a, x: rho_inv(x) == (a['tree'], a['b'])),
    'rho-inv': (('tree',), lambda a: rho_inv(a['tree']),
                lambda a, x: rho(*x, first_minus_index(a['tree'])) == a['tree']),
    'tau': (('tree',), lambda a: tau(a['tree']),
            lambda a, x: tau(x) == a['tree']),
    'swap': (('path',), lambda a: swap_h0_hills(a['path']),
             lambda a, x: swap_h0_hills(x) == a['path']),
    'path-to-tree': (('path',), lambda a: path_to_tree(a['path']),
                     lambda a, x: tree_to_path(x) == a['path']),
    'tree-to-path': (('tree',), lambda a: tree_to_path(a['tree']),
                     lambda a, x: path_to_tree(x) == a['tree']),
}

ENUMERATIONS = {'paths': 'all', 'little': 'little', 'hillfree': 'hill_free'}


def build_parser():
    """build_parser

    Argument parser with the subcommands ``triangle``, ``map``, ``verify``
    and ``enumerate``.

    """
    parser = ArgumentParser(prog='schroederbij',
                            description='Hill statistics on Schröder paths, their '
                                        'bijections, di-sk trees and separable '
                                        'permutations.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('-q', '--quiet', action='store_true',
                        help='only log warnings and errors')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('triangle', help='emit a triangle')
    p.add_argument('--kind', choices=['hills', 'littlehills', 'uv', 'iar'], default='hills')
    p.add_argument('--rows', type=int, required=True, help='number of rows, >= 1')
    p.add_argument('--u', type=int, help='specialize u (uv only)')
    p.add_argument('--v', type=int, help='specialize v (uv only)')
    p.add_argument('--format', choices=['json', 'csv', 'md'], default='json')
    p.add_argument('--bfile', help='compare the row sums with a local b-file')

    p = sub.add_parser('map', help='apply a bijection')
    p.add_argument('name', choices=list(MAPS))
    p.add_argument('--path', help='path word over U, D, H')
    p.add_argument('--tree', help='tree as (label left right) with . for empty')
    p.add_argument('--b', default='', help='bit string')
    p.add_argument('--t', default='', help='trit string')
    p.add_argument('--k', type=int, help='hills or first - index of the image')
    p.add_argument('--roundtrip', action='store_true',
                   help='apply the inverse and print OK or FAIL')

    p = sub.add_parser('verify', help='run verification suites')
    p.add_argument('--suite', choices=list(SUITES) + list(SUITE_ALIASES) + ['all'],
                   required=True)
    p.add_argument('--n', type=int, help='bound, defaults per suite')
    p.add_argument('--format', choices=['text', 'json'], default='text')
    p.add_argument('--cache-dir', default='./')
    p.add_argument('--save', action='store_true', help='cache reports as JSON')
    p.add_argument('--force-recalc', action='store_true')
    p.add_argument('--no-progress', action='store_true')
    p.add_argument('--jobs', type=int, default=1, help='dask workers, 1 runs sequentially')

    p = sub.add_parser('enumerate', help='list objects one per line')
    p.add_argument('--kind', choices=list(ENUMERATIONS) + ['trees', 'separable'],
                   required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--count', action='store_true', help='print only the total')
    return parser


def _emit(text):
    sys.stdout.write(text + '\n')


def cmd_triangle(parser, args):
    if args.rows < 1:
        parser.error('--rows must be >= 1')
    if (args.u is None) != (args.v is None):
        parser.error('--u and --v must be given together')
    if args.u is not None and args.kind != 'uv':
        parser.error('--u and --v only apply to --kind uv')
    if args.kind == 'hills':
        tri = hill_triangle(args.rows - 1)
    elif args.kind == 'littlehills':
        tri = hill_triangle(args.rows - 1, 'little')
    elif args.kind == 'iar':
        tri = iar_triangle(args.rows)
    else:
        tri = uv_triangle(args.rows - 1)
        if args.u is not None:
            tri = specialize(tri, args.u, args.v)
    if args.format == 'csv':
        _emit(tri.to_csv())
    elif args.format == 'md':
        _emit(tri.to_markdown())
    else:
        _emit(tri.to_json())
    if args.bfile:
        sums = tri.row_sums()
        if not all(isinstance(s, int) for s in sums):
            parser.error('--bfile needs integer row sums')
        try:
            report = compare_with_bfile(sums, args.bfile)
        except (OSError, ValueError) as e:
            parser.error('cannot read --bfile: {:s}'.format(str(e)))
        log.info(str(report))
        if not report.ok:
            log.error(report.failure_message())
            return 1
    return 0


def _parse_map_inputs(parser, args, inputs):
    parsed = {}
    try:
        for name in inputs:
            if name == 'path':
                if args.path is None:
                    parser.error('map {:s} needs --path'.format(args.name))
                parsed['path'] = parse_path(args.path)
            elif name == 'tree':
                if args.tree is None:
                    parser.error('map {:s} needs --tree'.format(args.name))
                parsed['tree'] = parse_tree(args.tree)
            elif name == 'b':
                parsed['b'] = parse_bits(args.b)
            elif name == 't':
                parsed['t'] = parse_trits(args.t)
            elif name == 'k':
                if args.k is None:
                    parser.error('map {:s} needs --k'.format(args.name))
                parsed['k'] = args.k
    except (PathError, TreeError, ValueError) as e:
        parser.error('malformed input: {:s}: {:s}'.format(type(e).__name__, str(e)))
    return parsed


def _render(image):
    if isinstance(image, tuple):
        obj, digits = image
        return '{:s} {:s}'.format(_render(obj), format_digits(digits) or '-')
    if hasattr(image, 'word'):
        return render_path(image)
    return render_tree(image)


def cmd_map(parser, args):
    inputs, forward, inverse = MAPS[args.name]
    parsed = _parse_map_inputs(parser, args, inputs)
    image = forward(parsed)
    _emit(_render(image))
    if args.roundtrip:
        ok = inverse(parsed, image)
        _emit('OK' if ok else 'FAIL')
        return 0 if ok else 1
    return 0


def cmd_verify(parser, args):
    names = list(SUITES) if args.suite == 'all' else [args.suite]
    client = None
    if args.jobs > 1:
        from dask.distributed import Client
        client = Client(n_workers=args.jobs)
    elif args.jobs < 1:
        parser.error('--jobs must be >= 1')
    try:
        reports = []
        for name in names:
            try:
                suite = get_suite(name, force_recalc=args.force_recalc, save_data=args.save,
                                  cache_dir=args.cache_dir, disp_messages=not args.quiet,
                                  progress_bar=not (args.no_progress or args.quiet),
                                  dask_client=client)
                n = suite.check_n(args.n)
            except (TypeError, ValueError) as e:
                parser.error(str(e))
            reports.append(suite.get_report(n))
    finally:
        if client is not None:
            client.close()
    if args.format == 'json':
        _emit(json.dumps([r.to_dict() for r in reports], indent=1, sort_keys=True))
    else:
        _emit('\n\n'.join(str(r) for r in reports))
    failed = [r for r in reports if not r.ok]
    for r in failed:
        log.error(r.failure_message())
    return 1 if failed else 0


def cmd_enumerate(parser, args):
    if args.n < 0 or (args.kind in ('trees', 'separable') and args.n < 1):
        parser.error('--n is out of range for --kind {:s}'.format(args.kind))
    if args.kind == 'trees':
        items = (render_tree(t) for t in enumerate_trees(args.n))
    elif args.kind == 'separable':
        items = (str(pi) for pi in enumerate_separable(args.n))
    else:
        items = enumerate_words(args.n, ENUMERATIONS[args.kind])
    if args.count:
        _emit(str(sum(1 for _ in items)))
    else:
        for item in items:
            _emit(item)
    return 0


COMMANDS = {'triangle': cmd_triangle, 'map': cmd_map, 'verify': cmd_verify,
            'enumerate': cmd_enumerate}


def main(argv=None):
    """main

    Entry point of the ``schroederbij`` console script.

    Args:
        argv (list[str], optional): arguments, defaults to ``sys.argv[1:]``.

    Returns:
        status (int): 0 on success, 1 on a failed verification or a
        violated precondition. Usage errors exit with status 2.

    """
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(format=FORMAT, stream=sys.stderr,
                        level=logging.WARNING if args.quiet else logging.INFO)
    try:
        return COMMANDS[args.command](parser, args)
    except SchroederError as e:
        log.error('{:s}: {:s}'.format(type(e).__name__, str(e)))
        return 1
    except VerificationFailure as e:
        log.error(str(e))
        return 1


if __name__ == '__main__':
    sys.exit(main())
