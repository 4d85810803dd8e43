# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""
Small named graphs used by the command line and the test-suite.
Each entry lists the vertex names in index order and the edges by name.
"""
from nacrig.exceptions import ContractError
from nacrig.graphs.graph import Graph

_letters = list('abcdefg')

FIXTURES = {
    'C4': (['0', '1', '2', '3'],
           '0 1, 1 2, 2 3, 0 3'),
    'K4': (['0', '1', '2', '3'],
           '0 1, 0 2, 0 3, 1 2, 1 3, 2 3'),
    'K23': (['x1', 'x2', 'y1', 'y2', 'y3'],
            'x1 y1, x1 y2, x1 y3, x2 y1, x2 y2, x2 y3'),
    'K33': (['x1', 'x2', 'x3', 'y1', 'y2', 'y3'],
            'x1 y1, x1 y2, x1 y3, x2 y1, x2 y2, x2 y3, '
            'x3 y1, x3 y2, x3 y3'),
    'STAR3': (['c', 'l1', 'l2', 'l3'],
              'c l1, c l2, c l3'),
    'PRISM': (_letters[:6],
              'a b, b c, c a, d e, e f, f d, a d, b e, c f'),
    'FIG2L': (_letters[:6],
              'a b, a c, a d, a e, b c, b d, b e, c d, c e, d e, c f'),
    'FIG2R': (_letters[:6],
              'a b, a c, a d, a e, b c, b d, b e, c e, d e, d f, c f'),
    'FIG8L': (_letters,
              'a b, a d, a e, b c, b e, c d, c e, c f, d f, e f, g a, g d'),
    'FIG8R': (_letters,
              'a d, a e, b c, b e, c d, c e, c f, d f, e f, g a, g b, g d'),
    'FIG9': (_letters,
             'a b, b c, a c, d e, d f, e f, a d, c f, b e, b g, g e'),
    'FIG12': (['a1', 'a2', 'a3', 'a4', 'a5', 'a6',
               'i1', 'i2', 'i3', 'i4', 'i5', 'i6'],
              'a1 a2, a2 a3, a3 a4, a4 a5, a1 i5, i5 a2, a2 i6, i6 a3, '
              'a3 i1, i1 a4, a4 i2, i2 a5, i2 i5, '
              'a5 a6, a6 a1, a5 i3, i3 a6, a6 i4, i4 a1, i3 i6, i4 i1'),
    # Two triangles rotating around a third one.
    'ROTGRAPH': ([str(i) for i in range(1, 10)],
                 '1 4, 4 5, 5 1, 3 6, 6 7, 7 3, 2 8, 8 9, 9 2, '
                 '1 2, 2 3, 3 1, 9 4, 5 6, 7 8'),
}


def graph_from_names(names, pairs):
    index = {name: i for i, name in enumerate(names)}
    return Graph(len(names), [(index[u], index[v]) for u, v in pairs],
                 labels=names)


def load_fixture(name):
    """
    Returns the bundled graph called `name` (case insensitive).
    """
    key = name.upper()
    if key not in FIXTURES:
        raise ContractError('Unknown fixture {!r}, available: {}'
                            .format(name, ', '.join(sorted(FIXTURES))))
    names, edges = FIXTURES[key]
    pairs = [tuple(e.split()) for e in edges.split(',')]
    return graph_from_names(names, pairs)
