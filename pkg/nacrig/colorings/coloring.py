# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
import logging
from enum import Enum
from typing import NamedTuple, Optional, Tuple

import networkx as nx

from nacrig.exceptions import ContractError, GraphParseError
from nacrig.graphs.graph import connected_components, normalize_edge

logger = logging.getLogger(__name__)


class Color(str, Enum):
    RED = 'red'
    BLUE = 'blue'

    @classmethod
    def parse(cls, value):
        if isinstance(value, Color):
            return value
        value = str(value).lower()
        if value in ('r', 'red'):
            return cls.RED
        if value in ('b', 'blue'):
            return cls.BLUE
        raise ValueError(f'Unknown color {value!r}')

    @property
    def short(self):
        return self.value[0]

    def swapped(self):
        return Color.BLUE if self is Color.RED else Color.RED


class EdgeColoring(object):
    """
    Red/blue assignment defined on exactly the edges of a graph.
    """
    def __init__(self, graph, colors):
        norm = {}
        for edge, color in dict(colors).items():
            norm[normalize_edge(*edge)] = Color.parse(color)
        if set(norm) != set(graph.edges):
            missing = sorted(set(graph.edges) - set(norm))
            extra = sorted(set(norm) - set(graph.edges))
            raise ContractError('Coloring domain differs from the edge set: '
                                'missing {}, unknown {}'.format(missing, extra))
        self.graph = graph
        self._colors = tuple(norm[e] for e in graph.edges)

    @classmethod
    def from_red_edges(cls, graph, red_edges):
        red = {normalize_edge(*e) for e in red_edges}
        return cls(graph, {e: Color.RED if e in red else Color.BLUE
                           for e in graph.edges})

    def color(self, u, v):
        return self._colors[self.graph.edges.index(normalize_edge(u, v))]

    def items(self):
        return zip(self.graph.edges, self._colors)

    @property
    def red_edges(self):
        return tuple(e for e, c in self.items() if c is Color.RED)

    @property
    def blue_edges(self):
        return tuple(e for e, c in self.items() if c is Color.BLUE)

    def is_surjective(self):
        return Color.RED in self._colors and Color.BLUE in self._colors

    def swapped(self):
        return EdgeColoring(self.graph, {e: c.swapped()
                                         for e, c in self.items()})

    def to_json(self):
        return {'red': [list(e) for e in self.red_edges],
                'blue': [list(e) for e in self.blue_edges]}

    def _key(self):
        return self.graph, self._colors

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return '{}(red={}, blue={})'.format(type(self).__name__,
                                            list(self.red_edges),
                                            list(self.blue_edges))


class NacVerdict(NamedTuple):
    """
    Outcome of `is_nac`. On failure, `reason` is 'not surjective' or names
    an almost monochromatic cycle given as a closed vertex walk `cycle`
    whose only off-color edge is `off_edge`.
    """
    ok: bool
    reason: Optional[str] = None
    cycle: Optional[Tuple[int, ...]] = None
    off_edge: Optional[Tuple[int, int]] = None

    def __bool__(self):
        return self.ok

    def describe(self):
        if self.ok:
            return 'NAC-coloring'
        if self.cycle is None:
            return self.reason
        return '{} through {} with off-color edge {}'.format(
            self.reason, list(self.cycle), list(self.off_edge))


def _almost_cycle(g, edges, parts, other_edges, reason):
    for u, v in other_edges:
        if parts.same_block(u, v):
            sub = nx.Graph(edges)
            path = nx.shortest_path(sub, u, v)
            return NacVerdict(False, reason, tuple(path), (u, v))
    return None


def _check(g, c):
    if c.graph != g:
        raise ContractError('Coloring is defined on another graph')
    red, blue = c.red_edges, c.blue_edges
    if not red or not blue:
        return NacVerdict(False, 'not surjective'), None, None
    red_parts = connected_components(g, red)
    verdict = _almost_cycle(g, red, red_parts, blue, 'almost red cycle')
    if verdict is not None:
        return verdict, None, None
    blue_parts = connected_components(g, blue)
    verdict = _almost_cycle(g, blue, blue_parts, red, 'almost blue cycle')
    if verdict is not None:
        return verdict, None, None
    return NacVerdict(True), red_parts, blue_parts


def is_nac(g, c):
    """
    Decides whether c is a NAC-coloring of g: it must be surjective and
    every connected component of the red (resp. blue) subgraph must be an
    induced subgraph of g. Runs in linear time.

    :param g: Graph
    :param c: EdgeColoring of g
    :return: NacVerdict with a witness on failure.
    :raises ContractError: If c is not a coloring of the edges of g.
    """
    return _check(g, c)[0]


class NacColoring(EdgeColoring):
    """
    An EdgeColoring validated as NAC, with the vertex partitions of its
    red and blue subgraphs.
    """
    def __init__(self, graph, colors):
        super().__init__(graph, colors)
        verdict, red_parts, blue_parts = _check(graph, self)
        if not verdict:
            raise ContractError('Not a NAC-coloring: ' + verdict.describe())
        self.red_components = red_parts
        self.blue_components = blue_parts

    @classmethod
    def from_coloring(cls, c):
        if isinstance(c, NacColoring):
            return c
        return cls(c.graph, dict(c.items()))

    def swapped(self):
        return NacColoring(self.graph, {e: c.swapped()
                                        for e, c in self.items()})

    def to_json(self):
        res = super().to_json()
        res['redComponents'] = self.red_components.to_list()
        res['blueComponents'] = self.blue_components.to_list()
        return res


def parse_coloring(text, graph):
    """
    Reads "u v r|b" lines (vertex names as in graph.labels, '#' comments).
    """
    colors = {}
    for line_no, line in enumerate(text.splitlines(), 1):
        tokens = line.split('#', 1)[0].split()
        if not tokens:
            continue
        if len(tokens) != 3:
            raise GraphParseError('Expected "u v r|b"', line=line_no)
        try:
            u, v = graph.index_of(tokens[0]), graph.index_of(tokens[1])
            color = Color.parse(tokens[2])
        except ValueError as e:
            raise GraphParseError(str(e), line=line_no) from None
        if not graph.has_edge(u, v):
            raise GraphParseError('{} {} is not an edge'.format(*tokens[:2]),
                                  line=line_no)
        colors[normalize_edge(u, v)] = color
    return EdgeColoring(graph, colors)


def serialize_coloring(c):
    g = c.graph
    return ''.join('{} {} {}\n'.format(g.label(u), g.label(v), color.short)
                   for (u, v), color in c.items())
