# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
import logging
from itertools import combinations
from typing import NamedTuple, Optional, Tuple

from nacrig.commons.parallel import ordered_map
from nacrig.commons.tree import Tree
from nacrig.config import get_setting
from nacrig.exceptions import CapacityError, ContractError
from nacrig.graphs.canonical import CanonicalCode, canonical_labeling
from nacrig.graphs.graph import Graph, normalize_edge
from nacrig.graphs.io import parse_graph6
from nacrig.laman.pebble import is_laman

logger = logging.getLogger(__name__)

TYPE_ONE = ('Ia', 'Ib')
TYPE_TWO = ('IIa', 'IIb', 'IIc')


class HennebergMove(NamedTuple):
    """
    Adds `new_vertex` to a graph.

    Type I joins it to the two `attach` vertices (u, u'), Ia when uu' is an
    edge and Ib otherwise. Type II joins it to (u, u1, u2) and removes the
    edge u1u2; the sub-kind a/b/c counts how many of uu1, uu2 are edges.
    """
    kind: str
    new_vertex: int
    attach: Tuple[int, ...]
    removed_edge: Optional[Tuple[int, int]] = None

    @classmethod
    def type_one(cls, g, u, w):
        kind = 'Ia' if g.has_edge(u, w) else 'Ib'
        return cls(kind, g.vertex_count, (u, w))

    @classmethod
    def type_two(cls, g, u, u1, u2):
        count = int(g.has_edge(u, u1)) + int(g.has_edge(u, u2))
        return cls(TYPE_TWO[count], g.vertex_count, (u, u1, u2),
                   normalize_edge(u1, u2))

    def relabel(self, order):
        """
        The same move expressed on the graph whose vertex order[k] is the
        vertex k this move refers to.
        """
        attach = tuple(order[v] for v in self.attach)
        removed = None
        if self.removed_edge is not None:
            removed = normalize_edge(*(order[v] for v in self.removed_edge))
        return HennebergMove(self.kind, len(order), attach, removed)

    def to_json(self):
        return {'kind': self.kind, 'newVertex': self.new_vertex,
                'attach': list(self.attach),
                'removedEdge': None if self.removed_edge is None
                else list(self.removed_edge)}


def apply_henneberg(g, m):
    """
    Applies the Henneberg move m to g.

    :raises ContractError: If the move does not fit g (unknown vertex,
        wrong new vertex index, or a kind contradicting the adjacencies).
    """
    n = g.vertex_count
    if m.new_vertex != n:
        raise ContractError(f'New vertex must be {n}, got {m.new_vertex}')
    if len(set(m.attach)) != len(m.attach) \
            or any(not 0 <= v < n for v in m.attach):
        raise ContractError(f'Invalid attach vertices {m.attach}')

    if m.kind in TYPE_ONE:
        if len(m.attach) != 2:
            raise ContractError(f'Move {m.kind} attaches to two vertices')
        u, w = m.attach
        if g.has_edge(u, w) != (m.kind == 'Ia'):
            raise ContractError('Move {} needs {}{} to be {}'.format(
                m.kind, g.label(u), g.label(w),
                'an edge' if m.kind == 'Ia' else 'a non-edge'))
        edges = list(g.edges) + [(u, n), (w, n)]
    elif m.kind in TYPE_TWO:
        if len(m.attach) != 3:
            raise ContractError(f'Move {m.kind} attaches to three vertices')
        u, u1, u2 = m.attach
        removed = normalize_edge(u1, u2)
        if not g.has_edge(u1, u2):
            raise ContractError('Move {} removes {}{} which is not an edge'
                                .format(m.kind, g.label(u1), g.label(u2)))
        if m.removed_edge is not None and \
                normalize_edge(*m.removed_edge) != removed:
            raise ContractError(f'Removed edge {m.removed_edge} is not '
                                f'{removed}')
        count = int(g.has_edge(u, u1)) + int(g.has_edge(u, u2))
        if TYPE_TWO[count] != m.kind:
            raise ContractError('Move {} requested but the attach vertices '
                                'give {}'.format(m.kind, TYPE_TWO[count]))
        edges = [e for e in g.edges if e != removed]
        edges += [(u, n), (u1, n), (u2, n)]
    else:
        raise ContractError(f'Unknown Henneberg move {m.kind!r}')

    res = Graph(n + 1, edges)
    if logger.isEnabledFor(logging.DEBUG):
        assert not is_laman(g) or is_laman(res), (g, m)
    return res


def moves_from(g):
    """
    All Henneberg moves applicable to g, in a fixed order.
    """
    for u, w in combinations(g.vertices, 2):
        yield HennebergMove.type_one(g, u, w)
    for u1, u2 in g.edges:
        for u in g.vertices:
            if u != u1 and u != u2:
                yield HennebergMove.type_two(g, u, u1, u2)


def _expand(code):
    """
    Isomorphism classes reachable from the graph with canonical code
    `code` by one move, each with the first move reaching it.
    """
    g = parse_graph6(code)
    children = {}
    for move in moves_from(g):
        child, _ = canonical_labeling(apply_henneberg(g, move))
        children.setdefault(child.code, move)
    return list(children.items())


class HennebergTree(Tree):
    """
    Isomorphism classes of Laman graphs organised by Henneberg moves.

    Nodes are CanonicalCode objects, the root is the single edge and every
    arc parent -> child carries a move turning the canonical graph of the
    parent into a graph isomorphic to the child. Levels are built
    breadth-first on demand.
    """
    def __init__(self, max_n=None, n_threads=None):
        if max_n is None:
            max_n = get_setting('laman', 'max_n')
        self.max_n = max_n
        self.n_threads = n_threads
        self.levels = {}
        super().__init__()

    def build_tree(self):
        root = canonical_labeling(Graph(2, [(0, 1)]))[0]
        self.add_node(root, n=2)
        self.levels[2] = [root]
        return root

    def grow(self, n):
        if n > self.max_n:
            raise CapacityError(f'Laman enumeration is capped at '
                                f'{self.max_n} vertices, {n} requested')
        while max(self.levels) < n:
            self._expand_level()

    def _expand_level(self):
        k = max(self.levels)
        parents = self.levels[k]
        new_nodes = []
        expansions = ordered_map(_expand, [p.code for p in parents],
                                 n_threads=self.n_threads, chunksize=4)
        for parent, children in zip(parents, expansions):
            for code, move in children:
                child = CanonicalCode(code)
                if child not in self.all_nodes:
                    self.add_node(child, n=k + 1)
                    new_nodes.append(child)
                if not self.tree.has_edge(parent, child):
                    self.add_edge(parent, child, move=move)
        self.levels[k + 1] = sorted(new_nodes)
        logger.info('{} Laman graphs on {} vertices'
                    .format(len(new_nodes), k + 1))

    def level(self, n):
        if n < 2:
            raise ContractError('Laman graphs have at least 2 vertices')
        self.grow(n)
        return list(self.levels[n])

    def move(self, parent, child):
        return self.tree.edges[parent, child]['move']

    def henneberg_sequence(self, code):
        """
        Moves building a graph isomorphic to `code` from the single edge
        on vertices 0 and 1. Each move refers to the vertices of the graph
        produced by the previous ones.
        """
        if code not in self.all_nodes:
            raise ContractError(f'{code} is not an enumerated Laman graph')
        path = self.shortest_paths[code]
        g = Graph(2, [(0, 1)])
        moves = []
        for parent, child in zip(path, path[1:]):
            _, order = canonical_labeling(g)
            move = self.move(parent, child).relabel(order)
            g = apply_henneberg(g, move)
            moves.append(move)
        return moves


def enumerate_laman(n, tree=None):
    """
    Canonical codes of all Laman graphs on n vertices, sorted.
    """
    if tree is None:
        tree = HennebergTree()
    return tree.level(n)
