# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""
Canonical labeling by individualization-refinement.

The vertices are first split by degree and the partition is refined until
equitable. Each leaf of the search tree (obtained by individualizing the
vertices of the first non-trivial cell in turn) is a vertex order; the
canonical order is the one with the smallest graph6 adjacency string.
"""
import logging

from nacrig.config import get_setting
from nacrig.exceptions import CapacityError
from nacrig.graphs.io import serialize_graph6

logger = logging.getLogger(__name__)


class CanonicalCode(object):
    """
    Isomorphism class identifier: the graph6 string of the canonically
    relabeled graph.
    """
    __slots__ = ('code',)

    def __init__(self, code):
        if isinstance(code, str):
            code = code.encode('ascii')
        self.code = bytes(code)

    @property
    def text(self):
        return self.code.decode('ascii')

    def to_graph(self):
        from nacrig.graphs.io import parse_graph6
        return parse_graph6(self.code)

    def __eq__(self, other):
        if not isinstance(other, CanonicalCode):
            return NotImplemented
        return self.code == other.code

    def __lt__(self, other):
        return (len(self.code), self.code) < (len(other.code), other.code)

    def __hash__(self):
        return hash(self.code)

    def __repr__(self):
        return 'CanonicalCode({!r})'.format(self.text)

    def __str__(self):
        return self.text


def _refine(adj, cells):
    """
    Splits cells by the number of neighbours in every other cell until the
    partition is equitable. The order of the cells only depends on
    isomorphism-invariant data.
    """
    while True:
        cell_sets = [frozenset(c) for c in cells]
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            by_signature = {}
            for v in cell:
                signature = tuple(len(adj[v] & other) for other in cell_sets)
                by_signature.setdefault(signature, []).append(v)
            for signature in sorted(by_signature):
                new_cells.append(by_signature[signature])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _interchangeable(adj, cell):
    """
    True if every permutation of `cell` is an automorphism: the cell is a
    clique or an independent set and its vertices share their outer
    neighbourhood.
    """
    members = frozenset(cell)
    outer = adj[cell[0]] - members
    inner = len(adj[cell[0]] & members)
    if inner not in (0, len(cell) - 1):
        return False
    return all(adj[v] - members == outer and len(adj[v] & members) == inner
               for v in cell[1:])


def _adjacency_bits(g, order):
    # Column-wise upper triangle, the graph6 bit order.
    position = [0] * len(order)
    for k, v in enumerate(order):
        position[v] = k
    bits = 0
    n = len(order)
    for u, v in g.edges:
        i, j = sorted((position[u], position[v]))
        index = j * (j - 1) // 2 + i
        bits |= 1 << (n * (n - 1) // 2 - 1 - index)
    return bits


def canonical_labeling(g, max_vertices=None):
    """
    Computes the canonical code of g together with the vertex order
    realizing it: vertex k of the canonical graph is `order[k]` of g.

    :raises CapacityError: If g has more vertices than `max_vertices`
        (configuration key canonical.max_vertices by default).
    """
    if max_vertices is None:
        max_vertices = get_setting('canonical', 'max_vertices')
    n = g.vertex_count
    if n > max_vertices:
        raise CapacityError(f'Canonical form limited to {max_vertices} '
                            f'vertices, got {n}')

    adj = [g.neighbors(v) for v in g.vertices]
    by_degree = {}
    for v in g.vertices:
        by_degree.setdefault(len(adj[v]), []).append(v)
    cells = [by_degree[d] for d in sorted(by_degree)]

    best_bits, best_order = None, None
    stack = [cells]
    while stack:
        cells = _refine(adj, stack.pop())
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            bits = _adjacency_bits(g, order)
            if best_bits is None or bits < best_bits:
                best_bits, best_order = bits, order
            continue
        cell = cells[target]
        branches = cell[:1] if _interchangeable(adj, cell) else cell
        for v in reversed(branches):
            rest = [w for w in cell if w != v]
            stack.append(cells[:target] + [[v], rest] + cells[target + 1:])

    best_order = best_order or []
    code = serialize_graph6(g.relabel(best_order))
    return CanonicalCode(code), best_order


def canonical_form(g, max_vertices=None):
    return canonical_labeling(g, max_vertices)[0]


def canonical_graph(g, max_vertices=None):
    """
    The canonical representative of the isomorphism class of g.
    """
    _, order = canonical_labeling(g, max_vertices)
    return g.relabel(order)
