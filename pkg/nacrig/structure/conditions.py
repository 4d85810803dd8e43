# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""
Structural conditions for the existence of NAC-colorings and the colorings
built from their witnesses.
"""
import logging
from itertools import combinations

import networkx as nx

from nacrig.colorings.coloring import NacColoring
from nacrig.config import get_setting
from nacrig.exceptions import ContractError
from nacrig.graphs.graph import normalize_edge, triangles
from nacrig.structure.delta import delta_classes

logger = logging.getLogger(__name__)

# Bond enumeration over the components left by the connecting edges is
# exponential, it is skipped above this many components.
MAX_BOND_COMPONENTS = 16


def spanning_delta_check(g, classes=None):
    """
    Index of a triangle class touching every vertex, None if there is none.
    Such a class is a spanning triangle-connected subgraph, hence g has no
    NAC-coloring.
    """
    if classes is None:
        classes = delta_classes(g)
    for i, support in enumerate(classes.supports):
        if len(support) == g.vertex_count:
            return i
    return None


def max_flexible_edges(n):
    """
    Largest edge count of a graph on n vertices with a NAC-coloring.
    """
    return n * (n - 1) // 2 - (n - 2)


def edge_bound_check(g):
    return g.n_edges <= max_flexible_edges(g.vertex_count)


def _is_independent(g, vertices):
    return not any(g.has_edge(u, v) for u, v in combinations(vertices, 2))


def _remainder_components(g, vertices=(), edges=()):
    rest = nx.Graph(g.to_networkx())
    rest.remove_edges_from(edges)
    rest.remove_nodes_from(vertices)
    return sorted((sorted(c) for c in nx.connected_components(rest)),
                  key=lambda c: c[0])


def find_independent_cut(g, max_size=None):
    """
    Smallest independent vertex set separating g, searched by increasing
    size up to `max_size` (structure.max_cut_size by default). The first
    hit is inclusion-minimal since every subset of an independent set is
    independent and smaller sets are tried first.

    :return: Sorted tuple of vertices, or None within the bound.
    """
    if not g.is_connected():
        raise ContractError('Independent cut search needs a connected graph')
    if max_size is None:
        max_size = get_setting('structure', 'max_cut_size')
    for size in range(1, min(max_size, g.vertex_count - 2) + 1):
        for cut in combinations(g.vertices, size):
            if _is_independent(g, cut) \
                    and not g.remainder_is_connected(vertices=cut):
                return cut
    return None


def coloring_from_independent_cut(g, cut):
    """
    Colors red the edges touching the component of g - cut that holds the
    smallest vertex, everything else blue.
    """
    cut = sorted(set(cut))
    if any(not 0 <= v < g.vertex_count for v in cut):
        raise ContractError(f'Cut {cut} has unknown vertices')
    if not _is_independent(g, cut):
        raise ContractError(f'Cut {cut} is not independent')
    components = _remainder_components(g, vertices=cut)
    if len(components) < 2:
        raise ContractError(f'Cut {cut} does not separate the graph')
    chosen = set(components[0])
    red = [e for e in g.edges if e[0] in chosen or e[1] in chosen]
    return NacColoring.from_red_edges(g, red)


def vertex_without_triangle(g):
    in_triangle = {v for t in triangles(g) for v in t}
    for v in g.vertices:
        if g.degree(v) > 0 and v not in in_triangle:
            return v
    return None


def _star_center(g):
    for v in g.vertices:
        if g.degree(v) == g.n_edges:
            return v
    return None


def coloring_from_triangle_free_vertex(g, v):
    """
    NAC-coloring from a vertex lying in no triangle: its neighbourhood is
    an independent separating set unless g is a star, in which case one
    edge is red and the others blue.
    """
    if g.n_edges < 2:
        raise ContractError('At least two edges are needed')
    if any(g.has_edge(a, b) for a, b in combinations(g.neighbors(v), 2)):
        raise ContractError(f'Vertex {g.label(v)} lies in a triangle')
    if _star_center(g) is not None:
        return NacColoring.from_red_edges(g, g.edges[:1])
    return coloring_from_independent_cut(g, g.neighbors(v))


def has_path_with_edges(edges, length=4):
    """
    True if the graph formed by `edges` has a simple path with `length`
    edges.
    """
    adj = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)

    def extend(path, remaining):
        if remaining == 0:
            return True
        return any(extend(path + [w], remaining - 1)
                   for w in adj[path[-1]] if w not in path)

    return any(extend([v], length) for v in sorted(adj))


def _minimize_cut(g, cut):
    # Each edge is dropped once if the rest still separates; supersets of a
    # non-separating set never separate, so the result is minimal.
    cut = sorted(cut)
    for e in list(cut):
        trial = [f for f in cut if f != e]
        if not g.remainder_is_connected(edges=trial):
            cut = trial
    return tuple(cut)


def _bonds(g, candidates):
    """
    Minimal separating subsets of `candidates`: the edge sets between the
    two sides of a bipartition of the components of g - candidates in which
    both sides stay connected.
    """
    components = _remainder_components(g, edges=candidates)
    if len(components) > MAX_BOND_COMPONENTS:
        logger.warning('Skipping bond enumeration over {} components'
                       .format(len(components)))
        return
    comp_of = {v: i for i, c in enumerate(components) for v in c}
    quotient = nx.MultiGraph()
    quotient.add_nodes_from(range(len(components)))
    for u, v in candidates:
        if comp_of[u] != comp_of[v]:
            quotient.add_edge(comp_of[u], comp_of[v])

    k = len(components)
    for mask in range(1, 1 << (k - 1)):
        # Component 0 always on the "inside" side.
        side = {0} | {i for i in range(1, k) if mask >> (i - 1) & 1}
        other = set(range(k)) - side
        if not other:
            continue
        if not nx.is_connected(quotient.subgraph(side)) or \
                not nx.is_connected(quotient.subgraph(other)):
            continue
        yield tuple(sorted(e for e in candidates
                           if (comp_of[e[0]] in side)
                           != (comp_of[e[1]] in side)))


def find_connecting_edge_cut(g):
    """
    Minimal set of connecting edges whose removal disconnects g and which
    spans no path with four edges, or None.
    """
    if not g.is_connected() or g.n_edges < 2:
        return None
    connecting = delta_classes(g).connecting_edges
    if not connecting or g.remainder_is_connected(edges=connecting):
        return None
    cut = _minimize_cut(g, connecting)
    if not has_path_with_edges(cut):
        return cut
    for cut in _bonds(g, connecting):
        if not has_path_with_edges(cut):
            return cut
    return None


def coloring_from_edge_cut(g, cut):
    """
    Minimizes the given separating set of connecting edges and colors it
    red, the rest of the graph blue.
    """
    cut = sorted({normalize_edge(*e) for e in cut})
    classes = delta_classes(g)
    for e in cut:
        if not g.has_edge(*e):
            raise ContractError(f'{e} is not an edge')
        if not classes.is_connecting(e):
            raise ContractError('{} lies in a triangle'
                                .format(g.edge_label(e)))
    if g.remainder_is_connected(edges=cut):
        raise ContractError('Edge set {} does not separate the graph'
                            .format([g.edge_label(e) for e in cut]))
    if has_path_with_edges(cut):
        raise ContractError('Edge set spans a path with four edges')
    return NacColoring.from_red_edges(g, _minimize_cut(g, cut))
