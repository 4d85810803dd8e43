# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""
Search for NAC-colorings.

Edges sharing a triangle always get the same color in a NAC-coloring, so
the search ranges over red/blue assignments of whole triangle classes and
checks every candidate with a union-find pass over the two color classes.
"""
import logging
from functools import partial

from networkx.utils import UnionFind

from nacrig.colorings.coloring import NacColoring
from nacrig.commons.parallel import ordered_map
from nacrig.graphs.graph import connected_components
from nacrig.structure.delta import delta_classes

logger = logging.getLogger(__name__)


def _no_almost_cycle(n, edges, other_edges):
    uf = UnionFind(range(n))
    for u, v in edges:
        uf.union(u, v)
    return all(uf[u] != uf[v] for u, v in other_edges)


def _check_mask(search_data, mask):
    n, class_edges = search_data
    red, blue = [], []
    for i, edges in enumerate(class_edges):
        (red if mask >> i & 1 else blue).extend(edges)
    if _no_almost_cycle(n, red, blue) and _no_almost_cycle(n, blue, red):
        return mask
    return None


def _candidate_masks(n_classes, up_to_swap):
    # Bit i set means class i is red. Masks 0 and 2^k - 1 are not
    # surjective; with up_to_swap only the colorings whose last class is
    # blue are kept.
    if n_classes < 2:
        return range(0)
    stop = 1 << (n_classes - 1) if up_to_swap else (1 << n_classes) - 1
    return range(1, stop)


def iter_nac(g, up_to_swap=False, n_threads=None):
    """
    Lazily yields the NAC-colorings of g ordered by their red-class bitmask,
    the triangle classes being sorted by their smallest edge.
    """
    classes = delta_classes(g).classes
    search_data = (g.vertex_count, classes)
    masks = _candidate_masks(len(classes), up_to_swap)
    logger.debug('Searching {} class assignments of {} triangle classes'
                 .format(len(masks), len(classes)))
    for mask in ordered_map(partial(_check_mask, search_data), masks,
                            n_threads=n_threads):
        if mask is None:
            continue
        red = [e for i, edges in enumerate(classes) if mask >> i & 1
               for e in edges]
        yield NacColoring.from_red_edges(g, red)


def enumerate_nac(g, up_to_swap=False, n_threads=None):
    """
    Complete, duplicate free list of the NAC-colorings of g.

    :param g: Graph
    :param up_to_swap: Keep a single coloring out of each pair (c, swapped c).
    :param n_threads: Worker processes, NACRIG_THREADS by default.
    :return: List of NacColoring.
    """
    return list(iter_nac(g, up_to_swap, n_threads))


def coloring_for_disconnected(g):
    """
    If g has at least two components with edges, coloring the edges of one
    of them red and all the others blue is a NAC-coloring. Returns it, or
    None when g has a single edge-bearing component.
    """
    blocks = [b for b in connected_components(g) if len(b) > 1]
    if len(blocks) < 2:
        return None
    first = set(blocks[0])
    return NacColoring.from_red_edges(
        g, [e for e in g.edges if e[0] in first])


def find_nac(g, n_threads=None):
    """
    First NAC-coloring found for g, or None.
    """
    coloring = coloring_for_disconnected(g)
    if coloring is not None:
        logger.info('Graph is disconnected, using a component split')
        return coloring
    colorings = iter_nac(g, n_threads=n_threads)
    try:
        return next(colorings, None)
    finally:
        colorings.close()


def has_nac(g, n_threads=None):
    return find_nac(g, n_threads) is not None
