# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
import logging
from itertools import combinations

from nacrig.exceptions import ContractError
from nacrig.graphs.graph import triangles
from nacrig.laman.pebble import is_laman

logger = logging.getLogger(__name__)


def problematic_status(g):
    """
    Evaluates the problematic-graph conditions on a Laman graph:

    1. every vertex has degree at least 3,
    2. every vertex of degree 3 has exactly one adjacent pair among its
       neighbours, and both vertices of that pair have degree at least 4,
    3. every vertex lies in a triangle.

    A degree-3 vertex with two adjacent neighbour pairs does not satisfy
    condition 2 here, it is returned as ambiguous.

    :return: (verdict, tuple of ambiguous vertices)
    :raises ContractError: If g is not a Laman graph.
    """
    if not is_laman(g):
        raise ContractError('Problematic graphs are defined for Laman graphs')
    ambiguous = []
    verdict = all(g.degree(v) >= 3 for v in g.vertices)

    for v in g.vertices:
        if g.degree(v) != 3:
            continue
        pairs = [(a, b) for a, b in combinations(sorted(g.neighbors(v)), 2)
                 if g.has_edge(a, b)]
        if len(pairs) > 1:
            ambiguous.append(v)
        if len(pairs) != 1 or min(g.degree(w) for w in pairs[0]) < 4:
            verdict = False

    in_triangle = {v for t in triangles(g) for v in t}
    if len(in_triangle) != g.vertex_count:
        verdict = False
    return verdict, tuple(ambiguous)


def is_problematic(g):
    verdict, ambiguous = problematic_status(g)
    if ambiguous:
        logger.warning('Degree-3 vertices {} have two adjacent neighbour '
                       'pairs'.format([g.label(v) for v in ambiguous]))
    return verdict
