# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
import logging

from nacrig.config import get_setting
from nacrig.structure.conditions import spanning_delta_check, \
    edge_bound_check, find_independent_cut, vertex_without_triangle, \
    find_connecting_edge_cut, coloring_from_independent_cut, \
    coloring_from_triangle_free_vertex, coloring_from_edge_cut
from nacrig.structure.delta import delta_classes

logger = logging.getLogger(__name__)


class StructureReport(object):
    """
    Structural facts about a graph: its triangle classes and the witnesses
    of the necessary and sufficient conditions for NAC-colorings.
    Witnesses are None when absent or when the condition does not apply.
    """
    def __init__(self, graph, delta_classes, spanned_by, edge_bound_ok,
                 independent_cut, triangle_free_vertex, connecting_edge_cut,
                 max_cut_size):
        self.graph = graph
        self.delta_classes = delta_classes
        self.spanned_by = spanned_by
        self.edge_bound_ok = edge_bound_ok
        self.independent_cut = independent_cut
        self.triangle_free_vertex = triangle_free_vertex
        self.connecting_edge_cut = connecting_edge_cut
        self.max_cut_size = max_cut_size

    @property
    def excludes_nac(self):
        return self.spanned_by is not None or not self.edge_bound_ok

    def witness_colorings(self):
        """
        NAC-colorings built from the sufficient-condition witnesses, as
        (name, coloring) pairs.
        """
        g = self.graph
        res = []
        if self.independent_cut is not None:
            res.append(('independent-cut',
                        coloring_from_independent_cut(g, self.independent_cut)))
        if self.triangle_free_vertex is not None:
            res.append(('triangle-free-vertex',
                        coloring_from_triangle_free_vertex(
                            g, self.triangle_free_vertex)))
        if self.connecting_edge_cut is not None:
            res.append(('connecting-edge-cut',
                        coloring_from_edge_cut(g, self.connecting_edge_cut)))
        return res

    def to_json(self):
        cut = self.connecting_edge_cut
        return {
            'deltaClasses': self.delta_classes.to_json(),
            'spannedBy': self.spanned_by,
            'edgeBoundOk': self.edge_bound_ok,
            'independentCut': None if self.independent_cut is None
            else list(self.independent_cut),
            'independentCutMaxSize': self.max_cut_size,
            'triangleFreeVertex': self.triangle_free_vertex,
            'connectingEdgeCut': None if cut is None
            else [list(e) for e in cut],
        }


def analyze_structure(g, max_cut_size=None):
    if max_cut_size is None:
        max_cut_size = get_setting('structure', 'max_cut_size')
    classes = delta_classes(g)
    independent_cut = triangle_free_vertex = edge_cut = None
    if g.is_connected() and g.n_edges >= 2:
        independent_cut = find_independent_cut(g, max_cut_size)
        triangle_free_vertex = vertex_without_triangle(g)
        edge_cut = find_connecting_edge_cut(g)
    else:
        logger.debug('Skipping cut searches on a disconnected or tiny graph')
    return StructureReport(g, classes, spanning_delta_check(g, classes),
                           edge_bound_check(g), independent_cut,
                           triangle_free_vertex, edge_cut, max_cut_size)
