# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
from networkx.utils import UnionFind

from nacrig.graphs.graph import triangles


class DeltaClassPartition(object):
    """
    Partition of the edges of a graph into triangle-connectivity classes:
    the classes of the reflexive-transitive closure of "the two edges lie
    in a common triangle".
    Classes are sorted internally and ordered by their smallest edge.
    """
    def __init__(self, graph, classes, triangle_edges):
        self.graph = graph
        self.classes = tuple(sorted(tuple(sorted(c)) for c in classes))
        self._class_of = {e: i for i, c in enumerate(self.classes)
                          for e in c}
        self.supports = tuple(frozenset(v for e in c for v in e)
                              for c in self.classes)
        self._triangle_edges = frozenset(triangle_edges)

    def class_of(self, edge):
        return self._class_of[edge]

    def same_class(self, e1, e2):
        return self._class_of[e1] == self._class_of[e2]

    def is_delta_connected(self):
        # A single edge (or no edge at all) counts as triangle-connected.
        return len(self.classes) <= 1

    @property
    def connecting_edges(self):
        return tuple(e for e in self.graph.edges
                     if e not in self._triangle_edges)

    def is_connecting(self, edge):
        return edge in self._class_of and edge not in self._triangle_edges

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def to_json(self):
        return [[list(e) for e in c] for c in self.classes]


def delta_classes(g):
    uf = UnionFind(g.edges)
    triangle_edges = set()
    for a, b, c in triangles(g):
        sides = [(a, b), (a, c), (b, c)]
        uf.union(*sides)
        triangle_edges.update(sides)
    return DeltaClassPartition(g, uf.to_sets(), triangle_edges)
