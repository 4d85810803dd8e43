# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
from nacrig.colorings.coloring import NacColoring
from nacrig.exceptions import ContractError


class GridAssignment(object):
    """
    Places every vertex in the cell (i, j) of the red component R_i and
    blue component B_j containing it (1-based, components ordered by their
    smallest vertex).
    """
    def __init__(self, graph, coloring):
        self.graph = graph
        self.coloring = coloring
        self.red_components = coloring.red_components
        self.blue_components = coloring.blue_components
        self.cells = tuple((self.red_components.block_of(v) + 1,
                            self.blue_components.block_of(v) + 1)
                           for v in graph.vertices)
        for u, v in graph.edges:
            if self.cells[u] == self.cells[v]:
                raise ContractError('Edge {} has both ends in cell {}'
                                    .format(graph.edge_label((u, v)),
                                            self.cells[u]))

    @property
    def n_red(self):
        return len(self.red_components)

    @property
    def n_blue(self):
        return len(self.blue_components)

    def cell(self, v):
        return self.cells[v]

    def to_json(self):
        return {'red': self.red_components.to_list(),
                'blue': self.blue_components.to_list(),
                'cells': [[i - 1, j - 1] for i, j in self.cells]}


def component_grid(g, c):
    if c.graph != g:
        raise ContractError('Coloring is defined on another graph')
    return GridAssignment(g, NacColoring.from_coloring(c))


def injective_flex(ga):
    return len(set(ga.cells)) == len(ga.cells)
