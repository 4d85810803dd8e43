# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
import abc

import networkx as nx


class Tree(abc.ABC):
    """
    Abstract rooted structure stored in a networkx DiGraph.
    Subclasses populate `self.tree` in `build_tree` and return the root.
    """
    def __init__(self):
        super().__init__()

        self.tree = nx.DiGraph()
        self.all_nodes = set()
        self._shortest_paths = None

        self.root_node = self.build_tree()

    @property
    def shortest_paths(self):
        if self._shortest_paths is None:
            self._shortest_paths = dict(
                nx.single_source_shortest_path(self.tree, self.root_node))
        return self._shortest_paths

    def add_node(self, node, **attrs):
        self.tree.add_node(node, **attrs)
        self.all_nodes.add(node)
        self._shortest_paths = None

    def add_edge(self, parent, child, **attrs):
        assert parent in self.all_nodes and child in self.all_nodes
        self.tree.add_edge(parent, child, **attrs)
        self._shortest_paths = None

    def parents(self, node):
        return list(self.tree.predecessors(node))

    @abc.abstractmethod
    def build_tree(self):
        raise NotImplementedError
