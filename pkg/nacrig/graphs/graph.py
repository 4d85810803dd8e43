# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
import logging

import networkx as nx

from nacrig.exceptions import ContractError

logger = logging.getLogger(__name__)


def normalize_edge(u, v):
    return (u, v) if u < v else (v, u)


class Graph(object):
    """
    Immutable finite simple undirected graph on the vertices 0..n-1.

    Edges are stored as sorted pairs (u, v) with u < v, the edge tuple is
    sorted lexicographically. Optional vertex labels (as read from an edge
    list) are carried along but are not part of the graph identity.
    """
    def __init__(self, vertex_count, edges=(), labels=None):
        if vertex_count < 0:
            raise ContractError('Negative vertex count {}'
                                .format(vertex_count))
        norm_edges = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ContractError(f'Self-loop at vertex {u}')
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ContractError(f'Edge ({u}, {v}) out of range for '
                                    f'{vertex_count} vertices')
            norm_edges.add(normalize_edge(u, v))

        self._n = vertex_count
        self._edges = tuple(sorted(norm_edges))
        adj = [set() for _ in range(vertex_count)]
        for u, v in self._edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(a) for a in adj)

        if labels is None:
            labels = [str(i) for i in range(vertex_count)]
        labels = tuple(str(l) for l in labels)
        if len(labels) != vertex_count or len(set(labels)) != vertex_count:
            raise ContractError('Vertex labels must be {} distinct names'
                                .format(vertex_count))
        self._labels = labels
        self._nx_graph = None

    @classmethod
    def from_networkx(cls, nx_graph):
        """
        Builds a Graph from a networkx graph, vertices are renumbered in
        sorted order and their original names kept as labels.
        """
        nodes = sorted(nx_graph.nodes)
        index = {node: i for i, node in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in nx_graph.edges if u != v]
        return cls(len(nodes), edges, labels=[str(n) for n in nodes])

    @property
    def vertex_count(self):
        return self._n

    @property
    def vertices(self):
        return range(self._n)

    @property
    def edges(self):
        return self._edges

    @property
    def n_edges(self):
        return len(self._edges)

    @property
    def labels(self):
        return self._labels

    def label(self, v):
        return self._labels[v]

    def index_of(self, label):
        try:
            return self._labels.index(str(label))
        except ValueError:
            raise ContractError(f'Unknown vertex {label!r}') from None

    def edge_label(self, edge):
        u, v = edge
        return f'{self._labels[u]}{self._labels[v]}'

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def has_edge(self, u, v):
        return v in self._adj[u]

    def is_complete(self):
        return self.n_edges == self._n * (self._n - 1) // 2

    def to_networkx(self):
        """
        Returns a frozen networkx view of the graph, built once.
        """
        if self._nx_graph is None:
            g = nx.Graph()
            g.add_nodes_from(range(self._n))
            g.add_edges_from(self._edges)
            self._nx_graph = nx.freeze(g)
        return self._nx_graph

    def is_connected(self):
        if self._n <= 1:
            return True
        return nx.is_connected(self.to_networkx())

    def remainder_is_connected(self, vertices=(), edges=()):
        """
        Tells whether the graph stays connected after deleting the given
        vertices and edges.
        """
        g = nx.Graph(self.to_networkx())
        g.remove_edges_from(edges)
        g.remove_nodes_from(vertices)
        if g.number_of_nodes() <= 1:
            return True
        return nx.is_connected(g)

    def relabel(self, order):
        """
        Returns the graph whose vertex k is the vertex `order[k]` of self.
        """
        assert sorted(order) == list(range(self._n))
        position = {v: k for k, v in enumerate(order)}
        edges = [(position[u], position[v]) for u, v in self._edges]
        labels = [self._labels[v] for v in order]
        return Graph(self._n, edges, labels=labels)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return 'Graph(n={}, edges={})'.format(self._n, list(self._edges))


class VertexPartition(object):
    """
    Partition of the vertices 0..n-1 into non-empty blocks.
    Blocks are sorted internally and ordered by their smallest vertex.
    """
    def __init__(self, vertex_count, blocks):
        blocks = [tuple(sorted(b)) for b in blocks]
        if any(len(b) == 0 for b in blocks):
            raise ContractError('Empty block in vertex partition')
        blocks.sort(key=lambda b: b[0])
        self._block_of = {}
        for i, block in enumerate(blocks):
            for v in block:
                if v in self._block_of:
                    raise ContractError(f'Vertex {v} in two blocks')
                self._block_of[v] = i
        if sorted(self._block_of) != list(range(vertex_count)):
            raise ContractError('Blocks do not cover the {} vertices'
                                .format(vertex_count))
        self.vertex_count = vertex_count
        self.blocks = tuple(blocks)

    def block_of(self, v):
        return self._block_of[v]

    def same_block(self, u, v):
        return self._block_of[u] == self._block_of[v]

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __getitem__(self, item):
        return self.blocks[item]

    def __eq__(self, other):
        if not isinstance(other, VertexPartition):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return 'VertexPartition({})'.format([list(b) for b in self.blocks])

    def to_list(self):
        return [list(b) for b in self.blocks]


def connected_components(g, edges=None):
    """
    Partition of the vertices of g into the connected components of the
    spanning subgraph with the given edges (all edges of g by default).
    """
    if edges is None:
        nx_graph = g.to_networkx()
    else:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(g.vertices)
        nx_graph.add_edges_from(edges)
    return VertexPartition(g.vertex_count,
                           nx.connected_components(nx_graph))


def triangles(g):
    """
    All triangles of g as sorted vertex triples, in lexicographic order.
    """
    res = []
    for u, v in g.edges:
        for w in sorted(g.neighbors(u) & g.neighbors(v)):
            if w > v:
                res.append((u, v, w))
    return res
