# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
import logging

logger = logging.getLogger(__name__)


class PebbleGame(object):
    """
    Incremental (2,3)-pebble game.

    Every vertex starts with two pebbles. An edge uv is accepted when four
    pebbles can be gathered on u and v; one of them then covers the edge,
    which is oriented away from the vertex that paid for it. The accepted
    edges always form a (2,3)-sparse set.
    """
    K = 2
    L = 3

    def __init__(self, vertex_count):
        self.pebbles = [self.K] * vertex_count
        self.out = [set() for _ in range(vertex_count)]
        self.accepted = []
        self.rejected = []

    def _collect(self, root, pinned):
        """
        Moves one free pebble to `root` by reversing a directed path,
        without touching the pebbles of `pinned`.
        """
        parent = {root: None, pinned: None}
        stack = [root]
        while stack:
            x = stack.pop()
            for y in self.out[x]:
                if y in parent:
                    continue
                parent[y] = x
                if self.pebbles[y] > 0:
                    self.pebbles[y] -= 1
                    self.pebbles[root] += 1
                    while parent[y] is not None:
                        p = parent[y]
                        self.out[p].remove(y)
                        self.out[y].add(p)
                        y = p
                    return True
                stack.append(y)
        return False

    def add_edge(self, u, v):
        assert u != v
        while self.pebbles[u] < self.K and self._collect(u, v):
            pass
        while self.pebbles[v] < self.K and self._collect(v, u):
            pass
        if self.pebbles[u] + self.pebbles[v] < self.L + 1:
            self.rejected.append((u, v))
            return False
        self.pebbles[u] -= 1
        self.out[u].add(v)
        self.accepted.append((u, v))
        return True

    @property
    def free_pebbles(self):
        return sum(self.pebbles)


def pebble_game(g):
    game = PebbleGame(g.vertex_count)
    for u, v in g.edges:
        game.add_edge(u, v)
    return game


def is_sparse(g):
    """
    True if every subgraph H of g has at most 2|V_H| - 3 edges.
    """
    return not pebble_game(g).rejected


def is_laman(g):
    n = g.vertex_count
    if n < 2 or g.n_edges != 2 * n - 3:
        return False
    return is_sparse(g)
