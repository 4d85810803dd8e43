# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""
Flexible labelings and their motions.

The grid construction places a vertex of R_i and B_j at
i * (1, 0) + j * (cos a, sin a); the zigzag construction replaces the two
axes by arbitrary families of pairwise distinct vectors a_j and b_i and
uses rot(a) * a_j + b_i. Both keep red edges (fixed i) and blue edges
(fixed j) at constant length while the angle a varies. The spatial
construction flexes any non-complete graph in 3D by turning one vertex
around an axis.
"""
import abc
import logging
import math

import numpy as np

from nacrig.config import get_setting
from nacrig.exceptions import ContractError
from nacrig.motions.motion import Frame, Labeling, Motion

logger = logging.getLogger(__name__)

TWO_PI = 2 * math.pi


def default_alphas(n_frames=None):
    """
    `n_frames` uniform samples of [0, 2pi), motion.n_frames by default.
    """
    if n_frames is None:
        n_frames = get_setting('motion', 'n_frames')
    return [TWO_PI * k / n_frames for k in range(n_frames)]


def _check_alphas(alphas):
    alphas = [float(a) for a in alphas]
    if len(alphas) < 2:
        raise ContractError('A motion needs at least two angles')
    if any(not 0 <= a < TWO_PI for a in alphas):
        raise ContractError('Angles must lie in [0, 2pi)')
    return alphas


class MotionConstruction(abc.ABC):
    name = None

    def __init__(self, graph, coloring=None):
        self.graph = graph
        self.coloring = coloring

    @abc.abstractmethod
    def positions(self, alpha):
        raise NotImplementedError

    @abc.abstractmethod
    def labeling(self):
        raise NotImplementedError

    def __call__(self, alphas=None):
        if alphas is None:
            alphas = default_alphas()
        alphas = _check_alphas(alphas)
        frames = [Frame(a, self.positions(a)) for a in alphas]
        return Motion(self.graph, self.labeling(), frames, self.name,
                      self.coloring)


class GridConstruction(MotionConstruction):
    name = 'grid'

    def __init__(self, assignment):
        super().__init__(assignment.graph, assignment.coloring)
        self.assignment = assignment
        cells = np.array(assignment.cells, dtype=float).reshape(-1, 2)
        self._i, self._j = cells[:, 0], cells[:, 1]

    def positions(self, alpha):
        direction = np.array([math.cos(alpha), math.sin(alpha)])
        return np.outer(self._i, [1., 0.]) + np.outer(self._j, direction)

    def labeling(self):
        # The realization at alpha = pi/2, computed combinatorially.
        cells = self.assignment.cells
        lengths = {}
        for u, v in self.graph.edges:
            (i, j), (k, l) = cells[u], cells[v]
            lengths[(u, v)] = abs(j - l) if i == k else abs(k - i)
        return Labeling(self.graph, lengths)


def _distinct_rows(vectors):
    return len({tuple(v) for v in vectors.tolist()}) == len(vectors)


class ZigzagData(object):
    """
    Vectors a_1..a_n (one per blue component) and b_1..b_m (one per red
    component), pairwise distinct within each family.
    """
    def __init__(self, a, b):
        self.a = np.array(a, dtype=float).reshape(-1, 2)
        self.b = np.array(b, dtype=float).reshape(-1, 2)
        if not _distinct_rows(self.a) or not _distinct_rows(self.b):
            raise ContractError('Zigzag vectors must be pairwise distinct')

    def to_json(self):
        return {'a': self.a.tolist(), 'b': self.b.tolist()}


def default_zigzag(assignment, epsilon=None):
    """
    a_j = j (0, 1) + j^2 (epsilon, 0) and b_i = i (1, 0) + i^2 (0, epsilon).
    """
    if epsilon is None:
        epsilon = get_setting('zigzag', 'epsilon')
    a = [(j * j * epsilon, j) for j in range(1, assignment.n_blue + 1)]
    b = [(i, i * i * epsilon) for i in range(1, assignment.n_red + 1)]
    return ZigzagData(a, b)


class ZigzagConstruction(MotionConstruction):
    name = 'zigzag'

    def __init__(self, assignment, zigzag=None, epsilon=None):
        super().__init__(assignment.graph, assignment.coloring)
        if zigzag is None:
            zigzag = default_zigzag(assignment, epsilon)
        if len(zigzag.a) != assignment.n_blue or \
                len(zigzag.b) != assignment.n_red:
            raise ContractError(
                f'Zigzag data sized {len(zigzag.a)}/{len(zigzag.b)}, the '
                f'coloring has {assignment.n_blue} blue and '
                f'{assignment.n_red} red components')
        self.assignment = assignment
        self.zigzag = zigzag
        cells = np.array(assignment.cells, dtype=int).reshape(-1, 2)
        self._a = zigzag.a[cells[:, 1] - 1]
        self._b = zigzag.b[cells[:, 0] - 1]

    def positions(self, alpha):
        c, s = math.cos(alpha), math.sin(alpha)
        rotation = np.array([[c, s], [-s, c]])
        return self._a @ rotation.T + self._b

    def labeling(self):
        cells = self.assignment.cells
        a, b = self.zigzag.a, self.zigzag.b
        lengths = {}
        for u, v in self.graph.edges:
            (i, j), (k, l) = cells[u], cells[v]
            if i == k:
                lengths[(u, v)] = np.linalg.norm(a[j - 1] - a[l - 1])
            else:
                lengths[(u, v)] = np.linalg.norm(b[i - 1] - b[k - 1])
        return Labeling(self.graph, lengths)


def non_adjacent_pair(g):
    for u in g.vertices:
        for v in range(u + 1, g.vertex_count):
            if not g.has_edge(u, v):
                return u, v
    return None


class SpatialConstruction(MotionConstruction):
    """
    rho(u) = (1, 0, 0), rho(v) = (cos a, 1, sin a) and rho(w) = (0, w, 0)
    for every other vertex w, where uv is not an edge.
    """
    name = '3d'

    def __init__(self, graph, pair=None):
        super().__init__(graph)
        if graph.is_complete():
            raise ContractError('A complete graph has no non-adjacent pair')
        if pair is None:
            pair = non_adjacent_pair(graph)
        u, v = pair
        if u == v or graph.has_edge(u, v):
            raise ContractError('{} {} must be two non-adjacent vertices'
                                .format(graph.label(u), graph.label(v)))
        self.pair = (u, v)
        self._base = np.zeros((graph.vertex_count, 3))
        self._base[:, 1] = np.arange(graph.vertex_count)

    def positions(self, alpha):
        u, v = self.pair
        res = self._base.copy()
        res[u] = (1., 0., 0.)
        res[v] = (math.cos(alpha), 1., math.sin(alpha))
        return res

    def labeling(self):
        u, v = self.pair
        lengths = {}
        for e in self.graph.edges:
            if u in e:
                w = e[1] if e[0] == u else e[0]
                lengths[e] = math.sqrt(1 + w * w)
            elif v in e:
                w = e[1] if e[0] == v else e[0]
                lengths[e] = math.sqrt(1 + (1 - w) ** 2)
            else:
                lengths[e] = abs(e[1] - e[0])
        return Labeling(self.graph, lengths)


def grid_motion(ga, alphas=None):
    return GridConstruction(ga)(alphas)


def zigzag_motion(ga, z=None, alphas=None):
    return ZigzagConstruction(ga, z)(alphas)


def flex3d(g, u=None, v=None, alphas=None):
    """
    Motion in 3D of any non-complete graph g, flexing the non-adjacent pair
    (u, v), by default the first such pair.
    """
    pair = None if u is None else (u, v)
    return SpatialConstruction(g, pair)(alphas)
