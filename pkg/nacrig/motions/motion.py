# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
import logging
import math
from itertools import combinations
from typing import NamedTuple

import numpy as np

from nacrig.exceptions import ContractError
from nacrig.graphs.graph import normalize_edge

logger = logging.getLogger(__name__)

LENGTH_TOLERANCE = 1e-9
VARIATION_THRESHOLD = 1e-6


class Labeling(object):
    """
    Positive length for every edge of a graph.
    """
    def __init__(self, graph, lengths):
        lengths = {normalize_edge(*e): float(l) for e, l in dict(lengths).items()}
        if set(lengths) != set(graph.edges):
            raise ContractError('Labeling domain differs from the edge set')
        bad = [e for e, l in lengths.items() if not l > 0]
        if bad:
            raise ContractError(f'Non-positive edge lengths on {bad}')
        self.graph = graph
        self.lengths = np.array([lengths[e] for e in graph.edges])

    def length(self, u, v):
        return float(self.lengths[self.graph.edges.index(normalize_edge(u, v))])

    def items(self):
        return zip(self.graph.edges, self.lengths.tolist())

    def to_json(self):
        return [{'u': u, 'v': v, 'length': l} for (u, v), l in self.items()]

    def __eq__(self, other):
        if not isinstance(other, Labeling):
            return NotImplemented
        return self.graph == other.graph and \
            np.array_equal(self.lengths, other.lengths)

    def __repr__(self):
        return 'Labeling({})'.format(dict(self.items()))


class Frame(NamedTuple):
    alpha: float
    positions: np.ndarray


def edge_lengths(graph, positions):
    if not graph.edges:
        return np.zeros(0)
    edges = np.array(graph.edges)
    return np.linalg.norm(positions[edges[:, 0]] - positions[edges[:, 1]],
                          axis=1)


def realization_is_compatible(graph, labeling, positions,
                              tol=LENGTH_TOLERANCE):
    """
    True if the placement `positions` (one row per vertex) realizes the
    edge lengths of `labeling`.
    """
    positions = np.asarray(positions, dtype=float)
    return bool(np.all(np.abs(edge_lengths(graph, positions)
                              - labeling.lengths) < tol))


def pin_frame(positions, edge):
    """
    Normalizes a planar realization up to direct isometries: the first
    vertex of `edge` is moved to the origin and the edge is rotated onto
    the positive x-axis.
    """
    positions = np.asarray(positions, dtype=float)
    if positions.shape[1] != 2:
        raise ContractError('Only planar frames can be pinned')
    u, v = edge
    shifted = positions - positions[u]
    angle = math.atan2(shifted[v, 1], shifted[v, 0])
    c, s = math.cos(-angle), math.sin(-angle)
    return shifted @ np.array([[c, s], [-s, c]])


class Motion(object):
    """
    A labeling together with a sampled one-parameter family of
    realizations compatible with it.

    :param construction: 'grid', 'zigzag', '3d' or 'external'.
    :param coloring: The NAC-coloring the motion was built from, if any.
    """
    def __init__(self, graph, labeling, frames, construction,
                 coloring=None):
        if not frames:
            raise ContractError('A motion needs at least one frame')
        self.graph = graph
        self.labeling = labeling
        self.frames = list(frames)
        self.construction = construction
        self.coloring = coloring
        self.dimension = self.frames[0].positions.shape[1]

    @property
    def alphas(self):
        return [f.alpha for f in self.frames]

    def positions(self):
        return np.stack([f.positions for f in self.frames])

    def max_length_error(self):
        return max(float(np.max(np.abs(edge_lengths(self.graph, f.positions)
                                       - self.labeling.lengths),
                                initial=0.0))
                   for f in self.frames)

    def distance_variation(self, u, v):
        dists = np.linalg.norm(self.positions()[:, u] - self.positions()[:, v],
                               axis=1)
        return float(dists.max() - dists.min())

    def varying_pair(self, threshold=VARIATION_THRESHOLD):
        """
        First non-adjacent vertex pair whose distance changes by more than
        `threshold` across the frames, None if the motion looks rigid.
        """
        positions = self.positions()
        for u, v in combinations(self.graph.vertices, 2):
            if self.graph.has_edge(u, v):
                continue
            dists = np.linalg.norm(positions[:, u] - positions[:, v], axis=1)
            if dists.max() - dists.min() > threshold:
                return u, v
        return None

    def validate(self):
        """
        True if every frame keeps the edge lengths and some non-edge
        distance varies.
        """
        error = self.max_length_error()
        if error >= LENGTH_TOLERANCE:
            logger.warning(f'Edge lengths drift by {error:.3g}')
            return False
        return self.varying_pair() is not None

    def pinned(self, edge=None):
        if edge is None:
            edge = self.graph.edges[0]
        return [pin_frame(f.positions, edge) for f in self.frames]

    def to_json(self):
        return {
            'dimension': self.dimension,
            'construction': self.construction,
            'labeling': self.labeling.to_json(),
            'coloring': None if self.coloring is None
            else self.coloring.to_json(),
            'frames': [{'alpha': f.alpha, 'positions': f.positions.tolist()}
                       for f in self.frames],
        }
