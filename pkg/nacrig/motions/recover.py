# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
import logging
import math

import numpy as np

from nacrig.colorings.coloring import Color, EdgeColoring, NacVerdict, \
    is_nac
from nacrig.exceptions import ClassificationError, ContractError

logger = logging.getLogger(__name__)

ANGLE_TOLERANCE = 1e-6
MIN_FRAMES = 8


def _edge_rotations(m):
    positions = m.positions()
    rotations = []
    for u, v in m.graph.edges:
        delta = positions[:, v] - positions[:, u]
        w = delta[:, 0] + 1j * delta[:, 1]
        lengths = np.abs(w)
        spread = lengths.max() - lengths.min()
        if lengths.min() == 0 or \
                spread > ANGLE_TOLERANCE * max(1., lengths.max()):
            raise ClassificationError('Edge {} changes length'
                                      .format(m.graph.edge_label((u, v))))
        rotations.append(w / w[0])
    return rotations


def _same_turn(r, s):
    return np.abs(np.angle(r / s)).max() < ANGLE_TOLERANCE


def recover_coloring(m):
    """
    Reads the NAC-coloring back from a planar motion.

    Each edge is seen as the complex number W = dx + i dy per frame and
    edges are grouped by how W turns relative to the other edges, so a
    rotation or translation of whole frames does not change the result.
    A single group is a rigid motion and comes back all blue. With two
    groups the one keeping its direction is blue; if both turn, the group
    of the first edge (the edge frames are pinned on) is blue.

    :raises ContractError: If the motion is not planar or has fewer than
        8 frames spread over at least half a turn.
    :raises ClassificationError: If an edge changes length or the edges
        turn in more than two ways.
    """
    if m.dimension != 2:
        raise ContractError('Colorings are recovered from planar motions')
    alphas = m.alphas
    if len(alphas) < MIN_FRAMES or max(alphas) - min(alphas) < math.pi:
        raise ContractError(f'Need at least {MIN_FRAMES} frames spread '
                            f'over [0, 2pi)')

    rotations = _edge_rotations(m)
    if not rotations:
        return EdgeColoring(m.graph, {})
    groups = []
    membership = []
    for i, rotation in enumerate(rotations):
        for k, group in enumerate(groups):
            if _same_turn(rotation, rotations[group[0]]):
                group.append(i)
                membership.append(k)
                break
        else:
            if len(groups) == 2:
                raise ClassificationError(
                    'Edge {} turns independently of the other edges'
                    .format(m.graph.edge_label(m.graph.edges[i])))
            groups.append([i])
            membership.append(len(groups) - 1)

    blue = membership[0]
    for k, group in enumerate(groups):
        if np.abs(np.angle(rotations[group[0]])).max() < ANGLE_TOLERANCE:
            blue = k
            break
    return EdgeColoring(m.graph, {
        e: Color.BLUE if membership[i] == blue else Color.RED
        for i, e in enumerate(m.graph.edges)})


def detect_flex(m):
    """
    Checks the recovered coloring of a motion, a rigid motion (all edges
    turning together) is reported as "no flex detected".
    """
    coloring = recover_coloring(m)
    if not coloring.is_surjective():
        return coloring, NacVerdict(False, 'no flex detected')
    return coloring, is_nac(m.graph, coloring)
