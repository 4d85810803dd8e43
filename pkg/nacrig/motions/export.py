# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""
SVG rendering of motions: one document per frame or a single document
animated with SMIL.
"""
import logging
import math
import os

import numpy as np

from nacrig.colorings.coloring import Color
from nacrig.commons.utils import blue_color, red_color, vertex_color

logger = logging.getLogger(__name__)

VIEWBOX = 512
MARGIN = 32
SECONDS_PER_FRAME = 0.1
_SVG_OPEN = ('<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {0} {0}" '
             'width="{0}" height="{0}">').format(VIEWBOX)


def _project(positions):
    # Cabinet projection for spatial motions.
    if positions.shape[-1] == 2:
        return positions
    x, y, z = positions[..., 0], positions[..., 1], positions[..., 2]
    k = 0.5 * math.cos(math.pi / 4)
    return np.stack([y - k * x, z - k * x], axis=-1)


def screen_coordinates(motion):
    """
    Frame positions mapped into the viewbox, shape (frames, vertices, 2).
    A common scale is used for all frames, the y axis points up.
    """
    points = _project(motion.positions())
    low = points.reshape(-1, 2).min(axis=0)
    high = points.reshape(-1, 2).max(axis=0)
    span = max(float((high - low).max()), 1e-9)
    scale = (VIEWBOX - 2 * MARGIN) / span
    offset = (VIEWBOX - scale * (high - low)) / 2
    screen = (points - low) * scale + offset
    screen[..., 1] = VIEWBOX - screen[..., 1]
    return screen


def _edge_colors(motion):
    if motion.coloring is None:
        return [vertex_color] * motion.graph.n_edges
    return [red_color if c is Color.RED else blue_color
            for _, c in motion.coloring.items()]


def _fmt(x):
    return '{:.3f}'.format(x)


def svg_frame(motion, index, screen=None):
    if screen is None:
        screen = screen_coordinates(motion)
    pts = screen[index]
    elements = [_SVG_OPEN]
    for (u, v), color in zip(motion.graph.edges, _edge_colors(motion)):
        elements.append(
            f'<line x1="{_fmt(pts[u, 0])}" y1="{_fmt(pts[u, 1])}" '
            f'x2="{_fmt(pts[v, 0])}" y2="{_fmt(pts[v, 1])}" '
            f'stroke="{color}" stroke-width="3"/>')
    for v in motion.graph.vertices:
        elements.append(f'<circle cx="{_fmt(pts[v, 0])}" '
                        f'cy="{_fmt(pts[v, 1])}" r="5" fill="{vertex_color}"/>')
    elements.append('</svg>')
    return '\n'.join(elements) + '\n'


def svg_frames(motion):
    screen = screen_coordinates(motion)
    return [svg_frame(motion, k, screen) for k in range(len(motion.frames))]


def _animate(attribute, values, duration):
    return (f'<animate attributeName="{attribute}" '
            f'values="{";".join(_fmt(x) for x in values)}" '
            f'dur="{duration}s" repeatCount="indefinite"/>')


def animated_svg(motion):
    screen = screen_coordinates(motion)
    duration = '{:g}'.format(SECONDS_PER_FRAME * len(motion.frames))
    elements = [_SVG_OPEN]
    for (u, v), color in zip(motion.graph.edges, _edge_colors(motion)):
        first = screen[0]
        elements.append(
            f'<line x1="{_fmt(first[u, 0])}" y1="{_fmt(first[u, 1])}" '
            f'x2="{_fmt(first[v, 0])}" y2="{_fmt(first[v, 1])}" '
            f'stroke="{color}" stroke-width="3">')
        for attribute, vertex, axis in (('x1', u, 0), ('y1', u, 1),
                                        ('x2', v, 0), ('y2', v, 1)):
            elements.append(_animate(attribute, screen[:, vertex, axis],
                                     duration))
        elements.append('</line>')
    for v in motion.graph.vertices:
        elements.append(f'<circle cx="{_fmt(screen[0, v, 0])}" '
                        f'cy="{_fmt(screen[0, v, 1])}" r="5" '
                        f'fill="{vertex_color}">')
        elements.append(_animate('cx', screen[:, v, 0], duration))
        elements.append(_animate('cy', screen[:, v, 1], duration))
        elements.append('</circle>')
    elements.append('</svg>')
    return '\n'.join(elements) + '\n'


def write_svg_frames(motion, directory, stem='frame'):
    """
    Writes one SVG file per frame, returns the written paths.
    """
    os.makedirs(directory, exist_ok=True)
    paths = []
    for k, document in enumerate(svg_frames(motion)):
        path = os.path.join(directory, f'{stem}_{k:03d}.svg')
        with open(path, 'w') as f:
            f.write(document)
        paths.append(path)
    logger.info(f'Wrote {len(paths)} frames to {directory}')
    return paths
