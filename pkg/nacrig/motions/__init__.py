# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
from .motion import Labeling, Frame, Motion, pin_frame, edge_lengths, \
    realization_is_compatible
from .grid import GridAssignment, component_grid, injective_flex
from .construction import MotionConstruction, GridConstruction, \
    ZigzagConstruction, SpatialConstruction, ZigzagData, default_zigzag, \
    default_alphas, non_adjacent_pair, grid_motion, zigzag_motion, flex3d
from .recover import recover_coloring, detect_flex
from .export import svg_frame, svg_frames, animated_svg, write_svg_frames
