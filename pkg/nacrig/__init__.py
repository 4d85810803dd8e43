# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
from .graphs import Graph, parse_graph6, parse_edge_list, load_fixture, \
    canonical_form
from .colorings import EdgeColoring, NacColoring, is_nac, enumerate_nac, \
    has_nac
from .structure import delta_classes, analyze_structure
from .laman import is_laman, enumerate_laman, verify_conjecture
from .motions import component_grid, grid_motion, zigzag_motion, flex3d, \
    recover_coloring
