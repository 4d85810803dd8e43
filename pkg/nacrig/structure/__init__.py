# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
from .delta import DeltaClassPartition, delta_classes
from .conditions import spanning_delta_check, edge_bound_check, \
    max_flexible_edges, find_independent_cut, coloring_from_independent_cut, \
    vertex_without_triangle, coloring_from_triangle_free_vertex, \
    find_connecting_edge_cut, coloring_from_edge_cut, has_path_with_edges
from .report import StructureReport, analyze_structure
