# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
from .graph import Graph, VertexPartition, connected_components, triangles, \
    normalize_edge
from .io import parse_graph6, serialize_graph6, parse_edge_list, \
    serialize_edge_list, read_graph
from .canonical import CanonicalCode, canonical_form, canonical_labeling, \
    canonical_graph
from .fixtures import FIXTURES, load_fixture
