# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
from .coloring import Color, EdgeColoring, NacColoring, NacVerdict, is_nac, \
    parse_coloring, serialize_coloring
from .search import enumerate_nac, iter_nac, find_nac, has_nac, \
    coloring_for_disconnected
