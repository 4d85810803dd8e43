# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
from .pebble import PebbleGame, pebble_game, is_sparse, is_laman
from .henneberg import HennebergMove, HennebergTree, apply_henneberg, \
    moves_from, enumerate_laman
from .problematic import problematic_status, is_problematic
from .conjecture import ConjectureReport, verify_conjecture, \
    read_checkpoint, write_checkpoint
