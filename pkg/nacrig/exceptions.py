# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""
Error types raised by nacrig.
"""


class NacRigError(Exception):
    pass


class GraphParseError(NacRigError, ValueError):
    """
    Raised when a graph6 string or an edge list cannot be decoded.

    :param offset: Byte offset of the offending byte (graph6 input).
    :param line: 1-based line number of the offending line (edge lists).
    """
    def __init__(self, message, offset=None, line=None):
        if offset is not None:
            message = f'{message} (at byte {offset})'
        elif line is not None:
            message = f'{message} (line {line})'
        super().__init__(message)
        self.offset = offset
        self.line = line


class ContractError(NacRigError, ValueError):
    pass


class CapacityError(NacRigError):
    pass


class CheckpointError(NacRigError):
    pass


class ClassificationError(NacRigError):
    pass
