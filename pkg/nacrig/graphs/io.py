# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""
Readers and writers for the graph6 format and plain-text edge lists.
"""
import logging

import networkx as nx

from nacrig.exceptions import GraphParseError
from nacrig.graphs.graph import Graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = b'>>graph6<<'
_MIN_BYTE = 63
_MAX_BYTE = 126


def _check_byte(data, offset):
    if not _MIN_BYTE <= data[offset] <= _MAX_BYTE:
        raise GraphParseError('Byte {!r} out of the graph6 range 63..126'
                              .format(chr(data[offset])), offset=offset)


def _read_vertex_count(data, start):
    if start >= len(data):
        raise GraphParseError('Missing vertex count', offset=start)
    _check_byte(data, start)
    if data[start] != _MAX_BYTE:
        return data[start] - _MIN_BYTE, start + 1
    if start + 1 < len(data) and data[start + 1] == _MAX_BYTE:
        raise GraphParseError('Graphs with more than 258047 vertices are '
                              'not supported', offset=start + 1)
    if start + 4 > len(data):
        raise GraphParseError('Truncated vertex count', offset=len(data))
    n = 0
    for offset in range(start + 1, start + 4):
        _check_byte(data, offset)
        n = (n << 6) | (data[offset] - _MIN_BYTE)
    return n, start + 4


def parse_graph6(text):
    """
    Decodes a graph6 string, with or without the `>>graph6<<` header.

    The input is fully validated before being handed to networkx, errors
    report the offending byte offset in `text`.

    :param text: str or bytes, a single graph. One trailing newline is allowed.
    :return: The decoded Graph.
    :raises GraphParseError: On malformed input.
    """
    if isinstance(text, str):
        for offset, char in enumerate(text):
            if ord(char) > 127:
                raise GraphParseError(f'Non-ASCII character {char!r}',
                                      offset=offset)
        data = text.encode('ascii')
    else:
        data = bytes(text)
    if data.endswith(b'\r\n'):
        data = data[:-2]
    elif data.endswith(b'\n'):
        data = data[:-1]

    start = 0
    if data.startswith(b'>>'):
        if not data.startswith(GRAPH6_HEADER):
            raise GraphParseError('Malformed header, expected >>graph6<<',
                                  offset=0)
        start = len(GRAPH6_HEADER)

    n, body_start = _read_vertex_count(data, start)
    n_bits = n * (n - 1) // 2
    n_bytes = (n_bits + 5) // 6
    body = data[body_start:]
    for offset in range(body_start, min(len(data), body_start + n_bytes)):
        _check_byte(data, offset)
    if len(body) < n_bytes:
        raise GraphParseError(f'Truncated adjacency data, {n_bytes} bytes '
                              f'expected for {n} vertices', offset=len(data))
    if len(body) > n_bytes:
        raise GraphParseError('Trailing garbage after adjacency data',
                              offset=body_start + n_bytes)
    padding = 6 * n_bytes - n_bits
    if padding and (data[-1] - _MIN_BYTE) & ((1 << padding) - 1):
        raise GraphParseError('Non-zero padding bits', offset=len(data) - 1)

    nx_graph = nx.from_graph6_bytes(data[start:])
    return Graph(n, nx_graph.edges)


def serialize_graph6(g):
    """
    graph6 string of g, without header nor newline.
    """
    return nx.to_graph6_bytes(g.to_networkx(), header=False) \
        .rstrip(b'\n').decode('ascii')


def parse_edge_list(text):
    """
    Reads an edge list: whitespace separated "u v" pairs, one or more per
    line, '#' starts a comment. Vertex names are arbitrary tokens mapped to
    indices in order of first appearance and kept as the graph labels.
    """
    names = {}
    edges = []
    for line_no, line in enumerate(text.splitlines(), 1):
        tokens = line.split('#', 1)[0].split()
        if not tokens:
            continue
        if len(tokens) % 2:
            raise GraphParseError(f'Odd number of tokens ({len(tokens)})',
                                  line=line_no)
        for u, v in zip(tokens[::2], tokens[1::2]):
            if u == v:
                raise GraphParseError(f'Self-loop on vertex {u!r}',
                                      line=line_no)
            for name in (u, v):
                if name not in names:
                    names[name] = len(names)
            edges.append((names[u], names[v]))
    return Graph(len(names), edges, labels=list(names))


def serialize_edge_list(g):
    lines = ['{} {}'.format(g.label(u), g.label(v)) for u, v in g.edges]
    return '\n'.join(lines) + '\n' if lines else ''


def guess_format(text):
    """
    'edges' if the text looks like an edge list, 'graph6' otherwise.
    """
    content = [l.split('#', 1)[0].strip() for l in text.splitlines()]
    content = [l for l in content if l]
    if len(content) == 1 and len(content[0].split()) == 1:
        return 'graph6'
    return 'edges'


def read_graph(text, fmt=None):
    if fmt is None:
        fmt = guess_format(text)
    if fmt == 'graph6':
        return parse_graph6(text.strip())
    if fmt == 'edges':
        return parse_edge_list(text)
    raise NotImplementedError(fmt)
