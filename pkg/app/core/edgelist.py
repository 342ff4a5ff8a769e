"""
Plain-text edge lists.

One edge per line as two whitespace-separated, 0-based, nonnegative
integer vertex ids. Lines whose first non-blank character is '#' are
comments and blank lines are skipped. The vertex count is one more than
the largest id that appears.
"""
import io
import logging

from core.exceptions import EdgeListError, SelfLoopError
from core.graphs import Graph

logger = logging.getLogger(__name__)


def _parse_id(token, line_no):
    """Parse one vertex id token"""
    if not (token.isascii() and token.isdigit()):
        raise EdgeListError(f'invalid vertex id {token!r}', line=line_no)
    return int(token)


def from_edge_list(stream, family='edgelist'):
    """Read a graph from a byte or text stream of edge-list lines"""
    if isinstance(stream, (bytes, str)):
        stream = io.BytesIO(stream.encode() if isinstance(stream, str)
                            else stream)

    edges = []
    seen = set()
    duplicates = 0
    max_id = -1
    for line_no, raw in enumerate(stream, start=1):
        if isinstance(raw, bytes):
            try:
                raw = raw.decode('utf-8')
            except UnicodeDecodeError as exc:
                raise EdgeListError('not valid UTF-8', line=line_no) from exc
        line = raw.strip()
        if not line or line.startswith('#'):
            continue

        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListError(
                f'expected 2 vertex ids, found {len(tokens)}', line=line_no
            )
        u, v = (_parse_id(token, line_no) for token in tokens)
        if u == v:
            raise SelfLoopError(f'self-loop on vertex {u}', line=line_no)

        key = (min(u, v), max(u, v))
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        edges.append(key)
        max_id = max(max_id, u, v)

    if max_id < 0:
        raise EdgeListError('edge list contains no edges')
    if duplicates:
        logger.warning('dropped %d duplicate edge(s)', duplicates)

    return Graph.from_edges(max_id + 1, edges, family=family)


def write_edge_list(g):
    """Serialize a graph as edge-list bytes"""
    lines = [f'# vertices: {g.n_vertices}']
    lines.extend(f'{u} {v}' for u, v in g.edges.tolist())
    return ('\n'.join(lines) + '\n').encode('ascii')
