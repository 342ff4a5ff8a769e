"""
Graph generators, addressable by strings such as ``complete:4`` or
``er:1000:0.03``.
"""
import logging

import networkx as nx
import numpy as np

from core.conf import curve_settings
from core.exceptions import (
    DisconnectedGraphError,
    InvalidParameterError,
)
from core.graphs import Graph, is_connected

logger = logging.getLogger(__name__)


def _require(condition, message):
    if not condition:
        raise InvalidParameterError(message)


def cycle(n):
    """Cycle on n >= 3 vertices"""
    _require(n >= 3, 'cycle needs N >= 3')
    return Graph.from_networkx(nx.cycle_graph(n), family=f'cycle:{n}')


def path(n):
    """Path on n >= 2 vertices"""
    _require(n >= 2, 'path needs N >= 2')
    return Graph.from_networkx(nx.path_graph(n), family=f'path:{n}')


def complete(n):
    """Complete graph K_n"""
    _require(n >= 2, 'complete graph needs N >= 2')
    return Graph.from_networkx(nx.complete_graph(n), family=f'complete:{n}')


def star(n):
    """Star with the hub at vertex 0 and n - 1 leaves"""
    _require(n >= 2, 'star needs N >= 2')
    return Graph.from_networkx(nx.star_graph(n - 1), family=f'star:{n}')


def er(n, p, seed=None):
    """Erdos-Renyi G(n, p); not necessarily connected"""
    _require(n >= 2, 'er needs N >= 2')
    _require(0 < p <= 1, 'er needs 0 < p <= 1')
    nx_graph = nx.fast_gnp_random_graph(n, p, seed=seed)
    return Graph.from_networkx(nx_graph, family=f'er:{n}:{p}')


def geometric(n, r, seed=None):
    """Connected random geometric graph in the unit square.

    Disconnected draws are rejected and redrawn with seeds derived from
    ``seed``, at most GEOMETRIC_RETRIES times.
    """
    _require(n >= 2, 'geometric needs N >= 2')
    _require(r > 0, 'geometric needs r > 0')
    retries = curve_settings.GEOMETRIC_RETRIES
    derived = np.random.default_rng(seed).integers(2 ** 32, size=retries)

    for attempt, attempt_seed in enumerate(derived):
        nx_graph = nx.random_geometric_graph(n, r, seed=int(attempt_seed))
        g = Graph.from_networkx(nx_graph, family=f'geometric:{n}:{r}')
        if is_connected(g):
            return g
        logger.info('geometric draw %d disconnected, retrying', attempt)

    raise DisconnectedGraphError(
        f'no connected geometric graph with N={n}, r={r} '
        f'after {retries} draws'
    )


def smallworld(n, k, beta, seed=None):
    """Connected Watts-Strogatz ring, k nearest neighbors on each side"""
    _require(k >= 1 and 2 * k < n, 'smallworld needs 1 <= k < N/2')
    _require(0 <= beta <= 1, 'smallworld needs 0 <= beta <= 1')
    try:
        nx_graph = nx.connected_watts_strogatz_graph(
            n, 2 * k, beta,
            tries=curve_settings.GEOMETRIC_RETRIES,
            seed=seed,
        )
    except nx.NetworkXError as exc:
        raise DisconnectedGraphError(str(exc)) from exc
    return Graph.from_networkx(nx_graph, family=f'smallworld:{n}:{k}:{beta}')


def grid(width, height):
    """Rectangular lattice, vertex id = x * height + y"""
    _require(width >= 1 and height >= 1 and width * height >= 2,
             'grid needs at least two vertices')
    nx_graph = nx.grid_2d_graph(width, height)
    return Graph.from_networkx(nx_graph, family=f'grid:{width}:{height}')


def mesh(width, height, seed=None):
    """Triangulated lattice with one randomly oriented diagonal per cell"""
    _require(width >= 2 and height >= 2, 'mesh needs width, height >= 2')
    nx_graph = nx.grid_2d_graph(width, height)
    flips = np.random.default_rng(seed).random((width - 1, height - 1))
    for x in range(width - 1):
        for y in range(height - 1):
            if flips[x, y] < 0.5:
                nx_graph.add_edge((x, y), (x + 1, y + 1))
            else:
                nx_graph.add_edge((x + 1, y), (x, y + 1))
    return Graph.from_networkx(nx_graph, family=f'mesh:{width}:{height}')


# kind -> (builder, parameter converters, takes a seed)
GENERATORS = {
    'cycle': (cycle, (int,), False),
    'path': (path, (int,), False),
    'complete': (complete, (int,), False),
    'star': (star, (int,), False),
    'er': (er, (int, float), True),
    'geometric': (geometric, (int, float), True),
    'smallworld': (smallworld, (int, int, float), True),
    'grid': (grid, (int, int), False),
    'mesh': (mesh, (int, int), True),
}


def generate(kind, *params, seed=None):
    """Build a graph of the named family"""
    try:
        builder, converters, seeded = GENERATORS[kind]
    except KeyError:
        raise InvalidParameterError(
            f'unknown generator {kind!r}; choose from {sorted(GENERATORS)}'
        )
    if len(params) != len(converters):
        raise InvalidParameterError(
            f'{kind} takes {len(converters)} parameter(s), '
            f'got {len(params)}'
        )
    try:
        values = [convert(value) for convert, value in zip(converters, params)]
    except (TypeError, ValueError) as exc:
        raise InvalidParameterError(f'bad {kind} parameter: {exc}') from exc

    if seeded:
        return builder(*values, seed=seed)
    return builder(*values)


def parse_generator(text, seed=None):
    """Build a graph from a string such as 'er:1000:0.03'"""
    kind, *params = text.strip().split(':')
    return generate(kind, *params, seed=seed)
