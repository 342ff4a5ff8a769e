"""
Distances from a center vertex.

Any semi-metric can be used as long as it is zero at the center and
positive elsewhere. Geodesic (hop count) distance is the one provided.
"""
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csgraph

from core.exceptions import DisconnectedGraphError, GraphError


@dataclass(frozen=True, eq=False)
class DistanceVector:
    """Per-vertex distances d(center, v); the diagonal of P_center"""
    center: int
    dist: np.ndarray = field(repr=False)

    @classmethod
    def from_values(cls, center, values):
        """Validate semi-metric distances from ``center``"""
        dist = np.array(values, dtype=np.float64)
        center = int(center)
        if dist.ndim != 1 or not 0 <= center < dist.size:
            raise GraphError('center outside the distance vector')
        if not np.all(np.isfinite(dist)):
            unreachable = int(np.flatnonzero(~np.isfinite(dist))[0])
            raise DisconnectedGraphError(
                f'vertex {unreachable} unreachable from {center}'
            )
        others = np.delete(dist, center)
        if dist[center] != 0 or np.any(others <= 0):
            raise GraphError(
                'semi-metric must be zero at the center and positive elsewhere'
            )
        dist.setflags(write=False)
        return cls(center, dist)

    @property
    def eccentricity(self):
        return float(self.dist.max())

    @property
    def squared(self):
        """Diagonal of P^2"""
        return self.dist ** 2

    @property
    def farthest(self):
        """Lowest vertex id at maximal distance"""
        return int(np.argmax(self.dist))


def geodesic_distances(g, u0):
    """Breadth-first hop counts from u0"""
    u0 = g.check_vertex(u0)
    dist = csgraph.shortest_path(
        g.adjacency, directed=False, unweighted=True, indices=u0
    )
    return DistanceVector.from_values(u0, dist)


METRICS = {
    'geodesic': geodesic_distances,
}
