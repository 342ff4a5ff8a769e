"""
Piecewise-linear bounds of a convex curve from a set of knots.

The upper bound joins consecutive knots by chords. The lower bound is the
upper envelope of the supporting lines through the knots together with
g = 0, which is the supporting line of slope zero (q(0) = 0).
"""
from dataclasses import dataclass, field
import math

import numpy as np

# exact segments shorter than this share of the domain add no chord line
CHORD_RESOLUTION = 1e-6


def envelope(slopes, intercepts, lo, hi):
    """Vertices of max_i (slopes[i] * s + intercepts[i]) over [lo, hi]"""
    slopes = np.asarray(slopes, dtype=np.float64)
    intercepts = np.asarray(intercepts, dtype=np.float64)
    order = np.lexsort((intercepts, slopes))

    hull = []
    for a, b in zip(slopes[order], intercepts[order]):
        if hull and math.isclose(hull[-1][0], a, rel_tol=0, abs_tol=1e-14):
            hull.pop()
        while len(hull) >= 2:
            (a1, b1), (a2, b2) = hull[-2], hull[-1]
            # middle line never on top once the new one takes over
            if (b1 - b) * (a2 - a1) <= (b1 - b2) * (a - a1):
                hull.pop()
            else:
                break
        hull.append((a, b))

    hull = np.array(hull)
    breaks = [
        (b1 - b2) / (a2 - a1)
        for (a1, b1), (a2, b2) in zip(hull[:-1], hull[1:])
    ]
    xs = np.array(
        [lo] + [x for x in breaks if lo < x < hi] + [hi], dtype=np.float64
    )
    ys = np.max(hull[:, :1] * xs + hull[:, 1:], axis=0)
    return np.column_stack([xs, ys])


def distance_to_polyline(points, polyline):
    """Euclidean distance from each point to a polyline"""
    points = np.atleast_2d(points)
    if polyline.shape[0] == 1:
        return np.linalg.norm(points - polyline[0], axis=1)
    a = polyline[:-1]
    ab = polyline[1:] - a
    length2 = np.einsum('ij,ij->i', ab, ab)
    length2[length2 == 0] = 1.0
    ap = points[:, None, :] - a[None, :, :]
    t = np.clip(np.einsum('pjk,jk->pj', ap, ab) / length2, 0.0, 1.0)
    nearest = a[None, :, :] + t[..., None] * ab[None, :, :]
    return np.min(np.linalg.norm(points[:, None, :] - nearest, axis=2),
                  axis=1)


def _equidistant_points(start, stop, corners):
    """Points of the chord start-stop equally far from the two lower
    segments meeting at each corner (their angle bisector)."""
    found = []
    chord = stop - start
    for before, corner, after in corners:
        values = []
        for p, q in ((before, corner), (corner, after)):
            direction = q - p
            norm = np.hypot(*direction)
            if norm == 0:
                break
            normal = np.array([-direction[1], direction[0]]) / norm
            values.append((normal @ (start - p), normal @ chord))
        if len(values) != 2:
            continue
        (c1, m1), (c2, m2) = values
        if m1 == m2:
            continue
        t = (c2 - c1) / (m1 - m2)
        if 0.0 < t < 1.0:
            found.append(start + t * chord)
    return found


def directed_gap(upper, lower):
    """sup over the upper polyline of the distance to the lower polyline"""
    candidates = [point for point in upper]
    for start, stop in zip(upper[:-1], upper[1:]):
        inside = np.flatnonzero(
            (lower[1:-1, 0] >= start[0]) & (lower[1:-1, 0] <= stop[0])
        ) + 1
        corners = [(lower[j - 1], lower[j], lower[j + 1]) for j in inside]
        candidates.extend(_equidistant_points(start, stop, corners))
    return float(np.max(distance_to_polyline(np.array(candidates), lower)))


@dataclass(eq=False)
class CurveBounds:
    """Knots sorted by s with the upper and lower bounds they imply.

    ``exact[i]`` marks the segment between knots i and i + 1 as lying on
    the curve (both knots share one supporting line).
    """
    knots: list
    exact: list = None
    solves: int = 0
    history: list = field(default_factory=list)

    def __post_init__(self):
        if self.exact is None:
            self.exact = [False] * (len(self.knots) - 1)
        if len(self.exact) != len(self.knots) - 1:
            raise ValueError('one exact flag per segment')

    @property
    def s_values(self):
        return np.array([knot.s for knot in self.knots])

    @property
    def g_values(self):
        return np.array([knot.g for knot in self.knots])

    @property
    def domain(self):
        return self.knots[0].s, self.knots[-1].s

    def _lines(self, knots=None):
        """Supporting lines: g = 0, one per finite knot and, for the whole
        curve, the chord of every exact segment."""
        chords = knots is None
        knots = self.knots if knots is None else knots
        finite = [knot for knot in knots if not knot.is_endpoint]
        slopes = [0.0] + [knot.alpha for knot in finite]
        intercepts = [0.0] + [knot.q for knot in finite]
        if chords:
            # short chords have unreliable slopes
            shortest = CHORD_RESOLUTION * max(1.0, np.ptp(self.s_values))
            for i in np.flatnonzero(self.exact):
                left, right = self.knots[i], self.knots[i + 1]
                if right.s - left.s > shortest:
                    slope = (right.g - left.g) / (right.s - left.s)
                    slopes.append(slope)
                    intercepts.append(left.g - slope * left.s)
        return slopes, intercepts

    @property
    def upper(self):
        """Chord polyline through the knots, shape (K, 2)"""
        return np.column_stack([self.s_values, self.g_values])

    @property
    def lower(self):
        """Envelope polyline of the supporting lines, shape (J, 2)"""
        return envelope(*self._lines(), *self.domain)

    def upper_at(self, s):
        return np.interp(s, self.s_values, self.g_values)

    def lower_at(self, s):
        slopes, intercepts = self._lines()
        s = np.asarray(s, dtype=np.float64)
        values = np.outer(slopes, np.atleast_1d(s)) + np.array(
            intercepts)[:, None]
        result = values.max(axis=0)
        return result if s.ndim else float(result[0])

    @property
    def gap(self):
        return hausdorff_gap(self)

    def segment_index(self, s):
        """Index i of the segment [s_i, s_{i+1}] containing s"""
        index = int(np.searchsorted(self.s_values, s, side='right')) - 1
        return min(max(index, 0), len(self.knots) - 2)

    def segment_gap(self, i):
        """Gap between chord i and the lower bound of its own two knots"""
        if self.exact[i]:
            return 0.0
        left, right = self.knots[i], self.knots[i + 1]
        lower = envelope(*self._lines([left, right]), left.s, right.s)
        chord = np.array([[left.s, left.g], [right.s, right.g]])
        return directed_gap(chord, lower)

    def insert(self, i, new_knots, exact_between=False):
        """Put knots inside segment i, in order of s"""
        flags = [False] * (len(new_knots) + 1)
        if exact_between and len(new_knots) == 2:
            flags[1] = True
        self.knots[i + 1:i + 1] = new_knots
        self.exact[i:i + 1] = flags

    def chord_slopes(self):
        s, g = self.s_values, self.g_values
        return np.diff(g) / np.diff(s)


def hausdorff_gap(bounds):
    """Directed Hausdorff distance from the upper bound to the lower bound"""
    return directed_gap(bounds.upper, bounds.lower)
