"""Hyperbolic, distance-ratio and quasihyperbolic metrics.

Points are 1-d numpy arrays of length n >= 2; anything array-like is
accepted and converted by :func:`as_point`.  Domains are small frozen
dataclasses; :func:`dist_boundary` is the single place that knows how far a
point is from the boundary of each of them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, UnsupportedOperationError

__all__ = [
    "BoundedDiameter",
    "ConvexPolytope",
    "HalfSpace",
    "MobiusBallMap",
    "PuncturedSpace",
    "UnitBall",
    "as_point",
    "dist_boundary",
    "j_metric",
    "k_exact",
    "k_numeric",
    "k_ball_radial",
    "mobius_to_zero",
    "polyline_length",
    "rho_ball",
]

POLYTOPE_MARGIN = 1e-9


def as_point(x, n: int | None = None) -> np.ndarray:
    p = np.asarray(x, dtype=float)
    if p.ndim != 1 or p.size < 2:
        raise DomainError(f"a point needs a 1-d coordinate vector of length >= 2, got shape {p.shape}")
    if n is not None and p.size != n:
        raise DomainError(f"dimension mismatch: expected {n}, got {p.size}")
    if not np.all(np.isfinite(p)):
        raise DomainError("point coordinates must be finite")
    return p


def _pair(x, y) -> tuple[np.ndarray, np.ndarray]:
    x = as_point(x)
    return x, as_point(y, x.size)


# ---------------------------------------------------------------------------
# domains


@dataclass(frozen=True)
class UnitBall:
    """The open unit ball of R^n."""


@dataclass(frozen=True)
class HalfSpace:
    """The upper half-space {x : x_n > 0}."""


@dataclass(frozen=True)
class PuncturedSpace:
    """R^n with the origin removed."""


@dataclass(frozen=True, eq=False)
class ConvexPolytope:
    """Intersection of half-spaces {x : <normal_i, x> < offset_i}.

    Normals must be unit vectors.  Nonemptiness of the interior is checked
    with a small linear program at construction.
    """

    normals: np.ndarray
    offsets: np.ndarray
    interior_point: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        A = np.atleast_2d(np.asarray(self.normals, dtype=float))
        b = np.atleast_1d(np.asarray(self.offsets, dtype=float))
        if A.shape[0] != b.size or A.shape[1] < 2:
            raise DomainError("need one offset per normal and dimension >= 2")
        if not np.allclose(np.linalg.norm(A, axis=1), 1.0, atol=1e-12):
            raise DomainError("polytope normals must be unit vectors")
        object.__setattr__(self, "normals", A)
        object.__setattr__(self, "offsets", b)
        object.__setattr__(self, "interior_point", _chebyshev_center(A, b))

    @classmethod
    def box(cls, lower, upper) -> "ConvexPolytope":
        """Axis-parallel box lower < x < upper."""
        lower = np.asarray(lower, dtype=float)
        upper = np.asarray(upper, dtype=float)
        eye = np.eye(lower.size)
        return cls(np.vstack([eye, -eye]), np.concatenate([upper, -lower]))

    @property
    def dim(self) -> int:
        return self.normals.shape[1]


def _chebyshev_center(A: np.ndarray, b: np.ndarray) -> np.ndarray:
    from scipy.optimize import linprog

    n = A.shape[1]
    # maximize t subject to A x + t <= b (unit normals), t <= 1
    c = np.zeros(n + 1)
    c[-1] = -1.0
    res = linprog(
        c,
        A_ub=np.hstack([A, np.ones((A.shape[0], 1))]),
        b_ub=b,
        bounds=[(None, None)] * n + [(None, 1.0)],
        method="highs",
    )
    if res.status != 0 or res.x[-1] <= POLYTOPE_MARGIN:
        raise DomainError("polytope has empty interior")
    return res.x[:n]


@dataclass(frozen=True)
class BoundedDiameter:
    """An otherwise unspecified bounded domain, known only through diam(D)."""

    diam: float

    def __post_init__(self):
        if not self.diam > 0 or math.isinf(self.diam):
            raise DomainError(f"diameter must be positive and finite, got {self.diam}")


def _dist_many(D, P: np.ndarray) -> np.ndarray:
    """Boundary distance for each row of P; no membership checks."""
    if isinstance(D, UnitBall):
        return 1.0 - np.linalg.norm(P, axis=-1)
    if isinstance(D, HalfSpace):
        return P[..., -1].copy()
    if isinstance(D, PuncturedSpace):
        return np.linalg.norm(P, axis=-1)
    if isinstance(D, ConvexPolytope):
        return np.min(D.offsets - P @ D.normals.T, axis=-1)
    if isinstance(D, BoundedDiameter):
        raise UnsupportedOperationError("boundary distance is not available for BoundedDiameter domains")
    raise UnsupportedOperationError(f"unknown domain {D!r}")


def dist_boundary(D, x) -> float:
    """Euclidean distance from an interior point ``x`` to the boundary of ``D``."""
    x = as_point(x)
    if isinstance(D, ConvexPolytope) and x.size != D.dim:
        raise DomainError(f"dimension mismatch: polytope in R^{D.dim}, point in R^{x.size}")
    d = float(_dist_many(D, x))
    margin = POLYTOPE_MARGIN if isinstance(D, ConvexPolytope) else 0.0
    if not d > margin:
        raise DomainError(f"point {x.tolist()} is not interior to {type(D).__name__}")
    return d


# ---------------------------------------------------------------------------
# hyperbolic metric of the ball


def rho_ball(x, y) -> float:
    """Hyperbolic distance in the unit ball.

    Uses tanh(rho/2) = |x-y| / sqrt(|x-y|^2 + (1-|x|^2)(1-|y|^2)).
    """
    x, y = _pair(x, y)
    sx = 1.0 - float(x @ x)
    sy = 1.0 - float(y @ y)
    if not (sx > 0 and sy > 0):
        raise DomainError("rho_ball requires points in the open unit ball")
    d2 = float((x - y) @ (x - y))
    if d2 == 0.0:
        return 0.0
    return 2.0 * math.atanh(math.sqrt(d2 / (d2 + sx * sy)))


@dataclass(frozen=True, eq=False)
class MobiusBallMap:
    """Möbius self-map of the unit ball sending ``base`` to the origin.

    T(y) = ((1 - |a|^2)(y - a) - |y - a|^2 a) / (1 - 2<a, y> + |a|^2 |y|^2)

    with a = base.  Its inverse is the same formula with -a.
    """

    base: np.ndarray

    def __post_init__(self):
        a = as_point(self.base)
        if not float(a @ a) < 1.0:
            raise DomainError("Möbius base point must lie in the open unit ball")
        object.__setattr__(self, "base", a)

    @staticmethod
    def _apply(a: np.ndarray, y: np.ndarray) -> np.ndarray:
        aa = float(a @ a)
        diff = y - a
        den = 1.0 - 2.0 * float(a @ y) + aa * float(y @ y)
        return ((1.0 - aa) * diff - float(diff @ diff) * a) / den

    def _check(self, y) -> np.ndarray:
        y = as_point(y, self.base.size)
        if not float(y @ y) < 1.0:
            raise DomainError("Möbius map argument must lie in the open unit ball")
        return y

    def __call__(self, y) -> np.ndarray:
        return self._apply(self.base, self._check(y))

    apply = __call__

    def inverse(self, z) -> np.ndarray:
        return self._apply(-self.base, self._check(z))


def mobius_to_zero(x) -> MobiusBallMap:
    return MobiusBallMap(x)


# ---------------------------------------------------------------------------
# distance-ratio and quasihyperbolic metrics


def j_metric(D, x, y) -> float:
    """log(1 + |x-y| / min(d(x), d(y)))."""
    x, y = _pair(x, y)
    dx = dist_boundary(D, x)
    dy = dist_boundary(D, y)
    return math.log1p(float(np.linalg.norm(x - y)) / min(dx, dy))


def _angle(x: np.ndarray, y: np.ndarray) -> float:
    # atan2(|rejection|, dot) keeps accuracy near 0 and pi
    nx = float(np.linalg.norm(x))
    ux = x / nx
    along = float(ux @ y)
    rej = float(np.linalg.norm(y - along * ux))
    return math.atan2(rej, along)


def k_exact(D, x, y) -> float:
    """Closed-form quasihyperbolic distance for the punctured space and half-space.

    Punctured space: sqrt(theta^2 + log^2(|x|/|y|)), theta the angle at 0.
    Half-space: the hyperbolic distance arcosh(1 + |x-y|^2 / (2 x_n y_n)).
    """
    x, y = _pair(x, y)
    if not isinstance(D, (PuncturedSpace, HalfSpace)):
        raise UnsupportedOperationError(f"no closed form for {type(D).__name__}; use k_numeric")
    dx = dist_boundary(D, x)
    dy = dist_boundary(D, y)
    if isinstance(D, PuncturedSpace):
        theta = _angle(x, y)
        return math.hypot(theta, math.log(dx / dy))
    d2 = float((x - y) @ (x - y))
    # arcosh(1 + u) = log1p(u + sqrt(u (u + 2)))
    u = d2 / (2.0 * dx * dy)
    return math.log1p(u + math.sqrt(u * (u + 2.0)))


def k_ball_radial(x, y) -> float:
    """Quasihyperbolic distance in the unit ball between points on one radius.

    The geodesic is the radial segment, so k = |log((1-|x|)/(1-|y|))|.  The
    caller is responsible for x, y and 0 being collinear with x, y on the same
    side of the origin.
    """
    dx = dist_boundary(UnitBall(), x)
    dy = dist_boundary(UnitBall(), y)
    return abs(math.log(dx / dy))


def polyline_length(D, vertices) -> float:
    """Trapezoidal quasihyperbolic length of a polyline (rows are vertices)."""
    P = np.asarray(vertices, dtype=float)
    inv_d = 1.0 / _dist_many(D, P)
    seg = np.linalg.norm(np.diff(P, axis=0), axis=1)
    return float(np.sum(seg * 0.5 * (inv_d[:-1] + inv_d[1:])))


def _local_cost(D, prev, cur, nxt, margin):
    """Cost of the two segments touching each vertex in ``cur``; inf outside D."""
    d = _dist_many(D, cur)
    inv = np.where(d > margin, 1.0 / np.where(d > margin, d, 1.0), np.inf)
    inv_p = 1.0 / _dist_many(D, prev)
    inv_n = 1.0 / _dist_many(D, nxt)
    left = np.linalg.norm(cur - prev, axis=1) * 0.5 * (inv_p + inv)
    right = np.linalg.norm(nxt - cur, axis=1) * 0.5 * (inv + inv_n)
    return left + right


def _descend(D, P: np.ndarray, rounds: int, margin: float) -> None:
    """Coordinate descent on interior vertices of P, in place.

    Vertices are updated in two interleaved halves so that every accepted
    move touches segments no other move in the same batch touches; the total
    length therefore never increases.
    """
    m = P.shape[0] - 1
    if m < 2 or rounds <= 0:
        return
    n = P.shape[1]
    step = 0.5 * float(np.max(np.linalg.norm(np.diff(P, axis=0), axis=1)))
    for _ in range(rounds):
        for parity in (1, 2):
            idx = np.arange(parity, m, 2)
            if idx.size == 0:
                continue
            prev = P[idx - 1]
            nxt = P[idx + 1]
            cur = P[idx]
            base = _local_cost(D, prev, cur, nxt, margin)
            for c in range(n):
                up = cur.copy()
                up[:, c] += step
                down = cur.copy()
                down[:, c] -= step
                cost_up = _local_cost(D, prev, up, nxt, margin)
                cost_down = _local_cost(D, prev, down, nxt, margin)
                use_up = (cost_up < base) & (cost_up <= cost_down)
                use_down = (cost_down < base) & ~use_up
                cur = np.where(use_up[:, None], up, np.where(use_down[:, None], down, cur))
                base = np.where(use_up, cost_up, np.where(use_down, cost_down, base))
            P[idx] = cur
        step *= 0.5


def k_numeric(D, x, y, segments: int = 64, rounds: int = 30) -> float:
    """Upper estimate of k_D(x, y) for the unit ball or a convex polytope.

    Minimizes the trapezoidal length of a polyline with ``segments`` pieces.
    The polyline is built coarse-to-fine: the odd part of ``segments`` is
    optimized first, then repeatedly bisected and re-optimized.  Because the
    boundary distance is concave on these domains, bisecting a segment never
    increases its trapezoidal length, so doubling ``segments`` never
    increases the result.  ``rounds`` is the number of descent sweeps (with
    halving step) per level.
    """
    if not isinstance(D, (UnitBall, ConvexPolytope)):
        raise UnsupportedOperationError(f"k_numeric supports UnitBall and ConvexPolytope, not {type(D).__name__}")
    if int(segments) != segments or segments < 1:
        raise DomainError(f"segments must be a positive integer, got {segments}")
    if int(rounds) != rounds or rounds < 0:
        raise DomainError(f"rounds must be a nonnegative integer, got {rounds}")
    x, y = _pair(x, y)
    dist_boundary(D, x)
    dist_boundary(D, y)
    if np.array_equal(x, y):
        return 0.0
    margin = POLYTOPE_MARGIN if isinstance(D, ConvexPolytope) else 0.0

    base = int(segments)
    levels = 0
    while base % 2 == 0:
        base //= 2
        levels += 1
    t = np.linspace(0.0, 1.0, base + 1)[:, None]
    P = (1.0 - t) * x + t * y
    _descend(D, P, int(rounds), margin)
    for _ in range(levels):
        Q = np.empty((2 * P.shape[0] - 1, P.shape[1]))
        Q[0::2] = P
        Q[1::2] = 0.5 * (P[:-1] + P[1:])
        P = Q
        _descend(D, P, int(rounds), margin)
    return polyline_length(D, P)
