"""Test maps, check suites and figure tables.

The maps used to exercise the bounds are radial stretches
x -> |x|^(a-1) x, which fix the unit sphere and have maximal dilatation
max(a, 1/a)^(n-1); restricted to the unit ball and extended by the identity
they belong to the class of K-quasiconformal maps with identity boundary
values.  Each suite returns a :class:`Report` whose lines have the form

    PASS|FAIL <check-id> max-slack=<value> [witness=<point>]

where ``max-slack`` is the largest amount by which the checked inequality
(left side minus right side) or identity (absolute difference) was
exceeded over the grid; a check passes when it is at most the tolerance.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.integrate import quad

from . import distortion_bounds as db
from .errors import DomainError
from .metrics import (
    HalfSpace,
    PuncturedSpace,
    UnitBall,
    as_point,
    j_metric,
    k_ball_radial,
    k_exact,
    k_numeric,
    mobius_to_zero,
    rho_ball,
)
from .ring_invariants import check_dimension, phi2, phi2_complement
from .special_functions import complement, mu

__all__ = [
    "CheckResult",
    "CurveTable",
    "DEFAULT_A_GRID",
    "DEFAULT_RADII",
    "DEFAULT_SEED",
    "RadialStretch",
    "Report",
    "default_k_grid",
    "default_pair_grid",
    "default_point_grid",
    "emit_figure",
    "figure4_consistency",
    "radial_apply",
    "rotation_example",
    "run_suite",
    "verify_ball_theorem",
    "verify_domain_theorems",
    "verify_figure3",
    "verify_holder",
    "verify_identity_suite",
    "verify_metrics",
    "verify_punctured_example",
]

DEFAULT_A_GRID = (1.05, 1.1, 1.25, 1.5, 2.0, 3.0)
DEFAULT_RADII = tuple(round(0.1 * i, 1) for i in range(1, 10))
DEFAULT_DIRECTIONS = 8
DEFAULT_SEED = 20110615
METRIC_TOL = 1e-9


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    passed: bool
    max_slack: float
    witness: tuple | None = None

    def line(self, precision: int = 15) -> str:
        s = f"{'PASS' if self.passed else 'FAIL'} {self.check_id} max-slack={self.max_slack:.{precision}g}"
        if self.witness is not None:
            s += " witness=(" + ",".join(f"{float(v):.{precision}g}" for v in self.witness) + ")"
        return s


@dataclass
class Report:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def violations(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    def lines(self, precision: int = 15) -> list[str]:
        return [c.line(precision) for c in self.checks]

    def __str__(self):
        return "\n".join(self.lines())


class _Check:
    """Accumulates the worst excess of one check over a grid."""

    def __init__(self, check_id: str, tol: float, strict: bool = False):
        self.check_id = check_id
        self.tol = tol
        self.strict = strict
        self.worst = -math.inf
        self.witness = None
        self.count = 0

    def add(self, excess: float, witness: Sequence[float]) -> None:
        self.count += 1
        if math.isnan(excess):
            excess = math.inf
        if excess > self.worst:
            self.worst = excess
            self.witness = tuple(float(w) for w in witness)

    def le(self, lhs: float, rhs: float, *witness) -> None:
        self.add(lhs - rhs, witness)

    def eq(self, a: float, b: float, *witness) -> None:
        self.add(abs(a - b), witness)

    def result(self) -> CheckResult:
        if self.count == 0:
            raise DomainError(f"check {self.check_id} saw no grid points")
        passed = self.worst < self.tol if self.strict else self.worst <= self.tol
        return CheckResult(self.check_id, passed, self.worst, None if passed else self.witness)


def _report(checks: Iterable[_Check]) -> Report:
    return Report([c.result() for c in checks])


# ---------------------------------------------------------------------------
# test maps and grids


@dataclass(frozen=True)
class RadialStretch:
    """x -> |x|^(a-1) x on R^n."""

    a: float
    n: int = 2

    def __post_init__(self):
        if not self.a > 0 or math.isinf(self.a):
            raise DomainError(f"stretch exponent must be positive and finite, got {self.a}")
        object.__setattr__(self, "n", check_dimension(self.n))

    @classmethod
    def with_dilatation(cls, K: float, n: int, expanding: bool = True) -> "RadialStretch":
        if not K >= 1:
            raise DomainError(f"K must be >= 1, got {K}")
        a = K ** (1.0 / (check_dimension(n) - 1))
        return cls(a if expanding else 1.0 / a, n)

    @property
    def dilatation(self) -> float:
        return max(self.a, 1.0 / self.a) ** (self.n - 1)

    def __call__(self, x) -> np.ndarray:
        return radial_apply(self, x)


def radial_apply(m: RadialStretch, x) -> np.ndarray:
    x = as_point(x, m.n)
    r = float(np.linalg.norm(x))
    if r == 0.0:
        if m.a < 1.0:
            raise DomainError("radial stretch with a < 1 is singular at the origin")
        return x.copy()
    if m.a == 1.0 or r == 1.0:
        return x.copy()
    return r ** (m.a - 1.0) * x


def _unit_directions(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal((count, n))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def default_point_grid(n: int, seed: int = DEFAULT_SEED) -> np.ndarray:
    """Radii 0.1..0.9 times 8 random unit directions (fixed seed)."""
    n = check_dimension(n)
    dirs = _unit_directions(n, DEFAULT_DIRECTIONS, np.random.default_rng(seed))
    return np.array([r * d for r in DEFAULT_RADII for d in dirs])


def _ball_sample(n: int, count: int, rng: np.random.Generator, radius: float) -> np.ndarray:
    dirs = _unit_directions(n, count, rng)
    rad = radius * rng.uniform(size=count) ** (1.0 / n)
    return dirs * rad[:, None]


def default_pair_grid(n: int, count: int = 200, seed: int = DEFAULT_SEED, radius: float = 0.99):
    """``count`` seeded pairs uniformly distributed in the ball of ``radius``."""
    rng = np.random.default_rng(seed)
    return list(zip(_ball_sample(n, count, rng, radius), _ball_sample(n, count, rng, radius)))


def default_k_grid(k_min: float = 1.01, k_max: float = 10.0, steps: int = 64) -> np.ndarray:
    """Log-spaced K grid."""
    return np.geomspace(k_min, k_max, steps)


def _stretches(a_grid) -> list[float]:
    out = []
    for a in a_grid:
        for b in (a, 1.0 / a):
            if b not in out:
                out.append(b)
    return out


# ---------------------------------------------------------------------------
# theorem checks against radial stretches


def verify_ball_theorem(a_grid=DEFAULT_A_GRID, point_grid=None, n: int = 2, tol: float = METRIC_TOL) -> Report:
    """rho_B(x, f(x)) against the three unit-ball bounds for radial stretches.

    Upper interval endpoints are used for n >= 3.
    """
    n = check_dimension(n)
    pts = default_point_grid(n) if point_grid is None else np.asarray(point_grid, dtype=float)
    if len(a_grid) == 0 or len(pts) == 0:
        raise DomainError("grids must be nonempty")
    norms = np.linalg.norm(pts, axis=1)
    if pts.ndim != 2 or pts.shape[1] != n or np.any(norms >= 1.0) or np.any(norms == 0.0):
        raise DomainError("grid points must be nonzero points of the open unit ball in R^n")
    vz = _Check(f"ball.vz[n={n}]", tol)
    mv = _Check(f"ball.mv[n={n}]", tol)
    alt = _Check(f"ball.vz_alt[n={n}]", tol)
    for a in a_grid:
        f = RadialStretch(a, n)
        K = f.dilatation
        b_vz = db.bound_vz(n, K).hi
        b_mv = db.bound_mv(n, K).hi
        b_alt = db.bound_vz_alt(n, K).hi
        for x in pts:
            d = rho_ball(x, f(x))
            vz.le(d, b_vz, a, *x)
            mv.le(d, b_mv, a, *x)
            alt.le(d, b_alt, a, *x)
    return _report([vz, mv, alt])


def verify_domain_theorems(a_grid=DEFAULT_A_GRID, n: int = 2, tol: float = METRIC_TOL) -> Report:
    """Convex, bounded-domain and small-K bounds, with the unit ball as the domain.

    The ball is convex and bounded (diam 2) with uniformity constant 2; for a
    radial stretch x and f(x) share a radius, so k_B is exact.
    """
    n = check_dimension(n)
    pts = default_point_grid(n)
    B = UnitBall()
    bounded = _Check(f"domain.bounded[n={n}]", tol)
    convex_j = _Check(f"domain.convex_j[n={n}]", tol)
    convex_kd = _Check(f"domain.convex_kd[n={n}]", tol)
    small = _Check(f"domain.small_k[n={n}]", tol)
    kn = db.k_threshold(n)
    small_seen = False
    for a in _stretches(a_grid) + [kn ** (1.0 / (n - 1))]:
        f = RadialStretch(a, n)
        K = f.dilatation
        b_bd = db.bound_bounded_domain(n, K, 2.0).hi
        b_j = db.bound_convex_j(n, K).hi
        b_k = db.bound_convex_kd(n, K, 2.0).hi
        use_small = 1.0 < K <= kn
        if use_small:
            small_seen = True
            b_sj = db.bound_convex_small_k(n, K)
            b_sk = db.bound_ball_k_small(n, K)
        for x in pts:
            y = f(x)
            bounded.le(float(np.linalg.norm(y - x)), b_bd, a, *x)
            j = j_metric(B, x, y)
            k = k_ball_radial(x, y)
            convex_j.le(j, b_j, a, *x)
            convex_kd.le(k, b_k, a, *x)
            if use_small:
                small.le(j, b_sj, a, *x)
                small.le(k, b_sk, a, *x)
    checks = [bounded, convex_j, convex_kd]
    if small_seen:
        checks.append(small)
    return _report(checks)


def verify_punctured_example(epsilon: float, n: int, tol: float = METRIC_TOL) -> Report:
    """Radial stretch with K = 1 + epsilon moving x0 = e^(-b) e_1 by k = 1/epsilon.

    a = (1 + eps)^(1/(n-1)), b = 1/(eps (a - 1)).  The example needs
    |x0|, |f(x0)| < 1/2, i.e. b > log 2; otherwise the regime check fails.
    """
    n = check_dimension(n)
    if not 0.0 < epsilon < 1.0:
        raise DomainError(f"epsilon must lie in (0, 1), got {epsilon}")
    a = (1.0 + epsilon) ** (1.0 / (n - 1))
    b = 1.0 / (epsilon * (a - 1.0))
    f = RadialStretch(a, n)
    x0 = np.zeros(n)
    x0[0] = math.exp(-b)
    y0 = f(x0)

    tag = f"[eps={epsilon:g},n={n}]"
    dil = _Check("punctured.dilatation" + tag, 1e-12)
    dil.eq(f.dilatation, 1.0 + epsilon, epsilon, n)
    regime = _Check("punctured.regime" + tag, 0.0)
    regime.le(math.log(2.0), b, epsilon, n, b)
    regime.le(max(float(np.linalg.norm(x0)), float(np.linalg.norm(y0))), 0.5, epsilon, n, b)
    ray = _Check("punctured.ray_identity" + tag, tol)
    ray.eq(math.log(float(np.linalg.norm(x0)) / float(np.linalg.norm(y0))), (a - 1.0) * b, epsilon, n)
    k = _Check("punctured.k" + tag, tol)
    k.eq(k_exact(PuncturedSpace(), x0, y0), 1.0 / epsilon, epsilon, n)
    return _report([dil, regime, ray, k])


def verify_holder(K_grid=(1.0, 1.2, 1.5, 2.0, 3.0), pair_grid=None, n: int = 2, tol: float = METRIC_TOL) -> Report:
    """Hölder bounds with M1 and the two-sided M2 form, upper interval ends."""
    n = check_dimension(n)
    pairs = default_pair_grid(n) if pair_grid is None else pair_grid
    m1 = _Check(f"holder.M1[n={n}]", tol)
    m2_up = _Check(f"holder.M2_upper[n={n}]", tol)
    m2_lo = _Check(f"holder.M2_lower[n={n}]", tol)
    for K in K_grid:
        hc = db.holder_constants(n, K)
        alpha = hc.alpha
        for expanding in (True, False):
            f = RadialStretch.with_dilatation(K, n, expanding)
            for x, y in pairs:
                x = as_point(x, n)
                y = as_point(y, n)
                if float(x @ x) >= 1.0 or float(y @ y) >= 1.0:
                    raise DomainError("Hölder pairs must lie in the open unit ball")
                dxy = float(np.linalg.norm(x - y))
                dfy = float(np.linalg.norm(f(x) - f(y)))
                m1.le(dfy, hc.M1.hi * dxy**alpha, K, *x, *y)
                m2_up.le(dfy, hc.M2.hi * dxy**alpha, K, *x, *y)
                m2_lo.le(dxy ** (1.0 / alpha) / hc.M2.hi, dfy, K, *x, *y)
    return _report([m1, m2_up, m2_lo])


# ---------------------------------------------------------------------------
# planar identities and inequalities


_R_GRID = tuple(i / 20 for i in range(0, 21))
_K_GRID = (1.0, 1.1, 1.5, 2.0, 5.0)


def verify_identity_suite(tolerance: float = 1e-10) -> Report:
    """Identities and inequalities for the planar distortion function.

    Inequalities are checked with the same tolerance as identities; the K = 1
    rows collapse every inequality to an equality.
    """
    if not tolerance > 0:
        raise DomainError("tolerance must be positive")
    tol = tolerance
    recip = _Check("identities.mu_reciprocal", tol)
    for r in _R_GRID[1:-1]:
        recip.eq(mu(r) * mu(complement(r)), math.pi**2 / 4.0, r)

    ident = _Check("identities.complement_symmetry", tol)
    ident3 = _Check("identities.complement_product", tol)
    submult = _Check("identities.submultiplicative", tol)
    am = _Check("identities.am_inequality", tol)
    lower1 = _Check("identities.complement_lower_bound", tol)
    lower2 = _Check("identities.complement_lower_bound_8", tol)
    chain = _Check("identities.power_bracket", tol)
    chain2 = _Check("identities.power_bracket_inverse", tol)
    remark = _Check("identities.mv_remark", tol)
    for K in _K_GRID:
        alpha = 1.0 / K
        for r in _R_GRID:
            p = phi2(K, r)
            pc = phi2_complement(K, r)
            q = phi2(1.0 / K, (1.0 - r) / (1.0 + r))
            ident.eq(q, pc / (1.0 + p), K, r)
            ident3.eq(pc, (1.0 + p) * q, K, r)
            # r^a <= phi <= 4^(1-a) r^a <= 2^(1-1/K) K r^a
            ra = r**alpha
            chain.le(ra, p, K, r)
            chain.le(p, 4.0 ** (1.0 - alpha) * ra, K, r)
            chain.le(4.0 ** (1.0 - alpha) * ra, 2.0 ** (1.0 - 1.0 / K) * K * ra, K, r)
            # 2^(1-K) K^(-K) r^b <= 4^(1-b) r^b <= phi_{1/K} <= r^b
            rb = r**K
            pi_ = phi2(1.0 / K, r)
            chain2.le(2.0 ** (1.0 - K) * K ** (-K) * rb, 4.0 ** (1.0 - K) * rb, K, r)
            chain2.le(4.0 ** (1.0 - K) * rb, pi_, K, r)
            chain2.le(pi_, rb, K, r)
            lb = 4.0 ** (1.0 - K) * (1.0 + r) ** (1.0 - K) * (1.0 - r) ** K
            lower1.le(lb, pc, K, r)
            lower2.le(8.0 ** (1.0 - K) * (1.0 - r) ** K, lb, K, r)
            remark.le(p, 2.0 * phi2(K, math.sqrt((1.0 + r) / 2.0)) ** 2 - 1.0, K, r)
            for pw in (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9):
                submult.le(phi2(1.0 / K, r**pw), pi_**pw, K, r, pw)
            for s in _R_GRID:
                A_rs = math.sqrt((r + s) / 2.0)
                am.le(math.sqrt((p + phi2(K, s)) / 2.0), phi2(K, A_rs), K, r, s)

    # h1 decreasing on (0,1), increasing on (1,inf); minimum at t = 1
    h_dec = _Check("identities.h1_decreasing", 0.0)
    h_inc = _Check("identities.h1_increasing", 0.0)
    h_min = _Check("identities.h1_argmin", 0.0)
    h_bern = _Check("identities.h1_log_inequality", tol)
    t_lo = np.linspace(0.01, 1.0, 100)
    t_hi = np.linspace(1.0, 50.0, 500)
    v_lo = [db.h1(t) for t in t_lo]
    v_hi = [db.h1(t) for t in t_hi]
    for i in range(len(t_lo) - 1):
        h_dec.add(v_lo[i + 1] - v_lo[i], (t_lo[i],))
    for i in range(len(t_hi) - 1):
        h_inc.add(v_hi[i] - v_hi[i + 1], (t_hi[i],))
    t_all = np.concatenate([t_lo, t_hi[1:]])
    v_all = v_lo + v_hi[1:]
    h_min.eq(float(t_all[int(np.argmin(v_all))]), 1.0, 1.0)
    for t in t_lo:
        h_bern.le(math.log1p(t) ** 2, math.log1p(t * t), t)

    # planar sqrt(2 log 12) bound, on the K range where its h1 step applies
    rem = _Check("identities.sqrt_log12_bound", tol)
    for K in np.linspace(1.0, 1.48, 25):
        p = phi2(K, 1.0 / 3.0)
        Q = 2.0 * p / phi2_complement(K, 1.0 / 3.0)
        if Q <= 4.0:
            rem.le(db.bound_convex_j(2, K).hi, db.planar_remark_bound(K), K)

    return _report(
        [recip, ident, ident3, chain, chain2, lower1, lower2, submult, am, remark, h_dec, h_inc, h_min, h_bern, rem]
    )


# ---------------------------------------------------------------------------
# metric properties


def _axis_distance(z: np.ndarray) -> float:
    return float(np.linalg.norm(z[1:]))


def rotation_example() -> tuple[float, float]:
    """Quasihyperbolic distance between (0,1,0) and (0,-1,0) in R^3 minus the x_1-axis.

    Returns (reduction, arc): the value from the punctured-plane reduction
    (the density 1/dist-to-axis splits into a half-plane part in (x_1, r) and
    the angle, which is all that changes here), and the density integrated
    along the rotation's half-circle.  Both equal pi.
    """
    x = np.array([0.0, 1.0, 0.0])
    y = np.array([0.0, -1.0, 0.0])
    reduction = k_exact(PuncturedSpace(), x[1:], y[1:])

    def density(t):
        z = np.array([0.0, math.cos(t), math.sin(t)])
        return 1.0 / _axis_distance(z)  # |z'(t)| = 1

    arc, _ = quad(density, 0.0, math.pi, epsabs=1e-13, epsrel=1e-13)
    return reduction, arc


def verify_metrics(pairs: int = 50, seed: int = DEFAULT_SEED, tol: float = METRIC_TOL) -> Report:
    """Metric inequalities on seeded random pairs."""
    rng = np.random.default_rng(seed)
    B = UnitBall()

    sandwich = _Check("metrics.hyperbolic_sandwich", tol)
    chord = _Check("metrics.chord_bound", tol)
    chord_eq = _Check("metrics.chord_equality", 1e-10)
    mob = _Check("metrics.mobius_invariance", 1e-10)
    mob_zero = _Check("metrics.mobius_base_to_zero", 1e-12)
    for n in (2, 3):
        X = _ball_sample(n, 100, rng, 0.99)
        Y = _ball_sample(n, 100, rng, 0.99)
        for x, y in zip(X, Y):
            th = math.tanh(rho_ball(x, y) / 2.0)
            nx, ny = float(np.linalg.norm(x)), float(np.linalg.norm(y))
            dxy = float(np.linalg.norm(x - y))
            sandwich.le(dxy / (1.0 + nx * ny), th, *x, *y)
            sandwich.le(th, dxy / (1.0 - nx * ny), *x, *y)
            chord.le(dxy, 2.0 * math.tanh(rho_ball(x, y) / 4.0), *x, *y)
            chord_eq.eq(2.0 * nx, 2.0 * math.tanh(rho_ball(x, -x) / 4.0), *x)
            T = mobius_to_zero(x)
            mob_zero.eq(float(np.linalg.norm(T(x))), 0.0, *x)
            z = _ball_sample(n, 1, rng, 0.99)[0]
            mob.eq(rho_ball(T(y), T(z)), rho_ball(y, z), *x, *y)

    j_le_k = _Check("metrics.j_le_k", 1e-6)
    uniform = _Check("metrics.ball_uniformity", 1e-3)
    X = _ball_sample(2, pairs // 2, rng, 0.95).tolist() + _ball_sample(3, pairs - pairs // 2, rng, 0.95).tolist()
    Y = _ball_sample(2, pairs // 2, rng, 0.95).tolist() + _ball_sample(3, pairs - pairs // 2, rng, 0.95).tolist()
    for x, y in zip(X, Y):
        j = j_metric(B, x, y)
        k = k_numeric(B, x, y)
        j_le_k.le(j, k, *x, *y)
        uniform.le(k, 2.0 * j, *x, *y)
    for n in (2, 3):
        for _ in range(20):
            x = _ball_sample(n, 1, rng, 1.0)[0] * 3.0
            y = _ball_sample(n, 1, rng, 1.0)[0] * 3.0
            j_le_k.le(j_metric(PuncturedSpace(), x, y), k_exact(PuncturedSpace(), x, y), *x, *y)
            x[-1], y[-1] = abs(x[-1]) + 1e-3, abs(y[-1]) + 1e-3
            j_le_k.le(j_metric(HalfSpace(), x, y), k_exact(HalfSpace(), x, y), *x, *y)

    refine = _Check("metrics.k_refinement", 1e-9)
    for x, y in list(zip(X, Y))[:6]:
        prev = k_numeric(B, x, y, segments=8)
        for m in (16, 32, 64):
            cur = k_numeric(B, x, y, segments=m)
            refine.le(cur, prev, m, *x, *y)
            prev = cur

    radial = _Check("metrics.radial_log2", 1e-3)
    radial.eq(k_numeric(B, [0.0, 0.0], [0.5, 0.0]), math.log(2.0), 0.5)

    rot = _Check("metrics.rotation_example", 1e-6)
    reduction, arc = rotation_example()
    rot.eq(reduction, math.pi, 0.0, 1.0, 0.0)
    rot.eq(arc, math.pi, 0.0, 1.0, 0.0)

    return _report([sandwich, chord, chord_eq, mob, mob_zero, j_le_k, uniform, refine, radial, rot])


# ---------------------------------------------------------------------------
# figure data


@dataclass
class CurveTable:
    """K-grid evaluation of named curves.  ``None`` marks an undefined value."""

    columns: list[str]
    rows: list[tuple]

    def __post_init__(self):
        if not self.columns or self.columns[0] != "K":
            raise DomainError("the first column must be K")
        Ks = [row[0] for row in self.rows]
        if any(b <= a for a, b in zip(Ks, Ks[1:])):
            raise DomainError("K values must be strictly increasing")
        if any(len(row) != len(self.columns) for row in self.rows):
            raise DomainError("every row needs one value per column")

    def column(self, name: str) -> list:
        i = self.columns.index(name)
        return [row[i] for row in self.rows]

    def to_csv(self, precision: int = 15) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for row in self.rows:
            w.writerow(["" if v is None else f"{v:.{precision}g}" for v in row])
        return buf.getvalue()


FIG3_COLUMNS = ["K", "MV_lo", "MV_hi", "VZ_lo", "VZ_hi", "Kr"]
FIG4_COLUMNS = ["K", "logFV", "logBV", "logMori", "logM1_lo", "logM1_hi"]


def _fig3_row(K: float) -> tuple:
    mv = db.bound_mv(2, K)
    vz = db.bound_vz(2, K)
    return (K, mv.lo, mv.hi, vz.lo, vz.hi, db.bound_krzyz(K))


def _fig4_row(K: float) -> tuple:
    mc = db.mori_constants(K)
    M1 = db.holder_constants(2, K).M1
    log_bv = None if mc.bv is None else math.log(mc.bv)
    return (K, math.log(mc.fv), log_bv, math.log(mc.conjecture), math.log(M1.lo), math.log(M1.hi))


def emit_figure(figure: str, k_min: float, k_max: float, steps: int, spacing: str = "linear") -> CurveTable:
    """Curve data for the planar bound comparisons.

    ``fig3``: the two ball bounds (as interval pairs) and Krzyż's bound.
    ``fig4``: logarithms of the FV, BV (blank for K >= 4/3), conjectured
    Mori and M1 constants.
    """
    if figure not in ("fig3", "fig4"):
        raise DomainError(f"unknown figure {figure!r}; expected fig3 or fig4")
    if not (1.0 < k_min < k_max) or math.isinf(k_max):
        raise DomainError(f"need 1 < k_min < k_max < inf, got {k_min}, {k_max}")
    if int(steps) != steps or steps < 2:
        raise DomainError(f"steps must be an integer >= 2, got {steps}")
    if spacing == "linear":
        Ks = np.linspace(k_min, k_max, int(steps))
    elif spacing == "log":
        Ks = np.geomspace(k_min, k_max, int(steps))
    else:
        raise DomainError(f"spacing must be 'linear' or 'log', got {spacing!r}")
    if figure == "fig3":
        return CurveTable(list(FIG3_COLUMNS), [_fig3_row(float(K)) for K in Ks])
    return CurveTable(list(FIG4_COLUMNS), [_fig4_row(float(K)) for K in Ks])


def verify_figure3(k_grid=None, tol: float = 1e-10) -> Report:
    """Kr <= VZ <= MV and VZ = VZ_alt on a K grid (n = 2)."""
    Ks = default_k_grid() if k_grid is None else k_grid
    order = _Check("fig3.kr_le_vz_le_mv", tol)
    equiv = _Check("fig3.vz_alt_equals_vz", tol)
    for K in Ks:
        K = float(K)
        vz = db.bound_vz(2, K).hi
        order.le(db.bound_krzyz(K), vz, K)
        order.le(vz, db.bound_mv(2, K).hi, K)
        equiv.eq(db.bound_vz_alt(2, K).hi, vz, K)
    small = _Check("fig3.convex_j_le_small_k", tol)
    kn = db.k_threshold(2)
    for K in np.linspace(1.0 + 1e-6, kn, 40):
        small.le(db.bound_convex_j(2, float(K)).hi, db.bound_convex_small_k(2, float(K)), K)
    return _report([order, equiv, small])


def figure4_consistency(k_grid) -> Report:
    """log BV < log 16^(1-1/K) < log FV at each K (strict; read off the figure).

    Reported only: the BV formula crosses the conjectured Mori constant
    near K = 1.3088, inside its stated validity range.
    """
    bv_mori = _Check("fig4.bv_lt_mori", 0.0, strict=True)
    mori_fv = _Check("fig4.mori_lt_fv", 0.0, strict=True)
    bv_fv = _Check("fig4.bv_lt_fv", 0.0, strict=True)
    for K in k_grid:
        K = float(K)
        mc = db.mori_constants(K)
        if mc.bv is None:
            continue
        lb, lm, lf = math.log(mc.bv), math.log(mc.conjecture), math.log(mc.fv)
        bv_mori.le(lb, lm, K)
        mori_fv.le(lm, lf, K)
        bv_fv.le(lb, lf, K)
    return _report([bv_mori, mori_fv, bv_fv])


# ---------------------------------------------------------------------------
# suites


def _theorems(tol: float) -> Report:
    rep = Report()
    for n in (2, 3):
        rep.extend(verify_ball_theorem(n=n, tol=tol))
        rep.extend(verify_domain_theorems(n=n, tol=tol))
        rep.extend(verify_holder(n=n, tol=tol))
        for eps in (0.1, 0.25, 0.5):
            rep.extend(verify_punctured_example(eps, n, tol=tol))
    rep.extend(verify_figure3())
    bv_fv = _Check("fig4.bv_le_fv", 0.0)
    for K in np.linspace(1.01, 1.33, 33):
        bv_fv.le(db.bv_bound(float(K)), db.fv_bound(float(K)), K)
    rep.checks.append(bv_fv.result())
    return rep


SUITES = ("identities", "theorems", "metrics", "all")


def run_suite(name: str, tol: float | None = None) -> Report:
    """Run a named suite.

    ``tol`` replaces the default comparison tolerance of the floating-point
    checks.  Checks whose tolerance is a discretization or quadrature error
    budget (numeric k, the rotation arc) and exact orderings keep their own.
    """
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    if tol is not None and not tol > 0:
        raise DomainError("tolerance must be positive")
    rep = Report()
    if name in ("identities", "all"):
        rep.extend(verify_identity_suite(1e-10 if tol is None else tol))
    if name in ("theorems", "all"):
        rep.extend(_theorems(METRIC_TOL if tol is None else tol))
    if name in ("metrics", "all"):
        rep.extend(verify_metrics(tol=METRIC_TOL if tol is None else tol))
    return rep
