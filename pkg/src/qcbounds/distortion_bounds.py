"""Distortion bounds for K-quasiconformal maps with identity boundary values.

Every bound that depends on the distortion function phi_{K,n} returns a
:class:`~qcbounds.ring_invariants.RealInterval`: exact (degenerate) in the
plane, a certified bracket for n >= 3.  The optional ``lam`` keyword routes a
call through the power-bound bracket with an explicit Grötzsch-constant
interval; ``lam=RealInterval(4, 4)`` with n = 2 is how the bracket code is
checked against the planar exact values.

Bounds whose theorems only hold for restricted K raise
:class:`~qcbounds.errors.ValidityRangeError` instead of extrapolating.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BoundUndefinedError, DomainError, ValidityRangeError
from .ring_invariants import (
    RealInterval,
    alpha_exponent,
    check_dimension,
    lambda_bounds,
    phi2,
    phi2_complement,
    phi_lower_family,
    phi_upper_family,
)
from .special_functions import mu_inv

__all__ = [
    "BV_K_MAX",
    "BoundValue",
    "HolderConstants",
    "MoriConstants",
    "bound_axis_fixed",
    "bound_ball_k_small",
    "bound_bounded_domain",
    "bound_convex_j",
    "bound_convex_kd",
    "bound_convex_small_k",
    "bound_krzyz",
    "bound_mv",
    "bound_planar_uniformly_perfect",
    "bound_vz",
    "bound_vz_alt",
    "bv_bound",
    "fv_bound",
    "h1",
    "holder_A",
    "holder_C",
    "holder_constants",
    "k_threshold",
    "lower_bound_K_uniform",
    "mori_conjecture",
    "mori_constants",
    "planar_remark_bound",
    "sphere_area",
]

BoundValue = RealInterval

# below K - 1 < LIMIT_SWITCH removable singularities return their limit
LIMIT_SWITCH = 1e-12
BV_K_MAX = 4.0 / 3.0

_SQRT_HALF = math.sqrt(0.5)
_SMALL_K_COEF = 2.0 * math.sqrt(1.0 + math.log(6.0))


def _check_K(K: float) -> None:
    if not (K >= 1.0) or math.isinf(K):
        raise DomainError(f"dilatation K must be finite and >= 1, got {K}")


def _log_ratio(num: float, den: float) -> float:
    if den <= 0.0:
        return math.inf
    return max(0.0, math.log(num / den))


# ---------------------------------------------------------------------------
# unit ball


def bound_mv(n: int, K: float, *, lam: RealInterval | None = None) -> BoundValue:
    """Upper bound for rho_B(x, f(x)) through phi_{1/K,n}(1/sqrt 2).

    log((1 - p^2)/p^2), p = phi_{1/K,n}(1/sqrt 2); decreasing in p.
    """
    n = check_dimension(n)
    _check_K(K)
    if K == 1.0:
        return RealInterval.point(0.0)
    p = phi_lower_family(K, n, _SQRT_HALF, lam=lam)
    return p.map_decreasing(lambda q: _log_ratio(1.0 - q * q, q * q))


def bound_vz(n: int, K: float, *, lam: RealInterval | None = None) -> BoundValue:
    """Upper bound for rho_B(x, f(x)): log((1 - p)/p), p = phi_{1/K,n}(1/2)."""
    n = check_dimension(n)
    _check_K(K)
    if K == 1.0:
        return RealInterval.point(0.0)
    p = phi_lower_family(K, n, 0.5, lam=lam)
    return p.map_decreasing(lambda q: _log_ratio(1.0 - q, q))


def bound_vz_alt(n: int, K: float, *, lam: RealInterval | None = None) -> BoundValue:
    """Alternative ball bound log(2p/(1 - p)), p = phi_{K,n}(1/3).

    Coincides with :func:`bound_vz` when n = 2.
    """
    n = check_dimension(n)
    _check_K(K)
    if K == 1.0:
        return RealInterval.point(0.0)
    if n == 2 and lam is None:
        s = 1.0 / 3.0
        return RealInterval.point(_log_ratio(2.0 * phi2(K, s), phi2_complement(K, s)))
    p = phi_upper_family(K, n, 1.0 / 3.0, lam=lam)
    return p.map_increasing(lambda q: _log_ratio(2.0 * q, 1.0 - q))


def bound_krzyz(K: float) -> float:
    """Krzyż's sharp planar bound 2 artanh mu_inv(log((sqrt K + 1)/(sqrt K - 1))).

    Defined for K > 1; returns the limit 0 once K - 1 drops below 1e-12.
    """
    if not K > 1.0 or math.isinf(K):
        raise DomainError(f"Krzyż bound requires finite K > 1, got {K}")
    if K - 1.0 < LIMIT_SWITCH:
        return 0.0
    sk = math.sqrt(K)
    # sqrt K - 1 written as (K - 1)/(sqrt K + 1) to keep digits near K = 1
    c = mu_inv(math.log((sk + 1.0) * (sk + 1.0) / (K - 1.0)))
    if c >= 1.0:
        return math.inf
    return 2.0 * math.atanh(c)


def bound_planar_uniformly_perfect(K: float, C_D: float) -> float:
    """j_D <= k_D <= C(D) rho_D <= C(D) Kr(K) for uniformly perfect plane domains."""
    if not C_D >= 1.0 or math.isinf(C_D):
        raise DomainError(f"comparison constant C(D) must be finite and >= 1, got {C_D}")
    return C_D * bound_krzyz(K)


def bound_bounded_domain(n: int, K: float, diam: float, *, lam: RealInterval | None = None) -> BoundValue:
    """Bound on |f(x) - x| in a bounded domain of diameter ``diam``.

    diam * tanh(log((1 - b)/b) / 2) with b = phi_{1/K,n}(1/2), which is the
    same number as diam * (1 - 2b).
    """
    n = check_dimension(n)
    _check_K(K)
    if not diam > 0.0 or math.isinf(diam):
        raise DomainError(f"diameter must be positive and finite, got {diam}")
    if K == 1.0:
        return RealInterval.point(0.0)
    b = phi_lower_family(K, n, 0.5, lam=lam)
    return b.map_decreasing(lambda q: diam * max(0.0, 1.0 - 2.0 * q))


# ---------------------------------------------------------------------------
# convex domains


def _convex_q(K: float, n: int, s: float, lam) -> RealInterval:
    f = (1.0 - s) / s
    if n == 2 and lam is None:
        pc = phi2_complement(K, s)
        return RealInterval.point(math.inf if pc == 0.0 else f * phi2(K, s) / pc)
    p = phi_upper_family(K, n, s, lam=lam)

    def q(v):
        return math.inf if v >= 1.0 else f * v / (1.0 - v)

    return p.map_increasing(q)


def _j_from_q(Q: float) -> float:
    if math.isinf(Q):
        return math.inf
    return math.log1p(math.sqrt(max(0.0, Q * Q - 1.0)))


def bound_convex_j(n: int, K: float, s: float = 1.0 / 3.0, *, lam: RealInterval | None = None) -> BoundValue:
    """Upper bound for j_D(x, f(x)) in a convex domain, free parameter s in (0,1).

    log(1 + sqrt(Q^2 - 1)),  Q = ((1 - s)/s) * phi_{K,n}(s) / (1 - phi_{K,n}(s)).

    Raises BoundUndefinedError when Q < 1.  Since phi_{K,n}(s) >= s for
    K >= 1 this only happens through rounding, so Q within 1e-12 below 1
    is read as 1.
    """
    n = check_dimension(n)
    _check_K(K)
    if not 0.0 < s < 1.0:
        raise DomainError(f"s must lie in (0, 1), got {s}")
    if K == 1.0:
        return RealInterval.point(0.0)
    Q = _convex_q(K, n, s, lam)
    if Q.lo < 1.0 - 1e-12:
        raise BoundUndefinedError(f"Q = {Q.lo} < 1 at s = {s}: the bound has no real value")
    return Q.map_increasing(_j_from_q)


def bound_convex_kd(n: int, K: float, U: float, *, lam: RealInterval | None = None) -> BoundValue:
    """Quasihyperbolic version for bounded convex domains with uniformity constant U."""
    if not U >= 1.0 or math.isinf(U):
        raise DomainError(f"uniformity constant must be finite and >= 1, got {U}")
    return bound_convex_j(n, K, 1.0 / 3.0, lam=lam).scale(U)


def k_threshold(n: int) -> float:
    """K_n = (1 + log 2 / (n - 1 + log 3))^(n-1); K_2 ~ 1.33029."""
    n = check_dimension(n)
    return (1.0 + math.log(2.0) / (n - 1 + math.log(3.0))) ** (n - 1)


def bound_convex_small_k(n: int, K: float) -> float:
    """2 sqrt(1 + log 6) sqrt(K - 1), valid for 1 < K <= K_n."""
    kn = k_threshold(n)
    if not (1.0 < K <= kn):
        raise ValidityRangeError(f"small-K convex bound needs 1 < K <= K_{n} = {kn:.6f}, got {K}")
    return _SMALL_K_COEF * math.sqrt(K - 1.0)


def bound_ball_k_small(n: int, K: float) -> float:
    """k_B(x, f(x)) <= 4 sqrt(1 + log 6) sqrt(K - 1) for 1 < K <= K_n (U = 2)."""
    return 2.0 * bound_convex_small_k(n, K)


def h1(t: float) -> float:
    """log^2(1 + t) / log(1 + t^2); decreasing on (0,1), increasing on (1,inf)."""
    if not t > 0.0:
        raise DomainError(f"h1 requires t > 0, got {t}")
    if math.isinf(t):
        return math.inf
    return math.log1p(t) ** 2 / math.log1p(t * t)


def planar_remark_bound(K: float) -> float:
    """sqrt(2 log 12) sqrt(K - 1/K)."""
    _check_K(K)
    return math.sqrt(2.0 * math.log(12.0)) * math.sqrt(K - 1.0 / K)


# ---------------------------------------------------------------------------
# uniform domains with uniformly perfect boundary


def sphere_area(n: int) -> float:
    """Surface area omega_{n-1} of the unit sphere in R^n."""
    n = check_dimension(n)
    return 2.0 * math.pi ** (n / 2.0) / math.gamma(n / 2.0)


def lower_bound_K_uniform(n: int, U: float, s: float, aseev_C: float, k_dist: float) -> float:
    """Lower bound c_2 * k_dist^n for K.

    c_2 = min(d_n (2U)^(-n), (2 n U log(1 + 2 e^s))^(-n)) and
    d_n = C(n, s) (n-1)^(n-1) / (omega_{n-1} n^n), with C(n, s) = ``aseev_C``
    the caller-supplied capacity constant for s-uniformly perfect sets.
    """
    n = check_dimension(n)
    for name, v in (("U", U), ("s", s), ("aseev_C", aseev_C)):
        if not v > 0.0 or math.isinf(v):
            raise DomainError(f"{name} must be positive and finite, got {v}")
    if not k_dist >= 0.0 or math.isinf(k_dist):
        raise DomainError(f"k_dist must be nonnegative and finite, got {k_dist}")
    d_n = aseev_C * (n - 1) ** (n - 1) / (sphere_area(n) * n**n)
    c2 = min(d_n * (2.0 * U) ** (-n), (2.0 * n * U * math.log1p(2.0 * math.exp(s))) ** (-n))
    return c2 * k_dist**n


# ---------------------------------------------------------------------------
# Hölder continuity and the axis-fixed distortion


def holder_A(R: float, alpha: float) -> float:
    """(R + 1/R) / (R - 1/R)^alpha for R > 1."""
    if not R > 1.0:
        raise DomainError(f"A(R) requires R > 1, got {R}")
    return (R + 1.0 / R) / (R - 1.0 / R) ** alpha


def holder_C(alpha: float) -> float:
    """min_{R>1} A(R) = 2^(1-a) a^(-a/2) (1-a)^((a-1)/2), with C(1) = 1."""
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if alpha == 1.0:
        return 1.0
    return 2.0 ** (1.0 - alpha) * alpha ** (-alpha / 2.0) * (1.0 - alpha) ** ((alpha - 1.0) / 2.0)


@dataclass(frozen=True)
class HolderConstants:
    alpha: float
    C_alpha: float
    M1: RealInterval
    M2: RealInterval
    R0: float


def holder_constants(n: int, K: float, *, lam: RealInterval | None = None) -> HolderConstants:
    """Constants in |f(x) - f(y)| <= M1 |x - y|^alpha on the unit ball.

    M1 = lambda_n^(1-alpha) C(alpha) and M2 = M1^(1/alpha); R0 is the
    minimizer of :func:`holder_A` (infinite at K = 1).
    """
    n = check_dimension(n)
    _check_K(K)
    if lam is None:
        lam = lambda_bounds(n)
    alpha = alpha_exponent(K, n)
    C = holder_C(alpha)
    M1 = RealInterval(lam.lo ** (1.0 - alpha) * C, lam.hi ** (1.0 - alpha) * C)
    M2 = M1.map_increasing(lambda m: m ** (1.0 / alpha))
    if alpha == 1.0:
        R0 = math.inf
    else:
        sa = math.sqrt(alpha)
        R0 = math.sqrt((1.0 + sa) / (1.0 - sa))
    return HolderConstants(alpha, C, M1, M2, R0)


def _axis_constant(beta: float, lam: float) -> float:
    bm1 = beta - 1.0
    return lam ** (2.0 * bm1) * beta**beta / bm1**bm1 - lam ** (-2.0 * bm1) * bm1 ** (beta + 1.0) / (
        4.0 * beta**beta
    )


def bound_axis_fixed(n: int, K: float, *, lam: RealInterval | None = None) -> RealInterval:
    """Constant c with |f(x)| <= c|x| for K-qc maps fixing the x_1-axis.

    c = lam^(2b-2) b^b/(b-1)^(b-1) - lam^(2-2b) (b-1)^(b+1)/(4 b^b),
    b = K^(1/(n-1)).  The expression is increasing in lam, so the lambda
    bracket maps endpoint to endpoint and the upper end is a valid constant.
    Returns the limit [1, 1] for K - 1 < 1e-12.
    """
    n = check_dimension(n)
    _check_K(K)
    if K - 1.0 < LIMIT_SWITCH:
        return RealInterval.point(1.0)
    if lam is None:
        lam = lambda_bounds(n)
    beta = K ** (1.0 / (n - 1))
    return lam.map_increasing(lambda v: _axis_constant(beta, v))


# ---------------------------------------------------------------------------
# Mori-constant comparison curves (planar)


def mori_conjecture(K: float) -> float:
    """Conjectured Mori constant 16^(1 - 1/K)."""
    _check_K(K)
    return 16.0 ** (1.0 - 1.0 / K)


def fv_bound(K: float) -> float:
    """Earlier planar Hölder constant for the Mori problem, labelled FV (lambda_2 = 4)."""
    _check_K(K)
    K2 = K * K
    return (
        (1.0 + phi2(K, (K2 - 1.0) / (K2 + 1.0)))
        * 2.0 ** (2.0 * K - 3.0 / K)
        * (K2 + 1.0) ** ((K + 1.0 / K) / 2.0)
        / (K2 - 1.0) ** ((K - 1.0 / K) / 2.0)
    )


def bv_bound(K: float) -> float:
    """Refined planar Hölder constant labelled BV, valid for 1 < K < 4/3."""
    if not (1.0 < K < BV_K_MAX):
        raise ValidityRangeError(f"BV bound is valid only for 1 < K < 4/3, got {K}")
    K2 = K * K
    return 3.0 ** (1.0 - 1.0 / K2) * 4.0 ** (1.0 - 1.0 / K - 1.0 / K2) * K2 * (K2 - 1.0) ** (1.0 / K2 - 1.0)


@dataclass(frozen=True)
class MoriConstants:
    fv: float
    bv: float | None
    conjecture: float


def mori_constants(K: float) -> MoriConstants:
    """FV, BV (None outside 1 < K < 4/3) and the conjectured 16^(1-1/K)."""
    if not K > 1.0 or math.isinf(K):
        raise DomainError(f"Mori comparison needs finite K > 1, got {K}")
    bv = bv_bound(K) if K < BV_K_MAX else None
    return MoriConstants(fv_bound(K), bv, mori_conjecture(K))
