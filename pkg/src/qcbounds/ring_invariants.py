"""Capacities of the Grötzsch and Teichmüller rings and the distortion function.

In the plane everything reduces to :func:`~qcbounds.special_functions.mu`:

    gamma_2(s)     = 2*pi / mu(1/s)
    tau_2(t)       = gamma_2(sqrt(1 + t)) / 2
    phi_{K,2}(r)   = mu_inv(mu(r) / K)

For n >= 3 none of these have closed forms. The distortion function is then
only available as a bracket built from the power-type estimates

    r^a <= phi_{K,n}(r) <= lambda_n^(1-a) r^a <= 2^(1-1/K) K r^a,  a = K^(1/(1-n))

and their counterparts for phi_{1/K,n}, with the Grötzsch ring constant
lambda_n known only to lie in [4, 2 e^(n-1)).  Brackets are returned as
:class:`RealInterval`; planar values come back as degenerate intervals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .special_functions import mu, mu_inv, mu_inv_complement

__all__ = [
    "RealInterval",
    "alpha_exponent",
    "check_dimension",
    "eta_interval",
    "gamma2",
    "lambda_bounds",
    "phi2",
    "phi2_complement",
    "phi_lower_family",
    "phi_upper_family",
    "tau2",
]


@dataclass(frozen=True)
class RealInterval:
    """Closed interval ``[lo, hi]`` bracketing a quantity known only by bounds."""

    lo: float
    hi: float

    def __post_init__(self):
        if math.isnan(self.lo) or math.isnan(self.hi):
            raise DomainError("interval endpoints must not be NaN")
        if self.lo > self.hi:
            raise DomainError(f"interval endpoints out of order: [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x: float) -> "RealInterval":
        return cls(x, x)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def contains(self, x: float, tol: float = 0.0) -> bool:
        return self.lo - tol <= x <= self.hi + tol

    def scale(self, c: float) -> "RealInterval":
        if c < 0:
            return RealInterval(c * self.hi, c * self.lo)
        return RealInterval(c * self.lo, c * self.hi)

    def map_increasing(self, f) -> "RealInterval":
        return RealInterval(f(self.lo), f(self.hi))

    def map_decreasing(self, f) -> "RealInterval":
        return RealInterval(f(self.hi), f(self.lo))

    def __iter__(self):
        yield self.lo
        yield self.hi

    def __str__(self):
        return f"[{self.lo!r}, {self.hi!r}]"


def check_dimension(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 2:
        raise DomainError(f"dimension must be an integer >= 2, got {n}")
    return int(n)


def _check_unit(r: float) -> None:
    if not (0.0 <= r <= 1.0):
        raise DomainError(f"argument must lie in [0, 1], got {r}")


def _check_K(K: float, minimum: float = 1.0) -> None:
    if not (K >= minimum) or math.isinf(K):
        raise DomainError(f"dilatation K must be finite and >= {minimum}, got {K}")


def alpha_exponent(K: float, n: int) -> float:
    """Hölder exponent K^(1/(1-n)) attached to K-quasiconformal maps of R^n."""
    return K ** (1.0 / (1 - n))


# ---------------------------------------------------------------------------
# planar-exact quantities


def gamma2(s: float) -> float:
    """Capacity of the planar Grötzsch ring with complementary point s > 1."""
    if not s > 1.0:
        raise DomainError(f"gamma2 requires s > 1, got {s}")
    return 2.0 * math.pi / mu(1.0 / s)


def tau2(t: float) -> float:
    """Capacity of the planar Teichmüller ring, tau_2(t) = gamma_2(sqrt(1+t))/2."""
    if not t > 0.0:
        raise DomainError(f"tau2 requires t > 0, got {t}")
    # 1/sqrt(1+t) is computed directly to avoid the reciprocal rounding twice
    return math.pi / mu(1.0 / math.sqrt(1.0 + t))


def phi2(K: float, r: float) -> float:
    """Planar distortion function phi_{K,2}(r) = mu_inv(mu(r)/K), for K > 0."""
    if not K > 0.0 or math.isinf(K):
        raise DomainError(f"phi2 requires finite K > 0, got {K}")
    _check_unit(r)
    if r == 0.0 or r == 1.0 or K == 1.0:
        return r
    return mu_inv(mu(r) / K)


def phi2_complement(K: float, r: float) -> float:
    """1 - phi_{K,2}(r), accurate when phi_{K,2}(r) is close to 1."""
    p = phi2(K, r)
    if r == 0.0 or r == 1.0 or K == 1.0:
        return 1.0 - p
    pc = mu_inv_complement(mu(r) / K)
    return pc * pc / (1.0 + p)


# ---------------------------------------------------------------------------
# brackets valid in every dimension

_LAMBDA_2 = 4.0


def lambda_bounds(n: int) -> RealInterval:
    """Bracket for the Grötzsch ring constant lambda_n.

    lambda_2 = 4 exactly.  For n >= 3 the open upper end 2 e^(n-1) is closed,
    which can only over-estimate.
    """
    n = check_dimension(n)
    if n == 2:
        return RealInterval.point(_LAMBDA_2)
    return RealInterval(_LAMBDA_2, 2.0 * math.exp(n - 1))


def _phi_upper_bracket(K: float, n: int, r: float, lam_hi: float) -> RealInterval:
    a = alpha_exponent(K, n)
    ra = r**a
    hi = min(1.0, lam_hi ** (1.0 - a) * ra, 2.0 ** (1.0 - 1.0 / K) * K * ra)
    return RealInterval(min(ra, hi), hi)


def _phi_lower_bracket(K: float, n: int, r: float, lam_hi: float) -> RealInterval:
    b = 1.0 / alpha_exponent(K, n)
    rb = r**b
    # 1 - b <= 0, so the largest admissible lambda gives the smallest factor
    lo = max(2.0 ** (1.0 - K) * K ** (-K) * rb, lam_hi ** (1.0 - b) * rb)
    return RealInterval(min(lo, rb), rb)


def phi_upper_family(K: float, n: int, r: float, *, lam: RealInterval | None = None) -> RealInterval:
    """Bracket for phi_{K,n}(r), K >= 1.

    Planar calls return the exact value.  Passing ``lam`` forces the
    power-bound bracket with that lambda interval in any dimension (used to
    check the bracket against the planar exact value).
    """
    n = check_dimension(n)
    _check_K(K)
    _check_unit(r)
    if r == 0.0 or r == 1.0 or K == 1.0:
        return RealInterval.point(r)
    if lam is None:
        if n == 2:
            return RealInterval.point(phi2(K, r))
        lam = lambda_bounds(n)
    return _phi_upper_bracket(K, n, r, lam.hi)


def phi_lower_family(K: float, n: int, r: float, *, lam: RealInterval | None = None) -> RealInterval:
    """Bracket for phi_{1/K,n}(r), K >= 1 (the inverse distortion)."""
    n = check_dimension(n)
    _check_K(K)
    _check_unit(r)
    if r == 0.0 or r == 1.0 or K == 1.0:
        return RealInterval.point(r)
    if lam is None:
        if n == 2:
            return RealInterval.point(phi2(1.0 / K, r))
        lam = lambda_bounds(n)
    return _phi_lower_bracket(K, n, r, lam.hi)


def _eta_from_phi(p: float) -> float:
    return (1.0 - p * p) / (p * p)


def eta_interval(K: float, n: int, t: float, *, lam: RealInterval | None = None) -> RealInterval:
    """Bracket for eta_{K,n}(t) = tau_n^{-1}(tau_n(t)/K), K >= 1, t > 0.

    Uses eta = (1 - p^2)/p^2 with p = phi_{1/K,n}(1/sqrt(1+t)); eta is
    decreasing in p so the lower end of the p bracket gives the upper end.
    """
    n = check_dimension(n)
    _check_K(K)
    if not t > 0.0:
        raise DomainError(f"eta requires t > 0, got {t}")
    if K == 1.0:
        return RealInterval.point(t)
    p = phi_lower_family(K, n, 1.0 / math.sqrt(1.0 + t), lam=lam)
    if p.lo == 0.0:
        return RealInterval(_eta_from_phi(p.hi), math.inf)
    return p.map_decreasing(_eta_from_phi)
