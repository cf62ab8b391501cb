"""Complete elliptic integral of the first kind and the Grötzsch modulus.

Everything here is plain double-precision arithmetic on Python floats. The
elliptic integral is evaluated through the arithmetic-geometric mean, and
the modulus function

    mu(r) = (pi/2) * K(r') / K(r),   r' = sqrt(1 - r^2),

is written directly as ``(pi/2) * agm(1, r') / agm(1, r)`` so that neither
factor is formed from a complement that has rounded to 1.
"""

from __future__ import annotations

import math

from .errors import DivergenceError, DomainError

__all__ = [
    "DEFAULT_TOL",
    "agm",
    "complement",
    "ellipk",
    "mu",
    "mu_inv",
    "mu_inv_complement",
    "mu_prime",
]

DEFAULT_TOL = 1e-12

# Below this argument mu(r) = log(4/r) - r^2/4 + ..., so the log form is exact
# to double precision; above 1 - ENDPOINT_EPS the reciprocal identity is used.
ENDPOINT_EPS = 1e-8

_HALF_PI = 0.5 * math.pi
_PI2_4 = 0.25 * math.pi * math.pi
_SQRT_HALF = math.sqrt(0.5)


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive numbers."""
    if not (a > 0 and b > 0):
        raise DomainError(f"agm requires positive arguments, got ({a}, {b})")
    if math.isinf(a) or math.isinf(b):
        raise DomainError("agm requires finite arguments")
    for _ in range(64):
        if abs(a - b) <= 2e-16 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def complement(r: float) -> float:
    """Return r' = sqrt(1 - r^2) without cancellation near r = 1."""
    return math.sqrt((1.0 - r) * (1.0 + r))


def ellipk(r: float) -> float:
    """Complete elliptic integral of the first kind, K(r), modulus ``r``.

    Raises:
        DivergenceError: for r = 1, where K has a logarithmic singularity.
        DomainError: for r outside [0, 1].
    """
    if r == 1.0:
        raise DivergenceError("ellipk(1) is infinite")
    if not (0.0 <= r < 1.0):
        raise DomainError(f"ellipk requires 0 <= r < 1, got {r}")
    return _HALF_PI / agm(1.0, complement(r))


def _mu_core(r: float, rc: float) -> float:
    return _HALF_PI * agm(1.0, rc) / agm(1.0, r)


def mu(r: float) -> float:
    """Modulus of the planar Grötzsch ring, a decreasing map (0,1) -> (0,inf).

    Raises:
        DomainError: unless 0 < r < 1.
    """
    if not (0.0 < r < 1.0):
        raise DomainError(f"mu requires 0 < r < 1, got {r}")
    if r < ENDPOINT_EPS:
        return math.log(4.0 / r)
    rc = complement(r)
    if r > 1.0 - ENDPOINT_EPS:
        # mu(r) * mu(r') = pi^2 / 4
        return _PI2_4 / mu(rc)
    return _mu_core(r, rc)


def mu_prime(r: float) -> float:
    """Derivative mu'(r) = -pi^2 / (4 r r'^2 K(r)^2)."""
    if not (0.0 < r < 1.0):
        raise DomainError(f"mu_prime requires 0 < r < 1, got {r}")
    k = ellipk(r)
    return -_PI2_4 / (r * (1.0 - r) * (1.0 + r) * k * k)


def _mu_inv_upper(y: float, tol: float) -> float:
    """Solve mu(r) = y for y >= pi/2, i.e. r in (0, 1/sqrt(2)].

    Newton's method in u = log r (where mu is close to linear) with a
    bisection bracket kept alongside; a step leaving the bracket is replaced
    by the bracket midpoint.
    """
    if y > math.log(4.0 / ENDPOINT_EPS):
        return 4.0 * math.exp(-y)

    u_lo, u_hi = math.log(ENDPOINT_EPS), math.log(_SQRT_HALF)
    u = min(math.log(4.0) - y, u_hi)
    for _ in range(200):
        r = math.exp(u)
        f = mu(r) - y
        if f > 0:
            u_lo = u
        elif f < 0:
            u_hi = u
        else:
            return r
        k = ellipk(r)
        slope = -_PI2_4 / ((1.0 - r) * (1.0 + r) * k * k)  # d mu / d log r
        step = -f / slope
        u_new = u + step
        if not (u_lo < u_new < u_hi):
            u_new = 0.5 * (u_lo + u_hi)
            step = u_new - u
        u = u_new
        if abs(step) <= tol or u_hi - u_lo <= tol:
            break
    return math.exp(u)


def _mu_inv_pair(y: float, tol: float) -> tuple[float, float]:
    if not y > 0:
        raise DomainError(f"mu_inv requires y > 0, got {y}")
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    if math.isinf(y):
        return 0.0, 1.0
    if y >= _HALF_PI:
        r = _mu_inv_upper(y, tol)
        return r, complement(r)
    # mu(r) = y  <=>  mu(r') = pi^2 / (4 y) >= pi/2
    rc = _mu_inv_upper(_PI2_4 / y, tol)
    return complement(rc), rc


def mu_inv(y: float, tol: float = DEFAULT_TOL) -> float:
    """Inverse of :func:`mu`: the r in (0, 1) with mu(r) = y.

    ``tol`` bounds the last relative Newton correction in r; the result is
    typically accurate to a few ulps since the final steps converge
    quadratically.

    Very large ``y`` returns the asymptotic 4*exp(-y), which underflows to 0
    past y ~ 745; very small ``y`` may round to exactly 1 (use
    :func:`mu_inv_complement` when 1 - r matters).
    """
    return _mu_inv_pair(y, tol)[0]


def mu_inv_complement(y: float, tol: float = DEFAULT_TOL) -> float:
    """sqrt(1 - r^2) for r = mu_inv(y), accurate even when r rounds to 1."""
    return _mu_inv_pair(y, tol)[1]
