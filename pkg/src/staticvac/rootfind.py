"""Bracketing and bisection root helpers.

Bisection is used throughout instead of damped Newton because every target
function here is monotone on its bracket while its derivative may degenerate
at an endpoint (double horizons, extremal masses); bisection converges
unconditionally.  A single Newton step polishes the result when the
derivative is available and well separated from zero.
"""

from __future__ import annotations

import math
from typing import Callable, Optional

from .errors import NoRealRootError

# Degenerate-root detection threshold on |W'(root)|.
DEGENERATE_SLOPE_TOL = 1e-8


def bisect(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    rtol: float = 1e-13,
    atol: float = 0.0,
    max_iter: int = 200,
    f_lo: Optional[float] = None,
    f_hi: Optional[float] = None,
) -> float:
    """Root of f on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.

    Stops when the bracket width drops below rtol*|midpoint| + atol.
    Endpoint values may be passed in to avoid re-evaluation (and to allow
    signed "virtual" endpoints where f itself is singular).
    """
    if not lo < hi:
        raise ValueError(f"invalid bracket [{lo}, {hi}]")
    fa = f(lo) if f_lo is None else f_lo
    fb = f(hi) if f_hi is None else f_hi
    if fa == 0.0:
        return lo
    if fb == 0.0:
        return hi
    if math.copysign(1.0, fa) == math.copysign(1.0, fb):
        raise ValueError("bisect: no sign change over bracket")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if (hi - lo) <= rtol * abs(mid) + atol:
            return mid
        fm = f(mid)
        if fm == 0.0:
            return mid
        if math.copysign(1.0, fm) == math.copysign(1.0, fa):
            lo, fa = mid, fm
        else:
            hi, fb = mid, fm
    return 0.5 * (lo + hi)


def newton_polish(
    f: Callable[[float], float],
    df: Callable[[float], float],
    x: float,
    steps: int = 1,
) -> float:
    """Take up to `steps` Newton steps; skipped where the slope is degenerate."""
    for _ in range(steps):
        slope = df(x)
        if abs(slope) < DEGENERATE_SLOPE_TOL:
            return x
        x = x - f(x) / slope
    return x


def kottler_roots(
    n: int,
    m: float,
    curvature_sign: int = 1,
    lambda_sign: int = 1,
    *,
    rtol: float = 1e-13,
) -> list[tuple[float, bool]]:
    """All positive roots of W(r) = k - sign(Lambda) r^2 - 2m r^(2-n).

    Returns ascending (radius, degenerate) pairs where `degenerate` marks a
    double root (|W'| below DEGENERATE_SLOPE_TOL).  Raises NoRealRootError
    when the profile has no positive root (e.g. m >= m_max in the
    Schwarzschild-de Sitter family).
    """
    if n < 3:
        raise ValueError("dimension n must be >= 3")
    k = float(curvature_sign)
    quad = -float(lambda_sign)

    def W(r: float) -> float:
        return k + quad * r * r - 2.0 * m * r ** (2 - n)

    def Wp(r: float) -> float:
        return 2.0 * quad * r + 2.0 * (n - 2) * m * r ** (1 - n)

    # Single interior critical point, if any: quad*r^n = -(n-2)*m.
    r_crit = None
    if quad != 0.0 and m != 0.0 and -(n - 2) * m / quad > 0.0:
        r_crit = (-(n - 2) * m / quad) ** (1.0 / n)

    # Asymptotic signs of W at r -> 0+ and r -> +inf.
    sign_zero = -math.copysign(1.0, m) if m != 0.0 else (
        math.copysign(1.0, k) if k != 0.0 else math.copysign(1.0, quad))
    if quad != 0.0:
        sign_inf = math.copysign(1.0, quad)
    elif k != 0.0:
        sign_inf = math.copysign(1.0, k)
    elif m != 0.0:
        sign_inf = -math.copysign(1.0, m)
    else:
        raise NoRealRootError("profile is identically zero")

    # Concrete endpoints realizing the asymptotic signs.
    a = 0.5 * r_crit if r_crit is not None else 0.5
    for _ in range(400):
        if a > 0.0 and math.copysign(1.0, W(a)) == sign_zero:
            break
        a *= 0.5
    else:
        raise NoRealRootError("could not bracket profile near r=0")
    b = 2.0 * r_crit if r_crit is not None else 2.0
    for _ in range(400):
        if math.copysign(1.0, W(b)) == sign_inf:
            break
        b *= 2.0
    else:
        raise NoRealRootError("could not bracket profile near r=inf")

    nodes = [a]
    if r_crit is not None and a < r_crit < b:
        nodes.append(r_crit)
    nodes.append(b)

    roots: list[tuple[float, bool]] = []
    for left, right in zip(nodes[:-1], nodes[1:]):
        f_left, f_right = W(left), W(right)
        if f_left == 0.0:
            continue  # node coincides with a root already handled
        if math.copysign(1.0, f_left) != math.copysign(1.0, f_right) or f_right == 0.0:
            r = bisect(W, left, right, rtol=rtol)
            r = newton_polish(W, Wp, r)
            roots.append((r, abs(Wp(r)) < DEGENERATE_SLOPE_TOL))

    # Double root exactly at the critical point (extremal mass): no sign
    # change, but W vanishes there to rounding.
    if not roots and r_crit is not None:
        scale = abs(k) + abs(quad) * r_crit * r_crit + 2.0 * abs(m) * r_crit ** (2 - n)
        if abs(W(r_crit)) <= 1e-12 * max(scale, 1.0):
            roots.append((r_crit, True))

    if not roots:
        raise NoRealRootError(
            f"no positive root for n={n}, m={m}, k={curvature_sign}, "
            f"lambda_sign={lambda_sign}")
    roots.sort(key=lambda t: t[0])
    # A double root found from both sides collapses to a single entry.
    merged: list[tuple[float, bool]] = [roots[0]]
    for r, deg in roots[1:]:
        r_prev, deg_prev = merged[-1]
        if deg and deg_prev and r - r_prev < 1e-8 * max(1.0, r):
            merged[-1] = (0.5 * (r_prev + r), True)
        else:
            merged.append((r, deg))
    return merged
