"""Scalar 1-D optimization helpers: golden-section search and bisection."""

from __future__ import annotations

import math
from typing import Callable

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0  # 1/phi


def golden_section_min(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-12,
    max_iter: int = 200,
) -> tuple[float, float]:
    """Minimize a unimodal f on [a, b]; returns (argmin, min).

    The bracket endpoints are kept as candidates so a minimum at a kink
    or at the boundary is never lost.
    """
    fa, fb = f(a), f(b)
    x1 = b - INVPHI * (b - a)
    x2 = a + INVPHI * (b - a)
    f1, f2 = f(x1), f(x2)
    it = 0
    while (b - a) > tol and it < max_iter:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - INVPHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + INVPHI * (b - a)
            f2 = f(x2)
        it += 1
    xm = 0.5 * (a + b)
    candidates = [(fa, a), (fb, b), (f1, x1), (f2, x2), (f(xm), xm)]
    best = min(candidates)
    return best[1], best[0]


def golden_section_max(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-12,
    max_iter: int = 200,
) -> tuple[float, float]:
    """Maximize a unimodal f on [a, b]; returns (argmax, max)."""
    x, fneg = golden_section_min(lambda t: -f(t), a, b, tol, max_iter)
    return x, -fneg


def bisect_root(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-12,
    max_iter: int = 200,
) -> float:
    """Root of f on [a, b] by bisection; f(a) and f(b) must differ in sign."""
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb > 0.0:
        raise ValueError(f"no sign change on bracket [{a}, {b}]")
    for _ in range(max_iter):
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0.0 or (b - a) < tol:
            return m
        if fa * fm < 0.0:
            b, fb = m, fm
        else:
            a, fa = m, fm
    return 0.5 * (a + b)


def min_of_sinusoid(
    amp_cos: float,
    amp_sin: float,
    offset: float,
    t_lo: float,
    t_hi: float,
) -> tuple[float, float]:
    """Exact minimum of offset + amp_cos*cos(t) + amp_sin*sin(t) on [t_lo, t_hi].

    Returns (argmin, min).  Interval length must be <= 2*pi.
    """
    r = math.hypot(amp_cos, amp_sin)
    lo_val = offset + amp_cos * math.cos(t_lo) + amp_sin * math.sin(t_lo)
    hi_val = offset + amp_cos * math.cos(t_hi) + amp_sin * math.sin(t_hi)
    best = (t_lo, lo_val) if lo_val <= hi_val else (t_hi, hi_val)
    if r == 0.0:
        return best
    t_min = math.atan2(amp_sin, amp_cos) + math.pi  # global minimizer mod 2pi
    k = math.floor((t_hi - t_min) / (2.0 * math.pi))
    t_in = t_min + 2.0 * math.pi * k
    if t_lo <= t_in <= t_hi and offset - r < best[1]:
        return t_in, offset - r
    return best
