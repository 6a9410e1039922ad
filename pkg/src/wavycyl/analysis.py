"""Generic numerical primitives: root bracketing/solving, adaptive quadrature,
inverse-square-root endpoint quadrature, Bessel-zero location, fixed-step RK4.

All routines are pure functions.  Tolerances are absolute unless stated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import specfun
from .errors import ConvergenceError, DomainError

__all__ = [
    "Bracket",
    "find_root",
    "integrate",
    "integrate_inv_sqrt",
    "bessel_zero",
    "bessel_zero_envelope",
    "ode_rk4",
]

_MAX_ROOT_ITER = 200


@dataclass(frozen=True)
class Bracket:
    """Sign-changing interval [lo, hi] with cached endpoint values."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise DomainError(f"bracket needs lo < hi, got [{self.lo}, {self.hi}]")
        if not self.f_lo * self.f_hi < 0:
            raise DomainError(
                f"bracket endpoints must have opposite signs: f_lo={self.f_lo}, f_hi={self.f_hi}"
            )

    @classmethod
    def of(cls, f: Callable[[float], float], lo: float, hi: float) -> "Bracket":
        return cls(lo, hi, f(lo), f(hi))


def find_root(f: Callable[[float], float], bracket: Bracket, tol: float) -> float:
    """Brent's method: inverse quadratic / secant steps with bisection fallback.

    Returns x inside the initial bracket with final interval width <= tol.
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    a, b = bracket.lo, bracket.hi
    fa, fb = bracket.f_lo, bracket.f_hi
    c, fc = a, fa
    d = e = b - a
    for _ in range(_MAX_ROOT_ITER):
        if fb * fc > 0:
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 2.0 * math.ulp(abs(b)) + 0.5 * tol
        xm = 0.5 * (c - b)
        if abs(xm) <= tol1 or fb == 0.0:
            return b
        if abs(e) >= tol1 and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2.0 * xm * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0:
                q = -q
            p = abs(p)
            if 2.0 * p < min(3.0 * xm * q - abs(tol1 * q), abs(e * q)):
                e, d = d, p / q
            else:
                d = xm
                e = d
        else:
            d = xm
            e = d
        a, fa = b, fb
        b += d if abs(d) > tol1 else math.copysign(tol1, xm)
        fb = f(b)
    raise ConvergenceError(f"find_root: no convergence in {_MAX_ROOT_ITER} iterations")


def _simpson(f: Callable[[float], float], a: float, fa: float, b: float, fb: float):
    m = 0.5 * (a + b)
    fm = f(m)
    return m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def integrate(f: Callable[[float], float], a: float, b: float, tol: float = 1e-10) -> float:
    """Adaptive Simpson quadrature with Richardson error estimate.

    `tol` is the absolute error target for the whole interval.
    """
    if not a < b:
        raise DomainError(f"integrate needs a < b, got [{a}, {b}]")
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    fa, fb = f(a), f(b)
    m, fm, whole = _simpson(f, a, fa, b, fb)

    def recurse(a, fa, m, fm, b, fb, whole, tol, depth):
        lm, flm, left = _simpson(f, a, fa, m, fm)
        rm, frm, right = _simpson(f, m, fm, b, fb)
        delta = left + right - whole
        if abs(delta) <= 15.0 * tol or (b - a) <= 16 * math.ulp(abs(m)):
            return left + right + delta / 15.0
        if depth <= 0:
            raise ConvergenceError("integrate: adaptive refinement depth exhausted")
        return recurse(a, fa, lm, flm, m, fm, left, tol / 2.0, depth - 1) + recurse(
            m, fm, rm, frm, b, fb, right, tol / 2.0, depth - 1
        )

    return recurse(a, fa, m, fm, b, fb, whole, tol, 60)


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(20)


def integrate_inv_sqrt(f: Callable[[float], float], a: float, b: float) -> float:
    """Integral of f over [a, b] where f may blow up like 1/sqrt(x-a), 1/sqrt(b-x).

    The substitution x = a + (b-a) sin^2(theta) removes both endpoint
    singularities; the transformed integrand is then smooth and is summed with
    panel-doubling composite Gauss-Legendre (nodes strictly interior, so the
    raw endpoints are never evaluated).  Absolute error <= 1e-9.
    """
    if not a < b:
        raise DomainError(f"integrate_inv_sqrt needs a < b, got [{a}, {b}]")
    span = b - a

    def g(theta: float) -> float:
        x = a + span * math.sin(theta) ** 2
        try:
            value = f(x) * span * math.sin(2.0 * theta)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"integrand undefined at x={x}: {exc}") from exc
        if not math.isfinite(value):
            raise DomainError(f"integrand not finite at x={x} (negative under sqrt?)")
        return value

    def composite(panels: int) -> float:
        width = (math.pi / 2.0) / panels
        total = 0.0
        for p in range(panels):
            mid = (p + 0.5) * width
            total += sum(
                w * g(mid + 0.5 * width * x) for x, w in zip(_GL_NODES, _GL_WEIGHTS)
            ) * (0.5 * width)
        return total

    previous = composite(4)
    panels = 8
    while panels <= 512:
        current = composite(panels)
        if abs(current - previous) <= 1e-10 * max(1.0, abs(current)):
            return current
        previous = current
        panels *= 2
    raise ConvergenceError("integrate_inv_sqrt: panel doubling did not converge")


# Envelope for the first Bessel zero at large order (valid for nu >= 10):
#   nu + A nu^(1/3) + B nu^(-1/3) - C nu^(-1)  <  j_nu  <  nu + A nu^(1/3) + B nu^(-1/3)
# A = |a1| / 2^(1/3), B = (3/20) a1^2 2^(1/3), a1 the first zero of Airy Ai.
ENVELOPE_A = 1.8557570814892385
ENVELOPE_B = 1.0331503036492368
ENVELOPE_C = 1.0 / 16.0


def bessel_zero_envelope(nu: float) -> tuple[float, float]:
    """Lower/upper envelope bounds for the first zero of J_nu, nu >= 10."""
    if nu < 10:
        raise DomainError(f"envelope requires nu >= 10, got {nu}")
    hi = nu + ENVELOPE_A * nu ** (1 / 3) + ENVELOPE_B * nu ** (-1 / 3)
    return hi - ENVELOPE_C / nu, hi


def bessel_zero(nu: float, index: int = 1) -> float:
    """The index-th positive zero of J_nu (index 1 or 2), accurate to ~1e-11.

    For nu >= 10 the first zero is bracketed by the large-order envelope
    widened by +-0.1; otherwise the interval [max(nu, 0.1), nu + 3 nu^(1/3) + 6]
    is scanned in steps of 0.25 for sign changes.
    """
    if nu < 0:
        raise DomainError(f"bessel_zero requires nu >= 0, got {nu}")
    if index not in (1, 2):
        raise DomainError(f"index must be 1 or 2, got {index}")

    f = lambda s: specfun.bessel_j(nu, s)

    if nu >= 10:
        lo, hi = bessel_zero_envelope(nu)
        first = find_root(f, Bracket.of(f, lo - 0.1, hi + 0.1), 1e-12)
        if index == 1:
            return first
        # consecutive zeros near the turning point are ~1.39 nu^(1/3) apart
        return _scan_zero(f, first + 0.05, first + 3.0 * nu ** (1 / 3) + 8.0, 1)

    lo = max(nu, 0.1)
    hi = nu + 3.0 * max(nu, 1e-8) ** (1 / 3) + 6.0
    if index == 2:
        hi += 2.0 * math.pi + 2.0
    return _scan_zero(f, lo, hi, index)


def _scan_zero(f: Callable[[float], float], lo: float, hi: float, index: int) -> float:
    s, fs = lo, f(lo)
    found = 0
    while s < hi:
        s2 = min(s + 0.25, hi)
        fs2 = f(s2)
        if fs * fs2 < 0 or fs2 == 0.0:
            found += 1
            if found == index:
                if fs2 == 0.0:
                    return s2
                return find_root(f, Bracket(s, s2, fs, fs2), 1e-12)
        s, fs = s2, fs2
    raise ConvergenceError(f"bessel_zero: no sign change number {index} in [{lo}, {hi}]")


def ode_rk4(
    field: Callable[[float, Sequence[float]], Sequence[float]],
    r0: float,
    y0: Sequence[float],
    r1: float,
    steps: int,
) -> tuple[float, ...]:
    """Classical fixed-step RK4 from r0 to r1; returns y(r1).

    Deterministic for a given step count; no adaptivity.
    """
    if steps < 1:
        raise DomainError(f"steps must be >= 1, got {steps}")
    h = (r1 - r0) / steps
    y = tuple(float(v) for v in y0)
    r = r0
    for _ in range(steps):
        k1 = field(r, y)
        k2 = field(r + 0.5 * h, tuple(v + 0.5 * h * k for v, k in zip(y, k1)))
        k3 = field(r + 0.5 * h, tuple(v + 0.5 * h * k for v, k in zip(y, k2)))
        k4 = field(r + h, tuple(v + h * k for v, k in zip(y, k3)))
        y = tuple(
            v + (h / 6.0) * (a + 2.0 * b + 2.0 * c + d)
            for v, a, b, c, d in zip(y, k1, k2, k3, k4)
        )
        r += h
    if not all(math.isfinite(v) for v in y):
        raise ConvergenceError("ode_rk4: state became non-finite")
    return y
