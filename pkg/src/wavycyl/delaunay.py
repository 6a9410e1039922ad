"""Constant-mean-curvature surfaces of revolution (Delaunay family) and the
eigenvalues of the cylinder's Jacobi operator.

The generating curve (y(t), z(t)) of the family member with parameter
sigma in (0, 1] satisfies

    y'(t)^2 = y^2 - ((y^2 + sigma)/2)^2,      z'(t) = (y^2 + sigma)/2,

so y oscillates between y_min = 1 - sqrt(1-sigma) and
y_max = 1 + sqrt(1-sigma), and the parametrization speed is
sqrt(y'^2 + z'^2) = y.  With the inward normal and mean curvature taken as
the trace of the shape operator (k_1 + k_2), every member has H identically
equal to 1; sigma = 1 is the straight unit cylinder, and as sigma -> 0 the
surface degenerates to a chain of spheres.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import analysis
from .errors import DomainError

__all__ = [
    "DelaunayProfile",
    "jacobi_sigma",
    "delaunay_profile",
    "mean_curvature_check",
]

_CURVE_REFINE = 8  # quadrature sub-sampling per emitted profile sample


def jacobi_sigma(j: int, k: int, T: float) -> float:
    """Jacobi-operator eigenvalue (j^2 - 1 + (2 pi k / T)^2) / 2 on the
    cylinder, for the angular mode j and axial mode k at period T."""
    if j < 0 or k < 0:
        raise DomainError(f"modes must be >= 0, got j={j}, k={k}")
    if not T > 0:
        raise DomainError(f"T must be positive, got {T}")
    return 0.5 * (j * j - 1.0 + (2.0 * math.pi * k / T) ** 2)


@dataclass(eq=False)
class DelaunayProfile:
    """One period of the generating curve, sampled at increasing t."""

    sigma: float
    t: np.ndarray
    y: np.ndarray
    z: np.ndarray
    y_min: float
    y_max: float
    period: float

    @property
    def samples(self) -> list[tuple[float, float, float]]:
        return list(zip(self.t.tolist(), self.y.tolist(), self.z.tolist()))


def _turning_radii(sigma: float) -> tuple[float, float]:
    root = math.sqrt(1.0 - sigma)
    return 1.0 - root, 1.0 + root


def radial_speed_squared(sigma: float, y):
    """y'^2 as a function of y; vanishes simply at both turning radii."""
    return y * y - ((y * y + sigma) / 2.0) ** 2


def delaunay_profile(sigma: float, samples: int) -> DelaunayProfile:
    """Sample one full period of the generating curve.

    t is recovered from dt = dy / sqrt(y'^2) by quadrature in y rather than by
    integrating the ODE through its square-root turning points: with
    y = y_min + (y_max - y_min) sin^2(theta), dt = G(theta) d(theta) where
    G = 4 / sqrt((y + y_min)(y + y_max)) is smooth, and theta in [0, pi]
    covers the rising and falling half-periods in one sweep.  z follows from
    dz = (y^2 + sigma)/2 dt.  Returns samples+1 points at uniform theta.
    """
    if not 0.0 < sigma <= 1.0:
        raise DomainError(f"sigma must lie in (0, 1], got {sigma}")
    if samples < 2:
        raise DomainError(f"samples must be >= 2, got {samples}")
    y_min, y_max = _turning_radii(sigma)

    m = samples * _CURVE_REFINE  # even, so composite Simpson pairs up exactly
    theta = np.linspace(0.0, math.pi, m + 1)
    y = y_min + (y_max - y_min) * np.sin(theta) ** 2
    g = 4.0 / np.sqrt((y + y_min) * (y + y_max))
    zg = (y * y + sigma) / 2.0 * g
    h = math.pi / m

    t = _cumulative_simpson(g, h)
    z = _cumulative_simpson(zg, h)

    sel = slice(0, m + 1, _CURVE_REFINE)
    return DelaunayProfile(
        sigma=sigma,
        t=t[sel].copy(),
        y=y[sel].copy(),
        z=z[sel].copy(),
        y_min=y_min,
        y_max=y_max,
        period=float(t[-1]),
    )


def _cumulative_simpson(f: np.ndarray, h: float) -> np.ndarray:
    """Cumulative integral on a uniform grid (len odd), Simpson per point pair
    plus the half-pair quadratic rule at odd indices."""
    out = np.empty_like(f)
    pair = h / 3.0 * (f[0:-2:2] + 4.0 * f[1:-1:2] + f[2::2])
    out[0::2] = np.concatenate([[0.0], np.cumsum(pair)])
    out[1::2] = out[0:-1:2] + h / 12.0 * (5.0 * f[0:-2:2] + 8.0 * f[1:-1:2] - f[2::2])
    return out


def half_period(sigma: float) -> float:
    """Time for y to run from y_min to y_max: the singular quadrature
    integral of 1/sqrt(y'^2) over [y_min, y_max]."""
    if not 0.0 < sigma < 1.0:
        raise DomainError(f"half_period needs sigma in (0, 1), got {sigma}")
    y_min, y_max = _turning_radii(sigma)
    return analysis.integrate_inv_sqrt(
        lambda y: 1.0 / math.sqrt(radial_speed_squared(sigma, y)), y_min, y_max
    )


def mean_curvature_check(profile: DelaunayProfile) -> float:
    """Max over interior samples of |H - 1|, with H assembled numerically.

    The derivatives of (y, z) in t come from three-point finite differences
    on the (smoothly nonuniform) sample grid; the first and second
    fundamental forms E, F, G, L, M, N are then built from the surface of
    revolution at the theta = 0 meridian with the inward unit normal, and
    H = (E N - 2 F M + G L) / (E G - F^2) is the trace of the shape operator
    (equal to 1 for the whole family).  Independent of how the profile was
    generated.
    """
    if len(profile.t) < 64:
        raise DomainError(f"need at least 64 samples, got {len(profile.t)}")
    t, y, z = profile.t, profile.y, profile.z
    hm = t[1:-1] - t[:-2]
    hp = t[2:] - t[1:-1]
    denom = hm * hp * (hm + hp)

    def d1(f: np.ndarray) -> np.ndarray:
        return (f[2:] * hm**2 - f[:-2] * hp**2 + f[1:-1] * (hp**2 - hm**2)) / denom

    def d2(f: np.ndarray) -> np.ndarray:
        return 2.0 * (f[:-2] * hp - f[1:-1] * (hm + hp) + f[2:] * hm) / denom

    yi = y[1:-1]
    yp, zp, ypp, zpp = d1(y), d1(z), d2(y), d2(z)

    # meridian theta = 0: X_theta = (0, y, 0), X_t = (y', 0, z')
    x_theta = np.stack([np.zeros_like(yi), yi, np.zeros_like(yi)])
    x_t = np.stack([yp, np.zeros_like(yi), zp])
    x_theta_theta = np.stack([-yi, np.zeros_like(yi), np.zeros_like(yi)])
    x_theta_t = np.stack([np.zeros_like(yi), yp, np.zeros_like(yi)])
    x_tt = np.stack([ypp, np.zeros_like(yi), zpp])

    normal = np.stack([-zp, np.zeros_like(yi), yp])
    normal /= np.sqrt((normal**2).sum(axis=0))

    E = (x_theta * x_theta).sum(axis=0)
    F = (x_theta * x_t).sum(axis=0)
    G = (x_t * x_t).sum(axis=0)
    L = (normal * x_theta_theta).sum(axis=0)
    M = (normal * x_theta_t).sum(axis=0)
    N = (normal * x_tt).sum(axis=0)

    H = (E * N - 2.0 * F * M + G * L) / (E * G - F * F)
    return float(np.max(np.abs(H - 1.0)))
