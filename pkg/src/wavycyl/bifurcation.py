"""Bifurcation periods T_nu of the wavy-cylinder family, rigorous large-order
bounds, simple-eigenvalue hypothesis checks, and first-order domain profiles.

T_nu = 2 pi / sqrt(lambda_nu - rho_nu^2), where rho_nu is the unique zero of
s J_{nu-1}(s) + J_nu(s) on (0, j_nu), equivalently of
s J_{nu+1}(s) - (2 nu + 1) J_nu(s).  For n = 1 the period is exactly 4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import analysis, specfun, spectrum
from .errors import ConvergenceError, DomainError

__all__ = [
    "BifurcationPoint",
    "DomainProfile",
    "CrHypothesisReport",
    "rho_nu",
    "t_nu",
    "t_bounds",
    "asymptotic_tnu",
    "table",
    "check_cr_hypotheses",
    "profile",
]

_TWO_PI = 2.0 * math.pi
_BOUNDS_MIN_NU = 10.0  # the rho_nu^-/rho_nu^+ envelope is established for nu >= 10


@dataclass(frozen=True)
class BifurcationPoint:
    """Bifurcation data for one dimension.

    rho_minus/rho_plus and the derived t_lower/t_upper envelope are populated
    only for nu >= 10; for n = 1 the Bessel-side fields are None and the
    period is exactly 4.
    """

    nu: float
    n: int
    t_nu: float
    mu: float
    j_nu: float | None = None
    lambda_nu: float | None = None
    rho_nu: float | None = None
    rho_minus: float | None = None
    rho_plus: float | None = None
    t_lower: float | None = None
    t_upper: float | None = None


@dataclass(frozen=True)
class DomainProfile:
    """First-order boundary radius R(t) = 1 + s cos(2 pi t / T) of a
    bifurcating domain, sampled over an integer number of periods."""

    n: int
    s: float
    period: float
    samples: list[tuple[float, float]]


@dataclass(frozen=True)
class CrHypothesisReport:
    """Numerical check of the simple-eigenvalue bifurcation hypotheses at T_nu:
    one-dimensional kernel (sigma_1 = 0, sigma_k != 0 for k >= 2) and
    transversal crossing (sigma_1'(T_nu) < 0)."""

    n: int
    t_nu: float
    sigma_values: dict[int, float]
    sigma1_residual: float
    sigma1_derivative: float
    kernel_simple: bool
    higher_modes_nonzero: bool
    transversal: bool
    ok: bool
    failures: list[str] = field(default_factory=list)


def rho_nu(nu: float) -> float:
    """Unique zero of s J_{nu-1}(s) + J_nu(s) on (0, j_nu), to ~1e-10.

    For nu >= 1 the equivalent form s J_{nu+1} - (2 nu + 1) J_nu is used
    (avoids J at negative order) with the guaranteed bracket
    (j_{nu-1}, j_nu); for nu < 1 the interval (1e-3, j_nu) is scanned.
    """
    if nu < 0:
        raise DomainError(f"rho_nu requires nu >= 0, got {nu}")
    j = analysis.bessel_zero(nu, 1)
    if nu >= 1:
        g = lambda s: s * specfun.bessel_j(nu + 1.0, s) - (2.0 * nu + 1.0) * specfun.bessel_j(nu, s)
        j_lower = analysis.bessel_zero(nu - 1.0, 1)
        bracket = analysis.Bracket.of(g, j_lower + 1e-9, j - 1e-9)
        return analysis.find_root(g, bracket, 1e-11)
    # J_{nu-1} has negative order here; for nu = 0, J_{-1} = -J_1 holds and is
    # what the series evaluation returns
    g = lambda s: s * specfun.bessel_j(nu - 1.0, s) + specfun.bessel_j(nu, s)
    lo = 1e-3
    values = [(lo + k * (j - 1e-9 - lo) / 64.0) for k in range(65)]
    fs = [g(s) for s in values]
    for k in range(64):
        if fs[k] * fs[k + 1] < 0:
            bracket = analysis.Bracket(values[k], values[k + 1], fs[k], fs[k + 1])
            return analysis.find_root(g, bracket, 1e-11)
    raise ConvergenceError(f"no sign change of s J_(nu-1) + J_nu on (0, j_nu) for nu={nu}")


def _envelope(nu: float, j_lower: float, lam: float):
    rho_minus = j_lower + 1.0 / (j_lower + 2.0)
    rho_plus = j_lower + 1.0 / j_lower
    t_lower = _TWO_PI / math.sqrt(lam - rho_minus**2)
    t_upper = _TWO_PI / math.sqrt(lam - rho_plus**2)
    return rho_minus, rho_plus, t_lower, t_upper


def t_nu(n: int) -> BifurcationPoint:
    """Bifurcation period for dimension n >= 1."""
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    if n == 1:
        return BifurcationPoint(nu=-0.5, n=1, t_nu=4.0, mu=4.0)
    nu = (n - 2) / 2.0
    j = analysis.bessel_zero(nu, 1)
    lam = j * j
    rho = rho_nu(nu)
    period = _TWO_PI / math.sqrt(lam - rho * rho)
    extra: dict[str, float] = {}
    if nu >= _BOUNDS_MIN_NU:
        rm, rp, tl, tu = _envelope(nu, analysis.bessel_zero(nu - 1.0, 1), lam)
        extra = dict(rho_minus=rm, rho_plus=rp, t_lower=tl, t_upper=tu)
    return BifurcationPoint(
        nu=nu, n=n, t_nu=period, mu=_TWO_PI / j, j_nu=j, lambda_nu=lam, rho_nu=rho, **extra
    )


def t_bounds(nu: float) -> tuple[float, float]:
    """Rigorous envelope 2 pi/sqrt(lambda - (rho^-)^2) < T_nu <
    2 pi/sqrt(lambda - (rho^+)^2), valid for nu >= 10."""
    if nu < _BOUNDS_MIN_NU:
        raise DomainError(f"t_bounds is only established for nu >= 10, got {nu}")
    j = analysis.bessel_zero(nu, 1)
    _, _, t_lower, t_upper = _envelope(nu, analysis.bessel_zero(nu - 1.0, 1), j * j)
    return t_lower, t_upper


def asymptotic_tnu(nu: float) -> float:
    """Leading large-order term sqrt(2) pi nu^(-1/2) of the period."""
    if not nu > 0:
        raise DomainError(f"asymptotic_tnu requires nu > 0, got {nu}")
    return math.sqrt(2.0) * math.pi / math.sqrt(nu)


def table(two_nu_values: list[int]) -> list[tuple[int, BifurcationPoint]]:
    """Bifurcation periods for a list of doubled orders 2*nu >= 0."""
    rows = []
    for two_nu in two_nu_values:
        if two_nu < 0:
            raise DomainError(f"2*nu must be >= 0, got {two_nu}")
        rows.append((two_nu, t_nu(two_nu + 2)))
    return rows


def check_cr_hypotheses(n: int, k_max: int) -> CrHypothesisReport:
    """Verify the simple-eigenvalue bifurcation hypotheses at T_nu.

    Checks |sigma_1(T_nu)| <= 1e-8 (root residual), |sigma_k(T_nu)| > 1e-6
    for k = 2..k_max (kernel is one-dimensional), and that the central
    difference of sigma_1 at T_nu is negative (transversality).
    """
    if k_max < 2:
        raise DomainError(f"k_max must be >= 2, got {k_max}")
    point = t_nu(n)
    T = point.t_nu
    values = {k: spectrum.sigma_k(n, k, T) for k in range(1, k_max + 1)}
    residual = abs(values[1])
    h = 1e-5
    derivative = (spectrum.sigma1(n, T + h) - spectrum.sigma1(n, T - h)) / (2.0 * h)

    failures = []
    kernel_simple = residual <= 1e-8
    if not kernel_simple:
        failures.append(f"sigma_1(T_nu) residual {residual:.3e} exceeds 1e-8")
    higher = all(abs(values[k]) > 1e-6 for k in range(2, k_max + 1))
    if not higher:
        bad = [k for k in range(2, k_max + 1) if abs(values[k]) <= 1e-6]
        failures.append(f"sigma_k(T_nu) not bounded away from zero for k in {bad}")
    transversal = derivative < 0
    if not transversal:
        failures.append(f"sigma_1'(T_nu) = {derivative:.3e} is not negative")

    return CrHypothesisReport(
        n=n,
        t_nu=T,
        sigma_values=values,
        sigma1_residual=residual,
        sigma1_derivative=derivative,
        kernel_simple=kernel_simple,
        higher_modes_nonzero=higher,
        transversal=transversal,
        ok=kernel_simple and higher and transversal,
        failures=failures,
    )


def profile(n: int, s: float, periods: int, samples_per_period: int) -> DomainProfile:
    """Sampled first-order boundary profile R(t) = 1 + s cos(2 pi t / T_nu)."""
    if abs(s) >= 1:
        raise DomainError(f"|s| must be < 1 so the radius stays positive, got {s}")
    if periods < 1:
        raise DomainError(f"periods must be >= 1, got {periods}")
    if samples_per_period < 8:
        raise DomainError(f"samples_per_period must be >= 8, got {samples_per_period}")
    T = t_nu(n).t_nu
    total = periods * samples_per_period
    samples = []
    for i in range(total + 1):
        t = i * T / samples_per_period
        samples.append((t, 1.0 + s * math.cos(_TWO_PI * t / T)))
    return DomainProfile(n=n, s=s, period=T, samples=samples)
