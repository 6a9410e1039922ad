"""Eigenvalues sigma_k(T) of the linearized Dirichlet-to-Neumann operator on
the straight cylinder B^n x R, in closed form, plus an independent ODE
shooting oracle that never touches Bessel functions.

For n >= 2 put nu = (n-2)/2, let j_nu be the first positive zero of J_nu and
lambda_nu = j_nu^2 the first Dirichlet eigenvalue of the unit ball.  With
A = -phi1'(1) > 0 (phi1 the radial first eigenfunction, normalized per radius)
and mu = 2 pi / j_nu:

    T < mu:   xi  = sqrt((2 pi/T)^2 - lambda_nu),
              sigma_1(T) = A * ((2 nu + 1) + xi I_{nu+1}(xi) / I_nu(xi))
    T = mu:   sigma_1(mu) = A * (2 nu + 1)
    T > mu:   rho = sqrt(lambda_nu - (2 pi/T)^2),
              sigma_1(T) = A * ((2 nu + 1) - rho J_{nu+1}(rho) / J_nu(rho))

Both one-sided limits at mu equal A*(2 nu + 1); this also agrees with the
radial ODE at T = mu, where the regular solution is constant.  For n = 1 the
closed form is elementary (lambda_1 = pi^2/4, the zero sits at T = 4).

sigma_k(T) = sigma_1(T/k) for every k >= 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import analysis, specfun
from .errors import ConvergenceError, DomainError

__all__ = [
    "EigenData",
    "eigen_data",
    "sigma1",
    "sigma_k",
    "sigma1_via_ode",
    "lambda1_via_shooting",
]

_TWO_PI = 2.0 * math.pi
_MU_WINDOW = 1e-9  # route |T - mu| below this to the closed-form value at mu


@dataclass(frozen=True)
class EigenData:
    """Per-dimension constants feeding every spectrum formula.

    lambda_nu = j_nu^2 by construction;
    phi1_prime_at_1 = kappa_n j_nu^(1-nu) J_nu'(j_nu) < 0;
    phi1_second_at_1 = -(2 nu + 1) phi1_prime_at_1;
    mu = 2 pi / j_nu separates the modified-Bessel and oscillatory branches.
    For n = 1: lambda = pi^2/4, phi1_prime_at_1 = -sqrt(pi/8),
    phi1_second_at_1 = 0, kappa_1 = 1/sqrt(2 pi), and j_nu denotes
    sqrt(lambda) = pi/2 (no Bessel function is involved).
    """

    nu: float
    n: int
    j_nu: float
    lambda_nu: float
    kappa_n: float
    phi1_prime_at_1: float
    phi1_second_at_1: float
    mu: float


def _sphere_area(n: int) -> float:
    """Surface measure of the unit sphere S^(n-1) in R^n."""
    return 2.0 * math.pi ** (n / 2.0) / specfun.gamma(n / 2.0)


def _kappa(n: int, nu: float, j: float) -> float:
    """Normalization constant: integral_0^j kappa^2 s^(2-n) J_nu(s)^2 ds
    = j / (2 pi Vol(S^(n-1))).

    The integrand equals (s^-nu J_nu(s))^2 since 2 nu + 2 - n = 0, which is
    smooth and bounded near s = 0 with limit (2^-nu / Gamma(nu+1))^2.
    """
    eps = 1e-8

    def integrand(s: float) -> float:
        return (s ** (-nu) * specfun.bessel_j(nu, s)) ** 2

    at_eps = integrand(eps)
    if not math.isfinite(at_eps):
        raise DomainError(f"normalization integrand not finite at s={eps} for n={n}")
    at_zero = (2.0 ** (-nu) / specfun.gamma(nu + 1.0)) ** 2
    tail = 0.5 * (at_zero + at_eps) * eps
    integral = tail + analysis.integrate(integrand, eps, j, tol=1e-12)
    target = j / (_TWO_PI * _sphere_area(n))
    return math.sqrt(target / integral)


@lru_cache(maxsize=None)
def eigen_data(n: int) -> EigenData:
    """Constants for dimension n >= 1 (cached; EigenData is immutable)."""
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    if n == 1:
        lam = math.pi**2 / 4.0
        return EigenData(
            nu=-0.5,
            n=1,
            j_nu=math.pi / 2.0,
            lambda_nu=lam,
            kappa_n=1.0 / math.sqrt(_TWO_PI),
            phi1_prime_at_1=-math.sqrt(math.pi / 8.0),
            phi1_second_at_1=0.0,
            mu=4.0,
        )
    nu = (n - 2) / 2.0
    j = analysis.bessel_zero(nu, 1)
    kappa = _kappa(n, nu, j)
    phi1_prime = kappa * j ** (1.0 - nu) * specfun.bessel_j_prime(nu, j)
    return EigenData(
        nu=nu,
        n=n,
        j_nu=j,
        lambda_nu=j * j,
        kappa_n=kappa,
        phi1_prime_at_1=phi1_prime,
        phi1_second_at_1=-(2.0 * nu + 1.0) * phi1_prime,
        mu=_TWO_PI / j,
    )


def sigma1(n: int, T: float) -> float:
    """First eigenvalue sigma_1(T) of the linearized operator, closed form."""
    if not T > 0:
        raise DomainError(f"T must be positive, got {T}")
    data = eigen_data(n)
    if n == 1:
        return _sigma1_dim1(T)
    amp = -data.phi1_prime_at_1
    two_nu_1 = 2.0 * data.nu + 1.0
    if abs(T - data.mu) < _MU_WINDOW:
        return amp * two_nu_1
    if T < data.mu:
        xi = math.sqrt((_TWO_PI / T) ** 2 - data.lambda_nu)
        # scaled I's share the e^xi factor, so the ratio never overflows
        ratio = specfun.bessel_i_scaled(data.nu + 1.0, xi) / specfun.bessel_i_scaled(
            data.nu, xi
        )
        return amp * (two_nu_1 + xi * ratio)
    rho = math.sqrt(data.lambda_nu - (_TWO_PI / T) ** 2)
    ratio = specfun.bessel_j(data.nu + 1.0, rho) / specfun.bessel_j(data.nu, rho)
    return amp * (two_nu_1 - rho * ratio)


def _sigma1_dim1(T: float) -> float:
    # alpha(T) = pi^2/4 - (2 pi/T)^2 is negative below T=4, positive above,
    # and stays below pi^2/4, so tan is evaluated strictly inside (0, pi/2)
    amp = math.sqrt(math.pi / 8.0)
    if abs(T - 4.0) < _MU_WINDOW:
        return 0.0
    alpha = math.pi**2 / 4.0 - (_TWO_PI / T) ** 2
    if T < 4.0:
        g = math.sqrt(-alpha)
        return amp * g * math.tanh(g)
    g = math.sqrt(alpha)
    if g >= math.pi / 2.0 - 1e-12:
        raise DomainError(f"T={T} drives the tangent argument onto its pole")
    return -amp * g * math.tan(g)


def sigma_k(n: int, k: int, T: float) -> float:
    """sigma_k(T) = sigma_1(T/k) for k >= 1."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return sigma1(n, T / k)


_FROBENIUS_DELTA = 1e-4  # two-term series start; O(delta^4) error, below RK4


def sigma1_via_ode(n: int, T: float, steps: int = 100_000) -> float:
    """sigma_1(T) by shooting the radial ODE; independent of Bessel routines.

    Integrates c'' + (n-1)/r c' + (lambda - (2 pi/T)^2) c = 0 outward from
    r = 1e-4 (regular series start c = 1 + ((2 pi/T)^2 - lambda) r^2 / (2n)),
    rescales so that c(1) = -phi1'(1), and returns c'(1) + phi1''(1).
    lambda itself comes from eigen_data; for n = 1 the same even start applies
    since the ODE has no singular term.
    """
    if not T > 0:
        raise DomainError(f"T must be positive, got {T}")
    if steps < 1000:
        raise DomainError(f"steps must be >= 1000, got {steps}")
    data = eigen_data(n)
    gam = data.lambda_nu - (_TWO_PI / T) ** 2
    beta = -gam
    delta = _FROBENIUS_DELTA
    c0 = 1.0 + beta * delta * delta / (2.0 * n)
    cp0 = beta * delta / n

    def field(r: float, y: tuple[float, float]) -> tuple[float, float]:
        c, cp = y
        return cp, -((n - 1) / r) * cp - gam * c

    c1, cp1 = analysis.ode_rk4(field, delta, (c0, cp0), 1.0, steps)
    if abs(c1) < 1e-12:
        raise ConvergenceError(
            f"raw solution vanishes at r=1 (T={T} outside the oracle's validity)"
        )
    scale = -data.phi1_prime_at_1 / c1
    return scale * cp1 + data.phi1_second_at_1


def lambda1_via_shooting(n: int, tol: float = 1e-9) -> float:
    """First Dirichlet eigenvalue of the unit ball by bisection on the
    shooting residual; independent confirmation that lambda = j_nu^2.

    The regular solution of phi'' + (n-1)/r phi' + lambda phi = 0 is
    integrated from the series start at r = 1e-4; lambda is tuned until
    phi(1) = 0.  The first sign change of phi(1; lambda) along an upward scan
    brackets the lowest eigenvalue.
    """
    if n < 2:
        raise DomainError(f"lambda1_via_shooting requires n >= 2, got {n}")
    nu = (n - 2) / 2.0
    steps = 2000
    delta = _FROBENIUS_DELTA

    def end_value(lam: float) -> float:
        def field(r: float, y: tuple[float, float]) -> tuple[float, float]:
            p, pp = y
            return pp, -((n - 1) / r) * pp - lam * p

        p0 = 1.0 - lam * delta * delta / (2.0 * n)
        pp0 = -lam * delta / n
        return analysis.ode_rk4(field, delta, (p0, pp0), 1.0, steps)[0]

    ceiling = (nu + 2.0 * max(nu, 1.0) ** (1 / 3) + 3.0) ** 2
    lam, val = 0.5, end_value(0.5)
    while lam < ceiling:
        lam2 = lam + 2.0
        val2 = end_value(lam2)
        if val * val2 < 0:
            return analysis.find_root(
                end_value, analysis.Bracket(lam, lam2, val, val2), tol
            )
        lam, val = lam2, val2
    raise ConvergenceError(f"no eigenvalue bracket found below lambda={ceiling}")
