"""Named property suites over the numerical core, shared by the service's
/check endpoint and the CLI `check` command.

Each suite returns a list of CheckResult rows; a suite passes when every row
does.  The suites are sized to finish in seconds; the pytest acceptance
module runs the heavyweight variants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import analysis, bifurcation, delaunay, pdecheck, specfun, spectrum
from .errors import DomainError

__all__ = ["CheckResult", "run_suite", "SUITES"]


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str


def _result(suite: str, name: str, passed: bool, detail: str) -> CheckResult:
    return CheckResult(suite=suite, name=name, passed=bool(passed), detail=detail)


# ---------------------------------------------------------------- specfun --


def _suite_specfun() -> list[CheckResult]:
    out = []
    taus = [0.5 * i for i in range(21)]
    svals = [0.25 * i for i in range(1, 121)]

    worst = 0.0
    for tau in taus:
        for s in svals:
            jm, j0, jp = (specfun.bessel_j(tau + d, s) for d in (-1.0, 0.0, 1.0))
            jd = specfun.bessel_j_prime(tau, s)
            scale = max(abs(jm), abs(j0), abs(jp), abs(s * jd), 1e-30)
            res = max(
                abs(jm + jp - 2.0 * tau / s * j0),
                abs(jm - jp - 2.0 * jd),
                abs(s * jd + tau * j0 - s * jm),
                abs(s * jd - tau * j0 + s * jp),
            )
            worst = max(worst, res / scale)
    out.append(_result("specfun", "bessel-j recurrences", worst <= 1e-10, f"max residual {worst:.2e}"))

    worst = 0.0
    for tau in taus:
        for s in svals:
            im, i0, ip = (specfun.bessel_i(tau + d, s) for d in (-1.0, 0.0, 1.0))
            idv = specfun.bessel_i_prime(tau, s)
            scale = max(im, i0, ip, abs(s * idv), 1e-30)
            res = max(
                abs(im - ip - 2.0 * tau / s * i0),
                abs(im + ip - 2.0 * idv),
                abs(s * idv + tau * i0 - s * im),
                abs(s * idv - tau * i0 - s * ip),
            )
            worst = max(worst, res / scale)
    out.append(_result("specfun", "bessel-i recurrences", worst <= 1e-10, f"max residual {worst:.2e}"))

    turan_ok = True
    margin = math.inf
    for tau in taus[:21]:
        for s in svals:
            gap = specfun.bessel_i(tau, s) ** 2 - specfun.bessel_i(tau - 1.0, s) * specfun.bessel_i(tau + 1.0, s)
            margin = min(margin, gap)
            turan_ok &= gap > 0
    out.append(_result("specfun", "turan inequality for I", turan_ok, f"min gap {margin:.3e}"))

    turan_ok = True
    positive_ok = True
    for tau in taus:
        j = analysis.bessel_zero(tau, 1)
        for frac in np.linspace(0.01, 0.999, 120):
            s = float(frac * j)
            j0 = specfun.bessel_j(tau, s)
            positive_ok &= j0 > 0
            turan_ok &= j0 * j0 > specfun.bessel_j(tau - 1.0, s) * specfun.bessel_j(tau + 1.0, s)
    out.append(_result("specfun", "turan inequality for J on (0, j_nu)", turan_ok, "strict on sampled grid"))
    out.append(_result("specfun", "J positive below its first zero", positive_ok, "strict on sampled grid"))

    inter_ok = True
    for tau in (0.5, 1.0, 2.5, 5.0, 10.0, 20.0):
        j1 = analysis.bessel_zero(tau, 1)
        inter_ok &= j1 < analysis.bessel_zero(tau + 1.0, 1)
        inter_ok &= j1 < analysis.bessel_zero(tau - 0.5, 2)
    out.append(_result("specfun", "zero interlacing", inter_ok, "j_nu < j_(nu+1), j_nu < second zero of j_(nu-1/2)"))

    env_ok = True
    for tau in (10.0, 20.0, 50.0, 200.0, 1000.0):
        j = analysis.bessel_zero(tau, 1)
        lo, hi = analysis.bessel_zero_envelope(tau)
        env_ok &= lo < j < hi
    out.append(_result("specfun", "large-order zero envelope", env_ok, "nu in {10,20,50,200,1000}"))
    return out


# --------------------------------------------------------------- spectrum --


def _suite_spectrum() -> list[CheckResult]:
    out = []
    dims = (2, 3, 5, 10)

    cont_ok = True
    detail = []
    for n in dims:
        mu = spectrum.eigen_data(n).mu
        at_mu = spectrum.sigma1(n, mu)
        gaps = [
            max(abs(spectrum.sigma1(n, mu - e) - at_mu), abs(spectrum.sigma1(n, mu + e) - at_mu))
            for e in (1e-2, 1e-3, 1e-4, 1e-5, 1e-6)
        ]
        cont_ok &= all(g2 < g1 for g1, g2 in zip(gaps, gaps[1:])) and gaps[-1] < 1e-5
        detail.append(f"n={n}: {gaps[-1]:.1e}")
    out.append(_result("spectrum", "branch continuity at mu", cont_ok, "; ".join(detail)))

    left_ok = True
    for n in dims:
        mu = spectrum.eigen_data(n).mu
        left_ok &= all(spectrum.sigma1(n, float(T)) > 0 for T in np.linspace(0.02 * mu, 0.999 * mu, 60))
    out.append(_result("spectrum", "sigma_1 positive left of mu", left_ok, "60-point grid per dimension"))

    dec_ok = True
    for n in (1, 2, 3, 5):
        grid = np.geomspace(0.2, 50.0, 120)
        vals = [spectrum.sigma1(n, float(T)) for T in grid]
        dec_ok &= all(a > b for a, b in zip(vals, vals[1:]))
    out.append(_result("spectrum", "sigma_1 strictly decreasing", dec_ok, "120-point log grid"))

    asym_ok = True
    for n in dims:
        mu = spectrum.eigen_data(n).mu
        at_mu = spectrum.sigma1(n, mu)
        # sigma_1 grows like 2 pi (-phi1'(1)) / T as T -> 0, so the scale
        # factor 1e3 over sigma_1(mu) needs T below 2 pi / (1e3 (2 nu + 1))
        asym_ok &= spectrum.sigma1(n, 1e-4) > 1e3 * abs(at_mu)
        asym_ok &= spectrum.sigma1(n, 0.05) > 10.0 * abs(at_mu)
        asym_ok &= spectrum.sigma1(n, 1e3) < -1e3 * abs(at_mu)
    out.append(_result("spectrum", "asymptotic blow-up at T->0 and T->inf", asym_ok, "scale factor 1e3"))

    der_ok = True
    for n in dims:
        mu = spectrum.eigen_data(n).mu
        h = 1e-5
        der_ok &= (spectrum.sigma1(n, mu + h) - spectrum.sigma1(n, mu - h)) / (2 * h) < 0
    out.append(_result("spectrum", "sigma_1'(mu) negative", der_ok, "central difference h=1e-5"))

    worst = 0.0
    for n in (1, 2, 3):
        for T in np.geomspace(0.3, 30.0, 9):
            worst = max(worst, abs(spectrum.sigma1(n, float(T)) - spectrum.sigma1_via_ode(n, float(T), steps=6000)))
    out.append(_result("spectrum", "closed form vs shooting oracle", worst <= 1e-6, f"max gap {worst:.2e}"))
    return out


# ------------------------------------------------------------- bifurcation --


def _suite_bifurcation() -> list[CheckResult]:
    out = []
    periods = [bifurcation.t_nu(two_nu + 2).t_nu for two_nu in range(41)]
    mono = all(a > b for a, b in zip(periods, periods[1:]))
    out.append(_result("bifurcation", "T_nu strictly decreasing on 2nu=0..40", mono, f"T range [{periods[-1]:.5f}, {periods[0]:.5f}]"))

    bounds_ok = True
    for two_nu in range(20, 41):
        nu = two_nu / 2.0
        lo, hi = bifurcation.t_bounds(nu)
        t = bifurcation.t_nu(two_nu + 2).t_nu
        bounds_ok &= lo < t < hi
    out.append(_result("bifurcation", "envelope brackets T_nu for 2nu=20..40", bounds_ok, "strict inclusion"))

    zero_ok = True
    worst = 0.0
    for n in range(1, 13):
        res = abs(spectrum.sigma1(n, bifurcation.t_nu(n).t_nu))
        worst = max(worst, res)
        zero_ok &= res <= 1e-8
    out.append(_result("bifurcation", "sigma_1(T_nu) vanishes for n=1..12", zero_ok, f"max residual {worst:.1e}"))

    scale_ok = True
    worst = 0.0
    for n in range(1, 13):
        T = bifurcation.t_nu(n).t_nu
        for k in (2, 3):
            res = abs(spectrum.sigma_k(n, k, k * T))
            worst = max(worst, res)
            scale_ok &= res <= 1e-8
    out.append(_result("bifurcation", "mode-k kernel at k*T_nu", scale_ok, f"max residual {worst:.1e}"))

    env_ok = True
    detail = []
    for nu in (50.0, 100.0):
        gap = abs(bifurcation.t_nu(int(2 * nu) + 2).t_nu - bifurcation.asymptotic_tnu(nu))
        env_ok &= gap <= 6.0 * nu ** (-7.0 / 6.0)
        detail.append(f"nu={nu:g}: {gap * nu ** (7 / 6):.3f}")
    out.append(_result("bifurcation", "leading-order asymptotics envelope", env_ok, "; ".join(detail)))

    cr_ok = True
    for n in (1, 2, 3):
        cr_ok &= bifurcation.check_cr_hypotheses(n, 8).ok
    out.append(_result("bifurcation", "simple-eigenvalue hypotheses for n=1..3", cr_ok, "kernel + transversality"))
    return out


# ---------------------------------------------------------------- delaunay --


def _suite_delaunay() -> list[CheckResult]:
    out = []

    speed_ok = True
    worst = 0.0
    for sig in (0.3, 0.5, 0.9):
        prof = delaunay.delaunay_profile(sig, 8192)
        t, y, z = prof.t, prof.y, prof.z
        hm = t[1:-1] - t[:-2]
        hp = t[2:] - t[1:-1]
        denom = hm * hp * (hm + hp)
        yp = (y[2:] * hm**2 - y[:-2] * hp**2 + y[1:-1] * (hp**2 - hm**2)) / denom
        zp = (z[2:] * hm**2 - z[:-2] * hp**2 + z[1:-1] * (hp**2 - hm**2)) / denom
        res = float(np.max(np.abs(yp**2 + zp**2 - y[1:-1] ** 2)))
        worst = max(worst, res)
        speed_ok &= res <= 1e-6
    out.append(_result("delaunay", "parametrization speed y'^2 + z'^2 = y^2", speed_ok, f"max residual {worst:.1e}"))

    jac_ok = all(
        delaunay.jacobi_sigma(j, k, T) > 0
        for j in (2, 3, 5)
        for k in (0, 1, 4)
        for T in (0.5, 2 * math.pi, 50.0)
    )
    jac_ok &= delaunay.jacobi_sigma(1, 0, 0.7) == 0.0 and delaunay.jacobi_sigma(1, 0, 42.0) == 0.0
    for k in (1, 2, 3):
        jac_ok &= abs(delaunay.jacobi_sigma(0, k, 2 * math.pi * k)) < 1e-14
        jac_ok &= delaunay.jacobi_sigma(0, k, 2 * math.pi * k + 0.1) * delaunay.jacobi_sigma(0, k, 2 * math.pi * k - 0.1) < 0
    out.append(_result("delaunay", "cylinder Jacobi eigenvalue signs", jac_ok, "zero modes and positivity"))

    prof = delaunay.delaunay_profile(1.0, 64)
    cyl_ok = float(np.max(np.abs(prof.y - 1.0))) == 0.0 and float(np.max(np.abs(prof.z - prof.t))) < 1e-12
    out.append(_result("delaunay", "sigma=1 is the straight cylinder", cyl_ok, f"period {prof.period:.6f}"))

    dev = delaunay.mean_curvature_check(delaunay.delaunay_profile(0.5, 1024))
    out.append(_result("delaunay", "mean curvature 1 at sigma=0.5", dev < 1e-4, f"max |H-1| = {dev:.2e}"))

    d1 = delaunay.mean_curvature_check(delaunay.delaunay_profile(0.9, 512))
    d2 = delaunay.mean_curvature_check(delaunay.delaunay_profile(0.9, 1024))
    ratio = d1 / d2
    out.append(_result("delaunay", "second-order curvature convergence", 2.5 < ratio < 6.0, f"halving ratio {ratio:.2f}"))
    return out


# --------------------------------------------------------------------- pde --


def _suite_pde() -> list[CheckResult]:
    out = []
    n, T = 2, 3.0
    exact = spectrum.eigen_data(n).lambda_nu

    errs = []
    pairs = {}
    for size in (24, 48):
        grid = pdecheck.MeridianGrid.straight(n, T, size, size)
        pair = pdecheck.first_eigenpair(grid)
        pairs[size] = (grid, pair)
        errs.append(abs(pair.lam - exact))
    ratio = errs[0] / errs[1]
    out.append(_result("pde", "straight-cylinder eigenvalue convergence", 3.0 < ratio < 5.0, f"error ratio {ratio:.2f} (errors {errs[0]:.2e}, {errs[1]:.2e})"))

    grid, pair = pairs[48]
    flat = max(abs(v) for _, v in pdecheck.neumann_data(grid, pair))
    out.append(_result("pde", "operator vanishes on the straight cylinder", flat < 1e-9, f"max |F| = {flat:.1e}"))

    out.append(_result("pde", "eigenfunction positive in the interior", bool(np.all(pair.u > 0)), f"min u = {pair.u.min():.2e}"))

    rescaled = pdecheck.EigenPair(lam=pair.lam, u=pdecheck.normalize(grid, 7.3 * pair.u))
    base = np.array([v for _, v in pdecheck.neumann_data(grid, pair)])
    again = np.array([v for _, v in pdecheck.neumann_data(grid, rescaled)])
    inv = float(np.max(np.abs(base - again)))
    out.append(_result("pde", "normalization invariance", inv <= 1e-10, f"max change {inv:.1e}"))

    report = pdecheck.verify_linearization(2, 1, 2.0, 1e-3, 48, 48, max_mode=5)
    main = abs(report.mode_coefficients[1])
    leak = max(abs(c) for m, c in report.mode_coefficients.items() if m not in (0, 1))
    out.append(_result("pde", "first-order mode decoupling", leak <= 0.05 * main, f"leakage {leak:.2e} vs mode-1 {main:.2e}"))
    return out


SUITES = {
    "specfun": _suite_specfun,
    "spectrum": _suite_spectrum,
    "bifurcation": _suite_bifurcation,
    "delaunay": _suite_delaunay,
    "pde": _suite_pde,
}


def run_suite(suite: str) -> list[CheckResult]:
    """Run one named suite, or all of them."""
    if suite == "all":
        results = []
        for name in SUITES:
            results.extend(SUITES[name]())
        return results
    if suite not in SUITES:
        raise DomainError(f"unknown suite {suite!r}; choose from {sorted(SUITES)} or 'all'")
    return SUITES[suite]()
