"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line
(run with `pytest tests/test_acceptance.py -s` to see them live).

Criterion 1 compares against the published 5-decimal reference table.  Five
of its 24 entries (2nu in {1, 2, 8, 9, 14}) are misprints in the source
table: the recomputed periods were verified independently at 40-digit
precision, and for 2nu = 1 the defining root problem reduces to the
elementary equation tan(rho) = -rho, which settles that entry beyond doubt
(T = 2.6194163, printed as 2.61931).  The criterion is asserted as stated,
so this suite reports exactly those five entries as failures.
"""

import math
import time

import numpy as np
import pytest

from wavycyl import analysis, bifurcation, checks, delaunay, pdecheck, spectrum

# Published reference periods indexed by 2*nu; printed with 5 decimals except
# the 4-decimal entries {15, 16, 200}.
REFERENCE_PERIODS = {
    0: 3.06362, 1: 2.61931, 2: 2.34104, 3: 2.14351, 4: 1.99308, 5: 1.87315,
    6: 1.77429, 7: 1.69088, 8: 1.61924, 9: 1.55650, 10: 1.50123, 11: 1.45180,
    12: 1.40735, 13: 1.36697, 14: 1.33003, 15: 1.2963, 16: 1.2650,
    17: 1.23616, 18: 1.20927, 19: 1.18411, 20: 1.16058, 40: 0.87348,
    200: 0.4229, 2000: 0.13888,
}
FOUR_DECIMAL_ENTRIES = {15, 16, 200}

# Independent 40-digit recomputation of the entries that disagree with the
# reference beyond its own print precision.
VERIFIED_CORRECTIONS = {
    1: 2.61942, 2: 2.34098, 8: 1.61918, 9: 1.55655, 14: 1.33009,
}


def _report(num: int, name: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {name}"
    if detail:
        line += f" ({detail})"
    print(line)


def test_criterion_1_table_reproduction():
    start = time.time()
    computed = {two_nu: point.t_nu for two_nu, point in bifurcation.table(list(REFERENCE_PERIODS))}
    mismatches = []
    for two_nu, reference in REFERENCE_PERIODS.items():
        tol = 5e-4 if two_nu in FOUR_DECIMAL_ENTRIES else 5e-5
        err = abs(computed[two_nu] - reference)
        if err > tol:
            note = ""
            if two_nu in VERIFIED_CORRECTIONS:
                note = f"; reference misprint, verified value {VERIFIED_CORRECTIONS[two_nu]}"
            mismatches.append(
                f"2nu={two_nu}: computed {computed[two_nu]:.7f} vs reference {reference} "
                f"(err {err:.2e} > {tol:g}{note})"
            )
    elapsed = time.time() - start
    ok = not mismatches and elapsed < 10.0
    _report(
        1,
        "table reproduction",
        ok,
        f"{len(REFERENCE_PERIODS) - len(mismatches)}/{len(REFERENCE_PERIODS)} entries within "
        f"tolerance, {elapsed:.1f}s",
    )
    assert elapsed < 10.0
    assert not mismatches, "\n".join(mismatches)


def test_criterion_2_dim1_exactness():
    start = time.time()
    exact_period = bifurcation.t_nu(1).t_nu == 4.0
    zero = spectrum.sigma1(1, 4.0) == 0.0
    h = 1e-5
    slope = (spectrum.sigma1(1, 4.0 + h) - spectrum.sigma1(1, 4.0 - h)) / (2 * h)
    expected = -math.sqrt(math.pi / 8.0) * math.pi**2 / 8.0
    slope_ok = abs(slope - expected) <= 1e-6
    elapsed = time.time() - start
    ok = exact_period and zero and slope_ok and elapsed < 1.0
    _report(2, "n=1 exactness", ok, f"slope {slope:.8f} vs {expected:.8f}, {elapsed:.2f}s")
    assert exact_period and zero and slope_ok
    assert elapsed < 1.0


def test_criterion_3_oracle_equivalence():
    start = time.time()
    worst = 0.0
    for n in (1, 2, 3, 4, 5, 10):
        for T in np.geomspace(0.3, 30.0, 50):
            gap = abs(spectrum.sigma1(n, float(T)) - spectrum.sigma1_via_ode(n, float(T), steps=6000))
            worst = max(worst, gap)
    elapsed = time.time() - start
    ok = worst <= 1e-6 and elapsed < 30.0
    _report(3, "closed form vs ODE oracle", ok, f"max gap {worst:.2e}, {elapsed:.1f}s")
    assert worst <= 1e-6
    assert elapsed < 30.0


def test_criterion_4_shooting_eigenvalue():
    start = time.time()
    worst = 0.0
    for n in range(2, 9):
        nu = (n - 2) / 2.0
        target = analysis.bessel_zero(nu, 1) ** 2
        worst = max(worst, abs(spectrum.lambda1_via_shooting(n) - target))
    elapsed = time.time() - start
    ok = worst <= 1e-6 and elapsed < 5.0
    _report(4, "shooting eigenvalue", ok, f"max |lambda - j_nu^2| = {worst:.2e}, {elapsed:.1f}s")
    assert worst <= 1e-6
    assert elapsed < 5.0


def test_criterion_5_bounds_and_monotonicity():
    start = time.time()
    periods = [bifurcation.t_nu(two_nu + 2).t_nu for two_nu in range(41)]
    monotone = all(a > b for a, b in zip(periods, periods[1:]))
    bracketed = True
    for two_nu in range(20, 41):
        lo, hi = bifurcation.t_bounds(two_nu / 2.0)
        bracketed &= lo < periods[two_nu] < hi
    elapsed = time.time() - start
    ok = monotone and bracketed and elapsed < 10.0
    _report(5, "bounds and monotonicity", ok, f"2nu = 0..40, {elapsed:.1f}s")
    assert monotone and bracketed
    assert elapsed < 10.0


def test_criterion_6_asymptotics():
    # envelope constant 6 confirmed against the computed ratios
    # {50: 4.36, 100: 4.61, 500: 5.00, 1000: 5.11} before freezing
    start = time.time()
    worst_ratio = 0.0
    for nu in (50.0, 100.0, 500.0, 1000.0):
        gap = abs(bifurcation.t_nu(int(2 * nu) + 2).t_nu - bifurcation.asymptotic_tnu(nu))
        worst_ratio = max(worst_ratio, gap * nu ** (7.0 / 6.0))
    elapsed = time.time() - start
    ok = worst_ratio <= 6.0 and elapsed < 20.0
    _report(6, "leading-order asymptotics", ok, f"max |gap| nu^(7/6) = {worst_ratio:.3f} <= 6, {elapsed:.1f}s")
    assert worst_ratio <= 6.0
    assert elapsed < 20.0


def test_criterion_7_property_suites():
    start = time.time()
    results = checks.run_suite("specfun") + checks.run_suite("spectrum")
    failed = [r for r in results if not r.passed]
    elapsed = time.time() - start
    ok = not failed and elapsed < 20.0
    _report(7, "property suites", ok, f"{len(results)} properties, {elapsed:.1f}s")
    assert not failed, "\n".join(f"{r.name}: {r.detail}" for r in failed)
    assert elapsed < 20.0


def test_criterion_8_pde_validation():
    start = time.time()
    T0 = bifurcation.t_nu(2).t_nu
    sigma2 = spectrum.sigma_k(2, 2, T0)

    mode1 = pdecheck.linearized_coefficient(2, 1, T0, 1e-3, 96, 96)
    mode1_ok = abs(mode1) <= 0.05 * abs(sigma2)

    report = pdecheck.verify_linearization(2, 2, T0, 1e-3, 96, 96)
    absolute_ok = report.rel_error is not None and report.rel_error <= 0.05

    exact = spectrum.eigen_data(2).lambda_nu
    errors = []
    for size in (48, 96, 192):
        pair = pdecheck.first_eigenpair(pdecheck.MeridianGrid.straight(2, T0, size, size))
        errors.append(abs(pair.lam - exact))
    ratios = (errors[0] / errors[1], errors[1] / errors[2])
    convergence_ok = all(3.2 < r < 4.8 for r in ratios)

    elapsed = time.time() - start
    ok = mode1_ok and absolute_ok and convergence_ok and elapsed < 300.0
    _report(
        8,
        "PDE linearization validation",
        ok,
        f"mode1 {abs(mode1):.2e} <= {0.05 * abs(sigma2):.2e}, mode2 rel err "
        f"{report.rel_error:.4f}, grid ratios {ratios[0]:.2f}/{ratios[1]:.2f}, {elapsed:.1f}s",
    )
    assert mode1_ok and absolute_ok and convergence_ok
    assert elapsed < 300.0


def test_criterion_9_delaunay():
    start = time.time()
    dev = delaunay.mean_curvature_check(delaunay.delaunay_profile(0.5, 1024))
    curvature_ok = dev < 1e-4
    structure_ok = all(delaunay.jacobi_sigma(1, 0, T) == 0.0 for T in (0.4, 2 * math.pi, 77.0))
    structure_ok &= all(delaunay.jacobi_sigma(0, k, 2 * math.pi * k) == 0.0 for k in (1, 2, 3, 8))
    elapsed = time.time() - start
    ok = curvature_ok and structure_ok and elapsed < 5.0
    _report(9, "Delaunay family checks", ok, f"max |H-1| = {dev:.2e}, {elapsed:.1f}s")
    assert curvature_ok and structure_ok
    assert elapsed < 5.0
