"""Special-function surface: values against an independent ascending-series
oracle, limit behaviour, derivative recurrences, and domain errors."""

import math

import pytest

from wavycyl import specfun
from wavycyl.errors import DomainError


def series_j(tau: float, s: float, terms: int = 60) -> float:
    """Brute-force ascending series for J_tau, safe for small arguments."""
    total = 0.0
    for m in range(terms):
        arg = tau + m + 1.0
        if arg <= 0 and abs(arg - round(arg)) < 1e-12:
            continue  # Gamma pole: the term vanishes
        term = (-1.0) ** m * (0.5 * s) ** (tau + 2 * m) / (math.factorial(m) * math.gamma(arg))
        total += term
    return total


def series_i(tau: float, s: float, terms: int = 60) -> float:
    total = 0.0
    for m in range(terms):
        total += (0.5 * s) ** (tau + 2 * m) / (math.factorial(m) * math.gamma(tau + m + 1.0))
    return total


def bisect_j0_zero() -> float:
    """First zero of J_0 located by bisection on the ascending series."""
    lo, hi = 2.0, 3.0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if series_j(0.0, mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


J0_FIRST_ZERO = 2.4048255576957728


class TestGamma:
    def test_integer_and_half_integer(self):
        assert specfun.gamma(1.0) == pytest.approx(1.0, rel=1e-13)
        assert specfun.gamma(5.0) == pytest.approx(24.0, rel=1e-13)
        assert specfun.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)

    def test_domain(self):
        with pytest.raises(DomainError):
            specfun.gamma(0.0)
        with pytest.raises(DomainError):
            specfun.gamma(-1.5)


class TestBesselJ:
    @pytest.mark.parametrize("tau", [0.0, 0.5, 1.0, 2.5, 4.0, -0.5])
    @pytest.mark.parametrize("s", [0.3, 1.0, 3.0, 8.0])
    def test_matches_series_oracle(self, tau, s):
        assert specfun.bessel_j(tau, s) == pytest.approx(series_j(tau, s), rel=1e-12, abs=1e-13)

    def test_values_at_origin(self):
        assert specfun.bessel_j(0.0, 1e-14) == pytest.approx(1.0, abs=1e-12)
        assert specfun.bessel_j(1.0, 1e-14) == pytest.approx(0.0, abs=1e-12)

    def test_first_zero_against_bisection_oracle(self):
        oracle = bisect_j0_zero()
        assert oracle == pytest.approx(J0_FIRST_ZERO, abs=1e-11)
        assert abs(specfun.bessel_j(0.0, oracle)) < 1e-12

    def test_negative_integer_order_reflection(self):
        for s in (0.7, 2.0, 5.0):
            assert specfun.bessel_j(-1.0, s) == pytest.approx(-specfun.bessel_j(1.0, s), rel=1e-13)

    def test_rejects_negative_argument(self):
        with pytest.raises(DomainError):
            specfun.bessel_j(0.0, -1.0)


class TestBesselJPrime:
    def test_negative_slope_at_first_zero(self):
        assert specfun.bessel_j_prime(0.0, J0_FIRST_ZERO) < 0

    def test_small_argument_limit_of_j1(self):
        assert specfun.bessel_j_prime(1.0, 1e-9) == pytest.approx(0.5, abs=1e-9)

    def test_j0_prime_is_minus_j1(self):
        assert specfun.bessel_j_prime(0.0, 1.0) == pytest.approx(-specfun.bessel_j(1.0, 1.0), rel=1e-13)

    def test_matches_series_difference_quotient(self):
        tau, s, h = 1.5, 2.2, 1e-6
        fd = (series_j(tau, s + h) - series_j(tau, s - h)) / (2 * h)
        assert specfun.bessel_j_prime(tau, s) == pytest.approx(fd, rel=1e-8)


class TestBesselI:
    @pytest.mark.parametrize("tau", [0.0, 0.5, 2.0, 5.0])
    @pytest.mark.parametrize("s", [0.2, 1.0, 4.0, 12.0])
    def test_matches_series_oracle(self, tau, s):
        assert specfun.bessel_i(tau, s) == pytest.approx(series_i(tau, s), rel=1e-12)

    def test_values_at_origin(self):
        assert specfun.bessel_i(0.0, 1e-14) == pytest.approx(1.0, abs=1e-12)
        assert specfun.bessel_i(2.0, 1e-14) == pytest.approx(0.0, abs=1e-12)

    def test_positive(self):
        for tau in (0.0, 1.5, 7.0):
            for s in (0.1, 3.0, 25.0):
                assert specfun.bessel_i(tau, s) > 0

    def test_large_argument_asymptotics(self):
        s = 30.0
        asym = math.exp(s) / math.sqrt(2 * math.pi * s)
        assert specfun.bessel_i(0.0, s) == pytest.approx(asym, rel=0.02)

    def test_overflow_raises(self):
        with pytest.raises(OverflowError):
            specfun.bessel_i(0.0, 1e4)

    def test_scaled_variant_tracks_unscaled(self):
        for s in (0.5, 10.0, 100.0):
            assert specfun.bessel_i_scaled(1.0, s) == pytest.approx(
                specfun.bessel_i(1.0, s) * math.exp(-s), rel=1e-12
            )
        # the scaled form survives arguments where I itself overflows
        assert 0 < specfun.bessel_i_scaled(0.0, 1e4) < 1.0

    def test_derivative_recurrence(self):
        for s in (0.5, 2.0, 9.0):
            lhs = specfun.bessel_i_prime(0.0, s)
            assert lhs == pytest.approx(specfun.bessel_i(1.0, s), rel=1e-13)


class TestOrder:
    def test_from_dimension(self):
        assert specfun.Order.from_dimension(2).nu == 0.0
        assert specfun.Order.from_dimension(3).nu == 0.5
        assert specfun.Order.from_dimension(1).nu == -0.5

    def test_dimension_roundtrip(self):
        for n in (1, 2, 3, 7, 12):
            assert specfun.Order.from_dimension(n).dimension == n

    def test_non_half_integer_has_no_dimension(self):
        assert specfun.Order(0.3).dimension is None

    def test_invalid(self):
        with pytest.raises(DomainError):
            specfun.Order(-1.0)
        with pytest.raises(DomainError):
            specfun.Order.from_dimension(0)

    def test_accepted_by_functions(self):
        order = specfun.Order.from_dimension(4)
        assert specfun.bessel_j(order, 2.0) == pytest.approx(specfun.bessel_j(1.0, 2.0))
