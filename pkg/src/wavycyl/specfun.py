"""Real-order Bessel functions J, I, their derivatives, and the Gamma function.

Evaluation is delegated to scipy.special (cephes/boost backends), which holds
relative error below ~1e-13 over the ranges needed here (orders up to ~1001,
arguments up to the first Bessel zero plus a margin, i.e. ~1100).  Derivatives
are formed from the two-sided order recurrences, never by numerical
differentiation.  All functions are pure and safe for concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import special as _sp

from .errors import DomainError

__all__ = [
    "Order",
    "gamma",
    "bessel_j",
    "bessel_j_prime",
    "bessel_i",
    "bessel_i_prime",
    "bessel_i_scaled",
]


@dataclass(frozen=True)
class Order:
    """Half-integer order family parameter nu with its derived dimension.

    nu = (n - 2)/2 for the ambient dimension n of the ball cross-section.
    nu = -1/2 occurs only for n = 1, whose branch never evaluates Bessel
    functions.
    """

    nu: float

    def __post_init__(self) -> None:
        if self.nu < 0 and not math.isclose(self.nu, -0.5):
            raise DomainError(f"order nu must be >= 0 (or -1/2 for n=1), got {self.nu}")

    @classmethod
    def from_dimension(cls, n: int) -> "Order":
        if n < 1:
            raise DomainError(f"dimension must be >= 1, got {n}")
        return cls((n - 2) / 2.0)

    @property
    def dimension(self) -> int | None:
        """2*nu + 2 when nu is a half-integer, else None."""
        two_nu = 2.0 * self.nu
        if abs(two_nu - round(two_nu)) < 1e-12:
            return int(round(two_nu)) + 2
        return None


def _order_value(order: "Order | float") -> float:
    return order.nu if isinstance(order, Order) else float(order)


def gamma(x: float) -> float:
    """Gamma function for x > 0."""
    if not x > 0:
        raise DomainError(f"gamma requires x > 0, got {x}")
    return math.gamma(x)


def bessel_j(order: "Order | float", s: float) -> float:
    """Bessel function of the first kind J_tau(s), real order, s >= 0.

    Negative orders are supported (J_{-m} = (-1)^m J_m for integer m); they
    are needed for the combination s*J_{nu-1} + J_nu at small nu.
    """
    tau = _order_value(order)
    if s < 0:
        raise DomainError(f"bessel_j requires s >= 0, got {s}")
    return float(_sp.jv(tau, s))


def bessel_j_prime(order: "Order | float", s: float) -> float:
    """dJ_tau/ds via the recurrence 2 J_tau' = J_{tau-1} - J_{tau+1}."""
    tau = _order_value(order)
    if s < 0:
        raise DomainError(f"bessel_j_prime requires s >= 0, got {s}")
    return 0.5 * (float(_sp.jv(tau - 1.0, s)) - float(_sp.jv(tau + 1.0, s)))


def bessel_i(order: "Order | float", s: float) -> float:
    """Modified Bessel function of the first kind I_tau(s), s >= 0."""
    tau = _order_value(order)
    if s < 0:
        raise DomainError(f"bessel_i requires s >= 0, got {s}")
    value = float(_sp.iv(tau, s))
    if not math.isfinite(value):
        raise OverflowError(f"bessel_i({tau}, {s}) overflows double precision")
    return value


def bessel_i_prime(order: "Order | float", s: float) -> float:
    """dI_tau/ds via the recurrence 2 I_tau' = I_{tau-1} + I_{tau+1}."""
    tau = _order_value(order)
    if s < 0:
        raise DomainError(f"bessel_i_prime requires s >= 0, got {s}")
    value = 0.5 * (float(_sp.iv(tau - 1.0, s)) + float(_sp.iv(tau + 1.0, s)))
    if not math.isfinite(value):
        raise OverflowError(f"bessel_i_prime({tau}, {s}) overflows double precision")
    return value


def bessel_i_scaled(order: "Order | float", s: float) -> float:
    """exp(-s) * I_tau(s); stays representable where I_tau itself overflows.

    Ratios I_a(s)/I_b(s) formed from scaled values are exact, which keeps the
    spectrum formulas usable for arguments where e^s exceeds double range.
    """
    tau = _order_value(order)
    if s < 0:
        raise DomainError(f"bessel_i_scaled requires s >= 0, got {s}")
    return float(_sp.ive(tau, s))
