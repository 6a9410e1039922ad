"""Direct finite-difference realization of the Dirichlet-to-Neumann operator
on axisymmetric wavy cylinders; validates the closed-form spectrum end to end.

The domain {(x, t) : ||x|| < R(t)}, R(t) = 1 + eps cos(2 pi k t / T), is
mapped onto the fixed rectangle (rho, t) in [0, 1] x [0, T) via r = rho R(t).
The axisymmetric Laplacian u_rr + (n-1)/r u_r + u_tt transforms into

    [1/R^2 + rho^2 (R'/R)^2] U_rho_rho  -  2 rho (R'/R) U_rho_t  +  U_tt
    + [ (n-1)/(rho R^2) - rho (R''/R - 2 (R'/R)^2) ] U_rho

whose smallest Dirichlet eigenpair is found with second-order central
differences and inverse power iteration (direct sparse solve).  At the axis
the even extension U(-rho) = U(rho) applies and the (n-1)/r term contributes
(n-1) U_rr in the limit, giving the stencil coefficient n/R^2 * U_rho_rho;
for n = 1 the same even reflection expresses the symmetry of the strip.

The outward normal derivative on the boundary rho = 1 is
(U_rho / R) sqrt(1 + R'^2)  (the tangential tilt R' contributes through
u_t = -(R'/R) U_rho there, since U vanishes identically on the boundary).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sparse
from scipy.sparse.linalg import splu

from . import spectrum
from .errors import ConvergenceError, DomainError

__all__ = [
    "MeridianGrid",
    "EigenPair",
    "LinearizationReport",
    "first_eigenpair",
    "neumann_data",
    "linearized_coefficient",
    "verify_linearization",
]

_MAX_POWER_ITER = 500


@dataclass(eq=False)
class MeridianGrid:
    """Mapped (rho, t) rectangle discretizing one period of a wavy cylinder.

    The boundary radius and its first two derivatives are sampled at the Nt
    periodic points t_j = j T / Nt; rho carries Nr+1 points including the
    boundary rho = 1.
    """

    n: int
    T: float
    nr: int
    nt: int
    t: np.ndarray
    R: np.ndarray
    Rp: np.ndarray
    Rpp: np.ndarray

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"dimension must be >= 1, got {self.n}")
        if not self.T > 0:
            raise DomainError(f"T must be positive, got {self.T}")
        if self.nr < 16:
            raise DomainError(f"nr must be >= 16, got {self.nr}")
        if self.nt < 4 or self.nt % 2:
            raise DomainError(f"nt must be even and >= 4, got {self.nt}")
        if not np.all(self.R > 0):
            raise DomainError("boundary radius must stay positive")

    @property
    def h(self) -> float:
        return 1.0 / self.nr

    @property
    def k(self) -> float:
        return self.T / self.nt

    @classmethod
    def cosine(cls, n: int, T: float, eps: float, k_mode: int, nr: int, nt: int) -> "MeridianGrid":
        """Grid for the boundary perturbation R(t) = 1 + eps cos(2 pi k t/T)."""
        t = np.arange(nt) * (T / nt)
        w = 2.0 * math.pi * k_mode / T
        return cls(
            n=n,
            T=T,
            nr=nr,
            nt=nt,
            t=t,
            R=1.0 + eps * np.cos(w * t),
            Rp=-eps * w * np.sin(w * t),
            Rpp=-eps * w * w * np.cos(w * t),
        )

    @classmethod
    def straight(cls, n: int, T: float, nr: int, nt: int) -> "MeridianGrid":
        return cls.cosine(n, T, 0.0, 1, nr, nt)


@dataclass(eq=False)
class EigenPair:
    """Smallest Dirichlet eigenvalue with its grid eigenfunction u[i, j]
    (i radial without the zero boundary row, j periodic in t), normalized to
    unit discrete L^2 norm with the axisymmetric volume weight."""

    lam: float
    u: np.ndarray


def _assemble(grid: MeridianGrid) -> sparse.csc_matrix:
    """Sparse matrix of -Laplacian in mapped coordinates (row-major in t)."""
    n, nr, nt = grid.n, grid.nr, grid.nt
    h, k = grid.h, grid.k
    R, Rp, Rpp = grid.R, grid.Rp, grid.Rpp

    rows: list[np.ndarray] = []
    cols: list[np.ndarray] = []
    vals: list[np.ndarray] = []

    def idx(i: np.ndarray, j: np.ndarray) -> np.ndarray:
        return (j % nt) * nr + i

    jj = np.arange(nt)

    # axis row i = 0: even extension, limit stencil n/R^2 * 2(U1 - U0)/h^2
    c_axis = n / R**2 * 2.0 / h**2
    zero = np.zeros(nt, dtype=int)
    rows += [idx(zero, jj)] * 4
    cols += [idx(zero, jj), idx(zero + 1, jj), idx(zero, jj - 1), idx(zero, jj + 1)]
    vals += [c_axis + 2.0 / k**2, -c_axis, np.full(nt, -1.0 / k**2), np.full(nt, -1.0 / k**2)]

    # interior rows 1 <= i <= nr-1 (entries touching the boundary i = nr drop
    # out because U vanishes there)
    ii = np.arange(1, nr)
    rho = ii * h
    I, J = np.meshgrid(ii, jj, indexing="ij")
    P = rho[:, None]
    slope = (Rp / R)[None, :]
    arr = 1.0 / R[None, :] ** 2 + P**2 * slope**2
    art = -2.0 * P * slope
    ar = (n - 1) / (P * R[None, :] ** 2) - P * (Rpp[None, :] / R[None, :] - 2.0 * slope**2)

    def add(di: int, dj: int, value: np.ndarray) -> None:
        keep = I + di <= nr - 1
        rows.append(idx(I, J)[keep])
        cols.append(idx(I + di, J + dj)[keep])
        vals.append(np.broadcast_to(value, I.shape)[keep])

    add(0, 0, arr * 2.0 / h**2 + 2.0 / k**2)
    add(-1, 0, -arr / h**2 + ar / (2.0 * h))
    add(1, 0, -arr / h**2 - ar / (2.0 * h))
    add(0, -1, np.full(I.shape, -1.0 / k**2))
    add(0, 1, np.full(I.shape, -1.0 / k**2))
    for di, dj, sgn in ((1, 1, 1.0), (1, -1, -1.0), (-1, 1, -1.0), (-1, -1, 1.0)):
        add(di, dj, -art * sgn / (4.0 * h * k))

    matrix = sparse.coo_matrix(
        (np.concatenate([np.ravel(v) for v in vals]),
         (np.concatenate([np.ravel(r) for r in rows]),
          np.concatenate([np.ravel(c) for c in cols]))),
        shape=(nr * nt, nr * nt),
    )
    return matrix.tocsc()


def _volume_weights(grid: MeridianGrid) -> np.ndarray:
    """Discrete volume element (rho R)^(n-1) R h k per node, trapezoidal at
    the axis (only relevant for n = 1, where r^(n-1) does not vanish)."""
    rho = np.arange(grid.nr) * grid.h
    w = (np.outer(rho, grid.R)) ** (grid.n - 1) * grid.R[None, :] * grid.h * grid.k
    if grid.n == 1:
        w[0, :] *= 0.5
    return w


def normalize(grid: MeridianGrid, u: np.ndarray) -> np.ndarray:
    """Scale u to unit weighted L^2 norm, oriented positive in the interior."""
    w = _volume_weights(grid)
    nrm = math.sqrt(float((u * u * w).sum()))
    if nrm == 0.0:
        raise DomainError("cannot normalize the zero grid function")
    out = u / nrm
    if out.sum() < 0:
        out = -out
    return out


def first_eigenpair(grid: MeridianGrid, tol: float = 1e-10) -> EigenPair:
    """Smallest Dirichlet eigenpair by inverse power iteration.

    Deterministic start 1 - rho^2 (positive, t-independent); the factorized
    operator is reused across iterations, and iteration stops when the
    eigenvalue estimate changes by less than tol.
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    matrix = _assemble(grid)
    lu = splu(matrix)
    rho = np.arange(grid.nr) * grid.h
    x = np.tile(1.0 - rho**2, grid.nt)
    lam_old = math.inf
    lam = math.inf
    for _ in range(_MAX_POWER_ITER):
        y = lu.solve(x)
        lam = float(x @ x) / float(x @ y)
        y /= float(np.linalg.norm(y))
        x = y
        if abs(lam - lam_old) < tol:
            break
        lam_old = lam
    else:
        raise ConvergenceError(
            f"inverse power iteration stagnated after {_MAX_POWER_ITER} iterations"
        )
    if lam <= 0:
        raise ConvergenceError(f"computed eigenvalue is not positive: {lam}")
    u = normalize(grid, x.reshape(grid.nt, grid.nr).T)
    return EigenPair(lam=lam, u=u)


def _raw_normal_derivative(grid: MeridianGrid, pair: EigenPair) -> np.ndarray:
    """Outward normal derivative along rho = 1: one-sided second-order U_rho
    (boundary value is identically zero), mapped by (1/R) sqrt(1 + R'^2)."""
    u = pair.u
    u_rho = (-4.0 * u[-1, :] + u[-2, :]) / (2.0 * grid.h)
    return u_rho / grid.R * np.sqrt(1.0 + grid.Rp**2)


def _boundary_weights(grid: MeridianGrid) -> np.ndarray:
    """Boundary volume element R^(n-1) sqrt(1 + R'^2) per periodic t node."""
    return grid.R ** (grid.n - 1) * np.sqrt(1.0 + grid.Rp**2)


def neumann_data(grid: MeridianGrid, pair: EigenPair) -> list[tuple[float, float]]:
    """Mean-removed outward normal derivative along the boundary: the value
    of the Dirichlet-to-Neumann operator at this boundary shape."""
    dn = _raw_normal_derivative(grid, pair)
    wb = _boundary_weights(grid)
    mean = float((dn * wb).sum() / wb.sum())
    return list(zip(grid.t.tolist(), (dn - mean).tolist()))


def _mode_coefficients(grid: MeridianGrid, values: np.ndarray, modes: range) -> dict[int, float]:
    """Cosine-mode coefficients of a periodic boundary function by
    trapezoidal quadrature (exact on the uniform periodic grid)."""
    out = {}
    for m in modes:
        c = 2.0 / grid.nt * float((values * np.cos(2.0 * math.pi * m * grid.t / grid.T)).sum())
        if m == 0:
            c *= 0.5
        out[m] = c
    return out


@dataclass(frozen=True)
class LinearizationReport:
    """Calibrated PDE estimate of one sigma_k(T) with diagnostics."""

    n: int
    k: int
    T: float
    eps: float
    nr: int
    nt: int
    lam_straight: float
    lam_perturbed: float
    sigma_estimate: float
    mode_coefficients: dict[int, float]
    closed_form: float
    rel_error: float | None  # None when the closed form vanishes exactly
    calibration: float


def linearized_coefficient(
    n: int, k: int, T: float, eps: float, nr: int, nt: int
) -> float:
    """PDE estimate of sigma_k(T): perturb the boundary by eps cos(2 pi k t/T),
    apply the Dirichlet-to-Neumann operator, extract the mode-k cosine
    coefficient, and divide by eps.  Approximates sigma_k(T) up to
    O(eps) + O(h^2)."""
    return verify_linearization(n, k, T, eps, nr, nt).sigma_estimate


def verify_linearization(
    n: int, k: int, T: float, eps: float, nr: int, nt: int, max_mode: int | None = None
) -> LinearizationReport:
    """Full linearization check with per-mode diagnostics.

    The discrete eigenfunction carries the unit-L^2 grid normalization, which
    differs from the radial normalization behind the closed form only by a
    scale fixed at the straight cylinder; the estimate is therefore calibrated
    by the ratio of phi1'(1) to the discrete straight-cylinder normal
    derivative computed on the same grid.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if not 1e-4 <= eps <= 1e-2:
        raise DomainError(f"eps must lie in [1e-4, 1e-2], got {eps}")
    if nt < 16 * k:
        raise DomainError(f"nt must be >= 16 k to resolve mode {k}, got {nt}")

    straight = MeridianGrid.straight(n, T, nr, nt)
    base_pair = first_eigenpair(straight)
    base_raw = _raw_normal_derivative(straight, base_pair)
    wb = _boundary_weights(straight)
    base_level = float((base_raw * wb).sum() / wb.sum())
    if base_level == 0.0:
        raise ConvergenceError("straight-cylinder normal derivative vanished")
    calibration = spectrum.eigen_data(n).phi1_prime_at_1 / base_level

    grid = MeridianGrid.cosine(n, T, eps, k, nr, nt)
    pair = first_eigenpair(grid)
    f_values = np.array([v for _, v in neumann_data(grid, pair)])
    modes = range(0, (max_mode if max_mode is not None else max(5, 2 * k)) + 1)
    coefs = {m: calibration * c / eps for m, c in _mode_coefficients(grid, f_values, modes).items()}

    estimate = coefs[k]
    closed = spectrum.sigma_k(n, k, T)
    rel = abs(estimate - closed) / abs(closed) if closed != 0 else None
    return LinearizationReport(
        n=n,
        k=k,
        T=T,
        eps=eps,
        nr=nr,
        nt=nt,
        lam_straight=base_pair.lam,
        lam_perturbed=pair.lam,
        sigma_estimate=estimate,
        mode_coefficients=coefs,
        closed_form=closed,
        rel_error=rel,
        calibration=calibration,
    )
