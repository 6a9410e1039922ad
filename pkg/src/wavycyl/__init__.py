"""Bifurcation structure of extremal domains on perturbed cylinders.

Core modules:

- specfun:     real-order Bessel/Gamma special functions
- analysis:    root finding, quadrature, Bessel zeros, RK4
- spectrum:    closed-form sigma_k(T) of the linearized operator + ODE oracle
- bifurcation: bifurcation periods T_nu, bounds, table, domain profiles
- delaunay:    constant-mean-curvature surfaces of revolution
- pdecheck:    finite-difference Dirichlet-to-Neumann validation layer
- service:     FastAPI app wrapping the core
- cli:         thin command-line client of the service
"""

__version__ = "0.1.0"

__all__ = ["__version__"]
