"""FastAPI service exposing the numerical core.

Domain violations map to HTTP 422, iterative failures to HTTP 500 with a
diagnostic message; everything else is a plain JSON response.
"""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__, bifurcation, checks, delaunay, spectrum
from .. import pdecheck as pde
from ..errors import ConvergenceError, DomainError
from . import schemas


def create_app() -> FastAPI:
    app = FastAPI(
        title="wavycyl",
        version=__version__,
        description=(
            "Bifurcation structure of extremal domains on perturbed cylinders: "
            "linearized spectrum, bifurcation periods, domain profiles, and "
            "independent numerical verification layers."
        ),
    )

    @app.exception_handler(DomainError)
    async def domain_error(request: Request, exc: DomainError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(ConvergenceError)
    async def convergence_error(request: Request, exc: ConvergenceError) -> JSONResponse:
        return JSONResponse(status_code=500, content={"detail": str(exc)})

    @app.exception_handler(OverflowError)
    async def overflow_error(request: Request, exc: OverflowError) -> JSONResponse:
        return JSONResponse(status_code=500, content={"detail": str(exc)})

    @app.get("/health", response_model=schemas.HealthResponse)
    def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.post("/table", response_model=schemas.TableResponse)
    def table(req: schemas.TableRequest) -> schemas.TableResponse:
        rows = []
        for two_nu, point in bifurcation.table(req.two_nu):
            rows.append(
                schemas.TableRow(
                    two_nu=two_nu,
                    n=point.n,
                    j_nu=point.j_nu,
                    rho_nu=point.rho_nu,
                    t_nu=point.t_nu,
                    t_lower=point.t_lower,
                    t_upper=point.t_upper,
                )
            )
        return schemas.TableResponse(rows=rows)

    @app.post("/sigma", response_model=schemas.SigmaResponse)
    def sigma(req: schemas.SigmaRequest) -> schemas.SigmaResponse:
        if req.t_end < req.t_start:
            raise DomainError(f"empty range [{req.t_start}, {req.t_end}]")
        if req.samples == 1 or req.t_end == req.t_start:
            grid = [req.t_start]
        else:
            grid = list(np.linspace(req.t_start, req.t_end, req.samples))
        rows = []
        for T in grid:
            value = spectrum.sigma1(req.n, float(T))
            if req.oracle:
                shot = spectrum.sigma1_via_ode(req.n, float(T), steps=req.ode_steps)
                rows.append(
                    schemas.SigmaRow(
                        T=float(T), sigma1=value, sigma1_ode=shot, abs_diff=abs(value - shot)
                    )
                )
            else:
                rows.append(schemas.SigmaRow(T=float(T), sigma1=value))
        return schemas.SigmaResponse(n=req.n, rows=rows)

    @app.post("/profile", response_model=schemas.ProfileResponse)
    def profile(req: schemas.ProfileRequest) -> schemas.ProfileResponse:
        prof = bifurcation.profile(req.n, req.s, req.periods, req.samples_per_period)
        return schemas.ProfileResponse(
            n=prof.n,
            s=prof.s,
            period=prof.period,
            rows=[schemas.ProfileRow(t=t, radius=r) for t, r in prof.samples],
        )

    @app.post("/delaunay", response_model=schemas.DelaunayResponse)
    def delaunay_curve(req: schemas.DelaunayRequest) -> schemas.DelaunayResponse:
        prof = delaunay.delaunay_profile(req.sigma, req.samples)
        return schemas.DelaunayResponse(
            sigma=prof.sigma,
            y_min=prof.y_min,
            y_max=prof.y_max,
            period=prof.period,
            rows=[schemas.DelaunayRow(t=t, y=y, z=z) for t, y, z in prof.samples],
        )

    @app.post("/verify-pde", response_model=schemas.VerifyPdeResponse)
    def verify_pde(req: schemas.VerifyPdeRequest) -> schemas.VerifyPdeResponse:
        T = req.T if req.T is not None else bifurcation.t_nu(req.n).t_nu
        report = pde.verify_linearization(req.n, req.k, T, req.eps, req.nr, req.nt)
        return schemas.VerifyPdeResponse(
            n=report.n,
            k=report.k,
            T=report.T,
            eps=report.eps,
            nr=report.nr,
            nt=report.nt,
            lam_straight=report.lam_straight,
            lam_perturbed=report.lam_perturbed,
            closed_form=report.closed_form,
            pde_estimate=report.sigma_estimate,
            rel_error=report.rel_error,
            mode_coefficients=report.mode_coefficients,
        )

    @app.post("/check", response_model=schemas.CheckResponse)
    def check(req: schemas.CheckRequest) -> schemas.CheckResponse:
        results = [
            schemas.CheckRow(suite=r.suite, name=r.name, passed=r.passed, detail=r.detail)
            for r in checks.run_suite(req.suite)
        ]
        return schemas.CheckResponse(ok=all(r.passed for r in results), results=results)

    return app


app = create_app()
