"""Command-line client of the wavycyl service.

Every subcommand builds a JSON request and sends it through the HTTP layer:
against a remote server when --url is given, otherwise against the in-process
ASGI application.  Results render as CSV (default) or JSON with identical
field names and ordering; numbers carry 10 significant digits.

Exit codes: 0 success, 1 numerical failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import asyncio
import csv
import io
import json
import sys
from typing import Any

import httpx

USAGE_EXIT = 2
NUMERICAL_EXIT = 1

_CLIENT_TIMEOUT = 3600.0


def _request(path: str, payload: dict, url: str | None) -> httpx.Response:
    if url is not None:
        return httpx.post(url.rstrip("/") + path, json=payload, timeout=_CLIENT_TIMEOUT)

    from .service import create_app

    transport = httpx.ASGITransport(app=create_app())

    async def go() -> httpx.Response:
        async with httpx.AsyncClient(
            transport=transport, base_url="http://wavycyl.local", timeout=_CLIENT_TIMEOUT
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _fmt(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, float):
        return float(f"{value:.10g}")
    return value


def _render(records: list[dict], fmt: str) -> str:
    # columns that are absent in every record (e.g. oracle fields without
    # --oracle) are dropped; partially filled columns stay, blank where None
    if records:
        keys = [k for k in records[0] if any(rec.get(k) is not None for rec in records)]
        records = [{k: rec.get(k) for k in keys} for rec in records]
    if fmt == "json":
        rounded = [{k: _json_value(v) for k, v in rec.items()} for rec in records]
        return json.dumps(rounded, indent=2) + "\n"
    if not records:
        return "\n"
    header = list(records[0].keys())
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for rec in records:
        writer.writerow(_fmt(rec[key]) for key in header)
    return buffer.getvalue()


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _parse_two_nu(spec: str) -> list[int]:
    values: list[int] = []
    for token in spec.split(","):
        token = token.strip()
        if ".." in token:
            lo_s, hi_s = token.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if hi < lo:
                raise ValueError(f"descending range {token!r}")
            values.extend(range(lo, hi + 1))
        elif token:
            values.append(int(token))
    if not values:
        raise ValueError(f"no values in {spec!r}")
    return values


def _parse_t_range(spec: str) -> tuple[float, float]:
    if ":" in spec:
        lo_s, hi_s = spec.split(":", 1)
        return float(lo_s), float(hi_s)
    value = float(spec)
    return value, value


def _run(path: str, payload: dict, args: argparse.Namespace, to_records) -> int:
    try:
        response = _request(path, payload, args.url)
    except httpx.HTTPError as exc:
        print(f"error: service unreachable: {exc}", file=sys.stderr)
        return NUMERICAL_EXIT
    if response.status_code >= 500:
        print(f"error: {response.json().get('detail', response.text)}", file=sys.stderr)
        return NUMERICAL_EXIT
    if response.status_code >= 400:
        print(f"usage error: {response.json().get('detail', response.text)}", file=sys.stderr)
        return USAGE_EXIT
    body = response.json()
    _emit(_render(to_records(body), args.format), args.out)
    if path == "/check" and not body["ok"]:
        return NUMERICAL_EXIT
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wavycyl",
        description="Bifurcation structure of extremal domains on perturbed cylinders.",
    )
    parser.add_argument("--url", default=None, help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default="-", help="output path, or - for stdout")

    p = sub.add_parser("table", help="bifurcation periods for a list/range of 2*nu")
    p.add_argument("--two-nu", required=True, help="integer list/range, e.g. 0..7 or 0,5,40")
    common(p)

    p = sub.add_parser("sigma", help="sample sigma_1(T), optionally with the ODE oracle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--T", required=True, help="range start:end (inclusive) or a single value")
    p.add_argument("--samples", type=int, default=11)
    p.add_argument("--oracle", action="store_true", help="run the shooting oracle side by side")
    common(p)

    p = sub.add_parser("profile", help="first-order bifurcating boundary profile")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--periods", type=int, default=1)
    p.add_argument("--samples", type=int, default=64, help="samples per period")
    common(p)

    p = sub.add_parser("delaunay", help="one period of a Delaunay generating curve")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--samples", type=int, default=256)
    common(p)

    p = sub.add_parser("verify-pde", help="PDE estimate of sigma_k vs the closed form")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--T", type=float, default=None, help="period (default: the bifurcation period)")
    p.add_argument("--eps", type=float, default=1e-3)
    p.add_argument("--nr", type=int, default=96)
    p.add_argument("--nt", type=int, default=96)
    common(p)

    p = sub.add_parser("check", help="run a property suite")
    p.add_argument(
        "--suite",
        default="all",
        choices=("all", "specfun", "spectrum", "bifurcation", "delaunay", "pde"),
    )
    common(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return 0

    if args.command == "table":
        try:
            two_nu = _parse_two_nu(args.two_nu)
        except ValueError as exc:
            parser.error(str(exc))
        return _run("/table", {"two_nu": two_nu}, args, lambda body: body["rows"])

    if args.command == "sigma":
        try:
            t_start, t_end = _parse_t_range(args.T)
        except ValueError as exc:
            parser.error(str(exc))
        payload = {
            "n": args.n,
            "t_start": t_start,
            "t_end": t_end,
            "samples": args.samples,
            "oracle": args.oracle,
        }
        return _run("/sigma", payload, args, lambda body: body["rows"])

    if args.command == "profile":
        payload = {
            "n": args.n,
            "s": args.s,
            "periods": args.periods,
            "samples_per_period": args.samples,
        }
        return _run("/profile", payload, args, lambda body: body["rows"])

    if args.command == "delaunay":
        payload = {"sigma": args.sigma, "samples": args.samples}
        return _run("/delaunay", payload, args, lambda body: body["rows"])

    if args.command == "verify-pde":
        payload = {
            "n": args.n,
            "k": args.k,
            "eps": args.eps,
            "nr": args.nr,
            "nt": args.nt,
        }
        if args.T is not None:
            payload["T"] = args.T
        fields = (
            "n", "k", "T", "eps", "nr", "nt",
            "lam_straight", "lam_perturbed", "closed_form", "pde_estimate", "rel_error",
        )
        return _run(
            "/verify-pde", payload, args, lambda body: [{f: body[f] for f in fields}]
        )

    if args.command == "check":
        return _run("/check", {"suite": args.suite}, args, lambda body: body["results"])

    parser.error(f"unknown command {args.command!r}")
    return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
