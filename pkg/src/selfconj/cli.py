"""Command-line front end: check suites and spinor tables.

Two subcommands.  `run` executes any subset of the check suites over a
configurable momentum grid and prints a text or JSON report; the exit code
is 0 when nothing failed, 1 on any check failure, 2 on a usage error.
`tabulate` prints one fixed-precision component table (12 significant
digits, real and imaginary columns per component).  Neither consults the
environment, so identical invocations give byte-identical output.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import checks, halfspin, spin1
from .halfspin import DN, UP, FourMomentum, PhaseConvention

_H3 = {+1: "up", 0: "lng", -1: "dn"}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="selfconj",
        description="verify conjugate-spinor identities and tabulate the objects",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run check suites over a momentum grid")
    run.add_argument(
        "--mass",
        type=float,
        action="append",
        help="grid mass, repeatable (default 1.0)",
    )
    run.add_argument(
        "--grid",
        default="3x6",
        help="momentum grid as MAGNITUDESxDIRECTIONS (default 3x6)",
    )
    run.add_argument("--tol", type=float, default=1e-12)
    run.add_argument("--theta1", type=float, default=0.0)
    run.add_argument("--theta2", type=float, default=0.0)
    run.add_argument("--thetac", type=float, default=0.0)
    run.add_argument("--norm", type=float, default=None)
    run.add_argument(
        "--suite",
        action="append",
        choices=list(checks.KNOWN_SUITES),
        help="suite to run, repeatable (default: all)",
    )
    run.add_argument("--format", choices=("text", "json"), default="text")
    run.add_argument("--out", default=None, help="write the report to a file")

    tab = sub.add_parser("tabulate", help="print one spinor component table")
    tab.add_argument("--what", choices=("lambda", "rho", "dirac", "mr"), default="lambda")
    tab.add_argument("--momentum", default="0,0,0", help='cartesian "px,py,pz"')
    tab.add_argument("--mass", type=float, default=1.0)
    tab.add_argument("--theta1", type=float, default=0.0)
    tab.add_argument("--theta2", type=float, default=0.0)
    tab.add_argument("--norm", type=float, default=None)
    tab.add_argument("--out", default=None)
    return parser


def _parse_grid(text: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    if len(parts) != 2:
        raise ValueError("grid must look like 3x6")
    return int(parts[0]), int(parts[1])


def _parse_momentum(text: str, mass: float) -> FourMomentum:
    parts = [float(x) for x in text.split(",")]
    if len(parts) != 3:
        raise ValueError('momentum must be "px,py,pz"')
    pvec = np.array(parts)
    pmag = float(np.linalg.norm(pvec))
    if pmag == 0.0:
        return FourMomentum(mass, 0.0)
    theta = math.acos(min(max(pvec[2] / pmag, -1.0), 1.0))
    phi = math.atan2(pvec[1], pvec[0])
    return FourMomentum(mass, pmag, theta, phi)


def _rows_to_table(title: str, rows: list[tuple[str, np.ndarray]]) -> str:
    ncomp = len(rows[0][1])
    header = ["spinor"] + [f"c{k + 1}.{part}" for k in range(ncomp) for part in ("re", "im")]
    body = []
    for name, vec in rows:
        cells = [name]
        for z in vec:
            # normalize -0.0 so the tables read cleanly
            cells.append(f"{z.real if z.real != 0 else 0.0:.12g}")
            cells.append(f"{z.imag if z.imag != 0 else 0.0:.12g}")
        body.append(cells)
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
    lines = [title]
    lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for cells in body:
        lines.append("  ".join(c.ljust(w) for c, w in zip(cells, widths)))
    return "\n".join(lines) + "\n"


def _tabulate(args) -> str:
    p = _parse_momentum(args.momentum, args.mass)
    conv = PhaseConvention(args.theta1, args.theta2, 0.0, args.norm)
    head = (
        f"{args.what} at mass={args.mass:.12g} momentum=({args.momentum}) "
        f"theta1={args.theta1:.12g} theta2={args.theta2:.12g}"
    )
    if args.what in ("lambda", "rho", "dirac"):
        b = halfspin.build_spinor_basis(p, conv)
        if args.what == "lambda":
            rows = [
                ("lam_s_up", b.lam_s[UP]),
                ("lam_s_dn", b.lam_s[DN]),
                ("lam_a_up", b.lam_a[UP]),
                ("lam_a_dn", b.lam_a[DN]),
            ]
        elif args.what == "rho":
            rows = [
                ("rho_s_up", b.rho_s[UP]),
                ("rho_s_dn", b.rho_s[DN]),
                ("rho_a_up", b.rho_a[UP]),
                ("rho_a_dn", b.rho_a[DN]),
            ]
        else:
            rows = [
                ("u_up", b.dirac_u(UP)),
                ("u_dn", b.dirac_u(DN)),
                ("v_up", b.dirac_v(UP)),
                ("v_dn", b.dirac_v(DN)),
            ]
    else:
        rows = []
        for h in spin1.HELICITIES:
            s = spin1.mr_spinor(p, h)
            tag = _H3[h]
            rows.append((f"u_{tag}", s.u))
            rows.append((f"v_{tag}", s.v))
            rows.append((f"u_re_{tag}", s.u_re.astype(complex)))
            rows.append((f"u_im_{tag}", s.u_im.astype(complex)))
            rows.append((f"v_re_{tag}", s.v_re.astype(complex)))
            rows.append((f"v_im_{tag}", s.v_im.astype(complex)))
    return _rows_to_table(head, rows)


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command == "run":
            n_mag, n_dir = _parse_grid(args.grid)
            cfg = checks.SuiteConfig(
                masses=tuple(args.mass or (1.0,)),
                n_magnitudes=n_mag,
                n_directions=n_dir,
                tolerance=args.tol,
                theta1=args.theta1,
                theta2=args.theta2,
                thetac=args.thetac,
                norm=args.norm,
                suites=tuple(args.suite) if args.suite else checks.KNOWN_SUITES,
            )
        else:
            report = _tabulate(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"selfconj: {exc}", file=sys.stderr)
        return 2

    if args.command == "tabulate":
        _emit(report, args.out)
        return 0

    results = checks.run_checks(cfg)
    render = checks.render_json if args.format == "json" else checks.render_text
    _emit(render(cfg, results), args.out)
    return 1 if any(r.status == "fail" for r in results) else 0


if __name__ == "__main__":
    raise SystemExit(main())
