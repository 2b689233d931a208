"""``goldenextremal`` command-line front end.

Exit codes: 0 success, 1 usage error, 2 non-convergence, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Sequence

from . import __version__
from . import extremal as ex
from . import geometry as geo
from .construct import construct_T2
from .exactphi import PHI, mpf_to_decimal, phi_pow_decompose, qphi_to_float
from .goldenseq import tn_area, tn_area_bounds_check, tn_entry, tn_limit
from .render import FIGURES, RenderSpec, min_area_triangle, render_svg
from .search import ConvergenceError

EXIT_OK, EXIT_USAGE, EXIT_NONCONVERGED, EXIT_VERIFY = 0, 1, 2, 3
N_MAX_LIMIT = 500
VERIFY_N = 100


class UsageError(Exception):
    pass


class NonConvergence(Exception):
    pass


@dataclass
class ResultDocument:
    """Machine-readable record of one command run.

    Floats live in ``outputs`` as strings so the digit count survives a JSON
    round trip.
    """

    command: str
    parameters: dict[str, Any]
    outputs: dict[str, Any]
    tool_version: str = __version__
    lines: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ResultDocument:
        return cls(**json.loads(text))


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _f(x: float, digits: int = 10) -> str:
    return f"{x:.{digits}f}"


def _g(x: float) -> str:
    return f"{x:.3e}"


# ---------------------------------------------------------------- solve


def _check_stationarity(value: float, what: str) -> None:
    if not value <= ex.STATIONARITY_TOL:
        raise NonConvergence(f"{what}: stationarity residual {value:.3e} exceeds {ex.STATIONARITY_TOL:.0e}")


def _solve_area(args: argparse.Namespace) -> ResultDocument:
    tol = 1e-9 if args.tol is None else args.tol
    exact = ex.solve_min_area_analytic()
    num = ex.solve_min_area_numeric(tol=tol, grid=args.grid)
    _check_stationarity(float(num.certificate["stationarity"]), "area")
    ab, ac, bc = exact.sides
    gap = abs(num.area_float - exact.area_float)
    arg_gap = max(abs(num.sides_float[0] - float(PHI)), abs(num.sides_float[1] - float(PHI * PHI)))
    outputs = {
        "ab_exact": str(ab),
        "ac_exact": str(ac),
        "bc_exact": str(bc),
        "area_exact": str(exact.area),
        "area_analytic": qphi_to_float(exact.area, 10),
        "area_numeric": _f(num.area_float),
        "ab_numeric": _f(num.sides_float[0]),
        "ac_numeric": _f(num.sides_float[1]),
        "area_gap": _g(gap),
        "argmin_gap": _g(arg_gap),
        "stationarity": _g(float(num.certificate["stationarity"])),
        "certificate_ok": all(exact.certificate.values()),
    }
    lines = [
        "analytic optimum: AB = phi, AC = phi^2, right angle at A",
        f"AB = {outputs['ab_exact']}",
        f"AC = {outputs['ac_exact']}",
        f"BC = {outputs['bc_exact']}",
        f"area = {outputs['area_exact']}",
        f"phi^3/2 = {outputs['area_analytic']}",
        f"exact certificate: {'OK' if outputs['certificate_ok'] else 'FAIL'}",
        f"numeric: AB = {outputs['ab_numeric']}, AC = {outputs['ac_numeric']}, area = {outputs['area_numeric']}",
        f"agreement: |area gap| = {outputs['area_gap']}, |argmin gap| = {outputs['argmin_gap']}",
        f"stationarity residual = {outputs['stationarity']}",
    ]
    return ResultDocument("solve area", {"tol": tol, "grid": args.grid}, outputs, lines=lines)


def _perimeter_block(sol: ex.PerimeterSolution, prefix: str = "") -> tuple[dict[str, str], list[str]]:
    ab, ac, bc = sol.sides
    _check_stationarity(sol.stationarity, sol.constraint_set)
    out = {
        f"{prefix}constraint_set": sol.constraint_set,
        f"{prefix}region": sol.region,
        f"{prefix}perimeter": _f(sol.perimeter),
        f"{prefix}ab": _f(ab),
        f"{prefix}ac": _f(ac),
        f"{prefix}bc": _f(bc),
        f"{prefix}beta_deg": _f(math.degrees(sol.angles.beta), 8),
        f"{prefix}gamma_deg": _f(math.degrees(sol.angles.gamma), 8),
        f"{prefix}stationarity": _g(sol.stationarity),
        f"{prefix}constraint_residual": _g(sol.constraint_residual),
        f"{prefix}diameter_contained": str(sol.feasibility.diameter_contained).lower(),
        f"{prefix}tangency_on_segment": ",".join(str(t).lower() for t in sol.feasibility.tangency_on_segment),
        f"{prefix}angle_class": sol.feasibility.angle_class,
    }
    lines = [
        f"[{sol.constraint_set}] region = {sol.region}",
        f"perimeter = {out[prefix + 'perimeter']}",
        f"AB = {out[prefix + 'ab']}, AC = {out[prefix + 'ac']}, BC = {out[prefix + 'bc']}",
        f"beta = {out[prefix + 'beta_deg']} deg, gamma = {out[prefix + 'gamma_deg']} deg",
        f"stationarity residual = {out[prefix + 'stationarity']}, constraint residual = {out[prefix + 'constraint_residual']}",
        f"diameter contained: {out[prefix + 'diameter_contained']}, tangency on segments: {out[prefix + 'tangency_on_segment']}",
    ]
    return out, lines


def _solve_perimeter(args: argparse.Namespace) -> ResultDocument:
    tol = 1e-9 if args.tol is None else args.tol
    params = {
        "tol": tol,
        "grid": args.grid,
        "strict_diameter": args.strict_diameter,
        "both_constraint_readings": args.both_constraint_readings,
    }
    if args.problem == "perimeter-no-triangle":
        sols = [ex.solve_min_perimeter_no_triangle(tol, args.grid, args.strict_diameter)]
    else:
        sols = [ex.solve_min_perimeter_nonacute(tol, args.grid, False, args.strict_diameter)]
        if args.both_constraint_readings:
            sols.append(ex.solve_min_perimeter_nonacute(tol, args.grid, True, args.strict_diameter))
    outputs: dict[str, str] = {}
    lines: list[str] = []
    for i, sol in enumerate(sols):
        out, ls = _perimeter_block(sol, prefix="" if i == 0 else "alt_")
        outputs.update(out)
        lines.extend(ls)
    outputs["min_area_triangle_perimeter"] = _f(geo.perimeter(min_area_triangle()))
    lines.append(f"perimeter of the smallest-area triangle = {outputs['min_area_triangle_perimeter']}")
    return ResultDocument(f"solve {args.problem}", params, outputs, lines=lines)


def _solve_isosceles(args: argparse.Namespace) -> ResultDocument:
    tol = 1e-10 if args.tol is None else args.tol
    sol = ex.solve_min_perimeter_isosceles(tol=tol, grid=args.grid)
    _check_stationarity(sol.stationarity, "isosceles")
    p = sol.params
    outputs = {
        "perimeter": _f(sol.perimeter),
        "beta_deg": _f(math.degrees(p["beta"]), 8),
        "h": _f(p["h"]),
        "v": _f(p["v"]),
        "s": _f(p["s"]),
        "v_over_h": _f(p["v_over_h"], 8),
        "s_over_h": _f(p["s_over_h"], 8),
        "stationarity": _g(sol.stationarity),
    }
    lines = [
        f"perimeter = {outputs['perimeter']}",
        f"base angle = {outputs['beta_deg']} deg",
        f"half-triangle: h = {outputs['h']}, v = {outputs['v']}, s = {outputs['s']}",
        f"v/h = {outputs['v_over_h']} (√φ)",
        f"s/h = {outputs['s_over_h']} (φ)",
        f"stationarity residual = {outputs['stationarity']}",
    ]
    return ResultDocument("solve perimeter-isosceles", {"tol": tol, "grid": args.grid}, outputs, lines=lines)


def cmd_solve(args: argparse.Namespace) -> ResultDocument:
    if args.tol is not None:
        try:
            ex._check_tol(args.tol)
        except ValueError as e:
            raise UsageError(str(e)) from None
    if args.grid < 8:
        raise UsageError("--grid must be at least 8")
    if args.problem == "area":
        return _solve_area(args)
    if args.problem == "perimeter-isosceles":
        return _solve_isosceles(args)
    return _solve_perimeter(args)


# ---------------------------------------------------------------- sequence

SEQ_COLUMNS = ("n", "F_n", "F_n+1", "sides", "area_exact", "area")


def sequence_rows(n_max: int) -> list[dict[str, str]]:
    if not 1 <= n_max <= N_MAX_LIMIT:
        raise UsageError(f"--n-max must be in 1..{N_MAX_LIMIT}")
    rows = []
    for n in range(1, n_max + 1):
        e = tn_entry(n)
        rows.append(
            {
                "n": str(n),
                "F_n": str(e.fib_n),
                "F_n+1": str(e.fib_n1),
                "sides": ", ".join(e.side_labels()),
                "area_exact": str(e.area),
                "area": e.area.to_decimal(12),
            }
        )
    lim = tn_limit(range(1, 2))
    rows.append(
        {
            "n": "limit",
            "F_n": "",
            "F_n+1": "",
            "sides": ", ".join(lim.side_labels()),
            "area_exact": str(lim.area),
            "area": mpf_to_decimal(lim.area.to_mpf(40), 12),
        }
    )
    return rows


def _table(rows: Sequence[dict[str, str]], columns: Sequence[str]) -> list[str]:
    widths = {c: max(len(c), *(len(r[c]) for r in rows)) for c in columns}
    head = "  ".join(c.ljust(widths[c]) for c in columns).rstrip()
    rule = "  ".join("-" * widths[c] for c in columns)
    body = ["  ".join(r[c].ljust(widths[c]) for c in columns).rstrip() for r in rows]
    return [head, rule, *body]


def cmd_sequence(args: argparse.Namespace) -> ResultDocument:
    rows = sequence_rows(args.n_max)
    return ResultDocument(
        "sequence", {"n_max": args.n_max}, {"rows": rows}, lines=_table(rows, SEQ_COLUMNS)
    )


# ---------------------------------------------------------------- verify


def _check_identities() -> list[tuple[str, bool]]:
    ok = True
    for n in range(0, VERIFY_N + 1):
        try:
            phi_pow_decompose(n)
        except ArithmeticError:
            ok = False
            break
    pyth = all(tn_entry(n).pythagoras_holds() for n in range(1, VERIFY_N + 1))
    closed = all(tn_area(n) == tn_entry(n).area for n in range(1, VERIFY_N + 1))
    return [
        (f"phi^(n+1) = F_(n+1)*phi + F_n n=0..{VERIFY_N}", ok),
        (f"T_n Pythagoras exact n=1..{VERIFY_N}", pyth),
        (f"T_n area = (√φ/2)·√(F_(n+1)/F_n) n=1..{VERIFY_N}", closed),
    ]


def _check_bounds() -> list[tuple[str, bool]]:
    rep = tn_area_bounds_check(VERIFY_N)
    eq_ok = rep.equal_lower == [1] and rep.equal_upper == [2]
    proof = ex.prove_r_longest_infeasible()
    eqs = ",".join(str(n) for n in sorted(set(rep.equal_lower + rep.equal_upper)))
    return [
        (f"area(T_1) <= area(T_n) <= area(T_2) n=1..{VERIFY_N}, equality at n={eqs}", rep.ok and eq_ok),
        ("F_(n+1)/F_n alternates around phi", rep.alternating_ok),
        (
            f"R-longest case infeasible (min 1/(x(1-x)) = {proof.grid_min:.9f} > 1)",
            proof.infeasible and abs(proof.grid_min - 4.0) <= 1e-9,
        ),
    ]


def _check_construction() -> list[tuple[str, bool]]:
    _, cert = construct_T2()
    items = [
        ("BE^2 = 2φ exact", cert.be2 == 2 * PHI),
        ("EC^2 = φ^3 exact", cert.ec2 == PHI**3),
        ("BO = 1/φ exact", cert.bo == (1 / PHI)),
        ("EO = AC exact", cert.pythagoras),
        ("triangle EBC equals T_2", cert.matches_t2),
    ]
    items += [(r.claim, r.passed) for r in cert.claims.results]
    return items


SUITES: dict[str, Callable[[], list[tuple[str, bool]]]] = {
    "identities": _check_identities,
    "bounds": _check_bounds,
    "construction": _check_construction,
}


def cmd_verify(args: argparse.Namespace) -> ResultDocument:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = [(name, label, ok) for name in names for label, ok in SUITES[name]()]
    lines = [f"{label}: {'OK' if ok else 'FAIL'}" for _, label, ok in results]
    outputs = {
        "checks": [{"suite": s, "item": label, "passed": ok} for s, label, ok in results],
        "all_passed": all(ok for *_, ok in results),
    }
    return ResultDocument(f"verify {args.suite}", {"suite": args.suite}, outputs, lines=lines)


# ---------------------------------------------------------------- render


def cmd_render(args: argparse.Namespace) -> ResultDocument:
    try:
        spec = RenderSpec(args.figure, args.width, args.height, not args.no_annotate, tuple(args.n))
    except ValueError as e:
        raise UsageError(str(e)) from None
    svg = render_svg(spec)
    _write(args.out, svg)
    outputs = {"out": args.out, "bytes": str(len(svg.encode("utf-8")))}
    if args.trace_out:
        if spec.figure != "fig3_construction":
            raise UsageError("--trace-out only applies to fig3_construction")
        trace, _ = construct_T2()
        _write(args.trace_out, trace.to_text())
        outputs["trace_out"] = args.trace_out
    params = {"figure": spec.figure, "width": spec.width_px, "height": spec.height_px, "annotate": spec.annotate}
    return ResultDocument("render", params, outputs, lines=[f"wrote {args.out}"])


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


# ---------------------------------------------------------------- plumbing


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="goldenextremal", description="Golden-ratio extremal triangles about a semicircle.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="run an extremal solver")
    s.add_argument("problem", choices=("area", "perimeter-no-triangle", "perimeter-nonacute", "perimeter-isosceles"))
    s.add_argument("--tol", type=float, default=None)
    s.add_argument("--grid", type=int, default=ex.DEFAULT_GRID)
    s.add_argument("--strict-diameter", action="store_true", help="require the diameter inside BC (perimeter problems)")
    s.add_argument(
        "--both-constraint-readings",
        action="store_true",
        help="perimeter-nonacute: also solve with the no-triangle condition added",
    )
    s.add_argument("--format", choices=("table", "json"), default="table")
    s.add_argument("--out")

    q = sub.add_parser("sequence", help="tabulate the triangles T_n")
    q.add_argument("--n-max", type=int, default=10)
    q.add_argument("--format", choices=("table", "csv", "json"), default="table")
    q.add_argument("--out")

    r = sub.add_parser("render", help="write an SVG figure")
    r.add_argument("figure", choices=FIGURES)
    r.add_argument("--out", required=True)
    r.add_argument("--width", type=int, default=800)
    r.add_argument("--height", type=int, default=600)
    r.add_argument("--no-annotate", action="store_true")
    r.add_argument("--n", type=int, nargs="+", default=[1, 2, 3], help="fig2_sequence: which T_n to draw")
    r.add_argument("--trace-out", help="fig3_construction: also write the construction trace text")

    v = sub.add_parser("verify", help="run the exact-identity suites")
    v.add_argument("suite", choices=("identities", "bounds", "construction", "all"))
    v.add_argument("--format", choices=("table", "json"), default="table")
    v.add_argument("--out")
    return p


def _emit(doc: ResultDocument, fmt: str, out: str | None) -> None:
    if fmt == "json":
        text = doc.to_json()
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=SEQ_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(doc.outputs["rows"])
        text = buf.getvalue()
    else:
        text = "\n".join(doc.lines) + "\n"
    if out:
        _write(out, text)
    else:
        sys.stdout.write(text)


COMMANDS = {"solve": cmd_solve, "sequence": cmd_sequence, "render": cmd_render, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        doc = COMMANDS[args.command](args)
        if args.command == "render":
            print("\n".join(doc.lines))
        else:
            _emit(doc, args.format, args.out)
    except UsageError as e:
        print(f"goldenextremal: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, NonConvergence) as e:
        print(f"goldenextremal: did not converge: {e}", file=sys.stderr)
        return EXIT_NONCONVERGED
    except OSError as e:
        print(f"goldenextremal: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "verify" and not doc.outputs["all_passed"]:
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
