"""Acceptance criteria 1-10, one PASS/FAIL line each.

Run under pytest (lines appear in the -v log) or directly:
``python3 tests/test_acceptance.py``.
"""

import math
import os
import subprocess
import sys
import tempfile
import time
from pathlib import Path

import mpmath
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from _oracles import perimeter_oracle  # noqa: E402

from goldenextremal import extremal as ex  # noqa: E402
from goldenextremal import geometry as geo  # noqa: E402
from goldenextremal.construct import construct_T2  # noqa: E402
from goldenextremal.exactphi import PHI, QPhi, fib, radical_cmp  # noqa: E402
from goldenextremal.goldenseq import tn_area_bounds_check, tn_entry, tn_limit  # noqa: E402
from goldenextremal.render import min_area_triangle  # noqa: E402

PHI_F = (1 + math.sqrt(5)) / 2


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def c1_phi_powers():
    def run():
        return all(PHI ** (n + 1) == QPhi(fib(n), fib(n + 1)) for n in range(0, 101))

    ok, dt = _timed(run)
    return ok and dt < 1.0, f"phi^(n+1) = F_(n+1) phi + F_n exact for n=0..100 in {dt:.3f}s"


def c2_pythagoras():
    bad = []
    for n in range(1, 101):
        e = tn_entry(n)
        lhs = e.side_short.square() + e.side_mid.square()
        rhs = e.side_long.square()
        if (lhs.a, lhs.b) != (rhs.a, rhs.b):
            bad.append(n)
    return not bad, f"T_n Pythagoras component-wise for n=1..100, failures {bad}"


def c3_min_area():
    sol, dt = _timed(lambda: ex.solve_min_area_numeric(1e-9))
    ab, ac, _ = sol.sides_float
    with mpmath.workdps(30):
        target = float(mpmath.phi**3 / 2)
    da = abs(sol.area_float - target)
    dx = max(abs(ab - PHI_F), abs(ac - PHI_F**2))
    ok = da <= 1e-8 and dx <= 1e-8 and dt < 5.0
    return ok, f"area gap {da:.2e}, argmin gap {dx:.2e}, {dt:.2f}s"


def c4_case1():
    p, dt = _timed(lambda: ex.prove_r_longest_infeasible(10**6))
    ok = abs(p.grid_min - 4.0) <= 1e-9 and p.grid_min > 1 and p.infeasible and dt < 1.0
    return ok, f"grid min of 1/(x(1-x)) = {p.grid_min:.12f} at x = {p.grid_argmin:.6f}, {dt:.3f}s"


def c5_bounds():
    rep = tn_area_bounds_check(100)
    ok = rep.ok and rep.equal_lower == [1] and rep.equal_upper == [2]
    return ok, f"exact bounds n=1..100, equality at lower {rep.equal_lower}, upper {rep.equal_upper}"


def c6_construction():
    _, cert = construct_T2()
    sides_ok = all(radical_cmp(a, b) == 0 for a, b in zip(cert.sides, tn_entry(2).sides()))
    ok = cert.be2 == 2 * PHI and cert.ec2 == PHI**3 and sides_ok and cert.ok
    return ok, f"BE^2 = {cert.be2}, EC^2 = {cert.ec2}, sides match T_2: {sides_ok}"


def c7_isosceles():
    sol, dt = _timed(ex.solve_min_perimeter_isosceles)
    dv = abs(sol.params["v_over_h"] - math.sqrt(PHI_F))
    ds = abs(sol.params["s_over_h"] - PHI_F)
    ok = dv <= 1e-6 and ds <= 1e-6 and dt < 5.0
    return ok, f"|v/h - sqrt(phi)| = {dv:.2e}, |s/h - phi| = {ds:.2e}, {dt:.2f}s"


def c8_limit():
    lim = tn_limit(range(50, 51), dps=30)
    err = dict(lim.convergence)[50]
    return err < mpmath.mpf("1e-10"), f"|side_mid(T_50) - phi| = {mpmath.nstr(err, 3)}"


def _feasible(sol, no_triangle, non_acute):
    ab, ac, _ = sol.sides
    tri = sol.triangle()
    checks = [
        (ab + ac) / (ab * ac) <= 1 + 1e-9,
        abs(geo.tangent_distance(tri, "AB") - 1) <= 1e-9,
        abs(geo.tangent_distance(tri, "AC") - 1) <= 1e-9,
        sol.constraint_residual <= 1e-9,
    ]
    if no_triangle:
        checks.append(abs(ab - ac) >= 1 - 1e-9)
    if non_acute:
        checks.append(max(geo.angles(tri)) >= math.pi / 2 - 1e-9)
    return all(checks)


def c9_perimeter():
    cases = [
        ("no_triangle", ex.solve_min_perimeter_no_triangle(), True, False),
        ("non_acute", ex.solve_min_perimeter_nonacute(), False, True),
        ("non_acute+no_triangle", ex.solve_min_perimeter_nonacute(no_triangle=True), True, True),
    ]
    ok = True
    parts = []
    for name, sol, nt, na in cases:
        oracle, _, _ = perimeter_oracle(no_triangle=nt, non_acute=na)
        gap = abs(oracle - sol.perimeter)
        good = _feasible(sol, nt, na) and sol.stationarity <= 1e-6 and gap <= 1e-4
        ok &= good
        parts.append(f"{name} P={sol.perimeter:.10f} oracle gap {gap:.1e}")
    bound = geo.perimeter(min_area_triangle())
    ok &= bound >= cases[0][1].perimeter
    parts.append(f"smallest-area perimeter {bound:.10f} >= no_triangle optimum")
    return ok, "; ".join(parts)


def _cli(args, cwd):
    return subprocess.run(
        [sys.executable, "-m", "goldenextremal", *args], cwd=cwd, capture_output=True, check=True
    ).stdout


def c10_determinism():
    commands = [
        ["solve", "area", "--format", "json"],
        ["solve", "perimeter-nonacute", "--both-constraint-readings", "--format", "json"],
        ["sequence", "--n-max", "40", "--format", "csv"],
    ]
    figures = ["fig1_min_area", "fig2_sequence", "fig3_construction"]
    same = True
    with tempfile.TemporaryDirectory() as d:
        for cmd in commands:
            same &= _cli(cmd, d) == _cli(cmd, d)
        for fig in figures:
            blobs = []
            for k in (1, 2):
                out = os.path.join(d, f"{fig}-{k}.svg")
                _cli(["render", fig, "--out", out], d)
                blobs.append(Path(out).read_bytes())
            same &= blobs[0] == blobs[1]
    return same, f"{len(commands)} solve/sequence runs and {len(figures)} renders byte-identical across processes"


CRITERIA = [
    (1, c1_phi_powers),
    (2, c2_pythagoras),
    (3, c3_min_area),
    (4, c4_case1),
    (5, c5_bounds),
    (6, c6_construction),
    (7, c7_isosceles),
    (8, c8_limit),
    (9, c9_perimeter),
    (10, c10_determinism),
]


def _line(num, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}"


@pytest.mark.parametrize("num,check", CRITERIA, ids=[f"criterion_{n}" for n, _ in CRITERIA])
def test_criterion(num, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(num, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [(n, *fn()) for n, fn in CRITERIA]
    for n, ok, detail in results:
        print(_line(n, ok, detail))
    sys.exit(0 if all(ok for _, ok, _ in results) else 1)
