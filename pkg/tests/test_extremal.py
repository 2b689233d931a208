import math
from fractions import Fraction

import numpy as np
import pytest
from _oracles import area_oracle, perimeter_oracle, sides_from_legs
from hypothesis import given
from hypothesis import strategies as st

from goldenextremal import extremal as ex
from goldenextremal import geometry as geo
from goldenextremal.exactphi import ONE, PHI, QPhi
from goldenextremal.render import min_area_triangle

PHI_F = (1 + math.sqrt(5)) / 2
PHI3_HALF = (2 + math.sqrt(5)) / 2


def test_r_longest_examples():
    assert ex.sin_theta_r_longest(0.5) == 4.0
    assert ex.sin_theta_r_longest(0.1) == pytest.approx(1 / 0.09, rel=1e-12)
    with pytest.raises(ValueError):
        ex.sin_theta_r_longest(1.0)


@given(st.floats(1e-6, 1 - 1e-6))
def test_r_longest_always_exceeds_one(x):
    assert ex.sin_theta_r_longest(x) > 1


def test_infeasibility_proof():
    p = ex.prove_r_longest_infeasible(10**6)
    assert p.grid_min == pytest.approx(4.0, abs=1e-9)
    assert p.grid_argmin == pytest.approx(0.5, abs=1e-6)
    assert p.infeasible
    tiny = ex.prove_r_longest_infeasible(1)
    assert tiny.analytic_min == 4.0 and tiny.infeasible


def test_ac_longest_sin_examples():
    assert ex.sin_theta_ac_longest(PHI) == ONE
    assert ex.sin_theta_ac_longest(1) == QPhi(Fraction(3, 2))
    assert ex.sin_theta_ac_longest(3) == QPhi(Fraction(7, 12))
    assert ex.sin_theta_ac_longest(3.0) == pytest.approx(7 / 12)


def test_ac_longest_area_examples():
    assert ex.area_ac_longest(PHI) == PHI**3 / 2
    assert ex.area_ac_longest(2.0) == 2.5
    with pytest.raises(ex.InfeasibleError):
        ex.area_ac_longest(1)
    with pytest.raises(ex.InfeasibleError):
        ex.area_ac_longest(1.6)


def test_case_analysis():
    assert not ex.analyze_case("R_longest", Fraction(1, 2)).feasible
    assert ex.analyze_case("AC_longest", PHI).feasible
    assert not ex.analyze_case("AC_longest", 1.5).feasible
    with pytest.raises(ValueError):
        ex.analyze_case("nonsense", 1)


def test_analytic_area_certificate():
    sol = ex.solve_min_area_analytic()
    assert all(sol.certificate.values())
    assert sol.x_star == PHI
    assert sol.area == PHI**3 / 2


def test_numeric_area():
    sol = ex.solve_min_area_numeric(1e-9)
    ab, ac, _ = sol.sides_float
    assert ab == pytest.approx(PHI_F, abs=1e-8)
    assert ac == pytest.approx(PHI_F**2, abs=1e-8)
    assert sol.area_float == pytest.approx(PHI3_HALF, abs=1e-8)
    assert sol.certificate["converged"]


def test_numeric_area_mirrored():
    a = ex.solve_min_area_numeric(1e-9)
    b = ex.solve_min_area_numeric(1e-9, branch="AB_longest")
    assert b.sides_float[0] == a.sides_float[1] and b.sides_float[1] == a.sides_float[0]
    assert b.area_float == a.area_float


def test_area_oracle_agrees():
    v, x, y = area_oracle()
    sol = ex.solve_min_area_numeric(1e-9)
    assert abs(v - sol.area_float) < 1e-4
    assert abs(x - sol.sides_float[0]) < 1e-3 or abs(y - sol.sides_float[0]) < 1e-3


@pytest.mark.parametrize("tol", [0, -1, 1e-2, float("nan")])
def test_bad_tolerance(tol):
    with pytest.raises(ValueError):
        ex.solve_min_area_numeric(tol)
    with pytest.raises(ValueError):
        ex.solve_min_perimeter_no_triangle(tol)


def _check_feasible(sol, no_triangle=False, non_acute=False):
    ab, ac, bc = sol.sides
    s = (ab + ac) / (ab * ac)
    assert s <= 1 + 1e-9
    tri = sol.triangle()
    assert geo.tangent_distance(tri, "AB") == pytest.approx(1, abs=1e-9)
    assert geo.tangent_distance(tri, "AC") == pytest.approx(1, abs=1e-9)
    assert tri.AB == pytest.approx(ab, abs=1e-9) and tri.AC == pytest.approx(ac, abs=1e-9)
    if no_triangle:
        assert max(ac - ab, ab - ac) >= 1 - 1e-9
    if non_acute:
        assert max(geo.angles(tri)) >= math.pi / 2 - 1e-9
    assert sol.constraint_residual <= 1e-9
    assert sol.stationarity <= 1e-6


def test_no_triangle_perimeter():
    sol = ex.solve_min_perimeter_no_triangle()
    _check_feasible(sol, no_triangle=True)
    v, _, _ = perimeter_oracle(no_triangle=True)
    assert abs(v - sol.perimeter) < 1e-4
    assert sol.perimeter <= geo.perimeter(min_area_triangle()) + 1e-12


def test_nonacute_perimeter():
    sol = ex.solve_min_perimeter_nonacute()
    _check_feasible(sol, non_acute=True)
    assert geo.classify(sol.triangle()) in ("right", "obtuse")
    v, _, _ = perimeter_oracle(non_acute=True)
    assert abs(v - sol.perimeter) < 1e-4
    assert sol.perimeter == pytest.approx(4 + 2 * math.sqrt(2), abs=1e-8)


def test_nonacute_and_no_triangle_perimeter():
    sol = ex.solve_min_perimeter_nonacute(no_triangle=True)
    _check_feasible(sol, no_triangle=True, non_acute=True)
    v, _, _ = perimeter_oracle(no_triangle=True, non_acute=True)
    assert abs(v - sol.perimeter) < 1e-4


def test_strict_diameter_changes_nothing():
    a = ex.solve_min_perimeter_no_triangle()
    b = ex.solve_min_perimeter_no_triangle(strict_diameter=True)
    assert a.perimeter == b.perimeter
    assert b.feasibility.diameter_contained


def test_isosceles_ratios():
    sol = ex.solve_min_perimeter_isosceles()
    assert sol.params["v_over_h"] == pytest.approx(math.sqrt(PHI_F), abs=1e-6)
    assert sol.params["s_over_h"] == pytest.approx(PHI_F, abs=1e-6)
    h, v, s = sol.params["h"], sol.params["v"], sol.params["s"]
    assert h * h + v * v == pytest.approx(s * s, rel=1e-12)
    betas = np.linspace(0.05, math.pi / 2 - 0.05, 200001)
    brute = np.min(2 / np.sin(betas) + 2 / (np.sin(betas) * np.cos(betas)))
    assert sol.perimeter <= brute + 1e-12


@given(st.floats(0.2, 1.4), st.floats(0.2, 1.4))
def test_side_angle_roundtrip(b, g):
    ang = geo.BaseAngles(b, g)
    ab, ac, bc = ex.base_angles_to_sides(ang)
    back = ex.sides_to_base_angles(ab, ac, obtuse_apex=ang.apex > math.pi / 2)
    assert back.beta == pytest.approx(b, abs=1e-7)
    assert back.gamma == pytest.approx(g, abs=1e-7)
    s, bc2 = sides_from_legs(ab, ac, -1 if ang.apex > math.pi / 2 else 1)
    assert bc2 == pytest.approx(bc, rel=1e-7)


def test_solvers_are_deterministic():
    a = ex.solve_min_perimeter_nonacute(no_triangle=True)
    b = ex.solve_min_perimeter_nonacute(no_triangle=True)
    assert a.perimeter == b.perimeter and a.sides == b.sides
