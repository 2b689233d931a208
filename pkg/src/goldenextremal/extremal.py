"""Smallest-area and smallest-perimeter triangles around a unit semicircle.

With O on BC and both slanted sides tangent to the unit circle, the
triangle's area is ``(AB + AC) / 2`` and the apex angle satisfies
``sin(theta) = (AB + AC) / (AB * AC)``.  Writing ``x = AB`` the two
"R, AB, AC form no triangle" cases are

* ``AC = 1 - x``: ``sin(theta) = 1 / (x (1 - x)) >= 4``, impossible;
* ``AC = 1 + x``: ``sin(theta) = (2x + 1) / (x^2 + x)``, feasible iff
  ``x >= phi``, where the area ``(2x + 1) / 2`` is smallest.

The numeric solvers below re-derive that optimum without using it and
explore the perimeter variants that have no closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Union

import numpy as np

from . import geometry as geo
from .exactphi import ONE, PHI, QPhi, Radical
from .search import BoxProblem, BoxSolution, ConvergenceError, golden_section, refine

PHI_F = (1 + math.sqrt(5)) / 2

CONSTRAINT_TOL = 1e-9
STATIONARITY_TOL = 1e-6
DEFAULT_GRID = 512

# search windows; every optimum found lies well inside them
X_MAX = 12.0
T_MAX = 12.0
X_MIN = 1.0 + 1e-3
ANGLE_MARGIN = 0.02

Exact = Union[QPhi, Fraction, int]
Case = Literal["R_longest", "AC_longest"]

__all__ = [
    "ConvergenceError",
    "InfeasibleError",
    "CaseAnalysis",
    "AreaSolution",
    "PerimeterSolution",
    "FeasibilityReport",
    "InfeasibilityProof",
    "sin_theta_r_longest",
    "prove_r_longest_infeasible",
    "sin_theta_ac_longest",
    "area_ac_longest",
    "analyze_case",
    "solve_min_area_analytic",
    "solve_min_area_numeric",
    "solve_min_perimeter_no_triangle",
    "solve_min_perimeter_nonacute",
    "solve_min_perimeter_isosceles",
    "sides_to_base_angles",
    "base_angles_to_sides",
    "feasibility_report",
]


class InfeasibleError(ValueError):
    """The requested point violates ``0 < sin(theta) <= 1``."""


def _check_tol(tol: float) -> None:
    if not (1e-14 <= tol <= 1e-3):
        raise ValueError(f"tol must lie in [1e-14, 1e-3], got {tol!r}")


def _is_exact(x: object) -> bool:
    return isinstance(x, (QPhi, Fraction, int)) and not isinstance(x, bool)


# ---------------------------------------------------------------- case analysis


def sin_theta_r_longest(x: float) -> float:
    if not 0 < x < 1:
        raise ValueError(f"R-longest case needs 0 < x < 1, got {x!r}")
    return 1.0 / (x * (1.0 - x))


@dataclass(frozen=True)
class InfeasibilityProof:
    samples: int
    grid_min: float
    grid_argmin: float
    analytic_min: float
    analytic_argmin: float
    infeasible: bool


def prove_r_longest_infeasible(samples: int = 1_000_000) -> InfeasibilityProof:
    """Show ``1/(x(1-x)) > 1`` on (0, 1), on a grid and analytically.

    ``x(1-x)`` peaks at ``x = 1/2`` with value 1/4, so the analytic minimum
    is exactly 4.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    xs = np.arange(1, samples + 1, dtype=float) / (samples + 1)
    vals = 1.0 / (xs * (1.0 - xs))
    k = int(np.argmin(vals))
    gmin = float(vals[k])
    analytic = 1.0 / (Fraction(1, 2) * (1 - Fraction(1, 2)))
    return InfeasibilityProof(
        samples=samples,
        grid_min=gmin,
        grid_argmin=float(xs[k]),
        analytic_min=float(analytic),
        analytic_argmin=0.5,
        infeasible=gmin > 1 and analytic > 1,
    )


def sin_theta_ac_longest(x: float | Exact) -> float | QPhi:
    """``(2x + 1) / (x^2 + x)``; exact inputs give an exact QPhi."""
    if _is_exact(x):
        q = QPhi.coerce(x)
        if q.sign() <= 0:
            raise ValueError("AC-longest case needs x > 0")
        return (2 * q + 1) / (q * q + q)
    x = float(x)
    if not x > 0:
        raise ValueError("AC-longest case needs x > 0")
    return (2 * x + 1) / (x * x + x)


def area_ac_longest(x: float | Exact) -> float | QPhi:
    """Area ``(2x + 1) / 2``, defined only where ``sin(theta) <= 1``, i.e. ``x >= phi``."""
    if _is_exact(x):
        q = QPhi.coerce(x)
        if q < PHI:
            raise InfeasibleError(f"x = {q} < phi gives sin(theta) > 1")
        return (2 * q + 1) / 2
    x = float(x)
    if x < PHI_F - 1e-12:
        raise InfeasibleError(f"x = {x!r} < phi gives sin(theta) > 1")
    return (2 * x + 1) / 2


@dataclass(frozen=True)
class CaseAnalysis:
    case: Case
    x: float | QPhi
    sin_theta: float | QPhi
    feasible: bool


def analyze_case(case: Case, x: float | Exact) -> CaseAnalysis:
    if case == "R_longest":
        if _is_exact(x):
            q = QPhi.coerce(x)
            s: float | QPhi = 1 / (q * (1 - q))
            feasible = 0 < s <= 1
        else:
            s = sin_theta_r_longest(float(x))
            feasible = 0 < s <= 1
        return CaseAnalysis(case, x, s, feasible)
    if case == "AC_longest":
        s = sin_theta_ac_longest(x)
        return CaseAnalysis(case, x, s, bool(0 < s <= 1))
    raise ValueError(f"unknown case {case!r}")


# ---------------------------------------------------------------- smallest area


@dataclass
class AreaSolution:
    x_star: QPhi | None
    x_star_float: float
    sides: tuple[Radical, Radical, Radical] | None
    sides_float: tuple[float, float, float]
    area: QPhi | None
    area_float: float
    certificate: dict[str, float | bool] = field(default_factory=dict)
    branch: str = "AC_longest"


def solve_min_area_analytic() -> AreaSolution:
    """The optimum ``x = phi``, certified by exact arithmetic in Q(phi)."""
    x = PHI
    ab = x
    ac = 1 + x
    sin_theta = sin_theta_ac_longest(x)
    # right angle at A, so BC^2 = AB^2 + AC^2 = phi^2 (1 + phi^2)
    bc = Radical(PHI, 1 + PHI * PHI)
    area = area_ac_longest(x)
    cert = {
        "sin_theta_is_one": sin_theta == ONE,
        "ac_equals_phi_squared": ac == PHI * PHI,
        "ac_over_ab_is_phi": ac / ab == PHI,
        "bc2_over_ab2_is_1_plus_phi2": bc.square() / (ab * ab) == 1 + PHI * PHI,
        "pythagoras": bc.square() == ab * ab + ac * ac,
        "area_is_phi3_over_2": area == PHI**3 / 2,
        "area_equals_half_ab_ac": area == ab * ac / 2,
        "area_equals_half_sum": area == (ab + ac) / 2,
    }
    return AreaSolution(
        x_star=x,
        x_star_float=float(x),
        sides=(Radical.of(ab), Radical.of(ac), bc),
        sides_float=(float(ab), float(ac), float(bc)),
        area=area,
        area_float=float(area),
        certificate=cert,
    )


def _t_lo(x):
    """Smallest ``t = AC - AB - 1`` keeping ``sin(theta) <= 1`` (needs x > 1)."""
    return np.maximum(0.0, x / (x - 1.0) - x - 1.0)


def _sin_theta(x, y):
    return (x + y) / (x * y)


def solve_min_area_numeric(
    tol: float = 1e-9, branch: str = "AC_longest", grid: int = DEFAULT_GRID
) -> AreaSolution:
    """Minimize ``(AB + AC) / 2`` subject to ``sin(theta) <= 1`` and the no-triangle condition.

    Search variables are ``x = AB`` and the slack ``v`` above the feasible
    edge: ``AC = x + 1 + t_lo(x) + v``, so both constraints are box bounds
    ``v >= 0`` and the refinement runs along the active boundary whenever
    ``v`` stays at 0.  ``branch="AB_longest"`` solves the mirrored case and
    swaps the labels.
    """
    _check_tol(tol)
    if branch not in ("AC_longest", "AB_longest"):
        raise ValueError(f"unknown branch {branch!r}")

    def f_vec(x, v):
        return (2 * x + 1 + _t_lo(x) + v) / 2

    def f(x: float, v: float) -> float:
        return float(f_vec(x, v))

    prob = BoxProblem(f, f_vec, (X_MIN, X_MAX), (0.0, T_MAX))
    sol = refine(prob, tol, grid)
    x = sol.u
    y = x + 1 + float(_t_lo(x)) + sol.v
    s = _sin_theta(x, y)
    c = math.sqrt(max(0.0, 1 - s * s))
    bc = math.sqrt(x * x + y * y - 2 * x * y * c)
    ab, ac = (x, y) if branch == "AC_longest" else (y, x)
    phi3_half = (2 + math.sqrt(5)) / 2
    cert = {
        "sin_theta_residual": abs(s - 1),
        "no_triangle_residual": max(0.0, x + 1 - y),
        "area_gap_to_phi3_over_2": abs(sol.value - phi3_half),
        "stationarity": sol.stationarity,
        "converged": sol.stationarity <= STATIONARITY_TOL,
    }
    return AreaSolution(
        x_star=None,
        x_star_float=ab,
        sides=None,
        sides_float=(ab, ac, bc),
        area=None,
        area_float=sol.value,
        certificate=cert,
        branch=branch,
    )


# ---------------------------------------------------------------- perimeter


@dataclass(frozen=True)
class FeasibilityReport:
    diameter_contained: bool
    tangency_on_segment: tuple[bool, bool]
    angle_class: geo.AngleClass


def feasibility_report(tri: geo.TriangleGeom) -> FeasibilityReport:
    on_seg = []
    for side in ("AB", "AC"):
        _, t = geo.tangency_point(tri, side)
        on_seg.append(-1e-12 <= t <= 1 + 1e-12)
    return FeasibilityReport(
        diameter_contained=geo.diameter_contained(tri),
        tangency_on_segment=(on_seg[0], on_seg[1]),
        angle_class=geo.classify(tri),
    )


@dataclass
class PerimeterSolution:
    constraint_set: str
    region: str
    params: dict[str, float]
    angles: geo.BaseAngles
    sides: tuple[float, float, float]
    perimeter: float
    stationarity: float
    constraint_residual: float
    feasibility: FeasibilityReport
    optimizer_trace: list[dict] = field(default_factory=list)

    def triangle(self) -> geo.TriangleGeom:
        return geo.triangle_from_base_angles(self.angles)


def base_angles_to_sides(angles: geo.BaseAngles) -> tuple[float, float, float]:
    """(AB, AC, BC) of the unit-semicircle triangle with these base angles."""
    sb, sg = math.sin(angles.beta), math.sin(angles.gamma)
    bc = 1 / sb + 1 / sg
    st = math.sin(angles.beta + angles.gamma)
    return bc * sg / st, bc * sb / st, bc


def sides_to_base_angles(ab: float, ac: float, obtuse_apex: bool = False) -> geo.BaseAngles:
    """Base angles of the circumscribing triangle with legs AB, AC.

    ``sin(theta)`` is forced by tangency; ``obtuse_apex`` picks the sign of
    ``cos(theta)``.
    """
    s = _sin_theta(ab, ac)
    if s > 1 + 1e-12:
        raise InfeasibleError(f"sin(theta) = {s!r} > 1")
    c = math.sqrt(max(0.0, 1 - s * s)) * (-1 if obtuse_apex else 1)
    bc = math.sqrt(ab * ab + ac * ac - 2 * ab * ac * c)
    # angle at B faces AC
    beta = math.atan2(ac * s, (ab * ab + bc * bc - ac * ac) / (2 * ab))
    gamma = math.atan2(ab * s, (ac * ac + bc * bc - ab * ab) / (2 * ac))
    return geo.BaseAngles(beta, gamma)


def _perimeter_xt(x, y, sign: int):
    s = _sin_theta(x, y)
    c = sign * np.sqrt(np.maximum(0.0, 1 - s * s))
    return x + y + np.sqrt(x * x + y * y - 2 * x * y * c)


def _diameter_ok_xy(x, y, sign: int):
    # OB = 1/sin(beta) = BC / (AC sin theta); the diameter fits iff OB, OC >= 1
    s = _sin_theta(x, y)
    c = sign * np.sqrt(np.maximum(0.0, 1 - s * s))
    bc = np.sqrt(x * x + y * y - 2 * x * y * c)
    return (bc >= y * s - 1e-12) & (bc >= x * s - 1e-12)


def _t_right_at_b(x):
    """Smallest ``t`` making the angle at B non-acute on the acute-apex branch.

    The angle at B is right when ``cos(theta) = AB / AC``, which with the
    tangency relation gives ``AC = x (1 + x^2) / (x^2 - 1)``.
    """
    return np.maximum(0.0, x * (1 + x * x) / (x * x - 1) - x - 1)


def _xt_problem(sign: int, lower, strict_diameter: bool) -> BoxProblem:
    def f_vec(x, v):
        y = x + 1 + lower(x) + v
        p = _perimeter_xt(x, y, sign)
        if strict_diameter:
            p = np.where(_diameter_ok_xy(x, y, sign), p, np.inf)
        return p

    def f(x: float, v: float) -> float:
        return float(f_vec(np.float64(x), np.float64(v)))

    return BoxProblem(f, f_vec, (X_MIN, X_MAX), (0.0, T_MAX))


def _solution_from_xt(
    box: BoxSolution, sign: int, lower, constraint_set: str, region: str
) -> PerimeterSolution:
    x = box.u
    y = x + 1 + float(lower(np.float64(x))) + box.v
    s = _sin_theta(x, y)
    angles = sides_to_base_angles(x, y, obtuse_apex=sign < 0)
    c = sign * math.sqrt(max(0.0, 1 - s * s))
    bc = math.sqrt(x * x + y * y - 2 * x * y * c)
    residual = max(0.0, s - 1, x + 1 - y)
    tri = geo.triangle_from_base_angles(angles)
    return PerimeterSolution(
        constraint_set=constraint_set,
        region=region,
        params={"AB": x, "AC": y, "sin_theta": s, "cos_sign": float(sign)},
        angles=angles,
        sides=(x, y, bc),
        perimeter=x + y + bc,
        stationarity=box.stationarity,
        constraint_residual=residual,
        feasibility=feasibility_report(tri),
        optimizer_trace=box.trace,
    )


def _pick(cands: list[PerimeterSolution]) -> PerimeterSolution:
    # ties resolve to the earlier candidate
    best = cands[0]
    for c in cands[1:]:
        if c.perimeter < best.perimeter:
            best = c
    return best


def solve_min_perimeter_no_triangle(
    tol: float = 1e-9, grid: int = DEFAULT_GRID, strict_diameter: bool = False
) -> PerimeterSolution:
    """Smallest perimeter when R, AB, AC cannot form a triangle.

    Only ``AC >= AB + 1`` is searched: the mirrored case ``AB >= AC + 1`` has
    the same perimeters with labels swapped, and ``R >= AB + AC`` is empty.
    Both signs of ``cos(theta)`` are tried.
    """
    _check_tol(tol)
    cands = []
    for sign, region in ((1, "acute_apex"), (-1, "obtuse_apex")):
        prob = _xt_problem(sign, _t_lo, strict_diameter)
        box = refine(prob, tol, grid)
        cands.append(_solution_from_xt(box, sign, _t_lo, "no_triangle", region))
    return _pick(cands)


def _angles_problem(region: str, strict_diameter: bool):
    half = math.pi / 2
    m = ANGLE_MARGIN

    if region == "right_or_obtuse_apex":
        u_bounds = (0.2, half)

        def to_bg(u, w):
            return w * u, (1 - w) * u

    elif region == "obtuse_B":
        u_bounds = (half, math.pi - 0.2)

        def to_bg(u, w):
            return u, w * (math.pi - u)

    elif region == "obtuse_C":
        u_bounds = (half, math.pi - 0.2)

        def to_bg(u, w):
            return w * (math.pi - u), u

    else:
        raise ValueError(region)

    def f_vec(u, w):
        b, g = to_bg(u, w)
        sb, sg = np.sin(b), np.sin(g)
        bc = 1 / sb + 1 / sg
        st = np.sin(b + g)
        p = bc + bc * (sb + sg) / st
        if strict_diameter:
            # O-to-vertex distances are 1/sin, never below the radius
            p = np.where((1 / sb >= 1 - 1e-12) & (1 / sg >= 1 - 1e-12), p, np.inf)
        return p

    def f(u: float, w: float) -> float:
        return float(f_vec(np.float64(u), np.float64(w)))

    return BoxProblem(f, f_vec, u_bounds, (m, 1 - m)), to_bg


def solve_min_perimeter_nonacute(
    tol: float = 1e-9,
    grid: int = DEFAULT_GRID,
    no_triangle: bool = False,
    strict_diameter: bool = False,
) -> PerimeterSolution:
    """Smallest perimeter over triangles that are right or obtuse.

    Searched over base angles, one box per location of the non-acute angle:
    at the apex the box is ``beta + gamma <= pi/2`` and the right-angle edge
    is a box face.  With ``no_triangle=True`` the no-triangle condition is
    added as well; that reading is searched in (AB, AC) coordinates, where
    an obtuse apex is the negative ``cos(theta)`` branch and an obtuse angle
    at B starts at ``AC = x (1 + x^2) / (x^2 - 1)``.
    """
    _check_tol(tol)
    cands = []
    if no_triangle:
        label = "non_acute+no_triangle"
        for sign, lower, region in ((-1, _t_lo, "obtuse_apex"), (1, _t_right_at_b, "obtuse_B")):
            box = refine(_xt_problem(sign, lower, strict_diameter), tol, grid)
            cands.append(_solution_from_xt(box, sign, lower, label, region))
        return _pick(cands)

    for region in ("right_or_obtuse_apex", "obtuse_B", "obtuse_C"):
        prob, to_bg = _angles_problem(region, strict_diameter)
        box = refine(prob, tol, grid)
        b, g = to_bg(box.u, box.v)
        angles = geo.BaseAngles(b, g)
        tri = geo.triangle_from_base_angles(angles)
        largest = max(geo.angles(tri))
        ab, ac, bc = base_angles_to_sides(angles)
        cands.append(
            PerimeterSolution(
                constraint_set="non_acute",
                region=region,
                params={"beta": b, "gamma": g},
                angles=angles,
                sides=(ab, ac, bc),
                perimeter=box.value,
                stationarity=box.stationarity,
                constraint_residual=max(0.0, math.pi / 2 - largest),
                feasibility=feasibility_report(tri),
                optimizer_trace=box.trace,
            )
        )
    return _pick(cands)


def _isosceles_perimeter(beta: float) -> float:
    # half-base 1/sin, slant 1/(sin cos)
    return 2 / math.sin(beta) + 2 / (math.sin(beta) * math.cos(beta))


def _isosceles_slope(beta: float) -> float:
    s, c = math.sin(beta), math.cos(beta)
    return -2 * c / (s * s) - 8 * math.cos(2 * beta) / math.sin(2 * beta) ** 2


def _polish_root(g, lo: float, hi: float) -> float | None:
    """Bisection on a sign change of ``g``; None when the bracket has none."""
    glo, ghi = g(lo), g(hi)
    if glo == 0:
        return lo
    if glo * ghi > 0:
        return None
    for _ in range(200):
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        gm = g(mid)
        if gm == 0:
            return mid
        if (gm < 0) == (glo < 0):
            lo, glo = mid, gm
        else:
            hi = mid
    return (lo + hi) / 2


def solve_min_perimeter_isosceles(tol: float = 1e-10, grid: int = DEFAULT_GRID) -> PerimeterSolution:
    """Golden-section search over the common base angle of an isosceles triangle.

    The half-triangle (half-base ``h``, height ``v``, slant ``s``) is reported
    through ``params``; its ratios should come out as ``sqrt(phi)`` and ``phi``.
    """
    _check_tol(tol)
    lo, hi = 0.05, math.pi / 2 - 0.05
    betas = np.linspace(lo, hi, grid)
    vals = 2 / np.sin(betas) + 2 / (np.sin(betas) * np.cos(betas))
    k = int(np.argmin(vals))
    step = betas[1] - betas[0]
    trace: list[dict] = [{"phase": "grid", "u": float(betas[k]), "f": float(vals[k])}]
    res = golden_section(
        _isosceles_perimeter, max(lo, betas[k] - 2 * step), min(hi, betas[k] + 2 * step), tol
    )
    beta = float(res.x)
    # the perimeter is flat at the optimum, so its value only pins beta to
    # ~sqrt(eps); the slope changes sign sharply and pins it to ~eps
    w = max(10 * tol, 1e-6)
    root = _polish_root(_isosceles_slope, max(lo, beta - w), min(hi, beta + w))
    if root is not None and _isosceles_perimeter(root) <= res.fx + 1e-12:
        beta = root
        trace.append({"phase": "polish", "u": beta, "f": _isosceles_perimeter(beta)})
    trace.append({"phase": "final", "u": beta, "f": res.fx, "iterations": res.iterations})
    h = 1 / math.sin(beta)
    v = h * math.tan(beta)
    s = h / math.cos(beta)
    hstep = 1e-7
    p0 = _isosceles_perimeter(beta)
    stat = max(
        0.0,
        -(_isosceles_perimeter(beta + hstep) - p0) / hstep,
        -(_isosceles_perimeter(beta - hstep) - p0) / hstep,
    )
    angles = geo.BaseAngles(beta, beta)
    tri = geo.triangle_from_base_angles(angles)
    return PerimeterSolution(
        constraint_set="isosceles",
        region="isosceles",
        params={"beta": beta, "h": h, "v": v, "s": s, "v_over_h": v / h, "s_over_h": s / h},
        angles=angles,
        sides=(s, s, 2 * h),
        perimeter=p0,
        stationarity=stat,
        constraint_residual=0.0,
        feasibility=feasibility_report(tri),
        optimizer_trace=trace,
    )
