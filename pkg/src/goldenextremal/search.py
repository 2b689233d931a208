"""Deterministic grid seeding plus golden-section refinement on boxes.

The extremal solvers change variables so that every constraint they care
about becomes a bound of a rectangle ``[u_lo, u_hi] x [v_lo, v_hi]``.  Then
a coarse grid picks a seed cell and nested golden-section searches (outer
over ``u``, inner over ``v``) polish it.  Minima sitting on an edge of the
box are handled by evaluating the bracket endpoints as well.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI2 = 1 - INV_PHI

MAX_GSS_ITER = 200


class ConvergenceError(RuntimeError):
    """Raised when a refinement cannot shrink its bracket below the tolerance."""


@dataclass
class GSSResult:
    x: float
    fx: float
    iterations: int
    width: float


def golden_section(f: Callable[[float], float], a: float, b: float, tol: float) -> GSSResult:
    """Minimize a unimodal ``f`` on ``[a, b]`` to bracket width ``tol``.

    The endpoints are compared against the final interior point, so a
    minimum sitting exactly on ``a`` or ``b`` is returned exactly.
    """
    if b < a:
        a, b = b, a
    fa, fb = f(a), f(b)
    h = b - a
    c = a + INV_PHI2 * h
    d = a + INV_PHI * h
    fc, fd = f(c), f(d)
    it = 0
    while h > tol:
        if it >= MAX_GSS_ITER:
            raise ConvergenceError(f"golden-section stalled at width {h:.3e} > {tol:.3e}")
        it += 1
        if fc <= fd:
            b, d, fd = d, c, fc
            h = b - a
            c = a + INV_PHI2 * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + INV_PHI * h
            fd = f(d)
    # ties resolve to the smaller abscissa
    best = min((fa, a), (fc, c), (fd, d), (fb, b))
    return GSSResult(x=best[1], fx=best[0], iterations=it, width=h)


@dataclass
class BoxProblem:
    """Minimize ``f(u, v)`` over a closed rectangle.

    ``f_vec`` evaluates on numpy arrays for the grid phase; ``f`` on scalars
    for refinement.  Both must agree.
    """

    f: Callable[[float, float], float]
    f_vec: Callable[[np.ndarray, np.ndarray], np.ndarray]
    u_bounds: tuple[float, float]
    v_bounds: tuple[float, float]


@dataclass
class BoxSolution:
    u: float
    v: float
    value: float
    stationarity: float
    trace: list[dict] = field(default_factory=list)


def grid_min(problem: BoxProblem, n: int) -> tuple[float, float, float, float, float]:
    """Seed from an ``n x n`` grid.  Ties go to the lexicographically first cell."""
    us = np.linspace(*problem.u_bounds, n)
    vs = np.linspace(*problem.v_bounds, n)
    U, V = np.meshgrid(us, vs, indexing="ij")
    with np.errstate(all="ignore"):
        F = problem.f_vec(U, V)
    F = np.where(np.isfinite(F), F, np.inf)
    k = int(np.argmin(F))
    i, j = divmod(k, n)
    if not np.isfinite(F[i, j]):
        raise ConvergenceError("no finite objective value on the seeding grid")
    return float(us[i]), float(vs[j]), float(F[i, j]), us[1] - us[0], vs[1] - vs[0]


def refine(problem: BoxProblem, tol: float, grid: int = 512, cells: int = 2) -> BoxSolution:
    u0, v0, f0, du, dv = grid_min(problem, grid)
    trace: list[dict] = [{"phase": "grid", "u": u0, "v": v0, "f": f0}]
    ulo = max(problem.u_bounds[0], u0 - cells * du)
    uhi = min(problem.u_bounds[1], u0 + cells * du)
    vlo = max(problem.v_bounds[0], v0 - cells * dv)
    vhi = min(problem.v_bounds[1], v0 + cells * dv)
    inner_tol = tol / 10

    def inner(u: float) -> GSSResult:
        return golden_section(lambda v: problem.f(u, v), vlo, vhi, inner_tol)

    def outer(u: float) -> float:
        r = inner(u)
        trace.append({"phase": "refine", "u": u, "v": r.x, "f": r.fx})
        return r.fx

    res_u = golden_section(outer, ulo, uhi, tol)
    res_v = inner(res_u.x)
    u, v = float(res_u.x), float(res_v.x)
    value = problem.f(u, v)
    if not math.isfinite(value):
        raise ConvergenceError("refinement ended on a non-finite objective value")
    if value > f0 + 1e-12 * max(1.0, abs(f0)):
        raise ConvergenceError(f"refinement {value!r} is worse than its grid seed {f0!r}")
    stat = stationarity_residual(problem, u, v)
    trace.append({"phase": "final", "u": u, "v": v, "f": value})
    return BoxSolution(u=u, v=v, value=value, stationarity=stat, trace=trace)


def stationarity_residual(problem: BoxProblem, u: float, v: float, h: float = 1e-7) -> float:
    """Largest descent rate along a feasible coordinate direction.

    One-sided differences along ``+-u`` and ``+-v`` wherever the step stays
    inside the box.  Zero (up to rounding) at a first-order stationary point.
    """
    f0 = problem.f(u, v)
    worst = 0.0
    for du, dv in ((h, 0.0), (-h, 0.0), (0.0, h), (0.0, -h)):
        uu, vv = u + du, v + dv
        if not (problem.u_bounds[0] <= uu <= problem.u_bounds[1]):
            continue
        if not (problem.v_bounds[0] <= vv <= problem.v_bounds[1]):
            continue
        slope = (problem.f(uu, vv) - f0) / h
        worst = max(worst, -slope)
    return worst
