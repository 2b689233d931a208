"""Brute-force minimizers built on masked dense grids with zoom passes.

They share nothing with the package's search code: no change of variables,
no golden-section.  Area is scanned over the legs (AB, AC); perimeter over
the base angles, where it is smooth up to the edge sin(theta) = 1.
"""

import numpy as np


def sides_from_legs(x, y, sign):
    """(sin(theta), BC) for legs AB = x, AC = y around a unit semicircle."""
    s = (x + y) / (x * y)
    c = sign * np.sqrt(np.clip(1 - s * s, 0.0, None))
    return s, np.sqrt(x * x + y * y - 2 * x * y * c)


def _perimeter(b, g, no_triangle, non_acute):
    # law of sines on the tangent triangle; BC = OB + OC = 1/sin b + 1/sin g
    bc = 1 / np.sin(b) + 1 / np.sin(g)
    st = np.sin(b + g)
    ab, ac = bc * np.sin(g) / st, bc * np.sin(b) / st
    ok = b + g < np.pi
    if no_triangle:
        ok &= np.abs(ab - ac) >= 1
    if non_acute:
        ok &= np.maximum(np.maximum(b, g), np.pi - b - g) >= np.pi / 2
    return np.where(ok, ab + ac + bc, np.inf)


def _area(x, y):
    s = (x + y) / (x * y)
    ok = (s <= 1) & ((y >= x + 1) | (x >= y + 1))
    return np.where(ok, (x + y) / 2, np.inf)


def dense_min(f, xr, yr, n=2000, zooms=2):
    def scan(xr, yr):
        xs, ys = np.linspace(*xr, n), np.linspace(*yr, n)
        X, Y = np.meshgrid(xs, ys, indexing="ij")
        with np.errstate(all="ignore"):
            F = f(X, Y)
        k = np.unravel_index(np.argmin(F), F.shape)
        return F[k], xs[k[0]], ys[k[1]], xs[1] - xs[0], ys[1] - ys[0]

    v, x, y, dx, dy = scan(xr, yr)
    for _ in range(zooms):
        xr = (max(xr[0], x - 3 * dx), min(xr[1], x + 3 * dx))
        yr = (max(yr[0], y - 3 * dy), min(yr[1], y + 3 * dy))
        v, x, y, dx, dy = scan(xr, yr)
    return float(v), float(x), float(y)


def area_oracle():
    return dense_min(_area, (1.0, 6.0), (1.0, 8.0))


def perimeter_oracle(no_triangle=False, non_acute=False):
    """(perimeter, beta, gamma) of the best grid triangle."""
    lim = (0.01, np.pi - 0.01)
    return dense_min(lambda b, g: _perimeter(b, g, no_triangle, non_acute), lim, lim)
