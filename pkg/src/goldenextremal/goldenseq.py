"""The right triangles T_n with sides 1, sqrt(phi F_{n+1} / F_n), sqrt(phi^{n+1} / F_n).

They come from ``phi^{n+1} = F_{n+1} phi + F_n`` divided by ``F_n``: the
first leg squared plus the second leg squared equals the hypotenuse squared.
T_1 is the Kepler triangle and T_2 has the largest area.  The sequence
tends to half a golden rectangle, (1, phi, sqrt(1 + phi^2)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .exactphi import ONE, PHI, QPhi, Radical, fib, radical_cmp

LIMIT_DPS = 30


def _phi_power_label(k: int) -> str:
    return "" if k == 0 else ("φ" if k == 1 else f"φ^{k}")


def _radicand_label(coef: Fraction, with_phi: bool) -> str:
    """Pretty radicand ``coef`` or ``coef*phi`` such as ``2φ`` or ``3φ/2``."""
    num, den = coef.numerator, coef.denominator
    if with_phi:
        body = "φ" if num == 1 else f"{num}φ"
    else:
        body = str(num)
    if den != 1:
        body = f"{body}/{den}"
    return body


def _sqrt_label(inner: str) -> str:
    if inner == "1":
        return ""
    if len(inner) == 1:
        return f"√{inner}"
    return f"√({inner})"


@dataclass(frozen=True)
class GoldenTriangleEntry:
    n: int
    side_short: Radical
    side_mid: Radical
    side_long: Radical
    area: Radical
    fib_n: int
    fib_n1: int

    def sides(self) -> tuple[Radical, Radical, Radical]:
        return (self.side_short, self.side_mid, self.side_long)

    def pythagoras_holds(self) -> bool:
        return self.side_short.square() + self.side_mid.square() == self.side_long.square()

    def floats(self, dps: int = LIMIT_DPS) -> dict[str, mpmath.mpf]:
        return {
            "side_short": self.side_short.to_mpf(dps),
            "side_mid": self.side_mid.to_mpf(dps),
            "side_long": self.side_long.to_mpf(dps),
            "area": self.area.to_mpf(dps),
        }

    def side_labels(self) -> tuple[str, str, str]:
        """Human-readable sides, e.g. ``('1', '√(2φ)', 'φ·√φ')`` for n = 2."""
        mid = _sqrt_label(_radicand_label(Fraction(self.fib_n1, self.fib_n), True))
        k, r = divmod(self.n + 1, 2)
        coef = _phi_power_label(k)
        rad = _sqrt_label(_radicand_label(Fraction(1, self.fib_n), r == 1))
        if coef and rad:
            long = f"{coef}·{rad}"
        else:
            long = coef or rad or "1"
        return ("1", mid, long)


def tn_entry(n: int) -> GoldenTriangleEntry:
    """Exact T_n; Pythagoras is re-checked in Q(phi) before returning."""
    if n < 1:
        raise ValueError("T_n is defined for n >= 1 (F_0 = 0 would divide by zero)")
    fn, fn1 = fib(n), fib(n + 1)
    ratio = Fraction(fn1, fn)
    mid = Radical(ONE, PHI * ratio)
    # sqrt(phi^{n+1} / F_n) = phi^k sqrt(phi^r / F_n), n + 1 = 2k + r
    k, r = divmod(n + 1, 2)
    long = Radical(PHI**k, (PHI**r) * Fraction(1, fn))
    entry = GoldenTriangleEntry(
        n=n,
        side_short=Radical.of(1),
        side_mid=mid,
        side_long=long,
        area=Radical(QPhi(Fraction(1, 2)), PHI * ratio),
        fib_n=fn,
        fib_n1=fn1,
    )
    if not entry.pythagoras_holds():
        raise ArithmeticError(f"Pythagoras fails for T_{n}")
    return entry


def tn_area(n: int) -> Radical:
    """Area ``(sqrt(phi) / 2) sqrt(F_{n+1} / F_n)`` in closed form."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Radical(QPhi(Fraction(1, 2)), PHI) * Radical(ONE, QPhi(Fraction(fib(n + 1), fib(n))))


@dataclass
class BoundsReport:
    N: int
    ok: bool
    counterexample: int | None
    equal_lower: list[int] = field(default_factory=list)
    equal_upper: list[int] = field(default_factory=list)
    alternating_ok: bool = True


def tn_area_bounds_check(N: int) -> BoundsReport:
    """Exact check that area(T_1) <= area(T_n) <= area(T_2) for n = 1..N.

    Also checks that F_{n+1}/F_n increases along odd n and decreases along
    even n.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    lo, hi = tn_area(1), tn_area(2)
    report = BoundsReport(N=N, ok=True, counterexample=None)
    for n in range(1, N + 1):
        a = tn_area(n)
        c_lo, c_hi = radical_cmp(lo, a), radical_cmp(a, hi)
        if c_lo > 0 or c_hi > 0:
            report.ok = False
            if report.counterexample is None:
                report.counterexample = n
        if c_lo == 0:
            report.equal_lower.append(n)
        if c_hi == 0:
            report.equal_upper.append(n)
    ratios = [Fraction(fib(n + 1), fib(n)) for n in range(1, N + 1)]
    odd = ratios[0::2]
    even = ratios[1::2]
    report.alternating_ok = all(a < b for a, b in zip(odd, odd[1:])) and all(
        a > b for a, b in zip(even, even[1:])
    )
    if not report.alternating_ok:
        report.ok = False
    return report


@dataclass(frozen=True)
class LimitTriangle:
    side_short: Radical
    side_mid: Radical
    side_long: Radical
    area: QPhi
    convergence: tuple[tuple[int, mpmath.mpf], ...]

    def sides(self) -> tuple[Radical, Radical, Radical]:
        return (self.side_short, self.side_mid, self.side_long)

    def side_labels(self) -> tuple[str, str, str]:
        return ("1", "φ", "√(1+φ^2)")


def tn_limit(n_range: range = range(1, 51), dps: int = LIMIT_DPS) -> LimitTriangle:
    """The limiting triangle (1, phi, sqrt(1 + phi^2)) plus ``|side_mid(n) - phi|``."""
    phi = PHI.to_mpf(dps)
    table = []
    with mpmath.workdps(dps):
        for n in n_range:
            table.append((n, abs(tn_entry(n).side_mid.to_mpf(dps) - phi)))
    return LimitTriangle(
        side_short=Radical.of(1),
        side_mid=Radical.of(PHI),
        side_long=Radical(ONE, 1 + PHI * PHI),
        area=PHI / 2,
        convergence=tuple(table),
    )


def kepler_geometric_progression_check(
    entry: GoldenTriangleEntry | LimitTriangle | None = None,
) -> bool:
    """True iff the sides satisfy ``mid^2 = short * long`` exactly (defaults to T_1)."""
    if entry is None:
        entry = tn_entry(1)
    short, mid, long = entry.sides()
    return mid * mid == short * long
