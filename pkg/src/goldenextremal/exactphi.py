"""Exact arithmetic in Q(phi) and single square roots over it.

``QPhi(a, b)`` is the number ``a + b*phi`` with rational ``a, b`` and
``phi = (1 + sqrt 5) / 2``.  Products are reduced with ``phi**2 = phi + 1``.
``Radical(c, d)`` is ``c * sqrt(d)`` with ``c, d`` in Q(phi) and ``d >= 0``;
radicals compare and test equal through signs and squares only.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from math import gcd, isqrt
from typing import Union

import mpmath

Rationalish = Union[int, Fraction]

_QPHI_RE = re.compile(r"^\s*(-?\d+(?:/\d+)?)\s*\+\s*(-?\d+(?:/\d+)?)\*phi\s*$")


def _frac(x: Rationalish | str) -> Fraction:
    if isinstance(x, (float, complex)):
        raise TypeError("floats are not exact; pass int, Fraction or str")
    return Fraction(x)


@total_ordering
class QPhi:
    """Element ``a + b*phi`` of the golden field."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: Rationalish | str = 0, b: Rationalish | str = 0) -> None:
        self._a = _frac(a)
        self._b = _frac(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def coerce(cls, x: QPhi | Rationalish) -> QPhi:
        if isinstance(x, QPhi):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to QPhi")

    @classmethod
    def parse(cls, text: str) -> QPhi:
        """Inverse of ``str``: ``'p/q + r/s*phi'``."""
        m = _QPHI_RE.match(text)
        if not m:
            raise ValueError(f"not a QPhi literal: {text!r}")
        return cls(Fraction(m.group(1)), Fraction(m.group(2)))

    def __repr__(self) -> str:
        return f"QPhi({self._a!s}, {self._b!s})"

    def __str__(self) -> str:
        return f"{self._a} + {self._b}*phi"

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QPhi(other)
        if not isinstance(other, QPhi):
            return NotImplemented
        return self._a == other._a and self._b == other._b

    def __lt__(self, other: QPhi | Rationalish) -> bool:
        try:
            other = QPhi.coerce(other)
        except TypeError:
            return NotImplemented
        return qphi_sign(self - other) < 0

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def __neg__(self) -> QPhi:
        return QPhi(-self._a, -self._b)

    def __add__(self, other: QPhi | Rationalish) -> QPhi:
        try:
            other = QPhi.coerce(other)
        except TypeError:
            return NotImplemented
        return QPhi(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __sub__(self, other: QPhi | Rationalish) -> QPhi:
        try:
            other = QPhi.coerce(other)
        except TypeError:
            return NotImplemented
        return QPhi(self._a - other._a, self._b - other._b)

    def __rsub__(self, other: QPhi | Rationalish) -> QPhi:
        return QPhi.coerce(other) - self

    def __mul__(self, other: QPhi | Rationalish) -> QPhi:
        try:
            other = QPhi.coerce(other)
        except TypeError:
            return NotImplemented
        return qphi_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: QPhi | Rationalish) -> QPhi:
        try:
            other = QPhi.coerce(other)
        except TypeError:
            return NotImplemented
        return qphi_mul(self, qphi_inv(other))

    def __rtruediv__(self, other: QPhi | Rationalish) -> QPhi:
        return QPhi.coerce(other) / self

    def __pow__(self, n: int) -> QPhi:
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else qphi_inv(self)
        n = abs(n)
        result = ONE
        while n:
            if n & 1:
                result = qphi_mul(result, base)
            base = qphi_mul(base, base)
            n >>= 1
        return result

    def conj(self) -> QPhi:
        """Galois conjugate, phi -> 1 - phi."""
        return QPhi(self._a + self._b, -self._b)

    def norm(self) -> Fraction:
        """``x * conj(x)``, always rational: a^2 + ab - b^2."""
        return self._a * self._a + self._a * self._b - self._b * self._b

    def trace(self) -> Fraction:
        return 2 * self._a + self._b

    def is_rational(self) -> bool:
        return self._b == 0

    def sign(self) -> int:
        return qphi_sign(self)

    def to_mpf(self, dps: int = 30) -> mpmath.mpf:
        with mpmath.workdps(dps + 10):
            phi = (1 + mpmath.sqrt(5)) / 2
            v = mpmath.mpf(self._a.numerator) / self._a.denominator + (
                mpmath.mpf(self._b.numerator) / self._b.denominator
            ) * phi
        return +v

    def __float__(self) -> float:
        return float(self.to_mpf(20))


ZERO = QPhi(0, 0)
ONE = QPhi(1, 0)
PHI = QPhi(0, 1)


def qphi_mul(x: QPhi, y: QPhi) -> QPhi:
    a1, b1, a2, b2 = x.a, x.b, y.a, y.b
    bb = b1 * b2
    return QPhi(a1 * a2 + bb, a1 * b2 + a2 * b1 + bb)


def qphi_inv(x: QPhi) -> QPhi:
    """Multiplicative inverse through the conjugate and the rational norm."""
    if not x:
        raise ZeroDivisionError("QPhi division by zero")
    n = x.norm()
    c = x.conj()
    return QPhi(c.a / n, c.b / n)


def qphi_sign(x: QPhi) -> int:
    """Exact sign of ``a + b*phi``.

    The value equals ``((2a + b) + b*sqrt 5) / 2``; when the rational and
    irrational terms disagree in sign, the larger square wins.
    """
    p = 2 * x.a + x.b
    q = x.b
    sp = (p > 0) - (p < 0)
    sq = (q > 0) - (q < 0)
    if sp == sq or sq == 0:
        return sp
    if sp == 0:
        return sq
    return sp if p * p > 5 * q * q else sq


def _floor_sqrt5_times(y: int) -> int:
    """floor(y * sqrt 5) for integer y."""
    if y >= 0:
        return isqrt(5 * y * y)
    # |y|*sqrt5 is irrational for y != 0, so its ceiling is isqrt + 1
    return -(isqrt(5 * y * y) + 1)


def qphi_to_float(x: QPhi, digits: int) -> str:
    """Decimal expansion of ``x`` truncated to ``digits`` places after the point.

    Every printed digit is a true digit of the expansion; the cut is decided
    with integer square roots, no floating point.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    neg = qphi_sign(x) < 0
    if neg:
        x = -x
    # x = (P + Q*sqrt5) / D with integers, D > 0
    p = 2 * x.a + x.b
    q = x.b
    den = p.denominator * q.denominator // gcd(p.denominator, q.denominator)
    P = p.numerator * (den // p.denominator)
    Q = q.numerator * (den // q.denominator)
    scale = 10**digits
    n = (scale * P + _floor_sqrt5_times(scale * Q)) // (2 * den)
    return _format_scaled(-n if neg else n, digits, negative=neg)


def _format_scaled(n: int, digits: int, negative: bool = False) -> str:
    sign = "-" if n < 0 or (negative and n == 0) else ""
    whole, frac = divmod(abs(n), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def mpf_to_decimal(value: mpmath.mpf, digits: int) -> str:
    """Round an mpf (computed with ample guard digits) to a fixed-point string."""
    with mpmath.workdps(digits + 30):
        n = int(mpmath.floor(value * mpmath.mpf(10) ** digits + mpmath.mpf(1) / 2))
    return _format_scaled(n, digits)


def qphi_sqrt(x: QPhi) -> QPhi | None:
    """Square root inside Q(phi) when ``x`` is a perfect square there, else None.

    Only the non-negative root is returned.  For ``q = s + t*phi`` with
    ``q*q = x``: ``N(q) = +-sqrt(N(x))`` and ``Tr(q)^2 = Tr(x) + 2 N(q)``, and
    ``t * Tr(q) = b``.
    """
    if x.sign() < 0:
        return None
    if not x:
        return ZERO
    nx = x.norm()
    rn = _rational_sqrt(nx)
    if rn is None:
        return None
    for n in (rn, -rn):
        tt = _rational_sqrt(x.trace() + 2 * n)
        if tt is None:
            continue
        for tr in (tt, -tt):
            if tr == 0:
                if x.b != 0:
                    continue
                # q = t*(phi - 1/2), i.e. q = t*sqrt5/2; q^2 = 5t^2/4 = a
                t = _rational_sqrt(x.a * Fraction(4, 5))
                if t is None:
                    continue
                cand = QPhi(-t / 2, t)
            else:
                t = x.b / tr
                cand = QPhi((tr - t) / 2, t)
            if cand * cand == x:
                return cand if cand.sign() >= 0 else -cand
    return None


def _rational_sqrt(r: Fraction) -> Fraction | None:
    if r < 0:
        return None
    n, d = r.numerator, r.denominator
    sn, sd = isqrt(n), isqrt(d)
    if sn * sn == n and sd * sd == d:
        return Fraction(sn, sd)
    return None


@total_ordering
class Radical:
    """``c * sqrt(d)`` with ``c, d`` in Q(phi), ``d >= 0``.

    Radicands are kept as given; ``Radical(PHI, PHI)`` and ``Radical(1, PHI**3)``
    are different forms of the same value and compare equal.
    """

    __slots__ = ("_c", "_d")

    def __init__(self, c: QPhi | Rationalish = 1, d: QPhi | Rationalish = 1) -> None:
        c = QPhi.coerce(c)
        d = QPhi.coerce(d)
        if d.sign() < 0:
            raise ValueError(f"negative radicand {d}")
        if not c or not d:
            c, d = ZERO, ZERO
        self._c = c
        self._d = d

    @property
    def c(self) -> QPhi:
        return self._c

    @property
    def d(self) -> QPhi:
        return self._d

    @classmethod
    def of(cls, x: Radical | QPhi | Rationalish) -> Radical:
        if isinstance(x, Radical):
            return x
        return cls(QPhi.coerce(x), ONE)

    @classmethod
    def parse(cls, text: str) -> Radical:
        m = re.match(r"^\s*\((.*)\)\*sqrt\((.*)\)\s*$", text)
        if not m:
            raise ValueError(f"not a Radical literal: {text!r}")
        return cls(QPhi.parse(m.group(1)), QPhi.parse(m.group(2)))

    def __repr__(self) -> str:
        return f"Radical({self._c!r}, {self._d!r})"

    def __str__(self) -> str:
        return f"({self._c})*sqrt({self._d})"

    def sign(self) -> int:
        return self._c.sign()

    def square(self) -> QPhi:
        return self._c * self._c * self._d

    def __hash__(self) -> int:
        return hash((self.sign(), self.square()))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (QPhi, int, Fraction)):
            other = Radical.of(other)
        if not isinstance(other, Radical):
            return NotImplemented
        return radical_cmp(self, other) == 0

    def __lt__(self, other: Radical | QPhi | Rationalish) -> bool:
        return radical_cmp(self, Radical.of(other)) < 0

    def __neg__(self) -> Radical:
        return Radical(-self._c, self._d)

    def __mul__(self, other: Radical | QPhi | Rationalish) -> Radical:
        if isinstance(other, Radical):
            return radical_mul(self, other)
        try:
            q = QPhi.coerce(other)
        except TypeError:
            return NotImplemented
        return Radical(self._c * q, self._d)

    __rmul__ = __mul__

    def __truediv__(self, other: QPhi | Rationalish) -> Radical:
        return Radical(self._c / QPhi.coerce(other), self._d)

    def to_mpf(self, dps: int = 30) -> mpmath.mpf:
        with mpmath.workdps(dps + 10):
            v = self._c.to_mpf(dps + 10) * mpmath.sqrt(self._d.to_mpf(dps + 10))
        return +v

    def to_decimal(self, digits: int) -> str:
        return mpf_to_decimal(self.to_mpf(digits + 20), digits)

    def __float__(self) -> float:
        return float(self.to_mpf(20))


def radical_mul(x: Radical, y: Radical) -> Radical:
    return Radical(x.c * y.c, x.d * y.d)


def radical_cmp(x: Radical, y: Radical) -> int:
    """Exact three-way comparison: -1, 0 or +1."""
    sx, sy = x.sign(), y.sign()
    if sx != sy:
        return -1 if sx < sy else 1
    if sx == 0:
        return 0
    diff = qphi_sign(x.square() - y.square())
    return diff if sx > 0 else -diff


def fib(n: int) -> int:
    """Fibonacci number with F_0 = 0, F_1 = 1."""
    if n < 0:
        raise ValueError("Fibonacci index must be non-negative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def phi_pow_decompose(n: int) -> tuple[int, int]:
    """Return ``(F_{n+1}, F_n)`` after checking ``phi**(n+1) == F_{n+1}*phi + F_n``.

    The power is built by repeated multiplication in Q(phi), so the identity is
    verified rather than assumed.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    power = PHI
    for _ in range(n):
        power = qphi_mul(power, PHI)
    f1, f0 = fib(n + 1), fib(n)
    if power != QPhi(f0, f1):
        raise ArithmeticError(f"phi^{n + 1} = {power} disagrees with F_{n + 1}*phi + F_{n}")
    return f1, f0
