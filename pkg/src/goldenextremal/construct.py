"""A small compass-and-straightedge engine with exact replay.

Every object carries 40-digit mpmath coordinates and, where they fit, exact
coordinates of the form ``u + c*sqrt(d)`` with ``u, c, d`` in Q(phi).  A
trace is an ordered list of steps; replaying it is deterministic and yields
the object table.  Two-point intersections always carry a selector.

Text form of a step::

    E = intersect(extBA, arcE; beyond:B:A)
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Literal, Sequence, Union

import mpmath

from .exactphi import ONE, PHI, ZERO, QPhi, Radical, qphi_sqrt, radical_cmp

DPS = 40
NUMERIC_TOL = mpmath.mpf("1e-25")

OPS = (
    "place_point",
    "line_through",
    "perpendicular_at",
    "circle_center_radius",
    "circle_center_through",
    "intersect",
    "golden_section_point",
    "extend_segment",
)


class ConstructionError(ValueError):
    pass


class UnresolvedObjectError(KeyError):
    pass


class Inexact(ArithmeticError):
    """The exact value leaves Q(phi)(sqrt d) for a single d."""


# ---------------------------------------------------------------- exact numbers


class Surd:
    """``u + r`` with ``u`` in Q(phi) and ``r = c*sqrt(d)`` a Radical.

    Radicands that are squares in Q(phi) are folded into ``u``.  Sums of
    radicals whose radicands differ by a non-square factor raise ``Inexact``.
    """

    __slots__ = ("u", "r")

    def __init__(self, u: QPhi | int | Fraction = 0, r: Radical | None = None) -> None:
        u = QPhi.coerce(u)
        if r is not None and r.sign() != 0:
            root = qphi_sqrt(r.d)
            if root is not None:
                u = u + r.c * root
                r = None
        else:
            r = None
        self.u = u
        self.r = r

    @classmethod
    def coerce(cls, x: Surd | QPhi | Radical | int | Fraction) -> Surd:
        if isinstance(x, Surd):
            return x
        if isinstance(x, Radical):
            return cls(0, x)
        return cls(x)

    @property
    def is_pure(self) -> bool:
        return self.r is None

    def __repr__(self) -> str:
        return f"Surd({self.u!s}, {self.r!s})" if self.r else f"Surd({self.u!s})"

    def __str__(self) -> str:
        return str(self.u) if self.r is None else f"{self.u} + {self.r}"

    @staticmethod
    def _align(x: Radical | None, y: Radical | None) -> tuple[QPhi, QPhi, QPhi]:
        if x is None and y is None:
            return ZERO, ZERO, ONE
        if x is None:
            return ZERO, y.c, y.d
        if y is None:
            return x.c, ZERO, x.d
        if x.d == y.d:
            return x.c, y.c, x.d
        k = qphi_sqrt(x.d / y.d)
        if k is None:
            raise Inexact(f"incommensurable radicands {x.d} and {y.d}")
        return x.c * k, y.c, y.d

    def __add__(self, other) -> Surd:
        o = Surd.coerce(other)
        c1, c2, d = self._align(self.r, o.r)
        return Surd(self.u + o.u, Radical(c1 + c2, d) if c1 + c2 else None)

    __radd__ = __add__

    def __neg__(self) -> Surd:
        return Surd(-self.u, -self.r if self.r else None)

    def __sub__(self, other) -> Surd:
        return self + (-Surd.coerce(other))

    def __rsub__(self, other) -> Surd:
        return Surd.coerce(other) - self

    def __mul__(self, other) -> Surd:
        o = Surd.coerce(other)
        c1, c2, d = self._align(self.r, o.r)
        u = self.u * o.u + c1 * c2 * d
        c = self.u * c2 + o.u * c1
        return Surd(u, Radical(c, d) if c else None)

    __rmul__ = __mul__

    def inverse(self) -> Surd:
        if self.r is None:
            return Surd(1 / self.u)
        c, d = self.r.c, self.r.d
        den = self.u * self.u - c * c * d
        if not den:
            raise ZeroDivisionError("Surd division by zero")
        return Surd(self.u / den, Radical(-c / den, d))

    def __truediv__(self, other) -> Surd:
        return self * Surd.coerce(other).inverse()

    def __rtruediv__(self, other) -> Surd:
        return Surd.coerce(other) * self.inverse()

    def sign(self) -> int:
        su = self.u.sign()
        if self.r is None:
            return su
        sc = self.r.sign()
        if su == sc or su == 0:
            return sc
        diff = (self.u * self.u - self.r.square()).sign()
        if diff == 0:
            return 0
        return su if diff > 0 else sc

    def __eq__(self, other: object) -> bool:
        try:
            return (self - Surd.coerce(other)).sign() == 0  # type: ignore[arg-type]
        except (TypeError, Inexact):
            return False

    def __hash__(self) -> int:
        return hash((self.u, self.r))

    def to_mpf(self, dps: int = DPS) -> mpmath.mpf:
        v = self.u.to_mpf(dps)
        if self.r is not None:
            v = v + self.r.to_mpf(dps)
        return v

    def sqrt(self) -> Surd:
        if self.r is not None:
            raise Inexact("square root of a surd with a radical part")
        if self.u.sign() < 0:
            raise ConstructionError("square root of a negative number")
        return Surd(0, Radical(ONE, self.u))

    def as_radical(self) -> Radical:
        """The value as ``c*sqrt(d)``; only possible when one of the parts is zero."""
        if self.r is None:
            return Radical.of(self.u)
        if not self.u:
            return self.r
        raise Inexact(f"{self} is not a single radical")


def _mp_sqrt(x: mpmath.mpf) -> mpmath.mpf:
    if x < 0:
        if x > -NUMERIC_TOL:
            return mpmath.mpf(0)
        raise ConstructionError("square root of a negative number")
    return mpmath.sqrt(x)


def _surd_sqrt(x: Surd) -> Surd:
    return x.sqrt()


# ---------------------------------------------------------------- objects and steps

Kind = Literal["point", "line", "circle"]
Num = Union[Surd, mpmath.mpf]


@dataclass(frozen=True)
class GeomObject:
    """A resolved object.

    ``exact`` / ``approx`` hold ``(x, y)`` for points, ``(px, py, vx, vy)``
    (anchor and direction) for lines and ``(cx, cy, r^2)`` for circles.
    ``refs`` names the defining objects, used for drawing.
    """

    kind: Kind
    id: str
    exact: tuple[Surd, ...] | None
    approx: tuple[mpmath.mpf, ...]
    refs: tuple[str, ...] = ()
    ray: bool = False

    def point_qphi(self) -> tuple[QPhi, QPhi]:
        if self.kind != "point" or self.exact is None or not all(c.is_pure for c in self.exact):
            raise Inexact(f"{self.id} has no Q(phi) coordinates")
        return (self.exact[0].u, self.exact[1].u)

    def floats(self) -> tuple[float, ...]:
        return tuple(float(v) for v in self.approx)


@dataclass(frozen=True)
class ConstructionStep:
    output: str
    op: str
    inputs: tuple[str, ...] = ()
    selector: str = ""

    def __post_init__(self) -> None:
        if self.op not in OPS:
            raise ConstructionError(f"unknown op {self.op!r}")

    def to_text(self) -> str:
        return f"{self.output} = {self.op}({', '.join(self.inputs)}; {self.selector})"


_STEP_RE = re.compile(r"^\s*(\S+)\s*=\s*(\w+)\(([^;]*);\s?(.*)\)\s*$")


def parse_step(line: str) -> ConstructionStep:
    m = _STEP_RE.match(line)
    if not m:
        raise ConstructionError(f"malformed step: {line!r}")
    out, op, ins, sel = m.groups()
    inputs = tuple(s.strip() for s in ins.split(",") if s.strip())
    return ConstructionStep(out, op, inputs, sel)


@dataclass
class ConstructionTrace:
    steps: tuple[ConstructionStep, ...]
    objects: dict[str, GeomObject] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.objects:
            self.objects = replay(self.steps)

    def __getitem__(self, key: str) -> GeomObject:
        try:
            return self.objects[key]
        except KeyError:
            raise UnresolvedObjectError(key) from None

    def to_text(self) -> str:
        return "".join(s.to_text() + "\n" for s in self.steps)

    @classmethod
    def from_text(cls, text: str) -> ConstructionTrace:
        steps = tuple(parse_step(ln) for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#"))
        return cls(steps)

    def extend(self, steps: Sequence[ConstructionStep]) -> ConstructionTrace:
        return ConstructionTrace(self.steps + tuple(steps))


# ---------------------------------------------------------------- geometry kernels
# Each kernel is written once over a generic number type and run twice: on
# Surd with an exact square root and on mpf.


def _both(fn: Callable, exact_args, approx_args) -> tuple[tuple | None, tuple]:
    with mpmath.workdps(DPS):
        approx = fn(*approx_args, _mp_sqrt)
    exact = None
    if exact_args is not None and all(a is not None for a in exact_args):
        try:
            exact = fn(*exact_args, _surd_sqrt)
        except (Inexact, ZeroDivisionError, ConstructionError):
            exact = None
    return exact, approx


def _k_sub(p, q, _sqrt):
    return (p[0] - q[0], p[1] - q[1])


def _k_perp(v, _sqrt):
    return (-v[1], v[0])


def _k_dist2(p, q, _sqrt):
    dx, dy = p[0] - q[0], p[1] - q[1]
    return (dx * dx + dy * dy,)


def _k_line_line(p1, v1, p2, v2, _sqrt):
    det = v1[0] * v2[1] - v1[1] * v2[0]
    if det == 0:
        raise ConstructionError("parallel lines do not meet")
    w = (p2[0] - p1[0], p2[1] - p1[1])
    s = (w[0] * v2[1] - w[1] * v2[0]) / det
    return ((p1[0] + s * v1[0], p1[1] + s * v1[1]),)


def _k_line_circle(p, v, c, r2, sqrt):
    w = (p[0] - c[0], p[1] - c[1])
    a = v[0] * v[0] + v[1] * v[1]
    b = 2 * (w[0] * v[0] + w[1] * v[1])
    cc = w[0] * w[0] + w[1] * w[1] - r2
    root = sqrt(b * b - 4 * a * cc)
    out = []
    for t in ((-b - root) / (2 * a), (-b + root) / (2 * a)):
        out.append((p[0] + t * v[0], p[1] + t * v[1]))
    return tuple(out)


def _k_radical_axis(c1, r1, c2, r2, _sqrt):
    n = (c2[0] - c1[0], c2[1] - c1[1])
    n2 = n[0] * n[0] + n[1] * n[1]
    k = (r1 - r2 + n2) / (2 * n2)
    return ((c1[0] + k * n[0], c1[1] + k * n[1]), (-n[1], n[0]))


def _circle_circle(c1, r1, c2, r2, sqrt):
    p, v = _k_radical_axis(c1, r1, c2, r2, sqrt)
    return _k_line_circle(p, v, c1, r1, sqrt)


# ---------------------------------------------------------------- replay


def _pt(obj: GeomObject, exact: bool):
    data = obj.exact if exact else obj.approx
    return None if data is None else (data[0], data[1])


def _line_parts(obj: GeomObject, exact: bool):
    data = obj.exact if exact else obj.approx
    return (None, None) if data is None else ((data[0], data[1]), (data[2], data[3]))


def _circle_parts(obj: GeomObject, exact: bool):
    data = obj.exact if exact else obj.approx
    return (None, None) if data is None else ((data[0], data[1]), data[2])


def _param_on(x, p, q) -> mpmath.mpf:
    d = (q[0] - p[0], q[1] - p[1])
    return ((x[0] - p[0]) * d[0] + (x[1] - p[1]) * d[1]) / (d[0] ** 2 + d[1] ** 2)


def _select(cands: Sequence[tuple], selector: str, table: dict[str, GeomObject]) -> int:
    """Index of the candidate picked by the selector (evaluated on mpf values)."""
    sel = selector.strip()
    if not sel:
        if len(cands) != 1:
            raise ConstructionError("two-point intersection needs a selector")
        return 0
    if sel in ("x_max", "x_min", "y_max", "y_min"):
        axis = 0 if sel[0] == "x" else 1
        vals = [c[axis] for c in cands]
        if len(vals) > 1 and abs(vals[0] - vals[1]) < NUMERIC_TOL:
            raise ConstructionError(f"selector {sel} is ambiguous")
        best = max(vals) if sel.endswith("max") else min(vals)
        return vals.index(best)
    kind, *ids = sel.split(":")
    if len(ids) != 2:
        raise ConstructionError(f"bad selector {selector!r}")
    p, q = (_pt(_lookup(table, i), False) for i in ids)
    if kind == "beyond":
        ok = [_param_on(c, p, q) > 1 + NUMERIC_TOL for c in cands]
    elif kind == "between":
        ok = [-NUMERIC_TOL <= _param_on(c, p, q) <= 1 + NUMERIC_TOL for c in cands]
    elif kind in ("left_of", "right_of"):
        sgn = 1 if kind == "left_of" else -1
        ok = [
            sgn * ((q[0] - p[0]) * (c[1] - p[1]) - (q[1] - p[1]) * (c[0] - p[0])) > NUMERIC_TOL
            for c in cands
        ]
    else:
        raise ConstructionError(f"unknown selector {selector!r}")
    hits = [i for i, good in enumerate(ok) if good]
    if len(hits) != 1:
        raise ConstructionError(f"selector {selector!r} matched {len(hits)} intersection points")
    return hits[0]


def _lookup(table: dict[str, GeomObject], key: str) -> GeomObject:
    try:
        return table[key]
    except KeyError:
        raise UnresolvedObjectError(key) from None


def _parse_at(selector: str) -> tuple[QPhi, QPhi]:
    m = re.match(r"^\s*at=\((.*)\|(.*)\)\s*$", selector)
    if not m:
        raise ConstructionError(f"place_point needs 'at=(x | y)', got {selector!r}")
    return QPhi.parse(m.group(1)), QPhi.parse(m.group(2))


def at_selector(x: QPhi | int, y: QPhi | int) -> str:
    return f"at=({QPhi.coerce(x)} | {QPhi.coerce(y)})"


def _apply(step: ConstructionStep, table: dict[str, GeomObject]) -> None:
    out = step.output
    if out in table:
        raise ConstructionError(f"duplicate object id {out!r}")
    ins = [_lookup(table, i) for i in step.inputs]
    op = step.op

    def need(*kinds: Kind) -> None:
        if tuple(o.kind for o in ins) != kinds:
            raise ConstructionError(f"{op} expects {kinds}, got {tuple(o.kind for o in ins)}")

    if op == "place_point":
        need()
        x, y = _parse_at(step.selector)
        ex = (Surd(x), Surd(y))
        table[out] = GeomObject("point", out, ex, tuple(c.to_mpf() for c in ex))
    elif op in ("line_through", "extend_segment"):
        need("point", "point")
        p, q = ins
        if p.approx == q.approx:
            raise ConstructionError("a line needs two distinct points")
        ex, ap = _both(_k_sub, (_pt(q, True), _pt(p, True)), (_pt(q, False), _pt(p, False)))
        table[out] = GeomObject(
            "line",
            out,
            None if ex is None else _pt(p, True) + ex,
            _pt(p, False) + ap,
            refs=(p.id, q.id),
            ray=op == "extend_segment",
        )
    elif op == "perpendicular_at":
        need("line", "point")
        ln, p = ins
        ex, ap = _both(_k_perp, (_line_parts(ln, True)[1],), (_line_parts(ln, False)[1],))
        table[out] = GeomObject(
            "line", out, None if ex is None or p.exact is None else _pt(p, True) + ex,
            _pt(p, False) + ap, refs=(p.id,),
        )
    elif op in ("circle_center_through", "circle_center_radius"):
        if op == "circle_center_through":
            need("point", "point")
            ctr, a, b = ins[0], ins[0], ins[1]
        else:
            need("point", "point", "point")
            ctr, a, b = ins
        ex, ap = _both(_k_dist2, (_pt(a, True), _pt(b, True)), (_pt(a, False), _pt(b, False)))
        table[out] = GeomObject(
            "circle", out, None if ex is None or ctr.exact is None else _pt(ctr, True) + ex,
            _pt(ctr, False) + ap, refs=tuple(o.id for o in ins),
        )
    elif op == "intersect":
        if len(ins) != 2:
            raise ConstructionError("intersect takes two objects")
        kinds = (ins[0].kind, ins[1].kind)
        if kinds == ("line", "line"):
            fn = _k_line_line
            args = [_line_parts(ins[0], m) + _line_parts(ins[1], m) for m in (True, False)]
        elif "point" in kinds:
            raise ConstructionError("cannot intersect a point")
        elif kinds[0] == "circle" and kinds[1] == "circle":
            fn = _circle_circle
            args = [_circle_parts(ins[0], m) + _circle_parts(ins[1], m) for m in (True, False)]
        else:
            ln, cir = (ins[0], ins[1]) if kinds[0] == "line" else (ins[1], ins[0])
            fn = _k_line_circle
            args = [_line_parts(ln, m) + _circle_parts(cir, m) for m in (True, False)]
        ex_args = None if any(a is None for a in args[0]) else args[0]
        ex, ap = _both(fn, ex_args, args[1])
        k = _select(ap, step.selector, table)
        table[out] = GeomObject(
            "point", out, None if ex is None else ex[k], ap[k], refs=tuple(o.id for o in ins)
        )
    elif op == "golden_section_point":
        need("point", "point")
        for sub in golden_section_substeps(out, step.inputs[0], step.inputs[1], step.selector):
            _apply(sub, table)
    else:  # pragma: no cover - guarded by ConstructionStep
        raise ConstructionError(op)


def golden_section_substeps(out: str, p: str, q: str, selector: str = "via=euclid") -> list[ConstructionStep]:
    """Classical sub-construction of the point dividing PQ with ``|PO| / |OQ| = phi``.

    Erect ``QF = PQ / 2`` perpendicular at Q, cut ``PF`` at G with the circle
    about F through Q, then carry ``PG`` onto ``PQ``.  Sub-objects are named
    ``<out>.<name>``.
    """
    if selector.strip() not in ("", "via=euclid"):
        raise ConstructionError(f"unknown golden-section sub-construction {selector!r}")
    n = lambda s: f"{out}.{s}"  # noqa: E731
    S = ConstructionStep
    return [
        S(n("line"), "line_through", (p, q)),
        S(n("perp"), "perpendicular_at", (n("line"), q)),
        S(n("k1"), "circle_center_through", (p, q)),
        S(n("k2"), "circle_center_through", (q, p)),
        S(n("X1"), "intersect", (n("k1"), n("k2")), f"left_of:{p}:{q}"),
        S(n("X2"), "intersect", (n("k1"), n("k2")), f"right_of:{p}:{q}"),
        S(n("bis"), "line_through", (n("X1"), n("X2"))),
        S(n("N"), "intersect", (n("bis"), n("line"))),
        S(n("cN"), "circle_center_through", (q, n("N"))),
        S(n("F"), "intersect", (n("perp"), n("cN")), f"left_of:{p}:{q}"),
        S(n("PF"), "line_through", (p, n("F"))),
        S(n("cF"), "circle_center_through", (n("F"), q)),
        S(n("G"), "intersect", (n("PF"), n("cF")), f"between:{p}:{n('F')}"),
        S(n("cG"), "circle_center_through", (p, n("G"))),
        S(out, "intersect", (n("line"), n("cG")), f"between:{p}:{q}"),
    ]


def replay(steps: Sequence[ConstructionStep]) -> dict[str, GeomObject]:
    table: dict[str, GeomObject] = {}
    for step in steps:
        _apply(step, table)
    return table


# ---------------------------------------------------------------- constructions


def _S(out: str, op: str, *inputs: str, sel: str = "") -> ConstructionStep:
    return ConstructionStep(out, op, tuple(inputs), sel)


def golden_rectangle_steps() -> list[ConstructionStep]:
    """Square on BC, midpoint M of its left side, arc about M through the far corner."""
    return [
        _S("B", "place_point", sel=at_selector(0, 0)),
        _S("C", "place_point", sel=at_selector(1, 0)),
        _S("bc", "line_through", "B", "C"),
        _S("pB", "perpendicular_at", "bc", "B"),
        _S("cB", "circle_center_through", "B", "C"),
        _S("Q", "intersect", "pB", "cB", sel="y_max"),
        _S("pC", "perpendicular_at", "bc", "C"),
        _S("cC", "circle_center_through", "C", "B"),
        _S("P", "intersect", "pC", "cC", sel="y_max"),
        _S("k1", "circle_center_through", "B", "Q"),
        _S("k2", "circle_center_through", "Q", "B"),
        _S("X1", "intersect", "k1", "k2", sel="x_min"),
        _S("X2", "intersect", "k1", "k2", sel="x_max"),
        _S("bis", "line_through", "X1", "X2"),
        _S("M", "intersect", "bis", "pB"),
        _S("arcA", "circle_center_through", "M", "P"),
        _S("A", "intersect", "pB", "arcA", sel="beyond:B:Q"),
        _S("pA", "perpendicular_at", "pB", "A"),
        _S("D", "intersect", "pA", "pC"),
    ]


def build_golden_rectangle() -> ConstructionTrace:
    return ConstructionTrace(tuple(golden_rectangle_steps()))


def t2_steps() -> list[ConstructionStep]:
    return golden_rectangle_steps() + [
        _S("O", "golden_section_point", "B", "C", sel="via=euclid"),
        _S("arcE", "circle_center_radius", "O", "A", "C"),
        _S("extBA", "extend_segment", "B", "A"),
        _S("E", "intersect", "extBA", "arcE", sel="beyond:B:A"),
        _S("EC", "line_through", "E", "C"),
    ]


def golden_section_point(segment: tuple[tuple, tuple]) -> GeomObject:
    """Point O on PQ with ``|PO| / |OQ| = phi``, found by replaying the construction."""
    (px, py), (qx, qy) = segment
    P = tuple(QPhi.coerce(c) for c in (px, py))
    Q = tuple(QPhi.coerce(c) for c in (qx, qy))
    if P == Q:
        raise ConstructionError("degenerate segment")
    trace = ConstructionTrace(
        (
            _S("P", "place_point", sel=at_selector(*P)),
            _S("Q", "place_point", sel=at_selector(*Q)),
            _S("O", "golden_section_point", "P", "Q", sel="via=euclid"),
        )
    )
    return trace["O"]


# ---------------------------------------------------------------- claims


@dataclass(frozen=True)
class LengthClaim:
    """``|PQ| = value``."""

    p: str
    q: str
    value: Radical

    def describe(self) -> str:
        return f"|{self.p}{self.q}| = {self.value}"

    def exact(self, t: ConstructionTrace) -> bool:
        d2 = _dist2_exact(t, self.p, self.q)
        return (d2 - self.value.square()).sign() == 0 and self.value.sign() >= 0

    def numeric(self, t: ConstructionTrace) -> mpmath.mpf:
        return abs(mpmath.sqrt(_dist2_approx(t, self.p, self.q)) - self.value.to_mpf(DPS))


@dataclass(frozen=True)
class RatioClaim:
    """``|PQ| / |RS| = value``."""

    p: str
    q: str
    r: str
    s: str
    value: Radical

    def describe(self) -> str:
        return f"|{self.p}{self.q}|/|{self.r}{self.s}| = {self.value}"

    def exact(self, t: ConstructionTrace) -> bool:
        lhs = _dist2_exact(t, self.p, self.q)
        rhs = _dist2_exact(t, self.r, self.s) * Surd(self.value.square())
        return (lhs - rhs).sign() == 0 and self.value.sign() > 0

    def numeric(self, t: ConstructionTrace) -> mpmath.mpf:
        with mpmath.workdps(DPS):
            ratio = mpmath.sqrt(_dist2_approx(t, self.p, self.q) / _dist2_approx(t, self.r, self.s))
            return abs(ratio - self.value.to_mpf(DPS))


@dataclass(frozen=True)
class RightAngleClaim:
    """The angle at ``vertex`` between rays to ``p`` and ``q`` is right."""

    vertex: str
    p: str
    q: str

    def describe(self) -> str:
        return f"angle {self.p}{self.vertex}{self.q} = 90 deg"

    def exact(self, t: ConstructionTrace) -> bool:
        v, a, b = (_exact_point(t, i) for i in (self.vertex, self.p, self.q))
        dot = (a[0] - v[0]) * (b[0] - v[0]) + (a[1] - v[1]) * (b[1] - v[1])
        return dot.sign() == 0

    def numeric(self, t: ConstructionTrace) -> mpmath.mpf:
        v, a, b = (t[i].approx for i in (self.vertex, self.p, self.q))
        with mpmath.workdps(DPS):
            return abs((a[0] - v[0]) * (b[0] - v[0]) + (a[1] - v[1]) * (b[1] - v[1]))


Claim = Union[LengthClaim, RatioClaim, RightAngleClaim]


def _exact_point(t: ConstructionTrace, key: str) -> tuple[Surd, Surd]:
    obj = t[key]
    if obj.kind != "point":
        raise ConstructionError(f"{key} is not a point")
    if obj.exact is None:
        raise Inexact(f"{key} has no exact coordinates")
    return obj.exact[0], obj.exact[1]


def _dist2_exact(t: ConstructionTrace, p: str, q: str) -> Surd:
    return _k_dist2(_exact_point(t, p), _exact_point(t, q), None)[0]


def _dist2_approx(t: ConstructionTrace, p: str, q: str) -> mpmath.mpf:
    a, b = t[p].approx, t[q].approx
    with mpmath.workdps(DPS):
        return (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2


def exact_length(t: ConstructionTrace, p: str, q: str) -> Radical:
    """``|PQ|`` as a Radical (requires a Q(phi) squared distance)."""
    d2 = _dist2_exact(t, p, q)
    if not d2.is_pure:
        raise Inexact(f"|{p}{q}|^2 = {d2} is outside Q(phi)")
    return Radical(ONE, d2.u)


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    passed: bool
    mode: Literal["exact", "numeric"]


@dataclass
class VerifyReport:
    results: list[ClaimResult]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        return [f"{r.claim} [{r.mode}]: {'OK' if r.passed else 'FAIL'}" for r in self.results]


def verify_trace(trace: ConstructionTrace, claims: Sequence[Claim]) -> VerifyReport:
    """Check each claim exactly when possible, else at 40 digits within 1e-25."""
    results = []
    for claim in claims:
        for key in _claim_ids(claim):
            trace[key]  # raises UnresolvedObjectError
        try:
            passed, mode = claim.exact(trace), "exact"
        except Inexact:
            passed, mode = claim.numeric(trace) <= NUMERIC_TOL, "numeric"
        results.append(ClaimResult(claim.describe(), bool(passed), mode))
    return VerifyReport(results)


def _claim_ids(claim: Claim) -> tuple[str, ...]:
    if isinstance(claim, LengthClaim):
        return (claim.p, claim.q)
    if isinstance(claim, RatioClaim):
        return (claim.p, claim.q, claim.r, claim.s)
    return (claim.vertex, claim.p, claim.q)


def golden_rectangle_claims() -> list[Claim]:
    return [
        LengthClaim("A", "B", Radical.of(PHI)),
        LengthClaim("B", "C", Radical.of(1)),
        LengthClaim("C", "D", Radical.of(PHI)),
        LengthClaim("A", "D", Radical.of(1)),
        RatioClaim("A", "B", "B", "C", Radical.of(PHI)),
        LengthClaim("A", "C", Radical(ONE, 1 + PHI * PHI)),
        RightAngleClaim("B", "A", "C"),
    ]


def t2_claims() -> list[Claim]:
    return [
        LengthClaim("B", "O", Radical.of(PHI - 1)),
        RatioClaim("B", "O", "O", "C", Radical.of(PHI)),
        LengthClaim("E", "O", Radical(ONE, 1 + PHI * PHI)),
        LengthClaim("B", "E", Radical(ONE, 2 * PHI)),
        LengthClaim("E", "C", Radical(PHI, PHI)),
        RightAngleClaim("B", "E", "C"),
    ]


@dataclass
class TriangleCertificate:
    bo: Radical
    eo2: QPhi
    be2: QPhi
    ec2: QPhi
    sides: tuple[Radical, Radical, Radical]
    pythagoras: bool
    matches_t2: bool
    claims: VerifyReport

    @property
    def ok(self) -> bool:
        return (
            self.pythagoras
            and self.matches_t2
            and self.claims.ok
            and self.be2 == 2 * PHI
            and self.ec2 == PHI**3
            and self.bo == Radical.of(1 / PHI)
        )


def construct_T2() -> tuple[ConstructionTrace, TriangleCertificate]:
    """Golden rectangle, golden section O of BC, arc about O with radius AC to E.

    The certificate shows exactly that triangle EBC has sides
    (1, sqrt(2 phi), phi sqrt(phi)) and coincides with T_2.
    """
    from .goldenseq import tn_entry

    trace = ConstructionTrace(tuple(t2_steps()))
    bc = exact_length(trace, "B", "C")
    be = exact_length(trace, "B", "E")
    ec = exact_length(trace, "E", "C")
    bo = exact_length(trace, "B", "O")
    eo = exact_length(trace, "E", "O")
    ac = exact_length(trace, "A", "C")
    t2 = tn_entry(2)
    matches = all(radical_cmp(a, b) == 0 for a, b in zip((bc, be, ec), t2.sides()))
    cert = TriangleCertificate(
        bo=bo,
        eo2=eo.square(),
        be2=be.square(),
        ec2=ec.square(),
        sides=(bc, be, ec),
        pythagoras=bc.square() + be.square() == ec.square() and eo.square() == ac.square(),
        matches_t2=matches,
        claims=verify_trace(trace, t2_claims()),
    )
    return trace, cert
