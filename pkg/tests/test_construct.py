import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from goldenextremal import construct as cs
from goldenextremal.exactphi import ONE, PHI, QPhi, Radical, radical_cmp
from goldenextremal.goldenseq import tn_entry


@pytest.fixture(scope="module")
def t2():
    return cs.construct_T2()


def test_golden_rectangle():
    tr = cs.build_golden_rectangle()
    assert tr["A"].point_qphi() == (QPhi(0), PHI)
    assert tr["D"].point_qphi() == (QPhi(1), PHI)
    assert cs.exact_length(tr, "A", "B") == Radical.of(PHI)
    assert cs.exact_length(tr, "B", "C") == Radical.of(1)
    assert cs.exact_length(tr, "A", "C").square() == 1 + PHI * PHI
    rep = cs.verify_trace(tr, cs.golden_rectangle_claims())
    assert rep.ok and all(r.mode == "exact" for r in rep.results)


def test_golden_section_point_example():
    o = cs.golden_section_point(((0, 0), (1, 0)))
    assert o.point_qphi() == (PHI - 1, QPhi(0))


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_golden_section_point_ratio(px, py, qx, qy):
    if (px, py) == (qx, qy):
        with pytest.raises(cs.ConstructionError):
            cs.golden_section_point(((px, py), (qx, qy)))
        return
    o = cs.golden_section_point(((px, py), (qx, qy)))
    ox, oy = (float(v) for v in o.floats())
    po, oq = math.hypot(ox - px, oy - py), math.hypot(qx - ox, qy - oy)
    assert po / oq == pytest.approx((1 + math.sqrt(5)) / 2, rel=1e-12)
    # collinear with P and Q
    assert abs((qx - px) * (oy - py) - (qy - py) * (ox - px)) < 1e-9


def test_t2_certificate(t2):
    trace, cert = t2
    assert cert.ok
    assert cert.be2 == 2 * PHI
    assert cert.ec2 == PHI**3 == 1 + 2 * PHI
    assert cert.bo == Radical.of(1 / PHI)
    for got, want in zip(cert.sides, tn_entry(2).sides()):
        assert radical_cmp(got, want) == 0


def test_t2_coordinates(t2):
    trace, _ = t2
    assert trace["O"].point_qphi() == (PHI - 1, QPhi(0))
    ex, ey = trace["E"].floats()
    assert ex == 0.0
    assert ey == pytest.approx(math.sqrt(2 * (1 + math.sqrt(5)) / 2), rel=1e-14)


def test_numeric_shadow_agrees(t2):
    trace, _ = t2
    with mpmath.workdps(40):
        for key in ("A", "B", "C", "D", "E", "O"):
            obj = trace[key]
            for e, a in zip(obj.exact, obj.approx):
                assert abs(e.to_mpf(40) - a) < mpmath.mpf("1e-30")


def test_claims(t2):
    trace, _ = t2
    rep = cs.verify_trace(trace, [cs.RightAngleClaim("B", "E", "C")])
    assert rep.ok
    bad = cs.verify_trace(trace, [cs.LengthClaim("B", "E", Radical.of(PHI))])
    assert not bad.ok
    assert any("FAIL" in line for line in bad.lines())


def test_text_roundtrip(t2):
    trace, _ = t2
    text = trace.to_text()
    again = cs.ConstructionTrace.from_text(text)
    assert again.to_text() == text
    assert again["E"].exact == trace["E"].exact
    assert "E = intersect(extBA, arcE; beyond:B:A)" in text.splitlines()
    assert "O = golden_section_point(B, C; via=euclid)" in text.splitlines()


def test_step_parse():
    s = cs.parse_step("E = intersect(extBA, arcE; beyond:B:A)")
    assert s == cs.ConstructionStep("E", "intersect", ("extBA", "arcE"), "beyond:B:A")
    with pytest.raises(cs.ConstructionError):
        cs.parse_step("nonsense")
    with pytest.raises(cs.ConstructionError):
        cs.ConstructionStep("X", "teleport", ())


def test_unresolved_reference():
    steps = [cs.ConstructionStep("L", "line_through", ("P", "Q"))]
    with pytest.raises(cs.UnresolvedObjectError):
        cs.ConstructionTrace(tuple(steps))


def test_missing_selector_rejected():
    steps = cs.golden_rectangle_steps()
    bad = [s if s.output != "Q" else cs.ConstructionStep("Q", "intersect", s.inputs, "") for s in steps]
    with pytest.raises(cs.ConstructionError):
        cs.ConstructionTrace(tuple(bad))


def test_duplicate_id_rejected():
    s = cs.ConstructionStep("B", "place_point", (), cs.at_selector(0, 0))
    with pytest.raises(cs.ConstructionError):
        cs.ConstructionTrace((s, s))


def test_surd_arithmetic():
    r = cs.Surd(ONE, Radical(ONE, 2))
    assert (r * r) == cs.Surd(QPhi(3), Radical(QPhi(2), 2))
    assert r * r.inverse() == cs.Surd(ONE)
    with pytest.raises(cs.Inexact):
        cs.Surd(0, Radical(ONE, 2)) + cs.Surd(0, Radical(ONE, 3))
    assert cs.Surd(0, Radical(ONE, 4)) == cs.Surd(QPhi(2))
