import json
import random
from fractions import Fraction

import pytest

import randgen
from polysurj.changevars import (
    AddXPolyToY,
    AddYPolyToX,
    ChangeOfVars,
    CongruenceTarget,
    DegreePair,
    ParamCurve,
    ScaleX,
    ScaleY,
    Swap,
    abhyankar_moh_normalize,
    apply_curve,
    apply_point,
    pole_reduce_at_infinity,
    transport_target,
)
from polysurj.errors import NotEmbeddedLine, NotLaurent
from polysurj.exactmath import QuadraticNumber
from polysurj.polyalg import BiPoly, LaurentPoly, RationalFunction, UniPoly

t = UniPoly.t()
T = RationalFunction.t()
X, Y = BiPoly.x(), BiPoly.y()


def test_apply_point_examples():
    assert apply_point(Swap(), (2, 5)) == (5, 2)
    assert apply_point(AddXPolyToY(t**2), (3, 1)) == (3, 10)
    c = ChangeOfVars((ScaleX(Fraction(1, 2)),))
    assert c.inverse().apply_point(c.apply_point((7, 9))) == (7, 9)


def test_inverse_structure():
    c = ChangeOfVars((Swap(), ScaleY(3), AddXPolyToY(t + 1)))
    assert c.inverse().ops == (AddXPolyToY(-t - 1), ScaleY(Fraction(1, 3)), Swap())


def test_scale_zero_rejected():
    with pytest.raises(ValueError):
        ScaleX(0)


def test_poly_convention():
    # transformed polynomial evaluated at the transformed point gives F(point)
    F = X * Y - 1
    op = AddXPolyToY(t**2)
    assert op.apply_poly(F) == X * Y - X**3 - 1
    P = (Fraction(2), Fraction(3))
    assert op.apply_poly(F)(*op.apply_point(P)) == F(*P)


def test_round_trip_random():
    rng = random.Random(1)
    for _ in range(500):
        c = randgen.cov(rng, 5, 4)
        inv = c.inverse()
        for _ in range(100 // 10):
            P = (randgen.rational(rng, 50, 9), randgen.rational(rng, 50, 9))
            assert inv.apply_point(c.apply_point(P)) == P


def test_polynomial_round_trip_random():
    rng = random.Random(2)
    for _ in range(100):
        c = randgen.cov(rng, 4, 3)
        F = BiPoly({(rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-5, 5) for _ in range(4)})
        assert c.inverse().apply_poly(c.apply_poly(F)) == F


def test_coherence_random():
    rng = random.Random(3)
    for _ in range(200):
        c = randgen.cov(rng, 4, 3)
        F = BiPoly({(rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-5, 5) for _ in range(4)})
        G = c.apply_poly(F)
        for _ in range(5):
            P = (randgen.rational(rng), randgen.rational(rng))
            assert G(*c.apply_point(P)) == F(*P)


def test_json_round_trip():
    c = ChangeOfVars((Swap(), ScaleX(Fraction(2, 3)), ScaleY(-1), AddXPolyToY(-(t**3)), AddYPolyToX(t.scale(Fraction(1, 2)) + 2)))
    data = json.loads(json.dumps(c.to_json()))
    assert data[3] == {"op": "addXtoY", "poly": "-x^3"}
    assert ChangeOfVars.from_json(data) == c


def test_json_round_trip_random():
    rng = random.Random(4)
    for _ in range(200):
        c = randgen.cov(rng, 5, 4)
        assert ChangeOfVars.from_json(c.to_json()) == c


# --- curves ---------------------------------------------------------------------


def test_apply_curve_examples():
    c = apply_curve(AddXPolyToY(-(t**3)), ParamCurve(T, T**3 + 2 * T))
    assert (c.f, c.g) == (T, 2 * T)
    c = apply_curve(Swap(), ParamCurve(T, RationalFunction(UniPoly())))
    assert c.f.is_zero() and c.g == T
    c = apply_curve(AddXPolyToY(-(t**2)), ParamCurve(T, T**2 + 1 / T))
    assert (c.f, c.g) == (T, 1 / T)


def test_laurent_input():
    c = ParamCurve(LaurentPoly({1: 1}), LaurentPoly({2: 1, -1: 1}))
    assert c.domain == "punctured"


def test_degree_pair_order():
    assert DegreePair(1, 3).precedes(DegreePair(3, 2))
    assert not DegreePair(2, 2).precedes(DegreePair(1, 5))


def test_am_examples():
    cov, final = abhyankar_moh_normalize(ParamCurve(T, T**3 + 2 * T))
    assert cov.ops == (AddXPolyToY(-(t**3)), AddXPolyToY(-2 * t))
    assert (final.f, final.g) == (T, RationalFunction(UniPoly()))
    cov, final = abhyankar_moh_normalize(ParamCurve(T, RationalFunction(UniPoly())))
    assert len(cov) == 0
    with pytest.raises(NotEmbeddedLine):
        abhyankar_moh_normalize(ParamCurve(T**2, T**3))


def test_am_ties_reduce_g():
    cov, final = abhyankar_moh_normalize(ParamCurve(T**2 + T, T**2))
    assert isinstance(cov.ops[0], AddXPolyToY)
    assert final.is_axis()


def test_am_random_scrambles():
    rng = random.Random(5)
    for _ in range(100):
        a = randgen.nonzero_rational(rng)
        b = randgen.rational(rng)
        axis = ParamCurve(RationalFunction(UniPoly([b, a])), RationalFunction(UniPoly()))
        scramble = randgen.cov(rng, 4, 3)
        f, g = scramble.apply_curve(axis.f, axis.g)
        curve = ParamCurve(f, g)
        cov, final = abhyankar_moh_normalize(curve)
        assert final.is_axis() and final.g.is_zero()
        for s in range(-10, 10):
            assert cov.apply_point(curve(Fraction(s))) == final(Fraction(s))


def test_am_progress():
    curve = ParamCurve(T**2 + 3 * T, (T**2 + 3 * T) ** 2 + T)
    cov, final = abhyankar_moh_normalize(curve)
    totals = []
    cur = curve
    for op in cov:
        totals.append(cur.degrees().total)
        cur = apply_curve(op, cur)
    assert all(a > b for a, b in zip(totals, totals[1:]))
    assert len(cov) <= curve.degrees().total


def test_pole_reduce_examples():
    r = pole_reduce_at_infinity(ParamCurve(T, T**2 + 1 / T))
    assert r.kind == "SeparatedPoints" and len(r.cov) == 1
    assert (r.curve.f, r.curve.g) == (T, 1 / T)
    r = pole_reduce_at_infinity(ParamCurve(T, 1 / T))
    assert r.kind == "SeparatedPoints" and len(r.cov) == 0
    with pytest.raises(NotLaurent):
        pole_reduce_at_infinity(ParamCurve(T, T**2))


def test_pole_reduce_recovers_step():
    # separated curve with punctures at +-sqrt 2, scrambled by y -> y + x^2
    base = ParamCurve(1 / (T**2 - 2), T / (T**2 - 2))
    r0 = pole_reduce_at_infinity(base)
    assert r0.kind == "SeparatedPoints"
    scrambled = apply_curve(AddXPolyToY(t**2), base)
    r = pole_reduce_at_infinity(scrambled)
    assert r.kind == "SeparatedPoints"
    assert r.cov.ops == (AddXPolyToY(-(t**2)),)


def test_pole_reduce_irrational():
    curve = ParamCurve(1 / (T**2 - 2), T / (T**2 - 2) ** 2)
    r = pole_reduce_at_infinity(curve)
    assert r.kind == "IrrationalAsymptotic" and r.d == 2
    assert isinstance(r.A, QuadraticNumber) and r.A.D == 2
    r2 = pole_reduce_at_infinity(apply_curve(AddXPolyToY(t**3), curve))
    assert r2.kind == "IrrationalAsymptotic" and r2.A == r.A and r2.d == 2
    assert r2.cov.ops == (AddXPolyToY(-(t**3)),)


def test_pole_order_decreases():
    curve = ParamCurve(T, T**4 - 3 * T**2 + 2 / T)
    r = pole_reduce_at_infinity(curve)
    assert r.kind == "SeparatedPoints"
    cur, orders = curve, [curve.g.num.degree - curve.g.den.degree]
    for op in r.cov:
        cur = apply_curve(op, cur)
        orders.append(cur.g.num.degree - cur.g.den.degree)
    assert all(a > b for a, b in zip(orders, orders[1:]))


# --- targets --------------------------------------------------------------------


def test_transport_examples():
    assert transport_target(CongruenceTarget(4, 9, 7), Swap()) == CongruenceTarget(9, 4, 7)
    assert transport_target(CongruenceTarget(4, 1, 5), ScaleX(Fraction(2, 3))) == CongruenceTarget(6, 1, 15)
    got = transport_target(CongruenceTarget(Fraction(1, 2), 0, 3), AddXPolyToY(t**2))
    assert got == CongruenceTarget(Fraction(1, 2), Fraction(-1, 4), 6)


def test_target_validation():
    with pytest.raises(ValueError):
        CongruenceTarget(0, 0, 0)


def test_transport_soundness_random():
    rng = random.Random(6)
    for _ in range(500):
        op = randgen.elementary_op(rng, 3)
        N = rng.randint(1, 12)
        tgt = CongruenceTarget(randgen.rational(rng, 9, 3), randgen.rational(rng, 9, 3), N)
        src = transport_target(tgt, op)
        for i in range(-2, 3):
            for j in range(-2, 3):
                P = (src.x0 + src.N * i, src.y0 + src.N * j)
                assert src.contains(P)
                assert tgt.contains(op.apply_point(P)), (op, tgt, src, P)


def test_transport_soundness_composite():
    rng = random.Random(7)
    for _ in range(100):
        c = randgen.cov(rng, 4, 2)
        tgt = CongruenceTarget(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(1, 9))
        src = transport_target(tgt, c)
        for i in range(-2, 3):
            P = (src.x0 + src.N * i, src.y0 - src.N * i)
            assert tgt.contains(c.apply_point(P))
