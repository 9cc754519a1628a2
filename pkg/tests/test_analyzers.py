import random
from fractions import Fraction
from math import prod

import pytest

import randgen
from oracles import genus_by_ramification, oracle_cover_exponent, sums_of_two_squares_missing
from polysurj.analyzers import (
    AsymptoticSector,
    AxisLinear,
    CuspidalExcluded,
    LinearInSecond,
    TorusMonomial,
    TwistedMonomial,
    Unclassified,
    CoverSpec,
    arbitrarily_negative,
    choose_cover_exponent,
    classify_normal_form,
    conic_specialization_test,
    cyclic_cover_genus,
    genus_table,
    image_scan,
    lattice_search,
    negative_witness,
    parity_obstruction,
    sector_form,
)
from polysurj.changevars import AddXPolyToY, ChangeOfVars, CongruenceTarget, ParamCurve, Swap
from polysurj.cli.parser import parse_bipoly
from polysurj.errors import ConstantFunction, InvariantViolated, NoWitnessFound, ZeroFunction
from polysurj.exactmath import INFINITY, is_prime
from polysurj.polyalg import BiPoly, RationalFunction, UniPoly

t = UniPoly.t()
T = RationalFunction.t()
F = parse_bipoly


# --- genus ------------------------------------------------------------------------


def test_choose_cover_exponent_examples():
    assert choose_cover_exponent(RationalFunction(t * (t - 1))) == 3
    assert choose_cover_exponent(RationalFunction(t**3, t - 1)) == 5
    assert choose_cover_exponent(T) == 3
    with pytest.raises(ConstantFunction):
        choose_cover_exponent(RationalFunction(UniPoly([2])))


def test_genus_examples():
    assert cyclic_cover_genus(CoverSpec(T, 5)) == 0
    assert cyclic_cover_genus(CoverSpec(RationalFunction(t * (t - 1)), 5)) == 2
    assert cyclic_cover_genus(CoverSpec(RationalFunction(t**2, t**2 - 1), 3)) == 1
    for n in (3, 5, 7, 11):
        assert cyclic_cover_genus(CoverSpec(T, n)) == 0


def test_cover_spec_invariants():
    with pytest.raises(InvariantViolated):
        CoverSpec(RationalFunction(t**3), 3)
    with pytest.raises(InvariantViolated):
        CoverSpec(T, 4)


def test_genus_table():
    g = genus_table(RationalFunction(t * (t - 1)), 5)
    assert g["genus"] == 2 and g["branch_points"] == 3


def test_genus_against_ramification_oracle():
    rng = random.Random(8)
    done = 0
    while done < 100:
        f, points = randgen.function_with_known_points(rng)
        if f.is_constant() or not randgen.within_factoring_limits(f):
            continue
        n = oracle_cover_exponent(points)
        assert choose_cover_exponent(f) == n
        assert cyclic_cover_genus(CoverSpec(f, n)) == genus_by_ramification(points, n)
        done += 1


def test_genus_bound():
    rng = random.Random(9)
    for _ in range(50):
        f, points = randgen.function_with_known_points(rng)
        if f.is_constant() or sum(c for c, _ in points) < 3 or not randgen.within_factoring_limits(f):
            continue
        for n in (5, 7, 11):
            if any(o % n == 0 for _, o in points):
                continue
            g = cyclic_cover_genus(CoverSpec(f, n))
            assert 2 * g - 2 >= n - 3


# --- parity -----------------------------------------------------------------------


def test_parity_examples():
    assert str(parity_obstruction(3, 1)) == "OddNegativeValues(t<0)"
    assert str(parity_obstruction(2, 1)) == "EvenSquaresOnly"
    assert str(parity_obstruction(5, -2)) == "OddNegativeValues(t>0)"
    assert str(parity_obstruction(4, Fraction(-1, 3))) == "NegativeEvenCase"
    with pytest.raises(ValueError):
        parity_obstruction(0, 1)


def test_parity_matches_sign_of_values():
    for ell in range(1, 7):
        for A in (Fraction(1, 2), 3, -1, Fraction(-7, 4)):
            v = parity_obstruction(ell, A)
            neg = {s for s in (-3, 3) if Fraction(s) ** ell / A < 0}
            if v.kind == "OddNegativeValues":
                assert neg == ({-3} if v.negative_half_line == "t<0" else {3})
            elif v.kind == "EvenSquaresOnly":
                assert not neg
            else:
                assert neg == {-3, 3}


# --- conic ------------------------------------------------------------------------


def test_conic_examples():
    r = conic_specialization_test(T, -T, range(1, 51))
    assert r.failures == () and r.clean == 50
    m1 = RationalFunction(UniPoly([-1]))
    r = conic_specialization_test(m1, m1, range(1, 51))
    assert len(r.failures) == 50
    assert all(places == (2, INFINITY) for _, places in r.failures)
    r = conic_specialization_test(T, 1 - T, range(2, 51))
    assert r.failures == ()


def test_conic_skips_bad_samples():
    r = conic_specialization_test(T - 3, 1 / (T - 5), range(1, 8))
    assert r.skipped == (3, 5)
    with pytest.raises(ZeroFunction):
        conic_specialization_test(RationalFunction(UniPoly()), T)


# --- scan -------------------------------------------------------------------------


def test_scan_examples():
    r = image_scan(F("x^2 + y^2"), 100, 10)
    assert r.missing == (3, 6, 7) and r.negative_count == 0
    r = image_scan(F("x"), 5, 3)
    assert r.missing == () and r.min_value == -5
    r = image_scan(F("-x^2 - y^2 - 1"), 10, 0)
    assert r.missing == (0,) and r.min_value == -201


def test_scan_partition_and_oracle():
    r = image_scan(F("x^2 + y^2"), 40, 200)
    assert set(r.represented) | set(r.missing) == set(range(201))
    assert not set(r.represented) & set(r.missing)
    assert list(r.missing) == sums_of_two_squares_missing(200)


def test_scan_rational_coefficients():
    r = image_scan(F("x^2/2 + y/2"), 5, 4)
    assert r.missing == ()


def test_scan_deterministic_across_workers():
    G = F("x^3 - 2*x*y + y^2 - 5")
    a = image_scan(G, 30, 50, workers=1)
    b = image_scan(G, 30, 50, workers=3)
    assert a == b


# --- classifier -------------------------------------------------------------------


def test_classifier_examples():
    assert isinstance(classify_normal_form(F("x")), AxisLinear)
    form = classify_normal_form(F("x^2*y^3 + 1"))
    assert isinstance(form, TorusMonomial)
    assert (form.a, form.b, form.scale, form.shift) == (2, 3, 1, 1)
    form = classify_normal_form(F("(x^2 - x)*y + 7"))
    assert isinstance(form, LinearInSecond)
    assert form.f1 == t**2 - t and form.f2 == UniPoly([7])


def test_classifier_more_shapes():
    form = classify_normal_form(F("x^2*(x*y + 1)^3 + 1"))
    assert isinstance(form, TwistedMonomial) and not isinstance(form, TorusMonomial)
    assert (form.a, form.ell, form.b, form.p) == (2, 1, 3, UniPoly([1]))
    assert isinstance(classify_normal_form(F("y^2 - x^3")), CuspidalExcluded)
    assert isinstance(classify_normal_form(F("x^2 + y^2")), Unclassified)
    form = classify_normal_form(F("(x + 1)^2*y^3 + 1"))
    assert isinstance(form, TorusMonomial) and len(form.cov) == 1
    assert isinstance(classify_normal_form(F("y^3 + 2")), AxisLinear) is False


def test_classifier_uses_hints():
    G = F("x^2*y^3 + 1")
    scramble = ChangeOfVars((AddXPolyToY(t**3 + t), Swap()))
    H = scramble.inverse().apply_poly(G)
    form = classify_normal_form(H, hints=[scramble], search_depth=0)
    assert isinstance(form, TorusMonomial) and form.matches(H)


def test_classifier_soundness_random():
    rng = random.Random(10)
    shapes = [F(s) for s in ("x", "x*y - 1", "x^2*y^3 + 1", "(x^2 - x)*y + 7", "x^3*(x^2*y - x + 2)^2 - 4", "y^2 - x^3")]
    found = 0
    for _ in range(60):
        G = rng.choice(shapes)
        c = randgen.cov(rng, 2, 2, integral=True)
        H = c.apply_poly(G)
        if H.is_constant():
            continue
        form = classify_normal_form(H)
        if not isinstance(form, Unclassified):
            found += 1
            assert form.cov.apply_poly(H) == form.shape()
    assert found > 30


def test_classifier_constant_rejected():
    with pytest.raises(ValueError):
        classify_normal_form(BiPoly.const(3))


# --- witnesses --------------------------------------------------------------------


def witness_for(text, tgt, **kw):
    G = F(text)
    return G, negative_witness(G, classify_normal_form(G), tgt, **kw)


def test_witness_examples():
    G, w = witness_for("x", CongruenceTarget(3, 7, 5))
    assert (w.x, w.y, w.value) == (-2, 7, -2)
    G, w = witness_for("(x^2 - x)*y + 1", CongruenceTarget(0, 0, 3))
    assert (w.x, w.y, w.value) == (3, -3, -17)
    G, w = witness_for("x*y - 1", CongruenceTarget(0, 0, 2))
    assert (w.x, w.y, w.value) == (2, -2, -5)


def test_arbitrarily_negative_examples():
    G = F("x")
    ws = arbitrarily_negative(G, classify_normal_form(G), 3)
    assert [w.value < -(10**k) for k, w in enumerate(ws)] == [True] * 3
    G = F("x*y - 1")
    ws = arbitrarily_negative(G, classify_normal_form(G), 3)
    assert all(w.verify(G, 10**k) for k, w in enumerate(ws))


def test_no_witness_for_nonnegative():
    G = F("x^2 + y^2")
    with pytest.raises(NoWitnessFound):
        arbitrarily_negative(G, classify_normal_form(G), 2, budget=10**4)


CORPUS = [
    "x",
    "x - 3",
    "x + 11",
    "(x^2 - x)*y + 7",
    "(x^2 - x)*y - 2",
    "x*y - 1",
    "x^2*y^3 + 1",
    "x^2*(x*y + 1)^3 + 1",
    "-x^2 - y^2 - 1",
    "y^2 - x^3",
    "(x + 1)^2*y^3 + 1",
]


@pytest.mark.parametrize("text", CORPUS)
def test_witness_soundness_random_targets(text):
    G = F(text)
    form = classify_normal_form(G)
    rng = random.Random(text)
    for _ in range(100):
        N = rng.randint(1, 50)
        tgt = CongruenceTarget(rng.randrange(N), rng.randrange(N), N)
        w = negative_witness(G, form, tgt)
        assert w.verify(G)
        assert (w.x - tgt.x0) % N == 0 and (w.y - tgt.y0) % N == 0
        assert G(w.x, w.y) == w.value < 0


def test_witness_rejects_rational_target():
    G = F("x")
    with pytest.raises(ValueError):
        negative_witness(G, classify_normal_form(G), CongruenceTarget(Fraction(1, 2), 0, 3))


def test_scan_witness_consistency():
    for text in ("x^3 - y^2*x + 5", "x^4 - 3*x^2*y + y^2 + 1", "x^2 - 2*y^2 + 3", "-(x*y)^2 + 2"):
        G = F(text)
        if image_scan(G, 20, 0).negative_count:
            w = negative_witness(G, classify_normal_form(G))
            assert w.verify(G)


def test_sector_witness():
    curve = ParamCurve(1 / (T**2 - 2), T / (T**2 - 2) ** 2)
    G = F("y^2 - 2*x^4 - x^3")
    for s in (3, 5, Fraction(1, 2)):
        assert G(*curve(Fraction(s))) == 0
    form = sector_form(G, curve)
    assert isinstance(form, AsymptoticSector) and form.d == 2
    rng = random.Random(12)
    for _ in range(30):
        N = rng.randint(1, 20)
        tgt = CongruenceTarget(rng.randrange(N), rng.randrange(N), N)
        assert negative_witness(G, form, tgt).verify(G)
    ws = arbitrarily_negative(G, form, 4)
    assert all(w.verify(G, 10**k) for k, w in enumerate(ws))


def test_lattice_search_budget():
    with pytest.raises(NoWitnessFound) as exc:
        lattice_search(F("x^2 + 1"), CongruenceTarget(0, 0, 1), budget=500)
    assert exc.value.budget == 500
