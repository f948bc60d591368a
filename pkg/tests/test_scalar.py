import pytest

from superhopf.scalar import (ONE, ZERO, I, GaussScalar, MalformedScalarError, UniPoly,
                              UnsupportedDegreeError, as_scalar, normalize, solve_univariate, sqrt)

from conftest import random_scalar


def test_lowest_terms():
    s = normalize(2, 4)
    assert (s.re_num, s.re_den, s.im_num, s.im_den) == (1, 2, 0, 1)
    assert s == as_scalar("1/2")


def test_i_squared():
    assert I * I == -ONE


def test_inverse_of_one_plus_i():
    inv = (ONE + I).inverse()
    assert inv == GaussScalar("1/2", "-1/2")
    assert inv * (ONE + I) == ONE


def test_zero_denominator_rejected():
    with pytest.raises(MalformedScalarError):
        normalize(1, 0)
    with pytest.raises(MalformedScalarError):
        as_scalar("1/0")


@pytest.mark.parametrize("text", ["1", "-1/2*i", "3/4-1/4*i", "0", "i", "-7/3+2*i"])
def test_text_round_trip(text):
    assert str(GaussScalar.parse(text)) == text


def test_sqrt_examples():
    assert set(sqrt(-ONE)) == {I, -I}
    assert set(sqrt(as_scalar("1/4"))) == {as_scalar("1/2"), as_scalar("-1/2")}
    assert sqrt(as_scalar(2)) == []
    assert sqrt(ZERO) == [ZERO]


def test_sqrt_of_gaussian():
    # (1 + i)^2 = 2i
    assert set(sqrt(GaussScalar(0, 2))) == {ONE + I, -(ONE + I)}


def test_sqrt_property(rng):
    for _ in range(200):
        a = random_scalar(rng)
        roots = sqrt(a * a)
        assert a in roots
        for r in roots:
            assert r * r == a * a
            assert -r in roots


def test_field_axioms(rng):
    for _ in range(300):
        a, b, c = (random_scalar(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if a:
            assert a * a.inverse() == ONE


def test_univariate_examples():
    assert set(solve_univariate(UniPoly([0, -1, 1])).roots) == {ZERO, ONE}
    quartic = solve_univariate(UniPoly([-1, 0, 0, 0, 1]))
    assert set(quartic.roots) == {ONE, -ONE, I, -I}
    assert quartic.unresolved == []
    irr = solve_univariate(UniPoly([-2, 0, 1]))
    assert irr.roots == []
    assert len(irr.unresolved) == 1 and irr.unresolved[0].degree == 2


def test_univariate_degree_cap():
    with pytest.raises(UnsupportedDegreeError):
        solve_univariate(UniPoly([1, 0, 0, 0, 0, 1]))


def test_roots_evaluate_to_zero(rng):
    for _ in range(60):
        rs = [random_scalar(rng) for _ in range(rng.randint(1, 4))]
        coeffs = [ONE]
        for r in rs:   # multiply by (t - r)
            coeffs = [(coeffs[k - 1] if k else ZERO) - (r * coeffs[k] if k < len(coeffs) else ZERO)
                      for k in range(len(coeffs) + 1)]
        p = UniPoly(coeffs)
        sol = solve_univariate(p)
        assert set(sol.roots) == set(rs)
        assert all(p(r) == ZERO for r in sol.roots)
