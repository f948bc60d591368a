import pytest

from superhopf import linalg
from superhopf.classify import (GroupCount, IsoStatus, find_isomorphism, fingerprint,
                                fingerprint_difference, grouplikes, is_morphism,
                                isomorphism_system, primitives)
from superhopf.constructions import VariantKind, change_basis, named_family, variant
from superhopf.graded import UNIT, BasisIndex, GradedLinearMap, ShapeError
from superhopf.scalar import ONE, ZERO, I, as_scalar

from conftest import random_scalar


def test_primitives_examples(cat):
    h3 = primitives(cat.get("H3").data)
    assert h3.dims == (0, 2)
    assert primitives(cat.get("H1").data).dims == (0, 1)
    assert primitives(named_family("GroupAlgebraZ2")).dims == (0, 0)


def test_primitives_of_h1_span_y(cat):
    d = cat.get("H1").data
    (odd,) = primitives(d).odd
    y = d.labels["y"]
    ratio = {k: odd[k] / v for k, v in y.items()}
    assert set(odd) == set(y) and len(set(ratio.values())) == 1


def test_grouplikes_examples(cat):
    g = grouplikes(named_family("GroupAlgebraZ2"))
    assert g.determined and len(g.elements) == 2
    lam = grouplikes(named_family("LambdaK"))
    assert lam.elements == [{UNIT: ONE}]
    h1 = cat.get("H1").data
    x = h1.labels["x"]
    want = {UNIT: ONE}
    for k, v in x.items():
        want[k] = want.get(k, ZERO) - 2 * v
    got = grouplikes(h1).elements
    assert sorted(map(str, got)) == sorted(map(str, [{UNIT: ONE}, want]))
    assert grouplikes(h1).count == GroupCount("exact", 2)


def test_grouplikes_include_unit(cat):
    for e in cat.bialgebras():
        g = grouplikes(e.data)
        assert g.determined
        assert {UNIT: ONE} in g.elements


def test_fingerprint_examples(cat):
    assert fingerprint(cat.get("A3_{2|2}^1").data).is_cocommutative
    assert not fingerprint(cat.get("A3_{2|2}^2").data).is_cocommutative
    assert not fingerprint(cat.get("H2").data).is_commutative
    assert fingerprint(cat.get("H4").data).is_commutative
    fp = fingerprint(cat.get("H4").data)
    assert fp.dual_level1 is not None and fp.dual_level1.dual_level1 is None


def test_fingerprint_double_cop(cat):
    for e in cat.bialgebras():
        twice = variant(variant(e.data, VariantKind.COP), VariantKind.COP)
        assert fingerprint(twice) == fingerprint(e.data)


def _random_basis_change(d, rng):
    n0, n1 = d.space.n0, d.space.n1
    while True:
        even = [[ONE if k == 0 else ZERO for k in range(n0)]] + \
               [[random_scalar(rng) for _ in range(n0)] for _ in range(n0 - 1)]
        even = linalg.transpose(even)  # unit column fixed
        odd = [[random_scalar(rng) for _ in range(n1)] for _ in range(n1)]
        p = GradedLinearMap(even, odd)
        if p.is_invertible():
            return p


def test_fingerprint_invariant_under_basis_change(cat, rng):
    for ident in ("H1", "H2", "H4", "H5", "A_{13|1}^7", "A_{6|2}^4", "A3_{2|3}^2", "A_{17|1}^3"):
        d = cat.get(ident).data
        p = _random_basis_change(d, rng)
        moved = change_basis(d, p)
        assert fingerprint(moved) == fingerprint(d)
        res = find_isomorphism(d, moved)
        assert res.is_iso and is_morphism(d, moved, res.map)


def test_iso_h4_catalog(cat):
    res = find_isomorphism(named_family("H4"), cat.get("A_{3|2}^1").data)
    assert res.status is IsoStatus.ISO
    assert res.map.is_invertible()
    doc = res.as_dict()
    assert doc["status"] == "Iso" and len(doc["map"]["odd"]) == 2


def test_iso_h4_printed_map(cat):
    # x -> e_2^0, y -> e_1^1 + e_2^1, completed by e_2^1 -> e_1^1
    h4, a = named_family("H4"), cat.get("A_{3|2}^1").data
    (x,), (y,) = h4.labels["x"], h4.labels["y"]
    assert x == BasisIndex(0, 2) and y == BasisIndex(1, 1)
    t = GradedLinearMap([[1, 0], [0, 1]], [[1, 1], [1, 0]])
    assert is_morphism(h4, a, t)


def test_noniso_by_cocommutativity(cat):
    res = find_isomorphism(cat.get("A3_{2|2}^1").data, cat.get("A3_{2|2}^2").data)
    assert res.status is IsoStatus.NON_ISO
    assert res.witness == "is_cocommutative"
    assert res.as_dict()["witness"] == "is_cocommutative"


def test_self_iso(cat):
    for e in cat.bialgebras():
        assert find_isomorphism(e.data, e.data).is_iso, e.id


def test_shape_error(cat):
    with pytest.raises(ShapeError):
        find_isomorphism(cat.get("H4").data, cat.get("A3_{2|2}^1").data)


def test_iso_implies_compatible_fingerprints(cat):
    for a, b in (("H2", "A_{11|2}^1"), ("A_{6|2}^3", "A_{6|2}^4"), ("A_{17|1}^4", "A_{17|1}^5")):
        d1, d2 = cat.get(a).data, cat.get(b).data
        if find_isomorphism(d1, d2).is_iso:
            assert fingerprint_difference(fingerprint(d1), fingerprint(d2)) is None


def test_primitives_under_op(cat):
    for e in cat.bialgebras():
        assert primitives(e.data).dims == primitives(variant(e.data, VariantKind.OP)).dims


def test_connected_automorphisms():
    d = named_family("LambdaK")
    sys_ = isomorphism_system(d, d)
    assert sys_.cells[(0, 1, 1)] == ONE
    (var,) = [v for v in sys_.cells.values() if isinstance(v, int)]
    inv = [sys_.system.index(f"inv_det[{p}]") for p in (0, 1)]
    for alpha in (ONE, as_scalar(-3), as_scalar("1/2"), I):
        t = sys_.to_map({var: alpha}, d.space)
        assert is_morphism(d, d, t)
        values = {var: alpha, inv[0]: ONE, inv[1]: alpha.inverse()}
        assert all(c.evaluate(values) == ZERO for c in sys_.system.constraints)
    # alpha = 0 violates the determinant condition
    assert any(c.evaluate({var: ZERO, inv[0]: ONE, inv[1]: ONE}) != ZERO for c in sys_.system.constraints)
