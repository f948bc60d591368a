import pytest

from superhopf.axioms import check_all, is_cocommutative, is_commutative
from superhopf.classify import find_isomorphism, primitives
from superhopf.constructions import (UnknownFamilyError, VariantKind, dual, named_family,
                                     tensor_product, variant)
from superhopf.graded import UNIT


def _same(a, b):
    return a.same_structure(b)


def test_op_example(cat):
    assert _same(variant(cat.get("A_{14|1}^1").data, VariantKind.OP), cat.get("A_{15|1}^1").data)


def test_cop_example(cat):
    assert _same(variant(cat.get("A_{2|3}^1").data, VariantKind.COP), cat.get("A_{2|3}^3").data)
    # the 3-dimensional list pairs the second entry with its cop instead
    assert _same(variant(cat.get("A3_{2|3}^2").data, VariantKind.COP), cat.get("A3_{2|3}^3").data)


def test_op_cross_reference(cat):
    assert _same(variant(cat.get("A_{14|1}^5").data, VariantKind.OP), cat.get("A_{15|1}^3").data)


def test_double_cop_identity(cat):
    for e in cat.bialgebras():
        assert _same(variant(variant(e.data, VariantKind.COP), VariantKind.COP), e.data)


def test_variant_ids(cat):
    d = cat.get("H4").data
    assert variant(d, VariantKind.OP).id == "op(A_{3|2}^1)"
    assert dual(d).id == "dual(A_{3|2}^1)"
    assert tensor_product(d, d).id == "tensor(A_{3|2}^1,A_{3|2}^1)"


@pytest.mark.parametrize("kind", list(VariantKind))
def test_variants_stay_superbialgebras(cat, kind):
    for e in cat.bialgebras():
        assert all(r.holds for r in check_all(variant(e.data, kind), informational=False))


def test_op_fixes_commutative(cat):
    for e in cat.bialgebras():
        assert is_commutative(e.data) == _same(variant(e.data, VariantKind.OP), e.data)


def test_cross_references(cat):
    sourced = [e for e in cat.entries.values() if e.source]
    assert len(sourced) >= 20
    for e in sourced:
        of = cat.get(e.source["of"]).data
        assert _same(variant(of, VariantKind(e.source["kind"])), e.data), e.id


def test_dual_swaps_predicates(cat):
    for e in cat.bialgebras():
        d = dual(e.data)
        assert all(r.holds for r in check_all(d, informational=False))
        assert is_commutative(e.data) == is_cocommutative(d)
        assert is_cocommutative(e.data) == is_commutative(d)


def test_biduality(cat):
    for e in cat.select(tier="Hopf"):
        assert find_isomorphism(dual(dual(e.data)), e.data).is_iso


def test_dual_h2_is_h4(cat):
    res = find_isomorphism(dual(cat.get("H2").data), cat.get("H4").data)
    assert res.is_iso


def test_h1_is_a_tensor_product(cat):
    t = tensor_product(named_family("GroupAlgebraZ2"), named_family("LambdaK"))
    assert find_isomorphism(t, cat.get("H1").data).is_iso


def test_tensor_with_ground_field(cat):
    k = named_family("TrivialFromBialgebra", {"id": "K", "n0": 1, "mult": {},
                                              "comult": {}, "counit": {}})
    for ident in ("H4", "A_{13|1}^7", "A3_{2|2}^2"):
        d = cat.get(ident).data
        assert find_isomorphism(tensor_product(d, k), d).is_iso


def test_lambda_squared(cat):
    t = tensor_product(named_family("LambdaK"), named_family("LambdaK"))
    assert (t.space.n0, t.space.n1) == (2, 2)
    assert is_cocommutative(t)
    p = primitives(t)
    assert (p.dims) == (0, 2)
    assert _same(named_family("LambdaK2"), cat.get("H3").data)
    assert find_isomorphism(t, cat.get("H3").data).is_iso


def test_named_families(cat):
    lam = named_family("LambdaK")
    assert (lam.space.n0, lam.space.n1) == (1, 1)
    assert _same(named_family("H5"), cat.get("A_{1|1}^2").data)
    assert not _same(named_family("H5(-i)"), named_family("H5"))
    g = named_family("GroupAlgebraZ2")
    for b in g.basis():
        assert g.comult.coproduct(b) == {(b, b): 1}
    assert not named_family("M2Graded").is_bialgebra_record
    with pytest.raises(UnknownFamilyError):
        named_family("H6")


@pytest.mark.parametrize("name", ["H1", "H2", "H3", "H4", "H5"])
def test_named_matches_catalog(cat, name):
    assert find_isomorphism(named_family(name), cat.get(name).data).is_iso


def test_trivial_rejects_odd(cat):
    with pytest.raises(ValueError):
        named_family("TrivialFromBialgebra", cat.get("H4").data)
