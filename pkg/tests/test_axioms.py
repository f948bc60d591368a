import pytest

from superhopf.axioms import AxiomId, STRUCTURAL, check_all, check_axiom, is_superbialgebra
from superhopf.constructions import VariantKind, named_family, variant
from superhopf.graded import UNIT, BasisIndex
from superhopf.scalar import ONE, as_scalar
from superhopf.structures import ComultTable, CounitVector, MissingStructureError

from conftest import tensor


def test_coassociative_dim3(cat):
    assert check_axiom(cat.get("A3_{2|2}^2").data, AxiomId.COASSOCIATIVITY).holds


def test_not_cocommutative_dim3(cat):
    d = cat.get("A3_{2|2}^2").data
    rep = check_axiom(d, AxiomId.COCOMMUTATIVE)
    x, = d.labels["x"]
    y, = d.labels["y"]
    assert [w for w, _ in rep.violations] == [(x,)]
    assert rep.violations[0][1].coeffs == {(y, y): as_scalar(2)}


def test_connected_commutative():
    assert check_axiom(named_family("LambdaK"), AxiomId.COMMUTATIVE).holds


def test_all_nine_structural(cat):
    d = cat.get("H1").data
    reports = check_all(d, informational=False)
    assert [r.axiom for r in reports] == list(STRUCTURAL)
    assert all(r.holds for r in reports)


def test_forced_candidate_on_a11_fails(cat):
    # Delta(x) = 1(x)x + x(x)1 is what counity forces; it is not multiplicative
    alg = cat.get("A3_{1|1}").data
    from superhopf.catalog.sources import label_basis
    d = label_basis("A3_{1|1}").extend({"x": "1@x + x@1", "y": "1@y + y@1"}, {"x": 0}, "candidate")
    assert d.mult == alg.mult
    rep = check_axiom(d, AxiomId.COMPAT_DELTA_MU)
    assert not rep.holds
    x = next(iter(d.labels["x"]))
    assert any(w == (x, x) for w, _ in rep.violations)
    assert check_axiom(d, AxiomId.COUNIT).holds


def test_m2_counit_contradiction():
    alg = named_family("M2Graded")
    space = alg.space
    comult = ComultTable(space, {b: {(UNIT, b): ONE} if b == UNIT else {(UNIT, b): ONE, (b, UNIT): ONE}
                                 for b in space.basis()})
    d = alg.with_changes(comult=comult, counit=CounitVector(space, {UNIT: ONE}))
    rep = check_axiom(d, AxiomId.COMPAT_EPS_MU)
    assert not rep.holds
    assert any(w == (BasisIndex(1, 2), BasisIndex(1, 1)) for w, _ in rep.violations)


def test_missing_structure(cat):
    with pytest.raises(MissingStructureError):
        check_axiom(cat.get("A_{2|1}").data, AxiomId.COASSOCIATIVITY)
    with pytest.raises(MissingStructureError):
        check_all(cat.get("A_{2|1}").data)
    # algebra axioms do not need a coproduct
    assert check_axiom(cat.get("A_{2|1}").data, AxiomId.ASSOCIATIVITY).holds


def test_commutative_matches_superflip(cat):
    from superhopf.axioms import mul_vec
    for ident in ("H1", "H2", "H3", "H4", "H5", "A_{13|1}^7", "A3_{2|3}^1"):
        d = cat.get(ident).data
        flips = all(
            mul_vec(d.mult.entries, {a: ONE}, {b: ONE})
            == {k: (-v if a.parity & b.parity else v)
                for k, v in mul_vec(d.mult.entries, {b: ONE}, {a: ONE}).items()}
            for a in d.basis() for b in d.basis())
        assert check_axiom(d, AxiomId.COMMUTATIVE).holds == flips


def test_double_cop_keeps_reports(cat):
    for e in cat.bialgebras():
        twice = variant(variant(e.data, VariantKind.COP), VariantKind.COP)
        assert [r.holds for r in check_all(twice)] == [r.holds for r in check_all(e.data)]


def test_whole_corpus_is_superbialgebras(cat):
    assert all(is_superbialgebra(e.data) for e in cat.bialgebras())
