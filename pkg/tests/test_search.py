import pytest

from superhopf.constructions import named_family
from superhopf.graded import BasisIndex
from superhopf.poly import Poly
from superhopf.scalar import ONE, ZERO, as_scalar
from superhopf.search import (GridSpec, Nonexistent, SearchStatus, UnknownSystem,
                              UnsupportedExtensionError, admissible_counits,
                              classify_odd_extensions, connected_decision,
                              enumerate_comultiplications, generating_set,
                              satisfies_comultiplication_system)


def _recovered(cat, family, found):
    pairs = [(c, e) for c, e in found.results]
    return [e.id for e in cat.bialgebras() if e.family == family
            and (e.data.comult, e.data.counit) in pairs]


def _listed(cat, family):
    return [e.id for e in cat.bialgebras() if e.family == family]


def test_grid_must_hold_zero_and_one():
    with pytest.raises(ValueError):
        GridSpec(("1", "2"))
    g = GridSpec.parse("0, 1, 1, -1")
    assert g.values == (ZERO, ONE, as_scalar(-1))


def test_solver_linear_and_quadratic():
    a, b = Poly.var(0), Poly.var(1)
    res = UnknownSystem(["a", "b"], [a + b - 3, a - b - 1]).solve()
    assert res.status is SearchStatus.COMPLETE
    assert res.solutions == [{0: as_scalar(2), 1: ONE}]
    res = UnknownSystem(["a"], [a * a + 1]).solve()
    assert res.status is SearchStatus.COMPLETE
    assert sorted(s[0].sort_key() for s in res.solutions) == sorted(
        as_scalar(x).sort_key() for x in ("i", "-i"))


def test_solver_free_unknown_is_grid_limited():
    a, b = Poly.var(0), Poly.var(1)
    res = UnknownSystem(["a", "b"], [a * b]).solve(GridSpec(("0", "1")))
    assert res.status is SearchStatus.GRID_LIMITED
    assert {0: ZERO, 1: ONE} in res.solutions


def test_inconsistent_system_is_complete_and_empty():
    a = Poly.var(0)
    res = UnknownSystem(["a"], [a, a - 1]).solve()
    assert res.status is SearchStatus.COMPLETE and res.solutions == []


def test_counits_of_m2_graded(cat):
    res = admissible_counits(cat.get("M2Graded").data)
    assert res.status is SearchStatus.COMPLETE and res.counits == []


def test_counits_include_record_counit(cat):
    for e in cat.bialgebras(dim=3):
        res = admissible_counits(e.data)
        assert e.data.counit in res.counits, e.id


@pytest.mark.parametrize("family", ["A3_{1|1}", "A3_{1|2}"])
def test_no_comultiplication(cat, family):
    res = enumerate_comultiplications(cat.get(family).data)
    assert res.status is SearchStatus.COMPLETE and res.results == []


@pytest.mark.parametrize("family", ["A3_{2|1}", "A3_{2|3}", "A_{4|1}"])
def test_complete_recovery(cat, family):
    res = enumerate_comultiplications(cat.get(family).data)
    assert res.status is SearchStatus.COMPLETE
    assert _recovered(cat, family, res) == _listed(cat, family)
    assert len(res.results) == len(_listed(cat, family))


def test_grid_limited_recovery(cat):
    res = enumerate_comultiplications(cat.get("A3_{2|2}").data)
    assert res.status is SearchStatus.GRID_LIMITED
    assert _recovered(cat, "A3_{2|2}", res) == _listed(cat, "A3_{2|2}")


def test_spot_membership(cat):
    for e in cat.bialgebras(dim=4):
        assert satisfies_comultiplication_system(e.data), e.id


def test_generating_set(cat):
    gens = generating_set(cat.get("A_{3|2}").data)
    assert 1 <= len(gens.names) <= 3
    assert len(gens.words) == cat.get("A_{3|2}").data.space.dim


def test_extensions_of_k(cat):
    (only,) = classify_odd_extensions(cat.get("K").data)
    assert only.id == "LambdaK"
    assert only.space == named_family("LambdaK").space
    assert only.mult == named_family("LambdaK").mult


def test_extensions_of_a1_and_a2(cat):
    a1 = classify_odd_extensions(cat.get("A_1").data)
    assert sorted(r.id for r in a1) == ["A3_{1|1}", "A3_{1|2}"]
    a2 = classify_odd_extensions(cat.get("A_2").data)
    assert sorted(r.id for r in a2) == ["A3_{2|1}", "A3_{2|2}", "A3_{2|3}"]


def test_extension_limits(cat):
    with pytest.raises(UnsupportedExtensionError):
        classify_odd_extensions(cat.get("A_1").data, n1=2)


def test_connected_one():
    d = connected_decision(1)
    x = BasisIndex(1, 1)
    assert d.comult.coproduct(x) == {(BasisIndex(0, 1), x): ONE, (x, BasisIndex(0, 1)): ONE}
    assert d.antipode.odd == [[as_scalar(-1)]]


@pytest.mark.parametrize("n1", [2, 3])
def test_connected_nonexistent(n1):
    res = connected_decision(n1)
    assert isinstance(res, Nonexistent)
    x1, x2 = BasisIndex(1, 1), BasisIndex(1, 2)
    assert res.pair == (x1, x2)
    assert res.residual.coeffs == {(x1, x2): ONE, (x2, x1): as_scalar(-1)}


def test_connected_rejects_zero():
    with pytest.raises(ValueError):
        connected_decision(0)
