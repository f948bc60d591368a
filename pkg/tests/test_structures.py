import copy
import json

import pytest

from superhopf import structures
from superhopf.graded import UNIT, GradedVector, ShapeError, Superspace, TensorVector
from superhopf.scalar import ONE
from superhopf.structures import (MissingStructureError, ValidationError, comultiply, deserialize,
                                  dumps, loads, multiply, serialize)

from conftest import element, random_scalar, tensor


def vec(data, word):
    return GradedVector(data.space, element(data, word))


def test_odd_square_in_a12(cat):
    d = cat.get("A3_{1|2}").data
    assert multiply(d, vec(d, "y"), vec(d, "y")) == vec(d, "x")


def test_unit_law(cat, rng):
    d = cat.get("A_{13|1}^7").data
    for _ in range(10):
        v = GradedVector(d.space, {b: random_scalar(rng) for b in d.basis()})
        assert multiply(d, vec(d, "1"), v) == v == multiply(d, v, vec(d, "1"))


def test_h2_relation(cat):
    # the relation that holds is xy + yx = y (the printed presentation has a minus sign)
    d = cat.get("A_{11|2}").data
    x, y = vec(d, "x"), vec(d, "y")
    assert multiply(d, x, y) + multiply(d, y, x) == y
    assert multiply(d, x, x) == x


def test_bilinear(cat, rng):
    d = cat.get("H4").data
    for _ in range(20):
        u, v, w = (GradedVector(d.space, {b: random_scalar(rng) for b in d.basis()})
                   for _ in range(3))
        s = random_scalar(rng)
        assert multiply(d, u * s + v, w) == multiply(d, u, w) * s + multiply(d, v, w)
        assert multiply(d, w, u * s + v) == multiply(d, w, u) * s + multiply(d, w, v)


def test_comultiply_primitive(cat):
    d = cat.get("H3").data
    assert comultiply(d, vec(d, "x")) == TensorVector((d.space, d.space), tensor(d, "1@x + x@1"))


def test_comultiply_unit(cat):
    d = cat.get("A_{6|2}^4").data
    assert comultiply(d, vec(d, "1")) == TensorVector((d.space, d.space), {(UNIT, UNIT): ONE})


def test_comultiply_dim3(cat):
    d = cat.get("A3_{2|1}^1").data
    want = tensor(d, "y@1 + 1@y - y@x")
    assert comultiply(d, vec(d, "y")) == TensorVector((d.space, d.space), want)


def test_comultiply_needs_coproduct(cat):
    d = cat.get("A_{2|1}").data
    with pytest.raises(MissingStructureError):
        comultiply(d, vec(d, "x"))


def test_space_mismatch(cat):
    d = cat.get("H4").data
    with pytest.raises(ShapeError):
        multiply(d, GradedVector(Superspace(1, 1), {}), vec(d, "x"))


def test_round_trip_every_document(cat):
    for e in cat.entries.values():
        text = dumps(e.data)
        assert dumps(loads(text)) == text
        assert loads(text).same_structure(e.data)


def test_algebra_only_omits_coalgebra(cat):
    doc = serialize(cat.get("A_{2|1}").data)
    assert "comult" not in doc and "counit" not in doc


def _doc(cat, ident="H4"):
    return copy.deepcopy(serialize(cat.get(ident).data))


def test_odd_counit_rejected(cat):
    doc = _doc(cat)
    doc["counit"].append({"i": [1, 1], "value": "1"})
    with pytest.raises(ValidationError) as err:
        deserialize(doc)
    assert any("counit" in p for p in err.value.problems)


def test_unit_coproduct_rejected(cat):
    doc = _doc(cat)
    for row in doc["comult"]:
        if row["i"] == [0, 1]:
            row["out"][0]["coeff"] = "2"
    with pytest.raises(ValidationError):
        deserialize(doc)


def test_malformed_scalar_rejected(cat):
    doc = _doc(cat)
    doc["mult"][0]["out"][0]["coeff"] = "1/0"
    with pytest.raises(ValidationError):
        deserialize(doc)


def test_grading_violation_rejected(cat):
    doc = _doc(cat)
    doc["mult"].append({"i": [0, 2], "j": [1, 1], "out": [{"k": [0, 1], "coeff": "1"}]})
    with pytest.raises(ValidationError):
        deserialize(doc)


def test_comult_without_counit_rejected(cat):
    doc = _doc(cat)
    del doc["counit"]
    with pytest.raises(ValidationError):
        deserialize(doc)


def test_loads_rejects_json_garbage():
    with pytest.raises(ValueError):
        loads("{not json")
    with pytest.raises(ValidationError):
        loads(json.dumps({"id": "x"}))
