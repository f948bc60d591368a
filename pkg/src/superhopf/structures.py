"""Structure-constant encodings of superalgebras and superbialgebras.

A record stores the product of every pair of basis vectors, the coproduct
of every basis vector, the counit on the even basis and optionally an
antipode.  The unit is always ``e_1^0``.  Records serialize to plain JSON
documents whose scalars use the canonical text form of :mod:`scalar`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path

from .graded import (
    UNIT,
    BasisIndex,
    GradedLinearMap,
    GradedVector,
    ShapeError,
    Superspace,
    TensorVector,
    _add_into,
    parity,
)
from .scalar import ONE, ZERO, GaussScalar, MalformedScalarError, as_scalar

__all__ = [
    "MissingStructureError",
    "ValidationError",
    "MultTable",
    "ComultTable",
    "CounitVector",
    "SuperBialgebraData",
    "GradedLinearMap",
    "multiply",
    "comultiply",
    "counit",
    "serialize",
    "deserialize",
    "dumps",
    "loads",
    "validate",
]


class MissingStructureError(ValueError):
    """An operation needs a coproduct/counit/antipode the record lacks."""


class ValidationError(ValueError):
    def __init__(self, problems: list[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


def _vec(coeffs) -> dict:
    return {k: as_scalar(v) for k, v in coeffs.items() if as_scalar(v)}


class MultTable:
    """Products of basis vectors; absent pairs multiply to zero."""

    def __init__(self, space: Superspace, entries: dict):
        self.space = space
        self.entries = {}
        for (a, b), out in entries.items():
            if isinstance(out, GradedVector):
                out = out.coeffs
            out = _vec(out)
            if out:
                self.entries[(BasisIndex(*a), BasisIndex(*b))] = out

    def product(self, a: BasisIndex, b: BasisIndex) -> dict:
        return self.entries.get((a, b), {})

    def __eq__(self, other):
        return isinstance(other, MultTable) and self.space == other.space and self.entries == other.entries


class ComultTable:
    """Coproduct of each basis vector as a sparse two-factor tensor."""

    def __init__(self, space: Superspace, entries: dict):
        self.space = space
        self.entries = {}
        for i, out in entries.items():
            if isinstance(out, TensorVector):
                out = out.coeffs
            out = {(BasisIndex(*l), BasisIndex(*r)): as_scalar(c)
                   for (l, r), c in out.items() if as_scalar(c)}
            if out:
                self.entries[BasisIndex(*i)] = out

    def coproduct(self, i: BasisIndex) -> dict:
        return self.entries.get(i, {})

    def __eq__(self, other):
        return isinstance(other, ComultTable) and self.space == other.space and self.entries == other.entries


class CounitVector:
    """Counit values on the even basis; odd basis vectors map to zero."""

    def __init__(self, space: Superspace, values: dict):
        self.space = space
        self.values = {BasisIndex(*k): as_scalar(v) for k, v in values.items() if as_scalar(v)}

    def __call__(self, b: BasisIndex) -> GaussScalar:
        return self.values.get(b, ZERO)

    def __eq__(self, other):
        return isinstance(other, CounitVector) and self.space == other.space and self.values == other.values


@dataclass(eq=False)
class SuperBialgebraData:
    id: str
    space: Superspace
    mult: MultTable
    comult: ComultTable | None = None
    counit: CounitVector | None = None
    antipode: GradedLinearMap | None = None
    labels: dict = field(default_factory=dict)   # name -> {BasisIndex: scalar}
    provenance: str = ""

    @classmethod
    def build(cls, id, n0, n1, mult, comult=None, counit=None, antipode=None,
              labels=None, provenance=""):
        """Convenience constructor from nested dicts keyed by ``(parity, pos)``."""
        space = Superspace(n0, n1)
        full_mult = dict(mult)
        # unit rows/columns are implied when omitted
        for b in space.basis():
            full_mult.setdefault((UNIT, b), {b: ONE})
            full_mult.setdefault((b, UNIT), {b: ONE})
        c = None
        if comult is not None:
            comult = dict(comult)
            comult.setdefault(UNIT, {(UNIT, UNIT): ONE})
            c = ComultTable(space, comult)
        e = None
        if counit is not None:
            counit = dict(counit)
            counit.setdefault(UNIT, ONE)
            e = CounitVector(space, counit)
        return cls(id=id, space=space, mult=MultTable(space, full_mult), comult=c,
                   counit=e, antipode=antipode,
                   labels={k: _vec(v) for k, v in (labels or {}).items()},
                   provenance=provenance)

    @property
    def is_bialgebra_record(self) -> bool:
        return self.comult is not None and self.counit is not None

    def basis(self) -> list[BasisIndex]:
        return self.space.basis()

    def with_changes(self, **kw) -> "SuperBialgebraData":
        return replace(self, **kw)

    def same_structure(self, other: "SuperBialgebraData") -> bool:
        """Exact equality of every structure constant (ids and labels ignored)."""
        return (self.space == other.space and self.mult == other.mult
                and self.comult == other.comult and self.counit == other.counit)

    def vector(self, coeffs) -> GradedVector:
        return GradedVector(self.space, {BasisIndex(*k): v for k, v in coeffs.items()})

    def __repr__(self):
        kind = "bialgebra" if self.is_bialgebra_record else "algebra"
        return f"SuperBialgebraData({self.id!r}, {self.space}, {kind})"


# -- evaluation ------------------------------------------------------------------

def _check_space(data, v):
    if v.space != data.space:
        raise ShapeError(f"vector lives in {v.space}, record {data.id} in {data.space}")


def multiply(data: SuperBialgebraData, v: GradedVector, w: GradedVector) -> GradedVector:
    _check_space(data, v)
    _check_space(data, w)
    acc = {}
    table = data.mult.entries
    for a, ca in v.coeffs.items():
        for b, cb in w.coeffs.items():
            prod = table.get((a, b))
            if prod:
                c = ca * cb
                for k, x in prod.items():
                    _add_into(acc, k, c * x)
    return GradedVector(data.space, acc)


def comultiply(data: SuperBialgebraData, v: GradedVector) -> TensorVector:
    if data.comult is None:
        raise MissingStructureError(f"{data.id} has no comultiplication")
    _check_space(data, v)
    acc = {}
    for a, ca in v.coeffs.items():
        for k, x in data.comult.coproduct(a).items():
            _add_into(acc, k, ca * x)
    return TensorVector((data.space, data.space), acc)


def counit(data: SuperBialgebraData, v: GradedVector) -> GaussScalar:
    if data.counit is None:
        raise MissingStructureError(f"{data.id} has no counit")
    _check_space(data, v)
    return sum((c * data.counit(a) for a, c in v.coeffs.items()), ZERO)


# -- validation ------------------------------------------------------------------

def validate(data: SuperBialgebraData) -> list[str]:
    """Structural sanity checks; returns one message per offending entry."""
    problems = []
    space = data.space
    if (data.comult is None) != (data.counit is None):
        problems.append("comult and counit must be both present or both absent")
    for (a, b), out in data.mult.entries.items():
        if not (space.contains(a) and space.contains(b)):
            problems.append(f"mult entry ({a},{b}) outside {space}")
            continue
        for k in out:
            if not space.contains(k):
                problems.append(f"mult ({a},{b}) has output {k} outside {space}")
            elif k.parity != (a.parity + b.parity) % 2:
                problems.append(f"grading: mult ({a},{b}) has component on {k}")
    for b in space.basis():
        if data.mult.product(UNIT, b) != {b: ONE}:
            problems.append(f"unit: e1^0 * {b} != {b}")
        if data.mult.product(b, UNIT) != {b: ONE}:
            problems.append(f"unit: {b} * e1^0 != {b}")
    if data.comult is not None:
        for i, out in data.comult.entries.items():
            if not space.contains(i):
                problems.append(f"comult entry {i} outside {space}")
                continue
            for (l, r) in out:
                if not (space.contains(l) and space.contains(r)):
                    problems.append(f"comult {i} has term {l}(x){r} outside {space}")
                elif (l.parity + r.parity) % 2 != i.parity:
                    problems.append(f"grading: comult {i} has term {l}(x){r}")
        if data.comult.coproduct(UNIT) != {(UNIT, UNIT): ONE}:
            problems.append("comult: Delta(e1^0) != e1^0 (x) e1^0")
    if data.counit is not None:
        for k, v in data.counit.values.items():
            if not space.contains(k):
                problems.append(f"counit entry {k} outside {space}")
            elif k.parity == 1:
                problems.append(f"counit: odd basis vector {k} has nonzero value {v}")
        if data.counit(UNIT) != ONE:
            problems.append("counit: epsilon(e1^0) != 1")
    if data.antipode is not None and data.antipode.space != space:
        problems.append(f"antipode blocks have shape {data.antipode.space}, expected {space}")
    return problems


# -- documents -------------------------------------------------------------------

def _bi(b: BasisIndex) -> list:
    return [b.parity, b.position]


def _sorted_terms(terms):
    return sorted(terms, key=lambda t: json.dumps(t, sort_keys=True))


def serialize(data: SuperBialgebraData) -> dict:
    """Canonical JSON-ready document; ordering is deterministic."""
    doc = {
        "id": data.id,
        "n0": data.space.n0,
        "n1": data.space.n1,
        "mult": [
            {"i": _bi(a), "j": _bi(b),
             "out": [{"k": _bi(k), "coeff": str(c)} for k, c in sorted(out.items())]}
            for (a, b), out in sorted(data.mult.entries.items())
        ],
    }
    if data.comult is not None:
        doc["comult"] = [
            {"i": _bi(i),
             "out": [{"l": _bi(l), "r": _bi(r), "coeff": str(c)}
                     for (l, r), c in sorted(out.items())]}
            for i, out in sorted(data.comult.entries.items())
        ]
        doc["counit"] = [{"i": _bi(k), "value": str(v)}
                         for k, v in sorted(data.counit.values.items())]
    if data.antipode is not None:
        doc["antipode"] = {
            "even": [[str(x) for x in row] for row in data.antipode.even],
            "odd": [[str(x) for x in row] for row in data.antipode.odd],
        }
    if data.labels:
        doc["labels"] = [
            {"name": name, "vector": [{"k": _bi(k), "coeff": str(c)} for k, c in sorted(vec.items())]}
            for name, vec in data.labels.items()
        ]
    if data.provenance:
        doc["provenance"] = data.provenance
    return doc


def deserialize(doc: dict) -> SuperBialgebraData:
    """Parse and validate a document; raises ValidationError listing problems."""
    problems = []

    def scalar(text, where):
        try:
            return as_scalar(str(text))
        except MalformedScalarError as exc:
            problems.append(f"{where}: {exc}")
            return ZERO

    def index(raw, where):
        try:
            p, k = raw
            return BasisIndex(int(p), int(k))
        except (TypeError, ValueError):
            problems.append(f"{where}: malformed basis index {raw!r}")
            return BasisIndex(0, 1)

    try:
        space = Superspace(int(doc["n0"]), int(doc["n1"]))
    except (KeyError, TypeError, ValueError, ShapeError) as exc:
        raise ValidationError([f"bad dimensions: {exc}"]) from None
    ident = str(doc.get("id", ""))
    mult = {}
    for n, e in enumerate(doc.get("mult", [])):
        a, b = index(e.get("i"), f"mult[{n}].i"), index(e.get("j"), f"mult[{n}].j")
        out = {}
        for t in e.get("out", []):
            out[index(t.get("k"), f"mult[{n}].k")] = scalar(t.get("coeff"), f"mult[{n}]")
        mult[(a, b)] = out
    comult = counit_v = None
    if "comult" in doc:
        comult = {}
        for n, e in enumerate(doc["comult"]):
            i = index(e.get("i"), f"comult[{n}].i")
            comult[i] = {(index(t.get("l"), f"comult[{n}].l"), index(t.get("r"), f"comult[{n}].r")):
                         scalar(t.get("coeff"), f"comult[{n}]") for t in e.get("out", [])}
    if "counit" in doc:
        counit_v = {index(e.get("i"), f"counit[{n}].i"): scalar(e.get("value"), f"counit[{n}]")
                    for n, e in enumerate(doc["counit"])}
    antipode = None
    if "antipode" in doc:
        anti = doc["antipode"]
        try:
            antipode = GradedLinearMap(
                [[scalar(x, "antipode.even") for x in row] for row in anti.get("even", [])],
                [[scalar(x, "antipode.odd") for x in row] for row in anti.get("odd", [])])
        except ShapeError as exc:
            problems.append(f"antipode: {exc}")
    labels = {}
    for n, e in enumerate(doc.get("labels", [])):
        labels[str(e.get("name"))] = {index(t.get("k"), f"labels[{n}]"): scalar(t.get("coeff"), f"labels[{n}]")
                                      for t in e.get("vector", [])}
    data = SuperBialgebraData(
        id=ident, space=space, mult=MultTable(space, mult),
        comult=ComultTable(space, comult) if comult is not None else None,
        counit=CounitVector(space, counit_v) if counit_v is not None else None,
        antipode=antipode,
        labels={k: _vec(v) for k, v in labels.items()},
        provenance=str(doc.get("provenance", "")),
    )
    problems.extend(validate(data))
    if problems:
        raise ValidationError([f"{ident}: {p}" for p in problems])
    return data


def dumps(data: SuperBialgebraData) -> str:
    return json.dumps(serialize(data), indent=1, sort_keys=True) + "\n"


def loads(text: str) -> SuperBialgebraData:
    return deserialize(json.loads(text))


def load_file(path) -> SuperBialgebraData:
    return loads(Path(path).read_text())


def save_file(data: SuperBialgebraData, path) -> None:
    Path(path).write_text(dumps(data))
