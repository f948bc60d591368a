"""Opposite, coopposite, dual and tensor product records, plus named families.

Every construction works directly on structure constants.  Signs follow the
Koszul rule: swapping two homogeneous factors of parities p and q costs
``(-1)^(pq)``.
"""

from __future__ import annotations

from enum import Enum

from . import linalg
from .graded import UNIT, BasisIndex, GradedLinearMap, Superspace, _add_into
from .scalar import I, ONE, ZERO, as_scalar
from .structures import (
    ComultTable,
    CounitVector,
    MissingStructureError,
    MultTable,
    SuperBialgebraData,
)

__all__ = ["VariantKind", "variant", "change_basis", "dual", "tensor_product", "named_family",
           "UnknownFamilyError"]


class VariantKind(str, Enum):
    OP = "Op"
    COP = "Cop"
    OPCOP = "OpCop"

    def __str__(self):
        return self.value


class UnknownFamilyError(KeyError):
    pass


def _sign(p: int, q: int):
    return -ONE if p & q else ONE


def opposite_mult(mult: MultTable) -> MultTable:
    entries = {}
    for (a, b), out in mult.entries.items():
        s = _sign(a.parity, b.parity)
        entries[(b, a)] = {k: s * c for k, c in out.items()}
    return MultTable(mult.space, entries)


def flip_comult(comult: ComultTable) -> ComultTable:
    entries = {}
    for i, out in comult.entries.items():
        entries[i] = {(r, l): _sign(l.parity, r.parity) * c for (l, r), c in out.items()}
    return ComultTable(comult.space, entries)


def variant(data: SuperBialgebraData, kind) -> SuperBialgebraData:
    """``Op`` uses μ∘τ, ``Cop`` uses τ∘Δ, ``OpCop`` both.

    The antipode of the opposite or coopposite is the inverse of S, and S
    itself for OpCop; it is carried over when it can be computed.
    """
    kind = VariantKind(kind)
    mult, comult = data.mult, data.comult
    if kind in (VariantKind.OP, VariantKind.OPCOP):
        mult = opposite_mult(mult)
    if kind in (VariantKind.COP, VariantKind.OPCOP):
        if comult is None:
            raise MissingStructureError(f"{data.id} has no coproduct to flip")
        comult = flip_comult(comult)
    antipode = data.antipode
    if antipode is not None and kind is not VariantKind.OPCOP:
        antipode = antipode.inverse() if antipode.is_invertible() else None
    return data.with_changes(id=f"{kind.value.lower()}({data.id})", mult=mult, comult=comult,
                             antipode=antipode, labels={})


def change_basis(data: SuperBialgebraData, p: GradedLinearMap, ident: str | None = None,
                 labels: dict | None = None) -> SuperBialgebraData:
    """Re-express a record in the basis ``g_j = P e_j`` (columns of P).

    ``g_1^0`` must be the unit of the algebra.
    """
    space = data.space
    if p.space != space:
        raise ValueError("basis change does not match the record's superspace")
    pinv = p.inverse()
    basis = space.basis()
    image = {b: p.apply_basis(b) for b in basis}

    def back(vec):
        acc = {}
        for k, c in vec.items():
            for j, x in pinv.apply_basis(k).items():
                _add_into(acc, j, c * x)
        return acc

    table = data.mult.entries
    mult = {}
    for a in basis:
        for b in basis:
            acc = {}
            for ka, ca in image[a].items():
                for kb, cb in image[b].items():
                    for k, x in table.get((ka, kb), {}).items():
                        _add_into(acc, k, ca * cb * x)
            out = back(acc)
            if out:
                mult[(a, b)] = out
    if back(image[UNIT]) != {UNIT: ONE} or any(
            mult.get((UNIT, b), {}) != {b: ONE} for b in basis):
        raise ValueError("the first even basis vector of the new basis is not the unit")
    comult = counit = None
    if data.is_bialgebra_record:
        comult, counit = {}, {}
        for j in basis:
            acc = {}
            for k, c in image[j].items():
                for (l, r), x in data.comult.coproduct(k).items():
                    for l2, y in pinv.apply_basis(l).items():
                        for r2, z in pinv.apply_basis(r).items():
                            _add_into(acc, (l2, r2), c * x * y * z)
            comult[j] = acc
            val = sum((c * data.counit(k) for k, c in image[j].items()), ZERO)
            if val:
                counit[j] = val
        comult = ComultTable(space, comult)
        counit = CounitVector(space, counit)
    antipode = None
    if data.antipode is not None:
        antipode = pinv.compose(data.antipode).compose(p)
    return data.with_changes(id=ident or data.id, mult=MultTable(space, mult), comult=comult,
                             counit=counit, antipode=antipode, labels=labels or {})


def dual(data: SuperBialgebraData) -> SuperBialgebraData:
    """Linear dual under the pairing ``(f⊗g)(a⊗b) = (-1)^{|g||a|} f(a) g(b)``.

    The unit of the dual is ε, which is generally not a dual basis vector,
    so the result is re-based with ε as its first even basis vector and the
    remaining dual basis vectors unchanged.
    """
    if not data.is_bialgebra_record:
        raise MissingStructureError(f"dual of {data.id} needs a coproduct and counit")
    space = data.space
    mult = {}
    for k, out in data.comult.entries.items():
        for (i, j), c in out.items():
            _add_into(mult.setdefault((i, j), {}), k, _sign(i.parity, j.parity) * c)
    comult = {}
    for (a, b), out in data.mult.entries.items():
        s = _sign(a.parity, b.parity)
        for k, c in out.items():
            _add_into(comult.setdefault(k, {}), (a, b), s * c)
    raw = SuperBialgebraData(
        id=f"dual({data.id})",
        space=space,
        mult=MultTable(space, mult),
        comult=ComultTable(space, comult),
        counit=CounitVector(space, {UNIT: ONE}),
    )
    if data.antipode is not None:
        raw = raw.with_changes(antipode=GradedLinearMap(linalg.transpose(data.antipode.even),
                                                        linalg.transpose(data.antipode.odd)))
    even = linalg.identity(space.n0)
    for b in space.block(0):
        even[b.position - 1][0] = data.counit(b)
    p = GradedLinearMap(even, linalg.identity(space.n1))
    out = change_basis(raw, p)
    # the dual unit must be group-like; anything else means the input was invalid
    if out.comult.coproduct(UNIT) != {(UNIT, UNIT): ONE}:
        raise ValueError(f"dual of {data.id} has a unit that is not group-like")
    return out


def _pair_index(a: SuperBialgebraData, b: SuperBialgebraData):
    """Order basis pairs by parity with (unit, unit) first."""
    ev, od = [], []
    for pa in (0, 1):
        for x in a.space.block(pa):
            for y in b.space.block(pa):
                ev.append((x, y))
    for pa in (0, 1):
        for x in a.space.block(pa):
            for y in b.space.block(1 - pa):
                od.append((x, y))
    index = {}
    for n, pair in enumerate(ev):
        index[pair] = BasisIndex(0, n + 1)
    for n, pair in enumerate(od):
        index[pair] = BasisIndex(1, n + 1)
    return Superspace(len(ev), len(od)), index


def tensor_product(a: SuperBialgebraData, b: SuperBialgebraData) -> SuperBialgebraData:
    space, index = _pair_index(a, b)
    mult = {}
    for (x, y), k in index.items():
        for (x2, y2), k2 in index.items():
            left = a.mult.product(x, x2)
            right = b.mult.product(y, y2)
            if not left or not right:
                continue
            s = _sign(y.parity, x2.parity)
            acc = {}
            for u, cu in left.items():
                for v, cv in right.items():
                    _add_into(acc, index[(u, v)], s * cu * cv)
            mult[(k, k2)] = acc
    comult = counit = None
    if a.is_bialgebra_record and b.is_bialgebra_record:
        comult, counit = {}, {}
        for (x, y), k in index.items():
            acc = {}
            for (x1, x2), cx in a.comult.coproduct(x).items():
                for (y1, y2), cy in b.comult.coproduct(y).items():
                    s = _sign(x2.parity, y1.parity)
                    _add_into(acc, (index[(x1, y1)], index[(x2, y2)]), s * cx * cy)
            comult[k] = acc
            val = a.counit(x) * b.counit(y)
            if val:
                counit[k] = val
        comult = ComultTable(space, comult)
        counit = CounitVector(space, counit)
    antipode = None
    if a.antipode is not None and b.antipode is not None:
        images = {}
        for (x, y), k in index.items():
            acc = {}
            for u, cu in a.antipode.apply_basis(x).items():
                for v, cv in b.antipode.apply_basis(y).items():
                    _add_into(acc, index[(u, v)], cu * cv)
            images[k] = acc
        antipode = GradedLinearMap.from_images(space, images)
    return SuperBialgebraData(id=f"tensor({a.id},{b.id})", space=space,
                              mult=MultTable(space, mult), comult=comult, counit=counit,
                              antipode=antipode)


# -- named families -----------------------------------------------------------------

E0 = [None, BasisIndex(0, 1), BasisIndex(0, 2), BasisIndex(0, 3), BasisIndex(0, 4)]
E1 = [None, BasisIndex(1, 1), BasisIndex(1, 2), BasisIndex(1, 3)]


def _presented(ident, n0, n1, products, labels, words, delta, eps=None, provenance=""):
    from .catalog.transcribe import LabelBasis

    alg = SuperBialgebraData.build(ident, n0, n1, products, provenance=provenance)
    return LabelBasis(alg, labels, words).extend(delta, eps or {}, ident, provenance)


def _with_antipode(data):
    from .antipode import solve_antipode

    res = solve_antipode(data)
    return data.with_changes(antipode=res.antipode) if res.found else data


def _group_algebra_z2():
    g = E0[2]
    return SuperBialgebraData.build(
        "GroupAlgebraZ2", 2, 0, {(g, g): {E0[1]: ONE}},
        comult={g: {(g, g): ONE}}, counit={g: ONE},
        antipode=GradedLinearMap(linalg.identity(2), []),
        labels={"g": {g: ONE}}, provenance="group algebra of Z/2")


def _lambda_k():
    x = E1[1]
    return SuperBialgebraData.build(
        "LambdaK", 1, 1, {}, comult={x: {(E0[1], x): ONE, (x, E0[1]): ONE}}, counit={},
        antipode=GradedLinearMap([[1]], [[-1]]), labels={"x": {x: ONE}},
        provenance="2-dimensional connected superbialgebra K[x]/(x^2), x odd")


# basis {1 = e1^0, x = e2^0, y = e1^1, xy = e2^1} for the presentations below
_X, _Y, _XY = E0[2], E1[1], E1[2]
_H_LABELS = {"x": {_X: 1}, "y": {_Y: 1}}
_H_WORDS = ["1", "x", "y", "xy"]

# x^2 = x, y^2 = 0, yx = xy
_COMMUTATIVE_XY = {
    (_X, _X): {_X: 1}, (_X, _Y): {_XY: 1}, (_Y, _X): {_XY: 1},
    (_X, _XY): {_XY: 1}, (_XY, _X): {_XY: 1},
}
# x^2 = x, y^2 = 0, xy + yx = y
_ANTI_XY = {
    (_X, _X): {_X: 1}, (_X, _Y): {_XY: 1}, (_Y, _X): {_Y: 1, _XY: -1},
    (_X, _XY): {_XY: 1},
}


def _h1():
    return _presented("H1", 2, 2, _COMMUTATIVE_XY, _H_LABELS, _H_WORDS,
                      {"x": "1@x + x@1 - 2x@x", "y": "1@y + y@1"},
                      provenance="H1 presentation, relations x^2-x, y^2, xy-yx")


def _h2():
    return _presented("H2", 2, 2, _ANTI_XY, _H_LABELS, _H_WORDS,
                      {"x": "1@x + x@1 - 2x@x", "y": "1@y + y@1 - 2x@y - 2y@x"},
                      provenance="H2 presentation, relations x^2-x, y^2, xy+yx-y")


def _h4():
    return _presented("H4", 2, 2, _COMMUTATIVE_XY, _H_LABELS, _H_WORDS,
                      {"x": "1@x + x@1 - 2x@x", "y": "1@y + y@1 - 2x@y"},
                      provenance="H4 presentation, relations x^2-x, y^2, xy-yx")


def _lambda_k2(ident="LambdaK2"):
    # basis {1, xy, x, y}: xy even, x and y odd
    xy, x, y = E0[2], E1[1], E1[2]
    products = {(x, y): {xy: 1}, (y, x): {xy: -1}}
    return _presented(ident, 2, 2, products, {"x": {x: 1}, "y": {y: 1}}, ["1", "xy", "x", "y"],
                      {"x": "1@x + x@1", "y": "1@y + y@1"},
                      provenance="exterior algebra of K^2 with primitive generators")


def _h5(root=I):
    from .catalog import sources

    root = as_scalar(root)
    if root * root != -ONE:
        raise ValueError("H5 needs a primitive 4th root of unity (i or -i)")
    lb = sources.label_basis("A_{1|1}")
    return lb.extend({"x": [(ONE, "x", "x"), (-root, "y", "y")], "y": "x@y + y@x"},
                     {"x": 1}, f"H5({root})", provenance="H5, dim A0 = 3 Hopf superalgebra")


def _m2_graded():
    from .catalog import sources

    return sources.superalgebra("A_{10|1}").with_changes(id="M2Graded")


def _trivial(payload):
    if isinstance(payload, SuperBialgebraData):
        if payload.space.n1:
            raise ValueError("a trivial superbialgebra has no odd part")
        return payload.with_changes(id=f"trivial({payload.id})")
    payload = dict(payload)
    ident = payload.pop("id", "trivial")
    n0 = payload.pop("n0")
    return SuperBialgebraData.build(ident, n0, 0, **payload)


_FAMILIES = {
    "GroupAlgebraZ2": _group_algebra_z2,
    "LambdaK": _lambda_k,
    "LambdaK2": _lambda_k2,
    "H1": lambda: _with_antipode(_h1()),
    "H2": lambda: _with_antipode(_h2()),
    "H3": lambda: _with_antipode(_lambda_k2("H3")),
    "H4": lambda: _with_antipode(_h4()),
    "M2Graded": _m2_graded,
}


def named_family(name: str, param=None) -> SuperBialgebraData:
    """Records for the named structures.

    ``H5`` takes the chosen 4th root of unity (default ``i``) and
    ``TrivialFromBialgebra`` takes an ordinary bialgebra as payload.
    """
    if name == "H5":
        return _with_antipode(_h5(I if param is None else param))
    if name.startswith("H5(") and name.endswith(")"):
        return _with_antipode(_h5(name[3:-1]))
    if name == "TrivialFromBialgebra":
        return _trivial(param)
    try:
        return _FAMILIES[name]()
    except KeyError:
        raise UnknownFamilyError(name) from None
