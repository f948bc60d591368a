"""Invariants and isomorphism search for superbialgebras.

Primitive elements come from an exact kernel computation and group-likes
from the polynomial solver.  A :class:`Fingerprint` collects these together
with the (co)commutativity predicates, antipode existence and the
dimensions of the powers of the augmentation ideal, once for the record
and once for its dual.

:func:`find_isomorphism` compares fingerprints first.  When they agree it
searches for an even map ``T`` satisfying the morphism laws, guided by the
group-likes and primitives.  A differing fingerprint field certifies
non-isomorphism.  A search that runs out returns ``Undetermined``; it never
concludes non-isomorphism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, fields
from enum import Enum

from . import linalg
from .antipode import solve_antipode
from .axioms import comult_vec, is_cocommutative, is_commutative, mul_vec
from .constructions import dual
from .graded import UNIT, BasisIndex, GradedLinearMap, ShapeError, _add_into
from .poly import Poly
from .scalar import ONE, ZERO, as_scalar, solve_univariate
from .search import GridSpec, SearchStatus, UnknownSystem
from .structures import SuperBialgebraData

__all__ = [
    "Primitives",
    "GroupCount",
    "Grouplikes",
    "Fingerprint",
    "IsoStatus",
    "IsoResult",
    "primitives",
    "grouplikes",
    "augmentation_filtration",
    "skew_primitive_profile",
    "fingerprint",
    "fingerprint_difference",
    "isomorphism_system",
    "find_isomorphism",
    "is_morphism",
    "DistinctnessReport",
    "distinctness_report",
]


# -- primitives ------------------------------------------------------------------

@dataclass
class Primitives:
    even: list      # echelonized basis vectors, each a dict over the e-basis
    odd: list

    @property
    def dims(self) -> tuple[int, int]:
        return len(self.even), len(self.odd)


def _block_kernel(data, p, residual):
    """Echelonized kernel of ``a -> residual(a)`` on the parity-p block."""
    block = data.space.block(p)
    images = [residual(b) for b in block]
    keys = sorted({k for img in images for k in img}, key=str)
    rows = [[img.get(k, ZERO) for img in images] for k in keys]
    if not rows:
        rows = [[ZERO] * len(block)]
    kernel = linalg.nullspace(rows, len(block))
    if not kernel:
        return []
    red = linalg.rref(kernel, len(block))
    return [{b: c for b, c in zip(block, row) if c} for row in red.rows]


def primitives(data: SuperBialgebraData) -> Primitives:
    """Kernel of ``a -> Delta(a) - a(x)1 - 1(x)a`` on ``ker eps``, split by parity."""
    def residual(b):
        acc = dict(data.comult.coproduct(b))
        _add_into(acc, (b, UNIT), -ONE)
        _add_into(acc, (UNIT, b), -ONE)
        if data.counit(b):
            acc["eps"] = data.counit(b)
        return acc

    return Primitives(_block_kernel(data, 0, residual), _block_kernel(data, 1, residual))


# -- group-likes -----------------------------------------------------------------

@dataclass(frozen=True)
class GroupCount:
    """Exact count, a lower bound, or nothing known."""

    kind: str        # "exact", "at_least" or "undetermined"
    n: int = 0

    def compatible(self, other: "GroupCount") -> bool:
        if "undetermined" in (self.kind, other.kind):
            return True
        if self.kind == other.kind == "exact":
            return self.n == other.n
        if self.kind == "exact":
            return self.n >= other.n
        if other.kind == "exact":
            return other.n >= self.n
        return True

    def __str__(self):
        return {"exact": str(self.n), "at_least": f">={self.n}"}.get(self.kind, "?")


@dataclass
class Grouplikes:
    determined: bool
    elements: list          # dicts over the even basis

    @property
    def count(self) -> GroupCount:
        if self.determined:
            return GroupCount("exact", len(self.elements))
        return GroupCount("at_least", len(self.elements)) if self.elements else GroupCount("undetermined")


def _is_grouplike(data, g):
    want = {}
    for a, ca in g.items():
        for b, cb in g.items():
            _add_into(want, (a, b), ca * cb)
    eps = sum((c * data.counit(k) for k, c in g.items()), ZERO)
    return comult_vec(data.comult.entries, g) == want and eps == ONE


def _solve_grouplikes(data, span, budget):
    """Group-likes inside ``span`` (a list of even vectors) by the polynomial solver."""
    even = data.space.block(0)
    t = [Poly.var(n) for n in range(len(span))]
    g = {}
    for tj, v in zip(t, span):
        for b, c in v.items():
            _add_into(g, b, tj * c)
    acc = {}
    for b, x in g.items():
        for k, c in data.comult.coproduct(b).items():
            _add_into(acc, k, x * c)
    for b, x in g.items():
        for b2, y in g.items():
            _add_into(acc, (b, b2), -(x * y))
    cons = list(acc.values())
    cons.append(sum((x * data.counit(b) for b, x in g.items()), Poly()) - ONE)
    res = UnknownSystem([f"t{n}" for n in range(len(span))], cons).solve(budget=budget)
    found = []
    for sol in res.solutions:
        vec = {}
        for n, v in enumerate(span):
            for b, c in v.items():
                _add_into(vec, b, sol.get(n, ZERO) * c)
        found.append(vec)
    return found, res.status is SearchStatus.COMPLETE


def grouplikes(data: SuperBialgebraData, budget: int = 20000) -> Grouplikes:
    """Solve ``Delta(g) = g(x)g``, ``eps(g) = 1`` over the even basis.

    A group-like g is an eigenvector of ``(f (x) id) o Delta`` with eigenvalue
    ``f(g)`` for every even functional f.  One fixed combination of the
    coordinate functionals turns the quadratic system into an eigenvalue
    problem; only eigenspaces of dimension above one go to the solver.
    """
    even = data.space.block(0)
    n = len(even)
    weights = {b: as_scalar(3 ** k) for k, b in enumerate(even)}
    m = linalg.zeros(n, n)
    for j, b in enumerate(even):
        for (l, r), c in data.comult.coproduct(b).items():
            if l.parity == 0 and r.parity == 0:
                m[r.position - 1][j] = m[r.position - 1][j] + weights[l] * c
    lam = Poly.var(0)
    char = _det_poly([[Poly.const(m[i][j]) - (lam if i == j else Poly()) for j in range(n)]
                      for i in range(n)])
    determined = True
    candidates = []
    if n > 4:
        candidates, determined = _solve_grouplikes(data, [{b: ONE} for b in even], budget)
    else:
        # a rational group-like has a rational eigenvalue, so factors left
        # unresolved over the field cannot carry one
        sol = solve_univariate(char.univariate(0))
        for root in sol.roots:
            shifted = [[m[i][j] - (root if i == j else ZERO) for j in range(n)] for i in range(n)]
            space = [{even[i]: x for i, x in enumerate(v) if x} for v in linalg.nullspace(shifted)]
            if len(space) == 1:
                (v,) = space
                e = sum((c * data.counit(b) for b, c in v.items()), ZERO)
                if e:
                    candidates.append({b: c / e for b, c in v.items()})
            else:
                found, complete = _solve_grouplikes(data, space, budget)
                candidates.extend(found)
                determined &= complete
    elements = []
    for g in candidates:
        g = {b: c for b, c in g.items() if c}
        if _is_grouplike(data, g) and g not in elements:
            elements.append(g)
    elements.sort(key=lambda g: [g.get(b, ZERO).sort_key() for b in even])
    return Grouplikes(determined, elements)


# -- skew-primitives -------------------------------------------------------------

def skew_primitive_profile(data: SuperBialgebraData, gl: Grouplikes | None = None):
    """Sorted multiset of ``(g == 1, h == 1, g == h, even dim, odd dim)`` over ordered
    pairs of group-likes, where the dims are those of
    ``P_{g,h} = {a : Delta(a) = a(x)g + h(x)a}``.  None when the group-likes are not
    determined.
    """
    gl = gl or grouplikes(data)
    if not gl.determined:
        return None
    one = {UNIT: ONE}
    out = []
    for g in gl.elements:
        for h in gl.elements:
            def residual(b, g=g, h=h):
                acc = dict(data.comult.coproduct(b))
                for k, c in g.items():
                    _add_into(acc, (b, k), -c)
                for k, c in h.items():
                    _add_into(acc, (k, b), -c)
                return acc

            dims = (len(_block_kernel(data, 0, residual)), len(_block_kernel(data, 1, residual)))
            out.append((g == one, h == one, g == h) + dims)
    return tuple(sorted(out))


# -- augmentation filtration ------------------------------------------------------

def augmentation_filtration(data: SuperBialgebraData, depth: int = 4) -> tuple:
    """(even, odd) dimensions of ``I, I^2, ...`` for the augmentation ideal ``I = ker eps``."""
    table = data.mult.entries
    basis = data.basis()
    ideal = []
    for b in basis:
        if b == UNIT:
            continue
        v = {b: ONE}
        if b.parity == 0 and data.counit(b):
            v[UNIT] = -data.counit(b)
        ideal.append(v)
    out = []
    power = ideal
    for _ in range(depth):
        dims = []
        for p in (0, 1):
            vecs = [v for v in power if all(k.parity == p for k in v)]
            rows = [[v.get(b, ZERO) for b in basis] for v in vecs]
            dims.append(linalg.rank(rows) if rows else 0)
        out.append(tuple(dims))
        prods = [mul_vec(table, v, w) for v in power for w in ideal]
        power = _homogeneous_basis(basis, [p for p in prods if p])
    return tuple(out)


def _homogeneous_basis(basis, vectors):
    """Basis of the span of homogeneous vectors, kept homogeneous."""
    out = []
    for p in (0, 1):
        vecs = [{k: c for k, c in v.items() if k.parity == p} for v in vectors]
        rows = [[v.get(b, ZERO) for b in basis] for v in vecs if v]
        if rows:
            for row in linalg.rref(rows, len(basis)).rows:
                out.append({b: c for b, c in zip(basis, row) if c})
    return out


# -- fingerprints ----------------------------------------------------------------

@dataclass(frozen=True)
class Fingerprint:
    is_commutative: bool
    is_cocommutative: bool
    dim_even_primitives: int
    dim_odd_primitives: int
    grouplike_count: GroupCount
    has_antipode: bool
    counit_spectrum: tuple          # augmentation filtration, see augmentation_filtration
    skew_primitives: tuple | None = None
    dual_level1: "Fingerprint | None" = None

    def as_dict(self) -> dict:
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, Fingerprint):
                v = v.as_dict()
            elif isinstance(v, GroupCount):
                v = str(v)
            elif isinstance(v, tuple):
                v = [list(x) for x in v]
            out[f.name] = v
        return out


def _fingerprint_level(data) -> Fingerprint:
    prim = primitives(data)
    gl = grouplikes(data)
    return Fingerprint(
        is_commutative=is_commutative(data),
        is_cocommutative=is_cocommutative(data),
        dim_even_primitives=len(prim.even),
        dim_odd_primitives=len(prim.odd),
        grouplike_count=gl.count,
        has_antipode=solve_antipode(data, check=False).found,
        counit_spectrum=augmentation_filtration(data),
        skew_primitives=skew_primitive_profile(data, gl),
    )


def fingerprint(data: SuperBialgebraData) -> Fingerprint:
    top = _fingerprint_level(data)
    return Fingerprint(**{f.name: getattr(top, f.name) for f in fields(top) if f.name != "dual_level1"},
                       dual_level1=_fingerprint_level(dual(data)))


def fingerprint_difference(f1: Fingerprint, f2: Fingerprint, prefix: str = "") -> str | None:
    """Name of the first field that certifies a difference, or None."""
    for f in fields(f1):
        a, b = getattr(f1, f.name), getattr(f2, f.name)
        if isinstance(a, Fingerprint) and isinstance(b, Fingerprint):
            sub = fingerprint_difference(a, b, prefix + f.name + ".")
            if sub:
                return sub
        elif isinstance(a, GroupCount):
            if not a.compatible(b):
                return prefix + f.name
        elif a is None or b is None:
            continue
        elif a != b:
            return prefix + f.name
    return None


# -- isomorphisms ----------------------------------------------------------------

class IsoStatus(str, Enum):
    ISO = "Iso"
    NON_ISO = "NonIso"
    UNDETERMINED = "Undetermined"

    def __str__(self):
        return self.value


@dataclass
class IsoResult:
    status: IsoStatus
    map: GradedLinearMap | None = None
    witness: str | None = None         # differing fingerprint field
    detail: str = ""

    @property
    def is_iso(self) -> bool:
        return self.status is IsoStatus.ISO

    def as_dict(self) -> dict:
        out = {"status": str(self.status)}
        if self.map is not None:
            out["map"] = {"even": [[str(x) for x in row] for row in self.map.even],
                          "odd": [[str(x) for x in row] for row in self.map.odd]}
        if self.witness:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out


def is_morphism(d1: SuperBialgebraData, d2: SuperBialgebraData, t: GradedLinearMap) -> bool:
    """Exact check that T is a unital algebra and counital coalgebra morphism."""
    basis = d1.basis()
    t1 = d1.mult.entries
    t2 = d2.mult.entries
    if t.apply_basis(UNIT) != {UNIT: ONE}:
        return False
    for a in basis:
        ta = t.apply_basis(a)
        for b in basis:
            lhs = {}
            for k, c in t1.get((a, b), {}).items():
                for m, x in t.apply_basis(k).items():
                    _add_into(lhs, m, c * x)
            if lhs != mul_vec(t2, ta, t.apply_basis(b)):
                return False
        lhs = comult_vec(d2.comult.entries, ta)
        rhs = {}
        for (l, r), c in d1.comult.coproduct(a).items():
            for l2, x in t.apply_basis(l).items():
                for r2, y in t.apply_basis(r).items():
                    _add_into(rhs, (l2, r2), c * x * y)
        if lhs != rhs:
            return False
        if sum((c * d2.counit(k) for k, c in ta.items()), ZERO) != d1.counit(a):
            return False
    return True


@dataclass
class IsoSystem:
    system: UnknownSystem
    cells: dict       # (parity, row k, column j) -> variable index or fixed scalar

    def to_map(self, values: dict, space) -> GradedLinearMap:
        even = linalg.zeros(space.n0, space.n0)
        odd = linalg.zeros(space.n1, space.n1)
        for (p, k, j), v in self.cells.items():
            val = values.get(v, ZERO) if isinstance(v, int) else v
            (even if p == 0 else odd)[k - 1][j - 1] = val
        return GradedLinearMap(even, odd)


def _det_poly(rows):
    n = len(rows)
    if n == 0:
        return Poly.const(ONE)
    if n == 1:
        return rows[0][0]
    total = Poly()
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _det_poly(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def isomorphism_system(d1: SuperBialgebraData, d2: SuperBialgebraData,
                       extra=None, invertible: bool = True) -> IsoSystem:
    """Polynomial system for even maps T: d1 -> d2 preserving all structure.

    ``extra`` adds linear constraints given as ``{(parity, k, j): value}``
    cells.  With ``invertible`` two auxiliary unknowns force both block
    determinants to be nonzero.
    """
    if d1.space != d2.space:
        raise ShapeError("isomorphisms need equal superspace dimensions")
    space = d1.space
    names, cells = [], {}
    for p in (0, 1):
        n = space.n0 if p == 0 else space.n1
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if p == 0 and j == 1:
                    cells[(0, k, 1)] = ONE if k == 1 else ZERO
                    continue
                cells[(p, k, j)] = len(names)
                names.append(f"T[{p}][{k},{j}]")

    def entry(p, k, j):
        v = cells[(p, k, j)]
        return Poly.var(v) if isinstance(v, int) else Poly.const(v)

    def image(b):
        n = space.n0 if b.parity == 0 else space.n1
        return {BasisIndex(b.parity, k): entry(b.parity, k, b.position) for k in range(1, n + 1)}

    basis = d1.basis()
    images = {b: image(b) for b in basis}
    t1, t2 = d1.mult.entries, d2.mult.entries
    cons = []
    for a in basis:
        for b in basis:
            acc = {}
            for k, c in t1.get((a, b), {}).items():
                for m, x in images[k].items():
                    _add_into(acc, m, x * c)
            for m, x in mul_vec(t2, images[a], images[b]).items():
                _add_into(acc, m, -x)
            cons.extend(acc.values())
        acc = {}
        for k, x in images[a].items():
            for key, c in d2.comult.coproduct(k).items():
                _add_into(acc, key, x * c)
        for (l, r), c in d1.comult.coproduct(a).items():
            for l2, x in images[l].items():
                for r2, y in images[r].items():
                    _add_into(acc, (l2, r2), -(x * y * c))
        cons.extend(acc.values())
        eps = sum((x * d2.counit(k) for k, x in images[a].items()), Poly()) - d1.counit(a)
        cons.append(eps)
    for cell, value in (extra or {}).items():
        cons.append(entry(*cell) - value)
    if invertible:
        for p in (0, 1):
            n = space.n0 if p == 0 else space.n1
            if n == 0:
                continue
            rows = [[entry(p, k, j) for j in range(1, n + 1)] for k in range(1, n + 1)]
            cons.append(_det_poly(rows) * Poly.var(len(names)) - ONE)
            names.append(f"inv_det[{p}]")
    return IsoSystem(UnknownSystem(names, [c for c in cons if c]), cells)


def _guidance(d1, d2):
    """Linear constraints from primitives and branches from group-likes."""
    space = d1.space
    lin = []
    p1, p2 = primitives(d1), primitives(d2)
    for par, vecs1, vecs2 in ((0, p1.even, p2.even), (1, p1.odd, p2.odd)):
        block = space.block(par)
        # T(v) must lie in span(vecs2): annihilate with the complement equations
        rows = [[v.get(b, ZERO) for b in block] for v in vecs2]
        ann = linalg.nullspace(rows, len(block)) if rows else linalg.identity(len(block))
        for v in vecs1:
            for w in ann:
                lin.append((par, v, w))
    g1, g2 = grouplikes(d1), grouplikes(d2)
    branches = [[]]
    if g1.determined and g2.determined:
        rest1 = [g for g in g1.elements if g != {UNIT: ONE}]
        rest2 = [g for g in g2.elements if g != {UNIT: ONE}]
        if len(rest1) == len(rest2) and rest1:
            branches = [list(zip(rest1, perm)) for perm in itertools.permutations(rest2)]
    return lin, branches


def _linear_constraints(sys_, lin, pairs, space):
    """Polynomials expressing the guidance in the unknown entries."""
    def entry(p, k, j):
        v = sys_.cells[(p, k, j)]
        return Poly.var(v) if isinstance(v, int) else Poly.const(v)

    def t_of(vec):
        acc = {}
        for b, c in vec.items():
            n = space.n0 if b.parity == 0 else space.n1
            for k in range(1, n + 1):
                _add_into(acc, BasisIndex(b.parity, k), entry(b.parity, k, b.position) * c)
        return acc

    cons = []
    for par, v, w in lin:
        tv = t_of(v)
        block = space.block(par)
        cons.append(sum((tv.get(b, Poly()) * c for b, c in zip(block, w)), Poly()))
    for g, h in pairs:
        tg = t_of(g)
        for b in space.block(0):
            cons.append(tg.get(b, Poly()) - h.get(b, ZERO))
    return [c for c in cons if c]


def find_isomorphism(d1: SuperBialgebraData, d2: SuperBialgebraData,
                     grid: GridSpec | None = None, budget: int = 20000,
                     prints: tuple | None = None) -> IsoResult:
    """Iso(T), NonIso(differing fingerprint field) or Undetermined."""
    if d1.space != d2.space:
        raise ShapeError(f"{d1.id} is {d1.space}, {d2.id} is {d2.space}")
    f1, f2 = prints if prints else (fingerprint(d1), fingerprint(d2))
    diff = fingerprint_difference(f1, f2)
    if diff:
        return IsoResult(IsoStatus.NON_ISO, witness=diff)
    lin, branches = _guidance(d1, d2)
    base = isomorphism_system(d1, d2)
    space = d1.space
    grid_used = False
    for pairs in branches:
        cons = base.system.constraints + _linear_constraints(base, lin, pairs, space)
        system = UnknownSystem(base.system.variables, cons)

        def accept(values):
            t = base.to_map(values, space)
            return t.is_invertible() and is_morphism(d1, d2, t)

        res = system.solve(grid=grid, budget=budget, stop=accept)
        grid_used |= res.status is SearchStatus.GRID_LIMITED
        for values in res.solutions:
            t = base.to_map(values, space)
            if t.is_invertible() and is_morphism(d1, d2, t):
                return IsoResult(IsoStatus.ISO, map=t)
    detail = "grid-limited search found no isomorphism" if grid_used else \
        "exact elimination found no isomorphism"
    return IsoResult(IsoStatus.UNDETERMINED, detail=detail)


# -- pairwise distinctness -------------------------------------------------------

@dataclass
class DistinctnessReport:
    """Outcome of every within-family pair, keyed by ``(id1, id2)``."""

    non_iso: dict        # pair -> differing fingerprint field
    iso: dict            # pair -> IsoResult
    undetermined: dict   # pair -> detail

    @property
    def pairs(self) -> int:
        return len(self.non_iso) + len(self.iso) + len(self.undetermined)

    def as_dict(self) -> dict:
        def key(p):
            return f"{p[0]} ~ {p[1]}"
        return {
            "pairs": self.pairs,
            "non_iso": len(self.non_iso),
            "iso": {key(p): r.as_dict() for p, r in self.iso.items()},
            "undetermined": {key(p): d for p, d in self.undetermined.items()},
        }


def distinctness_report(groups: dict, budget: int = 20000) -> DistinctnessReport:
    """Run the isomorphism pipeline on every pair inside each group.

    ``groups`` maps a family name to its records.  Fingerprints are computed
    once per record.
    """
    prints = {}
    non_iso, iso, undetermined = {}, {}, {}
    for name in sorted(groups):
        records = groups[name]
        for d in records:
            if d.id not in prints:
                prints[d.id] = fingerprint(d)
        for a, b in itertools.combinations(records, 2):
            res = find_isomorphism(a, b, budget=budget, prints=(prints[a.id], prints[b.id]))
            pair = (a.id, b.id)
            if res.status is IsoStatus.NON_ISO:
                non_iso[pair] = res.witness
            elif res.is_iso:
                iso[pair] = res
            else:
                undetermined[pair] = res.detail
    return DistinctnessReport(non_iso, iso, undetermined)
