"""Antipodes by exact linear algebra.

The antipode is an even map, so its unknowns are the entries of the two
diagonal blocks.  Both convolution identities ``mu (S (x) id) Delta = eta eps``
and ``mu (id (x) S) Delta = eta eps`` are linear in those entries; writing
them out on every basis vector gives a system that Gaussian elimination
decides.  An inconsistent system comes back with the combination of
equations that reduces to ``0 = c``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from . import linalg
from .axioms import check_all, comult_vec, is_cocommutative, is_commutative, mul_vec
from .constructions import VariantKind, variant
from .graded import UNIT, BasisIndex, GradedLinearMap, _add_into
from .scalar import ONE, ZERO
from .structures import SuperBialgebraData

__all__ = [
    "AntipodeStatus",
    "AntipodeResult",
    "Certificate",
    "PropertyReport",
    "solve_antipode",
    "verify_properties",
    "convolution_residuals",
    "hopf_census",
    "Census",
]


class AntipodeStatus(str, Enum):
    FOUND = "Found"
    NOT_FOUND = "NotFound"
    NON_UNIQUE = "NonUnique"

    def __str__(self):
        return self.value


@dataclass
class Certificate:
    """A combination of antipode equations that collapses to ``0 = rhs``."""

    terms: list          # (multiplier, equation label)
    rhs: object          # nonzero scalar

    def __str__(self):
        combo = " + ".join(f"({c})*[{label}]" for c, label in self.terms)
        return f"{combo} gives 0 = {self.rhs}"


@dataclass
class AntipodeResult:
    status: AntipodeStatus
    antipode: GradedLinearMap | None = None
    certificate: Certificate | None = None
    kernel_dim: int = 0
    precondition_ok: bool = True

    @property
    def found(self) -> bool:
        return self.status is AntipodeStatus.FOUND


def _unknowns(space):
    """Index of each block entry: (parity, row k, column j) -> column number."""
    out = {}
    for p, n in ((0, space.n0), (1, space.n1)):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                out[(p, k, j)] = len(out)
    return out


def _system(data: SuperBialgebraData):
    space = data.space
    unknowns = _unknowns(space)
    table = data.mult.entries
    rows, rhs, labels = [], [], []
    for i in data.basis():
        delta = data.comult.coproduct(i)
        for side in ("left", "right"):
            acc = {}   # output basis -> {unknown: coefficient}
            for (l, r), c in delta.items():
                moved, fixed = (l, r) if side == "left" else (r, l)
                for k in range(1, (space.n0 if moved.parity == 0 else space.n1) + 1):
                    ek = BasisIndex(moved.parity, k)
                    pair = (ek, fixed) if side == "left" else (fixed, ek)
                    for out, x in table.get(pair, {}).items():
                        row = acc.setdefault(out, {})
                        _add_into(row, unknowns[(moved.parity, k, moved.position)], c * x)
            target = data.counit(i)
            for out in data.basis():
                row = acc.get(out, {})
                want = target if out == UNIT else ZERO
                if not row and not want:
                    continue
                dense = [ZERO] * len(unknowns)
                for col, x in row.items():
                    dense[col] = x
                rows.append(dense)
                rhs.append(want)
                labels.append(f"{side} convolution at {i}, coefficient of {out}")
    return unknowns, rows, rhs, labels


def _map_from_solution(space, unknowns, x) -> GradedLinearMap:
    even = linalg.zeros(space.n0, space.n0)
    odd = linalg.zeros(space.n1, space.n1)
    for (p, k, j), col in unknowns.items():
        (even if p == 0 else odd)[k - 1][j - 1] = x[col]
    return GradedLinearMap(even, odd)


def solve_antipode(data: SuperBialgebraData, check: bool = True) -> AntipodeResult:
    """Decide whether ``data`` has an antipode and return it when it does.

    With ``check`` the superbialgebra axioms are verified first; a record
    failing them is still solved but the result carries
    ``precondition_ok = False``.
    """
    ok = True
    if check:
        ok = all(r.holds for r in check_all(data, informational=False))
    unknowns, rows, rhs, labels = _system(data)
    if not rows:
        rows = [[ZERO] * len(unknowns)]
        rhs, labels = [ZERO], ["empty"]
    sol = linalg.solve_linear(rows, rhs)
    if not sol.consistent:
        y = sol.certificate
        terms = [(c, labels[n]) for n, c in enumerate(y) if c]
        value = sum((c * rhs[n] for n, c in enumerate(y) if c), ZERO)
        return AntipodeResult(AntipodeStatus.NOT_FOUND, certificate=Certificate(terms, value),
                              precondition_ok=ok)
    if sol.kernel:
        return AntipodeResult(AntipodeStatus.NON_UNIQUE, kernel_dim=len(sol.kernel),
                              precondition_ok=ok)
    s = _map_from_solution(data.space, unknowns, sol.particular)
    return AntipodeResult(AntipodeStatus.FOUND, antipode=s, precondition_ok=ok)


def convolution_residuals(data: SuperBialgebraData, s) -> list:
    """Basis vectors where either convolution identity fails, with the side."""
    table = data.mult.entries
    out = []
    for i in data.basis():
        target = {UNIT: data.counit(i)} if data.counit(i) else {}
        left, right = {}, {}
        for (l, r), c in data.comult.coproduct(i).items():
            for k, x in mul_vec(table, s.apply_basis(l), {r: ONE}).items():
                _add_into(left, k, c * x)
            for k, x in mul_vec(table, {l: ONE}, s.apply_basis(r)).items():
                _add_into(right, k, c * x)
        for side, got in (("left", left), ("right", right)):
            if got != target:
                out.append((i, side))
    return out


# -- the seven properties --------------------------------------------------------

PROPERTY_NAMES = {
    1: "anti-homomorphism with the superflip",
    2: "S o eta = eta",
    3: "eps o S = eps",
    4: "tau o (S (x) S) o Delta = Delta o S",
    5: "S^2 = id when commutative or cocommutative",
    6: "coopposite with the inverse antipode is Hopf",
    7: "S bijective",
}


@dataclass
class PropertyReport:
    valid: bool                                    # S satisfies the convolution identities
    results: dict = field(default_factory=dict)    # number -> bool
    applicable: dict = field(default_factory=dict)  # number -> bool

    @property
    def holds(self) -> bool:
        return self.valid and all(self.results.values())


def _anti_homomorphism(data, s):
    table = data.mult.entries
    for a in data.basis():
        for b in data.basis():
            lhs = {}
            for k, c in table.get((a, b), {}).items():
                for m, x in s.apply_basis(k).items():
                    _add_into(lhs, m, c * x)
            rhs = mul_vec(table, s.apply_basis(b), s.apply_basis(a))
            if a.parity & b.parity:
                rhs = {k: -v for k, v in rhs.items()}
            if lhs != rhs:
                return False
    return True


def _skew_comultiplicative(data, s):
    for a in data.basis():
        lhs = {}
        for (l, r), c in data.comult.coproduct(a).items():
            for l2, x in s.apply_basis(l).items():
                for r2, y in s.apply_basis(r).items():
                    sign = -1 if l2.parity & r2.parity else 1
                    _add_into(lhs, (r2, l2), c * x * y * sign)
        rhs = comult_vec(data.comult.entries, s.apply_basis(a))
        if lhs != rhs:
            return False
    return True


def verify_properties(data: SuperBialgebraData, s: GradedLinearMap) -> PropertyReport:
    report = PropertyReport(valid=not convolution_residuals(data, s))
    res, app = report.results, report.applicable
    res[1] = _anti_homomorphism(data, s)
    res[2] = s.apply_basis(UNIT) == {UNIT: ONE}
    res[3] = all(
        sum((c * data.counit(k) for k, c in s.apply_basis(b).items()), ZERO) == data.counit(b)
        for b in data.basis())
    res[4] = _skew_comultiplicative(data, s)
    app[5] = is_commutative(data) or is_cocommutative(data)
    res[5] = (not app[5]) or s.compose(s) == GradedLinearMap.identity(data.space)
    res[7] = s.is_invertible()
    app[6] = res[7]
    if res[7]:
        inv = s.inverse()
        cop = variant(data, VariantKind.COP)
        res[6] = (all(r.holds for r in check_all(cop, informational=False))
                  and not convolution_residuals(cop, inv))
    else:
        res[6] = True
    return report


# -- census ---------------------------------------------------------------------

def family(ident: str) -> str:
    return ident.split("^", 1)[0]


@dataclass
class Census:
    rows: dict            # id -> AntipodeResult
    per_family: dict      # family -> (records, found)

    def found(self) -> list[str]:
        return sorted(i for i, r in self.rows.items() if r.found)

    def status_counts(self) -> Counter:
        return Counter(str(r.status) for r in self.rows.values())


def hopf_census(records) -> Census:
    rows = {}
    per_family = {}
    for d in records:
        res = solve_antipode(d)
        rows[d.id] = res
        n, f = per_family.get(family(d.id), (0, 0))
        per_family[family(d.id)] = (n + 1, f + int(res.found))
    return Census(rows, per_family)
