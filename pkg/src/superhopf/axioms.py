"""Exact verification of the super(bi)algebra axioms on basis tuples.

Everything is multilinear, so checking basis pairs and triples is enough.
A report lists, for each offending basis tuple, the residual LHS - RHS.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .graded import UNIT, BasisIndex, GradedVector, TensorVector, _add_into
from .scalar import ONE, ZERO
from .structures import MissingStructureError, SuperBialgebraData

__all__ = ["AxiomId", "AxiomReport", "STRUCTURAL", "check_axiom", "check_all", "is_superbialgebra"]


class AxiomId(str, Enum):
    ASSOCIATIVITY = "Associativity"
    UNIT = "Unit"
    COASSOCIATIVITY = "Coassociativity"
    COUNIT = "Counit"
    COMPAT_DELTA_MU = "CompatDeltaMu"
    COMPAT_DELTA_ETA = "CompatDeltaEta"
    COMPAT_EPS_MU = "CompatEpsMu"
    COMPAT_EPS_ETA = "CompatEpsEta"
    GROUPLIKE_UNIT = "GrouplikeUnit"
    COMMUTATIVE = "Commutative"
    COCOMMUTATIVE = "Cocommutative"

    def __str__(self):
        return self.value


STRUCTURAL = (
    AxiomId.ASSOCIATIVITY,
    AxiomId.UNIT,
    AxiomId.COASSOCIATIVITY,
    AxiomId.COUNIT,
    AxiomId.COMPAT_DELTA_MU,
    AxiomId.COMPAT_DELTA_ETA,
    AxiomId.COMPAT_EPS_MU,
    AxiomId.COMPAT_EPS_ETA,
    AxiomId.GROUPLIKE_UNIT,
)
INFORMATIONAL = (AxiomId.COMMUTATIVE, AxiomId.COCOMMUTATIVE)

_NEEDS_COALGEBRA = set(STRUCTURAL[2:]) | {AxiomId.COCOMMUTATIVE}


@dataclass
class AxiomReport:
    axiom: AxiomId
    violations: list = field(default_factory=list)   # (basis tuple, residual)

    @property
    def holds(self) -> bool:
        return not self.violations

    @property
    def informational(self) -> bool:
        return self.axiom in INFORMATIONAL

    def __repr__(self):
        state = "holds" if self.holds else f"fails on {len(self.violations)} tuple(s)"
        return f"AxiomReport({self.axiom}, {state})"


# -- raw sparse helpers (dicts keyed by basis indices) ------------------------------

def mul_vec(table: dict, v: dict, w: dict) -> dict:
    acc = {}
    for a, ca in v.items():
        for b, cb in w.items():
            prod = table.get((a, b))
            if prod:
                c = ca * cb
                for k, x in prod.items():
                    _add_into(acc, k, c * x)
    return acc


def comult_vec(comult: dict, v: dict) -> dict:
    acc = {}
    for a, ca in v.items():
        for k, x in comult.get(a, {}).items():
            _add_into(acc, k, ca * x)
    return acc


def delta_mu_rhs(table: dict, da: dict, db: dict) -> dict:
    """``(mu (x) mu)(id (x) tau (x) id)(Delta a (x) Delta b)`` on raw tensors."""
    acc = {}
    for (a1, a2), ca in da.items():
        for (b1, b2), cb in db.items():
            c = ca * cb
            if a2.parity & b1.parity:
                c = -c
            left = table.get((a1, b1))
            if not left:
                continue
            right = table.get((a2, b2))
            if not right:
                continue
            for k1, x1 in left.items():
                cx = c * x1
                for k2, x2 in right.items():
                    _add_into(acc, (k1, k2), cx * x2)
    return acc


def _diff(lhs: dict, rhs: dict) -> dict:
    acc = dict(lhs)
    for k, v in rhs.items():
        _add_into(acc, k, -v)
    return acc


# -- individual checks ----------------------------------------------------------------

def _associativity(d):
    table = d.mult.entries
    basis = d.basis()
    out = []
    for a in basis:
        for b in basis:
            ab = table.get((a, b), {})
            for c in basis:
                lhs = mul_vec(table, ab, {c: ONE})
                rhs = mul_vec(table, {a: ONE}, table.get((b, c), {}))
                r = _diff(lhs, rhs)
                if r:
                    out.append(((a, b, c), GradedVector(d.space, r)))
    return out


def _unit(d):
    out = []
    for b in d.basis():
        for key, prod in (((UNIT, b), d.mult.product(UNIT, b)), ((b, UNIT), d.mult.product(b, UNIT))):
            r = _diff(prod, {b: ONE})
            if r:
                out.append((key, GradedVector(d.space, r)))
    return out


def _coassociativity(d):
    comult = d.comult.entries
    out = []
    for i in d.basis():
        di = comult.get(i, {})
        lhs, rhs = {}, {}
        for (l, r), c in di.items():
            for (l1, l2), x in comult.get(l, {}).items():
                _add_into(lhs, (l1, l2, r), c * x)
            for (r1, r2), x in comult.get(r, {}).items():
                _add_into(rhs, (l, r1, r2), c * x)
        res = _diff(lhs, rhs)
        if res:
            out.append(((i,), TensorVector((d.space,) * 3, res)))
    return out


def _counit(d):
    comult = d.comult.entries
    eps = d.counit
    out = []
    for i in d.basis():
        left, right = {}, {}
        for (l, r), c in comult.get(i, {}).items():
            el = eps(l)
            if el:
                _add_into(left, r, c * el)
            er = eps(r)
            if er:
                _add_into(right, l, c * er)
        for side, vec in (("left", left), ("right", right)):
            res = _diff(vec, {i: ONE})
            if res:
                out.append(((i,), GradedVector(d.space, res)))
    return out


def _compat_delta_mu(d):
    table = d.mult.entries
    comult = d.comult.entries
    basis = d.basis()
    out = []
    for a in basis:
        da = comult.get(a, {})
        for b in basis:
            lhs = comult_vec(comult, table.get((a, b), {}))
            rhs = delta_mu_rhs(table, da, comult.get(b, {}))
            res = _diff(lhs, rhs)
            if res:
                out.append(((a, b), TensorVector((d.space, d.space), res)))
    return out


def _compat_delta_eta(d):
    res = _diff(d.comult.coproduct(UNIT), {(UNIT, UNIT): ONE})
    return [((UNIT,), TensorVector((d.space, d.space), res))] if res else []


def _compat_eps_mu(d):
    eps = d.counit
    out = []
    for a in d.basis():
        for b in d.basis():
            lhs = sum((c * eps(k) for k, c in d.mult.product(a, b).items()), ZERO)
            res = lhs - eps(a) * eps(b)
            if res:
                out.append(((a, b), res))
    return out


def _compat_eps_eta(d):
    res = d.counit(UNIT) - ONE
    return [((UNIT,), res)] if res else []


def _grouplike_unit(d):
    return _compat_delta_eta(d) + _compat_eps_eta(d)


def _commutative(d):
    out = []
    basis = d.basis()
    for n, a in enumerate(basis):
        for b in basis[n:]:
            ba = d.mult.product(b, a)
            if a.parity & b.parity:
                ba = {k: -v for k, v in ba.items()}
            res = _diff(d.mult.product(a, b), ba)
            if res:
                out.append(((a, b), GradedVector(d.space, res)))
    return out


def _cocommutative(d):
    out = []
    for i in d.basis():
        di = d.comult.coproduct(i)
        flipped = {}
        for (l, r), c in di.items():
            flipped[(r, l)] = -c if l.parity & r.parity else c
        res = _diff(di, flipped)
        if res:
            out.append(((i,), TensorVector((d.space, d.space), res)))
    return out


_CHECKS = {
    AxiomId.ASSOCIATIVITY: _associativity,
    AxiomId.UNIT: _unit,
    AxiomId.COASSOCIATIVITY: _coassociativity,
    AxiomId.COUNIT: _counit,
    AxiomId.COMPAT_DELTA_MU: _compat_delta_mu,
    AxiomId.COMPAT_DELTA_ETA: _compat_delta_eta,
    AxiomId.COMPAT_EPS_MU: _compat_eps_mu,
    AxiomId.COMPAT_EPS_ETA: _compat_eps_eta,
    AxiomId.GROUPLIKE_UNIT: _grouplike_unit,
    AxiomId.COMMUTATIVE: _commutative,
    AxiomId.COCOMMUTATIVE: _cocommutative,
}


def check_axiom(data: SuperBialgebraData, axiom) -> AxiomReport:
    axiom = AxiomId(axiom)
    if axiom in _NEEDS_COALGEBRA and not data.is_bialgebra_record:
        raise MissingStructureError(f"{axiom} needs a coproduct and counit on {data.id}")
    return AxiomReport(axiom, _CHECKS[axiom](data))


def check_all(data: SuperBialgebraData, informational: bool = True) -> list[AxiomReport]:
    """Reports for the nine structural axioms, then the two (co)commutativity predicates."""
    if not data.is_bialgebra_record:
        raise MissingStructureError(f"{data.id} is an algebra-only record")
    axioms = STRUCTURAL + (INFORMATIONAL if informational else ())
    return [check_axiom(data, a) for a in axioms]


def is_superbialgebra(data: SuperBialgebraData) -> bool:
    return all(r.holds for r in check_all(data, informational=False))


def is_commutative(data: SuperBialgebraData) -> bool:
    return not _commutative(data)


def is_cocommutative(data: SuperBialgebraData) -> bool:
    return not _cocommutative(data)
