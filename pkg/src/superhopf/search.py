"""Constraint-driven enumeration of counits and comultiplications.

Unknown structure constants are collected in an :class:`UnknownSystem`
whose constraints are polynomials obtained by instantiating the bialgebra
axioms on basis tuples.  The solver is a small backtracking search: linear
equations are eliminated exactly, univariate equations are split on their
roots in Q(i), a constraint divisible by a variable splits into two
branches, and only when nothing else applies does a free unknown draw its
value from a finite grid.  Any grid choice marks the outcome
``GridLimited``; otherwise the answer is ``Complete``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum

from . import linalg
from .axioms import check_all, delta_mu_rhs
from .graded import UNIT, BasisIndex, Superspace, TensorVector, _add_into
from .poly import Poly
from .scalar import ONE, ZERO, UnsupportedDegreeError, as_scalar, solve_univariate
from .structures import ComultTable, CounitVector, MultTable, SuperBialgebraData

__all__ = [
    "SearchStatus",
    "GridSpec",
    "UnknownSystem",
    "SolveResult",
    "CounitSearch",
    "ComultSearch",
    "Nonexistent",
    "GeneratorError",
    "UnsupportedExtensionError",
    "admissible_counits",
    "comultiplication_system",
    "enumerate_comultiplications",
    "satisfies_comultiplication_system",
    "classify_odd_extensions",
    "connected_decision",
    "generating_set",
]


class SearchStatus(str, Enum):
    COMPLETE = "Complete"
    GRID_LIMITED = "GridLimited"

    def __str__(self):
        return self.value


class GeneratorError(ValueError):
    pass


class UnsupportedExtensionError(ValueError):
    pass


_DEFAULT_GRID = ("0", "1", "-1", "2", "-2", "3", "-3", "1/2", "-1/2", "3/2", "-3/2",
                 "1/4", "-1/4", "3/4", "-3/4", "i", "-i")


@dataclass(frozen=True)
class GridSpec:
    values: tuple = _DEFAULT_GRID

    def __post_init__(self):
        vals = []
        for v in self.values:
            s = as_scalar(v)
            if s not in vals:
                vals.append(s)
        if ZERO not in vals or ONE not in vals:
            raise ValueError("a grid must contain 0 and 1")
        object.__setattr__(self, "values", tuple(vals))

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        return cls(tuple(part.strip() for part in text.split(",") if part.strip()))


# -- the solver ------------------------------------------------------------------

@dataclass
class SolveResult:
    status: SearchStatus
    solutions: list                    # dicts variable index -> scalar
    branches: int = 0
    irrational_branches: int = 0       # roots outside Q(i), dropped


class _BudgetExceeded(Exception):
    pass


class _Stop(Exception):
    pass


class _Solver:
    def __init__(self, nvars, grid, budget, stop=None):
        self.nvars = nvars
        self.grid = grid.values
        self.budget = budget
        self.stop = stop
        self.status = SearchStatus.COMPLETE
        self.branches = 0
        self.irrational = 0
        self.solutions = []
        self._seen = set()

    def run(self, constraints):
        cons = _dedupe(constraints)
        try:
            self._branch({}, cons, {})
        except _BudgetExceeded:
            self.status = SearchStatus.GRID_LIMITED
        except _Stop:
            pass
        return SolveResult(self.status, self.solutions, self.branches, self.irrational)

    def _branch(self, subst, cons, pending):
        self.branches += 1
        if self.budget is not None and self.branches > self.budget:
            raise _BudgetExceeded
        state = _propagate(subst, cons, pending)
        if state is None:
            return
        subst, cons = state
        if not cons:
            free = [v for v in range(self.nvars) if v not in subst]
            if not free:
                self._record(subst)
                return
            self.status = SearchStatus.GRID_LIMITED
            for g in self.grid:
                self._branch(subst, cons, {free[0]: Poly.const(g)})
            return
        # univariate constraints close a variable exactly
        uni = [c for c in cons if len(c.variables()) == 1]
        uni.sort(key=lambda c: (c.degree(), _order_key(c)))
        for c in uni:
            (v,) = c.variables()
            try:
                sol = solve_univariate(c.univariate(v))
            except UnsupportedDegreeError:
                continue
            if sol.unresolved:
                self.irrational += 1
            for r in sol.roots:
                self._branch(subst, cons, {v: Poly.const(r)})
            return
        # v * q = 0 splits into v = 0 or q = 0
        for c in cons:
            v = c.common_variable()
            if v is not None:
                self._branch(subst, cons, {v: Poly()})
                rest = [d for d in cons if d is not c] + [c.divide_variable(v)]
                self._branch(subst, _dedupe(rest), {})
                return
        self.status = SearchStatus.GRID_LIMITED
        v = _most_frequent(cons)
        for g in self.grid:
            self._branch(subst, cons, {v: Poly.const(g)})

    def _record(self, subst):
        values = {v: p.constant() for v, p in subst.items()}
        key = tuple(sorted((v, s.sort_key()) for v, s in values.items()))
        if key not in self._seen:
            self._seen.add(key)
            self.solutions.append(values)
            if self.stop is not None and self.stop(values):
                raise _Stop


def _order_key(p: Poly):
    return sorted(p.terms)


def _dedupe(cons):
    out = {}
    for c in cons:
        if c:
            c = c.monic()
            out.setdefault(c, c)
    return sorted(out.values(), key=lambda c: (c.degree(), len(c.terms), _order_key(c)))


def _most_frequent(cons):
    count = {}
    for c in cons:
        for v in c.variables():
            count[v] = count.get(v, 0) + 1
    return min(count, key=lambda v: (-count[v], v))


def _propagate(subst, cons, pending):
    """Apply assignments and eliminate linear equations; None if inconsistent."""
    subst = dict(subst)
    pending = dict(pending)
    while True:
        while pending:
            v, p = pending.popitem()
            for w in subst:
                subst[w] = subst[w].substitute({v: p})
            subst[v] = p
            new = []
            for c in cons:
                c = c.substitute({v: p})
                if not c:
                    continue
                if c.is_constant():
                    return None
                new.append(c)
            cons = new
        cons = _dedupe(cons)
        linear = next((c for c in cons if c.degree() == 1), None)
        if linear is None:
            return subst, cons
        v = min(linear.variables())
        a = linear.terms[((v, 1),)]
        pending[v] = (linear - Poly.var(v) * a) * (-a.inverse())


@dataclass
class UnknownSystem:
    """Named unknowns and polynomial constraints over Q(i)."""

    variables: list
    constraints: list

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def residuals(self, values: dict) -> list:
        """Nonzero constraint values at a full assignment (index or name keyed)."""
        vals = {(self.index(k) if isinstance(k, str) else k): as_scalar(v) for k, v in values.items()}
        return [r for r in (c.evaluate(vals) for c in self.constraints) if r]

    def fix(self, values: dict) -> "UnknownSystem":
        extra = [Poly.var(self.index(k) if isinstance(k, str) else k) - as_scalar(v)
                 for k, v in values.items()]
        return UnknownSystem(self.variables, self.constraints + extra)

    def solve(self, grid: GridSpec | None = None, budget: int | None = None,
              stop=None) -> SolveResult:
        """All solutions; ``stop(solution)`` returning true ends the search early."""
        return _Solver(len(self.variables), grid or GridSpec(), budget, stop).run(self.constraints)


# -- counits ---------------------------------------------------------------------

@dataclass
class CounitSearch:
    status: SearchStatus
    counits: list


def admissible_counits(algebra: SuperBialgebraData) -> CounitSearch:
    """Multiplicative ξ with ξ(1) = 1 and ξ(odd) = 0."""
    basis = algebra.basis()
    even = [b for b in basis if b.parity == 0 and b != UNIT]
    names = [f"xi[{b}]" for b in even]
    xi = {UNIT: Poly.const(ONE)}
    for n, b in enumerate(even):
        xi[b] = Poly.var(n)

    def ev(vec):
        acc = Poly()
        for k, c in vec.items():
            if k in xi:
                acc = acc + xi[k] * c
        return acc

    cons = []
    for a in basis:
        for b in basis:
            lhs = ev(algebra.mult.product(a, b))
            rhs = xi[a] * xi[b] if (a in xi and b in xi) else Poly()
            cons.append(lhs - rhs)
    res = UnknownSystem(names, cons).solve()
    counits = []
    for sol in res.solutions:
        values = {b: sol[n] for n, b in enumerate(even) if sol[n]}
        values[UNIT] = ONE
        counits.append(CounitVector(algebra.space, values))
    counits.sort(key=lambda e: [e(b).sort_key() for b in even])
    return CounitSearch(res.status, counits)


# -- generators and the comultiplication system ----------------------------------

@dataclass
class Generators:
    names: list
    vectors: list          # dicts over the e-basis
    parities: list
    words: list            # tuples of generator indices forming a basis
    e_in_words: dict       # basis index -> {word: coefficient}


def _mul(table, v, w):
    acc = {}
    for a, ca in v.items():
        for b, cb in w.items():
            for k, x in table.get((a, b), {}).items():
                _add_into(acc, k, ca * cb * x)
    return acc


def _parity_of(vec):
    ps = {b.parity for b in vec}
    if len(ps) != 1:
        raise GeneratorError(f"generator {vec} is not homogeneous")
    return ps.pop()


def generating_set(algebra: SuperBialgebraData) -> Generators:
    """Smallest prefix of the labelled (else non-unit basis) elements generating the algebra.

    Labels are taken in the order x, y, z; words are found breadth-first.
    """
    table = algebra.mult.entries
    basis = algebra.basis()
    dim = len(basis)
    if algebra.labels:
        cand = [(n, dict(v)) for n, v in algebra.labels.items()]
    else:
        cand = [(str(b), {b: ONE}) for b in basis if b != UNIT]

    def coords(vec):
        return [vec.get(b, ZERO) for b in basis]

    for size in range(0, len(cand) + 1):
        gens = cand[:size]
        words, rows, vecs = [()], [coords({UNIT: ONE})], {(): {UNIT: ONE}}
        frontier = [()]
        while frontier and len(words) < dim:
            nxt = []
            for w in frontier:
                for g, (_, gv) in enumerate(gens):
                    v = _mul(table, vecs[w], gv)
                    trial = rows + [coords(v)]
                    if linalg.rank(trial) > len(rows):
                        w2 = w + (g,)
                        words.append(w2)
                        rows = trial
                        vecs[w2] = v
                        nxt.append(w2)
            frontier = nxt
        if len(words) == dim:
            cols = linalg.transpose(rows)
            inv = linalg.inverse(cols)
            e_in_words = {b: {w: inv[j][i] for j, w in enumerate(words) if inv[j][i]}
                          for i, b in enumerate(basis)}
            return Generators([n for n, _ in gens], [v for _, v in gens],
                              [_parity_of(v) for _, v in gens], words, e_in_words)
    raise GeneratorError(f"{algebra.id}: no generating set found among {[n for n, _ in cand]}")


@dataclass
class ComultSystem:
    algebra: SuperBialgebraData
    counit: CounitVector
    generators: Generators
    system: UnknownSystem
    delta: dict            # basis index -> {(l, r): Poly}
    keys: dict             # variable index -> (l, r) slot of its generator

    def table(self, values: dict) -> ComultTable:
        entries = {}
        for b, d in self.delta.items():
            row = {}
            for key, p in d.items():
                c = p.evaluate(values)
                if c:
                    row[key] = c
            entries[b] = row
        return ComultTable(self.algebra.space, entries)

    def values_of(self, data: SuperBialgebraData) -> dict:
        """Unknown values read off a record sharing this algebra."""
        out = {}
        for g, (name, vec) in enumerate(zip(self.generators.names, self.generators.vectors)):
            dg = {}
            for b, c in vec.items():
                for key, x in data.comult.coproduct(b).items():
                    _add_into(dg, key, c * x)
            for n, var in enumerate(self.system.variables):
                if var.startswith(f"D[{name}]"):
                    out[n] = dg.get(self.keys[n], ZERO)
        return out


def comultiplication_system(algebra: SuperBialgebraData, counit: CounitVector,
                            generators: Generators | None = None) -> ComultSystem:
    """Unknowns: Δ on the generators.  Constraints: Δ multiplicative, counit, coassociativity."""
    gens = generators or generating_set(algebra)
    table = algebra.mult.entries
    basis = algebra.basis()
    names, keys = [], {}
    gen_delta = []
    for name, par in zip(gens.names, gens.parities):
        d = {}
        for l in basis:
            for r in basis:
                if (l.parity + r.parity) % 2 == par:
                    keys[len(names)] = (l, r)
                    d[(l, r)] = Poly.var(len(names))
                    names.append(f"D[{name}]({l},{r})")
        gen_delta.append(d)
    word_delta = {}
    for w in gens.words:
        d = {(UNIT, UNIT): Poly.const(ONE)}
        for g in w:
            d = delta_mu_rhs(table, d, gen_delta[g])
        word_delta[w] = d
    delta = {}
    for b, combo in gens.e_in_words.items():
        acc = {}
        for w, c in combo.items():
            for key, p in word_delta[w].items():
                _add_into(acc, key, p * c)
        delta[b] = acc

    cons = []
    # Δ is multiplicative
    for a in basis:
        for b in basis:
            acc = delta_mu_rhs(table, delta[a], delta[b])
            for k, c in table.get((a, b), {}).items():
                for key, p in delta[k].items():
                    _add_into(acc, key, -(p * c))
            cons.extend(acc.values())
    # counit
    for i in basis:
        left, right = {i: Poly.const(-ONE)}, {i: Poly.const(-ONE)}
        for (l, r), p in delta[i].items():
            if counit(l):
                _add_into(left, r, p * counit(l))
            if counit(r):
                _add_into(right, l, p * counit(r))
        cons.extend(left.values())
        cons.extend(right.values())
    # coassociativity
    for i in basis:
        acc = {}
        for (l, r), p in delta[i].items():
            for (l1, l2), q in delta[l].items():
                _add_into(acc, (l1, l2, r), p * q)
            for (r1, r2), q in delta[r].items():
                _add_into(acc, (l, r1, r2), -(p * q))
        cons.extend(acc.values())
    return ComultSystem(algebra, counit, gens, UnknownSystem(names, cons), delta, keys)


@dataclass
class ComultSearch:
    status: SearchStatus
    results: list          # (ComultTable, CounitVector)
    branches: int = 0


def enumerate_comultiplications(algebra: SuperBialgebraData, grid: GridSpec | None = None,
                                budget: int | None = 10 ** 7) -> ComultSearch:
    """All (Δ, ε) making ``algebra`` a superbialgebra, up to the grid."""
    grid = grid or GridSpec()
    counits = admissible_counits(algebra)
    status = counits.status
    results, seen, branches = [], [], 0
    for eps in counits.counits:
        cs = comultiplication_system(algebra, eps)
        res = cs.system.solve(grid, budget)
        branches += res.branches
        if res.status is SearchStatus.GRID_LIMITED:
            status = SearchStatus.GRID_LIMITED
        for sol in res.solutions:
            comult = cs.table(sol)
            data = algebra.with_changes(comult=comult, counit=eps)
            bad = [r.axiom for r in check_all(data, informational=False) if not r.holds]
            if bad:
                raise AssertionError(f"{algebra.id}: solver emitted a table failing {bad}")
            if any(comult == c and eps == e for c, e in seen):
                continue
            seen.append((comult, eps))
            results.append((comult, eps))
    return ComultSearch(status, results, branches)


def satisfies_comultiplication_system(data: SuperBialgebraData) -> bool:
    """Does a record's (Δ, ε) solve the system generated from its own algebra?"""
    cs = comultiplication_system(data, data.counit)
    values = cs.values_of(data)
    if cs.system.residuals(values):
        return False
    return cs.table(values) == data.comult


# -- odd extensions of 2-dimensional algebras -------------------------------------

def _even_generator(even_algebra):
    basis = even_algebra.basis()
    if even_algebra.space.n1:
        raise UnsupportedExtensionError("the even algebra must be purely even")
    return [b for b in basis if b != UNIT]


def _extension_table(even_algebra, alpha, beta, gamma, sigma):
    """Multiplication of A0 ⊕ K y with xy = αy, yx = βy, yy = γ1 + σx."""
    n0 = even_algebra.space.n0
    y = BasisIndex(1, 1)
    entries = {}
    for (a, b), prod in even_algebra.mult.entries.items():
        entries[(a, b)] = {k: Poly.const(c) for k, c in prod.items()}
    entries[(UNIT, y)] = {y: Poly.const(ONE)}
    entries[(y, UNIT)] = {y: Poly.const(ONE)}
    yy = {UNIT: gamma}
    if n0 == 2:
        x = BasisIndex(0, 2)
        entries[(x, y)] = {y: alpha}
        entries[(y, x)] = {y: beta}
        yy[x] = sigma
    entries[(y, y)] = yy
    return Superspace(n0, 1), entries


def _assoc_constraints(space, entries):
    basis = space.basis()
    cons = []
    for a in basis:
        for b in basis:
            for c in basis:
                lhs, rhs = {}, {}
                for k, p in entries.get((a, b), {}).items():
                    for m, q in entries.get((k, c), {}).items():
                        _add_into(lhs, m, p * q)
                for k, p in entries.get((b, c), {}).items():
                    for m, q in entries.get((a, k), {}).items():
                        _add_into(rhs, m, p * q)
                for m in set(lhs) | set(rhs):
                    cons.append(lhs.get(m, Poly()) - rhs.get(m, Poly()))
    return cons


def _superalgebras_isomorphic(a: SuperBialgebraData, b: SuperBialgebraData) -> bool:
    """Exhaustive check for A0 ⊕ K y: f(x) = p + q x, f(y) = t y."""
    if a.space != b.space:
        return False
    n0 = a.space.n0
    y = BasisIndex(1, 1)
    # variables: p, q, t, w with w q t = 1 (invertibility)
    p, q, t, w = (Poly.var(k) for k in range(4))
    f = {UNIT: {UNIT: Poly.const(ONE)}, y: {y: t}}
    if n0 == 2:
        x = BasisIndex(0, 2)
        f[x] = {UNIT: p, x: q}
        inv = w * q * t - 1
    else:
        inv = w * t - 1
    cons = [inv]
    for u in a.basis():
        for v in a.basis():
            lhs = {}
            for k, c in a.mult.product(u, v).items():
                for m, r in f[k].items():
                    _add_into(lhs, m, r * c)
            for k1, r1 in f[u].items():
                for k2, r2 in f[v].items():
                    for m, c in b.mult.product(k1, k2).items():
                        _add_into(lhs, m, -(r1 * r2 * c))
            cons.extend(lhs.values())
    res = UnknownSystem(["p", "q", "t", "w"], cons).solve(budget=10 ** 5)
    return bool(res.solutions)


def _known_extensions():
    from .catalog import sources

    return [sources.superalgebra(k) for k in sources.THREE_DIM]


def classify_odd_extensions(even_algebra: SuperBialgebraData, n1: int = 1) -> list:
    """Superalgebras A0 ⊕ K y up to isomorphism, for a 1- or 2-dimensional A0.

    The odd generator is rescaled so that the first nonzero of (σ, γ) is 1.
    For A0 = K a counit forces y² = 0, which leaves the exterior algebra.
    """
    if n1 != 1:
        raise UnsupportedExtensionError(f"odd extensions with n1 = {n1} are not implemented")
    n0 = even_algebra.space.n0
    if n0 not in (1, 2):
        raise UnsupportedExtensionError("the even algebra must have dimension 1 or 2")
    _even_generator(even_algebra)
    names = ["alpha", "beta", "gamma", "sigma"]
    al, be, ga, si = (Poly.var(k) for k in range(4))
    space, entries = _extension_table(even_algebra, al, be, ga, si)
    base = _assoc_constraints(space, entries)
    if n0 == 1:
        base += [al, be, si]
    cases = [[si - 1], [si, ga - 1], [si, ga]]
    if n0 == 1:
        cases = [[ga]]
    sols = []
    for extra in cases:
        res = UnknownSystem(names, base + extra).solve()
        if res.status is not SearchStatus.COMPLETE:
            raise AssertionError("odd extension system did not close exactly")
        sols.extend(res.solutions)
    reps = []
    known = _known_extensions() if n0 == 2 else []
    for sol in sols:
        vals = [sol[k] for k in range(4)]
        _, ent = _extension_table(even_algebra, *(Poly.const(v) for v in vals))
        mult = {k: {m: p.constant() for m, p in v.items() if p.constant()} for k, v in ent.items()}
        cand = SuperBialgebraData(
            id="ext({}; a={}, b={}, g={}, s={})".format(even_algebra.id, *vals),
            space=space, mult=MultTable(space, mult),
            provenance=f"odd extension of {even_algebra.id}")
        if any(_superalgebras_isomorphic(cand, r) for r in reps):
            continue
        match = next((k for k in known if _superalgebras_isomorphic(cand, k)), None)
        if match is not None and not any(r.id == match.id for r in reps):
            cand = match
        elif n0 == 1 and not any(cand.mult.entries.get((BasisIndex(1, 1),) * 2, {}).values()):
            cand = cand.with_changes(id="LambdaK")
        reps.append(cand)
    return reps


# -- connected case ----------------------------------------------------------------

@dataclass
class Nonexistent:
    pair: tuple                 # odd basis indices (x_i, x_j)
    residual: TensorVector      # Δ(x_i)Δ(x_j) - Δ(x_i x_j)


def connected_decision(n1: int):
    """The forced candidate: all odd products zero and odd generators primitive."""
    if n1 < 1:
        raise ValueError("n1 must be at least 1")
    space = Superspace(1, n1)
    odd = [BasisIndex(1, k) for k in range(1, n1 + 1)]
    comult = {UNIT: {(UNIT, UNIT): ONE}}
    for x in odd:
        comult[x] = {(UNIT, x): ONE, (x, UNIT): ONE}
    mult = {(UNIT, b): {b: ONE} for b in space.basis()}
    mult.update({(b, UNIT): {b: ONE} for b in space.basis()})
    for a, b in itertools.product(odd, odd):
        # odd products vanish, so Delta(ab) = 0 and the residual is Delta(a)Delta(b)
        residual = delta_mu_rhs(mult, comult[a], comult[b])
        if residual:
            return Nonexistent((a, b), TensorVector((space, space), residual))
    from .antipode import solve_antipode

    data = SuperBialgebraData(
        id="LambdaK", space=space, mult=MultTable(space, mult),
        comult=ComultTable(space, comult), counit=CounitVector(space, {UNIT: ONE}),
        labels={"x": {odd[0]: ONE}},
        provenance="connected superbialgebra forced by primitive odd generators")
    res = solve_antipode(data)
    return data.with_changes(antipode=res.antipode) if res.found else data
