"""Concrete realizations of the small algebras the catalog is transcribed from.

An :class:`Ambient` is a finite-dimensional associative algebra given by a
multiplication table on coordinate vectors.  Superalgebra records are then
obtained by choosing a graded basis made of ambient elements and reading
off structure constants, so every table in the catalog comes from an
honest computation rather than hand-typed products.
"""

from __future__ import annotations

from .. import linalg
from ..graded import Superspace
from ..scalar import ONE, ZERO, as_scalar
from ..structures import MultTable, SuperBialgebraData


class Ambient:
    def __init__(self, dim: int, table):
        # table[i][j] -> list of coordinates of e_i e_j
        self.dim = dim
        self.table = table

    def zero(self):
        return El(self, [ZERO] * self.dim)

    def basis_el(self, i):
        v = [ZERO] * self.dim
        v[i] = ONE
        return El(self, v)

    def mul(self, u, v):
        out = [ZERO] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                c = a * b
                for k, x in enumerate(self.table[i][j]):
                    if x:
                        out[k] = out[k] + c * x
        return out


class El:
    """Element of an ambient algebra supporting + - * and scalar multiples."""

    __slots__ = ("amb", "v")

    def __init__(self, amb: Ambient, v):
        self.amb = amb
        self.v = [as_scalar(x) for x in v]

    def _coerce(self, other):
        if isinstance(other, El):
            return other
        return self.amb.one() * as_scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        return El(self.amb, [a + b for a, b in zip(self.v, other.v)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return El(self.amb, [a - b for a, b in zip(self.v, other.v)])

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return El(self.amb, [-a for a in self.v])

    def __mul__(self, other):
        if isinstance(other, El):
            return El(self.amb, self.amb.mul(self.v, other.v))
        s = as_scalar(other)
        return El(self.amb, [a * s for a in self.v])

    def __rmul__(self, other):
        s = as_scalar(other)
        return El(self.amb, [a * s for a in self.v])

    def __pow__(self, k):
        out = self.amb.one()
        for _ in range(k):
            out = out * self
        return out


def _one(self):
    # the unit is found once by solving u e_j = e_j
    if not hasattr(self, "_unit"):
        n = self.dim
        rows, rhs = [], []
        for j in range(n):
            for k in range(n):
                rows.append([self.table[i][j][k] for i in range(n)])
                rhs.append(ONE if j == k else ZERO)
        sol = linalg.solve_linear(rows, rhs)
        if not sol.consistent:
            raise ValueError("ambient algebra has no unit")
        self._unit = sol.particular
    return El(self, self._unit)


Ambient.one = _one


def monomial_algebra(names: str, monomials) -> tuple[Ambient, dict]:
    """Commutative ``K[names]/I`` for a monomial ideal I, via its standard monomials."""
    monomials = [tuple(m) for m in monomials]
    index = {m: i for i, m in enumerate(monomials)}
    n = len(monomials)
    table = []
    for a in monomials:
        row = []
        for b in monomials:
            c = tuple(x + y for x, y in zip(a, b))
            v = [ZERO] * n
            if c in index:
                v[index[c]] = ONE
            row.append(v)
        table.append(row)
    amb = Ambient(n, table)
    gens = {}
    for g, name in enumerate(names):
        e = tuple(1 if t == g else 0 for t in range(len(names)))
        gens[name] = amb.basis_el(index[e])
    return amb, gens


def truncated(k: int) -> tuple[Ambient, El]:
    """``K[x]/x^k``."""
    amb, gens = monomial_algebra("x", [(i,) for i in range(k)])
    return amb, gens.get("x")


def quadratic_nilpotent(form) -> tuple[Ambient, dict]:
    """``K<x,y>`` with basis ``1, x, y, w`` and ``g_i g_j = form[i][j] w``."""
    n = 4
    table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for j in range(n):
        table[0][j][j] = ONE
        table[j][0][j] = ONE
    for i in range(2):
        for j in range(2):
            table[1 + i][1 + j][3] = as_scalar(form[i][j])
    amb = Ambient(n, table)
    return amb, {"x": amb.basis_el(1), "y": amb.basis_el(2), "w": amb.basis_el(3)}


def matrix_span(mats) -> tuple[Ambient, callable]:
    """Subalgebra of a matrix algebra with the given matrices as basis.

    Returns the algebra and a function sending a matrix in the span to its
    element.
    """
    mats = [linalg.matrix(m) for m in mats]
    cols = linalg.transpose([[x for row in m for x in row] for m in mats])
    n = len(mats)

    def coords(m):
        sol = linalg.solve_linear(cols, [as_scalar(x) for row in m for x in row])
        if not sol.consistent:
            raise ValueError("matrix outside the span")
        return sol.particular

    table = [[coords(linalg.matmul(a, b)) for b in mats] for a in mats]
    amb = Ambient(n, table)
    return amb, lambda m: El(amb, coords(m))


def direct_product(*factors: Ambient) -> tuple[Ambient, callable]:
    """Product algebra and a helper building tuples ``(c_1, ..., c_r)``."""
    offsets = []
    n = 0
    for f in factors:
        offsets.append(n)
        n += f.dim
    table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for f, off in zip(factors, offsets):
        for i in range(f.dim):
            for j in range(f.dim):
                for k, x in enumerate(f.table[i][j]):
                    table[off + i][off + j][off + k] = x
    amb = Ambient(n, table)

    def tup(*components):
        v = [ZERO] * n
        for f, off, c in zip(factors, offsets, components):
            c = c if isinstance(c, El) else f.one() * as_scalar(c)
            for i, x in enumerate(c.v):
                v[off + i] = x
        return El(amb, v)

    return amb, tup


def field_k() -> Ambient:
    return Ambient(1, [[[ONE]]])


def E(n, i, j):
    """Matrix unit of size n (1-based indices)."""
    m = linalg.zeros(n, n)
    m[i - 1][j - 1] = ONE
    return m


def diag(*entries):
    n = len(entries)
    m = linalg.zeros(n, n)
    for i, x in enumerate(entries):
        m[i][i] = as_scalar(x)
    return m


def madd(*terms):
    """Sum of (coefficient, matrix) pairs."""
    n = len(terms[0][1])
    out = linalg.zeros(n, n)
    for c, m in terms:
        c = as_scalar(c)
        for i in range(n):
            for j in range(n):
                if m[i][j]:
                    out[i][j] = out[i][j] + c * m[i][j]
    return out


def superalgebra_from_elements(ident, even, odd, provenance="") -> SuperBialgebraData:
    """Read structure constants off a graded basis of ambient elements.

    ``even[0]`` must be the unit of the ambient algebra.
    """
    elems = list(even) + list(odd)
    amb = elems[0].amb
    if len(elems) != amb.dim:
        raise ValueError(f"{ident}: {len(elems)} basis elements for a {amb.dim}-dim algebra")
    cols = linalg.transpose([e.v for e in elems])
    space = Superspace(len(even), len(odd))
    keys = space.basis()
    entries = {}
    for a, ea in zip(keys, elems):
        for b, eb in zip(keys, elems):
            prod = ea * eb
            sol = linalg.solve_linear(cols, prod.v)
            if not sol.consistent or sol.kernel:
                raise ValueError(f"{ident}: graded basis is not a basis")
            out = {k: c for k, c in zip(keys, sol.particular) if c}
            if out:
                entries[(a, b)] = out
    data = SuperBialgebraData(id=ident, space=space, mult=MultTable(space, entries),
                              provenance=provenance)
    return data


def coordinates(elems, target: El):
    cols = linalg.transpose([e.v for e in elems])
    sol = linalg.solve_linear(cols, target.v)
    if not sol.consistent:
        raise ValueError("element outside the span")
    return sol.particular
