"""Exact Gaussian elimination over Q(i).

Matrices are plain lists of rows of :class:`GaussScalar`.  Nothing here is
clever: the systems that come out of dimension <= 4 superbialgebras have at
most a few hundred rows and a dozen columns.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalar import ONE, ZERO, GaussScalar, as_scalar


def matrix(rows) -> list[list[GaussScalar]]:
    return [[as_scalar(x) for x in row] for row in rows]


def identity(n: int) -> list[list[GaussScalar]]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> list[list[GaussScalar]]:
    return [[ZERO] * c for _ in range(r)]


def matmul(a, b):
    n, m = len(a), len(b[0]) if b else 0
    inner = len(b)
    out = zeros(n, m)
    for i in range(n):
        row = a[i]
        for k in range(inner):
            aik = row[k]
            if not aik:
                continue
            bk = b[k]
            for j in range(m):
                if bk[j]:
                    out[i][j] = out[i][j] + aik * bk[j]
    return out


def matvec(a, v):
    return [sum((a[i][k] * v[k] for k in range(len(v)) if a[i][k] and v[k]), ZERO)
            for i in range(len(a))]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


@dataclass
class RREF:
    rows: list            # reduced rows (nonzero only)
    pivots: list          # pivot column of each row
    ncols: int

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rref(a, ncols: int | None = None) -> RREF:
    """Reduced row echelon form; the input is not modified."""
    rows = [list(r) for r in a]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for k in range(r, len(rows)):
            if rows[k][c]:
                piv = k
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv if x else ZERO for x in rows[r]]
        prow = rows[r]
        for k in range(len(rows)):
            if k != r:
                f = rows[k][c]
                if f:
                    rows[k] = [x - f * y if y else x for x, y in zip(rows[k], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return RREF(rows=rows[:r], pivots=pivots, ncols=ncols)


def rank(a) -> int:
    return rref(a).rank


def nullspace(a, ncols: int | None = None) -> list[list[GaussScalar]]:
    """Basis of {v : a v = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    red = rref(a, ncols)
    free = [c for c in range(ncols) if c not in set(red.pivots)]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(red.rows, red.pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    return basis


@dataclass
class LinearSolution:
    """Outcome of solving an augmented system ``[A | b]``."""

    consistent: bool
    particular: list | None = None
    kernel: list | None = None
    certificate: list | None = None  # multipliers y with y^T A = 0, y^T b != 0


def solve_linear(a, b) -> LinearSolution:
    """Solve ``a x = b`` exactly, returning a certificate when inconsistent."""
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    # track row combinations with an identity block to extract certificates
    aug = [list(a[i]) + [as_scalar(b[i])] + [ONE if j == i else ZERO for j in range(nrows)]
           for i in range(nrows)]
    red = rref(aug, ncols + 1)
    for row, p in zip(red.rows, red.pivots):
        if p == ncols:
            return LinearSolution(consistent=False, certificate=row[ncols + 1:])
    x = [ZERO] * ncols
    for row, p in zip(red.rows, red.pivots):
        x[p] = row[ncols]
    return LinearSolution(consistent=True, particular=x, kernel=nullspace(a, ncols))


def det(a) -> GaussScalar:
    n = len(a)
    if n == 0:
        return ONE
    rows = [list(r) for r in a]
    d = ONE
    for c in range(n):
        piv = next((k for k in range(c, n) if rows[k][c]), None)
        if piv is None:
            return ZERO
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = -d
        d = d * rows[c][c]
        inv = rows[c][c].inverse()
        for k in range(c + 1, n):
            f = rows[k][c] * inv
            if f:
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[c])]
    return d


def inverse(a):
    n = len(a)
    aug = [list(a[i]) + identity(n)[i] for i in range(n)]
    red = rref(aug, n)
    if red.rank < n or red.pivots[-1] >= n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red.rows]
