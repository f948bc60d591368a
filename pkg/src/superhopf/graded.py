"""Z/2-graded vector spaces, sparse graded vectors and tensors, Koszul signs.

Basis vectors are :class:`BasisIndex` pairs ``(parity, position)`` with a
1-based position inside the parity block, so ``BasisIndex(0, 1)`` is the
unit ``e_1^0``.  Vectors and tensors store only nonzero coefficients.

A tensor factor may itself be a tensor space; its basis keys are then tuples
of keys and its parity is the sum of the parities.  This is how
``(A (x) A) (x) (A (x) A)`` is handled when checking the compatibility of the
product and the coproduct.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple

from .scalar import ONE, ZERO, GaussScalar, as_scalar
from . import linalg

__all__ = [
    "ArityError",
    "ShapeError",
    "Superspace",
    "BasisIndex",
    "GradedVector",
    "TensorVector",
    "GradedLinearMap",
    "IDENTITY",
    "parity",
    "superflip",
    "apply_tensor_maps",
    "twist_middle",
    "flatten",
]


class ArityError(ValueError):
    pass


class ShapeError(ValueError):
    pass


class BasisIndex(NamedTuple):
    parity: int
    position: int

    def __str__(self):
        return f"e{self.position}^{self.parity}"


@dataclass(frozen=True)
class Superspace:
    n0: int
    n1: int

    def __post_init__(self):
        if self.n0 < 1:
            raise ShapeError("the even part must contain the unit (n0 >= 1)")
        if self.n1 < 0:
            raise ShapeError("n1 must be nonnegative")

    @property
    def dim(self) -> int:
        return self.n0 + self.n1

    def basis(self) -> list[BasisIndex]:
        return ([BasisIndex(0, i) for i in range(1, self.n0 + 1)]
                + [BasisIndex(1, i) for i in range(1, self.n1 + 1)])

    def block(self, p: int) -> list[BasisIndex]:
        n = self.n0 if p == 0 else self.n1
        return [BasisIndex(p, i) for i in range(1, n + 1)]

    def contains(self, b: BasisIndex) -> bool:
        n = self.n0 if b.parity == 0 else self.n1
        return b.parity in (0, 1) and 1 <= b.position <= n

    def __str__(self):
        return f"{self.n0}|{self.n1}"


GROUND = Superspace(1, 0)
UNIT = BasisIndex(0, 1)


def parity(key) -> int:
    if isinstance(key, BasisIndex):
        return key.parity
    return sum(parity(k) for k in key) & 1


def _add_into(acc: dict, key, c: GaussScalar):
    v = acc.get(key)
    if v is None:
        acc[key] = c
    else:
        v = v + c
        if v:
            acc[key] = v
        else:
            del acc[key]


def _clean(coeffs) -> dict:
    out = {}
    for k, v in coeffs.items():
        v = as_scalar(v)
        if v:
            out[k] = v
    return out


class GradedVector:
    """Sparse vector in a superspace; missing coefficients are zero."""

    __slots__ = ("space", "coeffs")

    def __init__(self, space: Superspace, coeffs=None):
        self.space = space
        self.coeffs = _clean(coeffs or {})

    @classmethod
    def basis_vector(cls, space, b: BasisIndex) -> "GradedVector":
        return cls(space, {b: ONE})

    def __getitem__(self, b) -> GaussScalar:
        return self.coeffs.get(b, ZERO)

    def __iter__(self):
        return iter(self.coeffs.items())

    def __add__(self, other: "GradedVector"):
        self._check(other)
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            _add_into(acc, k, v)
        return GradedVector(self.space, acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return GradedVector(self.space, {k: -v for k, v in self.coeffs.items()})

    def __mul__(self, s):
        s = as_scalar(s)
        return GradedVector(self.space, {k: v * s for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, GradedVector):
            return self.space == other.space and self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    def __bool__(self):
        return bool(self.coeffs)

    def is_homogeneous(self) -> bool:
        return len({k.parity for k in self.coeffs}) <= 1

    def degree(self) -> int | None:
        ps = {k.parity for k in self.coeffs}
        return ps.pop() if len(ps) == 1 else None

    def _check(self, other):
        if self.space != other.space:
            raise ShapeError(f"space mismatch {self.space} vs {other.space}")

    def __repr__(self):
        return f"GradedVector({_fmt(self.coeffs)})"


class TensorVector:
    """Sparse element of a tensor product of graded spaces."""

    __slots__ = ("spaces", "coeffs")

    def __init__(self, spaces: Iterable, coeffs=None):
        self.spaces = tuple(spaces)
        self.coeffs = _clean(coeffs or {})
        for k in self.coeffs:
            if len(k) != len(self.spaces):
                raise ArityError(f"key {k} does not match {len(self.spaces)} factors")

    @property
    def arity(self) -> int:
        return len(self.spaces)

    def __getitem__(self, key) -> GaussScalar:
        return self.coeffs.get(tuple(key), ZERO)

    def __add__(self, other: "TensorVector"):
        if self.spaces != other.spaces:
            raise ShapeError("tensor factor mismatch")
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            _add_into(acc, k, v)
        return TensorVector(self.spaces, acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorVector(self.spaces, {k: -v for k, v in self.coeffs.items()})

    def __mul__(self, s):
        s = as_scalar(s)
        return TensorVector(self.spaces, {k: v * s for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TensorVector):
            return self.spaces == other.spaces and self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"TensorVector({_fmt(self.coeffs)})"


def _fmt(coeffs: dict) -> str:
    if not coeffs:
        return "0"

    def key_str(k):
        if isinstance(k, BasisIndex):
            return str(k)
        return "(x)".join(key_str(x) for x in k)

    return " + ".join(f"{v}*{key_str(k)}" for k, v in sorted(coeffs.items(), key=lambda kv: str(kv[0])))


# -- linear maps ---------------------------------------------------------------

class GradedLinearMap:
    """Even linear map of a superspace, stored as two square blocks.

    ``even[k][i]`` is the coefficient of ``e_{k+1}^0`` in the image of
    ``e_{i+1}^0`` (column convention); likewise for ``odd``.
    """

    degree = 0

    def __init__(self, even, odd):
        self.even = linalg.matrix(even)
        self.odd = linalg.matrix(odd)
        for block in (self.even, self.odd):
            if any(len(row) != len(block) for row in block):
                raise ShapeError("blocks must be square")

    @property
    def space(self) -> Superspace:
        return Superspace(len(self.even), len(self.odd))

    @classmethod
    def identity(cls, space: Superspace) -> "GradedLinearMap":
        return cls(linalg.identity(space.n0), linalg.identity(space.n1))

    @classmethod
    def from_images(cls, space: Superspace, images: dict) -> "GradedLinearMap":
        """Build from ``{basis: GradedVector or coeff dict}``; must be even."""
        even = linalg.zeros(space.n0, space.n0)
        odd = linalg.zeros(space.n1, space.n1)
        for b in space.basis():
            img = images.get(b, {})
            if isinstance(img, GradedVector):
                img = img.coeffs
            for k, v in img.items():
                if k.parity != b.parity:
                    raise ShapeError(f"image of {b} is not homogeneous of the same parity")
                blk = even if b.parity == 0 else odd
                blk[k.position - 1][b.position - 1] = as_scalar(v)
        return cls(even, odd)

    def block(self, p: int):
        return self.even if p == 0 else self.odd

    def apply_basis(self, b: BasisIndex) -> dict:
        blk = self.block(b.parity)
        col = b.position - 1
        return {BasisIndex(b.parity, k + 1): blk[k][col]
                for k in range(len(blk)) if blk[k][col]}

    def __call__(self, v: GradedVector) -> GradedVector:
        acc = {}
        for b, c in v.coeffs.items():
            for k, x in self.apply_basis(b).items():
                _add_into(acc, k, c * x)
        return GradedVector(self.space, acc)

    def compose(self, other: "GradedLinearMap") -> "GradedLinearMap":
        """``self o other``."""
        return GradedLinearMap(linalg.matmul(self.even, other.even),
                               linalg.matmul(self.odd, other.odd))

    def determinants(self) -> tuple[GaussScalar, GaussScalar]:
        return linalg.det(self.even), linalg.det(self.odd)

    def is_invertible(self) -> bool:
        d0, d1 = self.determinants()
        return bool(d0) and bool(d1)

    def inverse(self) -> "GradedLinearMap":
        return GradedLinearMap(linalg.inverse(self.even) if self.even else [],
                               linalg.inverse(self.odd) if self.odd else [])

    def __eq__(self, other):
        if not isinstance(other, GradedLinearMap):
            return NotImplemented
        return self.even == other.even and self.odd == other.odd

    def __repr__(self):
        ev = [[str(x) for x in r] for r in self.even]
        od = [[str(x) for x in r] for r in self.odd]
        return f"GradedLinearMap(even={ev}, odd={od})"


class _Identity:
    degree = 0

    def apply_basis(self, b):
        return {b: ONE}


IDENTITY = _Identity()


class FunctionMap:
    """Adapter turning ``key -> {key: coeff}`` into a map usable on tensors."""

    def __init__(self, fn: Callable, degree: int = 0):
        self.fn = fn
        self.degree = degree

    def apply_basis(self, key) -> dict:
        return self.fn(key)


def _as_map(f):
    if hasattr(f, "apply_basis"):
        return f
    if callable(f):
        return FunctionMap(f)
    raise TypeError(f"{f!r} is not a linear map")


# -- tensor operations -----------------------------------------------------------

def superflip(t: TensorVector) -> TensorVector:
    """Koszul-signed swap ``a (x) b -> (-1)^{|a||b|} b (x) a``."""
    if t.arity != 2:
        raise ArityError(f"superflip needs two factors, got {t.arity}")
    out = {}
    for (a, b), c in t.coeffs.items():
        out[(b, a)] = -c if parity(a) & parity(b) else c
    return TensorVector((t.spaces[1], t.spaces[0]), out)


def apply_tensor_maps(f, g, t: TensorVector, out_spaces=None) -> TensorVector:
    """``(f (x) g)(t)`` with ``(f (x) g)(a (x) b) = (-1)^{|g||a|} f(a) (x) g(b)``."""
    if t.arity != 2:
        raise ArityError(f"apply_tensor_maps needs two factors, got {t.arity}")
    f, g = _as_map(f), _as_map(g)
    gdeg = getattr(g, "degree", 0)
    for m, space in ((f, t.spaces[0]), (g, t.spaces[1])):
        ms = getattr(m, "space", None)
        if isinstance(ms, Superspace) and isinstance(space, Superspace) and ms != space:
            raise ShapeError(f"map on {ms} applied to factor {space}")
    acc = {}
    fcache, gcache = {}, {}
    for (a, b), c in t.coeffs.items():
        fa = fcache.get(a)
        if fa is None:
            fa = fcache[a] = f.apply_basis(a)
        gb = gcache.get(b)
        if gb is None:
            gb = gcache[b] = g.apply_basis(b)
        if not fa or not gb:
            continue
        if gdeg and parity(a):
            c = -c
        for ka, va in fa.items():
            cva = c * va
            for kb, vb in gb.items():
                _add_into(acc, (ka, kb), cva * vb)
    if out_spaces is None:
        out_spaces = t.spaces
    return TensorVector(out_spaces, acc)


def twist_middle(t: TensorVector) -> TensorVector:
    """``id (x) tau (x) id`` on a four-factor tensor ``a (x) b (x) c (x) d``."""
    if t.arity != 4:
        raise ArityError(f"twist_middle needs four factors, got {t.arity}")
    out = {}
    for (a, b, c, d), v in t.coeffs.items():
        out[(a, c, b, d)] = -v if parity(b) & parity(c) else v
    s = t.spaces
    return TensorVector((s[0], s[2], s[1], s[3]), out)


def flatten(t: TensorVector) -> TensorVector:
    """Flatten nested tuple keys into one key per elementary factor."""

    def flat(key):
        if isinstance(key, BasisIndex):
            return (key,)
        out = ()
        for k in key:
            out += flat(k)
        return out

    def flat_spaces(sp):
        if isinstance(sp, Superspace):
            return (sp,)
        out = ()
        for x in sp:
            out += flat_spaces(x)
        return out

    coeffs = {}
    for k, v in t.coeffs.items():
        _add_into(coeffs, flat(k), v)
    return TensorVector(flat_spaces(t.spaces), coeffs)


def tensor(*vectors) -> TensorVector:
    """Elementary tensor of graded vectors (no signs are involved)."""
    acc = {(): ONE}
    for v in vectors:
        new = {}
        for k, c in acc.items():
            for b, x in v.coeffs.items():
                new[k + (b,)] = c * x
        acc = new
    return TensorVector(tuple(v.space for v in vectors), acc)
