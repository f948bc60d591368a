"""Exact arithmetic in the Gaussian rationals Q(i).

Every structure constant handled by this package lives in Q(i): the only
irrational number that shows up in the low-dimensional classification is a
primitive fourth root of unity.  Rational parts are stored as gmpy2 ``mpq``
values, which are always kept in lowest terms.

Text form: ``a/b+c/d*i`` with zero parts omitted, e.g. ``1``, ``-1/2*i``,
``3/4-1/4*i``, ``i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

import gmpy2
import mpmath
from gmpy2 import is_square, isqrt, mpq, mpz

__all__ = [
    "GaussScalar",
    "MalformedScalarError",
    "UnsupportedDegreeError",
    "UniPoly",
    "UnivariateSolution",
    "ZERO",
    "ONE",
    "I",
    "as_scalar",
    "normalize",
    "sqrt",
    "solve_univariate",
]


class MalformedScalarError(ValueError):
    """Raised for a zero denominator or an unparsable scalar string."""


class UnsupportedDegreeError(ValueError):
    """Raised when root extraction is asked for a polynomial of degree > 4."""


_MPQ_ZERO = mpq(0)


def _to_mpq(value) -> mpq:
    if isinstance(value, GaussScalar):
        if value.im:
            raise TypeError(f"{value} is not rational")
        return value.re
    if isinstance(value, (int, Rational)) or type(value).__name__ in ("mpz", "mpq"):
        return mpq(value)
    if isinstance(value, str):
        return mpq(Fraction(value))
    raise TypeError(f"cannot convert {value!r} to a rational")


class GaussScalar:
    """An element ``re + im*i`` of Q(i), immutable and hashable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(_MPQ_ZERO) else _to_mpq(re)
        self.im = im if type(im) is type(_MPQ_ZERO) else _to_mpq(im)

    # -- construction ------------------------------------------------------
    @classmethod
    def from_parts(cls, re_num, re_den, im_num=0, im_den=1) -> "GaussScalar":
        if re_den == 0 or im_den == 0:
            raise MalformedScalarError("zero denominator")
        return cls(mpq(re_num, re_den), mpq(im_num, im_den))

    @classmethod
    def parse(cls, text: str) -> "GaussScalar":
        return _parse(text)

    # -- fields from the data model ---------------------------------------
    @property
    def re_num(self) -> int:
        return int(self.re.numerator)

    @property
    def re_den(self) -> int:
        return int(self.re.denominator)

    @property
    def im_num(self) -> int:
        return int(self.im.numerator)

    @property
    def im_den(self) -> int:
        return int(self.im.denominator)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        if type(other) is not GaussScalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return GaussScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not GaussScalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return GaussScalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else other - self

    def __mul__(self, other):
        if type(other) is not GaussScalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussScalar(a * c, _MPQ_ZERO)
        return GaussScalar(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussScalar(-self.re, -self.im)

    def __pos__(self):
        return self

    def norm(self) -> mpq:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussScalar":
        return GaussScalar(self.re, -self.im)

    def inverse(self) -> "GaussScalar":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        if not self.im:
            return GaussScalar(1 / self.re, _MPQ_ZERO)
        n = self.norm()
        return GaussScalar(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if type(other) is not GaussScalar:
            other = as_scalar(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparisons -------------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if type(other) is not GaussScalar:
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(Fraction(int(self.re.numerator), int(self.re.denominator)))
        return hash((int(self.re.numerator), int(self.re.denominator),
                     int(self.im.numerator), int(self.im.denominator)))

    def sort_key(self):
        return (self.re, self.im)

    def is_rational(self) -> bool:
        return not self.im

    # -- text ----------------------------------------------------------------
    def __str__(self):
        return _format(self)

    def __repr__(self):
        return f"GaussScalar('{_format(self)}')"


ZERO = GaussScalar(0, 0)
ONE = GaussScalar(1, 0)
I = GaussScalar(0, 1)


def _coerce(value):
    # foreign operand types (polynomials) get a chance at the reflected op
    try:
        return as_scalar(value)
    except TypeError:
        return NotImplemented


def as_scalar(value) -> GaussScalar:
    """Coerce ints, fractions, mpq and canonical strings into a GaussScalar."""
    if type(value) is GaussScalar:
        return value
    if isinstance(value, str):
        return _parse(value)
    if isinstance(value, complex):
        raise TypeError("floating complex values are not exact")
    return GaussScalar(_to_mpq(value), _MPQ_ZERO)


def normalize(re_num, re_den, im_num=0, im_den=1) -> GaussScalar:
    """Build the lowest-terms scalar from raw numerator/denominator parts."""
    return GaussScalar.from_parts(re_num, re_den, im_num, im_den)


def _fmt_rational(q: mpq) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _format(s: GaussScalar) -> str:
    re_part, im_part = s.re, s.im
    if not im_part:
        return _fmt_rational(re_part)
    if im_part == 1:
        imag = "i"
    elif im_part == -1:
        imag = "-i"
    else:
        imag = _fmt_rational(im_part) + "*i"
    if not re_part:
        return imag
    sign = "" if imag.startswith("-") else "+"
    return _fmt_rational(re_part) + sign + imag


_RAT = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?:(?P<re>[+-]?{_RAT})(?![\d/*i]))?"
    rf"(?:(?P<imsign>[+-])?(?P<imval>{_RAT})?\*?i)?$"
)


def _parse_rat(text: str) -> mpq:
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise MalformedScalarError(f"zero denominator in {text!r}")
        return mpq(int(num), int(den))
    return mpq(int(text))


def _parse(text: str) -> GaussScalar:
    raw = text
    text = text.replace(" ", "")
    if not text:
        raise MalformedScalarError("empty scalar string")
    m = _SCALAR_RE.match(text)
    if m is None or (m.group("re") is None and not text.endswith("i")):
        raise MalformedScalarError(f"malformed scalar {raw!r}")
    re_part = _parse_rat(m.group("re")) if m.group("re") else _MPQ_ZERO
    im_part = _MPQ_ZERO
    if text.endswith("i"):
        val = m.group("imval")
        im_part = _parse_rat(val) if val else mpq(1)
        if m.group("imsign") == "-":
            im_part = -im_part
        elif m.group("imsign") is None and m.group("re") is not None:
            raise MalformedScalarError(f"malformed scalar {raw!r}")
    return GaussScalar(re_part, im_part)


# -- square roots -------------------------------------------------------------

def _rational_sqrt(q: mpq):
    if q < 0:
        return None
    num, den = mpz(q.numerator), mpz(q.denominator)
    if is_square(num) and is_square(den):
        return mpq(isqrt(num), isqrt(den))
    return None


def sqrt(s) -> list[GaussScalar]:
    """All square roots of ``s`` inside Q(i): zero, one or two values."""
    s = as_scalar(s)
    if not s:
        return [ZERO]
    p, q = s.re, s.im
    modulus = _rational_sqrt(p * p + q * q)
    if modulus is None:
        return []
    a2 = (p + modulus) / 2
    b2 = (modulus - p) / 2
    a = _rational_sqrt(a2)
    b = _rational_sqrt(b2)
    if a is None or b is None:
        return []
    # 2ab = q fixes the relative sign
    if q < 0:
        b = -b
    root = GaussScalar(a, b)
    assert root * root == s
    return [root, -root]


# -- univariate polynomials ---------------------------------------------------

@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial over Q(i), lowest degree first."""

    coefficients: tuple = ()

    def __post_init__(self):
        coeffs = [as_scalar(c) for c in self.coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x) -> GaussScalar:
        x = as_scalar(x)
        acc = ZERO
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            terms.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(terms)


@dataclass
class UnivariateSolution:
    roots: list = field(default_factory=list)
    unresolved: list = field(default_factory=list)


def _deflate(coeffs: list, root: GaussScalar) -> list:
    # synthetic division by (t - root), exact remainder expected
    out = [ZERO] * (len(coeffs) - 1)
    acc = ZERO
    for k in range(len(coeffs) - 1, 0, -1):
        acc = acc * root + coeffs[k]
        out[k - 1] = acc
    assert acc * root + coeffs[0] == ZERO
    return out


def _gaussian_integer_root(monic: list) -> GaussScalar | None:
    """A root in Z[i] of a monic polynomial over Z[i], or None.

    Eigenvalues of the companion matrix, computed with enough precision to
    survive a root of multiplicity four, are rounded to the nearest Gaussian
    integer and each candidate is checked exactly.
    """
    n = len(monic) - 1
    digits = max(len(str(abs(int(part)))) for c in monic for part in (c.re, c.im))
    poly = UniPoly(tuple(monic))
    with mpmath.workdps(4 * digits + 40):
        comp = mpmath.zeros(n, n)
        for k in range(n):
            comp[0, k] = -mpmath.mpc(int(monic[n - 1 - k].re), int(monic[n - 1 - k].im))
            if k:
                comp[k, k - 1] = 1
        approx = mpmath.eig(comp, left=False, right=False)
        cands = [GaussScalar(int(mpmath.nint(z.real)), int(mpmath.nint(z.imag))) for z in approx]
    for cand in cands:
        if not poly(cand):
            return cand
    return None


def solve_univariate(p) -> UnivariateSolution:
    """Roots in Q(i) of a polynomial of degree <= 4.

    Factors whose roots escape Q(i) are reported in ``unresolved``.  The zero
    polynomial is rejected since every scalar would be a root.
    """
    if not isinstance(p, UniPoly):
        p = UniPoly(tuple(p))
    if p.degree > 4:
        raise UnsupportedDegreeError(f"degree {p.degree} > 4 is not supported")
    if p.degree < 0:
        raise ValueError("the zero polynomial has every scalar as a root")
    coeffs = list(p.coefficients)
    roots: list[GaussScalar] = []
    # factor out t^k
    if not coeffs[0] and len(coeffs) > 1:
        roots.append(ZERO)
        while len(coeffs) > 1 and not coeffs[0]:
            coeffs = coeffs[1:]
    lead = coeffs[-1]
    coeffs = [c / lead for c in coeffs]
    # search Gaussian-integer roots of the integral monic transform
    while len(coeffs) - 1 > 2:
        found = None
        n = len(coeffs) - 1
        lcm = mpz(1)
        for c in coeffs:
            for part in (c.re, c.im):
                d = mpz(part.denominator)
                lcm = gmpy2.lcm(lcm, d)
        scale = GaussScalar(lcm, 0)
        # u = lcm * t turns the monic polynomial into one over Z[i]
        monic = [coeffs[k] * scale ** (n - k) for k in range(n + 1)]
        if not monic[0]:
            found = ZERO
        else:
            root = _gaussian_integer_root(monic)
            found = None if root is None else root / scale
        if found is None:
            break
        if found not in roots:
            roots.append(found)
        coeffs = _deflate(coeffs, found)
    unresolved = []
    deg = len(coeffs) - 1
    if deg == 1:
        r = -coeffs[0] / coeffs[1]
        if r not in roots:
            roots.append(r)
    elif deg == 2:
        a, b, c = coeffs[2], coeffs[1], coeffs[0]
        disc = b * b - 4 * a * c
        rs = sqrt(disc)
        if rs:
            for r in rs:
                root = (-b + r) / (2 * a)
                if root not in roots:
                    roots.append(root)
        else:
            unresolved.append(UniPoly(tuple(coeffs)))
    elif deg > 2:
        unresolved.append(UniPoly(tuple(coeffs)))
    for r in roots:
        assert not p(r), (p, r)
    return UnivariateSolution(roots=roots, unresolved=unresolved)
