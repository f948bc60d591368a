"""Sparse multivariate polynomials over Q(i).

A monomial is a sorted tuple of ``(variable, exponent)`` pairs, the empty
tuple being the constant monomial.  Polynomials are immutable.
"""

from __future__ import annotations

from .scalar import ONE, ZERO, GaussScalar, as_scalar


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(): as_scalar(c)})

    @classmethod
    def var(cls, v: int) -> "Poly":
        return cls({((v, 1),): ONE})

    @staticmethod
    def _wrap(x) -> "Poly":
        return x if isinstance(x, Poly) else Poly.const(x)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return self.terms == Poly._wrap(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = Poly._wrap(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            out[m] = c if v is None else v + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Poly._wrap(other))

    def __rsub__(self, other):
        return Poly._wrap(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            s = as_scalar(other)
            if not s:
                return Poly()
            return Poly({m: c * s for m, c in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                v = out.get(m)
                c = c1 * c2
                out[m] = c if v is None else v + c
        return Poly(out)

    __rmul__ = __mul__

    # -- inspection ------------------------------------------------------------
    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=-1)

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def constant(self) -> GaussScalar:
        return self.terms.get((), ZERO)

    def degree_in(self, v: int) -> int:
        return max((e for m in self.terms for w, e in m if w == v), default=0)

    def univariate(self, v: int) -> list:
        """Coefficients (lowest first) when ``v`` is the only variable."""
        coeffs = [ZERO] * (self.degree_in(v) + 1)
        for m, c in self.terms.items():
            coeffs[dict(m).get(v, 0)] = c
        return coeffs

    def common_variable(self):
        """A variable dividing every monomial, or None."""
        mons = list(self.terms)
        if not mons or any(not m for m in mons):
            return None
        common = {v for v, _ in mons[0]}
        for m in mons[1:]:
            common &= {v for v, _ in m}
        return min(common) if common else None

    def divide_variable(self, v: int) -> "Poly":
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            d[v] -= 1
            if not d[v]:
                del d[v]
            out[tuple(sorted(d.items()))] = c
        return Poly(out)

    def monic(self) -> "Poly":
        """Scaled so that the leading coefficient (in a fixed order) is 1."""
        if not self.terms:
            return self
        lead = self.terms[max(self.terms)]
        return self * lead.inverse()

    # -- substitution ----------------------------------------------------------
    def substitute(self, values: dict) -> "Poly":
        """Replace variables by scalars or polynomials."""
        if not values or not (self.variables() & values.keys()):
            return self
        out = Poly()
        cache = {}
        for m, c in self.terms.items():
            term = Poly.const(c)
            rest = []
            for v, e in m:
                if v in values:
                    key = (v, e)
                    if key not in cache:
                        base = Poly._wrap(values[v])
                        p = Poly.const(ONE)
                        for _ in range(e):
                            p = p * base
                        cache[key] = p
                    term = term * cache[key]
                else:
                    rest.append((v, e))
            if rest:
                term = term * Poly({tuple(rest): ONE})
            out = out + term
        return out

    def evaluate(self, values: dict) -> GaussScalar:
        p = self.substitute(values)
        if not p.is_constant():
            raise ValueError("evaluation left free variables")
        return p.constant()

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        parts = []
        for m in sorted(self.terms):
            mono = "*".join(f"v{v}" + (f"^{e}" if e > 1 else "") for v, e in m)
            parts.append(f"({self.terms[m]})" + (f"*{mono}" if mono else ""))
        return "Poly(" + " + ".join(parts) + ")"
