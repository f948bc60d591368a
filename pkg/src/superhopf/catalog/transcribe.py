"""Turn printed coproduct formulas into e-basis structure constants.

Formulas are written over words in labelled generators, with ``@`` for the
tensor sign and ``x^2`` for powers, for example::

    "1/2(x@1 + x^2@1 + x^2@x - x@x)"
    "1@y + y@1 - 2x@xy - 2xy@x"

A superalgebra is described by label vectors (``x = e_2^0 - e_3^0`` and so
on) and a list of words forming a basis.  The coproduct is given on the
generators; it is extended multiplicatively to the words and then moved to
the e-basis by inverting the word matrix.
"""

from __future__ import annotations

import re

from .. import linalg
from ..axioms import delta_mu_rhs, mul_vec
from ..graded import UNIT, BasisIndex, _add_into
from ..scalar import I, ONE, ZERO, as_scalar
from ..structures import ComultTable, CounitVector, SuperBialgebraData

_COEFF = r"(?:\d+(?:/\d+)?\*?i?|i)"
_WORD = r"(?:1|(?:[xyz](?:\^\d+)?)+)"
_TERM = re.compile(rf"^({_COEFF})?\s*\*?\s*({_WORD})\s*@\s*({_WORD})$")
_GROUP = re.compile(rf"^({_COEFF})?\s*\*?\s*\((.*)\)$", re.S)


class FormulaError(ValueError):
    pass


def _coeff(text):
    if not text:
        return ONE
    text = text.replace("*", "")
    if text.endswith("i") and text != "i":
        return as_scalar(text[:-1]) * I
    return as_scalar(text)


def _split_signed(text):
    """Split at top-level + and - signs, keeping each sign with its chunk."""
    chunks, depth, sign, buf = [], 0, 1, []
    for ch in text:
        if ch in "+-" and depth == 0:
            piece = "".join(buf).strip()
            if piece:
                chunks.append((sign, piece))
                sign = 1
            buf = []
            if ch == "-":
                sign = -sign
            continue
        depth += (ch == "(") - (ch == ")")
        buf.append(ch)
    piece = "".join(buf).strip()
    if piece:
        chunks.append((sign, piece))
    return chunks


def parse_tensor(text: str) -> list:
    """``[(coefficient, left word, right word), ...]`` for a formula string."""
    out = []
    for sign, chunk in _split_signed(text.strip()):
        m = _GROUP.match(chunk)
        if m:
            c = _coeff(m.group(1)) * sign
            out.extend((c * x, l, r) for x, l, r in parse_tensor(m.group(2)))
            continue
        m = _TERM.match(chunk)
        if not m:
            raise FormulaError(f"cannot read term {chunk!r}")
        out.append((_coeff(m.group(1)) * sign, m.group(2), m.group(3)))
    return out


def letters(word: str) -> list[str]:
    if word == "1":
        return []
    out = []
    for name, exp in re.findall(r"([xyz])(?:\^(\d+))?", word):
        out.extend([name] * (int(exp) if exp else 1))
    return out


class LabelBasis:
    """Named elements of a superalgebra and the words forming a basis."""

    def __init__(self, algebra: SuperBialgebraData, labels: dict, words: list[str]):
        self.algebra = algebra
        self.table = algebra.mult.entries
        self.labels = {name: {BasisIndex(*k): as_scalar(v) for k, v in vec.items() if as_scalar(v)}
                       for name, vec in labels.items()}
        self.words = list(words)
        basis = algebra.basis()
        cols = [[self.word(w).get(b, ZERO) for w in self.words] for b in basis]
        if linalg.rank(cols) != len(basis):
            raise FormulaError(f"{algebra.id}: words {words} are not a basis")
        inv = linalg.inverse(cols)
        # express each e-basis vector in words
        self.e_in_words = {b: {w: inv[j][i] for j, w in enumerate(self.words) if inv[j][i]}
                           for i, b in enumerate(basis)}

    def word(self, w: str) -> dict:
        v = {UNIT: ONE}
        for name in letters(w):
            v = mul_vec(self.table, v, self.labels[name])
        return v

    def tensor(self, terms) -> dict:
        acc = {}
        for c, l, r in terms:
            for a, ca in self.word(l).items():
                for b, cb in self.word(r).items():
                    _add_into(acc, (a, b), c * ca * cb)
        return acc

    def extend(self, delta: dict, eps: dict, ident: str, provenance: str = "",
               antipode=None) -> SuperBialgebraData:
        """Bialgebra record from Δ and ε on the generators."""
        gen_delta = {name: self.tensor(parse_tensor(f) if isinstance(f, str) else f)
                     for name, f in delta.items()}
        missing = set(self.labels) - set(gen_delta)
        for name in missing:
            raise FormulaError(f"{ident}: no coproduct given for {name}")
        gen_eps = {name: as_scalar(eps.get(name, 0)) for name in self.labels}
        word_delta, word_eps = {}, {}
        for w in self.words:
            d, e = {(UNIT, UNIT): ONE}, ONE
            for name in letters(w):
                d = delta_mu_rhs(self.table, d, gen_delta[name])
                e = e * gen_eps[name]
            word_delta[w], word_eps[w] = d, e
        comult, counit = {}, {}
        for b, combo in self.e_in_words.items():
            acc, val = {}, ZERO
            for w, c in combo.items():
                for key, x in word_delta[w].items():
                    _add_into(acc, key, c * x)
                val = val + c * word_eps[w]
            comult[b] = acc
            if val:
                counit[b] = val
        return self.algebra.with_changes(
            id=ident,
            comult=ComultTable(self.algebra.space, comult),
            counit=CounitVector(self.algebra.space, counit),
            antipode=antipode,
            labels=dict(self.labels),
            provenance=provenance,
        )
