"""The free associative superalgebra on the negative generators F_1..F_m over
Q(q), graded by weight and parity, with the bar and tau involutions and the
three quantum differentials.

Elements are finite Q(q)-combinations of words; a word (j_1, ..., j_k) stands
for F_{j_1} ... F_{j_k} and has weight -(alpha_{j_1} + ... + alpha_{j_k}).
"""

from __future__ import annotations

from .rootdata import Realization
from .scalars import RatFunc, RF_ONE


class FreeElem:
    """Linear combination of words with RatFunc coefficients."""

    __slots__ = ("realization", "terms")

    def __init__(self, realization: Realization, terms=None):
        self.realization = realization
        t = {}
        if terms:
            for w, c in terms.items():
                if not c.is_zero():
                    t[tuple(w)] = c
        self.terms = t

    @staticmethod
    def zero(X):
        return FreeElem(X)

    @staticmethod
    def unit(X, coeff=None):
        return FreeElem(X, {(): coeff if coeff is not None else RF_ONE})

    @staticmethod
    def generator(X, i, coeff=None):
        if not 1 <= i <= X.m:
            raise ValueError("generator index out of range")
        return FreeElem(X, {(i,): coeff if coeff is not None else RF_ONE})

    @staticmethod
    def word(X, w, coeff=None):
        return FreeElem(X, {tuple(w): coeff if coeff is not None else RF_ONE})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, FreeElem) and self.realization == other.realization
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.realization, tuple(sorted(self.terms.items()))))

    def _check(self, other):
        if self.realization != other.realization:
            raise ValueError("realization mismatch")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            s = t.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                t.pop(w, None)
            else:
                t[w] = s
        out = FreeElem.__new__(FreeElem)
        out.realization = self.realization
        out.terms = t
        return out

    def __neg__(self):
        out = FreeElem.__new__(FreeElem)
        out.realization = self.realization
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: RatFunc):
        if c.is_zero():
            return FreeElem(self.realization)
        out = FreeElem.__new__(FreeElem)
        out.realization = self.realization
        out.terms = {w: k * c for w, k in self.terms.items()}
        return out

    def __mul__(self, other):
        """Concatenation product (bilinear, associative, unit = empty word)."""
        self._check(other)
        t = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = t.get(w)
                s = c if s is None else s + c
                if s.is_zero():
                    t.pop(w, None)
                else:
                    t[w] = s
        out = FreeElem.__new__(FreeElem)
        out.realization = self.realization
        out.terms = t
        return out

    # -- grading

    def word_weight(self, w):
        """Alpha-coordinates of the (positive) weight of a word; |word| = -this."""
        xi = [0] * self.realization.m
        for j in w:
            xi[j - 1] += 1
        return tuple(xi)

    def word_parity(self, w):
        X = self.realization
        return sum(X.parity(j) for j in w) % 2

    def weight(self):
        """The common Q^+ grading of a homogeneous element (raises otherwise)."""
        it = iter(self.terms)
        try:
            xi = self.word_weight(next(it))
        except StopIteration:
            raise ValueError("weight of zero is undefined")
        for w in it:
            if self.word_weight(w) != xi:
                raise ValueError("inhomogeneous element")
        return xi

    def is_homogeneous(self):
        if not self.terms:
            return True
        try:
            self.weight()
            return True
        except ValueError:
            return False

    def parity(self):
        xi = self.weight()
        X = self.realization
        return sum(c * X.parity(i + 1) for i, c in enumerate(xi)) % 2

    def to_json(self):
        return {
            "realization": self.realization.to_json(),
            "terms": [{"word": list(w), "coeff": c.to_json()}
                      for w, c in sorted(self.terms.items())],
        }

    @staticmethod
    def from_json(obj):
        X = Realization.from_json(obj["realization"])
        terms = {}
        for t in obj["terms"]:
            terms[tuple(int(j) for j in t["word"])] = RatFunc.from_json(t["coeff"])
        return FreeElem(X, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms):
            wtxt = "*".join("F%d" % j for j in w) if w else "1"
            bits.append("(%r)%s" % (self.terms[w], wtxt))
        return " + ".join(bits)


def free_mul(x: FreeElem, y: FreeElem) -> FreeElem:
    return x * y


# ---------------------------------------------------------------------------
# involutions
# ---------------------------------------------------------------------------

def bar_free(x: FreeElem) -> FreeElem:
    """Fix every word, bar-conjugate every coefficient."""
    out = FreeElem.__new__(FreeElem)
    out.realization = x.realization
    out.terms = {w: c.bar() for w, c in x.terms.items()}
    return out


def tau_free(x: FreeElem) -> FreeElem:
    """Reverse every word, keep coefficients; anti-multiplicative involution."""
    t = {}
    for w, c in x.terms.items():
        rw = w[::-1]
        s = t.get(rw)
        t[rw] = c if s is None else s + c
    return FreeElem(x.realization, t)


# ---------------------------------------------------------------------------
# quantum differentials
# ---------------------------------------------------------------------------

def _pair_sum(gcm, row, xi):
    return sum(gcm[row][j] * c for j, c in enumerate(xi) if c)


def derivation(x: FreeElem, i: int, variant: str = "e") -> FreeElem:
    """Apply e_i, ebar_i, or etau_i to a weight-homogeneous element.

    e_i(F_j) = delta_ij; e_i(uv) = e_i(u)v + (-1)^{p(u)p(i)} q^{(alpha_i,|u|)} u e_i(v).
    ebar flips the sign of the q-exponent.  etau = tau o e_i o tau peels from the
    right: e_i^tau(uv) = (-1)^{p(v)p(i)} q^{(alpha_i,|v|)} e_i^tau(u) v + u e_i^tau(v),
    which is the unique recursion compatible with (x F_i, y) = (x, e_i^tau(y)).
    """
    X = x.realization
    if not 1 <= i <= X.m:
        raise ValueError("index out of range")
    if not x.is_homogeneous():
        raise ValueError("derivation needs a weight-homogeneous element")
    if variant not in ("e", "ebar", "etau"):
        raise ValueError("unknown variant %r" % (variant,))
    gcm = X.gcm()
    pars = (0,) + X.parities()  # 1-based lookup
    p_i = pars[i]
    t = {}

    if variant in ("e", "ebar"):
        sign_exp = 1 if variant == "e" else -1
        for w, c in x.terms.items():
            # peel letters from the left: term for position k has
            # prefix u = w[:k], factor (-1)^{p(u)p(i)} q^{sign*(alpha_i, -|prefix|)}
            qexp = 0
            ppar = 0
            for k, j in enumerate(w):
                if j == i:
                    coeff = c * RatFunc.q_power(sign_exp * qexp, (-1) ** (ppar * p_i))
                    sub = w[:k] + w[k + 1:]
                    s = t.get(sub)
                    s = coeff if s is None else s + coeff
                    if s.is_zero():
                        t.pop(sub, None)
                    else:
                        t[sub] = s
                qexp -= gcm[i - 1][j - 1]
                ppar = (ppar + pars[j]) % 2
        return FreeElem(X, t)

    # etau: deleting position k carries the twist of the suffix w[k+1:]
    for w, c in x.terms.items():
        qexp = 0
        ppar = 0
        for k in range(len(w) - 1, -1, -1):
            j = w[k]
            if j == i:
                coeff = c * RatFunc.q_power(qexp, (-1) ** (ppar * p_i))
                sub = w[:k] + w[k + 1:]
                s = t.get(sub)
                s = coeff if s is None else s + coeff
                if s.is_zero():
                    t.pop(sub, None)
                else:
                    t[sub] = s
            qexp -= gcm[i - 1][j - 1]
            ppar = (ppar + pars[j]) % 2
    return FreeElem(X, t)
