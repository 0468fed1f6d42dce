"""Exact arithmetic in Q(q): Laurent polynomials, normalized rational functions,
q-integers, and ring-membership predicates.

Every scalar appearing in the algebra layers is a RatFunc: a canonically
normalized q^shift * num/den with integer-coefficient num, den.  Equality is
structural.  All values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd


# ---------------------------------------------------------------------------
# integer polynomials as coefficient tuples, constant term first
# ---------------------------------------------------------------------------

P_ONE = (1,)
P_ZERO = ()


def _ptrim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _padd(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return _ptrim(out)


def _pneg(f):
    return tuple(-c for c in f)


def _pmul(f, g):
    if not f or not g:
        return P_ZERO
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] += a * b
    return _ptrim(out)


def _pcontent(f):
    c = 0
    for a in f:
        c = _igcd(c, abs(a))
        if c == 1:
            return 1
    return c


def _pprim(f):
    """Primitive part with positive leading coefficient."""
    if not f:
        return f
    c = _pcontent(f)
    if f[-1] < 0:
        c = -c
    return tuple(a // c for a in f)


def _prem_pseudo(f, g):
    """Pseudo-remainder of f by g over Z (g nonzero)."""
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while len(f) - 1 >= dg and any(f):
        df = len(f) - 1
        if f[-1] == 0:
            f.pop()
            continue
        lf = f[-1]
        f = [c * lg for c in f]
        for i in range(dg + 1):
            f[df - dg + i] -= lf * g[i]
        f = list(_ptrim(f))
        if not f:
            break
    return _ptrim(f)


def _pgcd(f, g):
    """Primitive gcd in Z[q] (positive leading coefficient), by primitive PRS."""
    f, g = _pprim(f), _pprim(g)
    if not f:
        return g
    if not g:
        return f
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _pprim(_prem_pseudo(f, g))
        f, g = g, r
    return f


def _pdiv_exact(f, g):
    """Exact division f/g in Z[q]; raises if not exact."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return P_ZERO
    q = [Fraction(0)] * (len(f) - len(g) + 1)
    rem = [Fraction(c) for c in f]
    lg = Fraction(g[-1])
    for k in range(len(f) - len(g), -1, -1):
        coef = rem[k + len(g) - 1] / lg
        q[k] = coef
        if coef:
            for i, b in enumerate(g):
                rem[k + i] -= coef * b
    if any(rem):
        raise ValueError("inexact polynomial division")
    out = []
    for c in q:
        if c.denominator != 1:
            raise ValueError("inexact polynomial division (non-integer quotient)")
        out.append(int(c))
    return _ptrim(out)


def _peval(f, x):
    v = Fraction(0)
    for c in reversed(f):
        v = v * x + c
    return v


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Laurent polynomial in q with integer coefficients, {exponent: coeff}."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in terms.items():
                if c:
                    t[int(e)] = int(c)
        self.terms = t
        self._hash = None

    @staticmethod
    def zero():
        return LaurentPoly()

    @staticmethod
    def one():
        return LaurentPoly({0: 1})

    @staticmethod
    def q_power(k, coeff=1):
        return LaurentPoly({k: coeff} if coeff else {})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.terms.items())))
        return self._hash

    def __add__(self, other):
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = t
        out._hash = None
        return out

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e: -c for e, c in self.terms.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.terms or not other.terms:
            return LaurentPoly()
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = t.get(e, 0) + c1 * c2
                if s:
                    t[e] = s
                else:
                    t.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = t
        out._hash = None
        return out

    def bar(self):
        """Substitute q -> q^-1."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {-e: c for e, c in self.terms.items()}
        out._hash = None
        return out

    def valuation(self):
        if not self.terms:
            raise ValueError("valuation of zero")
        return min(self.terms)

    def degree(self):
        if not self.terms:
            raise ValueError("degree of zero")
        return max(self.terms)

    def eval_at(self, x):
        """Evaluate at a Fraction (or int) value of q."""
        x = Fraction(x)
        v = Fraction(0)
        for e, c in self.terms.items():
            v += c * x ** e
        return v

    def to_int_poly(self):
        """Return (valuation, coefficient tuple) with q^valuation factored out."""
        if not self.terms:
            return 0, P_ZERO
        v = self.valuation()
        d = self.degree()
        out = [0] * (d - v + 1)
        for e, c in self.terms.items():
            out[e - v] = c
        return v, tuple(out)

    @staticmethod
    def from_int_poly(val, coeffs):
        return LaurentPoly({val + i: c for i, c in enumerate(coeffs) if c})

    def to_json(self):
        return {str(e): c for e, c in sorted(self.terms.items())}

    @staticmethod
    def from_json(obj):
        return LaurentPoly({int(e): int(c) for e, c in obj.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                bits.append(f"{c}")
            elif e == 1:
                bits.append(f"{c}*q" if c not in (1, -1) else ("q" if c == 1 else "-q"))
            else:
                bits.append(f"{c}*q^{e}" if c not in (1, -1) else (f"q^{e}" if c == 1 else f"-q^{e}"))
        return " + ".join(bits).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# q-integers
# ---------------------------------------------------------------------------

def q_integer(a):
    """[a] = (q^a - q^-a)/(q - q^-1) as a LaurentPoly; odd in a."""
    if a == 0:
        return LaurentPoly()
    s = 1 if a > 0 else -1
    n = abs(a)
    return LaurentPoly({s * (n - 1 - 2 * k): s for k in range(n)})


def q_factorial(b):
    if b < 0:
        raise ValueError("q_factorial of negative integer")
    out = LaurentPoly.one()
    for c in range(1, b + 1):
        out = out * q_integer(c)
    return out


def laurent_div_exact(f, g):
    """Exact division of Laurent polynomials, integer coefficients required."""
    vf, pf = f.to_int_poly()
    vg, pg = g.to_int_poly()
    if not pg:
        raise ZeroDivisionError("Laurent division by zero")
    if not pf:
        return LaurentPoly()
    return LaurentPoly.from_int_poly(vf - vg, _pdiv_exact(pf, pg))


def q_binomial(a, b):
    """Quantum binomial: prod_{c=0}^{b-1}[a-c] / [b]!; always a Laurent polynomial."""
    if b < 0:
        raise ValueError("q_binomial needs b >= 0")
    num = LaurentPoly.one()
    for c in range(b):
        num = num * q_integer(a - c)
    return laurent_div_exact(num, q_factorial(b))


# ---------------------------------------------------------------------------
# normalized rational functions
# ---------------------------------------------------------------------------

class RatFunc:
    """q^shift * num/den in canonical form.

    num, den are integer polynomial tuples with nonzero constant terms,
    coprime primitive parts, coprime contents, den(0) > 0.  Zero is
    (0, (), (1,)).  Two RatFunc are equal iff their fields are equal.
    """

    __slots__ = ("shift", "num", "den", "_hash")

    def __init__(self, shift, num, den, _checked=False):
        if _checked:
            self.shift = shift
            self.num = num
            self.den = den
            self._hash = None
            return
        rf = _normalize(shift, num, den)
        self.shift = rf.shift
        self.num = rf.num
        self.den = rf.den
        self._hash = None

    # -- constructors

    @staticmethod
    def zero():
        return RF_ZERO

    @staticmethod
    def one():
        return RF_ONE

    @staticmethod
    def from_int(n):
        if n == 0:
            return RF_ZERO
        return RatFunc(0, (n,), P_ONE, _checked=True)

    @staticmethod
    def from_fraction(fr):
        fr = Fraction(fr)
        if fr == 0:
            return RF_ZERO
        return RatFunc(0, (fr.numerator,), (fr.denominator,), _checked=True)

    @staticmethod
    def q_power(k, coeff=1):
        if coeff == 0:
            return RF_ZERO
        if coeff > 0:
            return RatFunc(k, (coeff,), P_ONE, _checked=True)
        return RatFunc(k, (coeff,), P_ONE, _checked=True)

    @staticmethod
    def from_laurent(L):
        if not L.terms:
            return RF_ZERO
        v, p = L.to_int_poly()
        return RatFunc(v, p, P_ONE, _checked=True)

    @staticmethod
    def from_laurent_pair(num, den):
        """num/den for LaurentPoly num, den."""
        vn, pn = num.to_int_poly()
        vd, pd = den.to_int_poly()
        if not pd:
            raise ZeroDivisionError("zero denominator")
        if not pn:
            return RF_ZERO
        return _normalize(vn - vd, pn, pd)

    # -- predicates / views

    def is_zero(self):
        return not self.num

    def is_laurent(self):
        return self.den == P_ONE

    def laurent(self):
        if self.den != P_ONE:
            raise ValueError("not a Laurent polynomial: %r" % (self,))
        return LaurentPoly.from_int_poly(self.shift, self.num)

    def __eq__(self, other):
        return (isinstance(other, RatFunc) and self.shift == other.shift
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shift, self.num, self.den))
        return self._hash

    # -- arithmetic

    def __neg__(self):
        if not self.num:
            return self
        return RatFunc(self.shift, _pneg(self.num), self.den, _checked=True)

    def __add__(self, other):
        if not self.num:
            return other
        if not other.num:
            return self
        # align shifts: value = q^s (n1/d1 + q^(s2-s1) n2/d2) with s = min shift
        s = min(self.shift, other.shift)
        n1 = self.num if self.shift == s else _pmul(self.num, _qpow_poly(self.shift - s))
        n2 = other.num if other.shift == s else _pmul(other.num, _qpow_poly(other.shift - s))
        if self.den == other.den:
            return _normalize(s, _padd(n1, n2), self.den)
        return _normalize(s, _padd(_pmul(n1, other.den), _pmul(n2, self.den)),
                          _pmul(self.den, other.den))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.num or not other.num:
            return RF_ZERO
        if self.den == P_ONE and other.den == P_ONE:
            return _normalize_laurent(self.shift + other.shift, _pmul(self.num, other.num))
        return _normalize(self.shift + other.shift,
                          _pmul(self.num, other.num), _pmul(self.den, other.den))

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return _normalize(-self.shift, self.den, self.num)

    def __truediv__(self, other):
        return self * other.inverse()

    def bar(self):
        """Substitute q -> q^-1 and renormalize; involutive."""
        if not self.num:
            return self
        # q^-s * num(1/q)/den(1/q) = q^(-s - deg num + deg den) * rev(num)/rev(den)
        rn = tuple(reversed(self.num))
        rd = tuple(reversed(self.den))
        sh = -self.shift - (len(self.num) - 1) + (len(self.den) - 1)
        # reversed tuples have nonzero constant terms already (old leading coeffs)
        if rd[0] < 0:
            rn, rd = _pneg(rn), _pneg(rd)
        return RatFunc(sh, rn, rd, _checked=True)

    def eval_at(self, x):
        x = Fraction(x)
        dv = _peval(self.den, x)
        if dv == 0:
            raise ZeroDivisionError("evaluation at a pole")
        if x == 0:
            if self.shift < 0:
                raise ZeroDivisionError("pole at 0")
            return Fraction(0) if self.shift > 0 else Fraction(self.num[0], self.den[0])
        return x ** self.shift * _peval(self.num, x) / dv

    def residue_at_0(self):
        """Value at q = 0 (requires no pole at 0)."""
        if not self.num:
            return Fraction(0)
        if self.shift < 0:
            raise ZeroDivisionError("pole at 0")
        if self.shift > 0:
            return Fraction(0)
        return Fraction(self.num[0], self.den[0])

    def to_json(self):
        return {"shift": self.shift,
                "num": {str(i): c for i, c in enumerate(self.num) if c},
                "den": {str(i): c for i, c in enumerate(self.den) if c}}

    @staticmethod
    def from_json(obj):
        num = {}
        for e, c in obj["num"].items():
            num[int(e)] = int(c)
        den = {}
        for e, c in obj["den"].items():
            den[int(e)] = int(c)
        nmax = max(num) if num else -1
        dmax = max(den) if den else -1
        npoly = tuple(num.get(i, 0) for i in range(nmax + 1))
        dpoly = tuple(den.get(i, 0) for i in range(dmax + 1))
        return _normalize(int(obj["shift"]), npoly, dpoly)

    def __repr__(self):
        if not self.num:
            return "0"
        n = LaurentPoly.from_int_poly(self.shift, self.num)
        if self.den == P_ONE:
            return repr(n)
        return "(%r)/(%r)" % (n, LaurentPoly.from_int_poly(0, self.den))


def _qpow_poly(k):
    # q^k as a plain polynomial tuple, k >= 0
    return tuple([0] * k + [1])


def _normalize_laurent(shift, num):
    if not num:
        return RF_ZERO
    v = 0
    while num[v] == 0:
        v += 1
    if v:
        shift += v
        num = num[v:]
    return RatFunc(shift, num, P_ONE, _checked=True)


def _normalize(shift, num, den):
    num = _ptrim(num)
    den = _ptrim(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return RF_ZERO
    # factor out q powers
    vn = 0
    while num[vn] == 0:
        vn += 1
    vd = 0
    while den[vd] == 0:
        vd += 1
    shift += vn - vd
    num = num[vn:]
    den = den[vd:]
    if den == P_ONE:
        return RatFunc(shift, num, den, _checked=True)
    g = _pgcd(num, den)
    if len(g) > 1:
        num = _pdiv_exact(num, g)
        den = _pdiv_exact(den, g)
    cn, cd = _pcontent(num), _pcontent(den)
    c = _igcd(cn, cd)
    if c > 1:
        num = tuple(a // c for a in num)
        den = tuple(a // c for a in den)
    if den[0] < 0:
        num, den = _pneg(num), _pneg(den)
    return RatFunc(shift, num, den, _checked=True)


RF_ZERO = RatFunc(0, P_ZERO, P_ONE, _checked=True)
RF_ONE = RatFunc(0, P_ONE, P_ONE, _checked=True)


def rf_laurent(L):
    return RatFunc.from_laurent(L)


def rf_q_int(a):
    return RatFunc.from_laurent(q_integer(a))


def rf_q_factorial(b):
    return RatFunc.from_laurent(q_factorial(b))


# ---------------------------------------------------------------------------
# ring membership
# ---------------------------------------------------------------------------

A_LOCAL = "A_local"          # rational functions with no pole at q = 0
ZQ = "Zq"                    # Z[q]
ZQ_LAURENT = "ZqLaurent"     # Z[q, q^-1]
QZQ = "qZq"                  # qZ[q]
AZ_BOUNDED = "AZ_bounded"    # bounded test for the Z-algebra gen by q, 1/(1-q^2t)


def ring_membership(f, ring, tmax=None):
    """Membership of a RatFunc in the named subring of Q(q).

    AZ_bounded decides whether the denominator divides a product of factors
    (1 - q^{2t}) for 1 <= t <= tmax, by repeated exact division.
    """
    if f.is_zero():
        return True
    if ring == A_LOCAL:
        return f.shift >= 0
    if ring == ZQ:
        return f.den == P_ONE and f.shift >= 0
    if ring == ZQ_LAURENT:
        return f.den == P_ONE
    if ring == QZQ:
        return f.den == P_ONE and f.shift >= 1
    if ring == AZ_BOUNDED:
        if tmax is None or tmax < 1:
            raise ValueError("AZ_bounded needs a factor bound tmax >= 1")
        if f.shift < 0:
            return False
        den = f.den
        if den == P_ONE:
            return True
        if _pcontent(den) != 1:
            return False
        factors = [_ptrim([1] + [0] * (2 * t - 1) + [-1]) for t in range(1, tmax + 1)]
        while den != P_ONE:
            progress = False
            for fac in factors:
                g = _pgcd(den, fac)
                while len(g) > 1:
                    den = _pdiv_exact(den, g)
                    if den[0] < 0:
                        den = _pneg(den)
                    progress = True
                    g = _pgcd(den, fac)
            if not progress:
                return False
        return True
    raise ValueError("unknown ring %r" % (ring,))


def in_q_az(f, tmax):
    """f in q * A_Z, bounded test."""
    if f.is_zero():
        return True
    return f.shift >= 1 and ring_membership(
        RatFunc(f.shift - 1, f.num, f.den, _checked=True), AZ_BOUNDED, tmax=tmax)
