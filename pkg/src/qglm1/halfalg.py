"""The half quantum group U^-(X): the free superalgebra on F_1..F_m modulo the
radical of the Kashiwara-type bilinear form.

Equality, membership, and expansion are all decided through the form: the PBW
monomials of a convex order form a basis of each weight space, their Gram
matrix is invertible, and pairing against them identifies any element.  The
form itself is computed by the adjunction (F_i x, y) = (x, e_i(y)), peeling
leftmost letters.

Root vectors are built by the costandard recursion: for a non-simple positive
root beta, pick the two-term factorization beta = beta_r + beta_s (both
positive, beta_r earlier in the convex order) with beta_r maximal, and set
F_beta = F_{beta_s} F_{beta_r} - (-1)^{p(beta_r)p(beta_s)} q^{-(beta_r,beta_s)}
F_{beta_r} F_{beta_s}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootdata import Realization, staircase_word, convex_order
from .scalars import RatFunc, RF_ZERO, RF_ONE, rf_q_factorial, LaurentPoly
from .freealg import FreeElem, bar_free, tau_free, derivation
from .linalg import LUSolver


@dataclass(frozen=True)
class PBWBasisData:
    """A convex order on the positive roots plus its root vectors."""
    word: tuple
    order: tuple          # interval roots (a, b) in convex order
    parities: tuple       # parity of each root
    heights: tuple

    def positions(self):
        return {r: t for t, r in enumerate(self.order)}


class UMinusElem:
    """Element of U^-(X), held as a representative in the free superalgebra."""

    __slots__ = ("algebra", "rep")

    def __init__(self, algebra, rep: FreeElem):
        self.algebra = algebra
        self.rep = rep

    def __add__(self, other):
        return UMinusElem(self.algebra, self.rep + other.rep)

    def __sub__(self, other):
        return UMinusElem(self.algebra, self.rep - other.rep)

    def __mul__(self, other):
        return UMinusElem(self.algebra, self.rep * other.rep)

    def __neg__(self):
        return UMinusElem(self.algebra, -self.rep)

    def scale(self, c):
        return UMinusElem(self.algebra, self.rep.scale(c))

    def is_zero(self):
        return self.algebra.is_zero(self.rep)

    def __eq__(self, other):
        return (isinstance(other, UMinusElem) and self.algebra is other.algebra
                and self.algebra.is_zero(self.rep - other.rep))

    def __repr__(self):
        return "UMinus(%r)" % (self.rep,)

    def to_json(self):
        return self.rep.to_json()


class HalfAlgebra:
    """U^-(X) with per-weight caches of PBW data, Gram solvers, and bases."""

    _instances = {}

    def __init__(self, X: Realization):
        self.X = X
        self.m = X.m
        self.gcm = X.gcm()
        self._pbw = {}          # word -> PBWBasisData
        self._root_vec = {}     # (word, root) -> FreeElem (single power)
        self._ws = {}           # (word, xi) -> _WeightSpace
        self._emat = {}         # (word, xi, i, variant) -> matrix
        self._cb = {}           # (word, xi) -> list of _CBElem

    @staticmethod
    def get(X: Realization) -> "HalfAlgebra":
        inst = HalfAlgebra._instances.get(X)
        if inst is None:
            inst = HalfAlgebra._instances[X] = HalfAlgebra(X)
        return inst

    # -- element constructors

    def unit(self):
        return UMinusElem(self, FreeElem.unit(self.X))

    def generator(self, i):
        return UMinusElem(self, FreeElem.generator(self.X, i))

    def elem(self, rep: FreeElem):
        if rep.realization != self.X:
            raise ValueError("realization mismatch")
        return UMinusElem(self, rep)

    def word_elem(self, *w):
        return UMinusElem(self, FreeElem.word(self.X, w))

    # ------------------------------------------------------------------
    # the bilinear form
    # ------------------------------------------------------------------

    def form_pair(self, x, y) -> RatFunc:
        """(x, y); distinct weights pair to zero."""
        xr = x.rep if isinstance(x, UMinusElem) else x
        yr = y.rep if isinstance(y, UMinusElem) else y
        yparts = _split_weights(yr)
        total = RF_ZERO
        for xi, xpart in _split_weights(xr).items():
            ypart = yparts.get(xi)
            if ypart is not None:
                total = total + self._pair_terms(list(xpart.terms.items()), ypart)
        return total

    def _pair_terms(self, items, y: FreeElem) -> RatFunc:
        if not items or y.is_zero():
            return RF_ZERO
        if items[0][0] == ():
            c = y.terms.get((), RF_ZERO)
            s = RF_ZERO
            for _, coeff in items:
                s = s + coeff * c
            return s
        groups = {}
        for w, c in items:
            groups.setdefault(w[0], []).append((w[1:], c))
        total = RF_ZERO
        for j, sub in groups.items():
            ejy = derivation(y, j, "e")
            if not ejy.is_zero():
                total = total + self._pair_terms(sub, ejy)
        return total

    def form_pair_second(self, x, y) -> RatFunc:
        """{x, y} = bar((bar x, bar y)): the bar-twisted companion form."""
        xr = x.rep if isinstance(x, UMinusElem) else x
        yr = y.rep if isinstance(y, UMinusElem) else y
        return self.form_pair(bar_free(xr), bar_free(yr)).bar()

    def is_zero(self, x) -> bool:
        """x = 0 in U^-: x pairs to zero against every monomial of its weight."""
        xr = x.rep if isinstance(x, UMinusElem) else x
        data = self.pbw_data()
        for xi, part in _split_weights(xr).items():
            ws = self.weight_space(data, xi)
            for mono in ws.unnorm:
                if not self._pair_terms(list(mono.terms.items()), part).is_zero():
                    return False
        return True

    # ------------------------------------------------------------------
    # PBW bases
    # ------------------------------------------------------------------

    def pbw_data(self, word=None) -> PBWBasisData:
        word = tuple(word) if word is not None else staircase_word(self.m)
        data = self._pbw.get(word)
        if data is not None:
            return data
        order = tuple(convex_order(self.X, word))
        pars = tuple(self.X.root_parity(r) for r in order)
        hts = tuple(self.X.root_height(r) for r in order)
        data = PBWBasisData(word, order, pars, hts)
        self._pbw[word] = data
        self._build_root_vectors(data)
        return data

    def _build_root_vectors(self, data: PBWBasisData):
        X = self.X
        pos = data.positions()
        for root in sorted(data.order, key=lambda r: r[1] - r[0]):
            key = (data.word, root)
            if key in self._root_vec:
                continue
            a, b = root
            if a == b:
                self._root_vec[key] = FreeElem.generator(X, a)
                continue
            best = None
            for c in range(a, b):
                r1, r2 = (a, c), (c + 1, b)
                first, second = (r1, r2) if pos[r1] < pos[r2] else (r2, r1)
                if best is None or pos[first] > pos[best[0]]:
                    best = (first, second)
            br, bs = best
            fr = self._root_vec[(data.word, br)]
            fs = self._root_vec[(data.word, bs)]
            sign = (-1) ** (X.root_parity(br) * X.root_parity(bs))
            coef = RatFunc.q_power(-X.root_form(br, bs), sign)
            self._root_vec[key] = fs * fr - (fr * fs).scale(coef)

    def root_vector(self, data: PBWBasisData, root) -> FreeElem:
        """Costandard root vector for an interval root (single power)."""
        a, b = root
        if not (1 <= a <= b <= self.m):
            raise ValueError("not a positive root")
        return self._root_vec[(data.word, root)]

    def monomial_exponents(self, data: PBWBasisData, xi):
        """All PBW exponent tuples of weight xi (odd roots capped at 1)."""
        m = self.m
        xi = tuple(xi)
        N = len(data.order)
        out = []
        alpha = [self.X.root_alpha_coords(r) for r in data.order]

        def rec(t, remaining, acc):
            if t == N:
                if all(c == 0 for c in remaining):
                    out.append(tuple(acc))
                return
            a = alpha[t]
            cap = 1 if data.parities[t] == 1 else min(
                (remaining[k] // a[k] for k in range(m) if a[k]), default=0)
            # feasibility prune: remaining height must be reachable
            for e in range(0, cap + 1):
                nxt = tuple(remaining[k] - e * a[k] for k in range(m))
                if all(c >= 0 for c in nxt):
                    acc.append(e)
                    rec(t + 1, nxt, acc)
                    acc.pop()

        rec(0, xi, [])
        return sorted(out)

    def monomial_unnorm(self, data: PBWBasisData, expts) -> FreeElem:
        """prod F_beta^{a_beta} without divided-power normalization."""
        out = FreeElem.unit(self.X)
        for t, e in enumerate(expts):
            if e:
                fv = self.root_vector(data, data.order[t])
                for _ in range(e):
                    out = out * fv
        return out

    def monomial_factorial(self, expts) -> RatFunc:
        f = RF_ONE
        for e in expts:
            if e > 1:
                f = f * rf_q_factorial(e)
        return f

    def monomial_free(self, data: PBWBasisData, expts) -> FreeElem:
        """Divided-power PBW monomial prod F_beta^{(a_beta)}."""
        return self.monomial_unnorm(data, expts).scale(self.monomial_factorial(expts).inverse())

    def pbw_monomials(self, data: PBWBasisData, xi):
        """The PBW basis of the weight space, as (exponent tuple, element) pairs."""
        ws = self.weight_space(data, xi)
        return [(e, UMinusElem(self, self.monomial_free(data, e))) for e in ws.expts]

    def weight_space(self, data: PBWBasisData, xi) -> "_WeightSpace":
        key = (data.word, tuple(xi))
        ws = self._ws.get(key)
        if ws is None:
            ws = self._ws[key] = _WeightSpace(self, data, tuple(xi))
        return ws

    def dim_weight(self, xi, data=None) -> int:
        data = data or self.pbw_data()
        return len(self.weight_space(data, xi).expts)

    def expand_in_pbw(self, x, data: PBWBasisData = None):
        """Coefficients of a homogeneous element over the PBW basis."""
        xr = x.rep if isinstance(x, UMinusElem) else x
        data = data or self.pbw_data()
        if xr.is_zero():
            raise ValueError("expand needs a nonzero homogeneous element")
        return self.weight_space(data, xr.weight()).expand(xr)

    def from_coords(self, data: PBWBasisData, xi, coords) -> FreeElem:
        ws = self.weight_space(data, xi)
        out = FreeElem.zero(self.X)
        for c, e in zip(coords, ws.expts):
            if not c.is_zero():
                out = out + self.monomial_free(data, e).scale(c)
        return out

    def gram_matrix(self, data: PBWBasisData, xi):
        """Gram matrix of the divided-power PBW monomials at weight xi."""
        ws = self.weight_space(data, xi)
        d = len(ws.expts)
        out = [[RF_ZERO] * d for _ in range(d)]
        for i in range(d):
            fi = ws.facts[i]
            for j in range(i, d):
                v = ws.gram_un[i][j] / (fi * ws.facts[j])
                out[i][j] = v
                out[j][i] = v
        return out

    # ------------------------------------------------------------------
    # derivation matrices on weight spaces
    # ------------------------------------------------------------------

    def derivation_matrix(self, data: PBWBasisData, xi, i, variant="e"):
        """Matrix of e_i (or a variant) from weight xi to xi - alpha_i.

        Columns index the PBW basis at xi, rows the PBW basis at xi - alpha_i."""
        xi = tuple(xi)
        key = (data.word, xi, i, variant)
        M = self._emat.get(key)
        if M is not None:
            return M
        if xi[i - 1] == 0:
            self._emat[key] = M = []
            return M
        tgt_xi = tuple(c - (1 if k == i - 1 else 0) for k, c in enumerate(xi))
        src = self.weight_space(data, xi)
        tgt = self.weight_space(data, tgt_xi)
        cols = []
        for e in src.expts:
            img = derivation(self.monomial_free(data, e), i, variant)
            cols.append(tgt.expand(img) if not img.is_zero() else [RF_ZERO] * len(tgt.expts))
        M = [[cols[c][r] for c in range(len(src.expts))] for r in range(len(tgt.expts))]
        self._emat[key] = M
        return M

    # ------------------------------------------------------------------
    # canonical basis (standard realization only)
    # ------------------------------------------------------------------

    def canonical_basis(self, xi, data: PBWBasisData = None):
        """The canonical basis of the weight space: bar-invariant, q-unitriangular
        over the PBW basis, almost orthonormal.  Returns a list of _CBElem in
        PBW-exponent order."""
        if not self.X.is_standard():
            raise ValueError("canonical basis requires the standard realization")
        data = data or self.pbw_data()
        key = (data.word, tuple(xi))
        got = self._cb.get(key)
        if got is not None:
            return got
        ws = self.weight_space(data, tuple(xi))
        d = len(ws.expts)
        if d == 0:
            self._cb[key] = []
            return []
        # bar matrix over the PBW basis; entries must be Laurent
        R = []
        for e in ws.expts:
            img = bar_free(self.monomial_unnorm(data, e)).scale(
                self.monomial_factorial(e).inverse())
            R.append(ws.expand(img))
        Rm = [[R[j][i] for j in range(d)] for i in range(d)]  # Rm[i][j]: coeff of e_i in bar(F_{e_j})
        for i in range(d):
            if Rm[i][i] != RF_ONE:
                raise ValueError("bar matrix diagonal is not 1; basis inconsistency")
            for j in range(d):
                if not Rm[i][j].is_laurent():
                    raise ValueError("bar matrix entry outside Z[q, q^-1]")
        order = _topo_order(Rm)
        # solve for bar-invariant, q-unitriangular columns
        cb = []
        for t, j in enumerate(order):
            p = {}
            for s in range(t - 1, -1, -1):
                i = order[s]
                z = Rm[i][j]
                for k, pk in p.items():
                    if not Rm[i][k].is_zero():
                        z = z + pk.bar() * Rm[i][k]
                if z.is_zero():
                    continue
                p[i] = _solve_bar_fixpoint(z)
            coords = [RF_ZERO] * d
            coords[j] = RF_ONE
            for i, pi in p.items():
                coords[i] = pi
            cb.append(_CBElem(self, data, tuple(xi), j, coords, t))
        cb.sort(key=lambda b: ws.expts[b.leading])
        self._cb[key] = cb
        return cb

    def canonical_residues(self, x, data: PBWBasisData = None):
        """Expand x over the canonical basis; returns (coeff list, cb list)."""
        xr = x.rep if isinstance(x, UMinusElem) else x
        data = data or self.pbw_data()
        xi = xr.weight()
        cb = self.canonical_basis(xi, data)
        ws = self.weight_space(data, xi)
        coords = ws.expand(xr)
        # the cb coordinate matrix is unitriangular w.r.t. construction order:
        # eliminate latest-built elements first
        out = [RF_ZERO] * len(cb)
        rem = list(coords)
        for t in sorted(range(len(cb)), key=lambda s: -cb[s].topo_rank):
            b = cb[t]
            c = rem[b.leading]
            out[t] = c
            if not c.is_zero():
                for k in range(len(rem)):
                    if not b.coords[k].is_zero():
                        rem[k] = rem[k] - c * b.coords[k]
        if any(not r.is_zero() for r in rem):
            raise ValueError("canonical expansion failed (inconsistent basis)")
        return out, cb

    # ------------------------------------------------------------------
    # lattice membership
    # ------------------------------------------------------------------

    def in_linf(self, x) -> bool:
        """x in L(infinity) iff (x, x) has no pole at q = 0."""
        xr = x.rep if isinstance(x, UMinusElem) else x
        if xr.is_zero():
            return True
        v = self.form_pair(xr, xr)
        return v.is_zero() or v.shift >= 0

    def binf_residue(self, x, data: PBWBasisData = None):
        """Mod-q residues of the canonical-basis expansion (requires A-coeffs)."""
        coeffs, cb = self.canonical_residues(x, data)
        out = []
        for c in coeffs:
            if not c.is_zero() and c.shift < 0:
                raise ValueError("element outside the crystal lattice")
            out.append(c.residue_at_0())
        return out, cb

    def tau(self, x):
        if isinstance(x, UMinusElem):
            return UMinusElem(self, tau_free(x.rep))
        return tau_free(x)

    def bar(self, x):
        if isinstance(x, UMinusElem):
            return UMinusElem(self, bar_free(x.rep))
        return bar_free(x)


class _WeightSpace:
    """PBW monomials of one weight, their Gram data, and an expansion solver."""

    def __init__(self, algebra: HalfAlgebra, data: PBWBasisData, xi):
        self.algebra = algebra
        self.data = data
        self.xi = xi
        self.expts = algebra.monomial_exponents(data, xi)
        self.unnorm = [algebra.monomial_unnorm(data, e) for e in self.expts]
        self.facts = [algebra.monomial_factorial(e) for e in self.expts]
        d = len(self.expts)
        G = [[RF_ZERO] * d for _ in range(d)]
        for i in range(d):
            for j in range(i, d):
                v = algebra._pair_terms(list(self.unnorm[i].terms.items()), self.unnorm[j])
                G[i][j] = v
                G[j][i] = v
        self.gram_un = G
        self._lu = LUSolver(G) if d else None

    def expand(self, x: FreeElem):
        """Coefficients over the divided-power PBW basis of this weight."""
        if x.is_zero():
            return [RF_ZERO] * len(self.expts)
        if tuple(x.weight()) != self.xi:
            raise ValueError("weight mismatch in expansion")
        if not self.expts:
            # dim 0: every representative of this weight is zero in U^-
            return []
        alg = self.algebra
        v = [alg._pair_terms(list(u.terms.items()), x) for u in self.unnorm]
        y = self._lu.solve(v)
        return [yi * fi for yi, fi in zip(y, self.facts)]


class _CBElem:
    """A canonical basis element, stored as PBW coordinates."""

    __slots__ = ("algebra", "data", "xi", "leading", "coords", "topo_rank")

    def __init__(self, algebra, data, xi, leading, coords, topo_rank):
        self.algebra = algebra
        self.data = data
        self.xi = xi
        self.leading = leading   # index into the weight space's exponent list
        self.coords = coords
        self.topo_rank = topo_rank

    def leading_exponents(self):
        return self.algebra.weight_space(self.data, self.xi).expts[self.leading]

    def free_elem(self) -> FreeElem:
        return self.algebra.from_coords(self.data, self.xi, self.coords)

    def elem(self) -> UMinusElem:
        return UMinusElem(self.algebra, self.free_elem())

    def __repr__(self):
        return "CB%s@%s" % (self.leading_exponents(), self.xi)


def _split_weights(x: FreeElem):
    parts = {}
    for w, c in x.terms.items():
        xi = x.word_weight(w)
        parts.setdefault(xi, {})[w] = c
    return {xi: FreeElem(x.realization, t) for xi, t in parts.items()}


def _topo_order(Rm):
    """Topological order of the off-diagonal support (i before j if Rm[i][j] != 0)."""
    d = len(Rm)
    succ = {i: set() for i in range(d)}
    indeg = [0] * d
    for i in range(d):
        for j in range(d):
            if i != j and not Rm[i][j].is_zero():
                if j not in succ[i]:
                    succ[i].add(j)
                    indeg[j] += 1
    ready = sorted(i for i in range(d) if indeg[i] == 0)
    out = []
    while ready:
        i = ready.pop(0)
        out.append(i)
        for j in sorted(succ[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
        ready.sort()
    if len(out) != d:
        raise ValueError("bar matrix support is cyclic; cannot triangularize")
    return out


def _solve_bar_fixpoint(z: RatFunc):
    """The unique p in qZ[q] with p - bar(p) = z (z must be bar-antisymmetric)."""
    if not z.is_laurent():
        raise ValueError("bar system entry outside Z[q, q^-1]")
    L = z.laurent()
    terms = L.terms
    for e, c in terms.items():
        if terms.get(-e, 0) != -c:
            raise ValueError("bar system entry is not antisymmetric")
    p = {e: c for e, c in terms.items() if e > 0}
    return RatFunc.from_laurent(LaurentPoly(p))
