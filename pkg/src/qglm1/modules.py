"""Highest-weight modules over U(X): Verma modules, Kac modules (quotients by
the even divided-power left ideal), and simple quotients by the radical of the
contravariant form.

Every weight space is presented as U^-_{-xi} modulo a computed subspace, in
PBW coordinates.  E_i acts through the quantum differentials,
E_i (x v) = (q^h ebar_i(x) - q^{-h} e_i(x)) / (q - q^{-1}) v with
h = (alpha_i, lambda - xi + alpha_i); F_i acts by left multiplication.  The
contravariant form peels F letters via (F_i x, y) = q^{1+<h_i, |y|>}(x, E_i y)
and is normalized by (v, v) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .crystal import CrystalGraph, CrystalNode, node_name
from .freealg import FreeElem, derivation
from .halfalg import HalfAlgebra
from .linalg import ALattice, kernel_basis, rank, rref, LUSolver
from .rootdata import Realization, Weight, weight_form, dominance_predicates, odd_first_word
from .scalars import RatFunc, RF_ZERO, RF_ONE, rf_q_factorial, LaurentPoly


def _xi_add(xi, i, n=1):
    return tuple(c + (n if k == i - 1 else 0) for k, c in enumerate(xi))


def _xi_sub(xi, i, n=1):
    return tuple(c - (n if k == i - 1 else 0) for k, c in enumerate(xi))


@dataclass
class ModuleElem:
    handle: "ModuleHandle"
    xi: tuple          # depth below the highest weight, alpha-coordinates
    coords: tuple

    def weight(self) -> Weight:
        return self.handle.lam - self.handle.X.weight_of_alpha(self.xi)

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def __add__(self, other):
        assert self.handle is other.handle and self.xi == other.xi
        return ModuleElem(self.handle, self.xi,
                          tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        assert self.handle is other.handle and self.xi == other.xi
        return ModuleElem(self.handle, self.xi,
                          tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, c):
        return ModuleElem(self.handle, self.xi, tuple(a * c for a in self.coords))


class ModuleHandle:
    """A presented highest-weight module with per-weight caches."""

    def __init__(self, X: Realization, lam: Weight, kind: str, base=None):
        if lam.m != X.m:
            raise ValueError("rank mismatch")
        if kind not in ("verma", "kac", "simple"):
            raise ValueError("unknown module kind")
        self.X = X
        self.m = X.m
        self.lam = lam
        self.kind = kind
        self.half = HalfAlgebra.get(X)
        self.data = self.half.pbw_data()
        if kind == "kac":
            if not X.is_standard():
                raise ValueError("Kac modules are defined for the standard datum")
            if not dominance_predicates(lam)["dominant"]:
                raise ValueError("Kac module needs a dominant highest weight")
        if kind == "simple":
            self.base = base if base is not None else self._default_base()
        else:
            self.base = None
        self._spaces = {}
        self._E = {}
        self._F = {}
        self._gram = {}
        self._string = {}

    def _default_base(self):
        if self.X.is_standard() and dominance_predicates(self.lam)["dominant"]:
            return ModuleHandle(self.X, self.lam, "kac")
        return ModuleHandle(self.X, self.lam, "verma")

    # -- pairing helpers

    def h_pairing(self, i, mu: Weight) -> int:
        """<h_i, mu> = (alpha_i, mu) for the realization's coroots."""
        return weight_form(self.X.simple_root(i), mu)

    def module_weight(self, xi) -> Weight:
        return self.lam - self.X.weight_of_alpha(tuple(xi))

    # -- weight spaces

    def space(self, xi) -> "_Space":
        xi = tuple(xi)
        sp = self._spaces.get(xi)
        if sp is None:
            sp = self._spaces[xi] = self._build_space(xi)
        return sp

    def dim(self, xi) -> int:
        return len(self.space(tuple(xi)).basis)

    def _ambient_dim(self, xi):
        return self.half.dim_weight(xi, self.data)

    def _build_space(self, xi) -> "_Space":
        h = self.half
        amb = h.weight_space(self.data, xi)
        d = len(amb.expts)
        sub = []
        if self.kind == "kac":
            sub.extend(self._kac_ideal_rows(xi))
        elif self.kind == "simple":
            base = self.base
            bsp = base.space(xi)
            # radical of the base contravariant form, lifted to U^- coordinates
            G = base.gram(xi)
            for kvec in kernel_basis(G):
                lift = [RF_ZERO] * d
                for c, bidx in zip(kvec, bsp.basis):
                    if not c.is_zero():
                        vec = bsp.lift_row(bidx)
                        for t in range(d):
                            lift[t] = lift[t] + c * vec[t]
                sub.append(lift)
            sub.extend(base_row[:] for base_row in bsp.sub_rows)
        return _Space(self, xi, d, sub)

    def _kac_ideal_rows(self, xi):
        """Rows spanning sum_i U^-_{xi - (n_i+1) alpha_i} F_i^{n_i+1} at weight xi."""
        h = self.half
        rows = []
        for i in range(1, self.m):
            n1 = self.h_pairing(i, self.lam) + 1
            if xi[i - 1] < n1:
                continue
            upper = _xi_sub(xi, i, n1)
            fe_pow = FreeElem.word(self.X, (i,) * n1)
            uws = h.weight_space(self.data, upper)
            for e in uws.expts:
                prod = h.monomial_free(self.data, e) * fe_pow
                rows.append(h.weight_space(self.data, xi).expand(prod))
        return rows

    # -- actions

    def highest_vector(self) -> ModuleElem:
        z = (0,) * self.m
        return ModuleElem(self, z, (RF_ONE,))

    def act_F(self, i, v: ModuleElem) -> ModuleElem:
        M = self.F_matrix(i, v.xi)
        tgt = _xi_add(v.xi, i)
        return ModuleElem(self, tgt, tuple(_matvec(M, v.coords)))

    def act_E(self, i, v: ModuleElem) -> ModuleElem:
        M = self.E_matrix(i, v.xi)
        tgt = _xi_sub(v.xi, i)
        return ModuleElem(self, tgt, tuple(_matvec(M, v.coords)))

    def act_K(self, i, v: ModuleElem, power=1) -> ModuleElem:
        sc = RatFunc.q_power(power * self.h_pairing(i, self.module_weight(v.xi)))
        return v.scale(sc)

    def act(self, gen, v: ModuleElem) -> ModuleElem:
        kind, i = gen
        if kind == "F":
            return self.act_F(i, v)
        if kind == "E":
            return self.act_E(i, v)
        if kind == "K":
            return self.act_K(i, v)
        raise ValueError("unknown generator %r" % (gen,))

    def F_matrix(self, i, xi):
        xi = tuple(xi)
        key = (i, xi)
        M = self._F.get(key)
        if M is not None:
            return M
        src = self.space(xi)
        tgt_xi = _xi_add(xi, i)
        tgt = self.space(tgt_xi)
        fgen = FreeElem.generator(self.X, i)
        cols = []
        for b in src.basis:
            rep = src.lift_free(b)
            img = self.half.weight_space(self.data, tgt_xi).expand(fgen * rep)
            cols.append(tgt.reduce(img))
        M = _cols_to_matrix(cols, len(tgt.basis))
        self._F[key] = M
        return M

    def E_matrix(self, i, xi):
        xi = tuple(xi)
        key = (i, xi)
        M = self._E.get(key)
        if M is not None:
            return M
        src = self.space(xi)
        if xi[i - 1] == 0:
            M = [[RF_ZERO] * len(src.basis) for _ in range(0)]
            self._E[key] = M
            return M
        tgt_xi = _xi_sub(xi, i)
        tgt = self.space(tgt_xi)
        hvec = self.h_pairing(i, self.module_weight(xi) + self.X.simple_root(i))
        inv_qq = RatFunc.from_laurent_pair(LaurentPoly({0: 1}), LaurentPoly({1: 1, -1: -1}))
        cols = []
        for b in src.basis:
            rep = src.lift_free(b)
            img = (derivation(rep, i, "ebar").scale(RatFunc.q_power(hvec))
                   - derivation(rep, i, "e").scale(RatFunc.q_power(-hvec))).scale(inv_qq)
            vec = self.half.weight_space(self.data, tgt_xi).expand(img)
            cols.append(tgt.reduce(vec))
        M = _cols_to_matrix(cols, len(tgt.basis))
        self._E[key] = M
        return M

    def e_diff_matrix(self, i, xi):
        """The quantum differential e_i on coset representatives (Kac flavor)."""
        xi = tuple(xi)
        src = self.space(xi)
        if xi[i - 1] == 0:
            return [[RF_ZERO] * len(src.basis) for _ in range(0)]
        tgt_xi = _xi_sub(xi, i)
        tgt = self.space(tgt_xi)
        cols = []
        for b in src.basis:
            rep = src.lift_free(b)
            vec = self.half.weight_space(self.data, tgt_xi).expand(derivation(rep, i, "e"))
            cols.append(tgt.reduce(vec))
        return _cols_to_matrix(cols, len(tgt.basis))

    # -- contravariant form

    def gram(self, xi):
        """Gram matrix of the contravariant form on the weight space at depth xi."""
        xi = tuple(xi)
        G = self._gram.get(xi)
        if G is not None:
            return G
        sp = self.space(xi)
        n = len(sp.basis)
        G = [[RF_ZERO] * n for _ in range(n)]
        for a in range(n):
            rep = sp.lift_free(sp.basis[a])
            for b in range(a, n):
                unit = [RF_ZERO] * n
                unit[b] = RF_ONE
                v = self._form_chain(list(rep.terms.items()), xi, unit)
                G[a][b] = v
                G[b][a] = v
        self._gram[xi] = G
        return G

    def _form_chain(self, items, xi, vec):
        """sum_w c_w (F_w v_lam, vec) by peeling leftmost letters."""
        if all(c.is_zero() for c in vec) or not items:
            return RF_ZERO
        if items[0][0] == ():
            # depth zero: (v, v) = 1
            s = RF_ZERO
            for _, c in items:
                s = s + c * vec[0]
            return s
        groups = {}
        for w, c in items:
            groups.setdefault(w[0], []).append((w[1:], c))
        total = RF_ZERO
        for j, sub in groups.items():
            M = self.E_matrix(j, xi)
            nvec = _matvec(M, vec)
            if all(c.is_zero() for c in nvec):
                continue
            # eta(F_j) y = q E_j K_j y with K_j acting on the weight of y itself
            hv = self.h_pairing(j, self.module_weight(xi))
            sc = RatFunc.q_power(1 + hv)
            inner = self._form_chain(sub, _xi_sub(xi, j), nvec)
            total = total + sc * inner
        return total

    def contravariant_form(self, u: ModuleElem, v: ModuleElem) -> RatFunc:
        if u.handle is not self or v.handle is not self:
            raise ValueError("handle mismatch")
        if u.xi != v.xi:
            return RF_ZERO
        G = self.gram(u.xi)
        out = RF_ZERO
        for a, ca in enumerate(u.coords):
            if ca.is_zero():
                continue
            for b, cb in enumerate(v.coords):
                if not cb.is_zero():
                    out = out + ca * cb * G[a][b]
        return out

    # -- enumeration, quotients, reports

    def weights_up_to(self, height):
        """All depths xi with nonzero weight space, height at most the bound."""
        out = [(0,) * self.m]
        frontier = {out[0]}
        for h in range(1, height + 1):
            nxt = set()
            for xi in frontier:
                for i in range(1, self.m + 1):
                    cand = _xi_add(xi, i)
                    if cand not in nxt and self.dim(cand) > 0:
                        nxt.add(cand)
            if not nxt:
                break
            out.extend(sorted(nxt))
            frontier = nxt
        return out

    def total_dim(self, cap=64):
        """Total dimension if the module dies out below the cap, else None."""
        total = 0
        frontier = {(0,) * self.m}
        h = 0
        while frontier and h <= cap:
            total += sum(self.dim(xi) for xi in frontier)
            nxt = set()
            for xi in frontier:
                for i in range(1, self.m + 1):
                    cand = _xi_add(xi, i)
                    if self.dim(cand) > 0:
                        nxt.add(cand)
            frontier = nxt
            h += 1
        return total if not frontier else None

    def simple_quotient(self) -> "ModuleHandle":
        if self.kind == "simple":
            return self
        return ModuleHandle(self.X, self.lam, "simple", base=self)

    def singular_vectors(self, xi):
        """Basis of the weight-xi vectors killed by every E_i."""
        xi = tuple(xi)
        sp = self.space(xi)
        if not sp.basis:
            return []
        stacked = []
        for i in range(1, self.m + 1):
            stacked.extend(self.E_matrix(i, xi))
        if not stacked:
            return [ModuleElem(self, xi, tuple(RF_ONE if t == a else RF_ZERO
                                               for t in range(len(sp.basis))))
                    for a in range(len(sp.basis))]
        return [ModuleElem(self, xi, tuple(v)) for v in kernel_basis(stacked)]

    def project_uminus(self, x, xi=None) -> ModuleElem:
        """Image of an element of U^- under x |-> x . v_lambda."""
        rep = x.rep if hasattr(x, "rep") else x
        if rep.is_zero():
            if xi is None:
                raise ValueError("need a weight for the zero element")
            return ModuleElem(self, tuple(xi),
                              (RF_ZERO,) * self.dim(tuple(xi)))
        xi = rep.weight()
        amb = self.half.weight_space(self.data, xi).expand(rep)
        return ModuleElem(self, xi, tuple(self.space(xi).reduce(amb)))


class _Space:
    """One weight space: U^-_{-xi} modulo the rows of `sub`, echelonized."""

    def __init__(self, handle, xi, ambient_dim, sub_rows):
        self.handle = handle
        self.xi = xi
        self.ambient_dim = ambient_dim
        R, pivots = rref(sub_rows) if sub_rows else ([], [])
        self.sub_rows = R
        self.pivots = pivots
        pivset = set(pivots)
        self.basis = [t for t in range(ambient_dim) if t not in pivset]

    def reduce(self, vec):
        """Coordinates of a U^- vector in the quotient basis."""
        v = list(vec)
        for r, p in zip(self.sub_rows, self.pivots):
            c = v[p]
            if not c.is_zero():
                for t in range(self.ambient_dim):
                    if not r[t].is_zero():
                        v[t] = v[t] - c * r[t]
        return [v[t] for t in self.basis]

    def lift_row(self, basis_index):
        """U^- coordinates of the coset representative (a PBW monomial)."""
        out = [RF_ZERO] * self.ambient_dim
        out[basis_index] = RF_ONE
        return out

    def lift_free(self, basis_index) -> FreeElem:
        h = self.handle.half
        ws = h.weight_space(self.handle.data, self.xi)
        return h.monomial_free(self.handle.data, ws.expts[basis_index])

    def lift_coords(self, coords) -> FreeElem:
        h = self.handle.half
        ws = h.weight_space(self.handle.data, self.xi)
        out = FreeElem.zero(self.handle.X)
        for c, b in zip(coords, self.basis):
            if not c.is_zero():
                out = out + h.monomial_free(self.handle.data, ws.expts[b]).scale(c)
        return out


def _matvec(M, v):
    out = []
    for row in M:
        s = RF_ZERO
        for a, x in zip(row, v):
            if not a.is_zero() and not x.is_zero():
                s = s + a * x
        out.append(s)
    return out


def _cols_to_matrix(cols, nrows):
    return [[col[r] for col in cols] for r in range(nrows)]


# ---------------------------------------------------------------------------
# canonical-basis projection
# ---------------------------------------------------------------------------

def project_canonical_basis(handle: ModuleHandle, height: int):
    """Images of the canonical basis, their dependencies, and the induced basis.

    Returns {"images", "dependencies", "induced_basis"}; dependencies are exact
    kernel vectors normalized so the first nonzero coefficient is 1; the induced
    basis keeps the images outside q times the A-span of all images."""
    if not handle.X.is_standard():
        raise ValueError("canonical projection requires the standard realization")
    h = handle.half
    images = []
    dependencies = []
    induced = []
    for xi in handle.weights_up_to(height):
        cb = h.canonical_basis(xi)
        if not cb:
            continue
        vecs = []
        for b in cb:
            img = handle.project_uminus(b.free_elem(), xi)
            vecs.append(img)
            images.append({"weight": xi, "label": b.leading_exponents(),
                           "image": img})
        # dependencies among the nonzero images (zero images are visible above)
        live = [(b, v) for b, v in zip(cb, vecs) if not v.is_zero()]
        dm = handle.dim(xi)
        if dm and live:
            cols = [list(v.coords) for _, v in live]
            A = [[cols[c][r] for c in range(len(cols))] for r in range(dm)]
            for kv in kernel_basis(A):
                lead = next(t for t, c in enumerate(kv) if not c.is_zero())
                scal = kv[lead].inverse()
                dependencies.append({
                    "weight": xi,
                    "coefficients": [c * scal for c in kv],
                    "labels": [b.leading_exponents() for b, _ in live],
                })
        nonzero = [v for v in vecs if not v.is_zero()]
        if nonzero:
            lat = ALattice([list(v.coords) for v in nonzero], dim=dm)
            for b, v in zip(cb, vecs):
                if not v.is_zero() and not lat.in_q_lattice(list(v.coords)):
                    induced.append({"weight": xi, "label": b.leading_exponents(),
                                    "image": v})
    return {"images": images, "dependencies": dependencies, "induced_basis": induced}


def uminus_lattice_image(handle: ModuleHandle, xi) -> ALattice:
    """The A-lattice pi(L(infinity)) at depth xi (span of canonical images)."""
    h = handle.half
    cb = h.canonical_basis(tuple(xi))
    vecs = [list(handle.project_uminus(b.free_elem(), xi).coords) for b in cb]
    return ALattice(vecs, dim=handle.dim(xi))


# ---------------------------------------------------------------------------
# module crystals
# ---------------------------------------------------------------------------

class ModuleCrystal:
    """Kashiwara operators on a module, BKK flavor or Kac flavor."""

    def __init__(self, handle: ModuleHandle, flavor: str, height: int,
                 rescale=None):
        if flavor not in ("bkk", "kac"):
            raise ValueError("flavor must be 'bkk' or 'kac'")
        if flavor == "kac" and handle.kind != "kac":
            raise ValueError("kac-flavor crystal needs a Kac module")
        self.handle = handle
        self.flavor = flavor
        self.height = height
        self.m = handle.m
        self.rescale = dict(rescale or {})
        self._string = {}
        if flavor == "bkk":
            self._check_oint_conditions()

    def _check_oint_conditions(self):
        hd = self.handle
        m = self.m
        for xi in hd.weights_up_to(self.height):
            mu = hd.module_weight(xi)
            hm = hd.h_pairing(m, mu)
            if hm < 0:
                raise ValueError(
                    "module violates the integrability weight condition: "
                    "<h_m, mu> = %d < 0 at depth %s" % (hm, (xi,)))
            if hm == 0 and hd.dim(xi):
                for Mat in (hd.E_matrix(m, xi), hd.F_matrix(m, xi)):
                    if any(not c.is_zero() for row in Mat for c in row):
                        raise ValueError(
                            "module violates the boundary vanishing condition "
                            "at depth %s" % (xi,))

    # string decomposition for even i on the module

    def _string_solver(self, xi, i):
        key = (tuple(xi), i)
        got = self._string.get(key)
        if got is not None:
            return got
        hd = self.handle
        d = hd.dim(xi)
        cols = []
        layout = []
        n = 0
        zeta = tuple(xi)
        while True:
            dz = hd.dim(zeta)
            if dz:
                E = hd.E_matrix(i, zeta)
                kb = (kernel_basis(E) if len(E) else
                      [[RF_ONE if a == b else RF_ZERO for a in range(dz)] for b in range(dz)])
                # strings can die in a quotient module: keep only kernel vectors
                # whose divided-power push F_i^{(n)} survives down to weight xi
                alive = []
                for v in kb:
                    vec = list(v)
                    cur = zeta
                    for _ in range(n):
                        vec = _matvec(hd.F_matrix(i, cur), vec)
                        cur = _xi_add(cur, i)
                    if any(not c.is_zero() for c in vec):
                        alive.append(v)
                        fct = rf_q_factorial(n).inverse()
                        cols.append([c * fct for c in vec])
                if alive:
                    layout.append((n, zeta, alive))
            if zeta[i - 1] == 0:
                break
            zeta = _xi_sub(zeta, i)
            n += 1
        if sum(len(kb) for _, _, kb in layout) != d:
            raise ValueError("module string basis count mismatch")
        A = [[cols[c][r] for c in range(len(cols))] for r in range(d)]
        solver = LUSolver(A) if d else None
        self._string[key] = (solver, layout)
        return self._string[key]

    def _decompose(self, v: ModuleElem, i):
        solver, layout = self._string_solver(v.xi, i)
        sol = solver.solve(list(v.coords))
        parts = []
        pos = 0
        for n, zeta, kb in layout:
            vecs = []
            for kvec in kb:
                c = sol[pos]
                pos += 1
                if not c.is_zero():
                    vecs.append((c, kvec))
            if vecs:
                comp = [RF_ZERO] * self.handle.dim(zeta)
                for c, kvec in vecs:
                    for t, k in enumerate(kvec):
                        comp[t] = comp[t] + c * k
                parts.append((n, zeta, comp))
        return parts

    def f_op(self, v: ModuleElem, i) -> ModuleElem:
        hd = self.handle
        if i == self.m:
            return hd.act_F(self.m, v)
        parts = self._decompose(v, i)
        out = ModuleElem(hd, _xi_add(v.xi, i), (RF_ZERO,) * hd.dim(_xi_add(v.xi, i)))
        for n, zeta, comp in parts:
            vec = comp
            cur = zeta
            for _ in range(n + 1):
                vec = _matvec(hd.F_matrix(i, cur), vec)
                cur = _xi_add(cur, i)
            fct = rf_q_factorial(n + 1).inverse()
            out = out + ModuleElem(hd, cur, tuple(c * fct for c in vec))
        return out

    def e_op(self, v: ModuleElem, i) -> ModuleElem:
        hd = self.handle
        if i == self.m:
            if self.flavor == "kac":
                M = hd.e_diff_matrix(self.m, v.xi)
                out = ModuleElem(hd, _xi_sub(v.xi, self.m), tuple(_matvec(M, v.coords)))
            else:
                # q^{-1} K_m E_m
                w = hd.act_E(self.m, v)
                sc = RatFunc.q_power(hd.h_pairing(self.m, hd.module_weight(w.xi)) - 1)
                out = w.scale(sc)
            s = self.rescale.get(self.m)
            return out.scale(s) if s is not None else out
        parts = self._decompose(v, i)
        tgt = _xi_sub(v.xi, i)
        out = ModuleElem(hd, tgt, (RF_ZERO,) * hd.dim(tgt))
        for n, zeta, comp in parts:
            if n == 0:
                continue
            vec = comp
            cur = zeta
            for _ in range(n - 1):
                vec = _matvec(hd.F_matrix(i, cur), vec)
                cur = _xi_add(cur, i)
            fct = rf_q_factorial(n - 1).inverse()
            out = out + ModuleElem(hd, cur, tuple(c * fct for c in vec))
        return out


def module_crystal_lattice(handle: ModuleHandle, flavor: str, height: int,
                           rescale=None):
    """A-lattices per depth generated from v_lambda by the f~ operators.

    The f~_i are linear, so each level's lattice is generated by the images of
    a lattice basis one level up; weights are processed in height order."""
    ops = ModuleCrystal(handle, flavor, height, rescale=rescale)
    root = (0,) * handle.m
    lattices = {root: ALattice([list(handle.highest_vector().coords)], dim=1)}
    level = [root]
    for h in range(height):
        gens = {}
        for xi in level:
            lat = lattices[xi]
            for _, bvec in lat.basis:
                v = ModuleElem(handle, xi, tuple(bvec))
                for i in range(1, handle.m + 1):
                    img = ops.f_op(v, i)
                    if img.is_zero():
                        continue
                    gens.setdefault(img.xi, []).append(list(img.coords))
        if not gens:
            break
        for xi in sorted(gens):
            lattices[xi] = ALattice(gens[xi], dim=handle.dim(xi))
        level = sorted(gens)
    return ops, lattices


def module_crystal(handle: ModuleHandle, flavor: str, height: int,
                   rescale=None) -> CrystalGraph:
    """Crystal graph of the module: closure of v_lambda under the f~ operators,
    nodes identified mod q against the lattice generated by all images."""
    ops, lattices = module_crystal_lattice(handle, flavor, height, rescale=rescale)
    reps = {}     # (xi, residue) -> ModuleElem representative
    order = []
    root = handle.highest_vector()
    rz = ((0,) * handle.m, lattices[(0,) * handle.m].residue(list(root.coords)))
    reps[rz] = root
    order.append(rz)
    edges = []
    frontier = [rz]
    while frontier:
        nxt = []
        for node in frontier:
            xi, _ = node
            if sum(xi) >= height:
                continue
            v = reps[node]
            for i in range(1, handle.m + 1):
                img = ops.f_op(v, i)
                if img.is_zero():
                    continue
                lat = lattices[img.xi]
                res = lat.residue(list(img.coords))
                if all(r == 0 for r in res):
                    continue
                tgt = (img.xi, res)
                if tgt not in reps:
                    reps[tgt] = img
                    order.append(tgt)
                    nxt.append(tgt)
                edges.append((node, tgt, i))
        frontier = nxt
    # deterministic naming: per weight, sort nodes by residue vector
    by_weight = {}
    for xi, res in order:
        by_weight.setdefault(xi, []).append(res)
    names = {}
    graph = CrystalGraph(colors=handle.m)
    for xi in sorted(by_weight, key=lambda x: (sum(x), x)):
        for k, res in enumerate(sorted(by_weight[xi])):
            names[(xi, res)] = node_name(xi, k)
            graph.nodes.append(CrystalNode(xi, k, node_name(xi, k)))
    for s, t, c in edges:
        graph.edges.append((names[s], names[t], c))
    graph.edges.sort()
    return graph


# ---------------------------------------------------------------------------
# dimension oracle and the nonstandard rank-2 case
# ---------------------------------------------------------------------------

def gl_m_weyl_dim(lam_coords):
    """Weyl dimension formula for gl(m) with integral dominant coordinates."""
    m = len(lam_coords)
    num = 1
    den = 1
    for a in range(m):
        for b in range(a + 1, m):
            num *= lam_coords[a] - lam_coords[b] + b - a
            den *= b - a
    val = Fraction(num, den)
    assert val.denominator == 1
    return int(val)


def kac_dimension_oracle(lam: Weight) -> int:
    """2^m times the gl(m) Weyl dimension of the even part."""
    m = lam.m
    return (2 ** m) * gl_m_weyl_dim(lam.coords[:m])


def nonstandard_rank2_basis(lam: Weight, height: int = 12):
    """The section on the isotropic-isotropic rank-2 datum: basis of U^-(A),
    singular-vector classification, V(lambda) dimensions, and the induced basis.

    lam is given in eps-coordinates for m = 2; the realization is the one with
    both simple roots isotropic."""
    if lam.m != 2:
        raise ValueError("rank-2 analysis needs m = 2")
    X = Realization(2, (1, 3, 2))
    h = HalfAlgebra.get(X)
    lam1 = weight_form(X.simple_root(1), lam)
    lam2 = weight_form(X.simple_root(2), lam)
    verma = ModuleHandle(X, lam, "verma")
    simple = verma.simple_quotient()

    # the bar-invariant basis F_1^a (F_2F_1)^b F_2^c, emitted by height
    def basis_words(ht):
        out = []
        for b in range(0, ht // 2 + 1):
            for a in (0, 1):
                for c in (0, 1):
                    word = (1,) * a + (2, 1) * b + (2,) * c
                    if a + 2 * b + c <= ht and (a + 2 * b + c) >= 0:
                        out.append(word)
        return sorted(set(out), key=lambda w: (len(w), w))

    words = basis_words(height)

    # classification
    if lam1 == 0 and lam2 == 0:
        dim_v = 1
        infinite = False
    elif lam1 + lam2 > 0:
        dim_v = simple.total_dim(cap=2 * (lam1 + lam2) + 4)
        infinite = dim_v is None
    else:
        dim_v = None
        infinite = True

    # induced basis B(lambda) = {b v : b v not in q L(lambda)}, L = A-span of images
    induced = []
    per_weight = {}
    for w in words:
        xi = (w.count(1), w.count(2))
        per_weight.setdefault(xi, []).append(w)
    for xi, ws in sorted(per_weight.items()):
        if sum(xi) > height:
            continue
        imgs = []
        for w in ws:
            img = simple.project_uminus(FreeElem.word(X, w), xi)
            imgs.append((w, img))
        nonzero = [list(img.coords) for _, img in imgs if not img.is_zero()]
        if not nonzero:
            continue
        lat = ALattice(nonzero, dim=simple.dim(xi))
        for w, img in imgs:
            if not img.is_zero() and not lat.in_q_lattice(list(img.coords)):
                induced.append({"weight": xi, "word": w})

    return {
        "realization": X,
        "lam_pairings": (lam1, lam2),
        "basis_words": words,
        "dim_simple": dim_v,
        "infinite": infinite,
        "verma": verma,
        "simple": simple,
        "induced_basis": induced,
    }
