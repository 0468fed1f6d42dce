"""Acceptance suite: one test per criterion, each printing a pass/fail line.

All comparisons are exact symbolic equalities (tolerance zero); the stated
runtime budgets are asserted.  Run with `pytest -s tests/test_acceptance.py`
to see the per-criterion lines.
"""

import random
import time
from itertools import product

import pytest

from qglm1.crystal import CrystalOps, enumerate_crystal
from qglm1.freealg import FreeElem, bar_free
from qglm1.fullalg import verify_braid_suite, root_vector_via_braids
from qglm1.halfalg import HalfAlgebra
from qglm1.linalg import ALattice, LUSolver, kernel_basis, rank, rref
from qglm1.modules import (
    ModuleHandle, ModuleElem, module_crystal, module_crystal_lattice,
    project_canonical_basis, uminus_lattice_image, nonstandard_rank2_basis,
    kac_dimension_oracle,
)
from qglm1.rootdata import (
    Realization, Weight, eps, staircase_word, odd_first_word, convex_order,
    braid_path, dominance_predicates,
)
from qglm1.scalars import (
    RatFunc, RF_ONE, RF_ZERO, rf_q_int, rf_q_factorial, q_binomial, in_q_az,
    ring_membership, A_LOCAL, ZQ,
)

X2 = Realization.standard(2)
X3 = Realization.standard(3)
Q = RatFunc.q_power


class Criterion:
    def __init__(self, number, description, budget=None):
        self.number = number
        self.description = description
        self.budget = budget

    def __enter__(self):
        self.t0 = time.time()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.time() - self.t0
        status = "PASS" if exc_type is None else "FAIL"
        budget = "" if self.budget is None else " (budget %ds)" % self.budget
        print("ACCEPTANCE %2d: %s  [%.1fs%s]  %s"
              % (self.number, status, elapsed, budget, self.description))
        if exc_type is None and self.budget is not None:
            assert elapsed <= self.budget, "runtime budget exceeded: %.1fs" % elapsed
        return False


def weights_up_to(m, height):
    out = []

    def rec(prefix, left):
        if len(prefix) == m:
            out.append(tuple(prefix))
            return
        for c in range(left + 1):
            rec(prefix + [c], left - c)

    rec([], height)
    return sorted((xi for xi in out), key=lambda x: (sum(x), x))


def dp(X, i, n):
    return FreeElem.word(X, (i,) * n, rf_q_factorial(n).inverse())


def set_equal_in_uminus(h, computed, expected):
    """Multiset equality of U^- elements (both lists of FreeElems)."""
    if len(computed) != len(expected):
        return False
    used = [False] * len(expected)
    for c in computed:
        hit = False
        for t, e in enumerate(expected):
            if not used[t] and h.is_zero(c - e):
                used[t] = True
                hit = True
                break
        if not hit:
            return False
    return True


def test_criterion_1_gl21_canonical_basis():
    with Criterion(1, "gl(2|1) canonical basis equals the closed families, ht <= 10",
                   budget=30):
        h = HalfAlgebra.get(X2)
        for xi in weights_up_to(2, 10):
            i, j = xi
            expected = []
            if j == 0:
                expected = [dp(X2, 1, i)]
            elif j == 1:
                expected = [dp(X2, 1, i) * FreeElem.generator(X2, 2)]
                if i >= 1:
                    expected.append(FreeElem.generator(X2, 2) * dp(X2, 1, i))
            elif j == 2 and i >= 1:
                expected = [FreeElem.generator(X2, 2) * dp(X2, 1, i)
                            * FreeElem.generator(X2, 2)]
            computed = [b.free_elem() for b in h.canonical_basis(xi)]
            assert set_equal_in_uminus(h, computed, expected), xi


def gl31_closed_form(h, x, y, z, a, b, c):
    """The three-case closed form for the gl(3|1) canonical basis element."""
    X = h.X
    F3 = FreeElem.generator(X, 3)

    def f3p(n):
        return F3 if n else FreeElem.unit(X)

    if c >= a:
        return (f3p(x) * dp(X, 2, a + y) * dp(X, 1, b + c + z) * f3p(y)
                * dp(X, 2, b + z) * f3p(z))
    if y <= x:
        return (f3p(x) * dp(X, 2, y) * dp(X, 1, b + z) * f3p(y)
                * dp(X, 2, a + b + z) * f3p(z) * dp(X, 1, c))
    out = FreeElem.zero(X)
    for t in range(0, b + 1):
        coef = RatFunc.from_laurent(q_binomial(a - c - 1 + t, t))
        if t % 2:
            coef = -coef
        out = out + (dp(X, 2, a + 1 + t) * dp(X, 1, b + c + z) * F3
                     * dp(X, 2, b + z - t) * f3p(z)).scale(coef)
    return out


def test_criterion_2_gl31_canonical_basis():
    with Criterion(2, "gl(3|1) canonical basis equals the closed form, ht <= 8",
                   budget=300):
        h = HalfAlgebra.get(X3)
        rev = h.pbw_data(odd_first_word(3))
        checked = 0
        for xi in weights_up_to(3, 8):
            cb = h.canonical_basis(xi)
            if not cb:
                continue
            ws = h.weight_space(rev, xi)
            seen = set()
            for bel in cb:
                fe = bel.free_elem()
                coords = ws.expand(fe)
                hits = [(e, cc.residue_at_0()) for e, cc in zip(ws.expts, coords)
                        if not cc.is_zero() and cc.residue_at_0() != 0]
                assert len(hits) == 1 and hits[0][1] == 1, (xi, hits)
                # reverse-order exponents are (x, y, z, a, b, c)
                xq, yq, zq, aq, bq, cq = hits[0][0]
                assert (xq, yq, zq) <= (1, 1, 1)
                key = hits[0][0]
                assert key not in seen
                seen.add(key)
                expected = gl31_closed_form(h, xq, yq, zq, aq, bq, cq)
                assert h.is_zero(fe - expected), (xi, key)
                checked += 1
        assert checked >= 300


def test_criterion_3_almost_orthonormality():
    with Criterion(3, "almost-orthonormality of PBW and canonical bases, ht <= 6"):
        for X in (X2, X3):
            h = HalfAlgebra.get(X)
            for word in (staircase_word(X.m), odd_first_word(X.m)):
                data = h.pbw_data(word)
                for xi in weights_up_to(X.m, 6):
                    ws = h.weight_space(data, xi)
                    if not ws.expts:
                        continue
                    tmax = max(1, sum(xi))
                    G = h.gram_matrix(data, xi)
                    for aa in range(len(ws.expts)):
                        for bb in range(len(ws.expts)):
                            v = G[aa][bb] - (RF_ONE if aa == bb else RF_ZERO)
                            assert in_q_az(v, tmax), (word, xi, aa, bb)
            # canonical basis: (b, b') in delta + q A_Z
            for xi in weights_up_to(X.m, 6):
                cb = h.canonical_basis(xi)
                tmax = max(1, sum(xi))
                for s, a in enumerate(cb):
                    fa = a.free_elem()
                    for t, b in enumerate(cb):
                        v = h.form_pair(fa, b.free_elem())
                        if s == t:
                            v = v - RF_ONE
                        assert in_q_az(v, tmax), (X.m, xi, s, t)


def test_criterion_4_braid_suite():
    with Criterion(4, "braid suite for m in {2,3,4} plus negative control",
                   budget=300):
        for m in (2, 3, 4):
            report = verify_braid_suite(m)
            bad = [r for r in report if r["status"] != "pass"]
            assert not bad, (m, bad[:3])
        neg = verify_braid_suite(2, negative_control=True)
        assert any(r["status"] == "fail" for r in neg)


def test_criterion_5_two_route_pbw():
    with Criterion(5, "braid route equals costandard recursion for 4+ words, m = 3"):
        h = HalfAlgebra.get(X3)
        words = [staircase_word(3), odd_first_word(3),
                 (2, 1, 2, 3, 2, 1), (1, 2, 3, 1, 2, 1), (3, 2, 1, 2, 3, 2)]
        for word in words:
            data = h.pbw_data(word)
            order = convex_order(X3, word)
            for t, root in enumerate(order, start=1):
                via_braid = root_vector_via_braids(X3, word, t)
                via_costd = h.root_vector(data, root)
                assert h.is_zero(via_braid - via_costd), (word, t)


def test_criterion_6_span_equality_and_crystal_identification():
    with Criterion(6, "Z[q]-span equality with mod-q matching; PBW collapse, m = 3"):
        h = HalfAlgebra.get(X3)
        path = braid_path(staircase_word(3), odd_first_word(3))
        pairs = list(zip(path, path[1:])) + [(staircase_word(3), odd_first_word(3))]
        for w1, w2 in pairs:
            d1 = h.pbw_data(w1)
            d2 = h.pbw_data(w2)
            for xi in weights_up_to(3, 6):
                ws1 = h.weight_space(d1, xi)
                d = len(ws1.expts)
                if d == 0:
                    continue
                cols = []
                for e, mono in h.pbw_monomials(d2, xi):
                    cols.append(ws1.expand(mono.rep))
                C = [[cols[c][r] for c in range(d)] for r in range(d)]
                for row in C:
                    for v in row:
                        assert v.is_zero() or ring_membership(v, ZQ), (w1, w2, xi)
                # inverse has Z[q] entries as well
                lu = LUSolver(C)
                for k in range(d):
                    ek = [RF_ONE if t == k else RF_ZERO for t in range(d)]
                    for v in lu.solve(ek):
                        assert v.is_zero() or ring_membership(v, ZQ), (w1, w2, xi)
                # mod q: a permutation matrix
                res = [[v.residue_at_0() for v in row] for row in C]
                assert all(sorted(row) == [0] * (d - 1) + [1] for row in res)
                assert all(sorted(col) == [0] * (d - 1) + [1]
                           for col in zip(*res))
        # PBW collapse: every monomial of each word hits one cb residue
        for word in (staircase_word(3), odd_first_word(3)):
            data = h.pbw_data(word)
            for xi in weights_up_to(3, 6):
                for e, mono in h.pbw_monomials(data, xi):
                    res, cb = h.binf_residue(mono.rep)
                    assert sorted(res) == [0] * (len(cb) - 1) + [1], (word, xi, e)


def expected_gl21_figure():
    """The height-5 B(infinity) crystal of the paper's figure as a colored digraph."""
    nodes = {"e": (0, 0)}
    edges = []
    labels = {"e": ()}

    def add(name, wt):
        nodes[name] = wt

    # families: 1^h; 21^{h-1}; 1^{h-1}2; 21^{h-2}2
    for hgt in range(1, 6):
        add("1^%d" % hgt, (hgt, 0))
        add("21^%d" % (hgt - 1,), (hgt - 1, 1))
        if hgt >= 2:
            add("1^%d2" % (hgt - 1,), (hgt - 1, 1))
        if hgt >= 3:
            add("21^%d2" % (hgt - 2,), (hgt - 2, 2))
    # the two height-1 nodes coincide in the family naming: 21^0 is "2"
    edges.append(("e", "1^1", 1))
    edges.append(("e", "21^0", 2))
    # the r = 1 exception: f~_1 b_2 = b_12, not b_21
    edges.append(("21^0", "1^12", 1))
    for hgt in range(1, 5):
        edges.append(("1^%d" % hgt, "1^%d" % (hgt + 1), 1))
        edges.append(("1^%d" % hgt, "21^%d" % hgt, 2))
        if hgt >= 2:
            edges.append(("21^%d" % (hgt - 1), "21^%d" % hgt, 1))
            edges.append(("1^%d2" % (hgt - 1), "1^%d2" % hgt, 1))
            edges.append(("1^%d2" % (hgt - 1), "21^%d2" % (hgt - 1), 2))
        if hgt >= 3:
            edges.append(("21^%d2" % (hgt - 2), "21^%d2" % (hgt - 1), 1))
    # drop anything above height 5
    keep = {n for n, wt in nodes.items() if sum(wt) <= 5}
    edges = [(s, t, c) for s, t, c in edges if s in keep and t in keep]
    return {n: nodes[n] for n in keep}, edges


def colored_digraph_isomorphic(nodes1, edges1, nodes2, edges2):
    """Backtracking isomorphism respecting node weights and edge colors."""
    if len(nodes1) != len(nodes2) or len(edges1) != len(edges2):
        return False
    by_wt1 = {}
    for n, wt in nodes1.items():
        by_wt1.setdefault(wt, []).append(n)
    by_wt2 = {}
    for n, wt in nodes2.items():
        by_wt2.setdefault(wt, []).append(n)
    if set(by_wt1) != set(by_wt2):
        return False
    if any(len(by_wt1[w]) != len(by_wt2[w]) for w in by_wt1):
        return False
    eset2 = set(edges2)
    wts = sorted(by_wt1, key=lambda w: (sum(w), w))
    mapping = {}

    def consistent():
        for s, t, c in edges1:
            if s in mapping and t in mapping:
                if (mapping[s], mapping[t], c) not in eset2:
                    return False
        # reverse containment checked by edge count equality at the end
        return True

    def place(k):
        if k == len(wts):
            image = {(mapping[s], mapping[t], c) for s, t, c in edges1
                     if s in mapping and t in mapping}
            return image == eset2
        w = wts[k]
        from itertools import permutations
        for perm in permutations(by_wt2[w]):
            for a, b in zip(by_wt1[w], perm):
                mapping[a] = b
            if consistent() and place(k + 1):
                return True
            for a in by_wt1[w]:
                mapping.pop(a, None)
        return False

    return place(0)


def test_criterion_7_crystal_graph_and_action_table():
    with Criterion(7, "B(infinity) height-5 graph matches the figure; 5.1 table"):
        h = HalfAlgebra.get(X2)
        g = enumerate_crystal(h, 5)
        nodes1 = {n.label: tuple(n.weight) for n in g.nodes}
        edges1 = list(g.edges)
        nodes2, edges2 = expected_gl21_figure()
        assert colored_digraph_isomorphic(nodes1, edges1, nodes2, edges2)
        # the named action-table rows for 2 <= r <= 5
        ops = CrystalOps(h)
        for r in range(2, 6):
            b_1r12 = dp(X2, 1, r - 1) * FreeElem.generator(X2, 2)
            lhs = ops.e_op(b_1r12, 2)
            assert h.is_zero(lhs - dp(X2, 1, r - 1).scale(Q(r - 1)))
            b_21r1 = FreeElem.generator(X2, 2) * dp(X2, 1, r - 1)
            img = ops.f_op(b_21r1, 1)
            expect = (FreeElem.generator(X2, 2) * dp(X2, 1, r)
                      + (dp(X2, 1, r) * FreeElem.generator(X2, 2)).scale(Q(r - 1) - Q(r)))
            assert h.is_zero(img - expect)


def test_criterion_8_lattice_characterization():
    with Criterion(8, "L(infinity) membership via (x,x) matches A-coefficients, 200 samples"):
        rng = random.Random(2024)
        agree = 0
        inside = 0
        while agree < 200:
            m = rng.choice([2, 3])
            h = HalfAlgebra.get(Realization.standard(m))
            xi = tuple(rng.randint(0, 3) for _ in range(m))
            if not 0 < sum(xi) <= 6:
                continue
            data = h.pbw_data()
            monos = h.pbw_monomials(data, xi)
            if not monos:
                continue
            x = FreeElem.zero(h.X)
            for _, mono in monos:
                c = Q(rng.randint(-1, 2), rng.randint(-2, 2))
                x = x + mono.rep.scale(c)
            if x.is_zero():
                continue
            via_form = h.in_linf(x)
            coeffs, _ = h.canonical_residues(x)
            via_cb = all(c.is_zero() or ring_membership(c, A_LOCAL) for c in coeffs)
            assert via_form == via_cb
            agree += 1
            inside += 1 if via_form else 0
        # the sample must exercise both outcomes
        assert 0 < inside < 200


def test_criterion_9_module_dimensions_and_dependencies():
    with Criterion(9, "module dimensions, dependencies, singular vectors", budget=300):
        # dim V(n eps1 - (n+2) eps4) = 2n^2+8n+7; dim V(n eps1 - eps4) = 3n^2+8n+4
        for n in range(0, 4):
            lam = eps(3, 1).scale(n) - eps(3, 4).scale(n + 2)
            V = ModuleHandle(X3, lam, "kac").simple_quotient()
            assert V.total_dim() == 2 * n * n + 8 * n + 7, n
            mu = eps(3, 1).scale(n) - eps(3, 4)
            Vmu = ModuleHandle(X3, mu, "kac").simple_quotient()
            assert Vmu.total_dim() == 3 * n * n + 8 * n + 4, n
        # dim V(lambda_1) = 9, dim V(lambda_2) = 20
        lam1 = Weight(3, (1, 1, 0, -2))
        lam2 = Weight(3, (1, 1, 0, -3))
        assert ModuleHandle(X3, lam1, "kac").simple_quotient().total_dim() == 9
        assert ModuleHandle(X3, lam2, "kac").simple_quotient().total_dim() == 20

        # gl(2|1) dependency coefficients [n+1-r]/[n+1]
        for n in (1, 2, 3):
            lam = Weight(2, (n, 0, -(n + 1)))
            V = ModuleHandle(X2, lam, "kac").simple_quotient()
            for r in range(1, n + 1):
                xi = (r, 1)
                lhs = V.project_uminus(
                    FreeElem.generator(X2, 2) * dp(X2, 1, r), xi)
                rhs = V.project_uminus(
                    dp(X2, 1, r) * FreeElem.generator(X2, 2), xi)
                coef = rf_q_int(n + 1 - r) / rf_q_int(n + 1)
                assert lhs.coords == tuple(c * coef for c in rhs.coords), (n, r)

        # gl(3|1) dependencies for lambda = n eps1 - (n+2) eps4, 0 <= a <= b <= n-1
        F2, F3 = FreeElem.generator(X3, 2), FreeElem.generator(X3, 3)
        for n in (1, 2):
            lam = eps(3, 1).scale(n) - eps(3, 4).scale(n + 2)
            V = ModuleHandle(X3, lam, "kac").simple_quotient()
            for a in range(0, n):
                for b in range(a, n):
                    xi = (b + 1, a + 1, 1)
                    lhs = V.project_uminus(F3 * dp(X3, 2, a + 1) * dp(X3, 1, b + 1), xi)
                    t1 = V.project_uminus(dp(X3, 2, a + 1) * dp(X3, 1, b + 1) * F3, xi)
                    t2 = V.project_uminus(dp(X3, 2, a) * dp(X3, 1, b + 1) * F2 * F3, xi)
                    c1 = rf_q_int(n + 1 - a) / rf_q_int(n + 2)
                    c2 = rf_q_int(n - b) / rf_q_int(n + 2)
                    expect = tuple(x * c1 - y * c2 for x, y in zip(t1.coords, t2.coords))
                    assert lhs.coords == expect, (n, a, b)

        # singular vectors of section 5.2
        K1 = ModuleHandle(X3, lam1, "kac")
        sing = K1.singular_vectors((0, 1, 1))
        assert len(sing) == 1
        target = K1.project_uminus(
            FreeElem.word(X3, (2, 3)) - FreeElem.word(X3, (3, 2)).scale(rf_q_int(2)),
            (0, 1, 1))
        assert _proportional(sing[0].coords, target.coords)
        K2 = ModuleHandle(X3, lam2, "kac")
        sing = K2.singular_vectors((1, 2, 2))
        assert len(sing) == 1
        singular_expected = (
            FreeElem.word(X3, (2, 1, 3, 2, 3))
            - (FreeElem.word(X3, (1, 3)) * dp(X3, 2, 2) * F3).scale(rf_q_int(2))
            + FreeElem.word(X3, (3, 2, 1, 3, 2)).scale(rf_q_int(3)))
        target = K2.project_uminus(singular_expected, (1, 2, 2))
        assert _proportional(sing[0].coords, target.coords)
        # section 5.3 singular classification is covered by criterion 11


def _proportional(u, v):
    nz = [t for t, c in enumerate(u) if not c.is_zero()]
    if not nz:
        return all(c.is_zero() for c in v)
    ratio = v[nz[0]] / u[nz[0]]
    return all((v[t] - ratio * u[t]).is_zero() for t in range(len(u)))


def test_criterion_10_globalization_compatibility():
    with Criterion(10, "canonical images independent and spanning; Kac lattice image"):
        typical = [Weight(2, (2, 1, 3)), Weight(2, (1, 0, 1)), Weight(2, (3, 1, 2)),
                   Weight(3, (1, 0, 0, 1)), Weight(3, (2, 1, 0, 2))]
        atypical_full = [Weight(2, (2, 1, -1)), Weight(2, (1, 1, -1)),
                         Weight(2, (3, 2, -2)), Weight(3, (1, 1, 0, 0)),
                         Weight(3, (2, 1, 1, -1))]
        for lam in typical:
            flags = dominance_predicates(lam)
            assert flags["fully_dominant"] and flags["typical"]
        for lam in atypical_full:
            flags = dominance_predicates(lam)
            assert flags["fully_dominant"] and not flags["typical"]
        for lam in typical + atypical_full:
            X = Realization.standard(lam.m)
            V = ModuleHandle(X, lam, "kac").simple_quotient()
            for xi in V.weights_up_to(6):
                cb = V.half.canonical_basis(xi)
                vecs = [V.project_uminus(b.free_elem(), xi) for b in cb]
                live = [list(v.coords) for v in vecs if not v.is_zero()]
                dm = V.dim(xi)
                if live:
                    A = [[live[c][r] for c in range(len(live))] for r in range(dm)]
                    assert rank(A) == len(live) == dm, (lam.coords, xi)
                else:
                    assert dm == 0
            # pi^K(L(infinity)) = L^K(lambda) per weight
            K = ModuleHandle(X, lam, "kac")
            ops, lattices = module_crystal_lattice(K, "kac", height=6)
            for xi, lat in lattices.items():
                assert uminus_lattice_image(K, xi).same_lattice(lat), (lam.coords, xi)


def test_criterion_11_nonstandard_rank2():
    with Criterion(11, "nonstandard rank 2: singular classification, dims, coincidence"):
        A1 = Realization(2, (1, 3, 2))
        # classification and dimension table over a grid, with an independent
        # dimension oracle: dim V = dim M - dim (submodule generated by singulars)
        grid = [(0, 0), (1, 1), (2, 1), (1, 2), (2, 2), (1, 0), (0, 2),
                (3, -1), (-1, 2), (-2, 1), (2, -2)]
        for l1, l2 in grid:
            lam = Weight(2, (l1, -l2, 0))
            rep = nonstandard_rank2_basis(lam, height=10)
            assert rep["lam_pairings"] == (l1, l2)
            M = rep["verma"]
            # singular-vector classification
            s10 = M.singular_vectors((1, 0))
            s01 = M.singular_vectors((0, 1))
            assert (len(s10) == 1) == (l1 == 0), (l1, l2)
            assert (len(s01) == 1) == (l2 == 0), (l1, l2)
            if l1 + l2 > 0:
                y = l1 + l2
                sing = M.singular_vectors((y, y))
                assert len(sing) == 1
                target = M.project_uminus(
                    FreeElem.word(A1, (1, 2) * y, rf_q_int(l1))
                    - FreeElem.word(A1, (2, 1) * y, rf_q_int(l2)), (y, y))
                assert _proportional(sing[0].coords, target.coords)
            for xi in M.weights_up_to(6):
                if xi == (0, 0):
                    continue
                expected = ((xi == (1, 0) and l1 == 0) or (xi == (0, 1) and l2 == 0)
                            or (l1 + l2 > 0 and xi == (l1 + l2, l1 + l2)))
                assert bool(M.singular_vectors(xi)) == expected, (l1, l2, xi)
            # dimension classification: dim 1 / infinite / finite with
            # dim 4s for l1, l2 both nonzero and 2s+1 at the boundary (s = l1+l2)
            if l1 == 0 and l2 == 0:
                assert rep["dim_simple"] == 1 and not rep["infinite"]
            elif l1 + l2 <= 0:
                assert rep["infinite"]
            else:
                assert not rep["infinite"]
                s = l1 + l2
                expected = 4 * s if (l1 and l2) else 2 * s + 1
                assert rep["dim_simple"] == expected, (l1, l2, rep["dim_simple"])
                V = rep["simple"]
                if l1 and l2:
                    # generically the maximal submodule is generated by the
                    # singular vectors; cross-check by the independent closure
                    ht = 2 * s + 2
                    oracle = _verma_minus_singular_submodule(M, ht)
                    assert rep["dim_simple"] == oracle, (l1, l2, oracle)
                # simplicity: no singular vectors below the top in the quotient
                for xi in V.weights_up_to(2 * s + 2):
                    if xi != (0, 0) and V.dim(xi):
                        assert not V.singular_vectors(xi), (l1, l2, xi)
        # the coincidence for lam(1) = lam(2) > 0
        for s0 in (1, 2):
            lam = Weight(2, (s0, -s0, 0))
            rep = nonstandard_rank2_basis(lam, height=4 * s0 + 2)
            V = rep["simple"]
            y = 2 * s0
            a = V.project_uminus(FreeElem.word(A1, (1, 2) * y), (y, y))
            b = V.project_uminus(FreeElem.word(A1, (2, 1) * y), (y, y))
            assert not a.is_zero() and a.coords == b.coords


def _verma_minus_singular_submodule(M, height):
    """Independent oracle: total dim of M minus the submodule its singular
    vectors generate, by level-by-level closure."""
    spans = {}
    for xi in M.weights_up_to(height):
        if xi == (0, 0):
            continue
        sv = M.singular_vectors(xi)
        if sv:
            spans[xi] = [list(v.coords) for v in sv]
    frontier = {xi: [list(r) for r in rows] for xi, rows in spans.items()}
    while frontier:
        nxt = {}
        for xi, vecs in frontier.items():
            for i in (1, 2):
                tgt = tuple(c + (1 if k == i - 1 else 0) for k, c in enumerate(xi))
                if sum(tgt) > height:
                    continue
                Fm = M.F_matrix(i, xi)
                for v in vecs:
                    img = [sum((a * b for a, b in zip(row, v)
                                if not (a.is_zero() or b.is_zero())), RF_ZERO)
                           for row in Fm]
                    if any(not c.is_zero() for c in img):
                        nxt.setdefault(tgt, []).append(img)
        frontier = {}
        for xi, vecs in nxt.items():
            old = spans.get(xi, [])
            r_old = rank(old) if old else 0
            merged = old + vecs
            if rank(merged) > r_old:
                spans[xi] = merged
                frontier[xi] = vecs
    mdim = sum(M.dim(xi) for xi in M.weights_up_to(height))
    ndim = sum(rank(rows) for rows in spans.values())
    return mdim - ndim
