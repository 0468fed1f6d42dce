"""Exact dense linear algebra over Q(q) (RatFunc entries), plus lattice
reduction over the discrete valuation ring A of rational functions with no
pole at q = 0.

Matrices are lists of lists of RatFunc.  Sizes here are small (weight-space
dimensions), so plain fraction Gaussian elimination with a cheapest-pivot
heuristic is used throughout.
"""

from __future__ import annotations

from .scalars import RatFunc, RF_ZERO, RF_ONE


def _cost(f: RatFunc) -> int:
    return len(f.num) + len(f.den)


def mat_vec(A, v):
    out = []
    for row in A:
        s = RF_ZERO
        for a, x in zip(row, v):
            if not a.is_zero() and not x.is_zero():
                s = s + a * x
        out.append(s)
    return out


def mat_mul(A, B):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    out = [[RF_ZERO] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for t in range(k):
            a = Ai[t]
            if a.is_zero():
                continue
            Bt = B[t]
            row = out[i]
            for j in range(m):
                b = Bt[j]
                if not b.is_zero():
                    row[j] = row[j] + a * b
    return out


class LUSolver:
    """LU-style elimination of a square invertible matrix, reusable solves."""

    def __init__(self, A):
        n = len(A)
        self.n = n
        M = [row[:] for row in A]
        perm = list(range(n))
        ops = []  # (col, pivot_row_after_perm? ...) recorded eliminations
        for col in range(n):
            piv = None
            best = None
            for r in range(col, n):
                e = M[r][col]
                if not e.is_zero():
                    c = _cost(e)
                    if best is None or c < best:
                        best = c
                        piv = r
            if piv is None:
                raise ValueError("singular matrix")
            if piv != col:
                M[col], M[piv] = M[piv], M[col]
                perm[col], perm[piv] = perm[piv], perm[col]
            inv = M[col][col].inverse()
            col_ops = []
            for r in range(col + 1, n):
                e = M[r][col]
                if e.is_zero():
                    continue
                f = e * inv
                col_ops.append((r, f))
                Mr, Mc = M[r], M[col]
                Mr[col] = RF_ZERO
                for j in range(col + 1, n):
                    if not Mc[j].is_zero():
                        Mr[j] = Mr[j] - f * Mc[j]
            ops.append(col_ops)
        self.M = M
        self.perm = perm
        self.ops = ops

    def solve(self, b):
        n = self.n
        y = [b[p] for p in self.perm]
        for col in range(n):
            for r, f in self.ops[col]:
                if not y[col].is_zero():
                    y[r] = y[r] - f * y[col]
        x = [RF_ZERO] * n
        for i in range(n - 1, -1, -1):
            s = y[i]
            Mi = self.M[i]
            for j in range(i + 1, n):
                if not Mi[j].is_zero() and not x[j].is_zero():
                    s = s - Mi[j] * x[j]
            x[i] = s / Mi[i]
        return x


def rref(A):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    M = [row[:] for row in A]
    n = len(M)
    m = len(M[0]) if n else 0
    pivots = []
    r = 0
    for col in range(m):
        piv = None
        best = None
        for i in range(r, n):
            e = M[i][col]
            if not e.is_zero():
                c = _cost(e)
                if best is None or c < best:
                    best, piv = c, i
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][col].inverse()
        M[r] = [x * inv for x in M[r]]
        for i in range(n):
            if i != r and not M[i][col].is_zero():
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
        if r == n:
            break
    return M[:r], pivots


def rank(A):
    if not A:
        return 0
    return len(rref(A)[0])


def kernel_basis(A):
    """Basis of the right kernel {x : A x = 0}."""
    if not A:
        return []
    m = len(A[0])
    R, pivots = rref(A)
    pivset = set(pivots)
    free = [j for j in range(m) if j not in pivset]
    out = []
    for f in free:
        v = [RF_ZERO] * m
        v[f] = RF_ONE
        for r, p in enumerate(pivots):
            v[p] = -R[r][f]
        out.append(v)
    return out


def solve_in_span(rows, target):
    """Coefficients c with sum c_i rows[i] = target, or None if unsolvable."""
    if not rows:
        return None if any(not t.is_zero() for t in target) else []
    m = len(rows[0])
    # eliminate on the augmented transpose
    A = [[rows[i][j] for i in range(len(rows))] + [target[j]] for j in range(m)]
    R, pivots = rref(A)
    n = len(rows)
    if n in pivots:
        return None
    c = [RF_ZERO] * n
    for r, p in enumerate(pivots):
        c[p] = R[r][n]
    # pivots beyond the first occurrence of free columns: verify exactly
    check = [RF_ZERO] * m
    for i, ci in enumerate(c):
        if not ci.is_zero():
            for j in range(m):
                check[j] = check[j] + ci * rows[i][j]
    if any(a != b for a, b in zip(check, target)):
        return None
    return c


# ---------------------------------------------------------------------------
# lattices over the DVR A (no pole at q = 0); uniformizer q, valuation = shift
# ---------------------------------------------------------------------------

class ALattice:
    """The A-span of a finite set of vectors in Q(q)^d.

    Reduction produces a triangular A-basis (pivot coordinate + minimal
    valuation first), after which membership, q L membership, and mod-q
    residues are read off by successive elimination.
    """

    def __init__(self, vectors, dim=None):
        vecs = [list(v) for v in vectors if any(not x.is_zero() for x in v)]
        self.dim = dim if dim is not None else (len(vecs[0]) if vecs else 0)
        basis = []
        while vecs:
            piv_vec = None
            piv_coord = None
            piv_val = None
            for v in vecs:
                for j, x in enumerate(v):
                    if not x.is_zero():
                        if piv_val is None or x.shift < piv_val:
                            piv_val, piv_vec, piv_coord = x.shift, v, j
            vecs.remove(piv_vec)
            pinv = piv_vec[piv_coord].inverse()
            rest = []
            for v in vecs:
                if not v[piv_coord].is_zero():
                    f = v[piv_coord] * pinv
                    v = [a - f * b for a, b in zip(v, piv_vec)]
                if any(not x.is_zero() for x in v):
                    rest.append(v)
            basis.append((piv_coord, piv_vec))
            vecs = rest
        self.basis = basis

    def rank(self):
        return len(self.basis)

    def coords(self, v):
        """Expansion coefficients over the triangular basis, or None."""
        v = list(v)
        cs = []
        for coord, bvec in self.basis:
            x = v[coord]
            if x.is_zero():
                cs.append(RF_ZERO)
                continue
            c = x / bvec[coord]
            cs.append(c)
            v = [a - c * b for a, b in zip(v, bvec)]
        if any(not x.is_zero() for x in v):
            return None
        return cs

    def contains(self, v):
        cs = self.coords(v)
        return cs is not None and all(c.is_zero() or c.shift >= 0 for c in cs)

    def in_q_lattice(self, v):
        cs = self.coords(v)
        return cs is not None and all(c.is_zero() or c.shift >= 1 for c in cs)

    def residue(self, v):
        """Mod-q residue vector over the basis (requires membership)."""
        cs = self.coords(v)
        if cs is None or any(not c.is_zero() and c.shift < 0 for c in cs):
            raise ValueError("vector not in the lattice")
        return tuple(c.residue_at_0() for c in cs)

    def same_lattice(self, other):
        if self.dim != other.dim:
            return False
        return (all(other.contains(v) for _, v in self.basis)
                and all(self.contains(v) for _, v in other.basis))
