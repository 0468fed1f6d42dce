"""Root data for gl(m|1): the weight lattice with its super bilinear form, the
family of generalized Cartan matrices encoded as slot permutations, the
symmetric-group groupoid action, dominance/typicality predicates, reduced
words of the longest element, and the convex orders they induce.

Conventions.  Epsilon-coordinates index 1..m+1 with the odd index m+1; the
form is (eps_i, eps_j) = (-1)^{p(eps_i)} delta_ij.  A Realization is a
permutation sigma of {1..m+1} ("slots"): its i-th simple root is
eps_{sigma(i)} - eps_{sigma(i+1)}.  Positive roots are the interval sums
alpha_a + ... + alpha_b, encoded as pairs (a, b).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, cache


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Weight:
    """Element of P in eps-coordinates (length m+1)."""
    m: int
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.m + 1:
            raise ValueError("weight needs m+1 coordinates")

    def __add__(self, other):
        self._check(other)
        return Weight(self.m, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return Weight(self.m, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, n):
        return Weight(self.m, tuple(n * a for a in self.coords))

    def _check(self, other):
        if self.m != other.m:
            raise ValueError("rank mismatch")

    def parity(self):
        return self.coords[self.m] % 2


def eps(m, k):
    """The basis weight eps_k, 1 <= k <= m+1."""
    return Weight(m, tuple(1 if i == k - 1 else 0 for i in range(m + 1)))


def zero_weight(m):
    return Weight(m, (0,) * (m + 1))


def weight_form(lam: Weight, mu: Weight) -> int:
    """Symmetric bilinear form: sum of lam_k mu_k (-1)^{p(eps_k)}."""
    lam._check(mu)
    m = lam.m
    s = sum(lam.coords[k] * mu.coords[k] for k in range(m))
    return s - lam.coords[m] * mu.coords[m]


def parity_sum_weight(m):
    """1_{m|1}: pairs to zero with every simple coroot."""
    return Weight(m, tuple([1] * m + [-1]))


def weyl_rho(m):
    """The shifted Weyl vector: (alpha_i, rho) = (alpha_i, alpha_i)/2."""
    return Weight(m, tuple([m - k for k in range(m)] + [-1]))


def coroot_pairing(lam: Weight, i: int) -> int:
    """<h_i, lam> for the standard simple coroots, i in 1..m."""
    m = lam.m
    if not 1 <= i <= m:
        raise ValueError("index out of range")
    if i < m:
        return lam.coords[i - 1] - lam.coords[i]
    return lam.coords[m - 1] + lam.coords[m]


def odd_positive_roots_std(m):
    """Odd positive roots eps_i - eps_{m+1} of the standard datum."""
    return [eps(m, i) - eps(m, m + 1) for i in range(1, m + 1)]


def dominance_predicates(lam: Weight) -> dict:
    """Flags: dominant, fully_dominant, polynomial, typical (standard datum)."""
    m = lam.m
    dom = all(coroot_pairing(lam, i) >= 0 for i in range(1, m))
    full = dom and coroot_pairing(lam, m) >= 0
    poly = all(c >= 0 for c in lam.coords)
    shifted = lam + weyl_rho(m)
    typ = all(weight_form(a, shifted) != 0 for a in odd_positive_roots_std(m))
    return {"dominant": dom, "fully_dominant": full, "polynomial": poly, "typical": typ}


# ---------------------------------------------------------------------------
# realizations (slot permutations) and their GCMs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Realization:
    """A Cartan datum for gl(m|1): slots[k] is the eps-index in slot k+1."""
    m: int
    slots: tuple

    def __post_init__(self):
        if sorted(self.slots) != list(range(1, self.m + 2)):
            raise ValueError("slots must be a permutation of 1..m+1")

    @staticmethod
    def standard(m):
        return Realization(m, tuple(range(1, m + 2)))

    def is_standard(self):
        return self.slots == tuple(range(1, self.m + 2))

    def odd_slot(self):
        """Position (1-based) of the odd eps-index m+1."""
        return self.slots.index(self.m + 1) + 1

    def parity(self, i):
        """p_X(i) for a simple-root index 1 <= i <= m."""
        odd = self.m + 1
        return 1 if (self.slots[i - 1] == odd or self.slots[i] == odd) else 0

    def parities(self):
        return tuple(self.parity(i) for i in range(1, self.m + 1))

    def simple_root(self, i) -> Weight:
        if not 1 <= i <= self.m:
            raise ValueError("index out of range")
        return eps(self.m, self.slots[i - 1]) - eps(self.m, self.slots[i])

    def simple_roots(self):
        return [self.simple_root(i) for i in range(1, self.m + 1)]

    def gcm(self):
        """(alpha_i, alpha_j) matrix as a tuple of tuples."""
        roots = self.simple_roots()
        return tuple(tuple(weight_form(a, b) for b in roots) for a in roots)

    def act(self, i) -> "Realization":
        """Groupoid action: swap slots i and i+1."""
        if not 1 <= i <= self.m:
            raise ValueError("index out of range")
        s = list(self.slots)
        s[i - 1], s[i] = s[i], s[i - 1]
        return Realization(self.m, tuple(s))

    def act_word(self, word) -> "Realization":
        """Apply generators left to right: act_word((i, j)) = j . (i . X)."""
        X = self
        for i in word:
            X = X.act(i)
        return X

    # -- positive roots as interval pairs (a, b): alpha_a + ... + alpha_b

    def positive_roots(self):
        return [(a, b) for a in range(1, self.m + 1) for b in range(a, self.m + 1)]

    def root_weight(self, root) -> Weight:
        a, b = root
        return eps(self.m, self.slots[a - 1]) - eps(self.m, self.slots[b])

    def root_parity(self, root):
        a, b = root
        s = self.odd_slot()
        return 1 if (a == s or b + 1 == s) else 0

    def root_height(self, root):
        a, b = root
        return b - a + 1

    def root_form(self, r1, r2) -> int:
        return weight_form(self.root_weight(r1), self.root_weight(r2))

    def root_alpha_coords(self, root):
        a, b = root
        return tuple(1 if a <= i <= b else 0 for i in range(1, self.m + 1))

    def weight_of_alpha(self, xi) -> Weight:
        """Map alpha-coordinates (c_1..c_m) into P."""
        w = zero_weight(self.m)
        for i, c in enumerate(xi, start=1):
            if c:
                w = w + self.simple_root(i).scale(c)
        return w

    def alpha_coords(self, w: Weight):
        """Coordinates of w over this realization's simple roots.

        Requires w in the root lattice of X; raises otherwise."""
        if w.m != self.m:
            raise ValueError("rank mismatch")
        xs = []
        s = 0
        for a in range(self.m):
            s += w.coords[self.slots[a] - 1]
            xs.append(s)
        s += w.coords[self.slots[self.m] - 1]
        if s != 0:
            raise ValueError("weight is not in the root lattice")
        return tuple(xs)

    def to_json(self):
        return list(self.slots)

    @staticmethod
    def from_json(obj):
        slots = tuple(int(x) for x in obj)
        return Realization(len(slots) - 1, slots)


def gcm_and_parity(X: Realization):
    """Full GCM and parity vector of a realization."""
    return X.gcm(), X.parities()


def canonical_gcm_realizations(m):
    """One slot permutation per GCM A^t, t = 0..m (odd index in slot t+1)."""
    out = []
    for t in range(m + 1):
        rest = [k for k in range(1, m + 1)]
        slots = rest[:t] + [m + 1] + rest[t:]
        out.append(Realization(m, tuple(slots)))
    return out


# ---------------------------------------------------------------------------
# reduced words of the longest element of S_{m+1}
# ---------------------------------------------------------------------------

def _perm_mul_gen(perm, i):
    # right-multiply a tuple permutation of positions by the transposition s_i
    p = list(perm)
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def perm_of_word(m, word):
    """The position permutation s_{i_1} o ... o s_{i_k} (as composed maps)."""
    # Build right-to-left: value at k is s_{i_1}(s_{i_2}(...s_{i_t}(k)))
    perm = tuple(range(1, m + 2))
    for i in word:
        perm = _perm_mul_gen(perm, i)
    return perm


def inversions(perm):
    n = len(perm)
    return sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])


def is_reduced(m, word):
    return inversions(perm_of_word(m, word)) == len(word)


def longest_element(m):
    return tuple(range(m + 1, 0, -1))


@lru_cache(maxsize=None)
def _words_to(perm):
    """All reduced words for the given permutation (positions 1..n)."""
    n = len(perm)
    if inversions(perm) == 0:
        return ((),)
    out = []
    for i in range(1, n):
        # s_i is a right descent iff perm has a descent at position i
        if perm[i - 1] > perm[i]:
            shorter = _perm_mul_gen(perm, i)
            for w in _words_to(shorter):
                out.append(w + (i,))
    return tuple(out)


def reduced_words(m):
    """All reduced words of the longest element of S_{m+1} (exhaustive DFS)."""
    return list(_words_to(longest_element(m)))


def staircase_word(m):
    """(1)(2,1)(3,2,1)...: the default reduced word."""
    out = []
    for k in range(1, m + 1):
        out.extend(range(k, 0, -1))
    return tuple(out)


def odd_first_word(m):
    """(m..1)(m..2)...(m): convex order listing the odd roots first."""
    out = []
    for k in range(1, m + 1):
        out.extend(range(m, k - 1, -1))
    return tuple(out)


def convex_order(X: Realization, word):
    """Roots beta_t = s_{i_1}...s_{i_{t-1}}(alpha_{i_t}), as interval pairs.

    Returns a list of (a, b) interval roots of X in the order induced by the
    reduced word; raises if the word is not reduced or the order repeats."""
    m = X.m
    if len(word) != m * (m + 1) // 2 or not is_reduced(m, word):
        raise ValueError("not a reduced word of the longest element")
    out = []
    seen = set()
    u = tuple(range(1, m + 2))
    for t, it in enumerate(word):
        # slots of the t-th realization in the chain are X.slots o u
        a_pos = u[it - 1]
        b_pos = u[it]
        lo, hi = min(a_pos, b_pos), max(a_pos, b_pos)
        root = (lo, hi - 1)
        if root in seen:
            raise ValueError("repeated root in convex order")
        seen.add(root)
        out.append(root)
        u = _perm_mul_gen(u, it)
    return out


def braid_move(word, pos, kind):
    """Apply a braid move at 1-based position pos.

    kind "swap": letters at pos, pos+1 with |i-j| >= 2 are exchanged.
    kind "braid3": letters (i, j, i) with |i-j| = 1 at pos..pos+2 become (j, i, j).
    """
    w = list(word)
    n = len(w)
    if kind == "swap":
        if not 1 <= pos <= n - 1:
            raise ValueError("position out of range")
        i, j = w[pos - 1], w[pos]
        if abs(i - j) < 2:
            raise ValueError("letters not commuting at position %d" % pos)
        w[pos - 1], w[pos] = j, i
        return tuple(w)
    if kind == "braid3":
        if not 1 <= pos <= n - 2:
            raise ValueError("position out of range")
        i, j, k = w[pos - 1], w[pos], w[pos + 1]
        if i != k or abs(i - j) != 1:
            raise ValueError("no length-3 braid pattern at position %d" % pos)
        w[pos - 1], w[pos], w[pos + 1] = j, i, j
        return tuple(w)
    raise ValueError("unknown move kind %r" % (kind,))


def braid_neighbors(word):
    """All words reachable from this one by a single admissible move."""
    out = []
    for pos in range(1, len(word)):
        i, j = word[pos - 1], word[pos]
        if abs(i - j) >= 2:
            out.append(braid_move(word, pos, "swap"))
    for pos in range(1, len(word) - 1):
        i, j, k = word[pos - 1], word[pos], word[pos + 1]
        if i == k and abs(i - j) == 1:
            out.append(braid_move(word, pos, "braid3"))
    return out


def braid_connected_component(word):
    """Closure of {word} under braid moves (graph search)."""
    seen = {tuple(word)}
    stack = [tuple(word)]
    while stack:
        w = stack.pop()
        for nb in braid_neighbors(w):
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen


def braid_path(src, dst):
    """A sequence of words connecting src to dst by single moves (BFS)."""
    src, dst = tuple(src), tuple(dst)
    prev = {src: None}
    queue = [src]
    while queue:
        w = queue.pop(0)
        if w == dst:
            path = [w]
            while prev[w] is not None:
                w = prev[w]
                path.append(w)
            return path[::-1]
        for nb in braid_neighbors(w):
            if nb not in prev:
                prev[nb] = w
                queue.append(nb)
    raise ValueError("words not braid-connected")


@cache
def sym_group(n):
    """All permutations of 1..n as tuples."""
    from itertools import permutations
    return [tuple(p) for p in permutations(range(1, n + 1))]
