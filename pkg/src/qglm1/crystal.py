"""Kashiwara operators on U^- for the standard datum, i-string decompositions,
and breadth-first enumeration of the crystal B(infinity) with graph export.

For i < m the operators shift the decomposition u = sum F_i^{(t)} u_t with
e_i(u_t) = 0; for the odd index m, f~_m is left multiplication by F_m and
e~_m is the quantum differential e_m.  Crystal nodes are identified by their
canonical-basis residues mod q.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .freealg import FreeElem, derivation
from .halfalg import HalfAlgebra
from .linalg import LUSolver, kernel_basis
from .rootdata import Realization
from .scalars import RF_ZERO, RF_ONE, rf_q_factorial


class CrystalOps:
    """String decompositions and crystal operators on U^-(standard)."""

    def __init__(self, algebra: HalfAlgebra):
        if not algebra.X.is_standard():
            raise ValueError("crystal operators require the standard realization")
        self.h = algebra
        self.m = algebra.m
        self.data = algebra.pbw_data()
        self._string = {}   # (xi, i) -> (solver, layout)

    # -- string decomposition for i < m (and uniformly for any i)

    def decompose(self, x: FreeElem, i: int):
        """Components u_t with x = sum_t F_i^{(t)} u_t and e_i(u_t) = 0."""
        h = self.h
        if x.is_zero():
            return {}
        xi = x.weight()
        if i == self.m:
            u1 = derivation(x, i, "e")
            u0 = x - FreeElem.generator(h.X, i) * u1
            out = {}
            if not h.is_zero(u0):
                out[0] = u0
            if not u1.is_zero() and not h.is_zero(u1):
                out[1] = u1
            return out
        solver, layout, kerbases = self._string_solver(xi, i)
        coords = h.weight_space(self.data, xi).expand(x)
        sol = solver.solve(coords)
        out = {}
        pos = 0
        for t, kb in layout:
            part = FreeElem.zero(h.X)
            zeta = self._lower(xi, i, t)
            for v in kb:
                c = sol[pos]
                pos += 1
                if not c.is_zero():
                    part = part + h.from_coords(self.data, zeta, v).scale(c)
            if not part.is_zero():
                out[t] = part
        return out

    def _lower(self, xi, i, t):
        return tuple(c - (t if k == i - 1 else 0) for k, c in enumerate(xi))

    def _string_solver(self, xi, i):
        key = (tuple(xi), i)
        got = self._string.get(key)
        if got is not None:
            return got
        h = self.h
        d = h.dim_weight(xi, self.data)
        cols = []
        layout = []
        kerbases = {}
        for t in range(0, xi[i - 1] + 1):
            zeta = self._lower(xi, i, t)
            dz = h.dim_weight(zeta, self.data)
            if dz == 0:
                continue
            M = h.derivation_matrix(self.data, zeta, i, "e")
            if len(M) == 0:
                kb = [[RF_ONE if a == b else RF_ZERO for a in range(dz)] for b in range(dz)]
            else:
                kb = kernel_basis(M)
            if not kb:
                continue
            layout.append((t, kb))
            kerbases[t] = kb
            fi_t = FreeElem.word(h.X, (i,) * t, rf_q_factorial(t).inverse()) if t else FreeElem.unit(h.X)
            for v in kb:
                vec = fi_t * h.from_coords(self.data, zeta, v)
                cols.append(h.weight_space(self.data, xi).expand(vec))
        if sum(len(kb) for _, kb in layout) != d:
            raise ValueError("string decomposition basis count mismatch")
        A = [[cols[c][r] for c in range(len(cols))] for r in range(d)]
        solver = LUSolver(A)
        self._string[key] = (solver, layout, kerbases)
        return self._string[key]

    # -- operators

    def f_op(self, x: FreeElem, i: int) -> FreeElem:
        if i == self.m:
            return FreeElem.generator(self.h.X, i) * x
        parts = self.decompose(x, i)
        out = FreeElem.zero(self.h.X)
        for t, u in parts.items():
            out = out + FreeElem.word(self.h.X, (i,) * (t + 1),
                                      rf_q_factorial(t + 1).inverse()) * u
        return out

    def e_op(self, x: FreeElem, i: int) -> FreeElem:
        if i == self.m:
            return derivation(x, i, "e")
        parts = self.decompose(x, i)
        out = FreeElem.zero(self.h.X)
        for t, u in parts.items():
            if t >= 1:
                out = out + FreeElem.word(self.h.X, (i,) * (t - 1),
                                          rf_q_factorial(t - 1).inverse()) * u
        return out

    def crystal_op(self, x: FreeElem, i: int, direction: str) -> FreeElem:
        if direction == "f":
            return self.f_op(x, i)
        if direction == "e":
            return self.e_op(x, i)
        raise ValueError("direction must be 'e' or 'f'")


# ---------------------------------------------------------------------------
# the crystal graph
# ---------------------------------------------------------------------------

@dataclass
class CrystalNode:
    weight: tuple
    index: int
    label: str


@dataclass
class CrystalGraph:
    colors: int
    nodes: list = field(default_factory=list)
    edges: list = field(default_factory=list)   # (src_label, dst_label, color)

    def node_names(self):
        return [n.label for n in self.nodes]

    def to_json(self):
        return {
            "nodes": [{"name": n.label, "weight": list(n.weight), "index": n.index,
                       "height": sum(n.weight)} for n in self.nodes],
            "edges": [{"source": s, "target": t, "color": c} for s, t, c in self.edges],
        }

    def to_dot(self, name="crystal"):
        lines = ["digraph %s {" % name, "  rankdir=TB;", "  edge [colorscheme=set19];"]
        by_height = {}
        for n in self.nodes:
            by_height.setdefault(sum(n.weight), []).append(n)
        for h in sorted(by_height):
            names = " ".join('"%s";' % n.label for n in by_height[h])
            lines.append("  { rank=same; %s }" % names)
        for n in self.nodes:
            lines.append('  "%s" [label="%s"];' % (n.label, n.label))
        for s, t, c in self.edges:
            lines.append('  "%s" -> "%s" [color="%d", label="%d"];' % (s, t, c, c))
        lines.append("}")
        return "\n".join(lines)


def node_name(weight, index):
    return "w%s#%d" % (",".join(str(c) for c in weight), index)


def enumerate_crystal(algebra: HalfAlgebra, height: int) -> CrystalGraph:
    """BFS closure of {1} under the f~_i; nodes are canonical-basis residues."""
    ops = CrystalOps(algebra)
    h = algebra
    m = algebra.m
    graph = CrystalGraph(colors=m)
    zero_xi = (0,) * m
    graph.nodes.append(CrystalNode(zero_xi, 0, node_name(zero_xi, 0)))
    seen = {(zero_xi, 0)}
    frontier = [(zero_xi, 0)]
    while frontier:
        nxt = []
        for xi, k in frontier:
            if sum(xi) >= height:
                continue
            b = h.canonical_basis(xi)[k]
            rep = b.free_elem()
            for i in range(1, m + 1):
                img = ops.f_op(rep, i)
                if img.is_zero() or h.is_zero(img):
                    continue
                res, cb = h.binf_residue(img)
                hits = [t for t, r in enumerate(res) if r != 0]
                if len(hits) != 1 or res[hits[0]] != 1:
                    raise ValueError("f~ image is not a single crystal residue")
                tgt_xi = ops._lower(xi, i, -1)
                node = (tgt_xi, hits[0])
                if node not in seen:
                    seen.add(node)
                    graph.nodes.append(CrystalNode(tgt_xi, hits[0], node_name(*node)))
                    nxt.append(node)
                graph.edges.append((node_name(xi, k), node_name(*node), i))
        frontier = nxt
    graph.nodes.sort(key=lambda n: (sum(n.weight), n.weight, n.index))
    graph.edges.sort()
    return graph
