"""Command-line front end: canonical bases, PBW data, crystals, module reports,
and the verification suite, with JSON/DOT/text output.

Exit status: 0 on success, 1 on verification failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .crystal import enumerate_crystal
from .freealg import FreeElem
from .fullalg import verify_braid_suite, root_vector_via_braids
from .halfalg import HalfAlgebra
from .modules import (
    ModuleHandle, module_crystal, project_canonical_basis, nonstandard_rank2_basis,
)
from .rootdata import Realization, Weight, staircase_word, odd_first_word
from .scalars import RatFunc, in_q_az


def _xi_of(X, eps_coords):
    return X.alpha_coords(Weight(X.m, tuple(eps_coords)))


def _parse_datum(m, text):
    if text is None or text == "standard":
        return Realization.standard(m)
    if text.startswith("index"):
        t = int(text.split()[-1]) if " " in text else int(text[5:])
        rest = list(range(1, m + 1))
        return Realization(m, tuple(rest[:t] + [m + 1] + rest[t:]))
    slots = tuple(int(x) for x in text.split(","))
    return Realization(len(slots) - 1, slots)


def _emit(args, payload, text_lines=None):
    if args.format == "json":
        out = json.dumps(payload, indent=2, sort_keys=True, default=str)
    elif args.format == "dot":
        out = payload if isinstance(payload, str) else payload.get("dot", "")
    else:
        out = "\n".join(text_lines if text_lines is not None else [json.dumps(payload, default=str)])
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    else:
        sys.stdout.write(out + "\n")


def _weights_up_to(m, height):
    out = []

    def rec(prefix, left):
        if len(prefix) == m:
            out.append(tuple(prefix))
            return
        for c in range(left + 1):
            rec(prefix + [c], left - c)

    for h in range(height + 1):
        lo = len(out)
        rec([], h)
        out[lo:] = [xi for xi in out[lo:] if sum(xi) == h]
    return out


def _cb_label(h, b, m):
    """Label of a canonical basis element; the reverse-order residue for m = 3."""
    if m == 3:
        data = h.pbw_data(odd_first_word(3))
        res, _ = _pbw_residue(h, b.free_elem(), data)
        return res
    return b.leading_exponents()


def _pbw_residue(h, fe, data):
    ws = h.weight_space(data, fe.weight())
    coords = ws.expand(fe)
    hits = []
    for e, c in zip(ws.expts, coords):
        if c.is_zero():
            continue
        r = c.residue_at_0()
        if r != 0:
            hits.append((e, r))
    if len(hits) == 1 and hits[0][1] == 1:
        return hits[0][0], True
    return None, False


def cmd_cb(args):
    X = _parse_datum(args.m, args.datum)
    if not X.is_standard():
        sys.stderr.write("canonical bases are defined for the standard datum\n")
        return 2
    h = HalfAlgebra.get(X)
    weights = ([_xi_of(X, args.weight_eps)] if args.weight_eps
               else _weights_up_to(args.m, args.height))
    listing = []
    lines = []
    for xi in weights:
        for b in h.canonical_basis(xi):
            fe = b.free_elem()
            label = _cb_label(h, b, args.m)
            listing.append({
                "weight": list(xi),
                "label": list(label) if label is not None else None,
                "pbw_exponents": list(b.leading_exponents()),
                "word_expansion": fe.to_json()["terms"],
            })
            lines.append("weight %s label %s pbw %s" % (xi, label, b.leading_exponents()))
    _emit(args, {"m": args.m, "basis": listing}, lines)
    return 0


def cmd_pbw(args):
    X = _parse_datum(args.m, args.datum)
    h = HalfAlgebra.get(X)
    word = tuple(args.word) if args.word else staircase_word(args.m)
    data = h.pbw_data(word)
    roots = []
    for t, root in enumerate(data.order):
        fv = h.root_vector(data, root)
        roots.append({
            "position": t + 1,
            "root_interval": list(root),
            "root_eps": list(X.root_weight(root).coords),
            "parity": data.parities[t],
            "vector": fv.to_json()["terms"],
        })
    monomials = []
    if args.weight_eps:
        xi = _xi_of(X, args.weight_eps)
        for e, mono in h.pbw_monomials(data, xi):
            monomials.append({"exponents": list(e), "element": mono.rep.to_json()["terms"]})
    payload = {"m": args.m, "datum": X.to_json(), "word": list(word),
               "root_vectors": roots, "monomials": monomials}
    lines = ["word %s" % (word,)] + [
        "beta_%d = %s (parity %d)" % (r["position"], r["root_interval"], r["parity"])
        for r in roots]
    _emit(args, payload, lines)
    return 0


def cmd_crystal(args):
    X = _parse_datum(args.m, args.datum)
    if not X.is_standard():
        sys.stderr.write("the B(infinity) crystal is defined for the standard datum\n")
        return 2
    h = HalfAlgebra.get(X)
    g = enumerate_crystal(h, args.height)
    if args.format == "dot":
        _emit(args, g.to_dot())
    else:
        _emit(args, g.to_json(),
              ["%d nodes, %d edges" % (len(g.nodes), len(g.edges))])
    return 0


def cmd_module(args):
    X = _parse_datum(args.m, args.datum)
    if args.lam is None:
        sys.stderr.write("module command needs --lambda\n")
        return 2
    lam = Weight(args.m, tuple(args.lam))
    if not X.is_standard() and X.m == 2 and X.parities() == (1, 1):
        rep = nonstandard_rank2_basis(lam, height=args.height)
        payload = {
            "lambda": list(lam.coords), "kind": "simple (nonstandard rank 2)",
            "pairings": list(rep["lam_pairings"]),
            "total_dim_or_infinite": "infinite" if rep["infinite"] else rep["dim_simple"],
            "basis_words": [list(w) for w in rep["basis_words"]],
            "induced_basis": [{"weight": list(e["weight"]), "word": list(e["word"])}
                              for e in rep["induced_basis"]],
        }
        _emit(args, payload, ["dim %s" % payload["total_dim_or_infinite"]])
        return 0
    if args.kind == "simple":
        handle = ModuleHandle(X, lam, "simple")
    else:
        handle = ModuleHandle(X, lam, args.kind)
    dims = {}
    for xi in handle.weights_up_to(args.height):
        d = handle.dim(xi)
        if d:
            dims[",".join(map(str, xi))] = d
    total = handle.total_dim() if args.kind != "verma" else None
    singulars = []
    for xi in handle.weights_up_to(args.height):
        if sum(xi) == 0:
            continue
        for s in handle.singular_vectors(xi):
            singulars.append({"weight": list(xi),
                              "coords": [c.to_json() for c in s.coords]})
    payload = {
        "lambda": list(lam.coords),
        "kind": args.kind,
        "dims_by_weight": dims,
        "total_dim_or_infinite": total if total is not None else "infinite",
        "singular_vectors": singulars,
    }
    if X.is_standard():
        rep = project_canonical_basis(handle, args.height)
        payload["dependencies"] = [
            {"weight": list(d["weight"]),
             "labels": [list(l) for l in d["labels"]],
             "coefficients": [c.to_json() for c in d["coefficients"]]}
            for d in rep["dependencies"]]
        payload["induced_basis"] = [
            {"weight": list(e["weight"]), "label": list(e["label"])}
            for e in rep["induced_basis"]]
        flavor = "kac" if handle.kind == "kac" else "bkk"
        try:
            g = module_crystal(handle, flavor, args.height)
            payload["crystal_graph_ref"] = {"flavor": flavor, "graph": g.to_json()}
            if args.format == "dot":
                _emit(args, g.to_dot())
                return 0
        except ValueError as exc:
            payload["crystal_graph_ref"] = {"flavor": flavor, "refused": str(exc)}
    lines = ["dim %s" % payload["total_dim_or_infinite"]] + [
        "%s: %d" % kv for kv in sorted(dims.items())]
    _emit(args, payload, lines)
    return 0


def cmd_verify(args):
    report = verify_braid_suite(args.m)
    # invariant suite: two-route PBW agreement on a couple of reduced words
    X = Realization.standard(args.m)
    h = HalfAlgebra.get(X)
    words = [staircase_word(args.m), odd_first_word(args.m)]
    from .rootdata import convex_order
    for word in words:
        data = h.pbw_data(word)
        for t, root in enumerate(convex_order(X, word), start=1):
            ok = h.is_zero(root_vector_via_braids(X, word, t) - h.root_vector(data, root))
            report.append({"check_id": "two-route PBW", "realization": list(X.slots),
                           "generator_or_relation": "word %s position %d" % (word, t),
                           "status": "pass" if ok else "fail"})
    # almost-orthonormality spot checks
    data = h.pbw_data()
    for xi in _weights_up_to(args.m, 4):
        ws = h.weight_space(data, xi)
        G = h.gram_matrix(data, xi)
        tmax = max(1, sum(xi))
        ok = True
        for a in range(len(ws.expts)):
            for b in range(len(ws.expts)):
                v = G[a][b]
                if a == b:
                    v = v - RatFunc.one()
                ok = ok and in_q_az(v, tmax)
        report.append({"check_id": "almost orthonormal", "realization": list(X.slots),
                       "generator_or_relation": "weight %s" % (xi,),
                       "status": "pass" if ok else "fail"})
    failures = [r for r in report if r["status"] != "pass"]
    _emit(args, report, ["%s %s %s: %s" % (r["check_id"], r["realization"],
                                           r["generator_or_relation"], r["status"])
                         for r in report])
    return 1 if failures else 0


def cmd_form(args):
    with open(args.x) as fh:
        x = FreeElem.from_json(json.load(fh))
    with open(args.y) as fh:
        y = FreeElem.from_json(json.load(fh))
    if x.realization != y.realization:
        sys.stderr.write("elements live over different data\n")
        return 2
    h = HalfAlgebra.get(x.realization)
    v = h.form_pair(x, y)
    _emit(args, {"pairing": v.to_json()}, [repr(v)])
    return 0


def _int_list(text):
    return [int(x) for x in text.split(",")]


def build_parser():
    p = argparse.ArgumentParser(prog="qglm1",
                                description="exact quantum gl(m|1) computations")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, need_weight=False):
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--datum", default="standard",
                        help="slot permutation 'a,b,...', 'standard', or 'index t'")
        sp.add_argument("--height", type=int, default=8)
        sp.add_argument("--weight", dest="weight_eps", type=_int_list, default=None,
                        help="a single Q^+ element in eps-coordinates (m+1 integers)")
        sp.add_argument("--format", choices=("json", "dot", "text"), default="json")
        sp.add_argument("--out", default=None)

    sp = sub.add_parser("cb", help="canonical basis per weight or up to a height")
    common(sp)
    sp.set_defaults(func=cmd_cb)

    sp = sub.add_parser("pbw", help="PBW root vectors and monomials for a reduced word")
    common(sp)
    sp.add_argument("--word", type=_int_list, default=None)
    sp.set_defaults(func=cmd_pbw)

    sp = sub.add_parser("crystal", help="the B(infinity) crystal graph")
    common(sp)
    sp.set_defaults(func=cmd_crystal)

    sp = sub.add_parser("module", help="module report")
    common(sp)
    sp.add_argument("--lambda", dest="lam", type=_int_list, default=None,
                    help="highest weight in eps-coordinates (m+1 integers)")
    sp.add_argument("--kind", choices=("verma", "kac", "simple"), default="kac")
    sp.set_defaults(func=cmd_module)

    sp = sub.add_parser("verify", help="braid suite and invariant suites")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("form", help="pair two serialized U^- elements")
    common(sp)
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)
    sp.set_defaults(func=cmd_form)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.weight_eps is not None and len(args.weight_eps) != args.m + 1:
        parser.error("--weight needs %d eps-coordinates" % (args.m + 1))
    if getattr(args, "lam", None) is not None and len(args.lam) != args.m + 1:
        parser.error("--lambda needs %d eps-coordinates" % (args.m + 1))
    if args.m < 2 or args.height < 0:
        parser.error("need m >= 2 and height >= 0")
    try:
        return args.func(args)
    except SystemExit:
        raise
    except (ValueError, OSError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
