"""Command line surface.

Subcommands:

  char        evaluate a character determinant at a rational point
  patterns    list patterns or print their generating function
  tableaux    list tableaux, print their generating function, map to patterns
  graph       build a honeycomb graph from a spec file; GF, count, matchings
  transform   reflective cut / symmetrization / doubling of a graph
  verify      the factorization identities (thm1, skew)
  crosscheck  pattern vs tableau vs determinant models
  selftest    sweep the identity grid

Exit codes: 0 all pass, 1 an identity failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .characters import char_eval_det
from .halfint import format_fraction, parse_fraction
from .partitions import Partition
from .patterns import character_gf, iter_patterns, pattern_weight, top_row_number
from .tableaux import iter_tableaux, pattern_to_tableau, tableau_gf, tableau_to_pattern
from .verify import cross_check, report_json, selftest, verify_skew, verify_thm1

_PATTERN_FAMILY = {
    "schur": "gt",
    "sp": "symplectic",
    "oe": "even_orthogonal",
    "so_odd": "split_orthogonal",
}

_TABLEAU_FAMILY = {
    "schur": "ordinary",
    "sp": "symplectic",
    "oe": "even_orthogonal",
    "so_odd": "odd_orthogonal",
}


def _partition(s):
    return Partition.parse(s) if s else Partition(())


def cmd_char(args):
    lam = _partition(args.lam)
    point = [parse_fraction(tok) for tok in args.point.split(",")]
    n = args.n or len(point)
    value = char_eval_det(args.family, lam, n, point)
    print(format_fraction(value))
    return 0


def cmd_patterns(args):
    lam = _partition(args.lam)
    mu = _partition(args.mu) if args.mu is not None else None
    if args.gf or not args.list:
        gf = character_gf(args.family, lam, mu)
        print(json.dumps(gf.to_json()))
        return 0
    family = _PATTERN_FAMILY[args.family]
    n, m = len(lam), len(mu) if mu is not None else 0
    top = mu.increasing() if m else None
    for p in iter_patterns(
        family, n, m, lam.increasing(), top, bottom_variants=family == "even_orthogonal"
    ):
        print(json.dumps({**p.to_json(), "weight": pattern_weight(p).to_json()}))
    return 0


def cmd_tableaux(args):
    outer = _partition(args.outer)
    inner = _partition(args.inner) if args.inner else Partition(())
    family = _TABLEAU_FAMILY[args.family]
    nletters = args.nletters or (len(outer) - len(inner))
    if args.map_to_pattern:
        from .tableaux import SkewTableau

        with open(args.map_to_pattern) as fh:
            t = SkewTableau.from_json(json.load(fh))
        print(json.dumps(tableau_to_pattern(t).to_json()))
        return 0
    if args.gf or not args.list:
        print(json.dumps(tableau_gf(family, outer, inner, nletters).to_json()))
        return 0
    for t in iter_tableaux(family, outer, inner, nletters):
        print(json.dumps(t.to_json()))
    return 0


def cmd_graph(args):
    from .honeycomb import build_graph
    from .matchings import enumerate_matchings, matching_gf, matching_weight

    with open(args.spec) as fh:
        spec = json.load(fh)
    g = build_graph(spec)
    point = [parse_fraction(s) for s in spec["point"]] if "point" in spec else None
    numeric = point is not None or g.meta.get("builder") in ("DT", "SDT")
    if args.count:
        print(len(enumerate_matchings(g)))
    elif args.emit_matchings:
        for m in enumerate_matchings(g):
            w = matching_weight(g, m, [] if numeric else None)
            wj = format_fraction(w) if numeric else w.to_json()
            print(json.dumps({"edges": list(m), "weight": wj}))
    elif args.gf or True:
        gf = matching_gf(g, [] if numeric else None)
        print(json.dumps(format_fraction(gf) if numeric else gf.to_json()))
    return 0


def cmd_transform(args):
    from .honeycomb import build_graph
    from .matchings import matching_gf
    from .transforms import ciucu_factorize

    with open(args.infile) as fh:
        spec = json.load(fh)
    g = build_graph(spec)
    numeric = g.meta.get("builder") in ("DT", "SDT")
    if args.op == "ciucu":
        gp, gm, nG = ciucu_factorize(g)
        whole = matching_gf(g, [] if numeric else None)
        parts = matching_gf(gp, [] if numeric else None) * matching_gf(
            gm, [] if numeric else None
        )
        equal = whole == parts.scale(2**nG) if not numeric else whole == parts * 2**nG
        print(
            json.dumps(
                {
                    "n_axis_pairs": nG,
                    "gplus": gp.to_json(),
                    "gminus": gm.to_json(),
                    "gf_identity": bool(equal),
                }
            )
        )
        return 0 if equal else 1
    if args.op == "double":
        from .doubling import build_DT

        point = [parse_fraction(s) for s in spec["point"]]
        dt = build_DT(spec["n"], spec["k"], spec["p"], point)
        same = matching_gf(g, []) == matching_gf(dt, [])
        print(json.dumps({"dt": dt.to_json(), "gf_identity": bool(same)}))
        return 0 if same else 1
    if args.op == "symmetrize":
        from .transforms import SymState, symmetrize_bijection

        with open(args.params) as fh:
            prm = json.load(fh)
        state = SymState(prm["sigma"], prm["matching"], prm["bits"])
        out = symmetrize_bijection(g, state, prm["j"])
        print(json.dumps({"sigma": list(out.sigma), "matching": list(out.matching), "bits": list(out.bits)}))
        return 0
    raise ValueError(args.op)


def cmd_verify(args):
    lam = _partition(args.lam)
    if args.what == "thm1":
        rep = verify_thm1(args.part, lam, args.n)
    else:
        mu = _partition(args.mu)
        rep = verify_skew(args.part, lam, mu, args.n, args.m)
    print(report_json(rep))
    print(rep.summary(), file=sys.stderr)
    return 0 if rep.equal else 1


def cmd_crosscheck(args):
    lam = _partition(args.lam)
    mu = _partition(args.mu) if args.mu is not None else None
    rep = cross_check(args.family, lam, mu, args.points, args.seed)
    print(report_json(rep))
    print(rep.summary(), file=sys.stderr)
    return 0 if rep.equal else 1


def cmd_selftest(args):
    reports = selftest(args.grid)
    bad = [r for r in reports if not r.equal]
    print("%d checks, %d failed" % (len(reports), len(bad)))
    return 0 if not bad else 1


def build_parser():
    ap = argparse.ArgumentParser(prog="hexchar", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("char", help="determinantal character value")
    p.add_argument("--family", required=True, choices=("schur", "sp", "oe", "so_odd"))
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--point", required=True, help="comma separated rationals")
    p.set_defaults(fn=cmd_char)

    p = sub.add_parser("patterns", help="pattern model")
    p.add_argument("--family", required=True, choices=("schur", "sp", "oe", "so_odd"))
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu")
    p.add_argument("--list", action="store_true")
    p.add_argument("--gf", action="store_true")
    p.set_defaults(fn=cmd_patterns)

    p = sub.add_parser("tableaux", help="tableau model")
    p.add_argument("--family", required=True, choices=("schur", "sp", "oe", "so_odd"))
    p.add_argument("--outer", required=True)
    p.add_argument("--inner")
    p.add_argument("--nletters", type=int)
    p.add_argument("--list", action="store_true")
    p.add_argument("--gf", action="store_true")
    p.add_argument("--map-to-pattern", dest="map_to_pattern", metavar="FILE")
    p.set_defaults(fn=cmd_tableaux)

    p = sub.add_parser("graph", help="honeycomb graphs")
    p.add_argument("--spec", required=True)
    p.add_argument("--gf", action="store_true")
    p.add_argument("--count", action="store_true")
    p.add_argument("--emit-matchings", dest="emit_matchings", action="store_true")
    p.set_defaults(fn=cmd_graph)

    p = sub.add_parser("transform", help="graph transformations")
    p.add_argument("--op", required=True, choices=("ciucu", "symmetrize", "double"))
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--params")
    p.set_defaults(fn=cmd_transform)

    p = sub.add_parser("verify", help="factorization identities")
    psub = p.add_subparsers(dest="what", required=True)
    for what in ("thm1", "skew"):
        q = psub.add_parser(what)
        q.add_argument("--part", type=int, required=True, choices=(1, 2))
        q.add_argument("--lambda", dest="lam", required=True)
        q.add_argument("--n", type=int)
        if what == "skew":
            q.add_argument("--mu", required=True)
            q.add_argument("--m", type=int)
        q.set_defaults(fn=cmd_verify, what=what)

    p = sub.add_parser("crosscheck", help="cross-model agreement")
    p.add_argument("--family", required=True, choices=("schur", "sp", "oe", "so_odd"))
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu")
    p.add_argument("--points", type=int, default=5)
    p.add_argument("--seed", type=int, default=17)
    p.set_defaults(fn=cmd_crosscheck)

    p = sub.add_parser("selftest", help="identity sweep")
    p.add_argument("--grid", choices=("small", "full"), default="small")
    p.set_defaults(fn=cmd_selftest)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError, KeyError) as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
