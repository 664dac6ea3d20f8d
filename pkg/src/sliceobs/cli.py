"""Command line interface.

Subcommands:
  obstruct      full obstruction reports for one knot (or the whole table)
  verify-table  recompute the reference rows and diff the factor lists
  homology      branched cover homology by Smith normal form
  linking       the Q/Z linking form matrix on the 3-fold cover
  metabolizers  invariant metabolizer count and orbit structure
"""

import argparse
import csv
import io
import json
import sys

from .blanchfield import cover_homology_snf, linking_form
from .metabolizers import enumerate_metabolizers, orbit_decomposition
from .report import TABLE_N, obstruct, verify_table

__all__ = ["main"]


def _parse_n(text):
    if text == "all":
        return list(TABLE_N)
    return [int(text)]


def _cmd_obstruct(args):
    reports = []
    for n in _parse_n(args.n):
        reports.extend(obstruct(n, s=args.s, theta=args.theta,
                                exhaustive=args.exhaustive))
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2))
        return 0
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "sign", "s", "theta", "degree_sequence"])
        for r in reports:
            writer.writerow([r.n, r.sign, r.s, r.theta,
                             " ".join(map(str, r.degree_sequence))])
        sys.stdout.write(buf.getvalue())
        return 0
    for r in reports:
        degs = ", ".join(map(str, r.degree_sequence))
        print(f"n={r.n} chi{r.sign}  mod s={r.s} theta={r.theta}")
        print(f"  factor degrees: [{degs}]  total {r.total_degree} "
              f"(target {r.target_degree}, "
              f"{'ok' if r.degree_check else 'MISMATCH'})")
        print(f"  norm obstructed: {'yes' if r.norm_obstructed else 'NO'}")
        print(f"  metabolizers: {r.metabolizer_count} in orbits "
              f"{list(r.orbit_sizes)}; characters checked: "
              f"{r.characters_checked}")
        print(f"  verdict: {r.verdict}")
    return 0


def _cmd_verify_table(args):
    ns = TABLE_N if args.n == "all" else [int(args.n)]
    results = verify_table(ns)
    if args.json:
        print(json.dumps(results, indent=2, default=list))
        return 0 if all(r["ok"] for r in results) else 1
    failures = 0
    for r in results:
        status = "PASS" if r["ok"] else "FAIL"
        degs = " ".join(map(str, r["degree_sequence"]))
        print(f"[{status}] n={r['n']} chi{r['sign']} "
              f"(s={r['s']}, theta={r['theta']}): degrees {degs}")
        if not r["ok"]:
            failures += 1
            print(f"    expected {list(map(list, r['expected']))}")
            print(f"    got      {list(map(list, r['got']))}")
    print(f"{len(results) - failures}/{len(results)} rows verified")
    return 0 if failures == 0 else 1


def _cmd_homology(args):
    h = cover_homology_snf(args.n, args.q)
    tors = " x ".join(f"Z/{d}" for d in h.torsion) or "trivial"
    print(f"H_1 of the {args.q}-fold branched cover, n={args.n}: {tors}")
    print(f"  invariant factors: {list(h.invariants)}")
    print(f"  order: {h.order}")
    return 0


def _cmd_linking(args):
    form = linking_form(args.n)
    print(f"linking form on (Z/{args.n})^4, basis (a, ta, b, tb):")
    for row in form.matrix:
        print("  [" + ", ".join(f"{v!s:>8}" for v in row) + "]")
    if form.template_sign:
        sgn = "+" if form.template_sign > 0 else "-"
        print(f"  matches closed form with global sign {sgn}1")
    return 0


def _cmd_metabolizers(args):
    form = linking_form(args.n)
    mets = enumerate_metabolizers(args.n, form)
    orbits = orbit_decomposition(mets, args.n)
    print(f"n={args.n}: {len(mets)} metabolizers, "
          f"orbit sizes {sorted(len(o) for o in orbits)}")
    for orbit in orbits:
        head = orbit[0]
        label = "fixed" if len(orbit) == 1 else f"orbit of {len(orbit)}"
        print(f"  {label}: generated by {list(head.canonical)}")
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="sliceobs",
        description="Sliceness obstructions for the (sigma1 sigma2^-1)^n "
                    "closure family via twisted Alexander polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    ob = sub.add_parser("obstruct", help="full obstruction report")
    ob.add_argument("--n", required=True,
                    help="family index (or 'all' for the table rows)")
    ob.add_argument("--s", type=int, default=None,
                    help="prime modulus (default: reference witness)")
    ob.add_argument("--theta", type=int, default=None,
                    help="n-th root of unity mod s (default: derived)")
    ob.add_argument("--exhaustive", action="store_true",
                    help="check all n+1 metabolizer characters")
    ob.add_argument("--json", action="store_true")
    ob.add_argument("--csv", action="store_true")
    ob.set_defaults(fn=_cmd_obstruct)

    vt = sub.add_parser("verify-table", help="diff against reference rows")
    vt.add_argument("--n", default="all")
    vt.add_argument("--json", action="store_true")
    vt.set_defaults(fn=_cmd_verify_table)

    ho = sub.add_parser("homology", help="branched cover homology")
    ho.add_argument("--n", type=int, required=True)
    ho.add_argument("--q", type=int, default=3)
    ho.set_defaults(fn=_cmd_homology)

    li = sub.add_parser("linking", help="Q/Z linking form of the 3-fold cover")
    li.add_argument("--n", type=int, required=True)
    li.set_defaults(fn=_cmd_linking)

    me = sub.add_parser("metabolizers", help="metabolizers and orbits")
    me.add_argument("--n", type=int, required=True)
    me.set_defaults(fn=_cmd_metabolizers)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
