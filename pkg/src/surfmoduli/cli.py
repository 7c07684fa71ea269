"""Command-line entry point.

Subcommand tree::

    group     info
    triangles enumerate
    beauville search | scan
    isogenous invariants
    abc       invariants | diffeo | nondef | classify
    hyperell  branch | iso
    braid     equal | product | orbit

Exit codes: 0 success, 1 domain error (one-line diagnostic on stderr),
2 usage error.  ``--json`` switches from the human table to a single JSON
document with a fixed field order; integers are never emitted as floats
and rationals are emitted as strings like ``"-3/2"``.  Progress for long
searches goes to stderr only.  ``--threads`` is accepted for interface
stability; the computation is sequential, so output is identical for any
value.  ``--seed`` is reserved and affects nothing.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import beauville as bv
from . import bidouble as bd
from . import braids as br
from . import catalog
from . import moebius as mb
from . import triangles as tr
from .errors import SurfModuliError


def _emit(doc, args, rows=None):
    """Write a JSON document or its human rendering to stdout/--out."""
    if args.json:
        text = json.dumps(doc, separators=(",", ":"))
    else:
        text = "\n".join(rows if rows is not None else _flat_rows(doc))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _flat_rows(doc):
    if isinstance(doc, list):
        out = []
        for item in doc:
            out.extend(_flat_rows(item))
            out.append("")
        return out[:-1] if out else out
    return [f"{k}: {_human(v)}" for k, v in doc.items()]


def _human(v):
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_human(x)}" for k, x in v.items()) + "}"
    if isinstance(v, list):
        return "[" + ", ".join(_human(x) for x in v) + "]"
    return str(v)


def _frac_str(x: Fraction) -> str:
    return str(x)


# ---------------------------------------------------------------- group


def cmd_group_info(args):
    G = catalog.resolve(args.group)
    classes = G.conjugacy_classes()
    doc = {
        "group": G.name or args.group,
        "degree": G.degree,
        "order": G.order,
        "abelian": G.is_abelian,
        "simple": G.is_simple() if G.order >= 2 else False,
        "classes": len(classes),
        "class_sizes": sorted(len(c) for c in classes),
    }
    _emit(doc, args)
    return 0


# ------------------------------------------------------------ triangles


def cmd_triangles_enumerate(args):
    G = catalog.resolve(args.group)
    ttype = None
    if args.type:
        parts = [int(v) for v in args.type.split(",")]
        if len(parts) != 3:
            raise SurfModuliError("--type expects three comma-separated orders")
        ttype = tr.TripleType(*parts)
    triples = tr.enumerate_triples(
        G, triple_type=ttype, hyperbolic_only=args.hyperbolic_only
    )
    if args.mod_branch_permutation:
        seen, reduced = set(), []
        for t in triples:
            orbit_key = min(x.key() for x in tr.branch_permutation_orbit(t))
            if orbit_key not in seen:
                seen.add(orbit_key)
                reduced.append(t)
        triples = reduced
    doc = {
        "group": G.name or args.group,
        "order": G.order,
        "count": len(triples),
        "triples": [t.as_dict() for t in triples],
    }
    rows = [f"group: {doc['group']}", f"order: {G.order}", f"count: {len(triples)}"]
    rows += [
        f"  a={t['a']} b={t['b']} c={t['c']} type={t['type']} genus={t['genus']}"
        for t in doc["triples"]
    ]
    _emit(doc, args, rows)
    return 0


# ------------------------------------------------------------ beauville


def cmd_beauville_search(args):
    G = catalog.resolve(args.group)
    print(f"searching {G.name or args.group} (order {G.order})", file=sys.stderr)
    results = bv.search(G, stop_at_first=args.first)
    doc = {
        "group": G.name or args.group,
        "order": G.order,
        "beauville": bool(results),
        "structures_found": len(results),
    }
    if args.structures:
        doc["structures"] = [s.as_dict() for s in results]
    rows = [f"{k}: {_human(v)}" for k, v in doc.items() if k != "structures"]
    if args.structures:
        for s in results:
            d = s.as_dict()
            rows.append(
                f"  t1={d['t1']['type']} genus {d['t1']['genus']}"
                f" / t2={d['t2']['type']} genus {d['t2']['genus']}"
                f" chi={d['invariants']['chi']}"
                f" unmarked_equal={_human(d['triples_unmarked_equivalent'])}"
            )
    _emit(doc, args, rows)
    return 0


def cmd_beauville_scan(args):
    groups = [catalog.resolve(ref) for ref in args.groups]
    def progress(row):
        print(
            f"scanned {row.group}: beauville={row.beauville}"
            f" ({row.elapsed_ms} ms)",
            file=sys.stderr,
        )
    rows = bv.scan(groups, stop_at_first=not args.all, progress=progress)
    doc = [r.as_dict() for r in rows]
    if args.csv:
        header = "group,order,beauville,structures_found,elapsed_ms"
        lines = [header] + [
            f"{r.group},{r.order},{str(r.beauville).lower()},"
            f"{r.structures_found},{r.elapsed_ms}"
            for r in rows
        ]
        text = "\n".join(lines)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text)
        return 0
    human = [
        f"{r.group:>14}  order {r.order:>5}  beauville {_human(r.beauville):>3}"
        f"  found {r.structures_found}  {r.elapsed_ms} ms"
        + (f"  error: {r.error}" if r.error else "")
        for r in rows
    ]
    _emit(doc, args, human)
    return 0


# ------------------------------------------------------------ isogenous


def cmd_isogenous_invariants(args):
    inv = bv.isogenous_invariants(args.g1, args.g2, args.order)
    doc = {"g1": args.g1, "g2": args.g2, "group_order": args.order}
    doc.update(inv.as_dict())
    _emit(doc, args)
    return 0


# ------------------------------------------------------------------ abc


def cmd_abc_invariants(args):
    if args.d is None:
        inv = bd.abc_invariants(bd.AbcType(args.a, args.b, args.c))
        doc = {"a": args.a, "b": args.b, "c": args.c, "d": args.b}
    else:
        inv = bd.bidouble_invariants(
            bd.BidoubleType(args.a, args.b, args.c, args.d)
        )
        doc = {"a": args.a, "b": args.b, "c": args.c, "d": args.d}
    base = inv.invariants.as_dict()
    doc.update(
        {
            "chi": base["chi"],
            "ksq": base["ksq"],
            "ksq_paper": inv.ksq_paper,
            "e": base["e"],
            "tau": base["tau"],
        }
    )
    if inv.below_standard_bound:
        doc["below_standard_bound"] = True
    _emit(doc, args)
    return 0


def cmd_abc_diffeo(args):
    s = bd.AbcType(args.a, args.b, args.c)
    s2 = bd.AbcType(args.a2, args.b2, args.c2)
    chain = bd.diffeo_equivalent(s, s2)
    doc = {
        "from": [s.a, s.b, s.c],
        "to": [s2.a, s2.b, s2.c],
        "equivalent": chain is not None,
        "chain": [[t.a, t.b, t.c] for t in chain] if chain else [],
    }
    _emit(doc, args)
    return 0


def cmd_abc_nondef(args):
    report = bd.nondef_predicate(args.a, args.b, args.c, args.k)
    doc = report.as_dict()
    rows = [f"a: {args.a}", f"b: {args.b}", f"c: {args.c}", f"k: {args.k}"]
    for name, ok in report.conditions.items():
        status = "ok" if ok else "FAIL"
        rows.append(f"({name}) {bd.NondefReport.condition_text(name)}: {status}")
    rows.append(f"verdict: {_human(report.verdict)}")
    _emit(doc, args, rows)
    return 0


def cmd_abc_classify(args):
    result = bd.enumerate_types(
        args.chi, args.ksq, args.bound, paper_convention=args.paper_ksq
    )
    _emit(result.as_dict(), args)
    return 0


# ------------------------------------------------------------- hyperell


def cmd_hyperell_branch(args):
    branch = mb.family_branch_set(args.genus, Fraction(args.param))
    doc = {
        "genus": args.genus,
        "param": str(Fraction(args.param)),
        "size": len(branch),
        "points": [repr(p) for p in branch.sorted_points()],
    }
    _emit(doc, args)
    return 0


def _parse_branch_set(text: str) -> mb.BranchSet:
    return mb.BranchSet([mb.ProjPoint.parse(tok) for tok in text.split(",")])


def cmd_hyperell_iso(args):
    b1 = _parse_branch_set(args.set1)
    b2 = _parse_branch_set(args.set2)
    m = mb.moebius_equivalent(b1, b2)
    doc = {
        "equivalent": m is not None,
        "map": [[_frac_str(x) for x in row] for row in m.matrix()] if m else None,
    }
    _emit(doc, args)
    return 0


# ---------------------------------------------------------------- braid


def _parse_word(strands: int, text: str) -> br.BraidWord:
    return br.BraidWord.from_ints(strands, json.loads(text))


def cmd_braid_equal(args):
    w1 = _parse_word(args.strands, args.w1)
    w2 = _parse_word(args.strands, args.w2)
    doc = {
        "strands": args.strands,
        "w1": w1.to_ints(),
        "w2": w2.to_ints(),
        "equal": br.braid_equal(w1, w2),
    }
    _emit(doc, args)
    return 0


def cmd_braid_product(args):
    f = br.Factorization.from_ints(args.strands, json.loads(args.factors))
    doc = {
        "strands": args.strands,
        "factors": f.to_ints(),
        "product": br.product(f).to_ints(),
    }
    _emit(doc, args)
    return 0


def cmd_braid_orbit(args):
    f = br.Factorization.from_ints(args.strands, json.loads(args.factors))
    orbit = br.hurwitz_orbit(f, budget=args.budget)
    doc = {
        "strands": args.strands,
        "factors": f.to_ints(),
        "budget": args.budget,
        "orbit_size": len(orbit),
        "exhausted": orbit.exhausted,
    }
    _emit(doc, args)
    return 0


# ----------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    # output and execution flags live on every leaf so they can be given
    # after the subcommand, e.g. `beauville search --group A5 --json`
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine output")
    common.add_argument("--out", metavar="FILE", help="write output to FILE")
    common.add_argument("--threads", type=int, default=1,
                        help="accepted for compatibility; runs sequentially")
    common.add_argument("--seed", type=int, default=0,
                        help="reserved; affects nothing")

    parser = argparse.ArgumentParser(
        prog="surfmoduli",
        description="exact searches and invariants for triangle curves, "
        "Beauville structures, bidouble covers, branch sets and braids",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", help="group utilities").add_subparsers(
        dest="sub", required=True
    )
    p = g.add_parser("info", help="order, classes, simplicity", parents=[common])
    p.add_argument("--group", required=True, help="builtin name or file path")
    p.set_defaults(func=cmd_group_info)

    t = sub.add_parser("triangles", help="generating triples").add_subparsers(
        dest="sub", required=True
    )
    p = t.add_parser("enumerate", help="list generating triples", parents=[common])
    p.add_argument("--group", required=True)
    p.add_argument("--type", help="filter by orders, e.g. 5,5,5")
    p.add_argument("--hyperbolic-only", action="store_true")
    p.add_argument(
        "--mod-branch-permutation",
        action="store_true",
        help="deduplicate triples that differ by reordering the branch points",
    )
    p.set_defaults(func=cmd_triangles_enumerate)

    b = sub.add_parser("beauville", help="Beauville structures").add_subparsers(
        dest="sub", required=True
    )
    p = b.add_parser("search", help="search one group", parents=[common])
    p.add_argument("--group", required=True)
    p.add_argument("--first", action="store_true",
                   help="stop at the first structure")
    p.add_argument("--structures", action="store_true",
                   help="include the structures in the output")
    p.set_defaults(func=cmd_beauville_search)
    p = b.add_parser("scan", help="scan a family of groups", parents=[common])
    p.add_argument("--groups", nargs="+", required=True, metavar="NAME")
    p.add_argument("--all", action="store_true",
                   help="count all structures instead of stopping at the first")
    p.add_argument("--csv", action="store_true", help="CSV instead of table/JSON")
    p.set_defaults(func=cmd_beauville_scan)

    iso = sub.add_parser("isogenous", help="free quotients of curve products")
    isub = iso.add_subparsers(dest="sub", required=True)
    p = isub.add_parser("invariants", help="chi, K^2, e, tau", parents=[common])
    p.add_argument("g1", type=int)
    p.add_argument("g2", type=int)
    p.add_argument("order", type=int)
    p.set_defaults(func=cmd_isogenous_invariants)

    abc = sub.add_parser("abc", help="bidouble and simple-type covers")
    asub = abc.add_subparsers(dest="sub", required=True)
    p = asub.add_parser("invariants", help="chi and both K^2 conventions",
                        parents=[common])
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.add_argument("d", type=int, nargs="?", default=None)
    p.set_defaults(func=cmd_abc_invariants)
    p = asub.add_parser("diffeo", help="connect two abc types by steps",
                        parents=[common])
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.add_argument("a2", type=int)
    p.add_argument("b2", type=int)
    p.add_argument("c2", type=int)
    p.set_defaults(func=cmd_abc_diffeo)
    p = asub.add_parser("nondef", help="non-deformation criterion",
                        parents=[common])
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_abc_nondef)
    p = asub.add_parser("classify", help="types matching (chi, K^2)",
                        parents=[common])
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--ksq", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--paper-ksq", action="store_true",
                   help="match K^2 in the printed convention")
    p.set_defaults(func=cmd_abc_classify)

    h = sub.add_parser("hyperell", help="branch sets on the line")
    hsub = h.add_subparsers(dest="sub", required=True)
    p = hsub.add_parser("branch", help="branch set of the one-parameter family",
                        parents=[common])
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--param", required=True, help="rational like 7 or -1/2")
    p.set_defaults(func=cmd_hyperell_branch)
    p = hsub.add_parser("iso", help="rational Moebius equivalence",
                        parents=[common])
    p.add_argument("--set1", required=True,
                   help="comma-separated rationals and inf")
    p.add_argument("--set2", required=True)
    p.set_defaults(func=cmd_hyperell_iso)

    braid = sub.add_parser("braid", help="braid words and factorizations")
    bsub = braid.add_subparsers(dest="sub", required=True)
    p = bsub.add_parser("equal", help="word problem", parents=[common])
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("w1", help="signed list, e.g. [1,2,1]")
    p.add_argument("w2")
    p.set_defaults(func=cmd_braid_equal)
    p = bsub.add_parser("product", help="product of a factorization",
                        parents=[common])
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("factors", help="list of signed lists, e.g. [[1],[2]]")
    p.set_defaults(func=cmd_braid_product)
    p = bsub.add_parser("orbit", help="Hurwitz orbit enumeration",
                        parents=[common])
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("factors")
    p.add_argument("--budget", type=int, default=10000)
    p.set_defaults(func=cmd_braid_orbit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SurfModuliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
