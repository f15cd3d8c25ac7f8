"""Command-line front end.

Every subcommand builds a Report and prints it as text, or as JSON with
``--json``.  Exit status: 0 when no check failed or was left undecided,
1 otherwise, 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys

from . import acceptance, ade, artin, plucker
from .presentation import DEFAULT_COSET_LIMIT, format_presentation
from .quartic import quartic_report
from .report import Report
from .syntax import WordSyntaxError
from .zvk import MonodromyData, all_presentations


def cmd_quartic(args) -> Report:
    return quartic_report(args.coset_limit, args.depth, args.skip_enumeration, args.golden)


def cmd_zvk(args) -> Report:
    m = MonodromyData.load(args.file)
    rep = Report("zvk", inputs={"file": args.file, "monodromy": m.to_dict()})
    for name, p in all_presentations(m).items():
        rep.results[name] = format_presentation(p)
    b = m.boundary_word()
    rep.check(f"every base generator fixes the boundary word {b}",
              all(m.action(t)(b) == b for t in m.base), "DERIVED")
    return rep


def cmd_artin(args) -> Report:
    sysm = artin.build_coxeter(args.type)
    word = artin.parse_artin_word(sysm, args.word)
    rep = Report("artin nf", inputs={"type": sysm.name, "word": args.word})
    nf = artin.normal_form(sysm.name, word)
    rep.results["normal_form"] = nf.to_dict()
    rep.results["text"] = str(nf)
    rep.results["abelianization"] = artin.abelianization(sysm.name, word)
    back = artin.normal_form(sysm.name, nf.to_word())
    rep.check("normal form word has the same normal form", back == nf, "TRIVIAL")
    return rep


def cmd_plucker(args) -> Report:
    p = plucker.dual_invariants(args.degree, args.nodes, args.cusps)
    rep = Report("plucker", inputs={"degree": args.degree, "nodes": args.nodes, "cusps": args.cusps})
    rep.results["record"] = p.to_dict()
    rep.results["dual"] = p.dual().to_dict()
    c = plucker.consistency(p)
    rep.results["cusp_relation_as_printed_value"] = c["cusp_relation_as_printed_value"]
    rep.check("bitangent relation holds", c["bitangent_relation"], "DERIVED")
    rep.check("cusp relation (d_dual - 2 form) holds", c["cusp_relation"], "DERIVED", f"value {c['cusp_relation_value']}")
    rep.check("dualising twice returns the record", plucker.duality_roundtrip(p)["ok"], "DERIVED")
    return rep


def cmd_ade(args) -> Report:
    t = ade.SingularityType.parse(args.type)
    rep = Report("ade info", inputs={"type": t.name})
    basis = ade.milnor_basis(t.polynomial)
    mu = ade.milnor_number(t)
    rep.results.update({
        "mu": mu,
        "branches": t.branches,
        "fiber_rank": ade.fiber_rank(t),
        "basis": [ade.format_monomial(m) for m in basis],
        "deformation": ade.deformation_polynomial(t)["text"],
        "monodromy_order": ade.classical_monodromy_order(t),
    })
    rep.check("|basis| = mu", len(basis) == mu, "DERIVED")
    rep.check("transvections satisfy the diagram relations", all(ade.diagram_relations(t).values()), "DERIVED")
    return rep


def cmd_robb(args) -> Report:
    lo = args.degree if args.degree else 4
    hi = args.degree if args.degree else 8
    if lo < 4:
        raise ValueError("Robb's quotient needs degree >= 4")
    return acceptance.criterion_robb(range(lo, hi + 1))


def cmd_verify_all(args) -> Report:
    return acceptance.run_all(only=args.only, coset_limit=args.coset_limit, depth=args.depth, golden_path=args.golden)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--coset-limit", type=int, default=DEFAULT_COSET_LIMIT)
    common.add_argument("--depth", type=int, default=10, help="free-pair certificate word length")
    common.add_argument("--golden", help="alternative golden data file for the quartic")

    ap = argparse.ArgumentParser(prog="curvegroups", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quartic", parents=[common], help="three-cuspidal quartic, end to end")
    p.add_argument("--skip-enumeration", action="store_true")
    p.set_defaults(func=cmd_quartic)

    p = sub.add_parser("zvk", parents=[common], help="presentations from a monodromy JSON file")
    p.add_argument("file")
    p.set_defaults(func=cmd_zvk)

    p = sub.add_parser("artin", parents=[common], help="Artin groups of finite type")
    asub = p.add_subparsers(dest="artin_command", required=True)
    q = asub.add_parser("nf", parents=[common], help="Garside normal form")
    q.add_argument("--type", required=True)
    q.add_argument("--word", required=True)
    q.set_defaults(func=cmd_artin)

    p = sub.add_parser("plucker", parents=[common], help="Plucker invariants")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--nodes", type=int, default=0)
    p.add_argument("--cusps", type=int, default=0)
    p.set_defaults(func=cmd_plucker)

    p = sub.add_parser("ade", parents=[common], help="simple singularities")
    asub = p.add_subparsers(dest="ade_command", required=True)
    q = asub.add_parser("info", parents=[common])
    q.add_argument("--type", required=True)
    q.set_defaults(func=cmd_ade)

    p = sub.add_parser("robb", parents=[common], help="Robb's quotient relations")
    p.add_argument("--degree", type=int, help="single degree (default 4..8)")
    p.set_defaults(func=cmd_robb)

    p = sub.add_parser("verify-all", parents=[common], help="run the acceptance suite")
    p.add_argument("--only", choices=acceptance.MODULES)
    p.set_defaults(func=cmd_verify_all)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rep = args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        # JSONDecodeError, WordSyntaxError and the module errors are ValueErrors
        kind = "syntax error" if isinstance(exc, WordSyntaxError) else "error"
        print(f"{kind}: {exc}", file=sys.stderr)
        return 2
    print(rep.to_json() if args.json else rep.to_text())
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
