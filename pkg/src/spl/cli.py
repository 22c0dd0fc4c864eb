"""``spl`` command line.

Exit codes: 0 all checks verified, 1 some check failed, 2 usage error,
3 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from fractions import Fraction
from typing import List, Optional

from . import __version__, bezout, groebner, hilbert, symbolic, verify
from .cache import DiskCache
from .catalog import build, parse_config_id
from .errors import BudgetExceeded, ParseError, SplError
from .idealops import Ideal
from .polyexpr import dump_ideal_file, load_ideal_file, parse_poly, print_poly
from .polyring import MonomialOrder
from .report import Report

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

USAGE_GRAMMAR = f"""ideal specs: {verify.GRAMMAR}
configs:     fermat_like:<n> (n >= 3) | a3 | b3:<n> (n >= 1)"""


class UsageError(Exception):
    pass


def _config(s: str) -> str:
    try:
        parse_config_id(s)
    except SplError as e:
        raise argparse.ArgumentTypeError(str(e))
    return s


def _pair(s: str):
    try:
        m, r = s.split(",")
        return int(m), int(r)
    except ValueError:
        raise argparse.ArgumentTypeError(f"pair {s!r}: expected m,r")


def _int_list(s: str) -> List[int]:
    try:
        return [int(v) for v in s.split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{s!r}: expected comma separated integers")


# -- subcommands ------------------------------------------------------------------


def cmd_gb(args) -> Report:
    ring, gens = load_ideal_file(args.file)
    order = MonomialOrder.from_name(args.order)
    t0 = time.monotonic()
    G = groebner.buchberger(gens, order)
    rep = Report("gb", {"file": args.file, "order": order.name})
    rep.timings_ms["buchberger"] = (time.monotonic() - t0) * 1000
    rep.add("basis", "verified", [print_poly(g) for g in G.basis])
    rep.add("size", "verified", len(G.basis))
    if args.check:
        rep.check("s-pairs reduce to zero", groebner.check_groebner(G))
    if args.out:
        dump_ideal_file(args.out, G.ring, list(G.basis))
    return rep


def cmd_member(args) -> Report:
    spec = verify.parse_spec(args.ideal)
    ring = spec.ring()
    f = parse_poly(args.poly, ring)
    rep = Report("member", {"ideal": args.ideal, "poly": args.poly})
    if spec.kind == "sym":
        ok = symbolic.symbolic_membership(f, spec.config, spec.exponent)
        how = "componentwise"
    else:
        ok = spec.ideal().contains(f)
        how = "normal form"
    rep.check("member", ok, {"member": ok, "method": how})
    return rep


def cmd_symbolic(args) -> Report:
    sp = symbolic.symbolic_power(args.config, args.m)
    rep = Report("symbolic", {"config": args.config, "m": args.m})
    rep.timings_ms["intersection"] = sp.seconds * 1000
    rep.add("generators", "verified", len(sp.gens))
    rep.add("alpha", "verified", sp.alpha())
    rep.add("omega", "verified", sp.omega())
    if args.check:
        ok = all(symbolic.symbolic_membership(g, args.config, args.m) for g in sp.gens)
        rep.check("generators pass componentwise membership", ok)
    if args.out:
        dump_ideal_file(args.out, sp.base.ring, sp.gens)
    return rep


def _facts(config: str, ms: Optional[List[int]]):
    return [bezout.computed_base_fact(config, m) for m in (ms or [])]


def cmd_alpha(args) -> Report:
    facts = _facts(args.config, args.base_facts)
    use_bezout = args.bezout or bool(facts)
    res = symbolic.alpha_symbolic(args.config, args.m, args.strategy, base_facts=facts, use_bezout=use_bezout)
    rep = Report("alpha", {"config": args.config, "m": args.m, "strategy": args.strategy,
                           "bezout": use_bezout, "base_facts": args.base_facts or []})
    rep.add("alpha", "verified", res.exact if res.is_exact else [res.lower, res.upper])
    rep.add("evidence", "verified", res.evidence)
    if "certificate" in res.evidence:
        rep.certificates.append(res.evidence["certificate"])
    return rep


def cmd_waldschmidt(args) -> Report:
    wr = symbolic.waldschmidt_report(args.config, args.m_max, args.strategy, use_bezout=args.bezout)
    rep = Report("waldschmidt", {"config": args.config, "m_max": args.m_max, "strategy": args.strategy})
    for m, a, r in wr.rows:
        rep.add(f"alpha(I^({m}))", "verified", {"alpha": str(a), "upper_ratio": str(r)})
    rep.add("certified lower bound", "verified", str(wr.lower))
    rep.add("inf upper ratio", "verified", str(wr.upper))
    rep.add("pinched", "verified" if wr.pinched is not None else "skipped",
            str(wr.pinched) if wr.pinched is not None else "interval")
    return rep


def cmd_contain(args) -> Report:
    budget = groebner.Budget(max_basis=args.budget_basis, seconds=args.budget_seconds)
    res = verify.check_containment(args.left, args.right, budget)
    rep = Report("contain", {"left": args.left, "right": args.right})
    rep.timings_ms.update({k: v * 1000 for k, v in res.timings.items()})
    rep.check("containment", res.holds,
              {"holds": res.holds, "witness": res.witness_digest() or None, "source": res.witness_source or None})
    if res.witness is not None and args.witness_out:
        with open(args.witness_out, "w") as fh:
            fh.write(print_poly(res.witness) + "\n")
    rep.notes.append("HOLDS" if res.holds else f"FAILS: witness {res.witness_digest()} ({res.witness_source})")
    return rep


def cmd_hh(args) -> Report:
    budget = groebner.Budget(max_basis=args.budget_basis, seconds=args.budget_seconds)
    return verify.hh_suite(args.config, args.r_max, budget, jobs=args.jobs)


def cmd_grid(args) -> Report:
    budget = groebner.Budget(max_basis=args.budget_basis, seconds=args.budget_seconds)
    return verify.resurgence_grid(args.config, args.pairs, budget, jobs=args.jobs)


def cmd_bezout(args) -> Report:
    N = build(args.config)
    facts = _facts(args.config, args.base_facts)
    rep = Report("bezout", {"config": args.config, "m": args.m, "d": args.d, "base_facts": args.base_facts or []})
    if args.replay:
        with open(args.replay) as fh:
            cert = bezout.Certificate.loads(fh.read())
        claim = bezout.ReductionClaim(N.incidence, cert.claim_d, tuple(cert.claim_mults))
        rep.check("replay", bezout.replay(cert, claim), cert.bound)
        return rep
    if args.d is None:
        cert = bezout.max_certified(N.incidence, args.m, facts, cap=symbolic.power_upper_bound(N, args.m))
        if cert is None:
            rep.add("certificate", "failed", "inconclusive at every degree")
            return rep
    else:
        claim = bezout.ReductionClaim.uniform(N.incidence, args.d, args.m)
        cert = bezout.certify_lower_bound(claim, facts)
        if not cert:
            rep.add("certificate", "failed", {"inconclusive": cert.reason})
            return rep
    claim = bezout.ReductionClaim(N.incidence, cert.claim_d, tuple(cert.claim_mults))
    rep.check("certificate", bezout.replay(cert, claim), {"alpha_lower_bound": cert.bound,
                                                          "terminal": cert.terminal["kind"],
                                                          "rounds": len(cert.rounds)})
    rep.certificates.append(cert.to_json())
    if args.cert_out:
        with open(args.cert_out, "w") as fh:
            fh.write(cert.dumps() + "\n")
    return rep


def cmd_resolution(args) -> Report:
    if args.family == "fermat_like":
        return verify.resolution_check_fermat_like(args.n)
    if args.r is None:
        raise UsageError("--r is required for --family b3")
    return verify.resolution_check_bn_power(args.n, args.r)


def _ideal_from(spec_text: str) -> Ideal:
    return verify.parse_spec(spec_text).ideal()


def cmd_hilbert(args) -> Report:
    I = _ideal_from(args.ideal)
    hs = hilbert.hilbert_series(I)
    rep = Report("hilbert", {"ideal": args.ideal})
    rep.add("numerator", "verified", hilbert.format_tpoly(hs.numerator))
    rep.add("series", "verified", str(hs))
    rep.add("dimension", "verified", hs.dimension)
    rep.add("degree", "verified", hs.multiplicity)
    return rep


def cmd_beta(args) -> Report:
    I = _ideal_from(args.ideal)
    rep = Report("beta", {"ideal": args.ideal})
    rep.add("beta", "verified", hilbert.beta(I))
    rep.add("omega", "verified", hilbert.omega(I))
    rep.add("alpha", "verified", hilbert.alpha(I))
    return rep


def cmd_tables(args) -> Report:
    return verify.reproduce_tables()


def cmd_report(args) -> Report:
    if args.validate:
        import jsonschema

        from .report import SCHEMA

        with open(args.validate) as fh:
            obj = json.load(fh)
        rep = Report("report", {"validate": args.validate})
        try:
            jsonschema.validate(obj, SCHEMA)
            rep.check("schema", True)
        except jsonschema.ValidationError as e:
            rep.check("schema", False, e.message)
        return rep
    return verify.quick_report()


# -- plumbing ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write the JSON report here")
    common.add_argument("--csv", metavar="PATH", help="write a flat CSV projection here")
    common.add_argument("--budget-seconds", type=float, default=600.0)
    common.add_argument("--budget-basis", type=int, default=20000)
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    common.add_argument("--no-cache", action="store_true", help="skip the on-disk Gröbner cache")
    common.add_argument("-q", "--quiet", action="store_true")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="spl", description="Symbolic powers of line and point configuration ideals.",
                                epilog=USAGE_GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--version", action="version", version=f"spl {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_, epilog=USAGE_GRAMMAR,
                            formatter_class=argparse.RawDescriptionHelpFormatter)
        sp.set_defaults(func=fn)
        return sp

    sp = add("gb", cmd_gb, "reduced Gröbner basis of a .sid file")
    sp.add_argument("file")
    sp.add_argument("--order", default="grevlex")
    sp.add_argument("--check", action="store_true")
    sp.add_argument("--out")

    sp = add("member", cmd_member, "ideal membership")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--poly", required=True)

    sp = add("symbolic", cmd_symbolic, "full symbolic power by component intersection")
    sp.add_argument("--config", type=_config, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--check", action="store_true")
    sp.add_argument("--out")

    sp = add("alpha", cmd_alpha, "initial degree of a symbolic power")
    sp.add_argument("--config", type=_config, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--strategy", choices=["sandwich", "exact", "full"], default="sandwich")
    sp.add_argument("--base-facts", type=_int_list, help="orders m whose exact α feeds the Bezout prover (implies --bezout)")
    sp.add_argument("--bezout", action="store_true", help="let a Bezout certificate raise the sandwich lower bound")

    sp = add("waldschmidt", cmd_waldschmidt, "Waldschmidt constant bounds")
    sp.add_argument("--config", type=_config, required=True)
    sp.add_argument("--m-max", type=int, required=True)
    sp.add_argument("--strategy", choices=["sandwich", "exact", "full"], default="sandwich")
    sp.add_argument("--bezout", action="store_true")

    sp = add("contain", cmd_contain, "containment of two ideal specs")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.add_argument("--witness-out")

    sp = add("hh", cmd_hh, "Harbourne-Huneke containment grid")
    sp.add_argument("--config", type=_config, required=True)
    sp.add_argument("--r-max", type=int, default=2)

    sp = add("bezout", cmd_bezout, "Bezout reduction certificates")
    sp.add_argument("--config", type=_config, required=True)
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--d", type=int)
    sp.add_argument("--base-facts", type=_int_list)
    sp.add_argument("--cert-out")
    sp.add_argument("--replay", metavar="CERT")

    sp = add("resolution", cmd_resolution, "free resolution checks")
    sp.add_argument("--family", choices=["fermat_like", "b3"], required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int)

    sp = add("hilbert", cmd_hilbert, "Hilbert series, dimension and degree")
    sp.add_argument("--ideal", required=True)

    sp = add("beta", cmd_beta, "beta, omega and alpha of an ideal")
    sp.add_argument("--ideal", required=True)

    sp = add("grid", cmd_grid, "symbolic/ordinary containment grid")
    sp.add_argument("--config", type=_config, required=True)
    sp.add_argument("--pairs", type=_pair, nargs="+", required=True)

    add("tables", cmd_tables, "regenerate both tables and flag discrepancies")

    sp = add("report", cmd_report, "quick verification bundle, or validate a report file")
    sp.add_argument("--validate", metavar="PATH")
    return p


def _emit(rep: Report, args):
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(rep.dumps() + "\n")
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(rep.to_csv())
    if not args.quiet:
        print(rep.render())


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    budget = groebner.Budget(max_basis=args.budget_basis, seconds=args.budget_seconds)
    cache = None if args.no_cache else DiskCache()
    t0 = time.monotonic()
    try:
        with groebner.budget_scope(budget), groebner.cache_scope(cache):
            rep = args.func(args)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        rep = Report(args.command, {"argv": argv if argv is not None else sys.argv[1:]})
        rep.add("budget", "skipped", str(e))
        _emit(rep, args)
        return EXIT_BUDGET
    except (UsageError, ParseError, SplError, OSError) as e:
        print(f"spl {args.command}: {e}", file=sys.stderr)
        print(USAGE_GRAMMAR, file=sys.stderr)
        return EXIT_USAGE
    rep.timings_ms.setdefault("total", (time.monotonic() - t0) * 1000)
    _emit(rep, args)
    return EXIT_OK if rep.ok else EXIT_FAILED


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
