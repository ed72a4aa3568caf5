"""Command-line front end.

Subcommands compute single polynomials, run the relation and duality
check suites, exercise the change-of-basis check, and specialize field
elements read as JSON.  Reports are emitted as UTF-8 JSON (default) or
plain text, and are deterministic for a fixed configuration and seed.
Exit codes: 0 on success / all checks passing, 1 on a failed check or
computation error, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .domains import Assignment, make_domain
from .duality import DualityChecker
from .noumi import check_daha_relations
from .paramfield import FieldElement, UnluckySpecializationError
from .polynomials import KoornwinderFamily, NonGenericParametersError

CACHE_ENV_VAR = "KOORNWINDER_CACHE_DIR"


def _parse_label(text):
    return tuple(int(part) for part in text.split(","))


def _add_common(sub, with_mode=True):
    sub.add_argument("--n", type=int, required=True, help="number of variables")
    if with_mode:
        sub.add_argument("--mode", choices=("symbolic", "specialized"),
                         default="specialized")
    sub.add_argument("--assignment", type=str, default=None,
                     help="six comma-separated rationals for the parameter "
                          "square roots (specialized mode)")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--json", dest="as_json", action="store_true", default=True)
    sub.add_argument("--text", dest="as_json", action="store_false")
    sub.add_argument("--cache-dir", type=str, default=None)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="koornwinder",
        description="Exact six-parameter Koornwinder polynomial toolkit")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("compute-e", help="nonsymmetric polynomial")
    sub.add_argument("--alpha", type=str, required=True,
                     help="comma-separated integer label")
    _add_common(sub)

    sub = commands.add_parser("compute-p", help="symmetric polynomial")
    sub.add_argument("--lambda", dest="lam", type=str, required=True,
                     help="comma-separated partition")
    _add_common(sub)

    sub = commands.add_parser("basis-check",
                              help="rank of the change of basis to monomials")
    sub.add_argument("--degree", type=int, required=True)
    _add_common(sub)

    sub = commands.add_parser("check-relations",
                              help="verify the defining operator relations")
    sub.add_argument("--degree", type=int, required=True)
    _add_common(sub)

    sub = commands.add_parser("check-duality",
                              help="verify the duality identities")
    sub.add_argument("--max-weight", type=int, required=True)
    sub.add_argument("--symbolic", action="store_true")
    _add_common(sub, with_mode=False)

    sub = commands.add_parser("specialize",
                              help="evaluate a field element JSON at an "
                                   "assignment")
    sub.add_argument("--input", type=str, default=None,
                     help="path to a field element JSON (default: stdin)")
    sub.add_argument("--assignment", type=str, default=None)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--json", dest="as_json", action="store_true", default=True)
    sub.add_argument("--text", dest="as_json", action="store_false")
    return parser


def _assignment_from(args, seed_override=None):
    if args.assignment:
        return Assignment.parse(args.assignment)
    if seed_override is not None:
        return Assignment.from_seed(seed_override)
    return Assignment.default()


def _cache_dir(args):
    return args.cache_dir or os.environ.get(CACHE_ENV_VAR) or None


def _emit(report, as_json, render_text):
    if as_json:
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))
    else:
        print(render_text(report))


def _with_redraw(args, run):
    """Run once; on an unlucky specialization re-draw the assignment
    deterministically from the seed and retry once.  An explicitly given
    assignment is never overridden."""
    try:
        return run(_assignment_from(args))
    except (UnluckySpecializationError, NonGenericParametersError):
        if args.assignment:
            raise
        retry_seed = args.seed * 1000003 + 17
        return run(_assignment_from(args, seed_override=retry_seed))


def _cmd_compute(args, symmetric):
    def run(assignment):
        domain = make_domain(args.mode, assignment)
        family = KoornwinderFamily(args.n, domain, cache_dir=_cache_dir(args))
        if symmetric:
            labeled = family.symmetric(_parse_label(args.lam))
            verified = True  # construction is self-verifying
        else:
            labeled = family.nonsymmetric(_parse_label(args.alpha))
            verified = family.verify_spectrum(labeled)
        report = labeled.to_json()
        report["verified"] = verified
        report["_text"] = "\n".join([
            "label: " + ",".join(str(x) for x in labeled.label),
            "n: %d" % args.n,
            "polynomial: " + labeled.poly.text(),
            "spectrum: " + "; ".join(str(v) for v in labeled.spectrum),
            "verified: %s" % verified,
        ])
        return report

    report = _with_redraw(args, run)
    text = report.pop("_text")
    _emit(report, args.as_json, lambda r: text)
    return 0 if report.get("verified", True) else 1


def _cmd_basis_check(args):
    def run(assignment):
        domain = make_domain(args.mode, assignment)
        family = KoornwinderFamily(args.n, domain, cache_dir=_cache_dir(args))
        return family.basis_check(args.degree)

    report = _with_redraw(args, run)
    _emit(report, args.as_json,
          lambda r: "basis n=%d degree=%d: rank %d of %d (%s)"
          % (r["n"], r["degree"], r["rank"], r["size"],
             "invertible" if r["invertible"] else "SINGULAR"))
    return 0 if report["invertible"] else 1


def _cmd_check_relations(args):
    def run(assignment):
        domain = make_domain(args.mode, assignment)
        results = check_daha_relations(args.n, args.degree, domain)
        return {"n": args.n, "degree": args.degree, "mode": args.mode,
                "results": results,
                "all_pass": all(r["status"] == "pass" for r in results)}

    report = _with_redraw(args, run)

    def render(r):
        lines = ["%s: %s" % (entry["relation"], entry["status"])
                 for entry in r["results"]]
        lines.append("all_pass: %s" % r["all_pass"])
        return "\n".join(lines)

    _emit(report, args.as_json, render)
    return 0 if report["all_pass"] else 1


def _labels_up_to(n, weight):
    from .noumi import monomial_exponents
    return monomial_exponents(n, weight)


def _partitions_up_to(n, weight):
    out = []
    for e in _labels_up_to(n, weight):
        if all(x >= 0 for x in e) and list(e) == sorted(e, reverse=True):
            out.append(e)
    return out


def _cmd_check_duality(args):
    def run(assignment):
        mode = "symbolic" if args.symbolic else "specialized"
        domain = make_domain(mode, assignment if mode == "specialized" else None)
        family = KoornwinderFamily(args.n, domain, cache_dir=_cache_dir(args))
        checker = DualityChecker(family)
        checks = []
        for alpha in _labels_up_to(args.n, args.max_weight):
            for beta in _labels_up_to(args.n, args.max_weight):
                ok = checker.check_duality_e(alpha, beta)
                checks.append({"kind": "E", "left": list(alpha),
                               "right": list(beta),
                               "status": "pass" if ok else "fail"})
        for lam in _partitions_up_to(args.n, args.max_weight):
            for mu in _partitions_up_to(args.n, args.max_weight):
                ok = checker.check_duality_p(lam, mu)
                checks.append({"kind": "P", "left": list(lam),
                               "right": list(mu),
                               "status": "pass" if ok else "fail"})
                ok = checker.check_evaluation_ratio(lam, mu)
                checks.append({"kind": "ratio", "left": list(lam),
                               "right": list(mu),
                               "status": "pass" if ok else "fail"})
        return {"n": args.n, "max_weight": args.max_weight, "mode": mode,
                "checks": checks,
                "all_pass": all(c["status"] == "pass" for c in checks)}

    report = _with_redraw(args, run)

    def render(r):
        fails = [c for c in r["checks"] if c["status"] != "pass"]
        lines = ["checks: %d" % len(r["checks"]),
                 "failures: %d" % len(fails)]
        for c in fails:
            lines.append("  %s %s | %s" % (c["kind"], c["left"], c["right"]))
        lines.append("all_pass: %s" % r["all_pass"])
        return "\n".join(lines)

    _emit(report, args.as_json, render)
    return 0 if report["all_pass"] else 1


def _cmd_specialize(args):
    if args.input:
        with open(args.input, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    else:
        payload = json.load(sys.stdin)
    element = FieldElement.from_json_value(payload)

    def run(assignment):
        value = element.specialize(assignment.values())
        return {"value": str(value),
                "assignment": assignment.as_strings()}

    report = _with_redraw(args, run)
    _emit(report, args.as_json, lambda r: r["value"])
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute-e":
            return _cmd_compute(args, symmetric=False)
        if args.command == "compute-p":
            return _cmd_compute(args, symmetric=True)
        if args.command == "basis-check":
            return _cmd_basis_check(args)
        if args.command == "check-relations":
            return _cmd_check_relations(args)
        if args.command == "check-duality":
            return _cmd_check_duality(args)
        if args.command == "specialize":
            return _cmd_specialize(args)
    except (UnluckySpecializationError, NonGenericParametersError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 1
    raise AssertionError("unhandled command")


if __name__ == "__main__":
    sys.exit(main())
