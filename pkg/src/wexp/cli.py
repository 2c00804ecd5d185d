"""Command-line front end: checks, surveys, density runs, lattice listings."""

from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys
import time
from dataclasses import asdict, replace

from . import __version__
from .caps import DEFAULT_CAPS, Caps, OverCapError
from .constructors import (
    make_agl,
    make_alternating,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_psl2,
    make_symmetric,
)
from .groupfile import GroupFileError, load_group_file
from .lattice import all_subgroup_classes
from .perm import Permutation, PermGroup
from .predicates import (
    FALSE,
    TRUE,
    UNKNOWN,
    PredicateReport,
    density_series,
    is_exp_simple_definitional,
    is_exp_simple_quotient,
    is_exp_trivial_report,
    is_exponential,
    is_minimal_wexp_nonsolvable,
    is_weakly_exponential,
    is_wexp_solvable,
    survey_psl2,
)
from .report import Report, verify_report
from .structure import (
    element_table,
    exponent,
    generating_indices,
    group_is_nilpotent,
    group_is_solvable,
    normal_subgroups,
)

PREDICATES = (
    "exponential",
    "exp-trivial",
    "exp-simple",
    "weakly-exponential",
    "wexp-solvable",
    "minimal-wexp-nonsolvable",
    "exponent",
    "solvable",
    "nilpotent",
)

_TAG_RE = re.compile(r"^(S|A|D|C|PSL2|AGL):(.+)$")


def build_group(spec: str, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """Build a group from a spec: builtin tags, '*' products, or a file path."""
    factors = [f.strip() for f in spec.split("*")]
    if not all(factors):
        raise ValueError(f"empty factor in group spec {spec!r}")
    group = _build_factor(factors[0], caps)
    for factor in factors[1:]:
        group = make_direct_product(group, _build_factor(factor, caps), caps)
    return group


def _build_factor(spec: str, caps: Caps) -> PermGroup:
    match = _TAG_RE.match(spec)
    if match is None:
        if os.path.exists(spec):
            group = load_group_file(spec)
        else:
            raise ValueError(f"unrecognized group spec {spec!r} (not a builtin tag or an existing file)")
    else:
        tag, arg = match.groups()
        try:
            if tag == "AGL":
                n_text, p_text = arg.split(",")
                group = make_agl(int(n_text), int(p_text), caps)
            else:
                value = int(arg)
                maker = {
                    "S": make_symmetric,
                    "A": make_alternating,
                    "C": make_cyclic,
                    "D": make_dihedral,
                }.get(tag)
                group = maker(value) if maker else make_psl2(value, caps=caps)
        except ValueError as exc:
            raise ValueError(f"bad group spec {spec!r}: {exc}") from exc
    if group.degree > caps.degree_cap:
        raise ValueError(f"degree {group.degree} exceeds cap {caps.degree_cap}")
    return group


def _caps_from_args(args) -> Caps:
    caps = DEFAULT_CAPS
    if getattr(args, "element_cap", None) is not None:
        caps = replace(caps, element_cap=args.element_cap)
    if getattr(args, "lattice_cap", None) is not None:
        caps = replace(caps, lattice_cap=args.lattice_cap)
    return caps


def _make_report(command, spec, group, rep: PredicateReport, caps: Caps) -> Report:
    return Report(
        tool=f"wexp {__version__}",
        command=command,
        group_spec=spec,
        degree=group.degree,
        order=group.order(),
        group_generators=[str(g) for g in group.generators],
        predicate=rep.predicate,
        verdict=rep.verdict,
        certificate=rep.certificate,
        millis=rep.millis,
        caps=asdict(caps),
    )


def _emit_report(report: Report, as_json: bool) -> None:
    print(report.to_json() if as_json else report.to_text())


def _dispatch_predicate(group, predicate, sub_gens, caps: Caps) -> PredicateReport:
    if predicate in ("exponential", "weakly-exponential", "exp-trivial") and not sub_gens:
        raise ValueError(f"predicate {predicate} requires --subgroup")
    if predicate == "exponential":
        return is_exponential(group, sub_gens, caps)
    if predicate == "weakly-exponential":
        return is_weakly_exponential(group, sub_gens, caps)
    if predicate == "exp-trivial":
        return is_exp_trivial_report(group, sub_gens, caps)
    if predicate == "exp-simple":
        if group.order() <= caps.lattice_cap:
            rep = is_exp_simple_definitional(group, caps)
            cross = is_exp_simple_quotient(group, caps)
            if cross.verdict != rep.verdict:
                raise AssertionError("exp-simple routes disagree; this is a bug")
            rep.certificate["quotient_route_agrees"] = True
            return rep
        return is_exp_simple_quotient(group, caps)
    if predicate == "wexp-solvable":
        return is_wexp_solvable(group, caps)
    if predicate == "minimal-wexp-nonsolvable":
        return is_minimal_wexp_nonsolvable(group, caps)
    if predicate == "exponent":
        t0 = time.perf_counter()
        value = exponent(element_table(group, caps.element_cap))
        millis = round((time.perf_counter() - t0) * 1000.0, 3)
        return PredicateReport("exponent", str(value), {"kind": "exponent", "value": value}, millis)
    if predicate == "solvable":
        t0 = time.perf_counter()
        value = group_is_solvable(group)
        millis = round((time.perf_counter() - t0) * 1000.0, 3)
        return PredicateReport("solvable", TRUE if value else FALSE, {"kind": "derived-series"}, millis)
    if predicate == "nilpotent":
        t0 = time.perf_counter()
        value = group_is_nilpotent(group)
        millis = round((time.perf_counter() - t0) * 1000.0, 3)
        return PredicateReport("nilpotent", TRUE if value else FALSE, {"kind": "lower-central-series"}, millis)
    raise ValueError(f"unknown predicate {predicate!r}")


def run_check(args) -> int:
    caps = _caps_from_args(args)
    try:
        group = build_group(args.group, caps)
        sub_gens = [Permutation.parse(s, group.degree) for s in (args.subgroup or [])]
    except (ValueError, GroupFileError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        rep = _dispatch_predicate(group, args.predicate, sub_gens, caps)
    except OverCapError as exc:
        rep = PredicateReport(args.predicate, UNKNOWN, {"kind": "over-cap", "detail": str(exc)})
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit_report(_make_report("check", args.group, group, rep, caps), args.json)
    return 3 if rep.verdict == UNKNOWN else 0


def run_survey(args) -> int:
    caps = _caps_from_args(args)
    try:
        rows = survey_psl2(args.qmax, caps, args.full_cap)
    except (ValueError, OverCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        doc = {"tool": f"wexp {__version__}", "command": "survey-psl",
               "qmax": args.qmax, "caps": asdict(caps), "rows": rows}
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        header = f"{'q':>4} {'p':>4} {'d':>2} {'order':>8} {'classifier':>10} {'route':>12} {'computed':>16} {'status':>18}"
        print(header)
        for r in rows:
            print(f"{r['q']:>4} {r['p']:>4} {r['d']:>2} {r['order']:>8} "
                  f"{str(r['classifier']).lower():>10} {r['route']:>12} {r['computed']:>16} {r['status']:>18}")
    if args.outdir:
        os.makedirs(args.outdir, exist_ok=True)
        csv_path = os.path.join(args.outdir, "survey.csv")
        with open(csv_path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["q", "p", "d", "order", "classifier", "route", "computed", "status"])
            for r in rows:
                writer.writerow([r["q"], r["p"], r["d"], r["order"],
                                 r["classifier"], r["route"], r["computed"], r["status"]])
        from .figures import save_survey_figure
        save_survey_figure(rows, os.path.join(args.outdir, "survey.png"))
    return 1 if any(r["status"] == "DISAGREE" for r in rows) else 0


def run_density(args) -> int:
    caps = _caps_from_args(args)
    try:
        rows = density_series(args.nmax, caps)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        doc = {"tool": f"wexp {__version__}", "command": "density", "nmax": args.nmax,
               "rows": [{"n": n, "w": w, "pi": pi, "ratio": ratio} for n, w, pi, ratio in rows]}
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(f"{'n':>10} {'w(n)':>8} {'pi(n)':>8} {'ratio':>8}")
        for n, w, pi, ratio in rows:
            print(f"{n:>10} {w:>8} {pi:>8} {ratio:>8.4f}")
    if args.outdir:
        os.makedirs(args.outdir, exist_ok=True)
        with open(os.path.join(args.outdir, "density.csv"), "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["n", "w", "pi", "ratio"])
            writer.writerows(rows)
        from .figures import save_density_figure
        save_density_figure(rows, os.path.join(args.outdir, "density.png"))
    return 0


def run_lattice(args) -> int:
    caps = _caps_from_args(args)
    try:
        group = build_group(args.group, caps)
        rows = _lattice_rows(group, args.what, caps)
    except OverCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, GroupFileError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        doc = {"tool": f"wexp {__version__}", "command": "lattice", "group_spec": args.group,
               "degree": group.degree, "order": group.order(), "what": args.what,
               "caps": asdict(caps), "rows": rows}
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(f"group {args.group}: degree {group.degree}, order {group.order()}; listing {args.what}")
        for row in rows:
            parts = [f"{k}={v}" for k, v in row.items() if k != "generators"]
            line = "  " + " ".join(parts)
            if row.get("generators"):
                line += "  gens: " + "; ".join(row["generators"])
            print(line)
    return 0


def _lattice_rows(group: PermGroup, what: str, caps: Caps):
    order = group.order()
    if what in ("subgroups", "maximals"):
        lattice = all_subgroup_classes(group, caps)
        classes = lattice.classes if what == "subgroups" else lattice.maximal_classes()
        return [{
            "order": cls.order,
            "index": order // cls.order,
            "class_size": cls.class_size,
            "normalizer_order": cls.normalizer_order,
            "maximal": cls.is_maximal,
            "generators": [str(g) for g in cls.generators],
        } for cls in classes]
    table = element_table(group, caps.element_cap)
    if what == "normals":
        return [{
            "order": len(n),
            "index": order // len(n),
            "generators": [str(table.perm(i)) for i in generating_indices(table, n)],
        } for n in normal_subgroups(table)]
    ct = table.classes()
    return [{
        "rep": str(table.perm(r)),
        "element_order": ct.orders[i],
        "class_size": ct.sizes[i],
    } for i, r in enumerate(ct.reps)]


def run_verify(args) -> int:
    try:
        with open(args.report, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    ok, problems = verify_report(doc)
    for problem in problems:
        print(f"FAIL: {problem}")
    if ok:
        print("certificate verified")
        return 0
    return 1


def _add_cap_flags(sub) -> None:
    sub.add_argument("--element-cap", type=int, default=None,
                     help="max group order for exhaustive element enumeration")
    sub.add_argument("--lattice-cap", type=int, default=None,
                     help="max group order for full subgroup-lattice enumeration")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="wexp",
        description="Finite-group predicates around exponential and weakly exponential subgroups.")
    parser.add_argument("--version", action="version", version=f"wexp {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    check = subs.add_parser("check", help="decide one predicate on one group")
    check.add_argument("--group", required=True,
                       help="S:n A:n C:n D:n PSL2:q AGL:n,p, '*' products, or a group file path")
    check.add_argument("--predicate", required=True, choices=PREDICATES)
    check.add_argument("--subgroup", action="append",
                       help="subgroup generator in cycle notation; repeat for several")
    check.add_argument("--json", action="store_true", help="emit a JSON report")
    _add_cap_flags(check)
    check.set_defaults(func=run_check)

    survey = subs.add_parser("survey-psl", help="classifier vs computation over PSL(2,q)")
    survey.add_argument("--qmax", type=int, default=17)
    survey.add_argument("--full-cap", type=int, default=None,
                        help="max order decided exhaustively (default: lattice cap)")
    survey.add_argument("--json", action="store_true")
    survey.add_argument("--outdir", help="write survey.csv and survey.png here")
    _add_cap_flags(survey)
    survey.set_defaults(func=run_survey)

    density = subs.add_parser("density", help="density of wexp-solvable PSL(2,p) over primes")
    density.add_argument("--nmax", type=int, default=10 ** 6)
    density.add_argument("--json", action="store_true")
    density.add_argument("--outdir", help="write density.csv and density.png here")
    _add_cap_flags(density)
    density.set_defaults(func=run_density)

    lattice = subs.add_parser("lattice", help="list subgroup classes, normals, maximals, or element classes")
    lattice.add_argument("--group", required=True)
    lattice.add_argument("--what", choices=("subgroups", "normals", "maximals", "classes"),
                         default="subgroups")
    lattice.add_argument("--json", action="store_true")
    _add_cap_flags(lattice)
    lattice.set_defaults(func=run_lattice)

    verify = subs.add_parser("verify-certificate", help="recheck a JSON report's certificate")
    verify.add_argument("report", help="path to a JSON report produced by check --json")
    verify.set_defaults(func=run_verify)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
