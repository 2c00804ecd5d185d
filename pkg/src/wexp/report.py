"""Self-contained run reports and independent certificate re-verification.

A report carries the group's generators and, for false verdicts, a
witness certificate with explicit permutations.  Verification rebuilds
everything from those strings using only permutations, groups, orbits,
and sifting, none of the predicate machinery that produced the verdict.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

from .numtheory import divisors
from .perm import Permutation, PermGroup

VERIFY_ELEMENT_LIMIT = 200000


@dataclass
class Report:
    """One CLI run, serializable as a single JSON document."""

    tool: str
    command: str
    group_spec: str
    degree: int
    order: int
    group_generators: list[str]
    predicate: str
    verdict: str
    certificate: dict
    millis: float
    caps: dict

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [
            f"tool:      {self.tool}",
            f"command:   {self.command}",
            f"group:     {self.group_spec} (degree {self.degree}, order {self.order})",
            f"predicate: {self.predicate}",
            f"verdict:   {self.verdict}",
            f"millis:    {self.millis}",
            "caps:      " + " ".join(f"{k}={v}" for k, v in sorted(self.caps.items())),
            "certificate:",
        ]
        cert = json.dumps(self.certificate, sort_keys=True, indent=2)
        lines.extend("  " + line for line in cert.splitlines())
        return "\n".join(lines)


def verify_report(doc: dict):
    """Recheck a report's certificate from scratch; (ok, problem list)."""
    try:
        degree = int(doc["degree"])
        gen_strs = list(doc["group_generators"])
    except (KeyError, TypeError, ValueError):
        return False, ["report lacks a degree or group generator list"]
    try:
        gens = [Permutation.parse(s, degree) for s in gen_strs]
        group = PermGroup(degree, gens)
    except ValueError as exc:
        return False, [f"cannot rebuild the group: {exc}"]
    problems = []
    if "order" in doc and group.order() != doc["order"]:
        problems.append(f"stated order {doc['order']} != recomputed {group.order()}")
    problems.extend(_verify_certificate(group, doc.get("certificate") or {}))
    return not problems, problems


def _verify_certificate(group: PermGroup, cert: dict) -> list[str]:
    kind = cert.get("kind")
    if kind in (None, "exhaustion", "search-exhausted", "exponent",
                "derived-series", "lower-central-series", "over-cap"):
        return []
    handler = _HANDLERS.get(kind)
    if handler is None:
        return [f"unknown certificate kind {kind!r}"]
    try:
        return handler(group, cert)
    except (KeyError, TypeError, ValueError) as exc:
        return [f"certificate malformed or inconsistent: {exc}"]


def _closure_group(group: PermGroup, gen_strs) -> PermGroup:
    gens = [Permutation.parse(s, group.degree) for s in gen_strs]
    for g in gens:
        if not group.contains(g):
            raise ValueError(f"stated generator {g} is not an element of the group")
    return PermGroup(group.degree, gens)


def _parse_pair(group: PermGroup, cert: dict):
    x = Permutation.parse(cert["x"], group.degree)
    y = Permutation.parse(cert["y"], group.degree)
    return x, y


def _check_subgroup_frame(group, cert, problems):
    sub = _closure_group(group, cert["subgroup_generators"])
    if sub.order() != cert["subgroup_order"]:
        problems.append(f"subgroup order {sub.order()} != stated {cert['subgroup_order']}")
    if sub.order() * cert["index"] != group.order():
        problems.append("stated index inconsistent with subgroup and group orders")
    return sub


def _conjugacy_class(group: PermGroup, y: Permutation, limit: int = VERIFY_ELEMENT_LIMIT):
    seen = {y}
    queue = [y]
    qi = 0
    while qi < len(queue):
        z = queue[qi]
        qi += 1
        for g in group.generators:
            c = z.conjugate_by(g)
            if c not in seen:
                if len(seen) >= limit:
                    raise ValueError("conjugacy class exceeds the verification limit")
                seen.add(c)
                queue.append(c)
    return seen


def _check_normal(group: PermGroup, gen_strs, problems):
    ngens = [Permutation.parse(s, group.degree) for s in gen_strs]
    for g in ngens:
        if not group.contains(g):
            problems.append(f"stated normal generator {g} is not in the group")
            return None
    normal = PermGroup(group.degree, ngens)
    for x in ngens:
        for g in group.generators:
            if not normal.contains(x.conjugate_by(g)):
                problems.append("stated normal subgroup is not normal")
                return normal
    return normal


def _verify_exponential_witness(group, cert):
    problems: list[str] = []
    sub = _check_subgroup_frame(group, cert, problems)
    x, y = _parse_pair(group, cert)
    if not group.contains(x):
        problems.append("witness element x is not in the group")
    if x ** cert["index"] != y:
        problems.append("y is not x raised to the index")
    if sub.contains(y):
        problems.append("y lies in the subgroup; witness refuted")
    return problems


def _verify_wexp_witness(group, cert):
    problems: list[str] = []
    sub = _check_subgroup_frame(group, cert, problems)
    x, y = _parse_pair(group, cert)
    if not group.contains(x):
        problems.append("witness element x is not in the group")
    if x ** cert["index"] != y:
        problems.append("y is not x raised to the index")
    if "y_order" in cert and y.order() != cert["y_order"]:
        problems.append("stated order of y is wrong")
    for z in _conjugacy_class(group, y):
        if sub.contains(z):
            problems.append("a conjugate of y lies in the subgroup; witness refuted")
            break
    return problems


def _verify_wexp_point_stabilizer(group, cert):
    problems: list[str] = []
    orbit = group.orbit(cert["point"])
    if "orbit_size" in cert and len(orbit) != cert["orbit_size"]:
        problems.append("stated orbit size is wrong")
    if cert["index"] != len(orbit):
        problems.append("stated index does not equal the orbit size")
    x, y = _parse_pair(group, cert)
    if not group.contains(x):
        problems.append("witness element x is not in the group")
    if x ** cert["index"] != y:
        problems.append("y is not x raised to the index")
    fixed = [q for q in orbit if y.image_of(q) == q]
    if fixed:
        problems.append(f"y fixes orbit point {fixed[0]}; witness refuted")
    return problems


def _verify_exp_trivial_fact(group, cert):
    problems: list[str] = []
    e, m = cert["exponent"], cert["index"]
    if "subgroup_order" in cert and cert["subgroup_order"] * m != group.order():
        problems.append("stated index inconsistent with subgroup and group orders")
    if (m % e == 0) != cert["divides"]:
        problems.append("stated divisibility flag is wrong")
    return problems


def _verify_exp_simple_witness(group, cert):
    problems: list[str] = []
    sub = _check_subgroup_frame(group, cert, problems)
    m, e = cert["index"], cert["exponent"]
    if m % e == 0:
        problems.append("exponent divides the index, so the subgroup is exp-trivial")
    recomputed_exp = 1
    for g in group.elements(VERIFY_ELEMENT_LIMIT):
        recomputed_exp = math.lcm(recomputed_exp, g.order())
        if not sub.contains(g ** m):
            problems.append("the subgroup is not exponential; witness refuted")
            return problems
    if recomputed_exp != e:
        problems.append(f"stated exponent {e} != recomputed {recomputed_exp}")
    return problems


def _verify_quotient_exponent_differs(group, cert):
    problems: list[str] = []
    normal = _check_normal(group, cert["normal_generators"], problems)
    if normal is None:
        return problems
    if "normal_order" in cert and normal.order() != cert["normal_order"]:
        problems.append("stated normal subgroup order is wrong")
    recomputed_exp = 1
    recomputed_qexp = 1
    for g in group.elements(VERIFY_ELEMENT_LIMIT):
        recomputed_exp = math.lcm(recomputed_exp, g.order())
        k = next(k for k in divisors(g.order()) if normal.contains(g ** k))
        recomputed_qexp = math.lcm(recomputed_qexp, k)
    if recomputed_exp != cert["exponent"]:
        problems.append("stated exponent is wrong")
    if recomputed_qexp != cert["quotient_exponent"]:
        problems.append("stated quotient exponent is wrong")
    if recomputed_qexp == recomputed_exp:
        problems.append("quotient exponent equals the exponent; witness refuted")
    return problems


def _verify_quotient_not_wexp_solvable(group, cert):
    problems: list[str] = []
    normal = _check_normal(group, cert["normal_generators"], problems)
    if normal is not None and "normal_order" in cert and normal.order() != cert["normal_order"]:
        problems.append("stated normal subgroup order is wrong")
    qdeg = cert["quotient_degree"]
    qgens = [Permutation.parse(s, qdeg) for s in cert["quotient_generators"]]
    quotient = PermGroup(qdeg, qgens)
    if normal is not None and quotient.order() * normal.order() != group.order():
        problems.append("quotient order inconsistent with the normal subgroup")
    problems.extend(_verify_certificate(quotient, cert["quotient_certificate"]))
    return problems


def _verify_wexp_solvable_fact(group, cert):
    return _verify_certificate(group, cert.get("wexp_solvable_certificate") or {})


def _verify_minimal(group, cert):
    return _verify_certificate(group, cert["wexp_witness"])


_HANDLERS = {
    "exponential-witness": _verify_exponential_witness,
    "wexp-witness": _verify_wexp_witness,
    "wexp-witness-point-stabilizer": _verify_wexp_point_stabilizer,
    "exp-trivial-fact": _verify_exp_trivial_fact,
    "exp-simple-witness": _verify_exp_simple_witness,
    "quotient-exponent-differs": _verify_quotient_exponent_differs,
    "quotient-not-wexp-solvable": _verify_quotient_not_wexp_solvable,
    "wexp-solvable-fact": _verify_wexp_solvable_fact,
    "minimal": _verify_minimal,
}
