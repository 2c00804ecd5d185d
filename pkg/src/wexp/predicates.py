"""Exponentiality predicates, witness search, and prime classifiers.

Conventions that matter for correctness:

* "H exponential in G" quantifies over ALL elements x of G; membership of
  x^m in a fixed H is not constant on the conjugacy class of x, so the
  exhaustive test iterates every element.
* "H weakly exponential in G" does reduce to class representatives: the
  condition "some conjugate of H contains y" is equivalent to "the class
  of y meets H", and the class of x^m depends only on the class of x.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, replace

from .caps import DEFAULT_CAPS, Caps, OverCapError
from .constructors import make_psl2
from .lattice import all_subgroup_classes
from .numtheory import divisors, factorize, is_prime, prime_power_split, primes_below
from .perm import Permutation, PermGroup
from .structure import (
    ElementTable,
    element_table,
    exponent,
    generating_indices,
    normal_subgroups,
    normalizer_of_set,
    quotient_action,
    subgroup_closure,
    quotient_exponent,
    sylow_members,
)

TRUE = "true"
FALSE = "false"
UNKNOWN = "unknown_over_cap"

WEXP_RESIDUES_MOD_120 = frozenset({2, 3, 5, 7, 17, 43, 53, 67, 77, 103, 113})

WITNESS_STAGES = (
    "point-stabilizer",
    "sylow-normalizer",
    "cyclic",
    "dihedral",
    "triangle",
    "small-join",
)

WITNESS_SAMPLES = 512
SMALL_JOIN_LIMIT = 360


@dataclass
class PredicateReport:
    """Tri-state verdict with a self-contained certificate."""

    predicate: str
    verdict: str
    certificate: dict
    millis: float = 0.0


def _finish(predicate: str, verdict: str, certificate: dict, t0: float) -> PredicateReport:
    millis = round((time.perf_counter() - t0) * 1000.0, 3)
    return PredicateReport(predicate, verdict, certificate, millis)


def _members_from_perms(table: ElementTable, perms) -> frozenset[int]:
    idxs = []
    for p in perms:
        if p.degree != table.group.degree:
            raise ValueError("subgroup generator degree does not match the group")
        i = table.index.get(p._img)
        if i is None:
            raise ValueError(f"{p} is not an element of the group")
        idxs.append(i)
    return subgroup_closure(table, idxs)


def _perm_str(table: ElementTable, i: int) -> str:
    return str(table.perm(i))


def _subgroup_cert_fields(table: ElementTable, members) -> dict:
    gens = generating_indices(table, members)
    return {
        "subgroup_generators": [_perm_str(table, i) for i in gens],
        "subgroup_order": len(members),
        "index": table.size // len(members),
    }


def _exponential_members(table: ElementTable, members):
    """All-elements test; returns (ok, witness (x, y) indices or None)."""
    mset = frozenset(members)
    m = table.size // len(mset)
    for x in range(table.size):
        y = table.pow(x, m)
        if y not in mset:
            return False, (x, y)
    return True, None


def _weakly_exponential_members(table: ElementTable, members):
    """Class-rep test; sound because class(x^m) depends only on class(x)."""
    ct = table.classes()
    mset = frozenset(members)
    present = {ct.class_of[h] for h in mset}
    m = table.size // len(mset)
    for r in ct.reps:
        y = table.pow(r, m)
        if ct.class_of[y] not in present:
            return False, (r, y)
    return True, None


def _exp_trivial_members(table: ElementTable, members) -> bool:
    if len(members) == table.size:
        return True
    return (table.size // len(members)) % exponent(table) == 0


# -- subgroup-level predicates -------------------------------------------------

def is_exponential(group: PermGroup, subgroup_gens, caps: Caps = DEFAULT_CAPS) -> PredicateReport:
    """Whether x^{|G:H|} lies in H for every x in G."""
    t0 = time.perf_counter()
    table = element_table(group, caps.element_cap)
    members = _members_from_perms(table, subgroup_gens)
    fields = _subgroup_cert_fields(table, members)
    ok, witness = _exponential_members(table, members)
    if ok:
        cert = {"kind": "exhaustion", "elements_checked": table.size, **fields}
        return _finish("exponential", TRUE, cert, t0)
    x, y = witness
    cert = {
        "kind": "exponential-witness",
        "x": _perm_str(table, x),
        "y": _perm_str(table, y),
        "reason": "y = x^index lies outside the subgroup",
        **fields,
    }
    return _finish("exponential", FALSE, cert, t0)


def is_weakly_exponential(group: PermGroup, subgroup_gens, caps: Caps = DEFAULT_CAPS) -> PredicateReport:
    """Whether x^{|G:H|} lies in some conjugate of H for every x in G."""
    t0 = time.perf_counter()
    table = element_table(group, caps.element_cap)
    members = _members_from_perms(table, subgroup_gens)
    fields = _subgroup_cert_fields(table, members)
    ok, witness = _weakly_exponential_members(table, members)
    if ok:
        ct = table.classes()
        cert = {"kind": "exhaustion", "element_classes_checked": len(ct.reps), **fields}
        return _finish("weakly-exponential", TRUE, cert, t0)
    x, y = witness
    cert = {
        "kind": "wexp-witness",
        "x": _perm_str(table, x),
        "y": _perm_str(table, y),
        "y_order": table.orders[y],
        "reason": "the conjugacy class of y = x^index misses every conjugate of the subgroup",
        **fields,
    }
    return _finish("weakly-exponential", FALSE, cert, t0)


def is_exp_trivial(group: PermGroup, subgroup_gens, caps: Caps = DEFAULT_CAPS) -> bool:
    """Whether H = G or exp(G) divides the index of H."""
    table = element_table(group, caps.element_cap)
    members = _members_from_perms(table, subgroup_gens)
    return _exp_trivial_members(table, members)


def is_exp_trivial_report(group: PermGroup, subgroup_gens, caps: Caps = DEFAULT_CAPS) -> PredicateReport:
    t0 = time.perf_counter()
    table = element_table(group, caps.element_cap)
    members = _members_from_perms(table, subgroup_gens)
    e = exponent(table)
    m = table.size // len(members)
    verdict = len(members) == table.size or m % e == 0
    cert = {
        "kind": "exp-trivial-fact",
        "exponent": e,
        "subgroup_order": len(members),
        "index": m,
        "divides": m % e == 0,
    }
    return _finish("exp-trivial", TRUE if verdict else FALSE, cert, t0)


# -- group-level exp-simple ----------------------------------------------------

def exponential_subgroup_classes(group: PermGroup, caps: Caps = DEFAULT_CAPS):
    """All exponential subgroup classes, each flagged exp-trivial or not."""
    lattice = all_subgroup_classes(group, caps)
    table = lattice.table
    out = []
    for i, cls in enumerate(lattice.classes):
        ok, _ = _exponential_members(table, cls.members)
        if ok:
            out.append((i, cls, _exp_trivial_members(table, cls.members)))
    return out


def is_exp_simple_definitional(group: PermGroup, caps: Caps = DEFAULT_CAPS) -> PredicateReport:
    """Exp-simple via the subgroup lattice: every exponential class is exp-trivial."""
    t0 = time.perf_counter()
    lattice = all_subgroup_classes(group, caps)
    table = lattice.table
    e = exponent(table)
    exponential = 0
    for cls in lattice.classes:
        ok, _ = _exponential_members(table, cls.members)
        if not ok:
            continue
        exponential += 1
        if not _exp_trivial_members(table, cls.members):
            cert = {
                "kind": "exp-simple-witness",
                "subgroup_generators": [str(g) for g in cls.generators],
                "subgroup_order": cls.order,
                "index": table.size // cls.order,
                "exponent": e,
                "reason": "exponential subgroup whose index the exponent does not divide",
            }
            return _finish("exp-simple", FALSE, cert, t0)
    cert = {
        "kind": "exhaustion",
        "route": "definitional",
        "subgroup_classes_checked": lattice.n_classes,
        "exponential_classes": exponential,
        "exponent": e,
    }
    return _finish("exp-simple", TRUE, cert, t0)


def is_exp_simple_quotient(group: PermGroup, caps: Caps = DEFAULT_CAPS) -> PredicateReport:
    """Exp-simple via quotients: every proper quotient keeps the exponent."""
    t0 = time.perf_counter()
    table = element_table(group, caps.element_cap)
    e = exponent(table)
    checked = 0
    for n in normal_subgroups(table):
        if len(n) == table.size:
            continue
        checked += 1
        qe = quotient_exponent(table, n)
        if qe != e:
            cert = {
                "kind": "quotient-exponent-differs",
                "normal_generators": [_perm_str(table, i) for i in generating_indices(table, n)],
                "normal_order": len(n),
                "quotient_exponent": qe,
                "exponent": e,
            }
            return _finish("exp-simple", FALSE, cert, t0)
    cert = {
        "kind": "exhaustion",
        "route": "quotient",
        "proper_normal_subgroups_checked": checked,
        "exponent": e,
    }
    return _finish("exp-simple", TRUE, cert, t0)


# -- witness search ------------------------------------------------------------

def _witness_candidates(table: ElementTable):
    """Candidate subgroups in fixed priority order, as (members, info)."""
    group = table.group
    size = table.size
    ct = table.classes()

    for orbit in group.orbits():
        if len(orbit) == 1:
            continue
        pt = max(orbit)
        stab = group.point_stabilizer(pt)
        members = _members_from_perms(table, stab.generators)
        yield members, {"stage": "point-stabilizer", "point": pt}

    for p in sorted(factorize(size)):
        syl = sylow_members(table, p)
        if len(syl) == size:
            continue
        yield normalizer_of_set(table, syl), {"stage": "sylow-normalizer", "prime": p}

    invol_reps = [r for r in ct.reps if table.orders[r] == 2]
    for r in ct.reps:
        if r == 0:
            continue
        yield subgroup_closure(table, [r]), {"stage": "cyclic", "element_order": table.orders[r]}
        if table.orders[r] < 3:
            continue
        rinv = table.inverse_of[r]
        inverter = None
        for s in invol_reps:
            for t in ct.classes[ct.class_of[s]]:
                if table.conj(r, t) == rinv:
                    inverter = t
                    break
            if inverter is not None:
                break
        if inverter is not None:
            yield subgroup_closure(table, [r, inverter]), {
                "stage": "dihedral", "element_order": table.orders[r]}

    order3_reps = [r for r in ct.reps if table.orders[r] == 3]
    for s in invol_reps:
        for t3 in order3_reps:
            for target in (3, 4, 5):
                for t in ct.classes[ct.class_of[t3]]:
                    if table.orders[table.mul(s, t)] == target:
                        yield subgroup_closure(table, [s, t]), {
                            "stage": "triangle", "product_order": target}
                        break

    for i, a in enumerate(ct.reps):
        if a == 0:
            continue
        for b in ct.reps[i + 1:]:
            join = subgroup_closure(table, [a, b], limit=SMALL_JOIN_LIMIT)
            if join is not None:
                yield join, {"stage": "small-join"}


def _witness_search_exhaustive(group: PermGroup, caps: Caps):
    table = element_table(group, caps.element_cap)
    size = table.size
    tested: set[frozenset[int]] = set()
    for members, info in _witness_candidates(table):
        if len(members) == size or members in tested:
            continue
        tested.add(members)
        ok, witness = _weakly_exponential_members(table, members)
        if ok:
            continue
        x, y = witness
        return {
            "kind": "wexp-witness",
            "x": _perm_str(table, x),
            "y": _perm_str(table, y),
            "y_order": table.orders[y],
            "reason": "the conjugacy class of y = x^index misses every conjugate of the subgroup",
            **_subgroup_cert_fields(table, members),
            **info,
        }
    return None


def _witness_search_sampled(group: PermGroup, seed: int):
    """Point-stabilizer witnesses above the element cap.

    For H the stabilizer of a point, "class(x^m) misses H" is equivalent
    to "x^m fixes no point of the orbit", which needs no element table.
    """
    rng = random.Random(seed)
    for orbit in group.orbits():
        if len(orbit) == 1:
            continue
        pt = max(orbit)
        stab = group.point_stabilizer(pt)
        index = group.order() // stab.order()
        pts = set(orbit)
        for _ in range(WITNESS_SAMPLES):
            x = group.random_element(rng)
            y = x ** index
            if all(y.image_of(q) != q for q in pts):
                return {
                    "kind": "wexp-witness-point-stabilizer",
                    "stage": "point-stabilizer-sampled",
                    "point": pt,
                    "orbit_size": len(orbit),
                    "index": index,
                    "subgroup_order": stab.order(),
                    "x": str(x),
                    "y": str(y),
                    "reason": "y = x^index fixes no point of the orbit, so its class misses the stabilizer",
                }
    return None


def find_wexp_witness(group: PermGroup, caps: Caps = DEFAULT_CAPS, seed: int = 0):
    """First refuting (H, x, y) certificate in documented priority order, or None."""
    if group.order() <= caps.element_cap:
        return _witness_search_exhaustive(group, caps)
    return _witness_search_sampled(group, seed)


def is_wexp_solvable(group: PermGroup, caps: Caps = DEFAULT_CAPS, seed: int = 0) -> PredicateReport:
    """Whether every subgroup of G is weakly exponential.

    Exhaustive over the subgroup lattice when the order fits the lattice
    cap; above it, a found witness proves false and an exhausted search
    reports unknown.
    """
    t0 = time.perf_counter()
    if group.order() <= caps.lattice_cap:
        lattice = all_subgroup_classes(group, caps)
        table = lattice.table
        for cls in lattice.classes:
            if cls.order == table.size:
                continue
            ok, witness = _weakly_exponential_members(table, cls.members)
            if ok:
                continue
            x, y = witness
            cert = {
                "kind": "wexp-witness",
                "stage": "lattice",
                "x": _perm_str(table, x),
                "y": _perm_str(table, y),
                "y_order": table.orders[y],
                "reason": "the conjugacy class of y = x^index misses every conjugate of the subgroup",
                "subgroup_generators": [str(g) for g in cls.generators],
                "subgroup_order": cls.order,
                "index": table.size // cls.order,
            }
            return _finish("wexp-solvable", FALSE, cert, t0)
        cert = {
            "kind": "exhaustion",
            "subgroup_classes_checked": lattice.n_classes,
            "subgroups_total": lattice.n_subgroups,
        }
        return _finish("wexp-solvable", TRUE, cert, t0)
    witness = find_wexp_witness(group, caps, seed)
    if witness is not None:
        return _finish("wexp-solvable", FALSE, witness, t0)
    if group.order() <= caps.element_cap:
        cert = {"kind": "search-exhausted", "mode": "exhaustive-elements",
                "stages": list(WITNESS_STAGES)}
    else:
        cert = {"kind": "search-exhausted", "mode": "sampled",
                "stages": ["point-stabilizer-sampled"], "samples": WITNESS_SAMPLES}
    cert["note"] = "no witness found; not a proof of wexp-solvability"
    return _finish("wexp-solvable", UNKNOWN, cert, t0)


def is_minimal_wexp_nonsolvable(group: PermGroup, caps: Caps = DEFAULT_CAPS, seed: int = 0) -> PredicateReport:
    """Not wexp-solvable, while every proper quotient is wexp-solvable."""
    t0 = time.perf_counter()
    base = is_wexp_solvable(group, caps, seed)
    if base.verdict == TRUE:
        cert = {
            "kind": "wexp-solvable-fact",
            "reason": "the group itself is wexp-solvable",
            "wexp_solvable_certificate": base.certificate,
        }
        return _finish("minimal-wexp-nonsolvable", FALSE, cert, t0)
    if base.verdict == UNKNOWN:
        return _finish("minimal-wexp-nonsolvable", UNKNOWN, base.certificate, t0)
    table = element_table(group, caps.element_cap)
    checked = 0
    for n in normal_subgroups(table):
        if len(n) in (1, table.size):
            continue
        quotient = quotient_action(table, n, caps)
        sub = is_wexp_solvable(quotient, caps, seed)
        checked += 1
        if sub.verdict == FALSE:
            cert = {
                "kind": "quotient-not-wexp-solvable",
                "normal_order": len(n),
                "normal_generators": [_perm_str(table, i) for i in generating_indices(table, n)],
                "quotient_degree": quotient.degree,
                "quotient_generators": [str(g) for g in quotient.generators],
                "quotient_certificate": sub.certificate,
            }
            return _finish("minimal-wexp-nonsolvable", FALSE, cert, t0)
        if sub.verdict == UNKNOWN:
            cert = {
                "kind": "search-exhausted",
                "reason": "a proper quotient verdict is unknown",
                "normal_order": len(n),
            }
            return _finish("minimal-wexp-nonsolvable", UNKNOWN, cert, t0)
    cert = {
        "kind": "minimal",
        "wexp_witness": base.certificate,
        "proper_quotients_checked": checked,
    }
    return _finish("minimal-wexp-nonsolvable", TRUE, cert, t0)


# -- PSL(2,q) classifier, chainsaw, density, survey ------------------------------

@dataclass
class PslClassification:
    q: int
    p: int
    d: int
    verdict: bool
    route: str


def psl2_wexp_classifier(q: int) -> PslClassification:
    """Congruence classifier for wexp-solvability of PSL(2, p^d)."""
    split = prime_power_split(q)
    if split is None:
        raise ValueError(f"{q} is not a prime power")
    p, d = split
    if q in (4, 9):
        return PslClassification(q, p, d, True, "exceptional")
    if d % 2 == 0:
        return PslClassification(q, p, d, False, "even-d")
    if p % 120 in WEXP_RESIDUES_MOD_120:
        return PslClassification(q, p, d, True, "residue-list")
    return PslClassification(q, p, d, False, "residue-miss")


_CHAINSAW_ORDERS = {"A5": 60, "A4": 12, "S4": 24}


def psl_chainsaw(p: int, max_type: str):
    """Unique even factorization k*l = 2|M| with (p-1)/k, (p+1)/l coprime.

    Returns (k, l, k//2, l//2); the halves are the orders of the
    index-th powers of elements of orders (p-1)/2 and (p+1)/2.
    """
    if max_type not in _CHAINSAW_ORDERS:
        raise ValueError(f"unknown subgroup type {max_type!r}")
    if not is_prime(p) or p < 13:
        raise ValueError("p must be a prime >= 13")
    r8, r10 = p % 8, p % 10
    if max_type == "A5":
        admissible = r10 in (1, 9)
    elif max_type == "S4":
        admissible = r8 in (1, 7)
    else:
        admissible = r8 in (3, 5) and r10 not in (1, 9)
    if not admissible:
        raise ValueError(f"{max_type} is not a maximal subgroup of PSL(2,{p})")
    target = 2 * _CHAINSAW_ORDERS[max_type]
    found = []
    for k in divisors(p - 1):
        if k % 2 or target % k:
            continue
        l = target // k
        if l % 2 or (p + 1) % l:
            continue
        if math.gcd((p - 1) // k, (p + 1) // l) == 1:
            found.append((k, l))
    if len(found) != 1:
        raise AssertionError(f"even factorization of {target} not unique for p={p}")
    k, l = found[0]
    return k, l, k // 2, l // 2


def wexp_prime_density(n: int, caps: Caps = DEFAULT_CAPS):
    """(w, pi, ratio): wexp-solvable PSL(2,p) primes among all primes below n."""
    if n < 3:
        raise ValueError("need n >= 3")
    if n > caps.sieve_cap:
        raise ValueError(f"{n} exceeds sieve cap {caps.sieve_cap}")
    w = pi = 0
    for p in primes_below(n):
        pi += 1
        if p % 120 in WEXP_RESIDUES_MOD_120:
            w += 1
    return w, pi, w / pi


def density_series(n_max: int, caps: Caps = DEFAULT_CAPS):
    """(n, w, pi, ratio) rows at powers of ten up to and including n_max."""
    if n_max < 3:
        raise ValueError("need n_max >= 3")
    if n_max > caps.sieve_cap:
        raise ValueError(f"{n_max} exceeds sieve cap {caps.sieve_cap}")
    checkpoints = []
    mark = 10
    while mark < n_max:
        checkpoints.append(mark)
        mark *= 10
    checkpoints.append(n_max)
    primes = primes_below(n_max)
    rows = []
    w = pi = at = 0
    for cp in checkpoints:
        while at < len(primes) and primes[at] < cp:
            pi += 1
            if primes[at] % 120 in WEXP_RESIDUES_MOD_120:
                w += 1
            at += 1
        rows.append((cp, w, pi, (w / pi) if pi else 0.0))
    return rows


def survey_psl2(q_max: int, caps: Caps = DEFAULT_CAPS, full_cap: int | None = None, seed: int = 0):
    """Classifier-versus-computation survey over prime powers 4 <= q <= q_max.

    Rows with order within full_cap are decided exhaustively; larger rows
    get a witness search with the element cap raised to the group order.
    """
    if full_cap is None:
        full_cap = caps.lattice_cap
    rows = []
    for q in range(4, q_max + 1):
        if prime_power_split(q) is None:
            continue
        classified = psl2_wexp_classifier(q)
        group = make_psl2(q, caps=caps)
        row_caps = replace(caps, lattice_cap=full_cap,
                           element_cap=max(caps.element_cap, group.order()))
        computed = is_wexp_solvable(group, row_caps, seed)
        if computed.verdict == UNKNOWN:
            status = "UNCONFIRMED-true" if classified.verdict else "UNCONFIRMED-false"
        elif (computed.verdict == TRUE) == classified.verdict:
            status = "AGREE"
        else:
            status = "DISAGREE"
        rows.append({
            "q": q,
            "p": classified.p,
            "d": classified.d,
            "order": group.order(),
            "classifier": classified.verdict,
            "route": classified.route,
            "computed": computed.verdict,
            "status": status,
            "witness": computed.certificate if computed.verdict == FALSE else None,
            "millis": computed.millis,
        })
    return rows
