"""Structural invariants over an exhaustive element table.

Exhaustive mode indexes every element of a small group by its position in
the deterministic enumeration; subgroups are then frozensets of indices.
Operations that work above the element cap (derived series, solvability,
nilpotency) are provided separately on the stabilizer chain.
"""

from __future__ import annotations

import math

from .caps import DEFAULT_CAPS, Caps, OverCapError
from .numtheory import divisors, p_part
from .perm import Permutation, PermGroup, _compose, _conjugate, _inverse, _power


class ElementTable:
    """Every element of a group, indexed in enumeration order (identity = 0)."""

    def __init__(self, group: PermGroup):
        self.group = group
        self.tuples = list(group.raw_elements())
        self.index = {t: i for i, t in enumerate(self.tuples)}
        self.size = len(self.tuples)
        self.orders = [Permutation(t).order() for t in self.tuples]
        self.inverse_of = [self.index[_inverse(t)] for t in self.tuples]
        self.gen_ids = [self.index[g._img] for g in group.generators]
        self._class_table: "ClassTable | None" = None

    def mul(self, i: int, j: int) -> int:
        return self.index[_compose(self.tuples[i], self.tuples[j])]

    def conj(self, i: int, j: int) -> int:
        return self.index[_conjugate(self.tuples[i], self.tuples[j])]

    def pow(self, i: int, n: int) -> int:
        return self.index[_power(self.tuples[i], n)]

    def perm(self, i: int) -> Permutation:
        return Permutation(self.tuples[i])

    def index_of(self, p: Permutation) -> int:
        i = self.index.get(p._img)
        if i is None:
            raise ValueError(f"{p} is not an element of this group")
        return i

    def classes(self) -> "ClassTable":
        if self._class_table is None:
            self._class_table = ClassTable(self)
        return self._class_table


def element_table(group: PermGroup, cap: int = DEFAULT_CAPS.element_cap) -> ElementTable:
    """Build (and cache on the group) the exhaustive element table."""
    cached = getattr(group, "_element_table", None)
    if cached is not None:
        return cached
    if group.order() > cap:
        raise OverCapError(f"group order {group.order()} exceeds element cap {cap}")
    table = ElementTable(group)
    group._element_table = table
    return table


class ClassTable:
    """Conjugacy classes; the rep of each class is its least element index."""

    def __init__(self, table: ElementTable):
        self.table = table
        n = table.size
        self.class_of = [-1] * n
        self.reps: list[int] = []
        self.classes: list[list[int]] = []
        for i in range(n):
            if self.class_of[i] >= 0:
                continue
            ci = len(self.reps)
            self.reps.append(i)
            self.class_of[i] = ci
            members = [i]
            qi = 0
            while qi < len(members):
                x = members[qi]
                qi += 1
                for g in table.gen_ids:
                    y = table.conj(x, g)
                    if self.class_of[y] < 0:
                        self.class_of[y] = ci
                        members.append(y)
            self.classes.append(members)
        self.sizes = [len(c) for c in self.classes]
        self.orders = [table.orders[r] for r in self.reps]


def exponent(table: ElementTable) -> int:
    ct = table.classes()
    out = 1
    for o in ct.orders:
        out = math.lcm(out, o)
    return out


def are_conjugate(table: ElementTable, i: int, j: int) -> int | None:
    """Index of an element c with i^c = j, or None if not conjugate."""
    trans = {i: 0}
    queue = [i]
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        if x == j:
            return trans[x]
        for g in table.gen_ids:
            y = table.conj(x, g)
            if y not in trans:
                trans[y] = table.mul(trans[x], g)
                queue.append(y)
    return None


def centralizer_members(table: ElementTable, i: int) -> frozenset[int]:
    return frozenset(g for g in range(table.size) if table.conj(i, g) == i)


# -- subgroup sets ----------------------------------------------------------

def subgroup_closure(table: ElementTable, gens, limit: int | None = None) -> frozenset[int] | None:
    """Closure of the given element indices; None if it would exceed limit."""
    members = {0}
    frontier = [0]
    gen_list = sorted({g for g in gens if g != 0})
    while frontier:
        new = []
        for x in frontier:
            for g in gen_list:
                y = table.mul(x, g)
                if y not in members:
                    if limit is not None and len(members) >= limit:
                        return None
                    members.add(y)
                    new.append(y)
        frontier = new
    return frozenset(members)


def generating_indices(table: ElementTable, members) -> list[int]:
    """A short generator list for a subgroup given as a member set."""
    target = len(members)
    gens: list[int] = []
    have: frozenset[int] = frozenset({0})
    for i in sorted(members):
        if i not in have:
            gens.append(i)
            have = subgroup_closure(table, gens)
            if len(have) == target:
                break
    if len(have) != target:
        raise ValueError("member set is not closed under multiplication")
    return gens


def _span_covering(table: ElementTable, points) -> frozenset[int]:
    """Subgroup generated by an arbitrary element set."""
    gens: list[int] = []
    have: frozenset[int] = frozenset({0})
    for i in sorted(points):
        if i not in have:
            gens.append(i)
            have = subgroup_closure(table, gens)
    return have


def is_normal_set(table: ElementTable, members) -> bool:
    mset = set(members)
    return all(table.conj(x, g) in mset for x in mset for g in table.gen_ids)


def normal_closure(table: ElementTable, seeds) -> frozenset[int]:
    """Smallest normal subgroup containing the seed element indices."""
    ct = table.classes()
    union: set[int] = {0}
    for s in seeds:
        union.update(ct.classes[ct.class_of[s]])
    return _span_covering(table, union)


def normal_subgroups(table: ElementTable) -> list[frozenset[int]]:
    """All normal subgroups, as joins of class normal closures."""
    ct = table.classes()
    found = {frozenset({0})}
    for r in ct.reps:
        found.add(normal_closure(table, [r]))
    changed = True
    while changed:
        changed = False
        snapshot = sorted(found, key=lambda s: (len(s), sorted(s)))
        for i, a in enumerate(snapshot):
            for b in snapshot[i + 1:]:
                if a <= b or b <= a:
                    continue
                join = _span_covering(table, a | b)
                if join not in found:
                    found.add(join)
                    changed = True
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def core_of(table: ElementTable, members) -> frozenset[int]:
    """Intersection of all conjugates of the subgroup."""
    start = frozenset(members)
    core = set(start)
    seen = {start}
    queue = [start]
    while queue:
        s = queue.pop()
        for g in table.gen_ids:
            t = frozenset(table.conj(x, g) for x in s)
            if t not in seen:
                seen.add(t)
                queue.append(t)
                core &= t
    return frozenset(core)


def conjugate_orbit(table: ElementTable, members):
    """All conjugates of a subgroup set, with normalizer and transversal.

    Returns (orbit list, normalizer member set, transversal dict); each
    orbit entry s satisfies conjugation of the start set by trans[s] = s.
    The normalizer comes from the Schreier generators of the conjugation
    action, and the product of orbit length and normalizer order is
    checked against the group order.
    """
    start = frozenset(members)
    trans = {start: 0}
    orbit = [start]
    sgens: set[int] = set()
    qi = 0
    while qi < len(orbit):
        s = orbit[qi]
        u = trans[s]
        qi += 1
        for g in table.gen_ids:
            t = frozenset(table.conj(x, g) for x in s)
            ug = table.mul(u, g)
            if t not in trans:
                trans[t] = ug
                orbit.append(t)
            else:
                sg = table.mul(ug, table.inverse_of[trans[t]])
                if sg:
                    sgens.add(sg)
    normalizer = subgroup_closure(table, sorted(sgens))
    if len(normalizer) * len(orbit) != table.size:
        raise AssertionError("normalizer order check failed")
    return orbit, normalizer, trans


def normalizer_of_set(table: ElementTable, members) -> frozenset[int]:
    return conjugate_orbit(table, members)[1]


# -- quotients ---------------------------------------------------------------

def quotient_action(table: ElementTable, members, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """Faithful image of G/N on the right cosets of the normal subgroup N."""
    if not is_normal_set(table, members):
        raise ValueError("subgroup is not normal")
    size = table.size
    m = size // len(members)
    if m > caps.degree_cap:
        raise ValueError(f"quotient degree {m} exceeds cap {caps.degree_cap}")
    member_list = sorted(members)
    coset_of = [-1] * size
    reps: list[int] = []
    for i in range(size):
        if coset_of[i] >= 0:
            continue
        c = len(reps)
        reps.append(i)
        for x in member_list:
            coset_of[table.mul(x, i)] = c
    gens = []
    for gi in table.gen_ids:
        gens.append(Permutation.from_images(
            [coset_of[table.mul(r, gi)] + 1 for r in reps]
        ))
    quotient = PermGroup(max(m, 1), gens)
    if quotient.order() != m:
        raise AssertionError("quotient action order check failed")
    return quotient


def quotient_exponent(table: ElementTable, members) -> int:
    """Exponent of G/N computed from coset orders of class reps."""
    if not is_normal_set(table, members):
        raise ValueError("subgroup is not normal")
    mset = set(members)
    ct = table.classes()
    out = 1
    for r in ct.reps:
        k = next(k for k in divisors(table.orders[r]) if table.pow(r, k) in mset)
        out = math.lcm(out, k)
    return out


# -- derived series and friends ----------------------------------------------

def commutator_index(table: ElementTable, a: int, b: int) -> int:
    return table.mul(
        table.mul(table.inverse_of[a], table.inverse_of[b]),
        table.mul(a, b),
    )


def derived_members(table: ElementTable, members) -> frozenset[int]:
    """Derived subgroup of a subgroup given as a member set."""
    gens = generating_indices(table, members)
    dgens = sorted({commutator_index(table, a, b) for a in gens for b in gens} - {0})
    closure = subgroup_closure(table, dgens)
    qi = 0
    while qi < len(dgens):
        c = dgens[qi]
        qi += 1
        for g in gens:
            cc = table.conj(c, g)
            if cc not in closure:
                dgens.append(cc)
                closure = subgroup_closure(table, dgens)
    return closure


def is_solvable_members(table: ElementTable, members) -> bool:
    current = frozenset(members)
    while len(current) > 1:
        nxt = derived_members(table, current)
        if len(nxt) == len(current):
            return False
        current = nxt
    return True


def sylow_members(table: ElementTable, p: int) -> frozenset[int]:
    """A Sylow p-subgroup, grown by normalizer climbing from a p-element."""
    target = p_part(table.size, p)
    if target == 1:
        return frozenset({0})
    ct = table.classes()
    best, best_part = 0, 1
    for r in ct.reps:
        part = p_part(table.orders[r], p)
        if part > best_part:
            best, best_part = r, part
    pgens = [table.pow(best, table.orders[best] // best_part)]
    current = subgroup_closure(table, pgens)
    while len(current) < target:
        normalizer = normalizer_of_set(table, current)
        for n in sorted(normalizer - current):
            k = table.orders[n]
            y = table.pow(n, k // p_part(k, p))
            if y not in current:
                pgens.append(y)
                current = subgroup_closure(table, pgens)
                break
        else:
            raise AssertionError("sylow climbing stalled below the p-part")
    return current


# -- chain-level operations (no element table required) -----------------------

def group_commutator(a: Permutation, b: Permutation) -> Permutation:
    return a.inverse() * b.inverse() * a * b


def _normal_closure_group(ambient: PermGroup, seeds) -> PermGroup:
    gens = [g for g in seeds if not g.is_identity()]
    grown = PermGroup(ambient.degree, gens)
    changed = True
    while changed:
        changed = False
        for x in list(grown.generators):
            for g in ambient.generators:
                c = x.conjugate_by(g)
                if not grown.contains(c):
                    gens.append(c)
                    grown = PermGroup(ambient.degree, gens)
                    changed = True
    return grown


def group_derived_subgroup(group: PermGroup) -> PermGroup:
    comms = [
        group_commutator(a, b)
        for a in group.generators
        for b in group.generators
    ]
    return _normal_closure_group(group, comms)


def group_is_solvable(group: PermGroup) -> bool:
    current = group
    while current.order() > 1:
        nxt = group_derived_subgroup(current)
        if nxt.order() == current.order():
            return False
        current = nxt
    return True


def group_is_nilpotent(group: PermGroup) -> bool:
    current = group
    while current.order() > 1:
        comms = [
            group_commutator(g, x)
            for g in group.generators
            for x in current.generators
        ]
        nxt = _normal_closure_group(group, comms)
        if nxt.order() == current.order():
            return False
        current = nxt
    return True
