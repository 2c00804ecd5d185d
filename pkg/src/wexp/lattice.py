"""Subgroup enumeration up to conjugacy for desk-scale groups.

The search starts from the trivial and cyclic subgroups and repeatedly
joins a known class representative A with conjugation-orbit
representatives (under the normalizer of A) of prime-power-order
elements outside A.  Every subgroup is generated by its prime-power
elements, so the fixpoint of this join process reaches every class;
joining only normalizer-orbit representatives is enough because
conjugating the adjoined element by the normalizer of A fixes A and
moves the join within its conjugacy class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .caps import DEFAULT_CAPS, Caps, OverCapError
from .numtheory import prime_power_split
from .perm import Permutation, PermGroup
from .structure import (
    ElementTable,
    conjugate_orbit,
    element_table,
    generating_indices,
    subgroup_closure,
)


@dataclass
class SubgroupClass:
    """One conjugacy class of subgroups, held by its canonical member set."""

    members: frozenset[int]
    generators: list[Permutation]
    order: int
    class_size: int
    normalizer_order: int
    is_maximal: bool = False


class SubgroupLattice:
    """All subgroup classes of a group, sorted by (order, member set)."""

    def __init__(self, group: PermGroup, table: ElementTable,
                 classes: list[SubgroupClass], registry: dict, orbits: list):
        self.group = group
        self.table = table
        self.classes = classes
        self._registry = registry
        self._orbits = orbits

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    @property
    def n_subgroups(self) -> int:
        return sum(c.class_size for c in self.classes)

    def class_index_of(self, members) -> int:
        """Class index of a subgroup given by its member set."""
        key = frozenset(members)
        if key not in self._registry:
            raise ValueError("member set is not a subgroup of this group")
        return self._registry[key]

    def contained_up_to_conjugacy(self, i: int, j: int) -> bool:
        """Whether some conjugate of class j contains class i's members."""
        inner = self.classes[i].members
        if self.classes[j].order % self.classes[i].order:
            return False
        return any(inner <= s for s in self._orbits[j])

    def maximal_classes(self) -> list[SubgroupClass]:
        return [c for c in self.classes if c.is_maximal]


def all_subgroup_classes(group: PermGroup, caps: Caps = DEFAULT_CAPS) -> SubgroupLattice:
    """Enumerate every subgroup class of the group by closure search."""
    order = group.order()
    if order > caps.lattice_cap:
        raise OverCapError(f"group order {order} exceeds lattice cap {caps.lattice_cap}")
    table = element_table(group, cap=max(caps.element_cap, order))
    size = table.size
    half = size // 2
    whole = frozenset(range(size))

    records: list[dict] = []
    registry: dict[frozenset[int], int] = {}

    def register(members: frozenset[int]) -> int:
        if members in registry:
            return registry[members]
        orbit, normalizer, trans = conjugate_orbit(table, members)
        canon = min(orbit, key=lambda s: tuple(sorted(s)))
        mover = trans[canon]
        records.append({
            "members": canon,
            "orbit": orbit,
            "normalizer": frozenset(table.conj(n, mover) for n in normalizer),
        })
        idx = len(records) - 1
        for s in orbit:
            registry[s] = idx
        return idx

    register(frozenset({0}))
    ct = table.classes()
    for r in ct.reps:
        if r:
            register(subgroup_closure(table, [r]))

    at = 0
    while at < len(records):
        rec = records[at]
        at += 1
        base = rec["members"]
        if len(base) == size:
            continue
        base_gens = generating_indices(table, base)
        norm_gens = generating_indices(table, rec["normalizer"])
        seen = set(base)
        for t in range(1, size):
            if t in seen:
                continue
            if prime_power_split(table.orders[t]) is None:
                continue
            reach = [t]
            reached = {t}
            qi = 0
            while qi < len(reach):
                x = reach[qi]
                qi += 1
                for g in norm_gens:
                    y = table.conj(x, g)
                    if y not in reached:
                        reached.add(y)
                        reach.append(y)
            seen |= reached
            join = subgroup_closure(table, base_gens + [t], limit=half)
            register(whole if join is None else join)
    register(whole)

    sort_key = lambda i: (len(records[i]["members"]), tuple(sorted(records[i]["members"])))
    placed = sorted(range(len(records)), key=sort_key)
    renumber = {old: new for new, old in enumerate(placed)}

    classes: list[SubgroupClass] = []
    orbits: list[list[frozenset[int]]] = []
    for old in placed:
        rec = records[old]
        classes.append(SubgroupClass(
            members=rec["members"],
            generators=[table.perm(i) for i in generating_indices(table, rec["members"])],
            order=len(rec["members"]),
            class_size=len(rec["orbit"]),
            normalizer_order=len(rec["normalizer"]),
        ))
        orbits.append(rec["orbit"])
    final_registry = {s: renumber[i] for s, i in registry.items()}

    for i, cls in enumerate(classes):
        if cls.order == size:
            continue
        covered = False
        for j in range(i + 1, len(classes)):
            over = classes[j]
            if over.order == size or over.order % cls.order:
                continue
            if any(cls.members <= s for s in orbits[j]):
                covered = True
                break
        cls.is_maximal = not covered

    return SubgroupLattice(group, table, classes, final_registry, orbits)


def subgroup_from_generators(lattice: SubgroupLattice, gens) -> int:
    """Class index of the subgroup generated by the given permutations."""
    table = lattice.table
    idxs = []
    for p in gens:
        if p.degree != lattice.group.degree:
            raise ValueError("generator degree does not match the group")
        i = table.index.get(p._img)
        if i is None:
            raise ValueError(f"{p} is not an element of the group")
        idxs.append(i)
    members = subgroup_closure(table, idxs)
    return lattice.class_index_of(members)


def is_same_class(lattice: SubgroupLattice, gens_a, gens_b) -> bool:
    return subgroup_from_generators(lattice, gens_a) == subgroup_from_generators(lattice, gens_b)
