"""Permutations and permutation groups with a deterministic stabilizer chain.

Composition is left to right throughout: (a * b)(x) = b(a(x)), so a acts
first.  Points are 1-based in every public interface and 0-based in the
internal image tuples.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Iterable, Iterator, Sequence

from .caps import OverCapError


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Image tuple of a followed by b."""
    return tuple(b[x] for x in a)


def _inverse(a: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _power(a: tuple[int, ...], n: int) -> tuple[int, ...]:
    """a**n by binary exponentiation; n may be negative."""
    if n < 0:
        return _power(_inverse(a), -n)
    result = tuple(range(len(a)))
    sq = a
    while n:
        if n & 1:
            result = _compose(result, sq)
        sq = _compose(sq, sq)
        n >>= 1
    return result


def _conjugate(p: tuple[int, ...], by: tuple[int, ...]) -> tuple[int, ...]:
    """Image tuple of by**-1 * p * by."""
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[by[i]] = by[x]
    return tuple(out)


def _is_identity(a: tuple[int, ...]) -> bool:
    return all(i == x for i, x in enumerate(a))


class Permutation:
    """Immutable permutation of {1, ..., degree} stored as an image tuple."""

    __slots__ = ("_img",)

    def __init__(self, images: tuple[int, ...]):
        self._img = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        """Build from 1-based images, so images[i] is where point i+1 goes."""
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {list(images)}")
        return cls(tuple(x - 1 for x in images))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build from disjoint cycles of 1-based points."""
        img = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for pt in cyc:
                if not 1 <= pt <= degree:
                    raise ValueError(f"point {pt} outside 1..{degree}")
                if pt in seen:
                    raise ValueError(f"point {pt} repeated across cycles")
                seen.add(pt)
            for i, pt in enumerate(cyc):
                img[pt - 1] = cyc[(i + 1) % len(cyc)] - 1
        return cls(tuple(img))

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Permutation":
        """Parse cycle notation like '(1 2 3)(4 5)', '(1,2)', 'id' or '()'.

        The degree defaults to the largest point mentioned.
        """
        stripped = text.strip()
        if stripped in ("id", "()", ""):
            if degree is None:
                raise ValueError("identity needs an explicit degree")
            return cls.identity(degree)
        cycles: list[list[int]] = []
        current: list[int] | None = None
        numbuf = ""
        for col, ch in enumerate(text, start=1):
            if ch.isdigit():
                if current is None:
                    raise ValueError(f"column {col}: digit outside a cycle")
                numbuf += ch
                continue
            if numbuf:
                if current is None:
                    raise ValueError(f"column {col}: number outside a cycle")
                current.append(int(numbuf))
                numbuf = ""
            if ch == "(":
                if current is not None:
                    raise ValueError(f"column {col}: nested '('")
                current = []
            elif ch == ")":
                if current is None:
                    raise ValueError(f"column {col}: unmatched ')'")
                if not current:
                    raise ValueError(f"column {col}: empty cycle")
                cycles.append(current)
                current = None
            elif ch in " ,-":
                continue
            else:
                raise ValueError(f"column {col}: unexpected character {ch!r}")
        if current is not None:
            raise ValueError("unclosed '(' at end of input")
        points = [pt for cyc in cycles for pt in cyc]
        if any(pt < 1 for pt in points):
            raise ValueError("points must be >= 1")
        needed = max(points)
        if degree is None:
            degree = needed
        elif needed > degree:
            raise ValueError(f"point {needed} exceeds degree {degree}")
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self._img)

    def image_of(self, pt: int) -> int:
        """Image of the 1-based point pt."""
        return self._img[pt - 1] + 1

    def images(self) -> list[int]:
        """1-based image table."""
        return [x + 1 for x in self._img]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(_compose(self._img, other._img))

    def inverse(self) -> "Permutation":
        return Permutation(_inverse(self._img))

    def __pow__(self, n: int) -> "Permutation":
        return Permutation(_power(self._img, n))

    def conjugate_by(self, other: "Permutation") -> "Permutation":
        """other**-1 * self * other."""
        return Permutation(_conjugate(self._img, other._img))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = [False] * self.degree
        out: list[tuple[int, ...]] = []
        for start in range(self.degree):
            if seen[start] or self._img[start] == start:
                seen[start] = True
                continue
            cyc = []
            pt = start
            while not seen[pt]:
                seen[pt] = True
                cyc.append(pt + 1)
                pt = self._img[pt]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, in decreasing order."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.degree - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def is_identity(self) -> bool:
        return _is_identity(self._img)

    def moved_points(self) -> list[int]:
        """1-based points not fixed, in increasing order."""
        return [i + 1 for i, x in enumerate(self._img) if x != i]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self) -> int:
        return hash(self._img)

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "id"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r}, degree={self.degree})"


class PermGroup:
    """Permutation group held as a deterministic base and strong generating set.

    The chain is rebuilt from scratch by each constructor call, so identical
    generator lists always produce identical bases, transversals, and element
    orderings.
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        _base_hint: tuple[int, ...] = (),
    ):
        if degree < 1:
            raise ValueError(f"degree must be >= 1, got {degree}")
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != group degree {degree}")
        self.degree = degree
        seen: set[tuple[int, ...]] = set()
        gens: list[Permutation] = []
        for g in generators:
            if not g.is_identity() and g._img not in seen:
                seen.add(g._img)
                gens.append(g)
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self._base: list[int] = []
        self._sgens: list[tuple[int, ...]] = []
        self._sgen_set: set[tuple[int, ...]] = set()
        self._fix_prefix: list[int] = []
        self._level_gen_ids: list[list[int]] = []
        self._orbit: list[list[int]] = []
        self._trans: list[dict[int, tuple[int, ...]]] = []
        self._done: list[set[tuple[int, int]]] = []
        self._order: int | None = None
        self._build(_base_hint)

    # -- stabilizer chain construction -------------------------------------

    def _add_level(self, bpt: int) -> None:
        self._base.append(bpt)
        self._level_gen_ids.append([])
        self._orbit.append([bpt])
        self._trans.append({bpt: tuple(range(self.degree))})
        self._done.append(set())

    def _pick_base_point(self, g: tuple[int, ...], hint: tuple[int, ...]) -> int:
        for h in hint:
            if h not in self._base and g[h] != h:
                return h
        for i, x in enumerate(g):
            if x != i:
                return i
        raise AssertionError("identity passed to base-point selection")

    def _register(self, g: tuple[int, ...], hint: tuple[int, ...]) -> int:
        """Insert g as a strong generator; return the deepest level it joins."""
        prefix = 0
        while prefix < len(self._base) and g[self._base[prefix]] == self._base[prefix]:
            prefix += 1
        if prefix == len(self._base):
            self._add_level(self._pick_base_point(g, hint))
        if g in self._sgen_set:
            return prefix
        gid = len(self._sgens)
        self._sgens.append(g)
        self._sgen_set.add(g)
        self._fix_prefix.append(prefix)
        for lvl in range(prefix + 1):
            self._level_gen_ids[lvl].append(gid)
        return prefix

    def _sift(self, g: tuple[int, ...], start: int) -> tuple[tuple[int, ...], int]:
        """Strip g through levels >= start; return (residue, stuck level)."""
        for lvl in range(start, len(self._base)):
            pt = g[self._base[lvl]]
            rep = self._trans[lvl].get(pt)
            if rep is None:
                return g, lvl
            g = _compose(g, _inverse(rep))
        return g, len(self._base)

    def _process_level(self, lvl: int, hint: tuple[int, ...]) -> int | None:
        """Extend orbit and close Schreier generators at one level.

        Returns the level of a newly registered strong generator, or None
        once every (point, generator) pair at this level is settled.
        """
        orbit = self._orbit[lvl]
        trans = self._trans[lvl]
        gen_ids = self._level_gen_ids[lvl]
        done = self._done[lvl]
        oi = 0
        while oi < len(orbit):
            pt = orbit[oi]
            gi = 0
            while gi < len(gen_ids):
                gid = gen_ids[gi]
                gi += 1
                if (pt, gid) in done:
                    continue
                g = self._sgens[gid]
                npt = g[pt]
                if npt not in trans:
                    trans[npt] = _compose(trans[pt], g)
                    orbit.append(npt)
                schreier = _compose(_compose(trans[pt], g), _inverse(trans[npt]))
                if _is_identity(schreier):
                    done.add((pt, gid))
                    continue
                residue, _ = self._sift(schreier, lvl + 1)
                if _is_identity(residue):
                    done.add((pt, gid))
                    continue
                return self._register(residue, hint)
            oi += 1
        return None

    def _build(self, hint: tuple[int, ...]) -> None:
        for h in hint:
            self._add_level(h)
        for g in self.generators:
            self._register(g._img, hint)
        lvl = len(self._base) - 1
        while lvl >= 0:
            jump = self._process_level(lvl, hint)
            lvl = lvl - 1 if jump is None else jump
        self._order = math.prod(len(o) for o in self._orbit)

    # -- queries ------------------------------------------------------------

    def order(self) -> int:
        return self._order

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        residue, _ = self._sift(p._img, 0)
        return _is_identity(residue)

    def orbit(self, pt: int) -> list[int]:
        """Orbit of the 1-based point pt, in discovery order."""
        start = pt - 1
        if not 1 <= pt <= self.degree:
            raise ValueError(f"point {pt} outside 1..{self.degree}")
        seen = {start}
        out = [start]
        qi = 0
        raw = [g._img for g in self.generators]
        while qi < len(out):
            x = out[qi]
            qi += 1
            for g in raw:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    out.append(y)
        return [x + 1 for x in out]

    def orbits(self) -> list[list[int]]:
        """Orbit partition of all points, each orbit led by its least point."""
        left = set(range(1, self.degree + 1))
        out = []
        while left:
            orb = sorted(self.orbit(min(left)))
            out.append(orb)
            left -= set(orb)
        return out

    def point_stabilizer(self, pt: int) -> "PermGroup":
        """Stabilizer of the 1-based point pt."""
        if not 1 <= pt <= self.degree:
            raise ValueError(f"point {pt} outside 1..{self.degree}")
        rebuilt = PermGroup(self.degree, self.generators, _base_hint=(pt - 1,))
        stab_gens = [
            Permutation(rebuilt._sgens[gid])
            for gid in range(len(rebuilt._sgens))
            if rebuilt._fix_prefix[gid] >= 1
        ]
        stab = PermGroup(self.degree, stab_gens)
        if stab.order() * len(rebuilt._orbit[0]) != self.order():
            raise AssertionError("stabilizer order check failed")
        return stab

    def raw_elements(self) -> Iterator[tuple[int, ...]]:
        """All element image tuples in a fixed order with the identity first."""
        levels = []
        for lvl in range(len(self._base)):
            bpt = self._base[lvl]
            pts = [bpt] + sorted(x for x in self._orbit[lvl] if x != bpt)
            levels.append([self._trans[lvl][x] for x in pts])

        def rec(lvl: int) -> Iterator[tuple[int, ...]]:
            if lvl == len(levels):
                yield tuple(range(self.degree))
                return
            for rep in levels[lvl]:
                for tail in rec(lvl + 1):
                    yield _compose(tail, rep)

        return rec(0)

    def elements(self, cap: int | None = None) -> list[Permutation]:
        """Every element, identity first, in the fixed enumeration order."""
        if cap is not None and self.order() > cap:
            raise OverCapError(f"group order {self.order()} exceeds cap {cap}")
        return [Permutation(t) for t in self.raw_elements()]

    def random_element(self, rng) -> Permutation:
        """Uniform random element drawn via the transversals."""
        img = tuple(range(self.degree))
        for lvl in range(len(self._base) - 1, -1, -1):
            pt = rng.choice(self._orbit[lvl])
            img = _compose(img, self._trans[lvl][pt])
        return Permutation(img)

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "id"
        return f"PermGroup(degree={self.degree}, order={self.order()}, gens=[{gens}])"
