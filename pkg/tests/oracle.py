"""Slow, independent reference implementations used as test oracles.

Everything here works on frozensets of labels straight from the textbook
definitions, sharing no code with the package's bitmask machinery.
"""
from __future__ import annotations

from itertools import chain, combinations, product
from typing import Iterable

Set = frozenset
Family = frozenset


def powerset(points: Iterable[str]) -> list[Set]:
    pts = list(points)
    return [Set(c) for c in chain.from_iterable(combinations(pts, r) for r in range(len(pts) + 1))]


def is_topology(points: Iterable[str], fam: Iterable[Set]) -> bool:
    X = Set(points)
    fam = set(fam)
    if Set() not in fam or X not in fam:
        return False
    return all(a | b in fam and a & b in fam for a in fam for b in fam)


def all_topologies(n: int) -> set[Family]:
    """Filter every family of proper nonempty subsets, then add the trivial two."""
    points = "abcdefgh"[:n]
    X = Set(points)
    middle = [s for s in powerset(points) if s and s != X]
    out = set()
    for bits in range(1 << len(middle)):
        fam = {Set(), X} | {middle[i] for i in range(len(middle)) if bits >> i & 1}
        if is_topology(points, fam):
            out.add(Family(fam))
    return out


def interior(opens: Iterable[Set], s: Set) -> Set:
    return Set().union(*[u for u in opens if u <= s])


def closure(points: Iterable[str], opens: Iterable[Set], s: Set) -> Set:
    X = Set(points)
    closeds = [X - u for u in opens]
    return X.intersection(*[c for c in closeds if s <= c])


class Space:
    """A topology with the textbook operators spelled out."""

    def __init__(self, points: Iterable[str], opens: Iterable[Iterable[str]]):
        self.points = tuple(points)
        self.X = Set(self.points)
        self.opens = [Set(o) for o in opens]

    def int(self, s: Set) -> Set:
        return interior(self.opens, s)

    def cl(self, s: Set) -> Set:
        return closure(self.points, self.opens, s)

    def subsets(self) -> list[Set]:
        return powerset(self.points)

    def regular_open(self, s):
        return s == self.int(self.cl(s))

    def regular_closed(self, s):
        return s == self.cl(self.int(s))

    def pre_open(self, s):
        return s <= self.int(self.cl(s))

    def semi_open(self, s):
        return s <= self.cl(self.int(s))

    def alpha_open(self, s):
        return s <= self.int(self.cl(self.int(s)))

    def beta_open(self, s):
        return s <= self.cl(self.int(self.cl(s)))

    def b_open(self, s):
        return s <= self.int(self.cl(s)) | self.cl(self.int(s))

    def class_interior(self, s, pred) -> Set:
        return Set().union(*[u for u in self.subsets() if u <= s and pred(u)])

    def class_closure(self, s, pred) -> Set:
        return self.X.intersection(*[c for c in self.subsets() if s <= c and pred(self.X - c)])


def space_of(t) -> Space:
    """Convert a package Topology into the oracle's representation."""
    return Space(t.ground.points, [t.ground.labels(u) for u in t.opens])


def family_of(t) -> Family:
    return Family(Set(t.ground.labels(u)) for u in t.opens)


def product_opens(s1: Space, s2: Space) -> set[Set]:
    """Close the rectangles U x V under arbitrary unions by brute force."""
    rects = {Set(f"{x}:{y}" for x, y in product(u, v)) for u in s1.opens for v in s2.opens}
    opens = set(rects) | {Set()}
    changed = True
    while changed:
        changed = False
        for a in list(opens):
            for b in list(opens):
                if a | b not in opens:
                    opens.add(a | b)
                    changed = True
    return opens
