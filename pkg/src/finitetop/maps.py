"""Functions between finite spaces: continuity variants, graph predicates, separation.

The domain of a map always carries operators (a :class:`BiOperatorSpace`);
the codomain is a plain :class:`Topology`, and any operators it has are
ignored by predicates that never consult them.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from finitetop.classes import is_regular_closed, is_regular_open
from finitetop.operators import BiOperatorSpace, Operator, is_B_closed
from finitetop.sets import SizeExceeded, members
from finitetop.topology import Topology, product

MAX_MAPS = 10**6


class DomainMismatch(ValueError):
    pass


class UnsupportedOperators(ValueError):
    pass


@dataclass(frozen=True)
class FiniteMap:
    domain: BiOperatorSpace
    codomain: Topology
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        cod = self.codomain
        if isinstance(cod, BiOperatorSpace):
            object.__setattr__(self, "codomain_space", cod)
            object.__setattr__(self, "codomain", cod.topology)
        a = tuple(self.assignment)
        object.__setattr__(self, "assignment", a)
        if len(a) != self.domain.n:
            raise ValueError(f"assignment has {len(a)} entries, domain has {self.domain.n} points")
        if any(not 0 <= y < self.codomain.n for y in a):
            raise ValueError("assignment maps outside the codomain")

    @property
    def X(self) -> Topology:
        return self.domain.topology

    @property
    def Y(self) -> Topology:
        return self.codomain

    @cached_property
    def fibers(self) -> tuple[int, ...]:
        """``fibers[y]`` is the preimage of the point ``y``."""
        fib = [0] * self.codomain.n
        for x, y in enumerate(self.assignment):
            fib[y] |= 1 << x
        return tuple(fib)

    @cached_property
    def graph_mask(self) -> int:
        """G(f) as a mask over ``X x Y`` with pair index ``x * |Y| + y``."""
        ny = self.codomain.n
        return sum(1 << (x * ny + y) for x, y in enumerate(self.assignment))

    def preimage(self, v: int) -> int:
        out = 0
        for y in members(v):
            out |= self.fibers[y]
        return out

    def image(self, u: int) -> int:
        out = 0
        for x in members(u):
            out |= 1 << self.assignment[x]
        return out

    @property
    def is_surjective(self) -> bool:
        return all(self.fibers)

    @property
    def is_injective(self) -> bool:
        return len(set(self.assignment)) == len(self.assignment)

    def to_labels(self) -> dict[str, str]:
        xs, ys = self.X.ground.points, self.Y.ground.points
        return {xs[i]: ys[y] for i, y in enumerate(self.assignment)}


def preimage(m: FiniteMap, v: int) -> int:
    return m.preimage(v)


def image(m: FiniteMap, u: int) -> int:
    return m.image(u)


def regular_opens(t: Topology) -> list[int]:
    return [s for s in range(t.full + 1) if is_regular_open(t, s)]


def regular_closeds(t: Topology) -> list[int]:
    return [s for s in range(t.full + 1) if is_regular_closed(t, s)]


# -- continuity ----------------------------------------------------------------


def is_contra_continuous(m: FiniteMap) -> bool:
    X = m.X
    return all(X.is_closed(m.preimage(v)) for v in m.Y.opens)


def is_contra_B_continuous(m: FiniteMap) -> bool:
    return all(is_B_closed(m.domain, m.preimage(v)) for v in m.Y.opens)


def is_almost_contra_B_continuous(m: FiniteMap) -> bool:
    return all(is_B_closed(m.domain, m.preimage(v)) for v in regular_opens(m.Y))


def is_almost_continuous(m: FiniteMap) -> bool:
    X = m.X
    return all(X.is_open(m.preimage(v)) for v in regular_opens(m.Y))


def is_R_continuous(m: FiniteMap) -> bool:
    """Preimage of every regular closed set of Y is regular open in X."""
    X = m.X
    return all(is_regular_open(X, m.preimage(v)) for v in regular_closeds(m.Y))


def is_almost_weakly_B_continuous(m: FiniteMap) -> bool:
    """For each x and regular open V containing f(x), some B-open U containing x has f(U) inside Cl(V)."""
    Y = m.Y
    b_open = m.domain.B_open_sets()
    for v in regular_opens(Y):
        if not v:
            continue
        target = m.preimage(Y.closure(v))
        reach = 0
        for u in b_open:
            if u & ~target == 0:
                reach |= u
        if m.preimage(v) & ~reach:
            return False
    return True


# -- graph predicates ----------------------------------------------------------


def _separated_off_graph(m: FiniteMap, y_family: list[int]) -> bool:
    """Every (x, y) off the graph has a B-closed U containing x and V in ``y_family``
    containing y with f(U) disjoint from V."""
    full = m.X.full
    b_closed = m.domain.B_closed_sets()
    for y in range(m.Y.n):
        need = full & ~m.fibers[y]  # x with (x, y) off the graph
        if not need:
            continue
        reach = 0
        for v in y_family:
            if not v >> y & 1:
                continue
            avoid = full & ~m.preimage(v)
            for u in b_closed:
                if u & ~avoid == 0:
                    reach |= u
        if need & ~reach:
            return False
    return True


def has_B_regular_graph(m: FiniteMap) -> bool:
    return _separated_off_graph(m, regular_opens(m.Y))


def has_contra_B_closed_graph(m: FiniteMap) -> bool:
    return _separated_off_graph(m, regular_closeds(m.Y))


def has_B_regular_graph_rect(m: FiniteMap) -> bool:
    """Same predicate phrased as (U x V) missing G(f) in the product ground set."""
    from finitetop.topology import rectangle

    ny = m.Y.n
    g = m.graph_mask
    b_closed = m.domain.B_closed_sets()
    reg = regular_opens(m.Y)
    for x in range(m.X.n):
        for y in range(ny):
            if m.assignment[x] == y:
                continue
            if not any(
                u >> x & 1 and v >> y & 1 and rectangle(u, v, ny) & g == 0 for u in b_closed for v in reg
            ):
                return False
    return True


# -- separation properties of a topology -----------------------------------------


def is_urysohn(t: Topology) -> bool:
    opens = t.sorted_opens
    for x, y in itertools.combinations(range(t.n), 2):
        bx, by = 1 << x, 1 << y
        cx = [t.closure(u) for u in opens if u & bx]
        cy = [t.closure(v) for v in opens if v & by]
        if not any(a & b == 0 for a in cx for b in cy):
            return False
    return True


def is_weakly_hausdorff(t: Topology) -> bool:
    reg = regular_closeds(t)
    for x in range(t.n):
        bx = 1 << x
        meet = t.full
        for r in reg:
            if r & bx:
                meet &= r
        if meet != bx:
            return False
    return True


def is_discrete(t: Topology) -> bool:
    return all(nb == 1 << x for x, nb in enumerate(t.min_nbhd))


def equalizer(m1: FiniteMap, m2: FiniteMap) -> int:
    if m1.X != m2.X or m1.Y != m2.Y:
        raise DomainMismatch("maps must share domain and codomain")
    return sum(1 << x for x, (a, b) in enumerate(zip(m1.assignment, m2.assignment)) if a == b)


def graph_map(m: FiniteMap) -> FiniteMap:
    """x -> (x, f(x)) into the product, whose operators re-instantiate the domain's named ones."""
    if any(op.name is None for op in m.domain.operators):
        raise UnsupportedOperators("graph_map needs named operators; table operators have no product counterpart")
    prod = product(m.X, m.Y)
    ops = tuple(Operator.named(op.name) for op in m.domain.operators)
    ny = m.Y.n
    return FiniteMap(m.domain, BiOperatorSpace(prod, ops), tuple(x * ny + y for x, y in enumerate(m.assignment)))


def projection_x(nx: int, ny: int) -> tuple[int, ...]:
    return tuple(i // ny for i in range(nx * ny))


def enumerate_maps(nx: int, ny: int, surjective: bool = False, injective: bool = False) -> Iterator[tuple[int, ...]]:
    """All assignments ``X -> Y`` in lexicographic order (first point most significant)."""
    if ny**nx > MAX_MAPS:
        raise SizeExceeded(f"{ny}**{nx} maps exceeds the limit of {MAX_MAPS}")
    for a in itertools.product(range(ny), repeat=nx):
        if surjective and len(set(a)) != ny:
            continue
        if injective and len(set(a)) != nx:
            continue
        yield a
