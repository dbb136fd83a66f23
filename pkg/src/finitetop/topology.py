"""Finite topologies, their specialization preorders, and enumeration.

A finite topology is determined by the smallest open neighbourhood of each
point. With ``x <= y`` iff ``x in Cl({y})`` (equivalently ``y`` lies in the
minimal neighbourhood of ``x``), the open sets are exactly the up-sets of
``<=``. Enumeration builds preorders point by point, which is what makes
``n = 6`` (209527 labeled topologies) tractable.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from finitetop.sets import MAX_POINTS, GroundSet, SizeExceeded, is_subset, members, popcount

MAX_ENUM_POINTS = 6
MAX_ORACLE_POINTS = 4
# Below this size Int/Cl are served from precomputed 2**n tables.
TABLE_POINTS = 10


class TopologyError(ValueError):
    """Raised when a family of subsets violates the topology axioms."""


class MissingEmptyOrWhole(TopologyError):
    pass


class NotClosedUnderUnion(TopologyError):
    def __init__(self, ground: GroundSet, a: int, b: int):
        self.pair = (a, b)
        super().__init__(f"NotClosedUnderUnion: {_show(ground, a)},{_show(ground, b)}")


class NotClosedUnderIntersection(TopologyError):
    def __init__(self, ground: GroundSet, a: int, b: int):
        self.pair = (a, b)
        super().__init__(f"NotClosedUnderIntersection: {_show(ground, a)},{_show(ground, b)}")


class EmptyCarrier(ValueError):
    pass


class PreorderError(ValueError):
    pass


def _show(ground: GroundSet, mask: int) -> str:
    return "{" + ",".join(ground.labels(mask)) + "}"


def open_sort_key(mask: int) -> tuple[int, int]:
    return (popcount(mask), mask)


@dataclass(frozen=True)
class Preorder:
    """Reflexive transitive relation; ``up[i]`` is the mask of all ``j`` with ``i <= j``."""

    up: tuple[int, ...]

    def __post_init__(self) -> None:
        up = tuple(self.up)
        object.__setattr__(self, "up", up)
        for i, row in enumerate(up):
            if not row >> i & 1:
                raise PreorderError(f"relation is not reflexive at {i}")
            for j in members(row):
                if not is_subset(up[j], row):
                    raise PreorderError(f"relation is not transitive: {i} <= {j} but up({j}) not inside up({i})")

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[bool]]) -> "Preorder":
        return cls(tuple(sum(1 << j for j, v in enumerate(row) if v) for row in matrix))

    @property
    def n(self) -> int:
        return len(self.up)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def matrix(self) -> list[list[bool]]:
        return [[self.leq(i, j) for j in range(self.n)] for i in range(self.n)]


def _upset_closure(basis: Iterable[int]) -> frozenset[int]:
    """All unions of members of ``basis`` (including the empty union)."""
    fam = {0}
    for b in basis:
        fam |= {o | b for o in fam}
    return frozenset(fam)


@dataclass(frozen=True)
class Topology:
    ground: GroundSet
    opens: frozenset[int]
    min_nbhd: tuple[int, ...] = field(compare=False, repr=False)

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def full(self) -> int:
        return self.ground.full

    def __hash__(self) -> int:
        return hash((self.ground, self.code))

    # -- derived structure -------------------------------------------------

    @cached_property
    def sorted_opens(self) -> tuple[int, ...]:
        return tuple(sorted(self.opens, key=open_sort_key))

    @cached_property
    def closeds(self) -> frozenset[int]:
        full = self.full
        return frozenset(full & ~u for u in self.opens)

    @cached_property
    def int_table(self) -> list[int]:
        n, nb = self.n, self.min_nbhd
        table = [0] * (1 << n)
        for s in range(1 << n):
            out = 0
            for x in range(n):
                if nb[x] & ~s == 0:
                    out |= 1 << x
            table[s] = out
        return table

    @cached_property
    def cl_table(self) -> list[int]:
        full, it = self.full, self.int_table
        return [full & ~it[full & ~s] for s in range(full + 1)]

    @cached_property
    def code(self) -> int:
        """Row-major bit encoding of the specialization preorder (first entry most significant)."""
        return _matrix_code(self.min_nbhd)

    @cached_property
    def canonical_code(self) -> int:
        return canonical_code(self.min_nbhd)

    # -- interior / closure ------------------------------------------------

    def interior(self, s: int) -> int:
        if self.n <= TABLE_POINTS:
            return self.int_table[s]
        out = 0
        for x, nb in enumerate(self.min_nbhd):
            if nb & ~s == 0:
                out |= 1 << x
        return out

    def closure(self, s: int) -> int:
        if self.n <= TABLE_POINTS:
            return self.cl_table[s]
        return self.full & ~self.interior(self.full & ~s)

    def is_open(self, s: int) -> bool:
        return s in self.opens

    def is_closed(self, s: int) -> bool:
        return (self.full & ~s) in self.opens

    def __str__(self) -> str:
        return "{" + ", ".join(_show(self.ground, u) for u in self.sorted_opens) + "}"


def _min_nbhds(n: int, opens: Iterable[int], full: int) -> tuple[int, ...]:
    nb = [full] * n
    for u in opens:
        for x in members(u):
            nb[x] &= u
    return tuple(nb)


def validate(opens: Iterable[int], ground: GroundSet) -> Topology:
    """Check the topology axioms and build a :class:`Topology`.

    Pairs are scanned in (cardinality, mask) order so the reported witness
    pair is deterministic.
    """
    fam = frozenset(opens)
    full = ground.full
    for u in fam:
        if u < 0 or u & ~full:
            raise ValueError(f"open set mask {u:#x} lies outside the ground set")
    if 0 not in fam or full not in fam:
        raise MissingEmptyOrWhole("MissingEmptyOrWhole: the empty set and the whole space must be open")
    order = sorted(fam, key=open_sort_key)
    for i, a in enumerate(order):
        for b in order[i + 1:]:
            if a | b not in fam:
                raise NotClosedUnderUnion(ground, a, b)
            if a & b not in fam:
                raise NotClosedUnderIntersection(ground, a, b)
    return Topology(ground, fam, _min_nbhds(ground.n, fam, full))


def interior(t: Topology, s: int) -> int:
    return t.interior(s)


def closure(t: Topology, s: int) -> int:
    return t.closure(s)


def from_preorder(p: Preorder, ground: GroundSet | None = None) -> Topology:
    """The topology of all up-sets of ``p``."""
    if ground is None:
        ground = GroundSet.of_size(p.n)
    if ground.n != p.n:
        raise ValueError(f"preorder has {p.n} points, ground set has {ground.n}")
    return Topology(ground, _upset_closure(p.up), tuple(p.up))


def to_preorder(t: Topology) -> Preorder:
    return Preorder(t.min_nbhd)


def discrete(ground: GroundSet | int) -> Topology:
    g = GroundSet.of_size(ground) if isinstance(ground, int) else ground
    return from_preorder(Preorder(tuple(1 << i for i in range(g.n))), g)


def indiscrete(ground: GroundSet | int) -> Topology:
    g = GroundSet.of_size(ground) if isinstance(ground, int) else ground
    return from_preorder(Preorder((g.full,) * g.n), g)


def sierpinski() -> Topology:
    """{a, b} with opens {}, {a}, {a, b}."""
    return validate([0, 0b01, 0b11], GroundSet(("a", "b")))


def subspace(t: Topology, carrier: int) -> Topology:
    """Trace topology on ``carrier``; points keep their labels, in parent order."""
    if carrier == 0:
        raise EmptyCarrier("subspace carrier must be nonempty")
    idx = list(members(carrier))
    ground = GroundSet(tuple(t.ground.points[i] for i in idx))
    opens = frozenset(_compress(u & carrier, idx) for u in t.opens)
    nb = tuple(_compress(t.min_nbhd[i] & carrier, idx) for i in idx)
    return Topology(ground, opens, nb)


def _compress(mask: int, idx: Sequence[int]) -> int:
    out = 0
    for k, i in enumerate(idx):
        if mask >> i & 1:
            out |= 1 << k
    return out


def lift(mask: int, carrier: int) -> int:
    """Map a subspace mask back to parent indices."""
    idx = list(members(carrier))
    return sum(1 << idx[k] for k in members(mask))


def pair_index(i: int, j: int, ny: int) -> int:
    return i * ny + j


def rectangle(u: int, v: int, ny: int) -> int:
    out = 0
    for i in members(u):
        out |= v << (i * ny)
    return out


def product(t1: Topology, t2: Topology) -> Topology:
    """Product topology on pairs; point ``(x, y)`` has index ``i * |Y| + j`` and label ``x:y``.

    The minimal neighbourhood of ``(x, y)`` is the rectangle of the factors'
    minimal neighbourhoods; the opens are all unions of those rectangles.
    """
    nx, ny = t1.n, t2.n
    if nx * ny > MAX_POINTS:
        raise SizeExceeded(f"product has {nx * ny} points, limit is {MAX_POINTS}")
    ground = GroundSet(tuple(f"{x}:{y}" for x in t1.ground.points for y in t2.ground.points))
    nb = tuple(rectangle(t1.min_nbhd[i], t2.min_nbhd[j], ny) for i in range(nx) for j in range(ny))
    return Topology(ground, _upset_closure(nb), nb)


# -- codes and canonical forms -------------------------------------------------


def _matrix_code(up: Sequence[int]) -> int:
    n = len(up)
    code = 0
    for i in range(n):
        for j in range(n):
            code = (code << 1) | (up[i] >> j & 1)
    return code


def _code_to_up(code: int, n: int) -> tuple[int, ...]:
    up = [0] * n
    for pos in range(n * n):
        if code >> (n * n - 1 - pos) & 1:
            i, j = divmod(pos, n)
            up[i] |= 1 << j
    return tuple(up)


@lru_cache(maxsize=None)
def _perm_data(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    weights = np.array([1 << (n * n - 1 - k) for k in range(n * n)], dtype=np.int64)
    return perms[:, :, None], perms[:, None, :], weights


def canonical_code(up: Sequence[int]) -> int:
    """Minimal row-major preorder code over all relabelings of the points."""
    n = len(up)
    if n > MAX_ENUM_POINTS:
        raise SizeExceeded(f"canonical form supports at most {MAX_ENUM_POINTS} points")
    mat = np.array([[up[i] >> j & 1 for j in range(n)] for i in range(n)], dtype=np.int64)
    rows, cols, weights = _perm_data(n)
    codes = mat[rows, cols].reshape(len(rows), n * n) @ weights
    return int(codes.min())


def canonical_form(t: Topology) -> Topology:
    """Representative of ``t``'s relabeling orbit on default labels."""
    return from_preorder(Preorder(_code_to_up(t.canonical_code, t.n)), GroundSet.of_size(t.n))


# -- enumeration ---------------------------------------------------------------


def _extend(up: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All preorders on k+1 points restricting to ``up`` on the first k."""
    k = len(up)
    full = (1 << k) - 1
    opens = sorted(_upset_closure(up))
    bit = 1 << k
    for d_open in opens:
        down = full & ~d_open  # down-closed = complement of an up-set
        allowed = full
        for x in members(down):
            allowed &= up[x]
        new_rows = tuple(r | bit if down >> x & 1 else r for x, r in enumerate(up))
        for u in opens:
            if u & ~allowed == 0:
                yield new_rows + (u | bit,)


def enumerate_preorders(n: int, prefix: tuple[int, ...] | None = None) -> Iterator[tuple[int, ...]]:
    """Labeled preorders on ``n`` points as up-mask tuples, generated by point extension.

    ``prefix`` restricts the stream to extensions of a fixed preorder on the
    first few points, which is how work is split across processes.
    """
    if not 1 <= n <= MAX_ENUM_POINTS:
        raise SizeExceeded(f"topology enumeration supports 1..{MAX_ENUM_POINTS} points, got {n}")
    start = prefix if prefix is not None else (1,)
    stack = [start]
    while stack:
        up = stack.pop()
        if len(up) == n:
            yield up
        else:
            stack.extend(reversed(list(_extend(up))))


def enumerate_topologies(n: int, mode: str = "labeled", ground: GroundSet | None = None) -> list[Topology]:
    """Every topology on ``n`` points.

    ``labeled`` yields each topology once, sorted by preorder code.
    ``canonical`` yields one default-labeled representative per relabeling
    orbit, sorted by canonical code.
    """
    if mode not in ("labeled", "canonical"):
        raise ValueError(f"mode must be 'labeled' or 'canonical', not {mode!r}")
    if not 1 <= n <= MAX_ENUM_POINTS:
        raise SizeExceeded(f"topology enumeration supports 1..{MAX_ENUM_POINTS} points, got {n}")
    g = ground or GroundSet.of_size(n)
    if mode == "labeled":
        ups = sorted(enumerate_preorders(n), key=_matrix_code)
        return [Topology(g, _upset_closure(up), up) for up in ups]
    codes = sorted({canonical_code(up) for up in enumerate_preorders(n)})
    return [_from_up(_code_to_up(c, n), g) for c in codes]


def _from_up(up: tuple[int, ...], g: GroundSet) -> Topology:
    return Topology(g, _upset_closure(up), up)


def enumerate_topologies_oracle(n: int) -> list[Topology]:
    """Brute force: test every family of subsets against the axioms (tests only)."""
    if not 1 <= n <= MAX_ORACLE_POINTS:
        raise SizeExceeded(f"family oracle supports 1..{MAX_ORACLE_POINTS} points, got {n}")
    g = GroundSet.of_size(n)
    size = 1 << n
    out = []
    for fam_bits in range(1 << size):
        fam = [s for s in range(size) if fam_bits >> s & 1]
        try:
            out.append(validate(fam, g))
        except TopologyError:
            pass
    return out


def topologies_upto(max_points: int) -> list[Topology]:
    """Labeled topologies on 1..max_points points, smallest first."""
    return [t for n in range(1, max_points + 1) for t in enumerate_topologies(n)]
