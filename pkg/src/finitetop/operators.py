"""Operators associated with a topology and the B-open calculus built on them.

An operator maps every subset of the ground set to a subset. It is
*associated* with a topology when every open set is contained in its
image. A space carries an ordered list of such operators; B-openness uses
the first two, chain-openness the first ``k``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence

from finitetop.sets import is_subset, members, popcount
from finitetop.topology import Topology

NAMED_OPERATORS = ("id", "int", "cl", "int_cl", "cl_int", "int_cl_int", "cl_int_cl")
CANONICAL_PAIR = ("int_cl", "cl_int")
# Named operators are materialized into lookup tables from this size up.
MEMO_POINTS = 6


class UnknownOperator(ValueError):
    pass


class NotAssociated(ValueError):
    def __init__(self, index: int, witness: int, labels: list[str]):
        self.index = index
        self.witness = witness
        super().__init__(f"operator {index + 1} is not associated with the topology: open set {labels} is not inside its image")


class IndexOutOfRange(IndexError):
    pass


def _named(name: str) -> Callable[[Topology, int], int]:
    if name == "id":
        return lambda t, s: s
    if name == "int":
        return lambda t, s: t.interior(s)
    if name == "cl":
        return lambda t, s: t.closure(s)
    if name == "int_cl":
        return lambda t, s: t.interior(t.closure(s))
    if name == "cl_int":
        return lambda t, s: t.closure(t.interior(s))
    if name == "int_cl_int":
        return lambda t, s: t.interior(t.closure(t.interior(s)))
    if name == "cl_int_cl":
        return lambda t, s: t.closure(t.interior(t.closure(s)))
    raise UnknownOperator(f"unknown operator {name!r}; valid names are {', '.join(NAMED_OPERATORS)}")


@dataclass(frozen=True)
class Operator:
    """Either a named Int/Cl composite or an explicit table indexed by subset mask."""

    name: str | None = None
    table: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if (self.name is None) == (self.table is None):
            raise ValueError("an operator is either named or a table, not both")
        if self.name is not None:
            _named(self.name)
        else:
            tab = tuple(self.table)
            size = len(tab)
            if size & (size - 1) or size < 2:
                raise ValueError(f"operator table must have 2**n entries, got {size}")
            if any(v < 0 or v >= size for v in tab):
                raise ValueError("operator table maps outside the ground set")
            object.__setattr__(self, "table", tab)

    @classmethod
    def named(cls, name: str) -> "Operator":
        return cls(name=name)

    @classmethod
    def from_table(cls, table: Sequence[int]) -> "Operator":
        return cls(table=tuple(table))

    @property
    def is_table(self) -> bool:
        return self.table is not None

    def __call__(self, t: Topology, s: int) -> int:
        return apply(self, t, s)

    def __str__(self) -> str:
        return self.name if self.name is not None else "table"


def apply(op: Operator, t: Topology, s: int) -> int:
    if op.table is not None:
        return op.table[s]
    return _named(op.name)(t, s)


def materialize(op: Operator, t: Topology) -> tuple[int, ...]:
    if op.table is not None:
        if len(op.table) != t.full + 1:
            raise ValueError(f"operator table has {len(op.table)} entries, space needs {t.full + 1}")
        return op.table
    f = _named(op.name)
    return tuple(f(t, s) for s in range(t.full + 1))


def is_associated(op: Operator, t: Topology) -> bool:
    return all(is_subset(u, apply(op, t, u)) for u in t.opens)


@dataclass(frozen=True)
class BiOperatorSpace:
    topology: Topology
    operators: tuple[Operator, ...] = field(default_factory=lambda: tuple(Operator.named(n) for n in CANONICAL_PAIR))

    def __post_init__(self) -> None:
        ops = tuple(self.operators)
        object.__setattr__(self, "operators", ops)
        if len(ops) < 2:
            raise ValueError("a bi-operator space needs at least two operators")
        t = self.topology
        for i, op in enumerate(ops):
            if op.table is not None and len(op.table) != t.full + 1:
                raise ValueError(f"operator {i + 1} table has {len(op.table)} entries, space needs {t.full + 1}")
            for u in t.sorted_opens:
                if u & ~apply(op, t, u):
                    raise NotAssociated(i, u, t.ground.labels(u))
        # B-open membership, one bit per subset mask
        t1, t2 = self.tables[0], self.tables[1]
        b_open = 0
        for s in range(t.full + 1):
            if s & ~(t1[s] | t2[s]) == 0:
                b_open |= 1 << s
        object.__setattr__(self, "_b_open_bits", b_open)

    @classmethod
    def canonical(cls, t: Topology) -> "BiOperatorSpace":
        return cls(t, tuple(Operator.named(n) for n in CANONICAL_PAIR))

    @classmethod
    def of(cls, t: Topology, *names_or_ops: str | Operator) -> "BiOperatorSpace":
        ops = tuple(Operator.named(o) if isinstance(o, str) else o for o in names_or_ops)
        return cls(t, ops)

    @property
    def ground(self):
        return self.topology.ground

    @property
    def full(self) -> int:
        return self.topology.full

    @property
    def n(self) -> int:
        return self.topology.n

    @property
    def is_canonical(self) -> bool:
        return all(op.name is not None for op in self.operators[:2]) and {
            op.name for op in self.operators[:2]
        } == set(CANONICAL_PAIR)

    @cached_property
    def tables(self) -> tuple[tuple[int, ...], ...]:
        return tuple(materialize(op, self.topology) for op in self.operators)

    def T(self, i: int, s: int) -> int:
        """Operator ``i`` (0-based) applied to ``s``."""
        op = self.operators[i]
        if op.table is not None or self.n >= MEMO_POINTS:
            return self.tables[i][s]
        return apply(op, self.topology, s)

    def b_open_mask(self) -> int:
        """Bitset over subset masks: bit ``s`` set iff ``s`` is B-open."""
        return self._b_open_bits

    def B_open_sets(self) -> list[int]:
        bits = self._b_open_bits
        return [s for s in range(self.full + 1) if bits >> s & 1]

    def B_closed_sets(self) -> list[int]:
        full, bits = self.full, self._b_open_bits
        return [s for s in range(full + 1) if bits >> (full & ~s) & 1]


def is_T_open(space: BiOperatorSpace, op_index: int, s: int) -> bool:
    """Every point of ``s`` lies in an open ``U`` with ``U <= T(U) <= s``; scans all opens."""
    _check_index(space, op_index + 1)
    reach = 0
    for u in space.topology.opens:
        tu = space.T(op_index, u)
        if u & ~tu == 0 and tu & ~s == 0:
            reach |= u
    return s & ~reach == 0


def is_T_closed(space: BiOperatorSpace, op_index: int, s: int) -> bool:
    return is_T_open(space, op_index, space.full & ~s)


def is_T_star_open(space: BiOperatorSpace, op_index: int, s: int) -> bool:
    _check_index(space, op_index + 1)
    return s & ~space.T(op_index, s) == 0


def is_T_star_closed(space: BiOperatorSpace, op_index: int, s: int) -> bool:
    return is_T_star_open(space, op_index, space.full & ~s)


def is_B_open(space: BiOperatorSpace, s: int) -> bool:
    return bool(space._b_open_bits >> s & 1)


def is_B_closed(space: BiOperatorSpace, s: int) -> bool:
    return bool(space._b_open_bits >> (space.full & ~s) & 1)


def is_chain_open(space: BiOperatorSpace, k: int, s: int) -> bool:
    """``s`` is inside the union of the first ``k`` operator images."""
    _check_index(space, k)
    img = 0
    for i in range(k):
        img |= space.T(i, s)
    return s & ~img == 0


def _check_index(space: BiOperatorSpace, k: int) -> None:
    if not 1 <= k <= len(space.operators):
        raise IndexOutOfRange(f"operator count {k} outside 1..{len(space.operators)}")


def B_interior(space: BiOperatorSpace, s: int) -> int:
    bits, out = space._b_open_bits, 0
    for u in range(space.full + 1):
        if u & ~s == 0 and bits >> u & 1:
            out |= u
    return out


def B_closure(space: BiOperatorSpace, s: int) -> int:
    full, bits = space.full, space._b_open_bits
    out = full
    for c in range(full + 1):
        if s & ~c == 0 and bits >> (full & ~c) & 1:
            out &= c
    return out


def is_B_dense(space: BiOperatorSpace, s: int) -> bool:
    return B_closure(space, s) == space.full


def is_B_connected(space: BiOperatorSpace, mode: str = "literal") -> bool:
    """No two nonempty proper B-open sets cover the space (``disjoint`` also demands they are disjoint).

    Properness is required in both modes: ``X`` is always B-open, so ``X u X``
    would otherwise disconnect every space.
    """
    if mode not in ("literal", "disjoint"):
        raise ValueError(f"mode must be 'literal' or 'disjoint', not {mode!r}")
    full = space.full
    proper = [s for s in space.B_open_sets() if s and s != full]
    pset = set(proper)
    for a in proper:
        if mode == "disjoint":
            if full & ~a in pset:
                return False
            continue
        for b in proper:
            if a | b == full:
                return False
    return True


def is_B_frechet(space: BiOperatorSpace) -> bool:
    """Every singleton is B-closed."""
    return all(is_B_closed(space, 1 << x) for x in range(space.n))


def is_B_frechet_pairwise(space: BiOperatorSpace) -> bool:
    """Distinct points are separated by B-open sets each missing the other point."""
    opens = space.B_open_sets()
    for x1, x2 in itertools.permutations(range(space.n), 2):
        b1, b2 = 1 << x1, 1 << x2
        if not any(u & b1 and not u & b2 for u in opens):
            return False
    return True


# -- covers and compactness ----------------------------------------------------


def is_cover(family: Iterable[int], carrier: int) -> bool:
    out = 0
    for m in family:
        out |= m
    return carrier & ~out == 0


def has_finite_subcover(family: Iterable[int], carrier: int, bound: int | None = None) -> tuple[int, ...] | None:
    """Minimum-cardinality subfamily covering ``carrier``, or ``None``.

    Exact search by iterative deepening, branching on the uncovered point
    with the fewest candidate sets. ``bound`` caps the subcover size.
    """
    fam = sorted(set(family), key=lambda m: (-popcount(m & carrier), m))
    if not is_cover(fam, carrier):
        return None
    if carrier == 0:
        return ()
    limit = popcount(carrier) if bound is None else min(bound, popcount(carrier))
    for depth in range(1, limit + 1):
        found = _cover_search(fam, carrier, depth)
        if found is not None:
            return tuple(sorted(found, key=lambda m: (popcount(m), m)))
    return None


def _cover_search(fam: list[int], todo: int, depth: int) -> list[int] | None:
    if todo == 0:
        return []
    if depth == 0:
        return None
    best_pt, best_cands = -1, None
    for x in members(todo):
        cands = [m for m in fam if m >> x & 1]
        if best_cands is None or len(cands) < len(best_cands):
            best_pt, best_cands = x, cands
    for m in best_cands:
        rest = _cover_search(fam, todo & ~m, depth - 1)
        if rest is not None:
            return [m] + rest
    return None


def _every_cover_has_finite_subcover(cls_members: Iterable[int], carrier: int) -> bool:
    # On a finite space every cover drawn from the class is a finite family,
    # hence its own finite subcover; countable covers are finite as well. The
    # quantification therefore reduces to the largest cover, the whole class,
    # from which a subcover is actually extracted.
    fam = set(cls_members)
    if not is_cover(fam, carrier):
        return True
    return has_finite_subcover(fam, carrier, bound=len(fam)) is not None


def _regular_opens(t: Topology) -> list[int]:
    return [s for s in range(t.full + 1) if s == t.interior(t.closure(s))]


def _regular_closeds(t: Topology) -> list[int]:
    return [s for s in range(t.full + 1) if s == t.closure(t.interior(s))]


def is_compact(t: Topology) -> bool:
    return _every_cover_has_finite_subcover(t.opens, t.full)


def is_contra_compact(t: Topology) -> bool:
    return _every_cover_has_finite_subcover(t.closeds, t.full)


def is_contra_compact_subset(t: Topology, s: int) -> bool:
    """Every cover of ``s`` by closed sets of the space has a finite subcover."""
    return _every_cover_has_finite_subcover(t.closeds, s)


def is_R_compact(t: Topology) -> bool:
    return _every_cover_has_finite_subcover(_regular_opens(t), t.full)


def is_contra_R_compact(t: Topology) -> bool:
    return _every_cover_has_finite_subcover(_regular_closeds(t), t.full)


def is_R_lindelof(t: Topology) -> bool:
    return _every_cover_has_finite_subcover(_regular_opens(t), t.full)


def is_contra_R_lindelof(t: Topology) -> bool:
    return _every_cover_has_finite_subcover(_regular_closeds(t), t.full)


def is_countable_R_compact(t: Topology) -> bool:
    return _every_cover_has_finite_subcover(_regular_opens(t), t.full)


def is_contra_countable_R_compact(t: Topology) -> bool:
    return _every_cover_has_finite_subcover(_regular_closeds(t), t.full)


def is_B_compact(space: BiOperatorSpace) -> bool:
    return _every_cover_has_finite_subcover(space.B_open_sets(), space.full)


def is_B_lindelof(space: BiOperatorSpace) -> bool:
    return _every_cover_has_finite_subcover(space.B_open_sets(), space.full)


def is_countable_B_compact(space: BiOperatorSpace) -> bool:
    return _every_cover_has_finite_subcover(space.B_open_sets(), space.full)


def is_B_compact_relative(space: BiOperatorSpace, s: int) -> bool:
    """Every cover of ``s`` by B-open sets of the whole space has a finite subcover."""
    return _every_cover_has_finite_subcover(space.B_open_sets(), s)


TOPOLOGY_COMPACTNESS = {
    "compact": is_compact,
    "contra_compact": is_contra_compact,
    "R_compact": is_R_compact,
    "contra_R_compact": is_contra_R_compact,
    "R_lindelof": is_R_lindelof,
    "contra_R_lindelof": is_contra_R_lindelof,
    "countable_R_compact": is_countable_R_compact,
    "contra_countable_R_compact": is_contra_countable_R_compact,
}

SPACE_COMPACTNESS = {
    "B_compact": is_B_compact,
    "B_lindelof": is_B_lindelof,
    "countable_B_compact": is_countable_B_compact,
}


# -- seeded table operators ----------------------------------------------------

SAMPLER_KINDS = ("free", "monotone", "join", "meet")


def sample_table_operator(t: Topology, rng: random.Random, kind: str) -> Operator:
    """Random operator table associated with ``t``.

    ``free`` is an arbitrary table patched so opens sit inside their images;
    ``monotone`` is additionally order preserving; ``join`` preserves unions
    (built from per-point images); ``meet`` preserves intersections
    (``T(S) = {y : R(y) <= S}`` with ``R(y)`` inside the minimal neighbourhood).
    """
    n, full = t.n, t.full
    size = full + 1
    if kind == "free":
        tab = [rng.getrandbits(n) & rng.getrandbits(n) for _ in range(size)]
        for u in t.opens:
            tab[u] |= u
    elif kind == "monotone":
        tab = [rng.getrandbits(n) if rng.random() < 0.25 else 0 for _ in range(size)]
        tab[0] = 0
        for u in t.opens:
            tab[u] |= u
        for i in range(n):  # upward closure over subsets keeps it monotone
            bit = 1 << i
            for s in range(size):
                if s & bit:
                    tab[s] |= tab[s ^ bit]
    elif kind == "join":
        img = [rng.getrandbits(n) & rng.getrandbits(n) for _ in range(n)]
        for y in range(n):
            nb = t.min_nbhd[y]
            if not any(img[x] >> y & 1 for x in members(nb)):
                img[rng.choice(list(members(nb)))] |= 1 << y
        tab = [0] * size
        for s in range(1, size):
            low = s & -s
            tab[s] = tab[s ^ low] | img[low.bit_length() - 1]
    elif kind == "meet":
        req = [t.min_nbhd[y] & rng.getrandbits(n) for y in range(n)]
        tab = [sum(1 << y for y in range(n) if req[y] & ~s == 0) for s in range(size)]
    else:
        raise ValueError(f"unknown sampler kind {kind!r}; choose from {', '.join(SAMPLER_KINDS)}")
    return Operator.from_table(tab)


def sample_spaces(t: Topology, seed: int = 0, count: int = 64, arity: int = 2) -> list[BiOperatorSpace]:
    """``count`` reproducible table-operator spaces over ``t``; kinds cycle through :data:`SAMPLER_KINDS`."""
    out = []
    for k in range(count):
        kind = SAMPLER_KINDS[k % len(SAMPLER_KINDS)]
        rng = random.Random(f"{seed}:{t.n}:{t.code}:{k}")
        ops = tuple(sample_table_operator(t, rng, kind) for _ in range(arity))
        out.append(BiOperatorSpace(t, ops))
    return out
