"""Registry of hypothesis => conclusion laws checked exhaustively on small spaces.

Instances are streamed in a fixed order: by point count, then topology
(canonical code, then labeled code), then operator sample, then subsets or
maps in ascending code. The stream is cut into *units* (one domain topology
each) so it can be spread over processes; merging unit results in unit
order gives the same report for any worker count.
"""
from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Any, Callable, Iterator

from finitetop import classes as oc
from finitetop import maps as mp
from finitetop import operators as ops
from finitetop.io import operator_from_json, operator_to_json, space_from_json, space_to_json
from finitetop.maps import FiniteMap
from finitetop.operators import NAMED_OPERATORS, BiOperatorSpace, Operator
from finitetop.topology import Topology, enumerate_topologies

DEFAULT_SEED = 0
SAMPLES_PER_TOPOLOGY = 64
CHAIN_OPERATORS = ("int_cl", "cl_int", "cl_int_cl")


class UnknownLaw(KeyError):
    def __str__(self) -> str:
        return f"unknown law {self.args[0]!r}; see `finitetop verify --list`"


@lru_cache(maxsize=None)
def ordered_topologies(n: int) -> tuple[Topology, ...]:
    return tuple(sorted(enumerate_topologies(n), key=lambda t: (t.canonical_code, t.code)))


# -- instances -----------------------------------------------------------------


@dataclass(frozen=True)
class Instance:
    space: BiOperatorSpace
    subsets: tuple[int, ...] = ()
    codomain: Topology | None = None
    maps: tuple[tuple[int, ...], ...] = ()
    subsets_in_codomain: bool = False

    @property
    def t(self) -> Topology:
        return self.space.topology

    @cached_property
    def f(self) -> FiniteMap:
        return FiniteMap(self.space, self.codomain, self.maps[0])

    @cached_property
    def g(self) -> FiniteMap:
        return FiniteMap(self.space, self.codomain, self.maps[1])

    @property
    def s(self) -> int:
        return self.subsets[0]

    def to_json(self) -> dict[str, Any]:
        g = self.t.ground
        sub_ground = self.codomain.ground if self.subsets_in_codomain else g
        out: dict[str, Any] = {
            "space": space_to_json(self.t),
            "operators": [operator_to_json(op, g) for op in self.space.operators],
            "subsets": [sub_ground.labels(s) for s in self.subsets],
        }
        if self.codomain is not None:
            xs, ys = g.points, self.codomain.ground.points
            out["codomain"] = space_to_json(self.codomain)
            out["maps"] = [{xs[i]: ys[y] for i, y in enumerate(a)} for a in self.maps]
        return out

    @classmethod
    def from_json(cls, data: dict[str, Any], subsets_in_codomain: bool = False) -> "Instance":
        t = space_from_json(data["space"])
        space = BiOperatorSpace(t, tuple(operator_from_json(o, t.ground) for o in data["operators"]))
        cod = space_from_json(data["codomain"]) if "codomain" in data else None
        sub_ground = cod.ground if subsets_in_codomain else t.ground
        subsets = tuple(sub_ground.mask(s) for s in data.get("subsets", []))
        maps = tuple(tuple(cod.ground.index(m[p]) for p in t.ground.points) for m in data.get("maps", []))
        return cls(space, subsets, cod, maps, subsets_in_codomain)


# -- cached predicates ---------------------------------------------------------

_CACHE = 1 << 16

contra_B_continuous = lru_cache(_CACHE)(mp.is_contra_B_continuous)
contra_continuous = lru_cache(_CACHE)(mp.is_contra_continuous)
almost_contra_B_continuous = lru_cache(_CACHE)(mp.is_almost_contra_B_continuous)
almost_continuous = lru_cache(_CACHE)(mp.is_almost_continuous)
R_continuous = lru_cache(_CACHE)(mp.is_R_continuous)
almost_weakly_B_continuous = lru_cache(_CACHE)(mp.is_almost_weakly_B_continuous)
B_regular_graph = lru_cache(_CACHE)(mp.has_B_regular_graph)
contra_B_closed_graph = lru_cache(_CACHE)(mp.has_contra_B_closed_graph)
urysohn = lru_cache(_CACHE)(mp.is_urysohn)
weakly_hausdorff = lru_cache(_CACHE)(mp.is_weakly_hausdorff)
discrete = lru_cache(_CACHE)(mp.is_discrete)
B_connected = lru_cache(_CACHE)(ops.is_B_connected)
B_frechet = lru_cache(_CACHE)(ops.is_B_frechet)


@lru_cache(_CACHE)
def topology_compactness(t: Topology) -> dict[str, bool]:
    return {name: f(t) for name, f in ops.TOPOLOGY_COMPACTNESS.items()}


@lru_cache(_CACHE)
def space_compactness(space: BiOperatorSpace) -> dict[str, bool]:
    return {name: f(space) for name, f in ops.SPACE_COMPACTNESS.items()}


@lru_cache(_CACHE)
def _product_space(X: Topology, Y: Topology, names: tuple[str, ...]) -> BiOperatorSpace:
    from finitetop.topology import product

    return BiOperatorSpace(product(X, Y), tuple(Operator.named(n) for n in names))


def graph_function(m: FiniteMap) -> FiniteMap:
    """Cached equivalent of :func:`finitetop.maps.graph_map` (the product space is shared per (X, Y))."""
    if any(op.name is None for op in m.domain.operators):
        raise mp.UnsupportedOperators("graph function needs named operators")
    prod = _product_space(m.X, m.Y, tuple(op.name for op in m.domain.operators))
    ny = m.Y.n
    return FiniteMap(m.domain, prod, tuple(x * ny + y for x, y in enumerate(m.assignment)))


@lru_cache(_CACHE)
def preserves_meets_with_opens(space: BiOperatorSpace) -> bool:
    """T_i(W & Z) == T_i(W) & T_i(Z) for every open W, every Z, for the first two operators."""
    t = space.topology
    for i in (0, 1):
        tab = space.tables[i]
        for w in t.opens:
            tw = tab[w]
            for z in range(t.full + 1):
                if tab[w & z] != tw & tab[z]:
                    return False
    return True


@lru_cache(_CACHE)
def preserves_joins(space: BiOperatorSpace) -> bool:
    """T_i(A | B) == T_i(A) | T_i(B) for all A, B, for the first two operators."""
    size = space.full + 1
    for i in (0, 1):
        tab = space.tables[i]
        if tab[0] != 0:
            return False
        for a in range(size):
            for b in range(a, size):
                if tab[a | b] != tab[a] | tab[b]:
                    return False
    return True


# -- laws ----------------------------------------------------------------------

Pred = Callable[[Instance], bool]


@dataclass(frozen=True)
class Law:
    id: str
    description: str
    generator: str
    hypothesis: Pred
    conclusion: Pred
    max_points: int = 3
    operators: str = "canonical"
    trivial_on_finite: bool = False
    selftest: bool = False
    probe: bool = False
    note: str | None = None
    max_product: int | None = None


def _true(inst: Instance) -> bool:
    return True


REGISTRY: dict[str, Law] = {}


def register(law: Law) -> Law:
    if law.id in REGISTRY:
        raise ValueError(f"duplicate law id {law.id}")
    REGISTRY[law.id] = law
    return law


def _class_identities(i: Instance) -> bool:
    t, s = i.t, i.s
    return (
        oc.p_int(t, s) == oc.p_int_scan(t, s)
        and oc.p_cl(t, s) == oc.p_cl_scan(t, s)
        and oc.s_int(t, s) == oc.s_int_scan(t, s)
        and oc.s_cl(t, s) == oc.s_cl_scan(t, s)
    )


register(Law(
    "prop-open-class-identities",
    "pInt(S) = S & Int(Cl S), pCl(S) = S | Cl(Int S), sInt(S) = S & Cl(Int S), sCl(S) = S | Int(Cl S), "
    "each checked against the union/intersection-of-class-members definition",
    "subsets", _true, _class_identities, max_points=4,
))

register(Law(
    "remark-b-equivalence",
    "with T1 = Int Cl and T2 = Cl Int, S is B-open exactly when S is b-open",
    "subsets", _true, lambda i: ops.is_B_open(i.space, i.s) == oc.is_b_open(i.t, i.s), max_points=4,
))

register(Law(
    "remark-Tstar-implies-B",
    "a T1*-open or T2*-open set is B-open and chain-open for three operators; "
    "all ordered triples of named operators plus seeded table operators",
    "subsets",
    lambda i: ops.is_T_star_open(i.space, 0, i.s) or ops.is_T_star_open(i.space, 1, i.s),
    lambda i: ops.is_B_open(i.space, i.s) and ops.is_chain_open(i.space, 3, i.s),
    max_points=3, operators="all-chain",
))

register(Law(
    "remark-B-implies-chain",
    "a B-open set is chain-open for three operators; all named triples plus seeded tables",
    "subsets",
    lambda i: ops.is_B_open(i.space, i.s),
    lambda i: ops.is_chain_open(i.space, 3, i.s),
    max_points=3, operators="all-chain",
))

register(Law(
    "lemma-BInt-decomposition",
    "BInt(S) = sInt(S) | pInt(S) for T1 = Int Cl, T2 = Cl Int",
    "subsets", _true, lambda i: ops.B_interior(i.space, i.s) == oc.s_int(i.t, i.s) | oc.p_int(i.t, i.s),
    max_points=4,
))

register(Law(
    "lemma-BCl-decomposition",
    "BCl(S) = sCl(S) & pCl(S) for T1 = Int Cl, T2 = Cl Int",
    "subsets", _true, lambda i: ops.B_closure(i.space, i.s) == oc.s_cl(i.t, i.s) & oc.p_cl(i.t, i.s),
    max_points=4,
))

register(Law(
    "lemma-open-cap-B-open",
    "open W and B-open Z give a B-open W & Z (canonical operators)",
    "open-subset-pairs",
    lambda i: ops.is_B_open(i.space, i.subsets[1]),
    lambda i: ops.is_B_open(i.space, i.subsets[0] & i.subsets[1]),
))

register(Law(
    "lemma-open-cap-B-open-tables",
    "open W and B-open Z give a B-open W & Z, for seeded table operators that satisfy "
    "T(W & Z) = T(W) & T(Z) for all open W",
    "open-subset-pairs",
    lambda i: preserves_meets_with_opens(i.space) and ops.is_B_open(i.space, i.subsets[1]),
    lambda i: ops.is_B_open(i.space, i.subsets[0] & i.subsets[1]),
    operators="sampled",
))

register(Law(
    "lemma-union-B-open",
    "the union of two B-open sets is B-open (canonical operators; finite families reduce to pairs)",
    "subset-pairs",
    lambda i: ops.is_B_open(i.space, i.subsets[0]) and ops.is_B_open(i.space, i.subsets[1]),
    lambda i: ops.is_B_open(i.space, i.subsets[0] | i.subsets[1]),
))

register(Law(
    "lemma-union-B-open-tables",
    "the union of two B-open sets is B-open, for seeded table operators satisfying only "
    "the stated meet hypothesis",
    "subset-pairs",
    lambda i: preserves_meets_with_opens(i.space)
    and ops.is_B_open(i.space, i.subsets[0]) and ops.is_B_open(i.space, i.subsets[1]),
    lambda i: ops.is_B_open(i.space, i.subsets[0] | i.subsets[1]),
    operators="sampled", probe=True,
    note="probe: the argument for this law also needs T(A | B) = T(A) | T(B), which the meet hypothesis does not give",
))

register(Law(
    "lemma-union-B-open-tables-joins",
    "the union of two B-open sets is B-open, for seeded table operators satisfying the meet "
    "hypothesis and additionally preserving unions",
    "subset-pairs",
    lambda i: preserves_meets_with_opens(i.space) and preserves_joins(i.space)
    and ops.is_B_open(i.space, i.subsets[0]) and ops.is_B_open(i.space, i.subsets[1]),
    lambda i: ops.is_B_open(i.space, i.subsets[0] | i.subsets[1]),
    operators="sampled",
))

register(Law(
    "remark-B-closure-closed",
    "BCl(S) is B-closed and BCl is idempotent (canonical operators)",
    "subsets", _true,
    lambda i: ops.is_B_closed(i.space, ops.B_closure(i.space, i.s))
    and ops.B_closure(i.space, ops.B_closure(i.space, i.s)) == ops.B_closure(i.space, i.s),
    max_points=4,
))

register(Law(
    "remark-B-closure-closed-tables",
    "BCl(S) is B-closed, for seeded table operators with no further hypothesis",
    "subsets", _true,
    lambda i: ops.is_B_closed(i.space, ops.B_closure(i.space, i.s)),
    operators="sampled", probe=True,
    note="probe: intersections of B-closed sets need not be B-closed for arbitrary operators; failures are recorded",
))

# negative controls
register(Law(
    "selftest-bopen-implies-semiopen",
    "deliberately false: every b-open set is semi-open",
    "subsets", lambda i: oc.is_b_open(i.t, i.s), lambda i: oc.is_semi_open(i.t, i.s),
    max_points=4, selftest=True,
))

register(Law(
    "selftest-B-open-intersection",
    "deliberately false: the intersection of two B-open sets is B-open",
    "subset-pairs",
    lambda i: ops.is_B_open(i.space, i.subsets[0]) and ops.is_B_open(i.space, i.subsets[1]),
    lambda i: ops.is_B_open(i.space, i.subsets[0] & i.subsets[1]),
    selftest=True,
))

# -- map laws ------------------------------------------------------------------

register(Law(
    "prop-contra-graph-preimage",
    "a map with a contra-B-closed graph pulls every contra-compact subset of Y back to a B-closed set",
    "map-codomain-subsets",
    lambda i: contra_B_closed_graph(i.f) and ops.is_contra_compact_subset(i.codomain, i.s),
    lambda i: ops.is_B_closed(i.space, i.f.preimage(i.s)),
    note="every subset of a finite space is contra-compact, so the law reads: contra-B-closed graph => all preimages B-closed",
))

register(Law(
    "prop-contra-compact-continuity",
    "a map into a contra-compact space with a contra-B-closed graph is contra-B-continuous",
    "maps",
    lambda i: topology_compactness(i.codomain)["contra_compact"] and contra_B_closed_graph(i.f),
    lambda i: contra_B_continuous(i.f),
))

register(Law(
    "lemma-graph-function",
    "if x -> (x, f(x)) is contra-B-continuous into X x Y then f is contra-B-continuous",
    "maps",
    lambda i: contra_B_continuous(graph_function(i.f)),
    lambda i: contra_B_continuous(i.f),
    max_product=9,
))

register(Law(
    "prop-equalizer-B-closed",
    "f contra-B-continuous, g contra-continuous, Y Urysohn => {x : f(x) = g(x)} is B-closed",
    "map-pairs",
    lambda i: urysohn(i.codomain) and contra_B_continuous(i.f) and contra_continuous(i.g),
    lambda i: ops.is_B_closed(i.space, mp.equalizer(i.f, i.g)),
))

register(Law(
    "cor-B-dense-agreement",
    "f contra-B-continuous, g contra-continuous, Y Urysohn, f = g on a B-dense set => f = g",
    "map-pairs",
    lambda i: urysohn(i.codomain) and contra_B_continuous(i.f) and contra_continuous(i.g)
    and ops.is_B_dense(i.space, mp.equalizer(i.f, i.g)),
    lambda i: i.f.assignment == i.g.assignment,
    note="some B-dense S lies inside the equalizer E exactly when E is B-dense, since BCl is monotone",
))

register(Law(
    "prop-non-discrete",
    "a contra-B-continuous surjection from a B-connected space onto Y with at least two points "
    "has a non-discrete codomain",
    "maps",
    lambda i: i.codomain.n >= 2 and i.f.is_surjective and B_connected(i.space) and contra_B_continuous(i.f),
    lambda i: not discrete(i.codomain),
))

register(Law(
    "lemma-R-continuous",
    "almost contra-B-continuous and almost continuous => R-continuous "
    "(preimages of regular closed sets are regular open)",
    "maps",
    lambda i: almost_contra_B_continuous(i.f) and almost_continuous(i.f),
    lambda i: R_continuous(i.f),
))

register(Law(
    "lemma-R-continuous-closed-reading",
    "almost contra-B-continuous and almost continuous => preimages of regular closed sets are regular closed",
    "maps",
    lambda i: almost_contra_B_continuous(i.f) and almost_continuous(i.f),
    lambda i: all(oc.is_regular_closed(i.t, i.f.preimage(v)) for v in mp.regular_closeds(i.codomain)),
    probe=True,
    note="probe: the reading under which regular closed covers pull back to regular closed covers",
))

register(Law(
    "prop-urysohn-regular-graph",
    "almost contra-B-continuous into an Urysohn space => B-regular graph",
    "maps",
    lambda i: urysohn(i.codomain) and almost_contra_B_continuous(i.f),
    lambda i: B_regular_graph(i.f),
))

register(Law(
    "prop-weakly-hausdorff",
    "a surjection with a B-regular graph has a weakly Hausdorff codomain",
    "maps",
    lambda i: i.f.is_surjective and B_regular_graph(i.f),
    lambda i: weakly_hausdorff(i.codomain),
))

register(Law(
    "prop-B-frechet",
    "an injection with a B-regular graph has a B-Frechet domain",
    "maps",
    lambda i: i.f.is_injective and B_regular_graph(i.f),
    lambda i: B_frechet(i.space),
))

register(Law(
    "prop-contra-B-regular-graph",
    "almost weakly-B-continuous into an Urysohn space => contra-B-closed graph",
    "maps",
    lambda i: urysohn(i.codomain) and almost_weakly_B_continuous(i.f),
    lambda i: contra_B_closed_graph(i.f),
    note="weakly-B-continuous is read as almost weakly-B-continuous, the only such notion defined",
))


# finite-trivial compactness transfers
def _imp(a: bool, b: bool) -> bool:
    return not a or b


def _compact_transfer(i: Instance) -> bool:
    xs, ty = space_compactness(i.space), topology_compactness(i.codomain)
    return (
        _imp(xs["B_lindelof"], ty["contra_R_lindelof"])
        and _imp(xs["B_compact"], ty["contra_R_compact"])
        and _imp(xs["countable_B_compact"], ty["contra_countable_R_compact"])
    )


def _R_compact_transfer(i: Instance) -> bool:
    tx, ty = topology_compactness(i.t), topology_compactness(i.codomain)
    keys = ("contra_R_compact", "R_compact", "R_lindelof", "countable_R_compact",
            "contra_countable_R_compact", "contra_R_lindelof")
    return all(_imp(tx[k], ty[k]) for k in keys)


register(Law(
    "prop-compact-transfer-family",
    "surjective almost contra-B-continuous: B-Lindelof/B-compact/countable-B-compact X gives "
    "contra-R-Lindelof/contra-R-compact/countable contra-R-compact Y",
    "maps",
    lambda i: i.f.is_surjective and almost_contra_B_continuous(i.f),
    _compact_transfer, trivial_on_finite=True,
    note="every compactness variant holds on a finite space",
))

register(Law(
    "prop-R-compact-transfer",
    "surjective, almost continuous, almost contra-B-continuous: each of six R-compactness "
    "variants passes from X to Y",
    "maps",
    lambda i: i.f.is_surjective and almost_contra_B_continuous(i.f) and almost_continuous(i.f),
    _R_compact_transfer, trivial_on_finite=True,
    note="every compactness variant holds on a finite space",
))

register(Law(
    "prop-image-contra-compact",
    "contra-B-continuous f and S B-compact relative to X => f(S) contra-compact in Y",
    "map-domain-subsets",
    lambda i: contra_B_continuous(i.f) and ops.is_B_compact_relative(i.space, i.s),
    lambda i: ops.is_contra_compact_subset(i.codomain, i.f.image(i.s)),
    trivial_on_finite=True,
    note="the statement concludes about f(X) while the argument treats f(S); the S form is checked",
))

register(Law(
    "cor-surjective-contra-compact",
    "contra-B-continuous surjection from a B-compact space => Y contra-compact",
    "maps",
    lambda i: i.f.is_surjective and contra_B_continuous(i.f) and space_compactness(i.space)["B_compact"],
    lambda i: topology_compactness(i.codomain)["contra_compact"],
    trivial_on_finite=True,
    note="every compactness variant holds on a finite space",
))

MAP_GENERATORS = ("maps", "map-pairs", "map-codomain-subsets", "map-domain-subsets")


def get_law(law_id: str) -> Law:
    try:
        return REGISTRY[law_id]
    except KeyError:
        raise UnknownLaw(law_id) from None


def law_ids(include_selftests: bool = False) -> list[str]:
    return [k for k, law in REGISTRY.items() if include_selftests or not law.selftest]


# -- instance streams ----------------------------------------------------------


def operator_spaces(t: Topology, mode: str, seed: int = DEFAULT_SEED) -> list[BiOperatorSpace]:
    if mode == "canonical":
        return [BiOperatorSpace.canonical(t)]
    if mode == "sampled":
        return ops.sample_spaces(t, seed, SAMPLES_PER_TOPOLOGY, arity=2)
    if mode == "all-chain":
        named = [BiOperatorSpace.of(t, *trip) for trip in itertools.product(NAMED_OPERATORS, repeat=3)]
        return named + ops.sample_spaces(t, seed, SAMPLES_PER_TOPOLOGY, arity=3)
    raise ValueError(f"unknown operator mode {mode!r}")


def units(law: Law, max_points: int | None = None) -> list[tuple[int, ...]]:
    """Work units in stream order: ``(n, i)`` for subset laws, ``(nx, ny, i)`` for map laws."""
    top = max_points if max_points is not None else law.max_points
    if law.generator in MAP_GENERATORS:
        out = []
        for nx in range(1, top + 1):
            for ny in range(1, top + 1):
                if law.max_product is not None and nx * ny > law.max_product:
                    continue
                out.extend((nx, ny, i) for i in range(len(ordered_topologies(nx))))
        return out
    return [(n, i) for n in range(1, top + 1) for i in range(len(ordered_topologies(n)))]


def instances(law: Law, unit: tuple[int, ...], seed: int = DEFAULT_SEED) -> Iterator[Instance]:
    gen = law.generator
    if gen in MAP_GENERATORS:
        nx, ny, idx = unit
        X = ordered_topologies(nx)[idx]
        space = operator_spaces(X, law.operators, seed)[0]
        for Y in ordered_topologies(ny):
            all_maps = list(mp.enumerate_maps(nx, ny))
            if gen == "maps":
                for a in all_maps:
                    yield Instance(space, (), Y, (a,))
            elif gen == "map-pairs":
                for a in all_maps:
                    for b in all_maps:
                        yield Instance(space, (), Y, (a, b))
            elif gen == "map-codomain-subsets":
                for a in all_maps:
                    for s in range(Y.full + 1):
                        yield Instance(space, (s,), Y, (a,), subsets_in_codomain=True)
            else:
                for a in all_maps:
                    for s in range(X.full + 1):
                        yield Instance(space, (s,), Y, (a,))
        return
    n, idx = unit
    t = ordered_topologies(n)[idx]
    size = t.full + 1
    for space in operator_spaces(t, law.operators, seed):
        if gen == "subsets":
            for s in range(size):
                yield Instance(space, (s,))
        elif gen == "subset-pairs":
            for a in range(size):
                for b in range(a, size):
                    yield Instance(space, (a, b))
        elif gen == "open-subset-pairs":
            for w in t.sorted_opens:
                for z in range(size):
                    yield Instance(space, (w, z))
        else:
            raise ValueError(f"unknown generator {gen!r}")


# -- verification --------------------------------------------------------------


@dataclass
class Report:
    law: str
    status: str
    instances_checked: int
    hypothesis_hits: int
    witness: dict[str, Any] | None
    trivial_on_finite: bool
    note: str | None = None
    runtime_ms: float = field(default=0.0, compare=False)

    def to_json(self) -> dict[str, Any]:
        # runtime is left out so reports are byte-identical across runs
        return {
            "law": self.law,
            "status": self.status,
            "instances_checked": self.instances_checked,
            "hypothesis_hits": self.hypothesis_hits,
            "witness": self.witness,
            "trivial_on_finite": self.trivial_on_finite,
            "note": self.note,
        }


def run_unit(law_id: str, unit: tuple[int, ...], seed: int = DEFAULT_SEED) -> tuple[int, int, dict[str, Any] | None]:
    """Check one unit; stops at its first counterexample."""
    law = get_law(law_id)
    checked = hits = 0
    for inst in instances(law, unit, seed):
        checked += 1
        if law.hypothesis(inst):
            hits += 1
            if not law.conclusion(inst):
                return checked, hits, inst.to_json()
    return checked, hits, None


def _run_unit_packed(args: tuple[str, tuple[int, ...], int]) -> tuple[int, int, dict[str, Any] | None]:
    return run_unit(*args)


def resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        jobs = int(os.environ.get("FINITETOP_JOBS", "1") or 1)
    return max(1, jobs)


def verify(law_id: str, max_points: int | None = None, jobs: int | None = None,
           seed: int = DEFAULT_SEED) -> Report:
    law = get_law(law_id)
    start = time.perf_counter()
    work = units(law, max_points)
    jobs = resolve_jobs(jobs)
    if jobs == 1:
        results = (run_unit(law_id, u, seed) for u in work)
        checked, hits, witness = _merge(results)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            packed = [(law_id, u, seed) for u in work]
            checked, hits, witness = _merge(pool.map(_run_unit_packed, packed, chunksize=max(1, len(packed) // (4 * jobs))))
    if witness is not None:
        status = "counterexample"
    elif hits == 0:
        status = "vacuous"
    else:
        status = "verified"
    return Report(law_id, status, checked, hits, witness, law.trivial_on_finite, law.note,
                  (time.perf_counter() - start) * 1000)


def _merge(results) -> tuple[int, int, dict[str, Any] | None]:
    checked = hits = 0
    for c, h, w in results:
        checked += c
        hits += h
        if w is not None:
            return checked, hits, w
    return checked, hits, None


def verify_all(max_points: int | None = None, jobs: int | None = None, seed: int = DEFAULT_SEED,
               include_selftests: bool = False) -> list[Report]:
    return [verify(k, max_points, jobs, seed) for k in law_ids(include_selftests)]


def recheck(law_id: str, witness: dict[str, Any]) -> tuple[bool, bool]:
    """Re-evaluate (hypothesis, conclusion) on a serialized witness."""
    law = get_law(law_id)
    inst = Instance.from_json(witness, subsets_in_codomain=law.generator == "map-codomain-subsets")
    return law.hypothesis(inst), law.conclusion(inst)
