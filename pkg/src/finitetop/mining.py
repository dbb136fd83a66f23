"""Witness mining and class-membership census over all small topologies."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from finitetop.classes import classify
from finitetop.io import space_to_json
from finitetop.laws import ordered_topologies
from finitetop.operators import CANONICAL_PAIR, BiOperatorSpace, is_B_closed, is_B_open, is_T_star_open
from finitetop.predicate import Expr, evaluate, max_operator_index, parse
from finitetop.sets import SizeExceeded
from finitetop.topology import Topology

MAX_MINE_POINTS = 5

# inclusions of the classical chain, each paired with the predicate that separates it
STRICTNESS_LEVELS = (
    ("open < alpha_open", "alpha_open & !open"),
    ("alpha_open < pre_open", "pre_open & !alpha_open"),
    ("alpha_open < semi_open", "semi_open & !alpha_open"),
    ("pre_open < b_open", "b_open & !pre_open"),
    ("semi_open < b_open", "b_open & !semi_open"),
    ("pre_open | semi_open < b_open", "b_open & !pre_open & !semi_open"),
    ("b_open < beta_open", "beta_open & !b_open"),
)


def _check_bound(max_points: int) -> None:
    if not 1 <= max_points <= MAX_MINE_POINTS:
        raise SizeExceeded(f"mining supports 1..{MAX_MINE_POINTS} points, got {max_points}")


def _space(t: Topology, operators: Sequence[str]) -> BiOperatorSpace:
    return BiOperatorSpace.of(t, *operators)


@dataclass
class Witness:
    n: int
    topology: Topology
    subset: int

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "space": space_to_json(self.topology), "subset": self.topology.ground.labels(self.subset)}


@dataclass
class MineResult:
    expr: str
    witnesses: list[Witness]
    searched: list[dict[str, int]] = field(default_factory=list)
    complete: bool = True

    @property
    def absent(self) -> bool:
        """True when the whole range was scanned and nothing matched."""
        return not self.witnesses and self.complete

    def to_json(self) -> dict[str, Any]:
        return {
            "predicate": self.expr,
            "witnesses": [w.to_json() for w in self.witnesses],
            "searched": self.searched,
            "exhaustive_absence": self.absent,
        }


def mine(expr: str | Expr, max_points: int = 4, operators: Sequence[str] = CANONICAL_PAIR,
         limit: int = 10) -> MineResult:
    """Up to ``limit`` (topology, subset) pairs satisfying ``expr``, smallest spaces first.

    ``searched`` lists, per point count, how many topologies and pairs were
    scanned; when no witness turns up it doubles as the absence certificate.
    """
    _check_bound(max_points)
    tree = parse(expr) if isinstance(expr, str) else expr
    ops = tuple(operators)
    if max_operator_index(tree) > len(ops):
        raise ValueError(f"predicate uses operator {max_operator_index(tree)} but only {len(ops)} are given")
    result = MineResult(str(expr), [])
    for n in range(1, max_points + 1):
        tops = ordered_topologies(n)
        pairs = 0
        for t in tops:
            sp = _space(t, ops)
            for s in range(t.full + 1):
                pairs += 1
                if evaluate(tree, sp, s):
                    result.witnesses.append(Witness(n, t, s))
                    if len(result.witnesses) >= limit:
                        result.searched.append({"n": n, "topologies": len(tops), "pairs": pairs})
                        result.complete = False
                        return result
        result.searched.append({"n": n, "topologies": len(tops), "pairs": pairs})
    return result


CENSUS_FLAGS = (
    "open", "closed", "regular_open", "regular_closed", "pre_open", "pre_closed", "semi_open",
    "semi_closed", "alpha_open", "alpha_closed", "beta_open", "beta_closed", "b_open", "b_closed",
    "B_open", "B_closed", "t_star_open_1", "t_star_open_2",
)


def census(max_points: int = 4, operators: Sequence[str] = CANONICAL_PAIR) -> list[dict[str, int]]:
    """Per point count: topology count, (topology, subset) pair count, and per-flag membership counts."""
    _check_bound(max_points)
    rows = []
    for n in range(1, max_points + 1):
        tops = ordered_topologies(n)
        counts = dict.fromkeys(CENSUS_FLAGS, 0)
        pairs = 0
        for t in tops:
            sp = _space(t, operators)
            for s in range(t.full + 1):
                pairs += 1
                for k, v in classify(t, s).to_json().items():
                    counts[k] += v
                counts["B_open"] += is_B_open(sp, s)
                counts["B_closed"] += is_B_closed(sp, s)
                counts["t_star_open_1"] += is_T_star_open(sp, 0, s)
                counts["t_star_open_2"] += is_T_star_open(sp, 1, s)
        rows.append({"n": n, "topologies": len(tops), "pairs": pairs, **counts})
    return rows


def intersection_nonclosure_witness(max_points: int = 3, operators: Sequence[str] = CANONICAL_PAIR) -> dict[str, Any]:
    """First (topology, S1, S2) with S1, S2 B-open and S1 & S2 not, in stream order.

    Also reports the point counts scanned without success. Raises
    ``LookupError`` if nothing turns up within ``max_points``.
    """
    _check_bound(max_points)
    empty_sizes = []
    for n in range(1, max_points + 1):
        for t in ordered_topologies(n):
            sp = _space(t, operators)
            b_open = sp.B_open_sets()
            for i, s1 in enumerate(b_open):
                for s2 in b_open[i:]:
                    if not is_B_open(sp, s1 & s2):
                        return {
                            "n": n,
                            "topology": t,
                            "s1": s1,
                            "s2": s2,
                            "absent_at": empty_sizes,
                        }
        empty_sizes.append(n)
    raise LookupError(f"no intersection witness up to {max_points} points")


def witness_to_json(w: dict[str, Any]) -> dict[str, Any]:
    t = w["topology"]
    return {
        "n": w["n"],
        "space": space_to_json(t),
        "s1": t.ground.labels(w["s1"]),
        "s2": t.ground.labels(w["s2"]),
        "absent_at": w["absent_at"],
    }


def strictness(max_points: int = 4) -> list[dict[str, Any]]:
    """For each inclusion in the classical chain: the first separating witness, or absence."""
    out = []
    for label, pred in STRICTNESS_LEVELS:
        res = mine(pred, max_points, CANONICAL_PAIR, limit=1)
        first = res.witnesses[0].to_json() if res.witnesses else None
        out.append({"inclusion": label, "predicate": pred, "witness": first,
                    "exhaustive_absence": res.absent, "searched": res.searched})
    return out
