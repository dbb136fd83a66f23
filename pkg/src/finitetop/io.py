"""JSON forms of spaces, subsets, operators and maps.

Space file::

    {"points": ["a", "b", "c"], "opens": [[], ["a"], ["a", "b", "c"]]}

Operator: ``{"name": "int_cl"}`` or ``{"table": {"": [], "a": ["a", "b"], ...}}``
where table keys are comma-joined sorted labels.

Map file::

    {"domain": <space or path>, "codomain": <space or path>, "map": {"a": "x", ...}}
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from finitetop.maps import FiniteMap
from finitetop.operators import NAMED_OPERATORS, BiOperatorSpace, Operator, UnknownOperator
from finitetop.sets import GroundSet
from finitetop.topology import Topology, open_sort_key, validate


class InputError(ValueError):
    """Malformed JSON input."""


def subset_to_json(ground: GroundSet, mask: int) -> list[str]:
    return ground.labels(mask)


def subset_from_json(ground: GroundSet, labels: Any) -> int:
    if not isinstance(labels, list):
        raise InputError(f"a subset is a list of point labels, got {labels!r}")
    return ground.mask(labels)


def parse_subset_arg(ground: GroundSet, text: str) -> int:
    """Comma-separated labels; the empty string is the empty set."""
    text = text.strip()
    if text.startswith("["):
        return subset_from_json(ground, json.loads(text))
    return ground.mask([p.strip() for p in text.split(",") if p.strip()])


def space_to_json(t: Topology) -> dict[str, Any]:
    return {
        "points": list(t.ground.points),
        "opens": [t.ground.labels(u) for u in sorted(t.opens, key=open_sort_key)],
    }


def space_from_json(data: Any) -> Topology:
    if not isinstance(data, dict) or "points" not in data or "opens" not in data:
        raise InputError('a space needs "points" and "opens"')
    ground = GroundSet(tuple(data["points"]))
    opens = [subset_from_json(ground, o) for o in data["opens"]]
    return validate(opens, ground)


def load_space(path: str | Path) -> Topology:
    return space_from_json(json.loads(Path(path).read_text()))


def _table_key(ground: GroundSet, mask: int) -> str:
    return ",".join(ground.labels(mask))


def operator_to_json(op: Operator, ground: GroundSet) -> dict[str, Any]:
    if op.name is not None:
        return {"name": op.name}
    return {"table": {_table_key(ground, s): ground.labels(v) for s, v in enumerate(op.table)}}


def operator_from_json(data: Any, ground: GroundSet | None = None) -> Operator:
    if isinstance(data, str):
        data = {"name": data}
    if not isinstance(data, dict):
        raise InputError(f"operator must be an object, got {data!r}")
    if "name" in data:
        if data["name"] not in NAMED_OPERATORS:
            raise UnknownOperator(f"unknown operator {data['name']!r}; valid names are {', '.join(NAMED_OPERATORS)}")
        return Operator.named(data["name"])
    if "table" not in data:
        raise InputError('operator needs "name" or "table"')
    if ground is None:
        raise InputError("a table operator needs the space it acts on")
    tab: list[int | None] = [None] * (ground.full + 1)
    for key, val in data["table"].items():
        labels = [p for p in key.split(",") if p]
        tab[ground.mask(labels)] = subset_from_json(ground, val)
    missing = [s for s, v in enumerate(tab) if v is None]
    if missing:
        raise InputError(f"operator table is missing {len(missing)} subsets, e.g. {ground.labels(missing[0])}")
    return Operator.from_table(tab)


def load_operator(ref: str, ground: GroundSet) -> Operator:
    """A named operator, or a path to a JSON operator file."""
    if ref in NAMED_OPERATORS:
        return Operator.named(ref)
    path = Path(ref)
    if path.exists():
        return operator_from_json(json.loads(path.read_text()), ground)
    raise UnknownOperator(f"unknown operator {ref!r}; valid names are {', '.join(NAMED_OPERATORS)} or a table file")


def space_with_operators_to_json(space: BiOperatorSpace) -> dict[str, Any]:
    out = space_to_json(space.topology)
    out["operators"] = [operator_to_json(op, space.ground) for op in space.operators]
    return out


def space_with_operators_from_json(data: dict[str, Any]) -> BiOperatorSpace:
    t = space_from_json(data)
    ops = tuple(operator_from_json(o, t.ground) for o in data.get("operators", [{"name": "int_cl"}, {"name": "cl_int"}]))
    return BiOperatorSpace(t, ops)


def _space_ref(ref: Any, base: Path | None) -> Topology:
    if isinstance(ref, str):
        path = Path(ref)
        if base is not None and not path.is_absolute():
            path = base / path
        return load_space(path)
    return space_from_json(ref)


def map_to_json(m: FiniteMap) -> dict[str, Any]:
    return {
        "domain": space_to_json(m.X),
        "codomain": space_to_json(m.Y),
        "map": m.to_labels(),
    }


def map_from_json(data: dict[str, Any], operators: tuple[Operator, ...] | None = None, base: Path | None = None) -> FiniteMap:
    X = _space_ref(data["domain"], base)
    Y = _space_ref(data["codomain"], base)
    if operators is None:
        raw = data.get("operators")
        operators = (
            tuple(operator_from_json(o, X.ground) for o in raw)
            if raw
            else (Operator.named("int_cl"), Operator.named("cl_int"))
        )
    table = data["map"]
    if set(table) != set(X.ground.points):
        raise InputError("map must assign every domain point exactly once")
    assignment = tuple(Y.ground.index(table[p]) for p in X.ground.points)
    return FiniteMap(BiOperatorSpace(X, operators), Y, assignment)


def load_map(path: str | Path, operators: tuple[Operator, ...] | None = None) -> FiniteMap:
    p = Path(path)
    return map_from_json(json.loads(p.read_text()), operators, base=p.parent)


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, stable separators."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)
