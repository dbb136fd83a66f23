import json

import pytest

from finitetop.io import (
    InputError,
    dumps,
    load_map,
    load_operator,
    load_space,
    map_to_json,
    operator_to_json,
    parse_subset_arg,
    space_from_json,
    space_to_json,
    space_with_operators_from_json,
    space_with_operators_to_json,
)
from finitetop.operators import BiOperatorSpace, Operator, UnknownOperator
from finitetop.topology import NotClosedUnderUnion, enumerate_topologies


def test_space_round_trip():
    for t in enumerate_topologies(3):
        assert space_from_json(json.loads(dumps(space_to_json(t)))) == t


def test_invalid_space():
    with pytest.raises(NotClosedUnderUnion):
        space_from_json({"points": ["a", "b", "c"], "opens": [[], ["a"], ["b"], ["a", "b", "c"]]})
    with pytest.raises(InputError):
        space_from_json({"points": ["a"]})


def test_subset_arg(sier):
    assert parse_subset_arg(sier.ground, "") == 0
    assert parse_subset_arg(sier.ground, "a, b") == 3
    assert parse_subset_arg(sier.ground, '["b"]') == 2


def test_operator_files(tmp_path, sier):
    op = Operator.from_table([0, 1, 3, 3])
    data = operator_to_json(op, sier.ground)
    assert data == {"table": {"": [], "a": ["a"], "b": ["a", "b"], "a,b": ["a", "b"]}}
    path = tmp_path / "op.json"
    path.write_text(json.dumps(data))
    assert load_operator(str(path), sier.ground).table == op.table
    assert load_operator("cl_int", sier.ground).name == "cl_int"
    with pytest.raises(UnknownOperator):
        load_operator("nope", sier.ground)
    with pytest.raises(InputError):
        load_operator(str(path), enumerate_topologies(3)[0].ground)


def test_space_with_operators(sier):
    sp = BiOperatorSpace(sier, (Operator.from_table([0, 1, 3, 3]), Operator.named("cl_int")))
    back = space_with_operators_from_json(space_with_operators_to_json(sp))
    assert back.tables == sp.tables


def test_map_files(tmp_path, sier):
    (tmp_path / "s.json").write_text(json.dumps(space_to_json(sier)))
    (tmp_path / "m.json").write_text(json.dumps({"domain": "s.json", "codomain": "s.json", "map": {"a": "b", "b": "b"}}))
    m = load_map(tmp_path / "m.json")
    assert m.assignment == (1, 1)
    assert map_to_json(m)["map"] == {"a": "b", "b": "b"}
    assert load_space(tmp_path / "s.json") == sier
