import pytest
from hypothesis import given
from hypothesis import strategies as st

from finitetop.sets import (
    GroundSet,
    SizeExceeded,
    complement,
    enumerate_subsets,
    intersect_all,
    members,
    popcount,
    union_all,
)

G3 = GroundSet.of_size(3)


def test_complement_examples():
    assert G3.labels(complement(G3.mask("a"), G3.full)) == ["b", "c"]
    assert complement(0, G3.full) == G3.full
    assert complement(G3.full, G3.full) == 0


def test_union_and_intersection_examples():
    assert G3.labels(union_all([G3.mask("a"), G3.mask("b")])) == ["a", "b"]
    assert intersect_all([], G3.full) == G3.full
    assert G3.labels(intersect_all([G3.mask("ab"), G3.mask("bc")], G3.full)) == ["b"]


def test_enumerate_subsets():
    g2 = GroundSet.of_size(2)
    assert [g2.labels(s) for s in enumerate_subsets(g2)] == [[], ["a"], ["b"], ["a", "b"]]
    assert len(enumerate_subsets(G3)) == 8


def test_ground_set_bounds():
    with pytest.raises(ValueError):
        GroundSet(())
    with pytest.raises(SizeExceeded):
        GroundSet.of_size(17)
    with pytest.raises(ValueError):
        GroundSet(("a", "a"))


def test_unknown_label():
    with pytest.raises(ValueError):
        G3.mask(["z"])


@given(st.integers(0, 255), st.integers(0, 255))
def test_boolean_algebra(a, b):
    full = 255
    assert complement(complement(a, full), full) == a
    assert complement(a | b, full) == complement(a, full) & complement(b, full)
    assert popcount(a) == len(list(members(a)))
