import random

import pytest
from hypothesis import given, settings

from conftest import topologies
from finitetop import classes as oc
from finitetop.operators import (
    NAMED_OPERATORS,
    SAMPLER_KINDS,
    SPACE_COMPACTNESS,
    TOPOLOGY_COMPACTNESS,
    B_closure,
    B_interior,
    BiOperatorSpace,
    IndexOutOfRange,
    NotAssociated,
    Operator,
    UnknownOperator,
    apply,
    has_finite_subcover,
    is_associated,
    is_B_closed,
    is_B_connected,
    is_B_dense,
    is_B_frechet,
    is_B_open,
    is_chain_open,
    is_cover,
    is_T_open,
    is_T_star_open,
    sample_spaces,
    sample_table_operator,
)
from finitetop.topology import discrete, enumerate_topologies, indiscrete


def test_apply_examples(sier):
    d = discrete(2)
    for s in range(4):
        assert apply(Operator.named("id"), sier, s) == s
    for u in d.opens:
        assert apply(Operator.named("int_cl"), d, u) == u
    assert apply(Operator.named("cl_int"), sier, 0b10) == 0


def test_associated(sier):
    for t in enumerate_topologies(3):
        for name in ("id", "int", "int_cl", "cl_int"):
            assert is_associated(Operator.named(name), t)
    assert not is_associated(Operator.from_table([0] * 4), sier)
    with pytest.raises(NotAssociated):
        BiOperatorSpace(sier, (Operator.from_table([0] * 4), Operator.named("cl_int")))


def test_unknown_operator_lists_names():
    with pytest.raises(UnknownOperator) as e:
        Operator.named("closure")
    assert all(n in str(e.value) for n in NAMED_OPERATORS)


def test_T_open_examples(sier):
    sp = BiOperatorSpace.canonical(sier)
    assert is_T_open(sp, 0, 0)
    assert not is_T_open(sp, 0, 0b01)
    assert is_T_open(sp, 0, sier.full)
    assert is_T_star_open(sp, 1, 0)
    assert not is_T_star_open(sp, 1, 0b10)


def test_B_open_examples(sier):
    sp = BiOperatorSpace.canonical(sier)
    assert is_B_open(sp, 0) and is_B_open(sp, sier.full)
    assert not is_B_open(sp, 0b10)
    assert B_closure(sp, 0b01) == sier.full
    assert is_B_dense(sp, sier.full) and is_B_dense(sp, 0b01)
    assert not is_B_dense(sp, 0)


def test_chain_open(sier):
    sp = BiOperatorSpace.of(sier, "int_cl", "cl_int", "cl_int_cl")
    for s in range(4):
        assert is_chain_open(sp, 1, s) == is_T_star_open(sp, 0, s)
        assert is_chain_open(sp, 2, s) == is_B_open(sp, s)
        assert not is_chain_open(sp, 2, s) or is_chain_open(sp, 3, s)
    with pytest.raises(IndexOutOfRange):
        is_chain_open(sp, 4, 0)


def test_connected_and_frechet(sier):
    one = BiOperatorSpace.canonical(discrete(1))
    assert is_B_connected(one, "literal") and is_B_connected(one, "disjoint")
    d2 = BiOperatorSpace.canonical(discrete(2))
    assert not is_B_connected(d2, "literal") and not is_B_connected(d2, "disjoint")
    # indiscrete: every nonempty set is pre-open, so {a} and {b,c} split it
    assert not is_B_connected(BiOperatorSpace.canonical(indiscrete(3)))
    assert is_B_connected(BiOperatorSpace.canonical(sier))
    assert is_B_frechet(BiOperatorSpace.canonical(discrete(3)))
    assert is_B_frechet(one)


def test_cover_examples():
    assert has_finite_subcover([0b01, 0b10], 0b11) == (0b01, 0b10)
    assert has_finite_subcover([0b11, 0b01, 0b10], 0b11) == (0b11,)
    assert has_finite_subcover([0b01], 0b11) is None
    assert is_cover([0b001, 0b110], 0b111)


def test_compactness_is_finite_trivial():
    for t in enumerate_topologies(3):
        sp = BiOperatorSpace.canonical(t)
        assert all(f(t) for f in TOPOLOGY_COMPACTNESS.values())
        assert all(f(sp) for f in SPACE_COMPACTNESS.values())


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_B_open_equals_b_open(n):
    for t in enumerate_topologies(n):
        sp = BiOperatorSpace.canonical(t)
        for s in range(t.full + 1):
            assert is_B_open(sp, s) == oc.is_b_open(t, s)
            assert is_B_closed(sp, s) == oc.is_b_closed(t, s)


@settings(max_examples=80, deadline=None)
@given(topologies())
def test_interior_closure_duality(t):
    sp = BiOperatorSpace.canonical(t)
    full = t.full
    for s in range(full + 1):
        bi, bc = B_interior(sp, s), B_closure(sp, s)
        assert bi & ~s == 0 and s & ~bc == 0
        assert bi == full & ~B_closure(sp, full & ~s)


def test_sampler_is_associated_and_reproducible():
    for t in enumerate_topologies(3):
        a = sample_spaces(t, seed=0, count=8)
        b = sample_spaces(t, seed=0, count=8)
        assert [s.tables for s in a] == [s.tables for s in b]
        for sp in a:
            for op in sp.operators:
                assert is_associated(op, t)


def test_sampler_kinds_have_their_shape(four_point):
    t = four_point
    rng = random.Random(5)
    for kind in SAMPLER_KINDS:
        tab = sample_table_operator(t, rng, kind).table
        subs = range(t.full + 1)
        if kind == "monotone":
            assert all(tab[a] & ~tab[a | b] == 0 for a in subs for b in subs)
        if kind == "join":
            assert all(tab[a | b] == tab[a] | tab[b] for a in subs for b in subs)
        if kind == "meet":
            assert all(tab[a & b] == tab[a] & tab[b] for a in subs for b in subs)
    with pytest.raises(ValueError):
        sample_table_operator(t, rng, "other")
