import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from akblocks.beta_core import (
    EMPTY,
    BetaSet,
    EQuotient,
    Partition,
    beta_set,
    core_partition,
    delta,
    e_core,
    e_quotient,
    e_quotient_inverse,
    e_weight,
    from_beads,
    hub,
    members_above,
    partition_of,
    partitions,
    shift,
    weight_partition,
)

from oracles import beta_st, defining_charge, from_set, rim_hook_core, slide_core, window


def test_partition_validation():
    assert Partition((2, 1, 0, 0)) == (2, 1)
    assert Partition().size == 0
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_partitions_counts_and_order():
    counts = [sum(1 for _ in partitions(n)) for n in range(13)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_beta_set_members_frozen():
    B = beta_set((4, 4, 3, 1), 2)
    assert sorted(members_above(B, -3), reverse=True) == [5, 4, 2, -1, -3]
    assert -4 in B and -2 not in B and 3 not in B


@given(beta_st(12, (-10, 10)))
def test_charge_matches_defining_count(B):
    assert defining_charge(B) == B.charge


@given(beta_st(12))
def test_round_trip(B):
    assert beta_set(partition_of(B), B.charge) == B
    assert from_set(window(B), B.floor - 5) == B


@given(beta_st(10), beta_st(10))
def test_charge_difference_identity(B, C):
    lo = min(B.floor, C.floor) - 3
    hi = max(B.charge + B.shape.part(1), C.charge + C.shape.part(1)) + 1
    b, c = window(B, lo, hi), window(C, lo, hi)
    assert len(b - c) - len(c - b) == B.charge - C.charge


def test_worked_example():
    B = beta_set((4, 4, 3, 1), 2)
    assert e_core(B, 3) == BetaSet(2, (4, 2))
    assert e_weight(B, 3) == 2
    assert hub(B, 3) == (-3, 0, 2)
    assert hub(e_core(B, 3), 3) == hub(B, 3)


def test_quotient_frozen():
    # runner charges (0, 0, 2); one bead on runner 1 sits one row low
    q = e_quotient(beta_set((4, 4, 3, 1), 2), 3)
    assert q.charges == (0, 0, 2)
    assert q.shapes == (EMPTY, (2,), EMPTY)


def test_delta_frozen():
    B = beta_set((4, 4, 3, 1), 2)
    assert [delta(B, 3, i) for i in range(3)] == [-3, 0, 2]
    with pytest.raises(ValueError):
        delta(B, 3, 3)
    with pytest.raises(ValueError):
        e_core(B, 1)


@settings(max_examples=300)
@given(beta_st(12), st.integers(2, 6))
def test_core_and_weight_vs_bead_sliding(B, e):
    core, moves = slide_core(B, e)
    assert e_core(B, e) == core
    assert e_weight(B, e) == moves


@settings(max_examples=300)
@given(beta_st(12), st.integers(2, 6))
def test_quotient_inverse_and_charge_additivity(B, e):
    q = e_quotient(B, e)
    assert e_quotient_inverse(q) == B
    assert sum(q.charges) == B.charge
    for i, comp in enumerate(q.components):
        runner = {x // e for x in window(B, B.floor - 2 * e) if x % e == i}
        assert window(comp, B.floor // e - 1) == {y for y in runner if y >= B.floor // e - 1}


@given(beta_st(10), st.integers(2, 5), st.integers(-7, 7))
def test_shift_laws(B, e, k):
    assert e_core(shift(B, k), e) == shift(e_core(B, e), k)
    assert e_weight(shift(B, k), e) == e_weight(B, e)
    q, qs = e_quotient(B, e), e_quotient(shift(B, k * e), e)
    assert qs.charges == tuple(c + k for c in q.charges)
    assert qs.shapes == q.shapes


def test_delta_formulas_agree_randomized():
    rng = random.Random(11)
    for _ in range(1000):
        e = rng.randint(2, 6)
        lam = list(partitions(rng.randint(0, 12)))
        B = BetaSet(rng.randint(-10, 10), rng.choice(lam))
        i = rng.randrange(e)
        s = e_quotient(B, e).charges
        assert delta(B, e, i) == s[i] - s[i - 1] - (1 if i == 0 else 0)


def test_size_decomposition_exhaustive():
    for e in range(2, 6):
        for n in range(13):
            for lam in partitions(n):
                core, moves = rim_hook_core(lam, e)
                assert core_partition(lam, e) == core
                assert weight_partition(lam, e) == moves
                assert n == core.size + e * moves


def test_from_beads_ignores_positions_below_floor():
    assert from_beads([5, 4, 2, -1, -3, -7], -3) == beta_set((4, 4, 3, 1), 2)


def test_quotient_inverse_rejects_wrong_length():
    with pytest.raises(ValueError):
        e_quotient_inverse(EQuotient(3, (BetaSet(0), BetaSet(0))))
