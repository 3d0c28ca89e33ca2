import itertools
import random

import pytest

from akblocks.beta_core import Partition
from akblocks.blocks import (
    BlockDescriptor,
    GuardExceeded,
    ScopesStatus,
    all_blocks,
    block_from_label,
    block_of,
    enumerate_block,
    same_block,
    same_label,
    scopes_direct,
    scopes_lemma_holds,
    scopes_status,
    si_dot_block,
    wk_pair,
)
from akblocks.multipartition import ChargedMultipartition, charged, multipartitions
from akblocks.weyl import WeylElement, act_charge, dot_si_multipartition

from oracles import random_multipartition

SIX = [
    ((3, 2), ()), ((3, 1), (1,)), ((3,), (1, 1)),
    ((1, 1), (3,)), ((1,), (3, 1)), ((), (3, 2)),
]


def fayers_weight(content, charge, e):
    # sum of C_{r_j} minus half the sum of squared consecutive differences
    lin = sum(content[t % e] for t in charge)
    quad = sum((content[i] - content[(i + 1) % e]) ** 2 for i in range(e))
    return lin - quad // 2


def test_example_block_descriptor():
    desc = block_of(charged(SIX[0], (2, 2)), 5)
    assert desc == BlockDescriptor(5, 2, (2, 2), Partition((1,)), 2,
                                   (-2, 0, 0, -1, 1), (0, 1, 2, 1, 1), 5)


def test_example_block_members():
    desc = block_from_label(5, (2, 2), 5, Partition((1,)), 2)
    members = enumerate_block(desc)
    assert [m.components for m in members] == SIX
    # no block of bipartitions of 5 at this charge has an empty core
    assert block_from_label(5, (2, 2), 5, Partition(), 2) is None
    assert all(d.core for d in all_blocks(5, (2, 2), 5))


def test_example_scopes_at_residue_four():
    desc = block_of(charged(SIX[0], (2, 2)), 5)
    assert wk_pair(desc, 4) == (2, 1)
    assert scopes_status(desc, 4) == ScopesStatus(False, True)
    image = si_dot_block(desc, 4)
    assert image.n == 4 and image.weight == 2
    assert set(enumerate_block(image)) == {
        dot_si_multipartition(m, 5, 4) for m in enumerate_block(desc)}


def test_example_scopes_at_residue_zero():
    desc = block_of(charged(SIX[0], (2, 2)), 5)
    assert wk_pair(desc, 0) == (2, 2)
    assert scopes_status(desc, 0) == ScopesStatus(True, True)
    assert wk_pair(desc, 1) is None
    assert si_dot_block(desc, 1) == desc


def test_same_block_requires_equal_charges():
    a = charged([(1,)], (0,))
    with pytest.raises(ValueError):
        same_block(a, charged([(1,)], (1,)), 3)
    with pytest.raises(ValueError):
        same_label(a, charged([(1,)], (1,)), 3)


def test_guard():
    desc = block_of(charged([(9,), ()], (0, 0)), 3)
    with pytest.raises(GuardExceeded):
        enumerate_block(desc)
    with pytest.raises(GuardExceeded):
        all_blocks(3, (0,), 13)
    assert enumerate_block(block_of(charged([(3,), ()], (0, 0)), 3), guard=3)
    with pytest.raises(GuardExceeded):
        enumerate_block(block_of(charged([(3,), ()], (0, 0)), 3), guard=2)
    assert scopes_status(desc, 0).direct is None


def test_criterion_equivalence_small():
    rng = random.Random(0)
    for l, n_max in ((1, 8), (2, 5), (3, 4)):
        for e in (2, 3, 4):
            r = tuple(rng.randint(-6, 6) for _ in range(l))
            for n in range(n_max + 1):
                mps = [ChargedMultipartition(c, r) for c in multipartitions(n, l)]
                labels = {m: (block_of(m, e).core, block_of(m, e).weight) for m in mps}
                for a, b in itertools.combinations(mps, 2):
                    assert same_block(a, b, e) == (labels[a] == labels[b])


def test_fayers_weight_and_hub_injectivity():
    rng = random.Random(6)
    for _ in range(30):
        l, e = rng.randint(1, 2), rng.randint(2, 5)
        r = tuple(rng.randint(-6, 6) for _ in range(l))
        n = rng.randint(0, 6)
        blocks = all_blocks(e, r, n)
        seen = {}
        for desc, members in blocks.items():
            assert fayers_weight(desc.content, r, e) == desc.weight
            assert seen.setdefault((desc.hub, desc.weight), desc) == desc
            assert enumerate_block(desc) == members


def test_block_partition_orbit_invariant():
    rng = random.Random(12)
    for _ in range(30):
        l, e = rng.randint(1, 3), rng.randint(2, 4)
        r = tuple(rng.randint(-5, 5) for _ in range(l))
        sigma = list(range(1, l + 1))
        rng.shuffle(sigma)
        w = WeylElement(sigma, [rng.randint(-2, 2) for _ in range(l)])
        rw = act_charge(r, w, e)
        n = rng.randint(0, 4)
        # permute the components along with the charge
        def perm(comps):
            return tuple(comps[s - 1] for s in sigma)

        lhs = {frozenset(perm(m.components) for m in ms) for ms in all_blocks(e, r, n).values()}
        rhs = {frozenset(m.components for m in ms) for ms in all_blocks(e, rw, n).values()}
        assert lhs == rhs


def test_si_dot_block_laws():
    rng = random.Random(7)
    for _ in range(40):
        l, e = rng.randint(1, 2), rng.randint(2, 4)
        r = tuple(rng.randint(-4, 4) for _ in range(l))
        n = rng.randint(0, 5)
        for desc, members in all_blocks(e, r, n).items():
            for i in range(e):
                img = si_dot_block(desc, i)
                assert si_dot_block(img, i) == desc
                assert img.weight == desc.weight
                mapped = {dot_si_multipartition(m, e, i) for m in members}
                assert len(mapped) == len(members)
                if img.n <= 8:
                    assert set(enumerate_block(img)) == mapped
                    assert all(block_of(m, e) == img for m in mapped)


def test_scopes_soundness_and_lemma():
    for e in (2, 3):
        for r in ((0,), (1,), (0, 0), (0, 2), (1, -2)):
            for n in range(6):
                for desc, members in all_blocks(e, r, n).items():
                    for i in range(e):
                        st = scopes_status(desc, i)
                        assert st.direct == scopes_direct(members, e, i)
                        if st.theorem_sufficient:
                            assert st.direct
                        for m in members:
                            assert scopes_lemma_holds(m, e, i)


def test_residue_out_of_range():
    desc = block_of(charged([(1,)], (0,)), 3)
    with pytest.raises(ValueError):
        wk_pair(desc, 3)
    with pytest.raises(ValueError):
        si_dot_block(desc, -1)


def test_random_members_round_trip_through_label():
    rng = random.Random(19)
    for _ in range(100):
        l, e = rng.randint(1, 3), rng.randint(2, 5)
        lam = random_multipartition(rng, rng.randint(0, 5), l)
        desc = block_of(lam, e)
        assert block_from_label(e, lam.charge, lam.size, desc.core, desc.weight) == block_of(
            enumerate_block(desc)[0], e)
        assert lam in enumerate_block(desc)
