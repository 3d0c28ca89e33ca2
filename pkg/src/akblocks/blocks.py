"""Block combinatorics of Ariki-Koike algebras.

Blocks are handled purely through their combinatorial labels: two
l-partitions lie in the same block exactly when their residue contents agree,
equivalently when their cores and minimal orbit weights agree.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterator, Optional, Sequence

from .beta_core import BetaSet, Partition, delta, members_above
from .multipartition import (
    ChargedMultipartition,
    boundary_nodes,
    hub_from_content,
    multi_hub,
    multipartitions,
    residue_content,
)
from .uglov import pair_core, pair_weight, uglov_map
from .weyl import act_right, canonicalize, dot_si_beta


DEFAULT_GUARD = {1: 12, 2: 8}
DEFAULT_GUARD_HIGHER = 6


class GuardExceeded(ValueError):
    """Exhaustive enumeration was requested beyond the configured size."""


def default_guard(l: int) -> int:
    return DEFAULT_GUARD.get(l, DEFAULT_GUARD_HIGHER)


def _check_guard(n: int, l: int, guard: int | None) -> None:
    limit = default_guard(l) if guard is None else guard
    if n > limit:
        raise GuardExceeded(f"n = {n} exceeds the enumeration guard {limit} for l = {l}")


@dataclass(frozen=True)
class BlockDescriptor:
    e: int
    l: int
    multicharge: tuple[int, ...]
    core: Partition
    weight: int
    hub: tuple[int, ...]
    content: tuple[int, ...]
    n: int


def block_core(lam: ChargedMultipartition, e: int) -> Partition:
    return pair_core(lam, e)


def block_weight(lam: ChargedMultipartition, e: int) -> int:
    """Minimum of the pair weight over the Weyl orbit.

    The minimum is attained exactly at charges in the closed fundamental
    alcove, so it is read off at the canonical representative.
    """
    _, w = canonicalize(lam.charge, e)
    return pair_weight(act_right(lam, w, e), e)


def block_of(lam: ChargedMultipartition, e: int) -> BlockDescriptor:
    return BlockDescriptor(
        e=e,
        l=lam.l,
        multicharge=lam.charge,
        core=block_core(lam, e),
        weight=block_weight(lam, e),
        hub=multi_hub(lam, e),
        content=residue_content(lam, e),
        n=lam.size,
    )


def same_block(a: ChargedMultipartition, b: ChargedMultipartition, e: int) -> bool:
    if a.charge != b.charge:
        raise ValueError(f"multicharges differ: {a.charge} vs {b.charge}")
    return residue_content(a, e) == residue_content(b, e)


def same_label(a: ChargedMultipartition, b: ChargedMultipartition, e: int) -> bool:
    """Core and weight comparison; agrees with :func:`same_block`."""
    if a.charge != b.charge:
        raise ValueError(f"multicharges differ: {a.charge} vs {b.charge}")
    return (block_core(a, e), block_weight(a, e)) == (block_core(b, e), block_weight(b, e))


def _members(e: int, r: Sequence[int], n: int) -> Iterator[ChargedMultipartition]:
    r = tuple(r)
    for comps in multipartitions(n, len(r)):
        yield ChargedMultipartition(comps, r)


def enumerate_block(desc: BlockDescriptor, guard: int | None = None) -> list[ChargedMultipartition]:
    """All l-partitions of ``desc.n`` with the descriptor's core and weight."""
    _check_guard(desc.n, desc.l, guard)
    return [
        lam
        for lam in _members(desc.e, desc.multicharge, desc.n)
        if block_core(lam, desc.e) == desc.core and block_weight(lam, desc.e) == desc.weight
    ]


def all_blocks(e: int, r: Sequence[int], n: int, guard: int | None = None
               ) -> dict[BlockDescriptor, list[ChargedMultipartition]]:
    """Partition of all l-partitions of ``n`` into blocks, keyed by descriptor."""
    _check_guard(n, len(r), guard)
    out: dict[tuple, list[ChargedMultipartition]] = {}
    first: dict[tuple, ChargedMultipartition] = {}
    for lam in _members(e, r, n):
        key = residue_content(lam, e)
        out.setdefault(key, []).append(lam)
        first.setdefault(key, lam)
    return {block_of(first[k], e): v for k, v in out.items()}


def block_from_label(e: int, r: Sequence[int], n: int, core: Partition, weight: int,
                     guard: int | None = None) -> Optional[BlockDescriptor]:
    """Full descriptor of the block with the given core and weight, if it exists."""
    r = tuple(r)
    _check_guard(n, len(r), guard)
    core = Partition(core)
    for lam in _members(e, r, n):
        if block_core(lam, e) == core and block_weight(lam, e) == weight:
            return block_of(lam, e)
    return None


def _check_residue(desc: BlockDescriptor, i: int) -> None:
    if not 0 <= i < desc.e:
        raise ValueError(f"residue {i} outside 0..{desc.e - 1}")


def block_delta(desc: BlockDescriptor, i: int) -> int:
    _check_residue(desc, i)
    return desc.hub[i]


def si_dot_block(desc: BlockDescriptor, i: int) -> BlockDescriptor:
    """The block ``s_i . B``, computed from the descriptor alone."""
    d = block_delta(desc, i)
    if d == 0:
        return desc
    e, l = desc.e, desc.l
    r = sum(desc.multicharge)
    core = dot_si_beta(BetaSet(r, desc.core), e, i, l).shape
    content = list(desc.content)
    content[i] -= d
    return replace(
        desc,
        core=core,
        content=tuple(content),
        hub=hub_from_content(content, desc.multicharge, e),
        n=desc.n - d,
    )


def wk_pair(desc: BlockDescriptor, i: int) -> Optional[tuple[int, int]]:
    d = block_delta(desc, i)
    if d == 0:
        return None
    return desc.weight, abs(d)


@dataclass(frozen=True)
class ScopesStatus:
    theorem_sufficient: bool
    direct: Optional[bool]


def scopes_direct(members: Sequence[ChargedMultipartition], e: int, i: int) -> bool:
    """Every member lacks addable i-nodes, or every member lacks removable i-nodes."""
    nodes = [boundary_nodes(lam, e, i) for lam in members]
    return all(not add for _, add in nodes) or all(not rem for rem, _ in nodes)


def scopes_status(desc: BlockDescriptor, i: int, guard: int | None = None) -> ScopesStatus:
    d = block_delta(desc, i)
    sufficient = d != 0 and abs(d) >= desc.weight
    limit = default_guard(desc.l) if guard is None else guard
    direct = None
    if desc.n <= limit:
        direct = scopes_direct(enumerate_block(desc, guard=limit), desc.e, i)
    return ScopesStatus(sufficient, direct)


def scopes_lemma_holds(lam: ChargedMultipartition, e: int, i: int) -> bool:
    """Bead-level consequence used for the sufficient condition.

    Moves ``lam`` to a minimal-weight charge, shifts every charge by one when
    ``i = 0`` so the residue becomes 1, and checks that if the weight is at
    most the hub entry then the Uglov image has no bead on runner ``i'-1``
    with a vacant successor.  Returns True when the hypothesis fails.
    """
    _, w = canonicalize(lam.charge, e)
    mu = act_right(lam, w, e)
    ip = i + 1 if i == 0 else i
    if i == 0:
        mu = ChargedMultipartition(mu.components, tuple(t + 1 for t in mu.charge))
    B = uglov_map(mu.beta_sets(), e)
    if pair_weight(mu, e) > delta(B, e, ip):
        return True
    return not any(x % e == (ip - 1) % e and (x + 1) not in B
                   for x in members_above(B, B.floor - 1))
