"""The Uglov map from l-tuples of beta-sets to beta-sets, and its inverse.

The e-abacus of the image is built by stacking the infinite abaci of the
inputs (the first component at the bottom), cutting into rows of length e and
interleaving the rows.  Position ``x = a*e + b`` of component ``j`` lands at
``a*e*l + (l - j)*e + b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .beta_core import BetaSet, Partition, e_core, e_weight, from_beads, members_above
from .multipartition import ChargedMultipartition


def upsilon(j: int, x: int, e: int, l: int) -> int:
    if not 1 <= j <= l:
        raise ValueError(f"component index {j} outside 1..{l}")
    a, b = divmod(x, e)
    return a * e * l + (l - j) * e + b


def uglov_map(bs: Sequence[BetaSet], e: int) -> BetaSet:
    if e < 2:
        raise ValueError(f"e must be at least 2, got {e}")
    l = len(bs)
    if l < 1:
        raise ValueError("need at least one beta-set")
    # rows below `a` are full in every input, and fill everything below a*e*l
    a = min(b.floor for b in bs) // e
    beads = [
        upsilon(j, x, e, l)
        for j, b in enumerate(bs, 1)
        for x in members_above(b, a * e)
    ]
    return from_beads(beads, a * e * l)


def uglov_inverse(B: BetaSet, e: int, l: int) -> tuple[BetaSet, ...]:
    if e < 2:
        raise ValueError(f"e must be at least 2, got {e}")
    if l < 1:
        raise ValueError(f"l must be at least 1, got {l}")
    a = B.floor // (e * l)
    comps: list[list[int]] = [[] for _ in range(l)]
    for x in members_above(B, a * e * l):
        row, b = divmod(x, e)
        j = l - row % l
        comps[j - 1].append((row - (l - j)) // l * e + b)
    return tuple(from_beads(c, a * e) for c in comps)


@dataclass(frozen=True)
class UglovImage:
    partition: Partition
    charge: int

    def beta_set(self) -> BetaSet:
        return BetaSet(self.charge, self.partition)


def uglov_partition(lam: ChargedMultipartition, e: int) -> UglovImage:
    B = uglov_map(lam.beta_sets(), e)
    return UglovImage(B.shape, B.charge)


def pair_core(lam: ChargedMultipartition, e: int) -> Partition:
    return e_core(uglov_map(lam.beta_sets(), e), e).shape


def pair_weight(lam: ChargedMultipartition, e: int) -> int:
    return e_weight(uglov_map(lam.beta_sets(), e), e)
