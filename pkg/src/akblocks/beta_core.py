"""Partitions, beta-sets of arbitrary charge, and single-abacus operations.

A beta-set is an infinite subset of the integers with a largest element whose
complement has a smallest element.  It is stored canonically as a pair
``(charge, shape)``; the denoted set is ``{shape[a] + charge - a : a >= 1}``
with ``shape[a] = 0`` past the end of the partition.  Bead sets are only ever
materialised above an explicit cutoff.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[a] < parts[a + 1] for a in range(len(parts) - 1)):
            raise ValueError(f"parts are not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, a: int) -> int:
        """The ``a``-th part, 1-indexed, zero past the end."""
        return self[a - 1] if 1 <= a <= len(self) else 0

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


EMPTY = Partition()


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order: (n), (n-1,1), ..."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + tuple(rest))


@dataclass(frozen=True)
class BetaSet:
    """The beta-set of ``shape`` with charge ``charge``."""

    charge: int
    shape: Partition = EMPTY

    def __post_init__(self):
        if not isinstance(self.shape, Partition):
            object.__setattr__(self, "shape", Partition(self.shape))

    @property
    def floor(self) -> int:
        """Every integer strictly below this bound is a member."""
        return self.charge - len(self.shape)

    def element(self, a: int) -> int:
        """The ``a``-th largest member."""
        return self.shape.part(a) + self.charge - a

    def __contains__(self, x: int) -> bool:
        if x < self.floor:
            return True
        for a in range(1, len(self.shape) + 1):
            b = self.element(a)
            if b == x:
                return True
            if b < x:
                return False
        return False

    def __repr__(self) -> str:
        return f"BetaSet({self.charge}, {tuple(self.shape)})"


def beta_set(lam: Iterable[int], t: int) -> BetaSet:
    return BetaSet(t, Partition(lam))


def partition_of(B: BetaSet) -> Partition:
    return B.shape


def members_above(B: BetaSet, cutoff: int) -> set[int]:
    """``{x in B : x >= cutoff}``."""
    out = set()
    a = 1
    while True:
        x = B.element(a)
        if x < cutoff:
            return out
        out.add(x)
        a += 1


def from_beads(beads: Iterable[int], floor: int) -> BetaSet:
    """Rebuild a beta-set from its members ``>= floor``.

    Every position below ``floor`` is taken to be a member; ``beads`` may
    contain positions below ``floor``, which are ignored.
    """
    top = sorted((x for x in set(beads) if x >= floor), reverse=True)
    # the (m+k)-th element is floor - k, so charge = floor + m
    charge = floor + len(top)
    return BetaSet(charge, Partition(x + a - charge for a, x in enumerate(top, 1)))


def shift(B: BetaSet, k: int) -> BetaSet:
    return BetaSet(B.charge + k, B.shape)


def map_beads(B: BetaSet, g: Callable[[int], int], reach: int) -> BetaSet:
    """Image of ``B`` under a bijection ``g`` of the integers.

    ``reach`` must bound ``|g(x) - x|`` for every ``x``.
    """
    floor = B.floor - reach
    beads = (g(x) for x in members_above(B, floor - reach))
    return from_beads(beads, floor)


def _check_e(e: int) -> None:
    if e < 2:
        raise ValueError(f"e must be at least 2, got {e}")


def _row_floor(B: BetaSet, e: int) -> int:
    """A multiple of ``e`` below which ``B`` is full."""
    return (B.floor // e) * e


@dataclass(frozen=True)
class EQuotient:
    e: int
    components: tuple[BetaSet, ...]

    @property
    def charges(self) -> tuple[int, ...]:
        return tuple(c.charge for c in self.components)

    @property
    def shapes(self) -> tuple[Partition, ...]:
        return tuple(c.shape for c in self.components)


def e_quotient(B: BetaSet, e: int) -> EQuotient:
    _check_e(e)
    m = _row_floor(B, e)
    runners: list[list[int]] = [[] for _ in range(e)]
    for x in members_above(B, m):
        runners[x % e].append(x // e)
    return EQuotient(e, tuple(from_beads(r, m // e) for r in runners))


def e_quotient_inverse(q: EQuotient) -> BetaSet:
    e = q.e
    _check_e(e)
    if len(q.components) != e:
        raise ValueError(f"expected {e} components, got {len(q.components)}")
    f = min(c.floor for c in q.components)
    beads = [a * e + i for i, c in enumerate(q.components) for a in members_above(c, f)]
    return from_beads(beads, f * e)


def e_core(B: BetaSet, e: int) -> BetaSet:
    q = e_quotient(B, e)
    return e_quotient_inverse(EQuotient(e, tuple(BetaSet(s) for s in q.charges)))


def e_weight(B: BetaSet, e: int) -> int:
    return sum(s.size for s in e_quotient(B, e).shapes)


def delta(B: BetaSet, e: int, i: int) -> int:
    """Beads on runner ``i`` with a vacant predecessor, minus beads on runner
    ``i - 1`` with a vacant successor."""
    _check_e(e)
    if not 0 <= i < e:
        raise ValueError(f"residue {i} outside 0..{e - 1}")
    beads = members_above(B, B.floor - 1)
    f = B.floor

    def has(x):
        return x < f or x in beads

    up = sum(1 for x in beads if x % e == i and not has(x - 1))
    down = sum(1 for x in beads if x % e == (i - 1) % e and not has(x + 1))
    return up - down


def hub(B: BetaSet, e: int) -> tuple[int, ...]:
    return tuple(delta(B, e, i) for i in range(e))


def core_partition(lam: Iterable[int], e: int) -> Partition:
    return e_core(beta_set(lam, 0), e).shape


def weight_partition(lam: Iterable[int], e: int) -> int:
    return e_weight(beta_set(lam, 0), e)
