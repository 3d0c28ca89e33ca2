"""Charged multipartitions: nodes, residues, addable/removable nodes and hubs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, NamedTuple, Sequence

from .beta_core import EMPTY, BetaSet, Partition, delta, partitions


@dataclass(frozen=True)
class ChargedMultipartition:
    """An l-tuple of partitions together with an l-tuple of integer charges."""

    components: tuple[Partition, ...]
    charge: tuple[int, ...]

    def __post_init__(self):
        comps = tuple(Partition(c) for c in self.components)
        charge = tuple(int(t) for t in self.charge)
        if not charge:
            raise ValueError("multicharge must have at least one entry")
        if len(comps) != len(charge):
            raise ValueError(
                f"{len(comps)} components but multicharge of length {len(charge)}"
            )
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "charge", charge)

    @property
    def l(self) -> int:
        return len(self.charge)

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)

    def beta_sets(self) -> tuple[BetaSet, ...]:
        return tuple(BetaSet(t, lam) for lam, t in zip(self.components, self.charge))

    @classmethod
    def from_beta_sets(cls, bs: Sequence[BetaSet]) -> "ChargedMultipartition":
        return cls(tuple(b.shape for b in bs), tuple(b.charge for b in bs))

    def nodes(self) -> Iterator["Node"]:
        for j, lam in enumerate(self.components, 1):
            for a, part in enumerate(lam, 1):
                for b in range(1, part + 1):
                    yield Node(a, b, j)

    def __contains__(self, node) -> bool:
        a, b, j = node
        return 1 <= j <= self.l and a >= 1 and 1 <= b <= self.components[j - 1].part(a)


def charged(components: Iterable[Iterable[int]], charge: Iterable[int]) -> ChargedMultipartition:
    return ChargedMultipartition(tuple(Partition(c) for c in components), tuple(charge))


class Node(NamedTuple):
    row: int
    col: int
    comp: int


def _node_residue(node: Node, t: Sequence[int], e: int) -> int:
    return (node.col - node.row + t[node.comp - 1]) % e


def residue(node: Node | tuple, t: Sequence[int], e: int,
            lam: ChargedMultipartition | None = None) -> int:
    """Residue of ``node`` relative to the multicharge ``t``.

    When ``lam`` is given the node must lie in its Young diagram.
    """
    node = Node(*node)
    if lam is not None and node not in lam:
        raise ValueError(f"{node} is not a node of {lam.components}")
    if not 1 <= node.comp <= len(t):
        raise ValueError(f"component {node.comp} outside 1..{len(t)}")
    return _node_residue(node, t, e)


def residue_content(lam: ChargedMultipartition, e: int) -> tuple[int, ...]:
    """Number of i-nodes for each residue i in 0..e-1."""
    if e < 2:
        raise ValueError(f"e must be at least 2, got {e}")
    counts = [0] * e
    for j, (part, t) in enumerate(zip(lam.components, lam.charge)):
        for a, row_len in enumerate(part, 1):
            # residues along a row are consecutive
            start = 1 - a + t
            for b in range(row_len):
                counts[(start + b) % e] += 1
    return tuple(counts)


def removable_nodes(lam: ChargedMultipartition) -> list[Node]:
    out = []
    for j, part in enumerate(lam.components, 1):
        for a in range(1, len(part) + 1):
            if part.part(a) > part.part(a + 1):
                out.append(Node(a, part.part(a), j))
    return out


def addable_nodes(lam: ChargedMultipartition) -> list[Node]:
    out = []
    for j, part in enumerate(lam.components, 1):
        for a in range(1, len(part) + 2):
            if a == 1 or part.part(a - 1) > part.part(a):
                out.append(Node(a, part.part(a) + 1, j))
    return out


def boundary_nodes(lam: ChargedMultipartition, e: int, i: int) -> tuple[list[Node], list[Node]]:
    """Removable and addable i-nodes, each sorted by (component, row)."""
    if not 0 <= i < e:
        raise ValueError(f"residue {i} outside 0..{e - 1}")
    t = lam.charge
    rem = [n for n in removable_nodes(lam) if _node_residue(n, t, e) == i]
    add = [n for n in addable_nodes(lam) if _node_residue(n, t, e) == i]
    key = lambda n: (n.comp, n.row)
    return sorted(rem, key=key), sorted(add, key=key)


def multi_hub(lam: ChargedMultipartition, e: int) -> tuple[int, ...]:
    bs = lam.beta_sets()
    return tuple(sum(delta(b, e, i) for b in bs) for i in range(e))


def hub_from_content(content: Sequence[int], charge: Sequence[int], e: int) -> tuple[int, ...]:
    """Hub determined by residue counts: removable minus addable i-nodes equals
    2*C_i - C_{i-1} - C_{i+1} - #{j : t_j = i mod e}."""
    out = []
    for i in range(e):
        base = sum(1 for t in charge if t % e == i)
        out.append(2 * content[i] - content[(i - 1) % e] - content[(i + 1) % e] - base)
    return tuple(out)


def apply_nodes(lam: ChargedMultipartition, add: Iterable[Node], remove: Iterable[Node]) -> ChargedMultipartition:
    """Rebuild ``lam`` after removing and adding the given nodes."""
    rows = [list(p) for p in lam.components]
    for n in remove:
        rows[n.comp - 1][n.row - 1] -= 1
    for n in add:
        r = rows[n.comp - 1]
        if n.row > len(r):
            r.append(0)
        r[n.row - 1] += 1
    return ChargedMultipartition(tuple(Partition(r) for r in rows), lam.charge)


def multipartitions(n: int, l: int) -> list[tuple[Partition, ...]]:
    """All l-partitions of n.

    Ordered lexicographically on the sequence of components, each component
    compared in reverse-lexicographic order, so ``((n), (), ...)`` comes first.
    """
    out = [combo for sizes in _compositions(n, l)
           for combo in product(*(list(partitions(k)) for k in sizes))]
    out.sort(reverse=True)
    return out


def _compositions(n: int, l: int) -> Iterator[tuple[int, ...]]:
    if l == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, l - 1):
            yield (first,) + rest


def empty(l: int, charge: Sequence[int] | None = None) -> ChargedMultipartition:
    return ChargedMultipartition((EMPTY,) * l, tuple(charge) if charge else (0,) * l)
