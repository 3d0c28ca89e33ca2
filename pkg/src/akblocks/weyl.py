"""Extended affine Weyl group actions.

Permutations are tuples ``sigma`` with ``sigma[j-1] = sigma(j)`` on 1..l and
compose right to left.  The symmetric group acts on the right by place
permutation, ``(x_1, ..., x_l)^sigma = (x_sigma(1), ..., x_sigma(l))``, and a
group element ``sigma u`` acts on a charged multipartition by
``(lam; t)^(sigma u) = (lam^sigma; t^sigma + e*u)``.

The dot actions are left actions on the integers, lifted to beta-sets and
charged multipartitions, in which ``s_i`` swaps abacus runners ``i-1`` and
``i`` and ``e_j`` slides runner ``j-1`` down.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .beta_core import BetaSet, map_beads
from .multipartition import ChargedMultipartition


def place_permute(xs: Sequence, sigma: Sequence[int]) -> tuple:
    return tuple(xs[s - 1] for s in sigma)


def compose_perms(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """``sigma o tau`` (apply ``tau`` first)."""
    return tuple(sigma[t - 1] for t in tau)


def inverse_perm(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for j, s in enumerate(sigma, 1):
        inv[s - 1] = j
    return tuple(inv)


@dataclass(frozen=True)
class WeylElement:
    """The element ``sigma u``: place-permute by ``sigma``, then translate by ``e*u``."""

    sigma: tuple[int, ...]
    u: tuple[int, ...]

    def __post_init__(self):
        sigma = tuple(int(s) for s in self.sigma)
        u = tuple(int(x) for x in self.u)
        if sorted(sigma) != list(range(1, len(sigma) + 1)):
            raise ValueError(f"{sigma} is not a permutation of 1..{len(sigma)}")
        if len(u) != len(sigma):
            raise ValueError("permutation and translation have different lengths")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "u", u)

    @property
    def l(self) -> int:
        return len(self.sigma)

    @classmethod
    def identity(cls, l: int) -> "WeylElement":
        return cls(tuple(range(1, l + 1)), (0,) * l)

    @classmethod
    def translation(cls, u: Sequence[int]) -> "WeylElement":
        return cls(tuple(range(1, len(u) + 1)), tuple(u))

    @classmethod
    def permutation(cls, sigma: Sequence[int]) -> "WeylElement":
        return cls(tuple(sigma), (0,) * len(sigma))

    @classmethod
    def s(cls, k: int, l: int) -> "WeylElement":
        """Coxeter generator ``s_k``; ``s_0 = (e_1 - e_l)(1, l)``."""
        if not 0 <= k < l:
            raise ValueError(f"s_{k} is not a generator for l = {l}")
        sigma = list(range(1, l + 1))
        u = [0] * l
        if k == 0:
            if l == 1:
                raise ValueError("s_0 needs l >= 2")
            sigma[0], sigma[-1] = l, 1
            # translating first by e_1 - e_l then swapping 1, l
            u[0], u[-1] = -1, 1
        else:
            sigma[k - 1], sigma[k] = k + 1, k
        return cls(tuple(sigma), tuple(u))

    @classmethod
    def rho_e(cls, l: int) -> "WeylElement":
        """``rho e_l`` with ``rho = (1, 2, ..., l)``; sends t to (t_2, ..., t_l, t_1 + e)."""
        sigma = tuple(range(2, l + 1)) + (1,)
        return cls(sigma, (0,) * (l - 1) + (1,))

    def then(self, other: "WeylElement") -> "WeylElement":
        """The product ``self * other``: act by ``self``, then by ``other``."""
        if other.l != self.l:
            raise ValueError("elements of different rank")
        return WeylElement(
            compose_perms(self.sigma, other.sigma),
            tuple(a + b for a, b in zip(place_permute(self.u, other.sigma), other.u)),
        )

    def inverse(self) -> "WeylElement":
        inv = inverse_perm(self.sigma)
        return WeylElement(inv, tuple(-x for x in place_permute(self.u, inv)))

    def power(self, k: int) -> "WeylElement":
        base = self if k >= 0 else self.inverse()
        out = WeylElement.identity(self.l)
        for _ in range(abs(k)):
            out = out.then(base)
        return out


def act_charge(t: Sequence[int], w: WeylElement, e: int) -> tuple[int, ...]:
    if len(t) != w.l:
        raise ValueError(f"multicharge of length {len(t)} but Weyl element of rank {w.l}")
    return tuple(x + e * u for x, u in zip(place_permute(t, w.sigma), w.u))


def act_right(lam: ChargedMultipartition, w: WeylElement, e: int) -> ChargedMultipartition:
    if lam.l != w.l:
        raise ValueError(f"{lam.l}-multipartition but Weyl element of rank {w.l}")
    return ChargedMultipartition(place_permute(lam.components, w.sigma), act_charge(lam.charge, w, e))


class DomainClass(enum.Enum):
    IN_A = "A"
    IN_ABAR_ONLY = "Abar"
    OUTSIDE = "outside"


def classify_charge(t: Sequence[int], e: int) -> DomainClass:
    """Position of ``t`` relative to the fundamental alcove and its closure."""
    if any(t[j] > t[j + 1] for j in range(len(t) - 1)):
        return DomainClass.OUTSIDE
    spread = t[-1] - t[0]
    if spread <= e - 1:
        return DomainClass.IN_A
    if spread == e:
        return DomainClass.IN_ABAR_ONLY
    return DomainClass.OUTSIDE


def in_closure(t: Sequence[int], e: int) -> bool:
    return classify_charge(t, e) is not DomainClass.OUTSIDE


def canonicalize(t: Sequence[int], e: int) -> tuple[tuple[int, ...], WeylElement]:
    """Move ``t`` to an ascending multicharge with entries in 0..e-1.

    Returns the reduced charge and a witness ``w`` with ``t^w`` equal to it.
    Equal residues keep their original relative order.
    """
    if e < 2:
        raise ValueError(f"e must be at least 2, got {e}")
    order = sorted(range(len(t)), key=lambda j: t[j] % e)
    sigma = tuple(j + 1 for j in order)
    u = tuple(-(t[j] // e) for j in order)
    w = WeylElement(sigma, u)
    return act_charge(t, w, e), w


def v_vector(a: int, b: int, l: int) -> tuple[int, ...]:
    """``(a, ..., a, a+1, ..., a+1)`` with ``b`` trailing entries equal to ``a+1``."""
    if not 0 <= b <= l - 1:
        raise ValueError(f"b must lie in 0..{l - 1}")
    return (a,) * (l - b) + (a + 1,) * b


# dot actions on integers, beta-sets and multipartitions

def dot_si_int(x: int, e: int, i: int, k: int = 1) -> int:
    if not 0 <= i < e:
        raise ValueError(f"residue {i} outside 0..{e - 1}")
    r = x % e
    if i == 0:
        if r == 0:
            return x - 1 - (k - 1) * e
        if r == e - 1:
            return x + 1 + (k - 1) * e
        return x
    if r == i:
        return x - 1
    if r == i - 1:
        return x + 1
    return x


def dot_si_beta(B: BetaSet, e: int, i: int, k: int = 1) -> BetaSet:
    """``s_i`` in the level-``k`` dot action.

    For ``i >= 1`` this swaps runners ``i-1`` and ``i`` and does not depend on
    ``k``.  ``s_0`` is the product ``(e_1 - e_e)(1, e)``: runner 0 and runner
    ``e-1`` are swapped with a vertical offset of ``k - 1`` rows.
    """
    if e < 2:
        raise ValueError(f"e must be at least 2, got {e}")
    if not 0 <= i < e:
        raise ValueError(f"residue {i} outside 0..{e - 1}")
    if k < 1:
        raise ValueError(f"level k must be positive, got {k}")
    reach = 1 + (k - 1) * e if i == 0 else 1
    return map_beads(B, lambda x: dot_si_int(x, e, i, k), reach)


def dot_ej_beta(B: BetaSet, e: int, j: int, k: int = 1) -> BetaSet:
    """``e_j`` in the level-``k`` dot action: runner ``j-1`` moves down ``k`` rows."""
    if not 1 <= j <= e:
        raise ValueError(f"runner index {j} outside 1..{e}")
    if k < 1:
        raise ValueError(f"level k must be positive, got {k}")
    return map_beads(B, lambda x: x + k * e if x % e == j - 1 else x, k * e)


def dot_si_multipartition(lam: ChargedMultipartition, e: int, i: int) -> ChargedMultipartition:
    """Remove every removable i-node and add every addable i-node; charges are kept."""
    bs = tuple(dot_si_beta(b, e, i, 1) for b in lam.beta_sets())
    return ChargedMultipartition.from_beta_sets(bs)
