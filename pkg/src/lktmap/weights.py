"""
Integer weights for the maximal torus of K = Sp(2n, C).

Weights are plain tuples of ints in the basis e_1, ..., e_n.  The Weyl group
W_K is the hyperoctahedral group of signed permutations, so the dominant
representative of a weight is its vector of absolute values sorted in
non-increasing order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Weight = tuple


def weight(coords: Iterable[int], n: int | None = None) -> Weight:
    """Build a weight, checking the rank when ``n`` is given."""
    w = tuple(int(c) for c in coords)
    if n is not None and len(w) != n:
        raise ValueError(f"expected a weight of rank {n}, got {w}")
    return w


def dominate_K(w: Sequence[int]) -> Weight:
    """Return the W_K-dominant conjugate of ``w``."""
    return tuple(sorted((abs(c) for c in w), reverse=True))


def norm_sq(w: Sequence[int]) -> int:
    """Squared Euclidean norm, exact and W_K-invariant."""
    return sum(c * c for c in w)


def is_dominant_K(w: Sequence[int]) -> bool:
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1)) and (not w or w[-1] >= 0)


def is_dominant_gl(w: Sequence[int]) -> bool:
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def rho_constants(n: int) -> tuple[Weight, Weight]:
    """Return ``(rho_M, two_rho_n_cap_s)`` at rank ``n``.

    ``rho_M = (1, ..., 1)`` is the half-sum for SU(2)^n and
    ``two_rho_n_cap_s = (2(n-1), ..., 2, 0)`` is the lowest K-type of the
    module cohomologically induced from the theta-stable Borel at 0.
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    return (1,) * n, tuple(2 * (n - 1 - i) for i in range(n))


def rho_K(n: int) -> Weight:
    """Half-sum of positive roots of Sp(2n): (n, n-1, ..., 1)."""
    return tuple(range(n, 0, -1))


def signed_permutations(n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """Yield ``(perm, signs, sgn)`` for every element of W(C_n).

    The element acts by ``(w.v)[i] = signs[i] * v[perm[i]]`` and ``sgn`` is its
    determinant.
    """
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        psign = -1 if inv % 2 else 1
        for signs in itertools.product((1, -1), repeat=n):
            s = psign
            for e in signs:
                s *= e
            yield perm, signs, s


def act(perm: Sequence[int], signs: Sequence[int], v: Sequence[int]) -> Weight:
    return tuple(signs[i] * v[perm[i]] for i in range(len(v)))


def dominant_weights_in_ball(n: int, radius_sq: int) -> list[Weight]:
    """All W_K-dominant weights with ``norm_sq <= radius_sq``.

    Sorted by (norm_sq, lexicographic), the order used for unitriangular
    inversion.
    """
    out: list[Weight] = []

    def rec(prefix: list[int], remaining: int, cap: int) -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        top = min(cap, int(remaining ** 0.5) + 1)
        for c in range(top, -1, -1):
            if c * c <= remaining:
                prefix.append(c)
                rec(prefix, remaining - c * c, c)
                prefix.pop()

    rec([], radius_sq, radius_sq)
    out.sort(key=lambda w: (norm_sq(w), w))
    return out


@dataclass(frozen=True)
class Factor:
    """One factor of a Levi subgroup of K: ``GL(k)`` or ``Sp(2k)``."""

    kind: str  # "GL" or "Sp"
    rank: int

    def __post_init__(self):
        if self.kind not in ("GL", "Sp"):
            raise ValueError(f"unknown factor kind {self.kind!r}")
        if self.rank < 1:
            raise ValueError("factor rank must be positive")

    def __str__(self) -> str:
        return f"GL({self.rank})" if self.kind == "GL" else f"Sp({2 * self.rank})"


@dataclass(frozen=True)
class LeviShape:
    """Ordered product of GL(k) and Sp(2k) factors on consecutive coordinates.

    At most one Sp factor is allowed and it sits on the last coordinates.
    """

    factors: tuple[Factor, ...]

    def __post_init__(self):
        sp = [i for i, f in enumerate(self.factors) if f.kind == "Sp"]
        if len(sp) > 1 or (sp and sp[0] != len(self.factors) - 1):
            raise ValueError("an Sp factor must be unique and last")

    @classmethod
    def of(cls, *factors: tuple[str, int]) -> "LeviShape":
        return cls(tuple(Factor(k, r) for k, r in factors))

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    def blocks(self) -> list[tuple[Factor, slice]]:
        """Factors paired with the coordinate slice each one occupies."""
        out, start = [], 0
        for f in self.factors:
            out.append((f, slice(start, start + f.rank)))
            start += f.rank
        return out

    def split(self, w: Sequence[int]) -> list[Weight]:
        if len(w) != self.rank:
            raise ValueError(f"weight {tuple(w)} does not match shape {self}")
        return [tuple(w[s]) for _, s in self.blocks()]

    def is_dominant(self, w: Sequence[int]) -> bool:
        for f, part in zip(self.factors, self.split(w)):
            ok = is_dominant_gl(part) if f.kind == "GL" else is_dominant_K(part)
            if not ok:
                return False
        return True

    def __str__(self) -> str:
        return " x ".join(str(f) for f in self.factors) if self.factors else "1"
