"""
Nilpotent K-orbits of GL(n, H) and the data attached to them.

An orbit is given by a partition of n; as a GL(2n, C)-orbit its Jordan type
is the doubled partition.  Each part k of size >= 1 contributes the
ad-H eigenvalues k-1, k-3, ..., 1-k, each twice.  With the eigenvalues sorted
non-increasing into ``h_1 >= ... >= h_2n`` the diagonal torus of gl(2n)
restricts to the maximal torus of K = Sp(2n) by

    eps_i = e_i  (i <= n),      eps_{n+j} = -e_{n+1-j},

which is the embedding forced by an antidiagonal symplectic form.  Roots of
gl(2n) are ``eps_i - eps_j``; the pair ``(i, j)`` and ``(j', i')`` with
``i' = 2n+1-i`` restrict to the same weight, one copy lying in k and one in s,
except the self-paired ``j = i'`` whose weight ``2 eps_i`` lies in k only.

Lifts and restriction are supported when every non-zero eigenvalue block of
L cap K has rank at most 2 (GL(2) blocks); this covers the zero, principal and
subregular families and every partition with distinct parts whose eigenvalue
strings do not overlap.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .weights import Factor, LeviShape, Weight, is_dominant_K

__all__ = [
    "OrbitDatum",
    "build_orbit",
    "family_partition",
    "parse_orbit",
    "restrict_to_stabilizer",
    "base_lift",
    "lift_with_shift",
    "enumerate_lifts",
    "default_box",
]


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class _Diagonal:
    """A diagonal SL(2) factor of the stabilizer.

    ``blocks`` are the coordinate offsets of the GL(2) blocks it sits in
    diagonally; ``absorbs_sp`` marks that the Sp(2) on the zero block is part
    of the same diagonal copy.
    """

    part: int
    blocks: tuple[int, ...]
    absorbs_sp: bool


@dataclass(frozen=True)
class OrbitDatum:
    """Combinatorial data of the nilpotent K-orbit of a partition of n."""

    n: int
    partition: tuple[int, ...]
    h_weights: tuple[int, ...]
    levi_shape: LeviShape
    stab_shape: tuple[Factor, ...]
    s1_weights: tuple[Weight, ...]
    rho_u_T: Weight
    lift_dim: int
    supported: bool = True
    diagonals: tuple[_Diagonal, ...] = field(default=(), repr=False)
    sp_rank: int = 0

    @property
    def name(self) -> str:
        return family_name(self.n, self.partition) or ",".join(map(str, self.partition))

    @property
    def is_even(self) -> bool:
        return not self.s1_weights

    def stab_str(self) -> str:
        return " x ".join(str(f) for f in self.stab_shape) if self.stab_shape else "1"

    def stab_rank(self) -> int:
        return sum(f.rank for f in self.stab_shape)

    def check_tau(self, tau: Sequence[int]) -> Weight:
        """Validate a stabilizer highest weight: one entry per diagonal factor, then the Sp block."""
        tau = tuple(int(c) for c in tau)
        if len(tau) != self.stab_rank():
            raise ValueError(f"orbit {self.name} of rank {self.n} expects {self.stab_rank()} entries, got {tau}")
        g = len(self.diagonals)
        if any(c < 0 for c in tau[:g]) or not is_dominant_K(tau[g:]):
            raise ValueError(f"{tau} is not dominant for {self.stab_str()}")
        return tau


def _check_partition(n: int, partition: Sequence[int]) -> tuple[int, ...]:
    part = tuple(int(p) for p in partition)
    if n < 1 or not part or any(p < 1 for p in part) or sum(part) != n:
        raise ValueError(f"{part} is not a partition of {n}")
    if list(part) != sorted(part, reverse=True):
        raise ValueError(f"partition {part} must be non-increasing")
    return part


def family_partition(n: int, family: str) -> tuple[int, ...]:
    """Partition of the named orbit family at rank ``n``."""
    if family == "zero":
        return (1,) * n
    if family == "principal":
        return (n,)
    if family in ("subregular", "middle"):
        if n < 2:
            raise ValueError(f"no {family} orbit at rank {n}")
        if family == "middle" and n != 3:
            raise ValueError("the middle orbit is the rank-3 orbit [2,1]")
        return (n - 1, 1)
    raise ValueError(f"unknown orbit family {family!r}")


def family_name(n: int, partition: Sequence[int]) -> str | None:
    part = tuple(partition)
    if part == (1,) * n:
        return "zero"
    if part == (n,):
        return "principal"
    if n >= 3 and part == (n - 1, 1):
        return "middle" if n == 3 else "subregular"
    return None


def parse_orbit(n: int, selector: str) -> tuple[int, ...]:
    """Accept a family name or a comma-separated partition of ``n``."""
    s = selector.strip()
    if s and not s[0].isdigit():
        return family_partition(n, s)
    return _check_partition(n, [int(x) for x in s.split(",") if x.strip()])


def build_orbit(n: int, partition: Sequence[int]) -> OrbitDatum:
    """Derive H, the Levi and stabilizer shapes, s_1 weights and rho(u).

    >>> o = build_orbit(3, [2, 1])
    >>> o.rho_u_T, str(o.levi_shape), o.stab_str()
    ((4, 4, 0), 'GL(2) x Sp(2)', 'Sp(2) x Sp(2)')
    """
    part = _check_partition(n, partition)
    h: list[int] = []
    for k in part:
        h.extend(v for v in range(k - 1, -k, -2) for _ in range(2))
    h.sort(reverse=True)
    N = 2 * n

    def eps(i: int) -> list[int]:
        v = [0] * n
        if i < n:
            v[i] = 1
        else:
            v[N - 1 - i] = -1
        return v

    rho2 = [0] * n
    s1: list[Weight] = []
    seen = set()
    for i in range(N):
        for j in range(N):
            if h[i] <= h[j]:
                continue
            r = [a - b for a, b in zip(eps(i), eps(j))]
            rho2 = [a + b for a, b in zip(rho2, r)]
            if h[i] - h[j] == 1 and j != N - 1 - i:
                w = tuple(r)
                if w not in seen:
                    seen.add(w)
                    s1.append(w)
    if any(c % 2 for c in rho2):
        raise ArithmeticError(f"rho(u) is not integral for {part}")
    rho_u = tuple(c // 2 for c in rho2)

    # Levi of L cap K: runs of equal positive eigenvalue among the first n
    # coordinates, then the zero block.
    factors: list[tuple[str, int]] = []
    starts: dict[int, int] = {}
    i = 0
    while i < n and h[i] > 0:
        j = i
        while j < n and h[j] == h[i]:
            j += 1
        starts[h[i]] = i
        factors.append(("GL", j - i))
        i = j
    z = n - i
    if z:
        factors.append(("Sp", z))
    levi = LeviShape.of(*factors)

    supported = all(r <= 2 for kind, r in factors if kind == "GL")
    odd_parts = [k for k in part if k % 2]
    diagonals: list[_Diagonal] = []
    repeated: list[Factor] = []
    for k in sorted(set(part), reverse=True):
        if k < 2:
            continue
        if part.count(k) > 1:
            # a part of multiplicity m contributes Sp(2m); recorded, not lifted
            supported = False
            repeated.append(Factor("Sp", part.count(k)))
            continue
        blocks = tuple(starts[d] for d in range(k - 1, 0, -2))
        absorbs = z == 1 and k % 2 == 1 and k >= 3 and odd_parts == [k]
        diagonals.append(_Diagonal(k, blocks, absorbs))
    absorbed = any(d.absorbs_sp for d in diagonals)
    sp_rank = 0 if absorbed else z
    stab = [Factor("Sp", 1) for _ in diagonals] + repeated
    if sp_rank:
        stab.append(Factor("Sp", sp_rank))
    lift_dim = sum(len(d.blocks) for d in diagonals) if supported else 0
    return OrbitDatum(
        n=n,
        partition=part,
        h_weights=tuple(h),
        levi_shape=levi,
        stab_shape=tuple(stab),
        s1_weights=tuple(s1),
        rho_u_T=rho_u,
        lift_dim=lift_dim,
        supported=supported,
        diagonals=tuple(diagonals),
        sp_rank=sp_rank,
    )


def _require_supported(o: OrbitDatum) -> None:
    if not o.supported:
        raise NotImplementedError(
            f"lifts for partition {o.partition} need GL(r) blocks with r > 2, which are not handled")


def restrict_to_stabilizer(o: OrbitDatum, lw: Sequence[int]) -> Weight:
    """Restrict an L cap K highest weight to the reductive stabilizer.

    A diagonal SL(2) receives the sum of ``a - b`` over its GL(2) blocks (plus
    the Sp(2) entry when it absorbs one); a separate Sp block maps identically.

    >>> restrict_to_stabilizer(build_orbit(3, [2, 1]), (5, 2, 4))
    (3, 4)
    """
    _require_supported(o)
    lw = tuple(int(c) for c in lw)
    if not o.levi_shape.is_dominant(lw):
        raise ValueError(f"{lw} is not dominant for {o.levi_shape}")
    out = []
    for d in o.diagonals:
        v = sum(lw[s] - lw[s + 1] for s in d.blocks)
        if d.absorbs_sp:
            v += lw[-1]
        out.append(v)
    if o.sp_rank:
        out.extend(lw[o.n - o.sp_rank:])
    return tuple(out)


def base_lift(o: OrbitDatum, tau: Sequence[int]) -> Weight:
    """The balanced lift: a diagonal parameter t is spread over its N
    coordinates as the ceiling cascade ``ceil((t - j) / N)``, j = 0..N-1,
    alternating between the ``a`` and ``-b`` slots of the GL(2) blocks."""
    _require_supported(o)
    tau = o.check_tau(tau)
    lw = [0] * o.n
    for t, d in zip(tau, o.diagonals):
        N = 2 * len(d.blocks) + (1 if d.absorbs_sp else 0)
        for i, s in enumerate(d.blocks):
            lw[s] = _ceil_div(t - 2 * i, N)
            lw[s + 1] = -_ceil_div(t - 2 * i - 1, N)
        if d.absorbs_sp:
            lw[-1] = _ceil_div(t - (N - 1), N)
    if o.sp_rank:
        lw[o.n - o.sp_rank:] = tau[len(o.diagonals):]
    return tuple(lw)


def block_offsets(o: OrbitDatum) -> list[int]:
    """Coordinate offsets of the GL(2) blocks, in the order shifts are listed."""
    return [s for d in o.diagonals for s in d.blocks]


def lift_with_shift(o: OrbitDatum, tau: Sequence[int], k: Sequence[int]) -> Weight:
    """Base lift twisted by the determinant characters ``k_i`` of the GL(2) blocks."""
    offs = block_offsets(o)
    if len(k) != len(offs):
        raise ValueError(f"expected {len(offs)} shifts, got {tuple(k)}")
    lw = list(base_lift(o, tau))
    for s, ki in zip(offs, k):
        lw[s] += ki
        lw[s + 1] += ki
    return tuple(lw)


def default_box(n: int) -> int:
    return 2 * n + 4


def shift_vectors(o: OrbitDatum, box: int) -> list[tuple[int, ...]]:
    if box < 0:
        raise ValueError("box half-width must be non-negative")
    return list(itertools.product(range(-box, box + 1), repeat=len(block_offsets(o))))


def enumerate_lifts(o: OrbitDatum, tau: Sequence[int], box: int | None = None) -> list[Weight]:
    """All lifts of ``tau`` with every determinant shift in ``[-box, box]``.

    >>> enumerate_lifts(build_orbit(2, [2]), (5,), 1)
    [(2, -3), (3, -2), (4, -1)]
    """
    if box is None:
        box = default_box(o.n)
    return [lift_with_shift(o, tau, k) for k in shift_vectors(o, box)]
