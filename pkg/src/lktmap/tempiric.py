"""
Tempiric parameters for GL(n, H) and the multiplicity matrices m and M.

A tempiric representation of GL(n, H) is induced from the minimal parabolic
with an irreducible SU(2)^n representation on M; it is recorded by the tuple
of per-factor infinitesimal characters ``p`` (canonical form: absolute values
sorted non-increasing, all entries >= 1).  Its lowest K-type is ``p - 1``.

``m(tau, p)`` is the multiplicity of the K-type ``tau`` in the tempiric ``p``;
by Frobenius reciprocity it is the multiplicity of the SU(2)^n type ``p - 1``
in ``tau`` restricted to M.  Both Sp(2n) and SU(2)^n share the maximal torus,
so the branching multiplicity is

    m(tau, p) = sum_{w in W(C_n)} sgn(w) P_D(w(tau + rho) - (p - 1 + rho))

where ``P_D`` is the partition function of the positive roots of D_n (the
roots of Sp(2n) that are not roots of SU(2)^n).  ``P_D`` is tabulated once per
truncation in partial-sum coordinates, where every D_n root is a non-negative
vector, so the table is a plain unbounded-knapsack recursion.

``M`` is the inverse of the unitriangular matrix ``m``, obtained by forward
substitution in increasing (norm, lex) order of lowest K-types.
"""
from __future__ import annotations

import itertools
import math
import threading
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import TruncationError
from .weights import (
    LeviShape,
    Weight,
    dominant_weights_in_ball,
    dominate_K,
    is_dominant_K,
    is_dominant_gl,
    norm_sq,
    signed_permutations,
)

__all__ = [
    "VirtualTempiric",
    "canonical_param",
    "lkt_of_tempiric",
    "MultiplicityTable",
    "get_table",
    "m_mult",
    "M_coeff",
    "expand_k_irrep",
    "expand_levi_irrep",
    "default_bound",
    "SHELL_WIDTH",
]

# Terms of an expansion landing within this distance of the truncation
# radius mean the radius may have cut the expansion off.
SHELL_WIDTH = 2


# -- parameters and virtual sums --------------------------------------------


def canonical_param(p: Sequence[int]) -> Weight | None:
    """Dominated parameter, or ``None`` when an entry is 0 (a vanishing module)."""
    d = dominate_K(p)
    if d and d[-1] == 0:
        return None
    return d


def lkt_of_tempiric(p: Sequence[int]) -> Weight:
    """Highest weight of the lowest K-type of the tempiric with parameter ``p``."""
    if any(c <= 0 for c in p):
        raise ValueError(f"tempiric parameter {tuple(p)} must have entries >= 1")
    return tuple(c - 1 for c in dominate_K(p))


class VirtualTempiric:
    """Finite signed integer combination of tempiric parameters.

    With ``canonical=True`` (the default) the keys are canonical parameters;
    Levi-level expansions use ``canonical=False`` and keep raw tuples.
    """

    __slots__ = ("rank", "terms", "canonical")

    def __init__(self, rank: int, terms: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = (),
                 canonical: bool = True):
        self.rank = rank
        self.canonical = canonical
        self.terms: dict[Weight, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for p, c in items:
            self.add(p, c)

    def add(self, p: Sequence[int], c: int) -> None:
        p = tuple(int(x) for x in p)
        if len(p) != self.rank:
            raise ValueError(f"parameter {p} has wrong rank for {self.rank}")
        if self.canonical:
            if not is_dominant_K(p) or (p and p[-1] < 1):
                raise ValueError(f"{p} is not a canonical tempiric parameter")
        new = self.terms.get(p, 0) + int(c)
        if new:
            self.terms[p] = new
        else:
            self.terms.pop(p, None)

    def __getitem__(self, p) -> int:
        return self.terms.get(tuple(p), 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __eq__(self, other) -> bool:
        if isinstance(other, VirtualTempiric):
            return self.rank == other.rank and self.terms == other.terms
        if isinstance(other, Mapping):
            return self.terms == {tuple(k): v for k, v in other.items() if v}
        return NotImplemented

    def __add__(self, other: "VirtualTempiric") -> "VirtualTempiric":
        out = VirtualTempiric(self.rank, self.terms, self.canonical and other.canonical)
        for p, c in other.terms.items():
            out.add(p, c)
        return out

    def scale(self, k: int) -> "VirtualTempiric":
        return VirtualTempiric(self.rank, {p: k * c for p, c in self.terms.items()}, self.canonical)

    def to_list(self) -> list[dict]:
        return [{"param": list(p), "coeff": c} for p, c in sorted(self.terms.items())]

    def __repr__(self) -> str:
        body = ", ".join(f"{p}: {c:+d}" for p, c in sorted(self.terms.items()))
        return f"VirtualTempiric({{{body}}})"


# -- the D_n partition function -----------------------------------------------


def _d_roots_partial_sums(n: int) -> list[np.ndarray]:
    """Positive roots of D_n written in partial-sum coordinates s_k = v_1 + ... + v_k."""
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for sign in (-1, 1):
                v = np.zeros(n, dtype=np.int64)
                v[i], v[j] = 1, sign
                out.append(np.cumsum(v))
    return out


def _partition_table(n: int, smax: Sequence[int]) -> np.ndarray:
    """Table of P_D indexed by partial-sum coordinates in ``[0, smax]``."""
    shape = tuple(int(s) + 1 for s in smax)
    P = np.zeros(shape, dtype=np.int64)
    P[(0,) * n] = 1
    for r in _d_roots_partial_sums(n):
        # unbounded knapsack along r: P[x] += P[x - r], ascending along axis c
        c = int(np.flatnonzero(r)[0])
        step = int(r[c])
        for layer in range(step, shape[c]):
            dst = [slice(None)] * n
            src = [slice(None)] * n
            dst[c], src[c] = layer, layer - step
            ok = True
            for ax in range(n):
                if ax == c:
                    continue
                sh = int(r[ax])
                if sh >= shape[ax]:
                    ok = False
                    break
                dst[ax] = slice(sh, None)
                src[ax] = slice(0, shape[ax] - sh)
            if ok:
                P[tuple(dst)] += P[tuple(src)]
    return P


# -- the multiplicity table --------------------------------------------------


@dataclass
class _Block:
    """All K-types of one parity class (m never mixes parities)."""

    ktypes: list[Weight]
    index: dict[Weight, int]
    L: np.ndarray  # L[a, b] = m(ktypes[a], ktypes[b] + 1), lower unitriangular
    columns: dict[int, np.ndarray] = field(default_factory=dict)


class MultiplicityTable:
    """The matrices m and M truncated to K-types of norm at most ``radius``.

    Rows and columns are both indexed by K-types: the column of ``sigma``
    stands for the tempiric whose lowest K-type is ``sigma`` (parameter
    ``sigma + 1``).  Because m is triangular in the (norm, lex) order the
    truncated inverse is the exact restriction of the true M.

    Built once and then read-only; columns of M are computed on demand and
    cached under a lock.
    """

    def __init__(self, n: int, radius: int):
        if n < 1:
            raise ValueError("rank must be at least 1")
        self.n = n
        self.radius = int(radius)
        self.radius_sq = self.radius ** 2
        ktypes = dominant_weights_in_ball(n, self.radius_sq)
        self.size = len(ktypes)
        arr = np.array(ktypes, dtype=np.int64).reshape(-1, n)
        smax = arr.cumsum(axis=1).max(axis=0) if len(arr) else np.zeros(n, dtype=np.int64)
        self._P = _partition_table(n, smax)
        self._smax = np.asarray(smax, dtype=np.int64)
        self._rho = np.arange(n, 0, -1, dtype=np.int64)
        self._weyl = [(np.array(p), np.array(s, dtype=np.int64), g) for p, s, g in signed_permutations(n)]
        self._lock = threading.Lock()
        self.blocks: dict[int, _Block] = {}
        for parity in (0, 1):
            members = [k for k in ktypes if sum(k) % 2 == parity]
            self.blocks[parity] = self._build_block(members)
        self._P = None  # only needed while building

    def _build_block(self, members: list[Weight]) -> _Block:
        N = len(members)
        L = np.zeros((N, N), dtype=np.int64)
        if N == 0:
            return _Block(members, {}, L)
        n = self.n
        arr = np.array(members, dtype=np.int64).reshape(N, n)
        Sq = np.cumsum(arr + self._rho, axis=1)  # partial sums of q + rho
        s_rho = np.cumsum(self._rho)
        perms = np.array([w[0] for w in self._weyl])
        signs = np.array([w[1] for w in self._weyl])
        sgn = np.array([w[2] for w in self._weyl], dtype=np.int64)
        for a in range(N):
            x = arr[a] + self._rho
            Y = signs * x[perms]  # all W-images of lambda + rho
            SY = np.cumsum(Y, axis=1)
            keep = np.all(SY >= s_rho, axis=1)
            SYk, gk = SY[keep], sgn[keep]
            # m(lambda, q) vanishes unless q lies below lambda in dominance order;
            # on those columns the partial sums never exceed the table box
            cols = np.flatnonzero(np.all(Sq[: a + 1] <= SY[0], axis=1))
            S = SYk[:, None, :] - Sq[None, cols, :]
            wi, ci = np.nonzero(S.min(axis=2) >= 0)
            vals = self._P[tuple(S[wi, ci].T)] * gk[wi]
            row = np.zeros(a + 1, dtype=np.int64)
            np.add.at(row, cols[ci], vals)
            if row[a] != 1:
                raise ArithmeticError(f"diagonal of m is {row[a]} at {members[a]}")
            L[a, : a + 1] = row
        return _Block(members, {k: i for i, k in enumerate(members)}, L)

    # lookups ------------------------------------------------------------

    def _locate(self, ktype: Sequence[int]) -> tuple[_Block, int]:
        k = tuple(ktype)
        if len(k) != self.n or not is_dominant_K(k):
            raise ValueError(f"{k} is not a dominant K-type of rank {self.n}")
        if norm_sq(k) > self.radius_sq:
            raise TruncationError(f"K-type {k} lies outside truncation radius {self.radius}")
        block = self.blocks[sum(k) % 2]
        return block, block.index[k]

    def m(self, tau: Sequence[int], p: Sequence[int]) -> int:
        """Multiplicity of K-type ``tau`` in the tempiric with parameter ``p``."""
        sigma = lkt_of_tempiric(p)
        if sum(sigma) % 2 != sum(tau) % 2:
            self._locate(tau)
            self._locate(sigma)
            return 0
        block, a = self._locate(tau)
        _, b = self._locate(sigma)
        return int(block.L[a, b]) if b <= a else 0

    def column(self, tau: Sequence[int]) -> np.ndarray:
        """Column ``M(., tau)`` over the parity block of ``tau``."""
        block, t = self._locate(tau)
        with self._lock:
            col = block.columns.get(t)
        if col is not None:
            return col
        L = block.L
        x = np.zeros(len(block.ktypes), dtype=np.int64)
        x[t] = 1
        support = [t]
        for a in range(t + 1, len(block.ktypes)):
            idx = np.array(support)
            v = -int(L[a, idx] @ x[idx])
            if v:
                x[a] = v
                support.append(a)
        x.setflags(write=False)
        with self._lock:
            block.columns.setdefault(t, x)
        return x

    def M(self, p: Sequence[int], tau: Sequence[int]) -> int:
        """Coefficient of the tempiric ``p`` in the expansion of K-type ``tau``."""
        sigma = lkt_of_tempiric(p)
        block, _ = self._locate(tau)
        if sum(sigma) % 2 != sum(tau) % 2:
            self._locate(sigma)
            return 0
        _, b = self._locate(sigma)
        return int(self.column(tau)[b])

    def expansion(self, tau: Sequence[int]) -> VirtualTempiric:
        block, _ = self._locate(tau)
        col = self.column(tau)
        out = VirtualTempiric(self.n)
        for b in np.flatnonzero(col):
            out.add(tuple(c + 1 for c in block.ktypes[b]), int(col[b]))
        return out

    def ktypes(self) -> list[Weight]:
        return sorted(self.blocks[0].ktypes + self.blocks[1].ktypes, key=lambda w: (norm_sq(w), w))


_TABLES: dict[int, MultiplicityTable] = {}
_TABLES_LOCK = threading.Lock()


def get_table(n: int, radius: int) -> MultiplicityTable:
    """Shared table for rank ``n`` covering at least ``radius``.

    A table of larger radius serves smaller requests exactly, so only the
    largest table per rank is kept.  Radii are rounded up to a multiple of
    4 so that sweeps over growing inputs rebuild rarely.
    """
    radius = -(-int(radius) // 4) * 4
    with _TABLES_LOCK:
        t = _TABLES.get(n)
        if t is not None and t.radius >= radius:
            return t
    t = MultiplicityTable(n, radius)
    with _TABLES_LOCK:
        cur = _TABLES.get(n)
        if cur is None or cur.radius < t.radius:
            _TABLES[n] = t
        return _TABLES[n]


def _radius_for(*weights: Sequence[int]) -> int:
    return max(math.isqrt(norm_sq(w)) + (0 if math.isqrt(norm_sq(w)) ** 2 == norm_sq(w) else 1)
               for w in weights)


def m_mult(tau: Sequence[int], p: Sequence[int]) -> int:
    """Multiplicity of K-type ``tau`` in the tempiric with parameter ``p``.

    >>> m_mult((1, 0), (2, 1))
    1
    """
    tau = tuple(tau)
    if not is_dominant_K(tau):
        raise ValueError(f"{tau} is not a dominant K-type")
    sigma = lkt_of_tempiric(p)
    if len(sigma) != len(tau):
        raise ValueError("rank mismatch")
    return get_table(len(tau), _radius_for(tau, sigma)).m(tau, p)


def M_coeff(p: Sequence[int], tau: Sequence[int]) -> int:
    """Entry ``M(p, tau)`` of the inverse multiplicity matrix."""
    tau = tuple(tau)
    sigma = lkt_of_tempiric(p)
    return get_table(len(tau), _radius_for(tau, sigma)).M(p, tau)


# -- expansions -----------------------------------------------------------


def default_bound(tau: Sequence[int]) -> int:
    """Default truncation radius: norm of the input plus 2n + 8."""
    return _radius_for(tau) + 2 * len(tau) + 8


def expand_k_irrep(tau: Sequence[int], bound: int | None = None) -> VirtualTempiric:
    """Write the K-type ``tau`` as a virtual sum of tempirics.

    Raises ``TruncationError`` when a term lands in the outer shell of the
    truncation, which means the radius may have cut the expansion short.

    >>> expand_k_irrep((0, 0))
    VirtualTempiric({(1, 1): +1, (2, 2): -1, (3, 1): +1})
    """
    tau = tuple(int(c) for c in tau)
    if not tau or not is_dominant_K(tau):
        raise ValueError(f"{tau} is not a dominant K-type")
    if bound is None:
        bound = default_bound(tau)
    if bound ** 2 < norm_sq(tau):
        raise TruncationError(f"bound {bound} is smaller than the norm of {tau}")
    table = get_table(len(tau), bound)
    out = table.expansion(tau)
    inner = max(bound - SHELL_WIDTH, 0) ** 2
    for p in out.terms:
        if norm_sq(lkt_of_tempiric(p)) > inner:
            raise TruncationError(
                f"expansion of {tau} reaches {p} near the truncation radius {bound}; raise the bound")
    return out


def _gl_expansion(xi: Weight) -> list[tuple[Weight, int]]:
    """Weyl character formula for GL(k) as tempirics of the complex group GL(k, C)."""
    k = len(xi)
    rho2 = [k - 1 - 2 * i for i in range(k)]  # 2 rho for GL(k)
    out = []
    for perm in itertools.permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        shift = [(rho2[i] - rho2[perm[i]]) // 2 for i in range(k)]
        out.append((tuple(a + s for a, s in zip(xi, shift)), -1 if inv % 2 else 1))
    return out


def expand_levi_irrep(shape: LeviShape, hw: Sequence, bound: int | None = None) -> VirtualTempiric:
    """Expand an irreducible representation of a Levi of K into raw tempirics.

    ``hw`` is either the concatenated highest weight or a list of per-factor
    highest weights.  GL(k) factors use the Weyl character formula as for a
    complex group, Sp(2) factors contribute their infinitesimal character
    ``c + 1`` and larger Sp factors are expanded with ``expand_k_irrep``.
    Parameters are left raw (not dominated).

    >>> from lktmap.weights import LeviShape
    >>> expand_levi_irrep(LeviShape.of(("GL", 2)), (2, 0))
    VirtualTempiric({(2, 0): +1, (3, -1): -1})
    """
    if hw and not isinstance(hw[0], (int, np.integer)):
        parts = [tuple(int(c) for c in h) for h in hw]
    else:
        parts = shape.split(tuple(int(c) for c in hw))
    if len(parts) != len(shape.factors):
        raise ValueError("one highest weight per factor is required")
    pieces: list[list[tuple[Weight, int]]] = []
    for f, part in zip(shape.factors, parts):
        if len(part) != f.rank:
            raise ValueError(f"{part} does not fit factor {f}")
        if f.kind == "GL":
            if not is_dominant_gl(part):
                raise ValueError(f"{part} is not dominant for {f}")
            pieces.append(_gl_expansion(part))
        elif f.rank == 1:
            if part[0] < 0:
                raise ValueError(f"{part} is not dominant for {f}")
            pieces.append([((part[0] + 1,), 1)])
        else:
            pieces.append(sorted(expand_k_irrep(part, bound).terms.items()))
    out = VirtualTempiric(shape.rank, canonical=False)
    for combo in itertools.product(*pieces):
        coeff = 1
        param: tuple = ()
        for p, c in combo:
            param += p
            coeff *= c
        out.add(param, coeff)
    return out
