"""
Exact formal characters of Sp(2k), GL(k) and SU(2)^k.

Characters are sparse maps from integer weights to integer multiplicities.
Irreducible characters come from Freudenthal's recursion on dominant weights
followed by expansion over Weyl orbits, so everything stays in exact integer
arithmetic.  The branching to SU(2)^n works on the shared maximal torus: the
restriction is the identity on weights and the decomposition is read off by
stripping highest weights.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .weights import Weight, is_dominant_K, is_dominant_gl, dominate_K

__all__ = [
    "FormalCharacter",
    "weyl_character",
    "weyl_dimension",
    "dominant_multiplicities",
    "branch_to_su2_power",
    "BranchingError",
]


class BranchingError(ValueError):
    """A character is not a genuine SU(2)^n-restrictable character."""


class FormalCharacter:
    """A finite sparse map weight -> integer multiplicity of fixed rank."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Weight, int] | None = None):
        self.rank = rank
        self.terms: dict[Weight, int] = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if len(w) != rank:
                raise ValueError(f"weight {w} has wrong rank for {rank}")
            if c:
                self.terms[w] = self.terms.get(w, 0) + int(c)
        self.terms = {w: c for w, c in self.terms.items() if c}

    def __getitem__(self, w) -> int:
        return self.terms.get(tuple(w), 0)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalCharacter) and self.rank == other.rank and self.terms == other.terms

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return FormalCharacter(self.rank, out)

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        return self + other.scale(-1)

    def scale(self, k: int) -> "FormalCharacter":
        return FormalCharacter(self.rank, {w: k * c for w, c in self.terms.items()})

    def dimension(self) -> int:
        return sum(self.terms.values())

    def __repr__(self) -> str:
        items = sorted(self.terms.items(), reverse=True)
        body = ", ".join(f"{w}: {c}" for w, c in items[:8])
        more = ", ..." if len(items) > 8 else ""
        return f"FormalCharacter(rank={self.rank}, {{{body}{more}}})"


# -- root data ------------------------------------------------------------


def _positive_roots(kind: str, k: int) -> list[Weight]:
    roots = []
    for i in range(k):
        for j in range(i + 1, k):
            r = [0] * k
            r[i], r[j] = 1, -1
            roots.append(tuple(r))
            if kind == "Sp":
                r = [0] * k
                r[i], r[j] = 1, 1
                roots.append(tuple(r))
        if kind == "Sp":
            r = [0] * k
            r[i] = 2
            roots.append(tuple(r))
    return roots


def _rho2(kind: str, k: int) -> Weight:
    """Twice rho, so that it stays integral for GL(k)."""
    if kind == "Sp":
        return tuple(2 * (k - i) for i in range(k))
    return tuple(k - 1 - 2 * i for i in range(k))


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _dominant(kind: str, w: Weight) -> Weight:
    return dominate_K(w) if kind == "Sp" else tuple(sorted(w, reverse=True))


def _check_group(group) -> tuple[str, int]:
    kind, k = group
    if kind not in ("Sp", "GL", "SU2") or k < 1:
        raise ValueError(f"unsupported group {group!r}")
    return kind, k


def weyl_dimension(group, hw: Iterable[int]) -> int:
    """Weyl dimension formula, used as an independent check on characters."""
    kind, k = _check_group(group)
    hw = tuple(hw)
    if kind == "SU2":
        out = 1
        for c in hw:
            out *= c + 1
        return out
    rho2 = _rho2(kind, k)
    shifted = tuple(2 * a + r for a, r in zip(hw, rho2))
    num, den = 1, 1
    for alpha in _positive_roots(kind, k):
        num *= _dot(shifted, alpha)
        den *= _dot(rho2, alpha)
    return int(Fraction(num, den))


def _in_positive_root_cone(kind: str, v: Weight) -> bool:
    s = 0
    for x in v[:-1]:
        s += x
        if s < 0:
            return False
    s += v[-1]
    if kind == "Sp":
        return s >= 0 and s % 2 == 0
    return s == 0


@lru_cache(maxsize=4096)
def dominant_multiplicities(group, hw: Weight) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of an irreducible representation.

    Freudenthal's formula, processed from the top down.  ``group`` is
    ``("Sp", k)`` or ``("GL", k)``.
    """
    kind, k = _check_group(group)
    if kind == "SU2":
        raise ValueError("use weyl_character for SU(2)^k")
    hw = tuple(hw)
    if len(hw) != k:
        raise ValueError(f"highest weight {hw} has wrong rank for {group}")
    if not (is_dominant_K(hw) if kind == "Sp" else is_dominant_gl(hw)):
        raise ValueError(f"{hw} is not dominant for {kind}({k})")

    # Dominant weights mu with hw - mu in the positive root cone.
    if kind == "Sp":
        cand = _dominant_below_sp(hw)
    else:
        cand = _dominant_below_gl(hw)
    rho2 = _rho2(kind, k)
    roots = _positive_roots(kind, k)

    def shifted_sq(mu):
        v = tuple(2 * a + r for a, r in zip(mu, rho2))
        return _dot(v, v)

    top = shifted_sq(hw)
    # higher weights first: sort by height (coordinate partial sums)
    cand.sort(key=lambda mu: _dot(mu, rho2), reverse=True)
    mult: dict[Weight, int] = {hw: 1}
    for mu in cand:
        if mu == hw:
            continue
        rhs = 0
        for alpha in roots:
            step = 1
            while True:
                nu = tuple(a + step * b for a, b in zip(mu, alpha))
                d = _dominant(kind, nu)
                m = mult.get(d)
                if m is None:
                    if not _in_positive_root_cone(kind, tuple(a - b for a, b in zip(hw, d))):
                        break
                    m = 0
                if m:
                    rhs += m * _dot(nu, alpha)
                step += 1
        # (|hw+rho|^2 - |mu+rho|^2) m(mu) = 2 sum ..., computed with 2*rho
        den = top - shifted_sq(mu)
        value = Fraction(8 * rhs, den)
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity at {mu} for {hw}")
        if value:
            mult[mu] = int(value)
    return mult


def _dominant_below_sp(hw: Weight) -> list[Weight]:
    k = len(hw)
    out = []
    for mu in itertools.product(*[range(hw[0] + 1)] * k):
        if is_dominant_K(mu) and _in_positive_root_cone("Sp", tuple(a - b for a, b in zip(hw, mu))):
            out.append(mu)
    return out


def _dominant_below_gl(hw: Weight) -> list[Weight]:
    k = len(hw)
    lo, hi = hw[-1], hw[0]
    out = []
    for mu in itertools.product(*[range(lo, hi + 1)] * k):
        if is_dominant_gl(mu) and _in_positive_root_cone("GL", tuple(a - b for a, b in zip(hw, mu))):
            out.append(mu)
    return out


def _orbit(kind: str, mu: Weight) -> set[Weight]:
    perms = set(itertools.permutations(mu))
    if kind == "GL":
        return perms
    out = set()
    for p in perms:
        for signs in itertools.product((1, -1), repeat=len(p)):
            out.add(tuple(s * c for s, c in zip(signs, p)))
    return out


def weyl_character(group, hw: Iterable[int]) -> FormalCharacter:
    """Exact character of the irreducible representation of highest weight ``hw``.

    ``group`` is ``("Sp", k)``, ``("GL", k)`` or ``("SU2", k)``; the last means
    the product of ``k`` copies of SU(2), each coordinate being an SU(2)
    highest weight.

    >>> sorted(weyl_character(("Sp", 1), (1,)).terms.items())
    [((-1,), 1), ((1,), 1)]
    """
    kind, k = _check_group(group)
    hw = tuple(int(c) for c in hw)
    if len(hw) != k:
        raise ValueError(f"highest weight {hw} has wrong rank for {group}")
    if kind == "SU2":
        if any(c < 0 for c in hw):
            raise ValueError(f"{hw} is not dominant for SU(2)^{k}")
        return FormalCharacter(k, {w: 1 for w in itertools.product(*[range(-c, c + 1, 2) for c in hw])})
    terms: dict[Weight, int] = {}
    for mu, m in dominant_multiplicities((kind, k), hw).items():
        for w in _orbit(kind, mu):
            terms[w] = m
    return FormalCharacter(k, terms)


def branch_to_su2_power(chi: FormalCharacter) -> dict[Weight, int]:
    """Decompose a character of Sp(2n) into SU(2)^n irreducibles.

    K and SU(2)^n share the maximal torus, so the weights carry over as they
    are; the weight of largest coordinate sum is always the highest weight of
    a constituent, and is stripped until nothing remains.
    """
    n = chi.rank
    rest = defaultdict(int, chi.terms)
    out: dict[Weight, int] = {}
    while True:
        live = [w for w, c in rest.items() if c]
        if not live:
            return out
        top = max(live, key=lambda w: (sum(w), w))
        c = rest[top]
        if c < 0 or any(x < 0 for x in top):
            raise BranchingError(f"negative multiplicity {c} at {top}")
        out[top] = c
        for w in itertools.product(*[range(-x, x + 1, 2) for x in top]):
            rest[w] -= c
            if rest[w] == 0:
                del rest[w]
        if n == 0:
            return out
