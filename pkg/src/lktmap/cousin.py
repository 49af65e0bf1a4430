"""
K-orbits on the flag variety of GL(2n) and the Cousin-Zuckerman identity.

The Sp(2n)-orbits on the flag variety of GL(2n, C) are indexed by the
fixed-point-free involutions of {1, ..., 2n}.  The closure order is the
reverse of the Bruhat order on the involutions viewed as permutations, the
open orbit is ``(12)(34)...`` and the closed orbit is the longest element.

Each orbit contributes one standard module to the resolution of the trivial
representation, in degree equal to the codimension of the orbit.  Its
tempiric parameter is read from the pair distances ``|sigma(i) - i|`` sorted
non-increasing; this recovers the rank-2 resolution and the closed-orbit
parameter ``2 rho(n cap s) + 1`` at every rank, and is experimental otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .tempiric import m_mult
from .weights import Weight, dominant_weights_in_ball, rho_constants

__all__ = [
    "FpfInvolution",
    "CousinTerm",
    "enumerate_fpf",
    "bruhat_leq",
    "closure_leq",
    "codimension",
    "zuckerman_terms",
    "verify_zuckerman",
]


@dataclass(frozen=True, order=True)
class FpfInvolution:
    """A fixed-point-free involution, stored as its one-line images (1-based)."""

    sigma: tuple[int, ...]

    def __post_init__(self):
        s = tuple(int(x) for x in self.sigma)
        object.__setattr__(self, "sigma", s)
        N = len(s)
        if N == 0 or N % 2 or sorted(s) != list(range(1, N + 1)):
            raise ValueError(f"{s} is not a permutation of 1..2n")
        for i, x in enumerate(s, start=1):
            if x == i or s[x - 1] != i:
                raise ValueError(f"{s} is not a fixed-point-free involution")

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[int, int]]) -> "FpfInvolution":
        N = 2 * len(pairs)
        s = [0] * N
        for a, b in pairs:
            s[a - 1], s[b - 1] = b, a
        return cls(tuple(s))

    @property
    def n(self) -> int:
        return len(self.sigma) // 2

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, x) for i, x in enumerate(self.sigma, start=1) if i < x]

    def length(self) -> int:
        s = self.sigma
        return sum(1 for i in range(len(s)) for j in range(i + 1, len(s)) if s[i] > s[j])

    def __str__(self) -> str:
        sep = "" if len(self.sigma) < 10 else " "
        return "".join(f"({a}{sep}{b})" for a, b in self.pairs())


@dataclass(frozen=True)
class CousinTerm:
    involution: FpfInvolution
    degree: int
    standard_param: Weight
    experimental: bool = False


def enumerate_fpf(n: int) -> list[FpfInvolution]:
    """All (2n-1)!! fixed-point-free involutions of {1..2n}, pairing 1 first.

    >>> [str(s) for s in enumerate_fpf(2)]
    ['(12)(34)', '(13)(24)', '(14)(23)']
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    out: list[FpfInvolution] = []

    def rec(free: list[int], pairs: list[tuple[int, int]]):
        if not free:
            out.append(FpfInvolution.from_pairs(pairs))
            return
        a = free[0]
        for b in free[1:]:
            rest = [x for x in free if x not in (a, b)]
            rec(rest, pairs + [(a, b)])

    rec(list(range(1, 2 * n + 1)), [])
    return out


def bruhat_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Bruhat order on permutations in one-line notation, by rank matrices."""
    if len(u) != len(v):
        raise ValueError("permutations of different sizes")
    N = len(u)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            ru = sum(1 for a in range(i) if u[a] >= j)
            rv = sum(1 for a in range(i) if v[a] >= j)
            if ru > rv:
                return False
    return True


def closure_leq(a: FpfInvolution, b: FpfInvolution) -> bool:
    """Whether the orbit of ``a`` lies in the closure of the orbit of ``b``.

    >>> f = enumerate_fpf(2)
    >>> closure_leq(f[2], f[1]), closure_leq(f[0], f[2])
    (True, False)
    """
    if a.n != b.n:
        raise ValueError("involutions of different sizes")
    return bruhat_leq(b.sigma, a.sigma)


def codimension(s: FpfInvolution) -> int:
    """Codimension of the orbit: (length - n) / 2."""
    return (s.length() - s.n) // 2


def _param(s: FpfInvolution) -> Weight:
    return tuple(sorted((b - a for a, b in s.pairs()), reverse=True))


def zuckerman_terms(n: int) -> list[CousinTerm]:
    """Terms of the resolution of the trivial representation, by orbit.

    >>> [(str(t.involution), t.degree, t.standard_param) for t in zuckerman_terms(2)]
    [('(12)(34)', 0, (1, 1)), ('(13)(24)', 1, (2, 2)), ('(14)(23)', 2, (3, 1))]
    """
    out = [CousinTerm(s, codimension(s), _param(s), n > 2) for s in enumerate_fpf(n)]
    closed = tuple(c + 1 for c in rho_constants(n)[1])
    assert out[-1].standard_param == closed
    return out


def verify_zuckerman(n: int, truncation: int, terms: Sequence[CousinTerm] | None = None) -> dict:
    """Check sum (-1)^degree m(tau, param) = [tau == 0] on every K-type in the ball.

    ``terms`` defaults to ``zuckerman_terms(n)``; any list of terms with
    ``degree`` and ``standard_param`` may be supplied instead.
    """
    if terms is None:
        terms = zuckerman_terms(n)
    failures = []
    checked = 0
    for tau in dominant_weights_in_ball(n, truncation * truncation):
        total = sum((-1) ** t.degree * m_mult(tau, t.standard_param) for t in terms)
        want = 1 if not any(tau) else 0
        checked += 1
        if total != want:
            failures.append({"tau": list(tau), "value": total, "expected": want})
    return {
        "n": n,
        "truncation": truncation,
        "terms": [{"involution": str(t.involution), "degree": t.degree,
                   "param": list(t.standard_param), "experimental": t.experimental} for t in terms],
        "checked": checked,
        "failures": failures,
        "ok": not failures,
    }
