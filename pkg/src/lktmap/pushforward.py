"""
The pushforward of a lifted bundle to the orbit closure, its largest tempiric
term, and the lowest-K-type map obtained by minimizing over lifts.

For a lift ``lw`` of a stabilizer representation the pushforward is the
virtual module

    V = sum_{A subset Delta(s_1)} (-1)^|A| sum_terms sign * [dom(raw - 2 rho(A) + rho(u))]

where the raw terms expand the L cap K representation ``lw`` in tempirics of
the Levi (``expand_levi_irrep``) and ``2 rho(A)`` is the sum of the weights
in ``A``.  Parameters with a zero entry after domination vanish.
"""
from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import AmbiguityError, BoxTooSmall, EmptyError, TieError
from .orbits import (
    OrbitDatum,
    build_orbit,
    default_box,
    family_partition,
    lift_with_shift,
    shift_vectors,
)
from .tempiric import VirtualTempiric, canonical_param, expand_levi_irrep, lkt_of_tempiric
from .weights import Weight, dominant_weights_in_ball, is_dominant_K, norm_sq, rho_constants

__all__ = [
    "LktResult",
    "pushforward",
    "largest_tempiric",
    "lkt_map",
    "closed_form_lkt",
    "verify_bijection",
    "subset_shifts",
]


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def subset_shifts(o: OrbitDatum) -> dict[Weight, int]:
    """Signed count of ``rho(u) - 2 rho(A)`` over subsets A of Delta(s_1)."""
    out: Counter = Counter()
    s1 = o.s1_weights
    for r in range(len(s1) + 1):
        sign = -1 if r % 2 else 1
        for A in combinations(s1, r):
            v = tuple(u - sum(a[i] for a in A) for i, u in enumerate(o.rho_u_T))
            out[v] += sign
    return {v: c for v, c in out.items() if c}


def pushforward(o: OrbitDatum, lift: Sequence[int], bound: int | None = None) -> VirtualTempiric:
    """Virtual tempiric sum of the pushforward of the bundle attached to ``lift``.

    >>> pushforward(build_orbit(2, [2]), (3, -2))
    VirtualTempiric({(6, 1): -1})
    """
    lift = tuple(int(c) for c in lift)
    if not o.levi_shape.is_dominant(lift):
        raise ValueError(f"{lift} is not dominant for {o.levi_shape}")
    raw = expand_levi_irrep(o.levi_shape, lift, bound)
    shifts = subset_shifts(o)
    out = VirtualTempiric(o.n)
    for p, c in raw.terms.items():
        for v, s in shifts.items():
            q = canonical_param(tuple(a + b for a, b in zip(p, v)))
            if q is not None:
                out.add(q, c * s)
    return out


def _maximizers(v: VirtualTempiric) -> tuple[int, list[Weight]]:
    if not v:
        raise EmptyError("virtual module has no terms")
    top = max(norm_sq(p) for p in v.terms)
    return top, sorted(p for p in v.terms if norm_sq(p) == top)


def largest_tempiric(v: VirtualTempiric) -> Weight:
    """The parameter of largest norm with a non-zero coefficient.

    >>> largest_tempiric(VirtualTempiric(2, {(5, 3): 1, (6, 2): -1}))
    (6, 2)
    """
    if not isinstance(v, VirtualTempiric):
        v = VirtualTempiric(len(next(iter(v))), v)
    _, best = _maximizers(v)
    if len(best) > 1:
        raise TieError(f"distinct parameters {best} share the largest norm", best)
    return best[0]


@dataclass
class LktResult:
    """Outcome of minimizing the largest tempiric over lifts."""

    orbit: str
    partition: tuple[int, ...]
    tau: Weight
    k: tuple[int, ...]
    lift: Weight
    largest_param: Weight
    lkt: Weight
    full_expansion: VirtualTempiric
    diagnostics: dict = field(default_factory=dict)

    @property
    def norm_sq(self) -> int:
        return norm_sq(self.largest_param)

    def to_dict(self) -> dict:
        return {
            "orbit": self.orbit,
            "partition": list(self.partition),
            "tau": list(self.tau),
            "k": list(self.k),
            "lift": list(self.lift),
            "largest_param": list(self.largest_param),
            "lkt": list(self.lkt),
            "full_expansion": self.full_expansion.to_list(),
        }


def lkt_map(o: OrbitDatum, tau: Sequence[int], box: int | None = None,
            bound: int | None = None) -> LktResult:
    """Lowest K-type attached to the stabilizer representation ``tau``.

    Every lift in the box is pushed forward and its largest tempiric found;
    the lift whose largest parameter has the smallest norm wins.  Among
    minimizing lifts the lexicographically smallest shift vector is reported.

    >>> lkt_map(build_orbit(2, [2]), (5,)).lkt
    (3, 2)
    """
    tau = o.check_tau(tau)
    if box is None:
        box = default_box(o.n)
    scores: list[tuple[int, tuple[int, ...], Weight]] = []
    ties: list[dict] = []
    empty: list[tuple[int, ...]] = []
    tie_norms: dict[tuple[int, ...], int] = {}
    for k in shift_vectors(o, box):
        lift = lift_with_shift(o, tau, k)
        v = pushforward(o, lift, bound)
        if not v:
            empty.append(k)
            continue
        top, best = _maximizers(v)
        if len(best) > 1:
            ties.append({"k": list(k), "norm_sq": top, "params": [list(p) for p in best]})
            tie_norms[k] = top
            continue
        scores.append((top, k, best[0]))
    if not scores:
        if ties:
            raise TieError(f"every lift of {tau} has a tied largest parameter",
                           [tuple(p) for t in ties for p in t["params"]])
        raise EmptyError(f"every lift of {tau} pushes forward to zero")
    low = min(s[0] for s in scores)
    bad = [t for k, t in tie_norms.items() if t <= low]
    if bad:
        worst = [t for t in ties if t["norm_sq"] <= low]
        raise TieError(f"a lift of {tau} ties at the minimal norm: {worst}",
                       [tuple(p) for t in worst for p in t["params"]])
    winners = sorted((k, p) for s, k, p in scores if s == low)
    params = sorted({p for _, p in winners})
    if len(params) > 1:
        raise AmbiguityError(f"minimizing lifts of {tau} disagree: {params}", params)
    k, best = winners[0]
    on_edge = [list(kk) for kk, _ in winners if any(abs(x) == box for x in kk)]
    if on_edge and o.lift_dim:
        warnings.warn(BoxTooSmall(f"minimum for {tau} on {o.name} sits on the box edge {box}"), stacklevel=2)
    lift = lift_with_shift(o, tau, k)
    full = pushforward(o, lift, bound)
    diag = {
        "box": box,
        "lifts": len(scores) + len(ties) + len(empty),
        "minimal_norm_sq": low,
        "minimizers": [list(kk) for kk, _ in winners],
        "ties_off_minimum": ties,
        "empty_lifts": [list(kk) for kk in empty],
        "on_box_edge": bool(on_edge),
    }
    return LktResult(o.name, o.partition, tau, k, lift, best, lkt_of_tempiric(best), full, diag)


# -- closed forms ------------------------------------------------------------


def _principal(n: int, t: int) -> Weight:
    return tuple(_ceil_div(t - j, n) for j in range(n))


def _dom_minus_one(p: Sequence[int]) -> Weight:
    return tuple(c - 1 for c in sorted((abs(x) for x in p), reverse=True))


def closed_form_lkt(family: str, n: int, tau: Sequence[int]) -> Weight:
    """Closed-form lowest K-type for the families with explicit formulas.

    ``family`` is ``zero``, ``principal``, ``subregular`` (with ``middle`` as
    an alias at n = 3), or ``gl2``/``gl3`` where the orbit is read off from
    the length of ``tau`` (rank-length: zero; 1: principal; 2: middle).

    >>> closed_form_lkt("principal", 3, (7,))
    (3, 2, 2)
    >>> closed_form_lkt("gl3", 3, (4, 1))
    (3, 3, 1)
    """
    tau = tuple(int(c) for c in tau)
    if family in ("gl2", "gl3"):
        want = 2 if family == "gl2" else 3
        if n != want:
            raise ValueError(f"{family} is rank {want}, got n={n}")
        kinds = {2: "zero", 1: "principal"} if n == 2 else {3: "zero", 2: "subregular", 1: "principal"}
        if len(tau) not in kinds:
            raise ValueError(f"{tau} does not name a {family} orbit input")
        family = kinds[len(tau)]
    if family == "middle":
        if n != 3:
            raise ValueError("the middle orbit exists at rank 3 only")
        family = "subregular"
    if any(c < 0 for c in tau):
        raise ValueError(f"{tau} has negative entries")
    if family == "zero":
        if len(tau) != n or not is_dominant_K(tau):
            raise ValueError(f"{tau} is not a dominant K-type of rank {n}")
        return tuple(a + b for a, b in zip(tau, rho_constants(n)[1]))
    if family == "principal":
        if len(tau) != 1:
            raise ValueError("principal orbit inputs are single integers")
        return _principal(n, tau[0])
    if family != "subregular":
        raise ValueError(f"unknown family {family!r}")
    if n < 3:
        raise ValueError("the subregular family needs n >= 3")
    if n % 2:
        if len(tau) != 2:
            raise ValueError("odd subregular inputs are (a, b)")
        a, b = tau
        m = n - 1
        if a <= m * b + (n - 2):
            p = (b + 3,) + tuple((-1) ** j * (_ceil_div(a - j, m) + 1) for j in range(0, n - 1))
        else:
            p = tuple((-1) ** (j % 2) * (_ceil_div(a - j, m) + 1) for j in range(-2, n - 3)) + (b + 1,)
        return _dom_minus_one(p)
    if len(tau) != 3 or tau[1] < tau[2]:
        raise ValueError("even subregular inputs are (a, b, c) with b >= c")
    a, b, c = tau
    m = n - 2
    ceil = tuple(_ceil_div(a - j, m) for j in range(m))
    if a <= m * c:
        return (b + 2, c) + ceil
    if a <= m * (b + 2):
        return (b + 2,) + ceil + (c,)
    return ceil + (b + 2, c)


# -- bijection report --------------------------------------------------------


def _family_inputs(n: int, family: str, max_weight: int) -> list[Weight]:
    M = max_weight
    if family == "zero":
        return [w for w in _dominant_box(n, M)]
    if family == "principal":
        return [(t,) for t in range(n * M + 1)]
    if family == "subregular" and n == 3:
        return [(a, b) for b in range(M + 1) for a in range(2 * M + 1)]
    raise ValueError(f"no input grid for {family} at n={n}")


def _dominant_box(n: int, M: int) -> list[Weight]:
    return [w for w in dominant_weights_in_ball(n, n * M * M) if w[0] <= M]


def verify_bijection(n: int, max_weight: int, box: int | None = None, bound: int | None = None,
                     families: Sequence[str] | None = None, jobs: int = 1) -> dict:
    """Compare the computed map with the closed forms and test bijectivity.

    Inputs: zero-orbit K-types with entries at most ``max_weight``, principal
    parameters up to ``n * max_weight`` and (n = 3) middle-orbit parameters
    ``(n1, n2)`` with ``n1 <= 2 max_weight``, ``n2 <= max_weight``.  These
    ranges contain every preimage of a K-type whose first entry is at most
    ``max_weight``, which is the window checked for surjectivity.
    """
    if families is None:
        families = {1: ["zero"], 2: ["zero", "principal"], 3: ["zero", "subregular", "principal"]}.get(
            n, ["zero", "principal"])
    full = n <= 3
    jobs_list = []
    for fam in families:
        part = family_partition(n, fam)
        o = build_orbit(n, part)
        if n == 1 and fam == "principal":
            continue
        for tau in _family_inputs(n, fam, max_weight):
            jobs_list.append((fam, o, tau))

    def run(job):
        fam, o, tau = job
        row = {"family": o.name, "tau": list(tau)}
        try:
            res = lkt_map(o, tau, box, bound)
            row.update(lkt=list(res.lkt), k=list(res.k), param=list(res.largest_param))
        except (TieError, AmbiguityError, EmptyError) as e:
            row.update(lkt=None, error=f"{type(e).__name__}: {e}")
            return row
        try:
            cf = closed_form_lkt(fam, n, tau)
            row["closed_form"] = list(cf)
            row["agree"] = tuple(res.lkt) == cf
        except ValueError:
            row["closed_form"] = None
            row["agree"] = None
        return row

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BoxTooSmall)
        if jobs > 1:
            from concurrent.futures import ThreadPoolExecutor
            with ThreadPoolExecutor(jobs) as ex:
                rows = list(ex.map(run, jobs_list))
        else:
            rows = [run(j) for j in jobs_list]
    incidents = [r for r in rows if r.get("lkt") is None]
    mismatches = [r for r in rows if r.get("agree") is False]
    seen: dict[Weight, dict] = {}
    collisions = []
    for r in rows:
        if r.get("lkt") is None:
            continue
        key = tuple(r["lkt"])
        if key in seen:
            collisions.append({"lkt": r["lkt"], "inputs": [seen[key], {"family": r["family"], "tau": r["tau"]}]})
        else:
            seen[key] = {"family": r["family"], "tau": r["tau"]}
    missing = None
    if full:
        missing = [list(w) for w in _dominant_box(n, max_weight) if w not in seen]
    ok = not incidents and not mismatches and not collisions and not missing
    return {
        "n": n,
        "max_weight": max_weight,
        "rows": rows,
        "agreement": {"checked": sum(r.get("agree") is not None for r in rows), "mismatches": mismatches},
        "injective": not collisions,
        "collisions": collisions,
        "surjective": None if missing is None else not missing,
        "missing": missing,
        "incidents": incidents,
        "ok": ok,
    }
