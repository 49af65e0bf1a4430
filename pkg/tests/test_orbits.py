import itertools

import pytest
from hypothesis import given, strategies as st

from lktmap.orbits import (
    base_lift, build_orbit, enumerate_lifts, family_partition, lift_with_shift, parse_orbit,
    restrict_to_stabilizer,
)


def partitions(n, cap=None):
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for k in range(min(n, cap), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def brute_orbit(n, part):
    """H, rho(u) and the s_1 weights from matrix units of gl(2n).

    E_ij and E_{j'i'} span a space holding one copy in k and one in s with
    the common T-weight eps_i - eps_j; for j = i' the unit lies in k alone.
    Each unordered class is collected explicitly, independent of the
    deduplication in the library.
    """
    h = sorted([v for k in part for v in range(k - 1, -k, -2) for _ in range(2)], reverse=True)
    N = 2 * n
    eps = [[0] * n for _ in range(N)]
    for i in range(N):
        if i < n:
            eps[i][i] = 1
        else:
            eps[i][N - 1 - i] = -1
    s_weights = {}
    rho2 = [0] * n
    for i in range(N):
        for j in range(N):
            if i == j:
                continue
            w = tuple(a - b for a, b in zip(eps[i], eps[j]))
            if h[i] > h[j]:
                rho2 = [a + b for a, b in zip(rho2, w)]
            if j != N - 1 - i:
                s_weights.setdefault((w, h[i] - h[j]), set()).add(frozenset([(i, j), (N - 1 - j, N - 1 - i)]))
    s1 = {w for (w, d), v in s_weights.items() if d == 1}
    return h, tuple(c // 2 for c in rho2), s1


def test_stated_vectors():
    o = build_orbit(2, [2])
    assert o.rho_u_T == (2, 2) and o.s1_weights == () and str(o.levi_shape) == "GL(2)" and o.stab_str() == "Sp(2)"
    o = build_orbit(3, [2, 1])
    assert o.rho_u_T == (4, 4, 0)
    assert set(o.s1_weights) == {(1, 0, -1), (0, 1, -1), (1, 0, 1), (0, 1, 1)}
    assert str(o.levi_shape) == "GL(2) x Sp(2)" and o.stab_str() == "Sp(2) x Sp(2)"
    o = build_orbit(4, [3, 1])
    assert o.rho_u_T == (6, 6, 0, 0) and str(o.levi_shape) == "GL(2) x Sp(4)"
    assert o.stab_str() == "Sp(2) x Sp(4)"


@pytest.mark.parametrize("n", range(1, 8))
def test_family_closed_forms(n):
    assert build_orbit(n, [1] * n).rho_u_T == (0,) * n
    if n % 2 == 0:
        want = tuple(2 * n - 2 - 4 * (i // 2) for i in range(n))
        assert build_orbit(n, [n]).rho_u_T == want
        if n >= 4:
            sub = tuple(2 * n - 2 - 4 * (i // 2) for i in range(n - 2)) + (0, 0)
            assert build_orbit(n, [n - 1, 1]).rho_u_T == sub


@pytest.mark.parametrize("n,part", [(n, p) for n in range(1, 6) for p in partitions(n)])
def test_orbit_against_matrix_units(n, part):
    o = build_orbit(n, part)
    h, rho, s1 = brute_orbit(n, part)
    assert list(o.h_weights) == h
    assert o.rho_u_T == rho
    assert set(o.s1_weights) == s1
    assert len(o.s1_weights) == len(set(o.s1_weights))
    assert all(o.rho_u_T[i] >= o.rho_u_T[i + 1] >= 0 for i in range(n - 1))
    assert all(c % 2 == 0 for c in o.rho_u_T)
    assert sorted(o.h_weights) == sorted(-x for x in o.h_weights)
    even = len({x % 2 for x in o.h_weights}) == 1
    assert (o.s1_weights == ()) == even


def test_invalid_partitions():
    for bad in ([2, 2], [1, 2], [0, 3], []):
        with pytest.raises(ValueError):
            build_orbit(3, bad)


def test_parse_orbit():
    assert parse_orbit(3, "middle") == (2, 1)
    assert parse_orbit(4, "subregular") == (3, 1)
    assert parse_orbit(4, "zero") == (1, 1, 1, 1)
    assert parse_orbit(3, "2,1") == (2, 1)
    with pytest.raises(ValueError):
        family_partition(4, "middle")


def test_restriction_examples():
    o = build_orbit(3, [2, 1])
    assert restrict_to_stabilizer(o, (5, 2, 4)) == (3, 4)
    o = build_orbit(4, [4])
    assert restrict_to_stabilizer(o, (5, 1, 3, -2)) == (4 + 5,)
    o = build_orbit(3, [3])
    assert restrict_to_stabilizer(o, (3, -2, 2)) == (7,)


def test_lift_examples():
    o = build_orbit(2, [2])
    for t in range(10):
        for k in (-2, 0, 3):
            assert lift_with_shift(o, (t,), (k,)) == (-(-t // 2) + k, -(t // 2) + k)
    o = build_orbit(3, [2, 1])
    assert lift_with_shift(o, (5, 2), (1,)) == (4, -1, 2)


def test_unsupported_partition():
    o = build_orbit(4, [2, 2])
    assert not o.supported and o.stab_str() == "Sp(4)"
    with pytest.raises(NotImplementedError):
        base_lift(o, (1, 0))


supported = [(n, p) for n in range(1, 7) for p in partitions(n) if build_orbit(n, p).supported]


@given(st.sampled_from(supported), st.data())
def test_section_identity(np_, data):
    n, part = np_
    o = build_orbit(n, part)
    g = len(o.diagonals)
    diag = tuple(data.draw(st.integers(0, 15)) for _ in range(g))
    sp = tuple(sorted(data.draw(st.lists(st.integers(0, 6), min_size=o.sp_rank, max_size=o.sp_rank)), reverse=True))
    tau = diag + sp
    lifts = enumerate_lifts(o, tau, 1)
    assert len(lifts) == 3 ** o.lift_dim
    for lw in lifts:
        assert o.levi_shape.is_dominant(lw)
        assert restrict_to_stabilizer(o, lw) == tau


@given(st.integers(0, 30), st.integers(-5, 5))
def test_det_twist_invariance(t, k):
    o = build_orbit(5, [5])
    lw = base_lift(o, (t,))
    twisted = (lw[0] + k, lw[1] + k) + lw[2:]
    assert restrict_to_stabilizer(o, twisted) == (t,)
