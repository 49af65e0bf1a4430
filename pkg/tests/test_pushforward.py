import warnings

import pytest
from hypothesis import given, strategies as st

from lktmap.errors import AmbiguityError, BoxTooSmall, EmptyError, TieError
from lktmap.orbits import build_orbit, lift_with_shift
from lktmap.pushforward import (
    closed_form_lkt, largest_tempiric, lkt_map, pushforward, subset_shifts, verify_bijection,
)
from lktmap.tempiric import VirtualTempiric, expand_k_irrep
from lktmap.weights import dominate_K, norm_sq, rho_constants


def test_largest_examples():
    assert largest_tempiric(VirtualTempiric(2, {(5, 3): 1, (6, 2): -1})) == (6, 2)
    assert largest_tempiric(VirtualTempiric(2, {(1, 1): 1})) == (1, 1)
    assert largest_tempiric(expand_k_irrep((0, 0))) == (3, 1)


def test_largest_errors():
    with pytest.raises(TieError):
        largest_tempiric(VirtualTempiric(2, {(5, 5): 1, (7, 1): 1}))
    with pytest.raises(EmptyError):
        largest_tempiric(VirtualTempiric(2))


@given(st.dictionaries(st.tuples(st.integers(-8, 8), st.integers(-8, 8)), st.integers(-3, 3), min_size=1, max_size=6))
def test_largest_is_conjugation_invariant(raw):
    a = VirtualTempiric(2)
    b = VirtualTempiric(2)
    for p, c in raw.items():
        if 0 in p:
            continue
        a.add(dominate_K(p), c)
        b.add(dominate_K((-p[1], p[0])), c)
    try:
        x = largest_tempiric(a)
    except (TieError, EmptyError) as e:
        with pytest.raises(type(e)):
            largest_tempiric(b)
        return
    assert largest_tempiric(b) == x


def test_principal_gl2_pushforward():
    o = build_orbit(2, [2])
    for t in range(8):
        for k in range(-4, 3):
            X, Y = lift_with_shift(o, (t,), (k,))
            want = VirtualTempiric(2)
            for p, c in (((X + 2, Y + 2), 1), ((X + 3, Y + 1), -1)):
                if 0 not in p:
                    want.add(dominate_K(p), c)
            assert pushforward(o, (X, Y)) == want


def test_zero_orbit_pushforward_is_expansion():
    o = build_orbit(3, [1, 1, 1])
    assert pushforward(o, (2, 1, 0)) == expand_k_irrep((2, 1, 0))


def test_even_orbits_have_one_shift():
    for n, p in ((2, [2]), (4, [4]), (4, [3, 1]), (3, [1, 1, 1])):
        assert len(subset_shifts(build_orbit(n, p))) == 1


def test_middle_subset_term():
    o = build_orbit(3, [2, 1])
    for n1 in range(0, 9):
        for n2 in range(0, 5):
            if n1 > 2 * n2 + 1:
                continue
            lift = lift_with_shift(o, (n1, n2), (-3,))
            v = pushforward(o, lift)
            want = (n2 + 3, -(-n1 // 2) + 1, n1 // 2 + 1)
            assert largest_tempiric(v) == dominate_K(want)


def test_lkt_examples():
    assert lkt_map(build_orbit(2, [2]), (5,)).lkt == (3, 2)
    for a in range(4):
        for b in range(a + 1):
            assert lkt_map(build_orbit(2, [1, 1]), (a, b)).lkt == (a + 2, b)
    r = lkt_map(build_orbit(3, [2, 1]), (2, 0))
    assert r.lkt == (2, 2, 0)
    assert r.full_expansion[r.largest_param] != 0


def test_lkt_result_invariants():
    r = lkt_map(build_orbit(4, [4]), (9,))
    assert r.lkt == tuple(c - 1 for c in r.largest_param)
    assert r.k in [tuple(k) for k in r.diagnostics["minimizers"]]
    assert r.k == min(tuple(k) for k in r.diagnostics["minimizers"])
    assert r.to_dict()["lkt"] == list(r.lkt)


def test_box_too_small_warns():
    with pytest.warns(BoxTooSmall):
        lkt_map(build_orbit(2, [2]), (12,), box=1)


@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.integers(0, 4), min_size=n, max_size=n).map(lambda l: tuple(sorted(l, reverse=True)))))
def test_zero_orbit_shift(tau):
    n = len(tau)
    want = tuple(a + b for a, b in zip(tau, rho_constants(n)[1]))
    assert lkt_map(build_orbit(n, [1] * n), tau).lkt == want


def test_closed_form_examples():
    assert closed_form_lkt("zero", 3, (0, 0, 0)) == (4, 2, 0)
    assert closed_form_lkt("principal", 3, (7,)) == (3, 2, 2)
    assert closed_form_lkt("gl3", 3, (3, 1)) == (3, 2, 1)
    assert closed_form_lkt("gl3", 3, (4, 1)) == (3, 3, 1)
    assert closed_form_lkt("gl2", 2, (5,)) == (3, 2)
    assert closed_form_lkt("gl2", 2, (3, 1)) == (5, 1)
    for bad in (("gl2", 3, (1,)), ("zero", 2, (0, 1)), ("subregular", 4, (1, 2)), ("nope", 2, (1,))):
        with pytest.raises(ValueError):
            closed_form_lkt(*bad)


@given(st.integers(0, 30), st.integers(0, 12))
def test_odd_subregular_n3_is_middle(a, b):
    assert closed_form_lkt("subregular", 3, (a, b)) == closed_form_lkt("gl3", 3, (a, b))


def test_verify_bijection_small():
    rep = verify_bijection(2, 6)
    assert rep["ok"], rep
    rep1 = verify_bijection(1, 6)
    assert rep1["ok"] and rep1["surjective"]


def test_verify_reports_mismatch(monkeypatch):
    import importlib
    pf = importlib.import_module("lktmap.pushforward")
    real = pf.closed_form_lkt
    monkeypatch.setattr(pf, "closed_form_lkt", lambda f, n, t: tuple(c + 1 for c in real(f, n, t)))
    rep = verify_bijection(2, 2)
    assert not rep["ok"] and rep["agreement"]["mismatches"]
