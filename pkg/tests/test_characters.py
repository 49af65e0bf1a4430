import itertools

import pytest
from hypothesis import given, strategies as st

from lktmap.characters import (
    BranchingError, FormalCharacter, branch_to_su2_power, dominant_multiplicities, weyl_character,
    weyl_dimension,
)
from lktmap.weights import dominant_weights_in_ball, signed_permutations, act


def brute_sp_character(hw):
    """Character through the Weyl character formula by explicit division.

    The alternating sum over W is divided by the Weyl denominator by repeated
    subtraction of leading monomials: an independent route to Freudenthal.
    """
    n = len(hw)
    rho = tuple(range(n, 0, -1))
    num = {}
    for perm, signs, s in signed_permutations(n):
        w = act(perm, signs, tuple(a + b for a, b in zip(hw, rho)))
        num[w] = num.get(w, 0) + s
    den = {}
    for perm, signs, s in signed_permutations(n):
        w = act(perm, signs, rho)
        den[w] = den.get(w, 0) + s
    order = lambda w: tuple(w)
    lead_d = max(den, key=order)
    out = {}
    num = {k: v for k, v in num.items() if v}
    while num:
        lead = max(num, key=order)
        c = num[lead] // den[lead_d]
        shift = tuple(a - b for a, b in zip(lead, lead_d))
        out[shift] = c
        for w, d in den.items():
            key = tuple(a + b for a, b in zip(w, shift))
            num[key] = num.get(key, 0) - c * d
            if num[key] == 0:
                del num[key]
    return out


def test_sp2_standard():
    assert weyl_character(("Sp", 1), (1,)).terms == {(1,): 1, (-1,): 1}


def test_sp4_standard():
    chi = weyl_character(("Sp", 2), (1, 0))
    assert chi.terms == {(1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1}


def test_sp4_lambda2():
    chi = weyl_character(("Sp", 2), (1, 1))
    assert chi.dimension() == 5 == weyl_dimension(("Sp", 2), (1, 1))
    assert chi.terms == {(1, 1): 1, (1, -1): 1, (-1, 1): 1, (-1, -1): 1, (0, 0): 1}


@pytest.mark.parametrize("hw", [w for n in (1, 2, 3) for w in dominant_weights_in_ball(n, 14)])
def test_freudenthal_matches_weyl_division(hw):
    assert weyl_character(("Sp", len(hw)), hw).terms == brute_sp_character(hw)


@pytest.mark.parametrize("hw", [(0, 0), (2, 0), (3, 1, -2), (2, 2, 2)])
def test_gl_dimension(hw):
    k = len(hw)
    if any(hw[i] < hw[i + 1] for i in range(k - 1)):
        with pytest.raises(ValueError):
            weyl_character(("GL", k), hw)
        return
    chi = weyl_character(("GL", k), hw)
    assert chi.dimension() == weyl_dimension(("GL", k), hw)


def test_gl_weights_have_fixed_sum():
    chi = weyl_character(("GL", 3), (2, 1, 0))
    assert chi.dimension() == 8
    assert {sum(w) for w, _ in chi} == {3}


def test_su2_power():
    chi = weyl_character(("SU2", 2), (1, 2))
    assert chi.dimension() == 6


def test_rejects_non_dominant():
    with pytest.raises(ValueError):
        weyl_character(("Sp", 2), (0, 1))
    with pytest.raises(ValueError):
        weyl_character(("SU2", 1), (-1,))
    with pytest.raises(ValueError):
        weyl_character(("SO", 2), (0, 0))


def test_branching_examples():
    assert branch_to_su2_power(weyl_character(("Sp", 3), (0, 0, 0))) == {(0, 0, 0): 1}
    assert branch_to_su2_power(weyl_character(("Sp", 2), (1, 0))) == {(1, 0): 1, (0, 1): 1}
    adj = weyl_character(("Sp", 2), (2, 0))
    assert adj.dimension() == 10
    assert branch_to_su2_power(adj) == {(2, 0): 1, (0, 2): 1, (1, 1): 1}


def test_branching_rejects_fake_character():
    bad = FormalCharacter(1, {(1,): 1})
    with pytest.raises(BranchingError):
        branch_to_su2_power(bad)


@given(st.sampled_from([w for n in (1, 2, 3) for w in dominant_weights_in_ball(n, 20)]))
def test_branching_preserves_dimension(hw):
    chi = weyl_character(("Sp", len(hw)), hw)
    assert chi.dimension() == weyl_dimension(("Sp", len(hw)), hw)
    br = branch_to_su2_power(chi)
    assert all(c > 0 for c in br.values())
    total = 0
    for q, c in br.items():
        d = 1
        for x in q:
            d *= x + 1
        total += c * d
    assert total == chi.dimension()


@given(st.sampled_from([w for w in dominant_weights_in_ball(2, 30)]))
def test_character_is_weyl_invariant(hw):
    chi = weyl_character(("Sp", 2), hw)
    for perm, signs, _ in signed_permutations(2):
        for w, c in chi:
            assert chi[act(perm, signs, w)] == c


def test_formal_character_arithmetic():
    a = FormalCharacter(1, {(1,): 1, (-1,): 1})
    b = FormalCharacter(1, {(1,): 1})
    assert (a - b).terms == {(-1,): 1}
    assert (a - a).terms == {}
    assert a.scale(3)[(1,)] == 3
    with pytest.raises(ValueError):
        FormalCharacter(2, {(1,): 1})
