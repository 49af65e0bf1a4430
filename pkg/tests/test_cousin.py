import itertools

import pytest
from hypothesis import given, strategies as st

from lktmap.cousin import (
    FpfInvolution, bruhat_leq, closure_leq, codimension, enumerate_fpf, verify_zuckerman, zuckerman_terms,
)


def double_factorial(k):
    return 1 if k <= 1 else k * double_factorial(k - 2)


def bruhat_by_subwords(u, v):
    """Bruhat order through reduced words: u <= v iff u is a subword product."""
    def reduced_word(p):
        p = list(p)
        word = []
        while True:
            for i in range(len(p) - 1):
                if p[i] > p[i + 1]:
                    p[i], p[i + 1] = p[i + 1], p[i]
                    word.append(i)
                    break
            else:
                return word[::-1]
    word = reduced_word(v)
    N = len(u)
    target = tuple(u)
    for r in range(len(word) + 1):
        for sub in itertools.combinations(word, r):
            p = list(range(1, N + 1))
            for i in sub:
                p[i], p[i + 1] = p[i + 1], p[i]
            if tuple(p) == target:
                return True
    return False


def test_enumeration():
    assert [str(s) for s in enumerate_fpf(1)] == ["(12)"]
    assert [str(s) for s in enumerate_fpf(2)] == ["(12)(34)", "(13)(24)", "(14)(23)"]
    for n in range(1, 6):
        f = enumerate_fpf(n)
        assert len(f) == len(set(f)) == double_factorial(2 * n - 1)


def test_rejects_bad_involutions():
    for bad in ((1, 2), (2, 3, 1), (2, 1, 3), ()):
        with pytest.raises(ValueError):
            FpfInvolution(bad)


def test_n2_chain():
    a, b, c = enumerate_fpf(2)
    assert closure_leq(c, b) and closure_leq(b, a) and closure_leq(c, a)
    assert not closure_leq(a, c)
    assert closure_leq(a, a)
    assert [codimension(s) for s in (a, b, c)] == [0, 1, 2]


@pytest.mark.parametrize("n", [2, 3])
def test_bruhat_against_subwords(n):
    perms = [s.sigma for s in enumerate_fpf(n)]
    for u in perms:
        for v in perms:
            assert bruhat_leq(u, v) == bruhat_by_subwords(u, v)


@pytest.mark.parametrize("n", [2, 3])
def test_partial_order_with_extremes(n):
    f = enumerate_fpf(n)
    for a, b in itertools.product(f, f):
        if closure_leq(a, b) and closure_leq(b, a):
            assert a == b
    for a, b, c in itertools.product(f, f, f):
        if closure_leq(a, b) and closure_leq(b, c):
            assert closure_leq(a, c)
    top = [a for a in f if all(closure_leq(b, a) for b in f)]
    bottom = [a for a in f if all(closure_leq(a, b) for b in f)]
    assert top == [f[0]] and bottom == [f[-1]]
    assert codimension(f[0]) == 0 and codimension(f[-1]) == n * (n - 1)


def test_terms():
    got = [(str(t.involution), t.degree, t.standard_param) for t in zuckerman_terms(2)]
    assert got == [("(12)(34)", 0, (1, 1)), ("(13)(24)", 1, (2, 2)), ("(14)(23)", 2, (3, 1))]
    assert [(t.degree, t.standard_param) for t in zuckerman_terms(1)] == [(0, (1,))]
    assert zuckerman_terms(3)[-1].standard_param == (5, 3, 1)
    for n in (2, 3, 4):
        terms = zuckerman_terms(n)
        top = max(sum(c * c for c in t.standard_param) for t in terms)
        assert [t for t in terms if sum(c * c for c in t.standard_param) == top] == [terms[-1]]


def test_verify_small():
    assert verify_zuckerman(1, 10)["ok"]
    rep = verify_zuckerman(2, 10)
    assert rep["ok"] and rep["checked"] > 30


def test_verify_reports_failure():
    t = zuckerman_terms(2)[:2]
    rep = verify_zuckerman(2, 4, t)
    assert not rep["ok"] and rep["failures"]


def test_experimental_ranks_still_resolve():
    assert verify_zuckerman(3, 6)["ok"]
