import pytest
from hypothesis import given, settings

from ordtopo import spaces as S
from ordtopo.oracle import (Mult, OracleError, cb_derivative, cb_profile,
                            cof_via_fs, converges_bruteforce,
                            fundamental_sequence, selftest, strata)
from ordtopo.ordinal import CofClass, classify, parse
from ordtopo.pieces import Full, SuccessorsOnly, Singleton
from ordtopo.schedules import AffineOrd, converges
from ordtopo.spaces import GoSpace, IsolateWhere, OrdinalSub, OrdPoint, Pred
from strategies import below_omega4

p = parse


@pytest.mark.parametrize("x, terms", [
    ("w", ["0", "1", "2", "3"]),
    ("w^2", ["0", "w", "w*2", "w*3"]),
    ("w^w", ["1", "w", "w^2", "w^3"]),
    ("w^3+w", ["w^3", "w^3+1", "w^3+2", "w^3+3"]),
    ("w^(w+1)", ["0", "w^w", "w^w*2", "w^w*3"]),
])
def test_fundamental_sequences(x, terms):
    assert [fundamental_sequence(p(x), n) for n in range(4)] == [p(t) for t in terms]


def test_fundamental_sequence_rejects_non_limits():
    with pytest.raises(OracleError):
        fundamental_sequence(p("w+1"), 0)
    with pytest.raises(OracleError):
        fundamental_sequence(p("W"), 0)


@pytest.mark.parametrize("x, want", [
    ("w^3+w", CofClass.COUNTABLE), ("5", CofClass.SUCCESSOR), ("0", CofClass.ZERO),
    ("w^w+1", CofClass.SUCCESSOR), ("w^(w*2)", CofClass.COUNTABLE),
])
def test_cof_via_fs(x, want):
    assert cof_via_fs(p(x)) is want


@settings(max_examples=300, deadline=None)
@given(below_omega4())
def test_cof_agrees_with_classify(x):
    assert cof_via_fs(x) is classify(x)


def test_cb_profiles():
    assert cb_profile(S.full(p("w+1"))) == ("inf", 1, 0)
    assert cb_profile(OrdinalSub(p("w"), [SuccessorsOnly(p("0"), p("w"))])) == ("inf", 0)
    assert cb_profile(S.full(p("w^2+1"))) == ("inf", "inf", 1, 0)
    assert cb_profile(S.full(p("w*3"))) == ("inf", 2, 0)


def test_cb_derivative_survivors_of_omega_squared_plus_one():
    comps, _ = strata(S.full(p("w^2+1")))
    d1 = cb_derivative(comps)
    assert d1 == (Mult(p("1"), p("w^2+1"), 1),)
    d2 = cb_derivative(d1)
    assert d2 == (Mult(p("2"), p("w^2+1"), 2),)  # only w^2 survives
    assert cb_derivative(d2) == ()


def test_cb_profile_sees_gaps_and_isolation():
    s = OrdinalSub(p("w+2"), [Full(p("0"), p("w")), Singleton(p("w+1"))])
    assert cb_profile(s) == ("inf", 0)
    g = GoSpace(S.full(p("w+1")), [IsolateWhere(Pred(classkey="max"))])
    assert cb_profile(g) == ("inf", 0)
    assert cb_profile(OrdinalSub(p("w+1"), [SuccessorsOnly(p("0"), p("w")), Singleton(p("w"))])) \
        == ("inf", 1, 0)


def test_cb_profile_is_countable_only():
    with pytest.raises(OracleError):
        cb_profile(S.full(p("W")))


def test_bruteforce_convergence():
    s = S.full(p("w^2+1"))
    assert converges_bruteforce(AffineOrd(p("w")), OrdPoint(p("w^2")), s)
    wide = S.full(p("w^2*2+1"))
    assert not converges_bruteforce(AffineOrd(p("w")), OrdPoint(p("w^2*2")), wide)
    iso = GoSpace(s, [IsolateWhere(Pred(classkey="max"))])
    assert not converges_bruteforce(AffineOrd(p("w")), OrdPoint(p("w^2")), iso)


@pytest.mark.parametrize("stride, offset, target, bound", [
    ("1", "0", "w", "w^3"), ("w", "3", "w^2", "w^3"), ("w+1", "w", "w^2", "w^3"),
    ("w^2", "0", "w^3", "w^3+1"), ("2", "3", "w", "w^2"), ("w*2", "0", "w^2", "w^2+1"),
])
def test_bruteforce_matches_fast_path(stride, offset, target, bound):
    seq, pt, s = AffineOrd(p(stride), p(offset)), OrdPoint(p(target)), S.full(p(bound))
    assert converges(seq, pt, s) == converges_bruteforce(seq, pt, s)


def test_selftest_scorecard():
    card = selftest(seed=3, n=40)
    assert card["ok"]
    assert set(card["checks"]) >= {"add-associative", "cofinality", "round-trip"}
