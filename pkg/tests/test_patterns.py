from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from uturn.algebra import constant, evaluate, variables
from uturn.demazure import CartanData, character, rho_monomial
from uturn.model import MarkedState, build_model, enumerate_marked_states, enumerate_states
from uturn.patterns import (ProctorPattern, Tableau, compute_key, enumerate_patterns,
                            enumerate_tableaux, key_partition, king_relabel, parse_pattern,
                            parse_tableau, pattern_to_state, pattern_to_tableau,
                            pattern_weight, state_to_pattern, tableau_to_pattern,
                            tableau_weight, validate_pattern, validate_tableau,
                            verify_bijection)
from uturn.weyl import from_word, identity, longest_element, word_text

z1, z2 = variables(2)


def P(text):
    return parse_pattern(text)


def T(text, n=2):
    return parse_tableau(text, n)


def test_parse_pattern():
    p = P("[(2,1),(1,0),(1),(1/2)]")
    assert p.rows == ((2, 1), (1, 0), (1,), (Fraction(1, 2),))
    assert P("[[2,1],[1,0],[1],[0]]") == P("[(2,1),(1,0),(1,),(0,)]")


def test_validate_pattern():
    assert validate_pattern(P("[(2,1),(1,0),(1),(0)]"))
    assert not validate_pattern(P("[(2,1),(3,0),(1),(0)]"))
    half = P("[(2,1),(1,0),(1),(1/2)]")
    assert validate_pattern(half, "B")
    assert not validate_pattern(half, "C")
    # a half in a slot other than b_{i,n}
    assert not validate_pattern(P("[(2,1),(3/2,0),(1),(0)]"), "B")


def test_pattern_counts():
    assert len(enumerate_patterns((2, 1))) == 16
    assert enumerate_patterns((0, 0)) == [P("[(0,0),(0,0),(0),(0)]")]
    assert len(enumerate_patterns((1, 1))) == 5
    assert len(enumerate_patterns((1, 1), "B")) == 10


def test_vector_representation_count():
    # Sp(4) acts on a 4-dimensional space; the weights are +-e1, +-e2
    pats = enumerate_patterns((1, 0))
    ch = rho_monomial(2) * character((1, 0), CartanData("C", 2))
    assert len(pats) == evaluate(ch, (1, 1)) == 4


@pytest.mark.parametrize("t", ["B", "C"])
@pytest.mark.parametrize("lam", [(1, 0), (1, 1), (2, 1), (2, 2), (3, 1)])
def test_counts_match_dimensions(t, lam):
    ch = rho_monomial(2) * character(lam, CartanData(t, 2))
    assert len(enumerate_patterns(lam, t)) == evaluate(ch, (1, 1))


def test_pattern_weight():
    assert pattern_weight(P("[(2,1),(1,0),(1),(0)]")) == z1 ** 2 * z2
    assert pattern_weight(P("[(2,1),(1,0),(1),(1)]")) == z1 ** 2 * z2 ** -1
    assert pattern_weight(P("[(0,0),(0,0),(0),(0)]")) == constant(1, 2)
    assert pattern_weight(P("[(2,1),(1,0),(1),(1/2)]")) == z1 ** 2


def _state(w, t="C", fam="atom"):
    m = build_model((2, 1), w, fam, t)
    (s,) = enumerate_states(m)
    return m, s


def test_state_to_pattern_examples():
    m, s = _state(identity(2))
    assert state_to_pattern(m, s) == P("[(2,1),(1,0),(1),(0)]")
    m, s = _state(from_word((1,), 2))
    assert state_to_pattern(m, s) == P("[(2,1),(2,0),(2),(0)]")
    m, s = _state(from_word((2,), 2), "B")
    assert state_to_pattern(m, MarkedState(s, frozenset({2}))) == P("[(2,1),(1,0),(1),(1/2)]")
    with pytest.raises(ValueError):
        state_to_pattern(m, s)


def test_pattern_to_state_examples():
    m = build_model((2, 1), longest_element(2), "character")
    s = pattern_to_state(P("[(2,1),(1,0),(1),(0)]"))
    assert s in enumerate_states(m)
    assert state_to_pattern(m, s) == P("[(2,1),(1,0),(1),(0)]")
    for p in enumerate_patterns((2, 1)):
        assert state_to_pattern(m, pattern_to_state(p)) == p
    empty = pattern_to_state(P("[(0,0),(0,0),(0),(0)]"))
    assert state_to_pattern(build_model((0, 0), longest_element(2), "character"), empty) \
        == P("[(0,0),(0,0),(0),(0)]")
    with pytest.raises(ValueError):
        pattern_to_state(P("[(2,1),(3,0),(1),(0)]"))


def test_theta_examples():
    assert str(pattern_to_tableau(P("[(2,1),(1,0),(1),(0)]"))) == "[[2,1],[1]]"
    assert str(pattern_to_tableau(P("[(2,1),(1,0),(1),(1)]"))) == "[[2b,1],[1]]"
    assert str(pattern_to_tableau(P("[(2,1),(1,0),(1),(1/2)]"), "B")) == "[[inf,1],[1]]"
    assert tableau_to_pattern(T("[[2b,1],[1]]")) == P("[(2,1),(1,0),(1),(1)]")
    assert tableau_to_pattern(Tableau((), 2)) == P("[(0,0),(0,0),(0),(0)]")
    assert tableau_to_pattern(T("[[inf,1],[1]]"), "B") == P("[(2,1),(1,0),(1),(1/2)]")


def test_tableau_validation():
    assert validate_tableau(T("[[2b,1],[1b]]"))
    assert not validate_tableau(T("[[1,2],[1]]"))        # row increases
    assert not validate_tableau(T("[[2,1],[2]]"))        # column not strict
    assert not validate_tableau(T("[[2,1],[2b]]"))       # row 2 bounded by 1b
    assert not validate_tableau(T("[[2,inf],[1]]"))      # inf only leftmost
    assert validate_tableau(T("[[inf,1],[inf]]"))        # repeats down a column
    with pytest.raises(ValueError):
        tableau_to_pattern(T("[[1,2],[1]]"))
    with pytest.raises(ValueError):
        tableau_to_pattern(T("[[inf,1],[1]]"), "C")
    with pytest.raises(ValueError):
        parse_tableau("[[3]]", 2)


def test_tableau_weight_ignores_infinity():
    assert tableau_weight(T("[[inf,1],[1]]")) == z1 ** 2
    assert tableau_weight(T("[[2b,1],[1]]")) == z1 ** 2 * z2 ** -1


def test_king_relabel():
    assert str(king_relabel(T("[[2b,1],[1]]"))) == "[[1b,2],[2]]"


def test_round_trip_tableaux():
    tabs = enumerate_tableaux((2, 1), 2)
    assert len(set(tabs)) == 16
    for t in tabs:
        assert pattern_to_tableau(tableau_to_pattern(t)) == t


@pytest.mark.parametrize("t", ["B", "C"])
@pytest.mark.parametrize("lam", [(0,), (1,), (2,), (3,), (4,)])
def test_bijections_rank1(t, lam):
    assert verify_bijection(lam, t) == []


@pytest.mark.parametrize("t", ["B", "C"])
@pytest.mark.parametrize("lam", [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 0),
                                 (3, 1), (4, 0)])
def test_bijections_rank2(t, lam):
    assert verify_bijection(lam, t) == []


def test_key_examples():
    assert compute_key(T("[[2b,1],[1]]")).w == from_word((2,), 2)
    assert compute_key(T("[[2,1],[1]]")).w == identity(2)
    assert compute_key(T("[[2b,1b],[1b]]")).w == longest_element(2)


def test_key_of_state():
    m = build_model((2, 1), longest_element(2), "character")
    for s in enumerate_states(m):
        res = compute_key((m, s))
        assert res.state in enumerate_states(build_model((2, 1), res.w))


def test_key_grouping():
    kp = key_partition((2, 1))
    counts = {word_text(w): len(ts) for w, ts in kp.items()}
    assert counts == {"1": 1, "s1": 1, "s2": 1, "s1 s2": 3, "s2 s1": 2,
                      "s1 s2 s1": 4, "s2 s1 s2": 3, "s1 s2 s1 s2": 1}


@pytest.mark.parametrize("t", ["B", "C"])
@pytest.mark.parametrize("lam", [(1, 0), (1, 1), (2, 1), (2, 2)])
def test_key_partition_recovers_atoms(t, lam):
    from uturn.model import partition_function
    for w, tabs in key_partition(lam, t).items():
        total = sum((rho_monomial(2) * pattern_weight(tableau_to_pattern(x, t)) for x in tabs),
                    constant(0, 2))
        assert total == partition_function(build_model(lam, w, "atom", t))


@given(st.sampled_from(enumerate_patterns((3, 1), "B")))
def test_type_b_theta_round_trip(p):
    t = pattern_to_tableau(p, "B")
    assert validate_tableau(t)
    assert tableau_to_pattern(t, "B") == p
