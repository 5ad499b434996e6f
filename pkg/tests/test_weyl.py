import pytest
from itertools import product

from uturn.weyl import (SignedPermutation, all_elements, all_reduced_words, bruhat_leq,
                        color_word, from_word, identity, length, length_and_reduced_word,
                        longest_element, lower_interval, parse_weyl, reduced_word,
                        simple_reflection, window_text, word_text)


def s(i, n=2):
    return simple_reflection(i, n)


def test_basic_relations():
    assert s(1) * s(1) == identity(2)
    assert s(1) * s(2) * s(1) != s(2) * s(1) * s(2)
    # the end node braid relation has length 4
    assert s(2) * s(1) * s(2) * s(1) == s(1) * s(2) * s(1) * s(2)
    w0 = longest_element(2)
    assert w0.images == (-1, -2)
    assert w0 * w0 == identity(2)


def test_invalid_window():
    with pytest.raises(ValueError):
        SignedPermutation([1, 1])
    with pytest.raises(ValueError):
        s(1) * s(1, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_group_order(n):
    import math
    els = all_elements(n)
    assert len(els) == len(set(els)) == 2 ** n * math.factorial(n)


def test_lengths():
    assert length_and_reduced_word(identity(2)) == (0, ())
    assert length(longest_element(2)) == 4
    assert length(longest_element(3)) == 9
    assert length(from_word((2, 1, 2), 2)) == 3
    assert reduced_word(from_word((2, 1, 2), 2)) == (2, 1, 2)


@pytest.mark.parametrize("n", [2, 3])
def test_length_changes_by_one(n):
    for w in all_elements(n):
        for i in range(1, n + 1):
            assert abs(length(s(i, n) * w) - length(w)) == 1
            assert abs(length(w * s(i, n)) - length(w)) == 1


def test_matsumoto_words():
    for w in all_elements(2):
        words = all_reduced_words(w)
        assert reduced_word(w) in words
        assert all(from_word(word, 2) == w and len(word) == length(w) for word in words)
    assert len(all_reduced_words(longest_element(2))) == 2


def test_bruhat_examples():
    for w in all_elements(2):
        assert bruhat_leq(identity(2), w)
    assert not bruhat_leq(s(1), s(2))
    assert bruhat_leq(s(1) * s(2), s(2) * s(1) * s(2))
    assert len(lower_interval(from_word((2, 1, 2), 2))) == 6


@pytest.mark.parametrize("n", [2, 3])
def test_bruhat_partial_order(n):
    els = all_elements(n)
    leq = {(u, v): bruhat_leq(u, v) for u, v in product(els, els)}
    for u in els:
        assert leq[u, u]
    for u, v in product(els, els):
        if u != v and leq[u, v]:
            assert not leq[v, u]
    for u, v, x in product(els, els, els):
        if leq[u, v] and leq[v, x]:
            assert leq[u, x]


def test_bruhat_independent_of_word():
    for w in all_elements(2):
        sets = {lower_interval(w, word) for word in all_reduced_words(w)}
        assert len(sets) == 1


def test_color_word():
    assert color_word(identity(2)) == (-1, -2)
    assert color_word(longest_element(2)) == (1, 2)
    assert color_word(s(2)) == (-1, 2)


def test_parse_and_text():
    w = from_word((1, 2), 2)
    assert parse_weyl("s1 s2", 2) == w
    assert parse_weyl(window_text(w), 2) == w
    assert parse_weyl(word_text(w), 2) == w
    assert parse_weyl("1", 2) == identity(2)
    assert parse_weyl("w0", 3) == longest_element(3)
    assert word_text(identity(2)) == "1"
    with pytest.raises(ValueError):
        parse_weyl("t1", 2)
    with pytest.raises(ValueError):
        parse_weyl("[1, 2, 3]", 2)
