"""Lyndon words, shuffles, and the generator rewrite."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfchar.words import (all_words, chen_fox_lyndon, deconcatenations,
                            is_lyndon, lyndon_rewrite_word, lyndon_words,
                            shuffle_many, shuffle_words)
from oracles import brute_shuffle, necklace_lyndon_count

words_ab = st.lists(st.sampled_from("ab"), min_size=0, max_size=6).map(tuple)


def test_is_lyndon_examples():
    assert is_lyndon(("a",))
    assert is_lyndon(("a", "b"))
    assert is_lyndon(("a", "a", "b"))
    assert not is_lyndon(("b", "a"))
    assert not is_lyndon(("a", "a"))
    assert not is_lyndon(("a", "b", "a", "b"))
    assert not is_lyndon(())


def test_lyndon_counts_match_necklace_oracle():
    for alphabet in ("ab", "abc"):
        per_len = {}
        for w in lyndon_words(alphabet, 8):
            per_len[len(w)] = per_len.get(len(w), 0) + 1
        for n in range(1, 9):
            assert per_len.get(n, 0) == necklace_lyndon_count(len(alphabet), n), (
                alphabet, n)


def test_chen_fox_lyndon_factorization():
    assert chen_fox_lyndon(("b", "a", "b")) == [("b",), ("a", "b")]
    assert chen_fox_lyndon(("a", "b", "a", "b")) == [("a", "b"), ("a", "b")]
    assert chen_fox_lyndon(("b", "a", "a", "b")) == [("b",), ("a", "a", "b")]
    assert chen_fox_lyndon(("a", "a", "b", "a", "b")) == [("a", "a", "b", "a", "b")]


@given(words_ab)
def test_cfl_round_trip_and_ordering(w):
    factors = chen_fox_lyndon(w)
    assert sum(factors, ()) == w
    assert all(is_lyndon(f) for f in factors)
    assert all(factors[i] >= factors[i + 1] for i in range(len(factors) - 1))


def test_shuffle_examples():
    assert shuffle_words(("a",), ("b",)) == {("a", "b"): 1, ("b", "a"): 1}
    got = shuffle_words(("a", "b"), ("a", "b"))
    assert got == {("a", "b", "a", "b"): 2, ("a", "a", "b", "b"): 4}


@given(st.lists(st.sampled_from("ab"), max_size=4).map(tuple),
       st.lists(st.sampled_from("ab"), max_size=4).map(tuple))
def test_shuffle_matches_interleaving_oracle(u, v):
    assert shuffle_words(u, v) == brute_shuffle(u, v)


@given(st.lists(st.sampled_from("ab"), max_size=3).map(tuple),
       st.lists(st.sampled_from("ab"), max_size=3).map(tuple))
def test_shuffle_is_commutative(u, v):
    assert shuffle_words(u, v) == shuffle_words(v, u)


def test_shuffle_many_is_order_independent():
    ws = [("a",), ("b",), ("a", "b")]
    assert shuffle_many(ws) == shuffle_many(list(reversed(ws)))


def test_deconcatenations():
    assert deconcatenations(("a", "b")) == [((), ("a", "b")),
                                            (("a",), ("b",)),
                                            (("a", "b"), ())]


def test_rewrite_of_lyndon_word_is_itself():
    for w in lyndon_words("ab", 5):
        assert lyndon_rewrite_word(w) == (((w,), Fraction(1)),)


def test_rewrite_example():
    got = dict(lyndon_rewrite_word(("b", "a")))
    assert got == {(("a",), ("b",)): Fraction(1), (("a", "b"),): Fraction(-1)}


def _expand(combo):
    """Multiset of Lyndon words -> word expansion through shuffle products."""
    return shuffle_many(list(combo))


def test_rewrite_round_trips_for_short_words():
    for alphabet, maxlen in (("ab", 5), ("abc", 4)):
        for n in range(1, maxlen + 1):
            for w in all_words(alphabet, n):
                acc: dict = {}
                for combo, coeff in lyndon_rewrite_word(w):
                    for word, mult in _expand(combo).items():
                        acc[word] = acc.get(word, 0) + coeff * mult
                acc = {k: v for k, v in acc.items() if v}
                assert acc == {w: 1}, (w, acc)


def test_all_words_count():
    assert len(list(all_words("ab", 5))) == 32
    assert len(list(all_words("abc", 3))) == 27


def test_lyndon_words_rejects_repeated_letters():
    with pytest.raises(ValueError):
        lyndon_words("aab", 3)
