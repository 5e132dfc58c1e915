import pytest
from hypothesis import given, strategies as st

from leveler.braid_core import (IDENTITY, BraidWord, WordSyntaxError, concat, format_word,
                                free_reduce, invert, parity, parse_word)

syllables = st.lists(st.tuples(st.sampled_from("mls"), st.integers(-3, 3)), max_size=12)


def test_parse_examples():
    assert parse_word("m s^2 l").syllables == (("m", 1), ("s", 2), ("l", 1))
    assert parse_word("m m^-1") == IDENTITY
    assert parse_word("l^2 l^3 s").syllables == (("l", 5), ("s", 1))
    assert parse_word("m^0 l") == parse_word("l")
    assert parse_word("1") == IDENTITY


@pytest.mark.parametrize("bad", ["x", "m^", "m^a", "m^2.5", "mm^"])
def test_parse_errors(bad):
    with pytest.raises(WordSyntaxError):
        parse_word(bad)


def test_format():
    assert format_word(parse_word("m s^2 l^-1")) == "m s^2 l^-1"
    assert format_word(IDENTITY) == "1"


def test_group_operations():
    assert concat(parse_word("m s^2"), parse_word("s^-2 m^-1")) == IDENTITY
    assert invert(parse_word("m s^2 l")) == parse_word("l^-1 s^-2 m^-1")
    assert free_reduce([("m", 1), ("m", 4), ("l", 0), ("s", 1)]) == parse_word("m^5 s")


def test_parity_examples():
    assert tuple(parity(parse_word("m s m s"))) == (0, 0, 0)
    assert tuple(parity(parse_word("m"))) == (1, 0, 0)
    assert tuple(parity(parse_word("l^-1 m l m^-1 s^-2"))) == (0, 0, 0)


@given(syllables)
def test_free_reduce_idempotent(raw):
    w = free_reduce(raw)
    assert free_reduce(list(w.syllables)) == w
    assert all(a[0] != b[0] for a, b in zip(w.syllables, w.syllables[1:]))
    assert all(e != 0 for _, e in w.syllables)


@given(syllables)
def test_format_parse_round_trip(raw):
    w = free_reduce(raw)
    assert parse_word(format_word(w)) == w
    assert BraidWord.from_letters(w.letters) == w
    assert len(w) == sum(abs(e) for _, e in w.syllables)


@given(syllables, syllables, syllables)
def test_concat_associative_and_invert_anti(a, b, c):
    u, v, w = free_reduce(a), free_reduce(b), free_reduce(c)
    assert concat(concat(u, v), w) == concat(u, concat(v, w))
    assert invert(concat(u, v)) == concat(invert(v), invert(u))
    assert concat(u, invert(u)) == IDENTITY


@given(syllables, syllables)
def test_parity_homomorphism(a, b):
    u, v = free_reduce(a), free_reduce(b)
    assert parity(concat(u, v)) == parity(u) + parity(v)
