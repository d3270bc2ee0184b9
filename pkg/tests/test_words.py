import pytest
from hypothesis import given, strategies as st

from linkmu.words import (
    Word,
    WordParseError,
    commutator,
    erase_generator,
    format_word,
    invert,
    is_trivial,
    multiply,
    parse_word,
)

from conftest import letters, words


def w(text):
    return parse_word(text)


@pytest.mark.parametrize("text, expected", [
    ("m1 m1^-1", ()),
    ("m1 m2 m2^-1 m1", ((1, 2),)),
    ("m2 m1^-1 m2^-1 m1", ((2, 1), (1, -1), (2, -1), (1, 1))),
    ("m0^3", ((0, 3),)),
    ("", ()),
    ("  m1   m1 ", ((1, 2),)),
])
def test_parse_word(text, expected):
    assert w(text).syllables == expected


@pytest.mark.parametrize("text, position", [
    ("m1 x2", 1),
    ("m1 m2^0", 1),
    ("m-1", 0),
    ("m1^", 0),
    ("m1 m2 m3^a", 2),
])
def test_parse_errors_report_position(text, position):
    with pytest.raises(WordParseError) as err:
        parse_word(text)
    assert err.value.position == position


def test_multiply_examples():
    assert multiply(w("m1"), w("m1^-1")) == Word()
    assert multiply(w("m1 m2"), w("m2^-1 m3")) == w("m1 m3")
    assert multiply(w("m1^2"), w("m1^3")) == w("m1^5")


def test_invert_examples():
    assert invert(w("m1 m2^-1")) == w("m2 m1^-1")
    assert invert(Word()) == Word()
    assert invert(w("m1^3")) == w("m1^-3")


def test_erase_generator_examples():
    assert erase_generator(w("m0 m1 m0^-1 m1^-1"), 0) == Word()
    assert erase_generator(w("m1 m2"), 0) == w("m1 m2")
    assert erase_generator(w("m2 m1^-1 m2^-1 m1"), 1) == Word()


def test_is_trivial_examples():
    assert is_trivial(w("m1 m2 m2^-1 m1^-1"))
    assert not is_trivial(w("m2 m1^-1 m2^-1 m1"))
    assert is_trivial(Word())


def test_word_rejects_unreduced_syllables():
    with pytest.raises(ValueError):
        Word(((1, 1), (1, 1)))
    with pytest.raises(ValueError):
        Word(((1, 0),))


def test_round_trip_text():
    u = w("m3^-2 m1 m0^4")
    assert parse_word(format_word(u)) == u
    assert str(Word()) == ""


def test_commutator():
    assert str(commutator(w("m1"), w("m2"))) == "m1 m2 m1^-1 m2^-1"


@given(words)
def test_inverse_cancels(u):
    assert multiply(u, invert(u)) == Word()
    assert multiply(invert(u), u) == Word()


@given(words, words, words)
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(words)
def test_identity(u):
    assert u * Word() == u == Word() * u


@given(letters, st.data())
def test_retokenization_is_confluent(raw, data):
    # unit-exponent tokens, merged tokens and chunked products all agree
    flat = " ".join(f"m{i}^{1 if e > 0 else -1}" for i, e in raw for _ in range(abs(e)))
    merged = " ".join(f"m{i}^{e}" for i, e in raw)
    assert parse_word(flat) == parse_word(merged)
    cut = data.draw(st.integers(0, len(raw)))
    left = Word.from_letters(raw[:cut])
    right = Word.from_letters(raw[cut:])
    assert left * right == Word.from_letters(raw)


@given(words)
def test_syllable_count_is_number_of_runs(u):
    runs = 0
    prev = None
    for i, _ in u.syllables:
        if i != prev:
            runs += 1
        prev = i
    assert len(u) == runs


@given(words, st.integers(0, 3))
def test_erase_is_idempotent(u, g):
    once = erase_generator(u, g)
    assert erase_generator(once, g) == once
    assert g not in once.generators()


@given(words, words, st.integers(0, 3))
def test_erase_is_a_homomorphism(u, v, g):
    assert erase_generator(u * v, g) == erase_generator(u, g) * erase_generator(v, g)
