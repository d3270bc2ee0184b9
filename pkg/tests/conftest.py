import random

import pytest
from hypothesis import strategies as st

from linkmu.fixtures import get_fixture
from linkmu.words import Word

letters = st.lists(
    st.tuples(st.integers(0, 3), st.sampled_from([-2, -1, 1, 2])), max_size=20
)
words = letters.map(Word.from_letters)


def random_word(rng: random.Random, max_letters=50, gens=(1, 2, 3, 4)):
    """A mix of free-group elements: plain random words, commutators and cancelling products."""
    kind = rng.random()
    if kind < 0.4:
        n = rng.randint(0, max_letters)
        return Word.from_letters((rng.choice(gens), rng.choice([-1, 1])) for _ in range(n))
    if kind < 0.7:
        # [u, v] and [[u, v], x]: exponent sums vanish, so degree-1 terms do too
        half = max_letters // 4
        u = random_word_plain(rng, rng.randint(1, half), gens)
        v = random_word_plain(rng, rng.randint(1, half), gens)
        w = u * v * ~u * ~v
        if rng.random() < 0.5 and w.letter_length <= max_letters // 2:
            x = Word.generator(rng.choice(gens))
            w = w * x * ~w * ~x
        return w
    # u u^-1 as raw letters, sometimes with one sign flipped so it no longer cancels
    u_letters = [(rng.choice(gens), rng.choice([-1, 1])) for _ in range(rng.randint(0, max_letters // 2))]
    inv = [(i, -e) for i, e in reversed(u_letters)]
    if rng.random() < 0.5 and inv:
        j = rng.randrange(len(inv))
        inv[j] = (inv[j][0], -inv[j][1])
    return Word.from_letters(u_letters + inv)


def random_word_plain(rng, n, gens=(1, 2, 3, 4)):
    return Word.from_letters((rng.choice(gens), rng.choice([-1, 1])) for _ in range(n))


def random_reduced_word(rng, syllables, gens=(1, 2, 3, 4), exps=(-3, -2, -1, 1, 2, 3)):
    out, prev = [], None
    for _ in range(syllables):
        i = rng.choice([g for g in gens if g != prev])
        out.append((i, rng.choice(exps)))
        prev = i
    return Word(tuple(out))


@pytest.fixture
def hopf():
    return get_fixture("hopf").presentation


@pytest.fixture
def borromean():
    return get_fixture("borromean").presentation


@pytest.fixture
def whitehead():
    return get_fixture("whitehead").presentation
