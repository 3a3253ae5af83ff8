import random

import pytest
from hypothesis import given, strategies as st

from conftest import short_words
from torusorders.cover import (CellSum, NotInCommutatorSubgroup, cell_action, p2, p2_oracle,
                               path_of, shift, winding_total)
from torusorders.monodromy import Monodromy
from torusorders.verify.samplers import g2_word, g3_word, g22_word
from torusorders.words import Word, commutator, conjugate, invert, parse_word

GAMMA0 = parse_word("abAB")
GAMMA1 = parse_word("bABa")
FIG8 = Monodromy("xy")
seeds = st.integers(0, 10 ** 9)


def test_paths():
    assert path_of(GAMMA0).vertices == ((0, 0), (1, 0), (1, 1), (0, 1), (0, 0))
    assert path_of(parse_word("ab")).endpoint == (1, 1)
    assert path_of(Word()).vertices == ((0, 0),)


def test_p2_examples():
    assert p2(GAMMA0) == {(0, 0): 1}
    assert p2(GAMMA1) == {(-1, 0): 1}
    y = GAMMA0 * GAMMA0 * invert(GAMMA1)
    assert p2(y) == {(0, 0): 2, (-1, 0): -1}
    assert p2(parse_word("a abAB A")) == {(1, 0): 1}
    assert p2_oracle(Word()) == CellSum()
    with pytest.raises(NotInCommutatorSubgroup, match="NotInCommutatorSubgroup"):
        p2(parse_word("ab"))
    with pytest.raises(NotInCommutatorSubgroup):
        p2_oracle(parse_word("a"))


def test_shift_and_action_examples():
    assert shift(CellSum({(0, 0): 1}), (2, 3)) == {(2, 3): 1}
    assert shift(CellSum(), (4, 4)) == CellSum()
    assert shift(CellSum({(0, 0): 2, (-1, 0): -1}), (1, 0)) == {(1, 0): 2, (0, 0): -1}
    A = FIG8.matrix
    assert cell_action(A, CellSum({(1, 0): 1})) == {(2, 1): 1}
    assert cell_action(A, CellSum({(0, 0): 1})) == {(0, 0): 1}


def test_winding_examples():
    assert winding_total(p2(GAMMA0)) == 1
    assert winding_total(p2(GAMMA0 * invert(GAMMA1))) == 0
    assert winding_total(CellSum()) == 0


def test_cellsum_algebra():
    c = CellSum({(0, 0): 1, (1, 1): 0})
    assert len(c) == 1 and (1, 1) not in c
    assert c - c == CellSum()
    assert 3 * c == {(0, 0): 3}
    assert (c + CellSum({(2, 0): -1})).dump() == "0 0 1\n2 0 -1"


@given(seeds)
def test_p2_matches_oracle(seed):
    w = g2_word(random.Random(seed), 60)
    assert p2(w) == p2_oracle(w)


@given(seeds, short_words)
def test_shift_lemma(seed, x):
    w = g2_word(random.Random(seed), 30)
    assert p2(conjugate(x, w)) == shift(p2(w), x.exponent_sum())


@given(seeds)
def test_equivariance_and_homomorphism(seed):
    rng = random.Random(seed)
    u, v = g2_word(rng, 30), g2_word(rng, 30)
    assert p2(FIG8(u)) == cell_action(FIG8.matrix, p2(u))
    assert p2(u * v) == p2(u) + p2(v)
    assert p2(invert(u)) == -p2(u)


@given(seeds)
def test_deeper_subgroups(seed):
    rng = random.Random(seed)
    assert winding_total(p2(g3_word(rng, 40))) == 0
    assert p2(g22_word(rng, 40)) == CellSum()


def test_commutator_with_generator_is_difference_of_shifts():
    # [w, a] = w (a w^-1 a^-1): p2 = p2(w) - shift(p2(w), (1, 0))
    w = GAMMA0 * GAMMA0 * invert(GAMMA1)
    a = parse_word("a")
    assert p2(commutator(w, a)) == p2(w) - shift(p2(w), (1, 0))
