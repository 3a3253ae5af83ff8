import pytest
from hypothesis import given, strategies as st

from conftest import short_words, words
from torusorders.magnus import (AtLeast, INFINITE, MagnusCapExceeded, MagnusSeries, depth,
                                expand, format_poly, in_lcs, leading_part)
from torusorders.words import Word, commutator, invert, parse_word

GAMMA0 = parse_word("abAB")
GAMMA1 = parse_word("bABa")


def letter_series(letter: int, cap: int) -> MagnusSeries:
    # a -> 1 + x and a^-1 -> 1 - x + x^2 - ..., built one letter at a time
    v = "x" if abs(letter) == 1 else "y"
    if letter > 0:
        return MagnusSeries(cap, {"": 1, v: 1})
    return MagnusSeries(cap, {v * j: (-1) ** j for j in range(cap + 1)})


def oracle_expand(w: Word, cap: int) -> MagnusSeries:
    out = MagnusSeries.one(cap)
    for letter in w.letters:
        out = out * letter_series(letter, cap)
    return out


def oracle_depth(w: Word, cap: int):
    s = oracle_expand(w, cap)
    degrees = [len(m) for m in s.coeffs if m]
    return min(degrees) if degrees else None


def test_examples():
    assert expand(parse_word("a"), 3).coeffs == {"": 1, "x": 1}
    assert expand(parse_word("A"), 2).coeffs == {"": 1, "x": -1, "xx": 1}
    s = expand(GAMMA0, 3)
    assert s.homogeneous(1) == {}
    assert s.homogeneous(2) == {"xy": 1, "yx": -1}
    assert depth(parse_word("a")) == 1
    assert depth(GAMMA0) == 2
    assert depth(commutator(GAMMA0, parse_word("a"))) == 3
    assert leading_part(GAMMA0) == {"xy": 1, "yx": -1}
    assert leading_part(parse_word("a^3")) == {"x": 3}


def test_g0_g1inv_depth_three():
    w = GAMMA0 * invert(GAMMA1)
    assert depth(w) == 3
    assert leading_part(w) == {"xxy": 1, "xyx": -2, "yxx": 1}
    assert in_lcs(w, 3)


def test_commutator_of_gammas_has_depth_five():
    # frozen from the letter-by-letter oracle
    w = commutator(GAMMA0, GAMMA1)
    assert oracle_depth(w, 6) == 5
    assert depth(w) == 5


def test_in_lcs_examples():
    assert in_lcs(GAMMA0, 2) and not in_lcs(GAMMA0, 3)
    assert in_lcs(Word(), 7)


def test_cap_handling():
    w = commutator(commutator(GAMMA0, parse_word("a")), parse_word("b"))
    assert depth(w, 3) == AtLeast(4)
    assert depth(w, 4) == 4
    with pytest.raises(MagnusCapExceeded) as info:
        leading_part(w, 3)
    assert info.value.at_least == 4
    assert depth(Word()) == INFINITE


def test_dump_and_format():
    s = expand(GAMMA0, 2)
    assert s.dump().splitlines() == ["1 1", "xy 1", "yx -1"]
    assert format_poly({"yx": -1, "xy": 1}) == "+1*xy -1*yx"


@given(words, st.integers(1, 6))
def test_expand_matches_oracle(w, cap):
    assert expand(w, cap) == oracle_expand(w, cap)


@given(st.integers(-40, 40), st.integers(1, 7))
def test_syllable_binomials(k, cap):
    w = parse_word(f"b^{k}")
    assert expand(w, cap) == oracle_expand(w, cap)


@given(words, words)
def test_multiplicative(u, v):
    assert expand(u * v, 6) == expand(u, 6) * expand(v, 6)


@given(words)
def test_depth_one_iff_nonzero_exponent_sum(w):
    if w:
        assert (depth(w) == 1) == (w.exponent_sum() != (0, 0))


@given(short_words, short_words, short_words)
def test_commutator_depth_superadditive(u, v, x):
    s, t = commutator(u, x), v
    if s and t:
        ds, dt = depth(s), depth(t)
        if isinstance(ds, int) and isinstance(dt, int) and ds + dt <= 8:
            assert depth(commutator(s, t)) >= ds + dt


@given(words)
def test_depth_matches_oracle(w):
    if w:
        d = depth(w, 6)
        o = oracle_depth(w, 6)
        assert d == (AtLeast(7) if o is None else o)
