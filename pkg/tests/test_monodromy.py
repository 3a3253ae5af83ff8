import pytest
from hypothesis import given, strategies as st

from conftest import short_words, words
from torusorders.monodromy import (BundleElement, Endo, Monodromy, abelianized_matrix,
                                   apply_endo, classify, inner, inverse_twists, mat_mul,
                                   twists_to_endo)
from torusorders.quadfield import MonodromyError
from torusorders.words import Word, commutator, parse_word, render

GAMMA0 = parse_word("abAB")
twist_words = st.text("xyXY", max_size=6)
FIG8 = Monodromy("xy")


def test_figure_eight_images():
    e = twists_to_endo("xy")
    assert (render(e.image_a), render(e.image_b)) == ("aba", "ba")
    assert render(apply_endo(e, parse_word("a"))) == "aba"
    assert render(apply_endo(e, parse_word("aB"))) == "a"


def test_generators_and_identity():
    assert twists_to_endo("") == Endo.identity()
    x = twists_to_endo("x")
    assert (render(x.image_a), render(x.image_b)) == ("ab", "b")
    assert apply_endo(x, Word()).is_identity()


def test_matrices():
    assert abelianized_matrix(twists_to_endo("xy")) == ((2, 1), (1, 1))
    assert abelianized_matrix(Endo.identity()) == ((1, 0), (0, 1))
    assert abelianized_matrix(twists_to_endo("x")) == ((1, 0), (1, 1))


def test_classify():
    assert classify(((2, 1), (1, 1))) == (True, True)
    assert classify(((1, 1), (0, 1))).hyperbolic is False
    assert classify(((-2, -1), (-1, -1))) == (True, False)
    with pytest.raises(MonodromyError):
        classify(((2, 0), (0, 1)))


def test_require_accepted():
    assert FIG8.accepted
    with pytest.raises(MonodromyError, match="not hyperbolic"):
        Monodromy("x").require_accepted()
    with pytest.raises(ValueError):
        Monodromy("xz")


def test_bundle_law_example():
    grp = FIG8.group
    p = grp.mul(BundleElement(parse_word("a"), 1), BundleElement(parse_word("b"), -1))
    assert p == BundleElement(parse_word("aba"), 0)


@given(twist_words)
def test_twists_fix_gamma0(tw):
    assert twists_to_endo(tw)(GAMMA0) == GAMMA0


@given(twist_words, words)
def test_inverse_twists(tw, w):
    e, ei = twists_to_endo(tw), twists_to_endo(inverse_twists(tw))
    assert ei(e(w)) == w
    assert e(ei(w)) == w


@given(twist_words, twist_words)
def test_matrix_is_contravariant_in_application_order(t1, t2):
    lhs = abelianized_matrix(twists_to_endo(t1 + t2))
    rhs = mat_mul(abelianized_matrix(twists_to_endo(t2)), abelianized_matrix(twists_to_endo(t1)))
    assert lhs == rhs


@given(twist_words, words, words)
def test_endo_is_homomorphism(tw, u, v):
    e = twists_to_endo(tw)
    assert e(u * v) == e(u) * e(v)


@given(short_words, words)
def test_inner(x, w):
    assert inner(x)(w) == x * w * ~x


def element(data):
    return BundleElement(data[0], data[1])


bundle = st.tuples(short_words, st.integers(-2, 2)).map(element)


@given(bundle, bundle, bundle)
def test_bundle_group_axioms(p, q, r):
    grp = FIG8.group
    assert grp.mul(grp.mul(p, q), r) == grp.mul(p, grp.mul(q, r))
    assert grp.mul(p, grp.inv(p)) == grp.identity
    assert grp.mul(grp.inv(p), p) == grp.identity


@given(short_words)
def test_tau_conjugation_is_monodromy(w):
    grp = FIG8.group
    tau = BundleElement(Word(), 1)
    assert grp.conj(tau, BundleElement(w, 0)) == BundleElement(FIG8(w), 0)


def test_power():
    w = commutator(parse_word("a"), parse_word("bb"))
    assert FIG8.power(2, w) == FIG8(FIG8(w))
    assert FIG8.power(-1, FIG8(w)) == w
