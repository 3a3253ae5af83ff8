"""Bundle monodromies built from Dehn-twist words, and the group G x| Z.

Twist words are strings over ``x y X Y``.  ``x`` is a -> ab, b -> b and ``y``
is a -> a, b -> ba; capitals are the inverse twists.  A word is read left to
right as the order of application, so ``"xy"`` applies x first and then y,
which gives the figure-eight monodromy a -> aba, b -> ba.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .quadfield import Matrix, MonodromyError
from .words import Word, invert, parse_word

__all__ = [
    "Endo", "Monodromy", "BundleElement", "BundleGroup", "Classification",
    "twists_to_endo", "apply_endo", "abelianized_matrix", "classify",
    "bundle_mul", "bundle_inv", "inner", "MonodromyError",
]


@dataclass(frozen=True)
class Endo:
    """Endomorphism of F(a, b) given by the images of a and b."""

    image_a: Word
    image_b: Word

    @classmethod
    def identity(cls) -> "Endo":
        return cls(Word.from_string("a"), Word.from_string("b"))

    def __call__(self, w: Word) -> Word:
        return apply_endo(self, w)

    def then(self, other: "Endo") -> "Endo":
        """Apply self first, then other."""
        return Endo(other(self.image_a), other(self.image_b))

    def __str__(self) -> str:
        return f"a -> {self.image_a or '1'}, b -> {self.image_b or '1'}"


def apply_endo(e: Endo, w: Word) -> Word:
    images = {
        1: e.image_a.letters,
        -1: invert(e.image_a).letters,
        2: e.image_b.letters,
        -2: invert(e.image_b).letters,
    }
    stack: list[int] = []
    for letter in w.letters:
        for x in images[letter]:
            if stack and stack[-1] == -x:
                stack.pop()
            else:
                stack.append(x)
    return Word._trusted(tuple(stack))


_TWISTS = {
    "x": Endo(Word.from_string("ab"), Word.from_string("b")),
    "X": Endo(Word.from_string("aB"), Word.from_string("b")),
    "y": Endo(Word.from_string("a"), Word.from_string("ba")),
    "Y": Endo(Word.from_string("a"), Word.from_string("bA")),
}


def _check_twists(tw: str) -> str:
    bad = [c for c in tw if c not in _TWISTS]
    if bad:
        raise ValueError(f"twist word may only use x, y, X, Y; got {bad[0]!r}")
    return tw


def twists_to_endo(tw: str) -> Endo:
    e = Endo.identity()
    for c in _check_twists(tw):
        e = e.then(_TWISTS[c])
    return e


def inverse_twists(tw: str) -> str:
    return _check_twists(tw)[::-1].swapcase()


def inner(x: Word) -> Endo:
    """Inner automorphism w -> x w x^-1."""
    xi = invert(x)
    return Endo(x * Word.from_string("a") * xi, x * Word.from_string("b") * xi)


def abelianized_matrix(e: Endo) -> Matrix:
    """Action on H1 = Z^2; column j is the exponent sum of the j-th image."""
    (a1, a2), (b1, b2) = e.image_a.exponent_sum(), e.image_b.exponent_sum()
    return ((a1, b1), (a2, b2))


def mat_mul(P: Matrix, Q: Matrix) -> Matrix:
    return tuple(
        tuple(sum(P[i][k] * Q[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )


def mat_vec(A: Matrix, v: tuple[int, int]) -> tuple[int, int]:
    return (A[0][0] * v[0] + A[0][1] * v[1], A[1][0] * v[0] + A[1][1] * v[1])


class Classification(NamedTuple):
    hyperbolic: bool
    untwisted: bool


def classify(A: Matrix) -> Classification:
    """Hyperbolic iff |trace| > 2; untwisted iff the eigenvalues are real and positive."""
    (a, b), (c, d) = A
    if a * d - b * c != 1:
        raise MonodromyError(f"determinant {a * d - b * c} != 1")
    t = a + d
    return Classification(hyperbolic=abs(t) > 2, untwisted=t >= 2)


class Monodromy:
    """A monodromy h given by a twist word, with its inverse and action on H1."""

    def __init__(self, twists: str):
        self.twists = _check_twists(twists)
        self.endo = twists_to_endo(twists)
        self.inverse_endo = twists_to_endo(inverse_twists(twists))
        self.matrix = abelianized_matrix(self.endo)
        self.classification = classify(self.matrix)

    def __repr__(self) -> str:
        return f"Monodromy({self.twists!r})"

    @property
    def trace(self) -> int:
        return self.matrix[0][0] + self.matrix[1][1]

    @property
    def accepted(self) -> bool:
        return self.classification.hyperbolic and self.classification.untwisted

    def require_accepted(self) -> "Monodromy":
        if not self.accepted:
            kind = "not hyperbolic" if not self.classification.hyperbolic else "twisted"
            raise MonodromyError(
                f"monodromy {self.twists!r} has trace {self.trace}: {kind}; "
                "only untwisted hyperbolic bundles carry a bi-order"
            )
        return self

    def __call__(self, w: Word) -> Word:
        return apply_endo(self.endo, w)

    def inverse(self, w: Word) -> Word:
        return apply_endo(self.inverse_endo, w)

    def power(self, k: int, w: Word) -> Word:
        e = self.endo if k >= 0 else self.inverse_endo
        for _ in range(abs(k)):
            w = apply_endo(e, w)
        return w

    @cached_property
    def group(self) -> "BundleGroup":
        return BundleGroup(self)


@dataclass(frozen=True)
class BundleElement:
    """(g, k) stands for g * tau^k in pi_1(M) = G x| Z."""

    g: Word
    k: int = 0

    def __str__(self) -> str:
        return f"({self.g or '1'}, {self.k})"


class BundleGroup:
    """Semidirect product with law (g, k)(g', k') = (g h^k(g'), k + k')."""

    def __init__(self, h: Monodromy):
        self.h = h
        self.identity = BundleElement(Word.identity(), 0)

    def mul(self, p: BundleElement, q: BundleElement) -> BundleElement:
        return BundleElement(p.g * self.h.power(p.k, q.g), p.k + q.k)

    def inv(self, p: BundleElement) -> BundleElement:
        return BundleElement(self.h.power(-p.k, invert(p.g)), -p.k)

    def conj(self, q: BundleElement, p: BundleElement) -> BundleElement:
        """q p q^-1."""
        return self.mul(self.mul(q, p), self.inv(q))

    def element(self, g, k: int = 0) -> BundleElement:
        return BundleElement(parse_word(g) if isinstance(g, str) else g, k)


def bundle_mul(p: BundleElement, q: BundleElement, h: Monodromy) -> BundleElement:
    return h.group.mul(p, q)


def bundle_inv(p: BundleElement, h: Monodromy) -> BundleElement:
    return h.group.inv(p)
