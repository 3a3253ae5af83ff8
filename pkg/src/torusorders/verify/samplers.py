"""Seeded samplers for elements of G and of deeper subgroups.

Uniform reduced words almost never land in [G, G], so the suites also build
elements of G2, G3, G4 and [G2, G2] from closed paths and commutators.
Every sampler takes a `random.Random` and is deterministic given its state.
"""
from __future__ import annotations

import random

from ..words import Word, commutator, conjugate, parse_word, product, random_word

GAMMA0 = parse_word("abAB")
GAMMA1 = parse_word("bABa")


def rng_for(suite_id: str, seed: int, index: int) -> random.Random:
    """Independent stream per (suite, seed, sample index)."""
    return random.Random(f"{suite_id}:{seed}:{index}")


def word_upto(rng: random.Random, max_len: int, min_len: int = 0) -> Word:
    return random_word(rng.randint(min_len, max_len), rng)


def walk_to(rng: random.Random, target: tuple[int, int], noise: int = 3) -> Word:
    """A word with exponent sum `target`: a short random prefix, then the
    missing a- and b-steps in shuffled order."""
    r = word_upto(rng, noise)
    m, n = r.exponent_sum()
    dm, dn = target[0] - m, target[1] - n
    steps = [1 if dm > 0 else -1] * abs(dm) + [2 if dn > 0 else -2] * abs(dn)
    rng.shuffle(steps)
    return r * Word(steps)


def g2_word(rng: random.Random, max_len: int = 60) -> Word:
    """Nontrivial element of [G, G] of length at most max_len."""
    while True:
        style = rng.randrange(3)
        if style == 0:
            r = word_upto(rng, max(1, max_len // 2), 1)
            m, n = r.exponent_sum()
            w = r * walk_to(rng, (-m, -n), noise=0)
        elif style == 1:
            q = max(1, max_len // 4)
            w = commutator(word_upto(rng, q, 1), word_upto(rng, q, 1))
        else:
            parts = []
            for _ in range(rng.randint(1, 3)):
                x = word_upto(rng, max(1, max_len // 8))
                parts.append(conjugate(x, GAMMA0 if rng.random() < 0.5 else ~GAMMA0))
            w = product(parts)
        if w and len(w) <= max_len:
            return w


def g3_word(rng: random.Random, max_len: int = 40) -> Word:
    """Nontrivial element of G3 = [G2, G]."""
    while True:
        base = g2_word(rng, max(4, max_len // 3))
        x = word_upto(rng, 3, 1)
        w = commutator(base, x) if rng.random() < 0.5 else commutator(x, base)
        if rng.random() < 0.3:
            w = w * commutator(g2_word(rng, 8), word_upto(rng, 2, 1))
        if rng.random() < 0.5:
            w = conjugate(word_upto(rng, 3), w)
        if w and len(w) <= max_len:
            return w


def g4_word(rng: random.Random, max_len: int = 60) -> Word:
    while True:
        w = commutator(g3_word(rng, max(12, max_len // 3)), word_upto(rng, 2, 1))
        if rng.random() < 0.5:
            w = conjugate(word_upto(rng, 3), w)
        if w and len(w) <= max_len:
            return w


def g22_word(rng: random.Random, max_len: int = 60) -> Word:
    """Nontrivial element of [G2, G2]."""
    while True:
        q = max(4, max_len // 5)
        w = commutator(g2_word(rng, q), g2_word(rng, q))
        if rng.random() < 0.5:
            w = conjugate(word_upto(rng, 3), w)
        if w and len(w) <= max_len:
            return w


def element(rng: random.Random) -> Word:
    """Stratified sample reaching every level of the nonstandard cascade."""
    u = rng.random()
    if u < 0.4:
        return word_upto(rng, 12)
    if u < 0.7:
        return g2_word(rng, 24)
    if u < 0.85:
        return g3_word(rng, 30)
    return g22_word(rng, 40)
