"""Freely reduced words in the rank-2 free group on a, b.

Letters are stored as signed integers: ``1`` is a, ``-1`` is a^-1, ``2`` is b
and ``-2`` is b^-1.  The printed form uses ``A`` and ``B`` for the inverses.
"""
from __future__ import annotations

import random
import sys
from typing import Iterable, Iterator, Sequence, Union

A, B = 1, 2
LETTERS = (1, -1, 2, -2)
_CHAR_TO_LETTER = {"a": 1, "A": -1, "b": 2, "B": -2}
_LETTER_TO_CHAR = {v: k for k, v in _CHAR_TO_LETTER.items()}
_SUCCESSORS = {x: tuple(y for y in LETTERS if y != -x) for x in LETTERS}


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


class Word:
    """An immutable freely reduced word.  Reduction happens on construction."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[int] = ()):
        letters = tuple(letters)
        for x in letters:
            if x not in _LETTER_TO_CHAR:
                raise ValueError(f"invalid letter {x!r}")
        self.letters = _reduce(letters)
        self._hash = None

    @classmethod
    def _trusted(cls, letters: tuple[int, ...]) -> "Word":
        # caller guarantees `letters` is already reduced
        w = cls.__new__(cls)
        w.letters = letters
        w._hash = None
        return w

    @classmethod
    def identity(cls) -> "Word":
        return _IDENTITY

    @classmethod
    def from_string(cls, s: str) -> "Word":
        """Build from a plain a/b/A/B string.  Use `parse_word` for the full grammar."""
        try:
            return cls(_CHAR_TO_LETTER[c] for c in s)
        except KeyError as exc:
            raise ValueError(f"invalid letter {exc.args[0]!r} in {s!r}") from None

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Word):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.letters)
        return self._hash

    def __str__(self) -> str:
        return "".join(_LETTER_TO_CHAR[x] for x in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return invert(self) ** (-n)
        result = _IDENTITY
        base = self
        while n:
            if n & 1:
                result = multiply(result, base)
            n >>= 1
            if n:
                base = multiply(base, base)
        return result

    def exponent_sum(self) -> tuple[int, int]:
        """The abelianization p1: G -> Z^2, as (#a, #b) with signs."""
        m = n = 0
        for x in self.letters:
            if x == 1:
                m += 1
            elif x == -1:
                m -= 1
            elif x == 2:
                n += 1
            else:
                n -= 1
        return m, n

    def syllables(self) -> list[tuple[int, int]]:
        """Maximal runs as (generator, exponent), generator in {1, 2}."""
        out: list[tuple[int, int]] = []
        for x in self.letters:
            g, e = abs(x), (1 if x > 0 else -1)
            if out and out[-1][0] == g:
                out[-1] = (g, out[-1][1] + e)
            else:
                out.append((g, e))
        return out


_IDENTITY = Word._trusted(())


def multiply(u: Word, v: Word) -> Word:
    """Freely reduced product u*v."""
    x, y = u.letters, v.letters
    i, j, k = len(x), 0, len(y)
    while i and j < k and x[i - 1] == -y[j]:
        i -= 1
        j += 1
    return Word._trusted(x[:i] + y[j:])


def product(words: Iterable[Word]) -> Word:
    stack: list[int] = []
    for w in words:
        for x in w.letters:
            if stack and stack[-1] == -x:
                stack.pop()
            else:
                stack.append(x)
    return Word._trusted(tuple(stack))


def invert(w: Word) -> Word:
    return Word._trusted(tuple(-x for x in reversed(w.letters)))


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u v u^-1 v^-1."""
    return product((u, v, invert(u), invert(v)))


def conjugate(x: Word, w: Word) -> Word:
    """x w x^-1."""
    return product((x, w, invert(x)))


def render(w: Word) -> str:
    """Canonical printer: only a/b/A/B, no sugar.  The identity prints as ''."""
    return str(w)


def _as_rng(rng_state: Union[int, random.Random, None]) -> random.Random:
    if isinstance(rng_state, random.Random):
        return rng_state
    return random.Random(rng_state)


def random_word(length: int, rng_state: Union[int, random.Random, None] = None) -> Word:
    """Uniform random reduced word of exactly `length` letters.

    The first letter is uniform over four choices and every later letter is
    uniform over the three that do not cancel its predecessor.
    """
    if length < 0:
        raise ValueError("length must be non-negative")
    rng = _as_rng(rng_state)
    if length == 0:
        return _IDENTITY
    letters = [LETTERS[rng.randrange(4)]]
    for _ in range(length - 1):
        letters.append(_SUCCESSORS[letters[-1]][rng.randrange(3)])
    return Word._trusted(tuple(letters))


def all_reduced_words(length: int) -> Iterator[Word]:
    """Enumerate every reduced word of the given length (4 * 3^(length-1) of them)."""
    def rec(prefix: list[int]) -> Iterator[Word]:
        if len(prefix) == length:
            yield Word._trusted(tuple(prefix))
            return
        for x in LETTERS:
            if not prefix or x != -prefix[-1]:
                prefix.append(x)
                yield from rec(prefix)
                prefix.pop()

    return rec([])


# ---------------------------------------------------------------------------
# parser

class WordSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def offset(self) -> int:
        return len(self.text[: self.pos].encode("utf-8"))

    def error(self, message: str) -> WordSyntaxError:
        return WordSyntaxError(message, self.offset())

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def word(self) -> Word:
        parts = []
        while self.peek() and self.peek() not in "),]":
            parts.append(self.term())
        return product(parts)

    def term(self) -> Word:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            negative = False
            if self.peek() == "-":
                negative = True
                self.pos += 1
            self.skip()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
                self.pos += 1
            if start == self.pos:
                raise self.error("expected digits after '^'")
            exp = int(self.text[start:self.pos])
            if exp > sys.maxsize:
                raise WordSyntaxError("exponent overflow", len(self.text[:start].encode("utf-8")))
            base = base ** (-exp if negative else exp)
        return base

    def atom(self) -> Word:
        ch = self.peek()
        if ch in _CHAR_TO_LETTER:
            self.pos += 1
            return Word._trusted((_CHAR_TO_LETTER[ch],))
        if ch == "(":
            self.pos += 1
            w = self.word()
            self.expect(")")
            return w
        if ch == "[":
            self.pos += 1
            u = self.word()
            self.expect(",")
            v = self.word()
            self.expect("]")
            return commutator(u, v)
        if not ch:
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected character {ch!r}")


def parse_word(text: str) -> Word:
    """Parse the word grammar: letters a b A B, parentheses, ``[u,v]`` and ``^n``."""
    p = _Parser(text)
    w = p.word()
    if p.peek():
        raise p.error(f"unexpected character {p.peek()!r}")
    return w


def as_word(w: Union[Word, str, Sequence[int]]) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return parse_word(w)
    return Word(w)
