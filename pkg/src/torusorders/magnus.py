"""Truncated Magnus expansion of F(a, b) into Z<<x, y>>.

a maps to 1 + x and b to 1 + y.  The lowest nonzero degree of
``expand(w) - 1`` is the lower-central-series depth of w, and the
homogeneous part in that degree represents the class of w in
G_n / G_{n+1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Union

from .words import Word

Poly = Dict[str, int]

DEFAULT_CAP = 8
_VAR = {1: "x", 2: "y"}


class MagnusCapExceeded(RuntimeError):
    """No nonzero term up to the truncation degree; the depth is at least `at_least`."""

    def __init__(self, at_least: int, word: Word | None = None):
        super().__init__(f"Magnus depth is at least {at_least}; raise the cap to resolve")
        self.at_least = at_least
        self.word = word


@dataclass(frozen=True)
class AtLeast:
    n: int

    def __ge__(self, other: int) -> bool:
        return self.n >= other

    def __str__(self) -> str:
        return f">={self.n}"


INFINITE = float("inf")


def _binom(k: int, j: int) -> int:
    # generalized binomial coefficient, valid for negative k
    num = 1
    for i in range(j):
        num *= k - i
    den = 1
    for i in range(2, j + 1):
        den *= i
    return num // den


@lru_cache(maxsize=4096)
def _factors(k: int, cap: int) -> tuple[int, ...]:
    return tuple(_binom(k, j) for j in range(cap + 1))


def monomial_key(m: str) -> tuple[int, str]:
    return len(m), m


class MagnusSeries:
    """Noncommutative series truncated above degree `cap`; zero coefficients are dropped."""

    __slots__ = ("cap", "coeffs")

    def __init__(self, cap: int, coeffs: Poly):
        self.cap = cap
        self.coeffs = {m: c for m, c in coeffs.items() if c and len(m) <= cap}

    @classmethod
    def one(cls, cap: int) -> "MagnusSeries":
        return cls(cap, {"": 1})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MagnusSeries):
            return NotImplemented
        return self.cap == other.cap and self.coeffs == other.coeffs

    def __mul__(self, other: "MagnusSeries") -> "MagnusSeries":
        cap = min(self.cap, other.cap)
        out: Poly = {}
        for m1, c1 in self.coeffs.items():
            room = cap - len(m1)
            if room < 0:
                continue
            for m2, c2 in other.coeffs.items():
                if len(m2) <= room:
                    m = m1 + m2
                    out[m] = out.get(m, 0) + c1 * c2
        return MagnusSeries(cap, out)

    def homogeneous(self, n: int) -> Poly:
        return {m: c for m, c in self.coeffs.items() if len(m) == n}

    def lowest_degree(self) -> int | None:
        """Least positive degree carrying a nonzero coefficient, if any."""
        degrees = [len(m) for m in self.coeffs if m]
        return min(degrees) if degrees else None

    def dump(self) -> str:
        lines = []
        for m in sorted(self.coeffs, key=monomial_key):
            lines.append(f"{m or '1'} {self.coeffs[m]}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"MagnusSeries(cap={self.cap}, {self.coeffs})"


def _expand_graded(w: Word, cap: int) -> list[dict[int, int]]:
    """Expansion graded by degree; monomials are bit strings with y = 1,
    first variable most significant."""
    series: list[dict[int, int]] = [{} for _ in range(cap + 1)]
    series[0][0] = 1
    for g, k in w.syllables():
        factor = _factors(k, cap)
        fill = g == 2
        # highest degree first, so every source is read before it is updated
        for n in range(cap - 1, -1, -1):
            src = series[n]
            if not src:
                continue
            for j in range(1, cap - n + 1):
                f = factor[j]
                if not f:
                    continue
                dst = series[n + j]
                pat = (1 << j) - 1 if fill else 0
                for code, c in src.items():
                    key = (code << j) | pat
                    dst[key] = dst.get(key, 0) + c * f
        for n in range(1, cap + 1):
            if series[n]:
                series[n] = {m: c for m, c in series[n].items() if c}
    return series


def _decode(code: int, n: int) -> str:
    return "".join("y" if (code >> (n - 1 - i)) & 1 else "x" for i in range(n))


def expand(w: Word, cap: int = DEFAULT_CAP) -> MagnusSeries:
    """Magnus expansion of w truncated above degree `cap`.

    Runs g^k are multiplied in at once as sum_j binom(k, j) v^j.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    coeffs = {_decode(code, n): c
              for n, part in enumerate(_expand_graded(w, cap)) for code, c in part.items()}
    return MagnusSeries(cap, coeffs)


Expander = Callable[[Word, int], MagnusSeries]


def _leading(w: Word, cap: int, expand_fn: Expander) -> tuple[int, Poly] | None:
    """(n, [w]_n) for the least degree n <= cap, found by iterative deepening."""
    fast = expand_fn is expand
    if fast:
        # the degree-one part of the expansion is the exponent sum
        m, n = w.exponent_sum()
        if m or n:
            return 1, {k: c for k, c in (("x", m), ("y", n)) if c}
        d = min(2, cap)
    else:
        d = 1
    low = 1
    while True:
        if fast:
            graded = _expand_graded(w, d)
            for n in range(low, d + 1):
                if graded[n]:
                    return n, {_decode(code, n): c for code, c in graded[n].items()}
        else:
            s = expand_fn(w, d)
            for n in range(low, d + 1):
                part = s.homogeneous(n)
                if part:
                    return n, part
        if d >= cap:
            return None
        low = d + 1
        d += 1


def depth(w: Word, cap: int = DEFAULT_CAP, expand_fn: Expander = expand) -> Union[int, AtLeast, float]:
    """n(w), AtLeast(cap + 1) if nothing shows up to `cap`, INFINITE for the identity."""
    if w.is_identity():
        return INFINITE
    found = _leading(w, cap, expand_fn)
    return AtLeast(cap + 1) if found is None else found[0]


def leading_part(w: Word, cap: int = DEFAULT_CAP, expand_fn: Expander = expand) -> Poly:
    """Homogeneous component of expand(w) - 1 of degree n(w)."""
    if w.is_identity():
        raise ValueError("the identity has no leading part")
    found = _leading(w, cap, expand_fn)
    if found is None:
        raise MagnusCapExceeded(cap + 1, w)
    return found[1]


def in_lcs(w: Word, n: int, cap: int | None = None) -> bool:
    """Membership w in G_n."""
    if cap is None:
        cap = max(n, DEFAULT_CAP)
    if cap < n:
        raise ValueError("cap must be at least n")
    d = depth(w, cap)
    if isinstance(d, AtLeast):
        return True
    return d >= n


def degree(poly: Poly) -> int:
    return len(next(iter(poly)))


def format_poly(poly: Poly) -> str:
    terms = []
    for m in sorted(poly, key=monomial_key):
        c = poly[m]
        terms.append(f"{c:+d}{'*' + m if m else ''}")
    return " ".join(terms) if terms else "0"
