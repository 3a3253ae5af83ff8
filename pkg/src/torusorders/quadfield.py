"""Exact arithmetic in a real quadratic field Q(sqrt D).

Every order comparison in the package reduces to the sign of a number
``p + q*sqrt(D)`` with integer p, q, which is decided with integer
comparisons only.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt


class FieldMismatchError(ValueError):
    pass


class MonodromyError(ValueError):
    """The matrix does not give an untwisted hyperbolic bundle."""


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def sign_parts(p: int, q: int, D: int) -> int:
    """Sign of p + q*sqrt(D) for integers p, q and D > 0 non-square."""
    if q == 0:
        return (p > 0) - (p < 0)
    if p == 0:
        return 1 if q > 0 else -1
    if p > 0 and q > 0:
        return 1
    if p < 0 and q < 0:
        return -1
    # mixed signs: compare p^2 with q^2 D
    diff = p * p - q * q * D
    return (1 if diff > 0 else -1) if p > 0 else (1 if diff < 0 else -1)


class QuadNum:
    """The value (p + q*sqrt(D)) / r, normalized so r > 0 and gcd(p, q, r) = 1."""

    __slots__ = ("p", "q", "r", "D")

    def __init__(self, p: int, q: int = 0, r: int = 1, D: int = 5):
        if r == 0:
            raise ZeroDivisionError("zero denominator")
        if D <= 0 or is_square(D):
            raise ValueError(f"D = {D} must be a positive non-square")
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(p, q), r)
        self.p, self.q, self.r, self.D = p // g, q // g, r // g, D

    @classmethod
    def sqrt(cls, D: int) -> "QuadNum":
        return cls(0, 1, 1, D)

    def _coerce(self, other) -> "QuadNum":
        if isinstance(other, QuadNum):
            if other.D != self.D:
                raise FieldMismatchError(f"Q(sqrt {self.D}) vs Q(sqrt {other.D})")
            return other
        if isinstance(other, int):
            return QuadNum(other, 0, 1, self.D)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadNum(self.p * o.r + o.p * self.r, self.q * o.r + o.q * self.r,
                       self.r * o.r, self.D)

    __radd__ = __add__

    def __neg__(self) -> "QuadNum":
        return QuadNum(-self.p, -self.q, self.r, self.D)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        D = self.D
        return QuadNum(self.p * o.p + self.q * o.q * D, self.p * o.q + self.q * o.p,
                       self.r * o.r, D)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadNum":
        return QuadNum(self.p, -self.q, self.r, self.D)

    def norm_numerator(self) -> int:
        return self.p * self.p - self.q * self.q * self.D

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = o.norm_numerator()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        # 1/o = r (p - q sqrt D) / (p^2 - q^2 D)
        inv = QuadNum(o.r * o.p, -o.r * o.q, n, self.D)
        return self * inv

    def __rtruediv__(self, other):
        return QuadNum(other, 0, 1, self.D) / self

    def sign(self) -> int:
        return sign_parts(self.p, self.q, self.D)

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.q == 0 and self.r == 1 and self.p == other
        if isinstance(other, QuadNum):
            return (self.p, self.q, self.r, self.D) == (other.p, other.q, other.r, other.D)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.p, self.q, self.r, self.D))

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __gt__(self, other) -> bool:
        return (self - other).sign() > 0

    def __le__(self, other) -> bool:
        return (self - other).sign() <= 0

    def __ge__(self, other) -> bool:
        return (self - other).sign() >= 0

    def __float__(self) -> float:
        return (self.p + self.q * self.D ** 0.5) / self.r

    def __str__(self) -> str:
        op = "+" if self.q >= 0 else "-"
        return f"({self.p} {op} {abs(self.q)}*sqrt({self.D}))/{self.r}"

    def __repr__(self) -> str:
        return f"QuadNum({self.p}, {self.q}, {self.r}, D={self.D})"

    def scaled_parts(self, scale: int) -> tuple[int, int]:
        """(P, Q) with P + Q sqrt D = scale * self; `scale` must be a multiple of r."""
        if scale % self.r:
            raise ValueError("scale must be a multiple of the denominator")
        k = scale // self.r
        return self.p * k, self.q * k


def qn_arith(op: str, x: QuadNum, y: QuadNum) -> QuadNum:
    ops = {"add": QuadNum.__add__, "sub": QuadNum.__sub__,
           "mul": QuadNum.__mul__, "div": QuadNum.__truediv__}
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    if isinstance(y, QuadNum) and x.D != y.D:
        raise FieldMismatchError(f"Q(sqrt {x.D}) vs Q(sqrt {y.D})")
    return ops[op](x, y)


def qn_sign(x: QuadNum) -> int:
    return x.sign()


Matrix = tuple[tuple[int, int], tuple[int, int]]

CHOICES = ("+lambda", "-lambda", "+mu", "-mu")


@dataclass(frozen=True)
class EigenData:
    """Eigen-structure of a hyperbolic matrix in SL(2, Z) with trace > 2.

    ``change_of_basis`` is the inverse of the matrix whose columns are
    ``e_lambda`` and ``e_mu``; its rows are the coordinate functionals that
    read off the e_lambda- and e_mu-components of an integer vector.
    """

    matrix: Matrix
    D: int
    lam: QuadNum
    mu: QuadNum
    e_lambda: tuple[QuadNum, QuadNum]
    e_mu: tuple[QuadNum, QuadNum]
    change_of_basis: tuple[tuple[QuadNum, QuadNum], tuple[QuadNum, QuadNum]]

    def coordinate(self, choice: str, v: tuple[int, int]) -> QuadNum:
        """Signed eigen-coordinate of v selected by one of CHOICES."""
        row = self.change_of_basis[0 if choice.endswith("lambda") else 1]
        value = row[0] * v[0] + row[1] * v[1]
        return -value if choice.startswith("-") else value

    def functional(self, choice: str) -> tuple[tuple[int, int], tuple[int, int]]:
        """A positive multiple of `coordinate(choice, .)` with entries in Z[sqrt D].

        Returned as ((P1, Q1), (P2, Q2)): v maps to v0 (P1 + Q1 s) + v1 (P2 + Q2 s).
        """
        if choice not in CHOICES:
            raise ValueError(f"eigen choice must be one of {CHOICES}, got {choice!r}")
        row = self.change_of_basis[0 if choice.endswith("lambda") else 1]
        scale = row[0].r * row[1].r // gcd(row[0].r, row[1].r)
        f1, f2 = row[0].scaled_parts(scale), row[1].scaled_parts(scale)
        if choice.startswith("-"):
            f1, f2 = (-f1[0], -f1[1]), (-f2[0], -f2[1])
        return f1, f2


def _eigenvector(A: Matrix, ev: QuadNum) -> tuple[QuadNum, QuadNum]:
    (a, b), (c, d) = A
    D = ev.D
    one = QuadNum(1, 0, 1, D)
    if b != 0:
        # first row: (a - ev) v0 + b v1 = 0
        return one, (ev - a) / b
    # second row: c v0 + (d - ev) v1 = 0; unreachable for hyperbolic A
    if c == 0:
        raise MonodromyError("diagonal matrix has no irrational eigenvector")
    return (ev - d) / c, one


def eigen_data(A) -> EigenData:
    (a, b), (c, d) = A
    A = ((int(a), int(b)), (int(c), int(d)))
    det = a * d - b * c
    t = a + d
    if det != 1:
        raise MonodromyError(f"determinant {det} != 1")
    if abs(t) <= 2:
        raise MonodromyError(f"trace {t}: not hyperbolic")
    if t < -2:
        raise MonodromyError(f"trace {t}: negative eigenvalues (twisted bundle)")
    D = t * t - 4
    lam = QuadNum(t, 1, 2, D)
    mu = QuadNum(t, -1, 2, D)
    e_l = _eigenvector(A, lam)
    e_m = _eigenvector(A, mu)
    det_e = e_l[0] * e_m[1] - e_m[0] * e_l[1]
    inv = ((e_m[1] / det_e, -e_m[0] / det_e), (-e_l[1] / det_e, e_l[0] / det_e))
    return EigenData(A, D, lam, mu, e_l, e_m, inv)
