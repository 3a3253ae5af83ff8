"""Bi-orders on the fibre group G = F(a, b) invariant under the monodromy.

Two kinds are provided.

``standard``
    Every lower-central-series term G_n is convex.  The class of g in
    G_n / G_{n+1} is read from its Magnus leading part, rewritten in the
    eigenbasis of the monodromy, and its sign is the sign of the
    lexicographically largest eigen-monomial with nonzero coefficient.

``nonstandard``
    A three-level cascade: the sign of an eigen-coordinate of the exponent
    sum; for g in [G, G] the sign of the coefficient at the largest cell of
    p2(g) under an eigen-coordinate order on Z^2; for g in [G2, G2] the
    standard order.  G_3 is not convex for this order.

Both extend to pi_1(M) by ordering the Z factor first.
"""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, fields, replace
from enum import Enum, IntEnum
from pathlib import Path
from typing import Mapping

from . import cover, magnus
from .cover import Cell, CellSum
from .magnus import MagnusCapExceeded, Poly
from .monodromy import BundleElement, Monodromy
from .quadfield import CHOICES, MonodromyError, QuadNum, eigen_data, sign_parts
from .words import Word, invert, multiply


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    def __str__(self) -> str:
        return self.name.capitalize()

    def __neg__(self) -> "Sign":
        return Sign(-int(self))


class Ordering(Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"

    def __str__(self) -> str:
        return self.value


class ConfigError(ValueError):
    pass


KINDS = ("standard", "nonstandard")
LEX = ("lambda", "mu")


@dataclass(frozen=True)
class OrderConfig:
    kind: str = "nonstandard"
    monodromy: str = "xy"
    e1: str = "+lambda"
    e2: str = "+lambda"
    tensor_lex: str = "lambda"
    magnus_cap: int = magnus.DEFAULT_CAP
    hard_cap: int = 16
    tau_positive: bool = True

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f"kind must be one of {KINDS}, got {self.kind!r}")
        for name in ("e1", "e2"):
            if getattr(self, name) not in CHOICES:
                raise ConfigError(f"{name} must be one of {CHOICES}, got {getattr(self, name)!r}")
        if self.tensor_lex not in LEX:
            raise ConfigError(f"tensor_lex must be one of {LEX}, got {self.tensor_lex!r}")
        if self.magnus_cap < 1 or self.hard_cap < self.magnus_cap:
            raise ConfigError("need 1 <= magnus_cap <= hard_cap")
        if any(c not in "xyXY" for c in self.monodromy):
            raise ConfigError(f"monodromy must be a twist word over x, y, X, Y: {self.monodromy!r}")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_mapping(cls, data: Mapping[str, object]) -> "OrderConfig":
        kwargs = {}
        known = {f.name: f for f in fields(cls)}
        for key, raw in data.items():
            if key not in known:
                raise ConfigError(f"unknown config key {key!r}")
            if raw is None:
                continue
            kwargs[key] = _coerce(key, known[key].type, raw)
        return cls(**kwargs)

    @classmethod
    def from_file(cls, path: str | Path) -> "OrderConfig":
        return cls.from_mapping(read_config_file(path))

    def with_overrides(self, **overrides) -> "OrderConfig":
        data = self.to_dict()
        data.update({k: v for k, v in overrides.items() if v is not None})
        return OrderConfig.from_mapping(data)


def _coerce(key: str, typ, raw):
    if typ in (int, "int"):
        try:
            return int(raw)
        except (TypeError, ValueError):
            raise ConfigError(f"{key} must be an integer, got {raw!r}") from None
    if typ in (bool, "bool"):
        if isinstance(raw, bool):
            return raw
        s = str(raw).strip().lower()
        if s in ("true", "yes", "1", "on"):
            return True
        if s in ("false", "no", "0", "off"):
            return False
        raise ConfigError(f"{key} must be a boolean, got {raw!r}")
    return str(raw).strip()


def read_config_file(path: str | Path) -> dict[str, str]:
    """Flat ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key] = value
    return out


@dataclass(frozen=True)
class MaxCellData:
    max_cell: Cell
    coefficient: int


def _zsqrt_mul(a: tuple[int, int], b: tuple[int, int], D: int) -> tuple[int, int]:
    return a[0] * b[0] + a[1] * b[1] * D, a[0] * b[1] + a[1] * b[0]


class BiOrder:
    """Sign oracle for one OrderConfig.

    `expand` and `p2` are class attributes so that deliberately broken
    variants (see `verify.mutants`) can swap a component out.
    """

    expand = staticmethod(magnus.expand)
    p2 = staticmethod(cover.p2)
    name = "reference"

    def __init__(self, cfg: OrderConfig | None = None):
        self.cfg = cfg = cfg or OrderConfig()
        self.h = Monodromy(cfg.monodromy).require_accepted()
        self.eigen = eigen_data(self.h.matrix)
        self.D = self.eigen.D
        self._q1 = self.eigen.functional(cfg.e1)
        self._q2 = self.eigen.functional(cfg.e2)
        lam, mu = self.eigen.functional("+lambda"), self.eigen.functional("+mu")
        # row 0 is the eigen-letter ranked first in the tensor lex order
        self._tensor_rows = (lam, mu) if cfg.tensor_lex == "lambda" else (mu, lam)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.cfg})"

    # -- helpers -----------------------------------------------------------

    def _value(self, f, v: Cell) -> tuple[int, int]:
        (p1, q1), (p2, q2) = f
        return v[0] * p1 + v[1] * p2, v[0] * q1 + v[1] * q2

    def q1_sign(self, v: Cell) -> Sign:
        return Sign(sign_parts(*self._value(self._q1, v), self.D))

    def cell_cmp(self, c1: Cell, c2: Cell) -> int:
        """Compare two cells under the basis order <_e (e = cfg.e2)."""
        a, b = self._value(self._q2, c1), self._value(self._q2, c2)
        return sign_parts(a[0] - b[0], a[1] - b[1], self.D)

    def max_cell(self, c: CellSum) -> MaxCellData:
        if not c:
            raise ValueError("empty CellSum has no maximal cell")
        best = best_val = None
        for cell in c:
            val = self._value(self._q2, cell)
            if best is None or sign_parts(val[0] - best_val[0], val[1] - best_val[1], self.D) > 0:
                best, best_val = cell, val
        return MaxCellData(best, c[best])

    def leading(self, w: Word) -> Poly:
        """Magnus leading part, doubling the cap up to hard_cap when needed."""
        cap = self.cfg.magnus_cap
        while True:
            try:
                return magnus.leading_part(w, cap, self.expand)
            except MagnusCapExceeded:
                if cap >= self.cfg.hard_cap:
                    raise
                cap = min(2 * cap, self.cfg.hard_cap)

    def tensor_sign(self, poly: Poly) -> Sign:
        """Sign of a homogeneous polynomial under the eigen-monomial lex order."""
        D = self.D
        rows = self._tensor_rows
        T = {tuple(0 if ch == "x" else 1 for ch in m): (c, 0) for m, c in poly.items()}
        n = len(next(iter(T)))
        for i in range(n):
            new: dict[tuple[int, ...], tuple[int, int]] = {}
            for key, coeff in T.items():
                v = key[i]
                for e in (0, 1):
                    p, q = _zsqrt_mul(coeff, rows[e][v], D)
                    if p or q:
                        k2 = key[:i] + (e,) + key[i + 1:]
                        old = new.get(k2)
                        new[k2] = (old[0] + p, old[1] + q) if old else (p, q)
            T = new
        for key in sorted(T):
            p, q = T[key]
            if p or q:
                return Sign(sign_parts(p, q, D))
        raise AssertionError("nonzero polynomial with vanishing eigen-coefficients")

    # -- signs -------------------------------------------------------------

    def sign(self, w: Word) -> Sign:
        if self.cfg.kind == "standard":
            return self.sign_standard(w)
        return self.sign_nonstandard(w)

    __call__ = sign

    def sign_standard(self, w: Word) -> Sign:
        if w.is_identity():
            return Sign.ZERO
        return self.tensor_sign(self.leading(w))

    def sign_nonstandard(self, w: Word) -> Sign:
        if w.is_identity():
            return Sign.ZERO
        v = w.exponent_sum()
        if v != (0, 0):
            return self.q1_sign(v)
        c = self.p2(w)
        if c:
            k = self.max_cell(c).coefficient
            return Sign.POSITIVE if k > 0 else Sign.NEGATIVE
        return self.sign_standard(w)

    def branch(self, w: Word) -> str:
        """Which level of the cascade decides w: Q1, Q2, Q3 or identity."""
        if w.is_identity():
            return "identity"
        if w.exponent_sum() != (0, 0):
            return "Q1"
        return "Q2" if self.p2(w) else "Q3"

    def compare(self, u: Word, v: Word) -> Ordering:
        s = self.sign(multiply(invert(u), v))
        if s is Sign.POSITIVE:
            return Ordering.LESS
        if s is Sign.NEGATIVE:
            return Ordering.GREATER
        return Ordering.EQUAL

    def sign_bundle(self, p: BundleElement) -> Sign:
        if p.k:
            s = Sign.POSITIVE if p.k > 0 else Sign.NEGATIVE
            return s if self.cfg.tau_positive else -s
        return self.sign(p.g)

    def compare_bundle(self, p: BundleElement, q: BundleElement) -> Ordering:
        grp = self.h.group
        s = self.sign_bundle(grp.mul(grp.inv(p), q))
        return {Sign.POSITIVE: Ordering.LESS, Sign.NEGATIVE: Ordering.GREATER}.get(s, Ordering.EQUAL)

    # -- convex subgroups C_gamma inside G2 --------------------------------

    def in_c_gamma(self, w: Word, cell: Cell) -> bool:
        """w in C_gamma: w in [G, G] and every support cell of p2(w) is <=_e gamma."""
        if w.exponent_sum() != (0, 0):
            return False
        c = self.p2(w)
        return not c or self.cell_cmp(self.max_cell(c).max_cell, cell) <= 0


def make_order(cfg: OrderConfig | None = None, **overrides) -> BiOrder:
    cfg = cfg or OrderConfig()
    if overrides:
        cfg = cfg.with_overrides(**overrides)
    return BiOrder(cfg)


def sign_standard(w: Word, cfg: OrderConfig) -> Sign:
    return BiOrder(replace(cfg, kind="standard")).sign_standard(w)


def sign_nonstandard(w: Word, cfg: OrderConfig) -> Sign:
    return BiOrder(replace(cfg, kind="nonstandard")).sign_nonstandard(w)


def compare(u: Word, v: Word, cfg: OrderConfig) -> Ordering:
    return BiOrder(cfg).compare(u, v)


def sign_bundle(p: BundleElement, cfg: OrderConfig) -> Sign:
    return BiOrder(cfg).sign_bundle(p)


# ---------------------------------------------------------------------------
# Independent evaluation straight from the definitions, used as a test oracle.
# It shares no code with BiOrder beyond the Magnus expansion itself: cells
# come from ray casting, eigen-coordinates are QuadNum values, and standard
# signs expand every eigen-monomial explicitly.

def _reference_leading(w: Word, cfg: OrderConfig) -> Poly:
    cap = cfg.magnus_cap
    while True:
        s = magnus.expand(w, cap)
        n = s.lowest_degree()
        if n is not None:
            return s.homogeneous(n)
        if cap >= cfg.hard_cap:
            raise MagnusCapExceeded(cap + 1, w)
        cap = min(2 * cap, cfg.hard_cap)


def reference_standard_sign(poly: Poly, cfg: OrderConfig) -> Sign:
    ed = eigen_data(Monodromy(cfg.monodromy).matrix)
    inv = ed.change_of_basis
    order = (0, 1) if cfg.tensor_lex == "lambda" else (1, 0)
    n = len(next(iter(poly)))
    for eig in itertools.product(order, repeat=n):
        total = QuadNum(0, 0, 1, ed.D)
        for m, c in poly.items():
            term = QuadNum(c, 0, 1, ed.D)
            for e, ch in zip(eig, m):
                term = term * inv[e][0 if ch == "x" else 1]
            total = total + term
        if not total.is_zero():
            return Sign(total.sign())
    raise AssertionError("nonzero polynomial with vanishing eigen-coefficients")


def reference_sign(w: Word, cfg: OrderConfig) -> Sign:
    if w.is_identity():
        return Sign.ZERO
    ed = eigen_data(Monodromy(cfg.monodromy).matrix)
    if cfg.kind == "nonstandard":
        v = w.exponent_sum()
        if v != (0, 0):
            return Sign(ed.coordinate(cfg.e1, v).sign())
        cells = cover.p2_oracle(w)
        if cells:
            ranked = sorted(cells, key=lambda c: _SortKey(ed.coordinate(cfg.e2, c)))
            return Sign.POSITIVE if cells[ranked[-1]] > 0 else Sign.NEGATIVE
    return reference_standard_sign(_reference_leading(w, cfg), cfg)


class _SortKey:
    __slots__ = ("v",)

    def __init__(self, v: QuadNum):
        self.v = v

    def __lt__(self, other: "_SortKey") -> bool:
        return self.v < other.v


__all__ = [
    "Sign", "Ordering", "OrderConfig", "ConfigError", "MaxCellData", "BiOrder",
    "make_order", "sign_standard", "sign_nonstandard", "compare", "sign_bundle",
    "reference_sign", "read_config_file", "MonodromyError",
]
