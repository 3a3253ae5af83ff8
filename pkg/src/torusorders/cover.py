"""Homology of the abelian cover of the punctured torus.

A word traces a lattice path in Z^2 (a = +e1, b = +e2).  For w in [G, G] the
path is closed, and the class of w in H_1 of the cover is recorded by the
winding number of that loop about each unit cell.  Cell (m, n) is the square
[m, m+1] x [n, n+1]; the counterclockwise boundary of cell (0, 0) is abAB.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .quadfield import Matrix
from .words import Word

Cell = tuple[int, int]

_STEP = {1: (1, 0), -1: (-1, 0), 2: (0, 1), -2: (0, -1)}


class NotInCommutatorSubgroup(ValueError):
    def __init__(self, w: Word, endpoint: Cell):
        super().__init__(
            f"NotInCommutatorSubgroup: {w or '1'} has exponent sum {endpoint}, not (0, 0)"
        )
        self.endpoint = endpoint


class CellSum:
    """Finitely supported Z-valued function on Z^2; zero entries are never stored."""

    __slots__ = ("_data",)

    def __init__(self, data: Mapping[Cell, int] | Iterable[tuple[Cell, int]] = ()):
        items = data.items() if isinstance(data, Mapping) else data
        acc: dict[Cell, int] = {}
        for cell, k in items:
            acc[cell] = acc.get(cell, 0) + k
        self._data = {c: k for c, k in acc.items() if k}

    @classmethod
    def _trusted(cls, data: dict[Cell, int]) -> "CellSum":
        c = cls.__new__(cls)
        c._data = data
        return c

    def __getitem__(self, cell: Cell) -> int:
        return self._data.get(cell, 0)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __bool__(self) -> bool:
        return bool(self._data)

    def items(self):
        return self._data.items()

    def as_dict(self) -> dict[Cell, int]:
        return dict(self._data)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CellSum):
            return self._data == other._data
        if isinstance(other, Mapping):
            return self._data == {c: k for c, k in other.items() if k}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._data.items()))

    def __add__(self, other: "CellSum") -> "CellSum":
        return CellSum(list(self.items()) + list(other.items()))

    def __neg__(self) -> "CellSum":
        return CellSum._trusted({c: -k for c, k in self._data.items()})

    def __sub__(self, other: "CellSum") -> "CellSum":
        return self + (-other)

    def __rmul__(self, n: int) -> "CellSum":
        return CellSum({c: n * k for c, k in self._data.items()})

    def __repr__(self) -> str:
        inner = ", ".join(f"{k:+d}@{c}" for c, k in sorted(self._data.items()))
        return f"CellSum({{{inner}}})"

    def dump(self) -> str:
        return "\n".join(f"{m} {n} {k}" for (m, n), k in sorted(self._data.items()))


@dataclass(frozen=True)
class LatticePath:
    """Vertices of the lattice path of a word, starting at the origin."""

    vertices: tuple[Cell, ...]

    @property
    def endpoint(self) -> Cell:
        return self.vertices[-1]

    @property
    def closed(self) -> bool:
        return self.endpoint == (0, 0)

    def edges(self) -> Iterator[tuple[Cell, Cell]]:
        return zip(self.vertices, self.vertices[1:])


def path_of(w: Word) -> LatticePath:
    x = y = 0
    verts = [(0, 0)]
    for letter in w.letters:
        dx, dy = _STEP[letter]
        x += dx
        y += dy
        verts.append((x, y))
    return LatticePath(tuple(verts))


def p1(w: Word) -> Cell:
    return w.exponent_sum()


def p2(w: Word) -> CellSum:
    """Cell winding numbers of a commutator-subgroup word.

    Discrete Green's theorem over horizontal edges: an edge along the top of
    column m at height j, traversed in direction d, contributes -d to every
    cell (m, n) with n < j.  Each column is swept once from the top down.
    """
    events: dict[int, dict[int, int]] = defaultdict(dict)
    x = y = 0
    for letter in w.letters:
        if letter == 1:
            col = events[x]
            col[y] = col.get(y, 0) - 1
            x += 1
        elif letter == -1:
            x -= 1
            col = events[x]
            col[y] = col.get(y, 0) + 1
        elif letter == 2:
            y += 1
        else:
            y -= 1
    if (x, y) != (0, 0):
        raise NotInCommutatorSubgroup(w, (x, y))
    out: dict[Cell, int] = {}
    for m, col in events.items():
        heights = sorted((j for j, d in col.items() if d), reverse=True)
        running = 0
        for top, below in zip(heights, heights[1:] + [None]):
            running += col[top]
            if running and below is not None:
                for n in range(below, top):
                    out[(m, n)] = running
    return CellSum._trusted(out)


def p2_oracle(w: Word) -> CellSum:
    """Per-cell ray casting, independent of `p2`.

    For each cell centre in the bounding box, count signed crossings of a
    rightward horizontal ray with the vertical edges of the path (upward +1).
    """
    path = path_of(w)
    if not path.closed:
        raise NotInCommutatorSubgroup(w, path.endpoint)
    rows: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for (x0, y0), (x1, y1) in path.edges():
        if x0 == x1:
            rows[min(y0, y1)].append((x0, 1 if y1 > y0 else -1))
    if not rows:
        return CellSum()
    xs = [v[0] for v in path.vertices]
    out = {}
    for n, edges in rows.items():
        for m in range(min(xs), max(xs)):
            # centre (m + 1/2, n + 1/2): the ray crosses edges at x > m + 1/2
            k = sum(d for ex, d in edges if ex > m)
            if k:
                out[(m, n)] = k
    return CellSum(out)


def shift(c: CellSum, v: Cell) -> CellSum:
    dm, dn = v
    return CellSum._trusted({(m + dm, n + dn): k for (m, n), k in c.items()})


def cell_action(A: Matrix, c: CellSum) -> CellSum:
    """The lifted monodromy permutes boundary cells by v -> A v."""
    (a, b), (cc, d) = A
    if a * d - b * cc != 1:
        raise ValueError("cell_action needs det A = 1")
    return CellSum._trusted({(a * m + b * n, cc * m + d * n): k for (m, n), k in c.items()})


def winding_total(c: CellSum) -> int:
    return sum(k for _, k in c.items())
