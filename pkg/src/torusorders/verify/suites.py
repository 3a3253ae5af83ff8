"""Seeded property suites over the order, cover and Magnus layers.

Each suite runs `n` independent samples.  Sample ``i`` draws from its own
random stream keyed by (suite, seed, i), so any partition of the indices
across workers reports the same failures.  Fixed checks that do not depend
on sampling (the G3 witness pair, exact depths) carry index -1.
"""
from __future__ import annotations

import functools
import json
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .. import cover, magnus
from ..cover import Cell, cell_action, p2_oracle, shift, winding_total
from ..magnus import AtLeast, MagnusCapExceeded, MagnusSeries
from ..monodromy import BundleElement, abelianized_matrix, inner
from ..orders import BiOrder, ConfigError, OrderConfig, Sign, reference_sign
from ..quadfield import eigen_data
from ..words import Word, commutator, conjugate, invert, product, render
from .samplers import (GAMMA0, GAMMA1, element, g2_word, g3_word, g4_word, g22_word,
                       rng_for, walk_to, word_upto)

SUITES = ("cone_axioms", "invariance", "convexity", "cover_laws", "magnus_laws",
          "chain_Cgamma", "standard_stability", "reference")
DEFAULT_CELLS: tuple[Cell, ...] = ((-1, 0), (0, 0), (1, 0))


@dataclass
class SuiteReport:
    suite_id: str
    config: dict
    seed: int
    samples: int
    failures: list = field(default_factory=list)
    elapsed_ms: int = 0
    # extra output (witness words, signs); not part of the JSON document
    artifacts: dict = field(default_factory=dict, compare=False)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "suite_id": self.suite_id,
            "config": self.config,
            "seed": self.seed,
            "samples": self.samples,
            "failures": self.failures,
            "passed": self.passed,
            "elapsed_ms": self.elapsed_ms if timing else 0,
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2)

    def summary(self) -> str:
        state = "PASS" if self.passed else "FAIL"
        return (f"{state} {self.suite_id} samples={self.samples} seed={self.seed} "
                f"failures={len(self.failures)} elapsed_ms={self.elapsed_ms}")


def _render(v) -> str:
    if isinstance(v, Word):
        return render(v)
    if isinstance(v, BundleElement):
        return f"({render(v.g)}, {v.k})"
    return str(v)


def failure(index: int, check: str, inputs: dict, expected, got) -> dict:
    rendered = {"check": check}
    rendered.update({k: _render(v) for k, v in inputs.items()})
    return {"index": index, "inputs": rendered, "expected": _render(expected), "got": _render(got)}


@dataclass
class Context:
    suite_id: str
    order: BiOrder
    seed: int
    selector: str | None = None
    cells: tuple[Cell, ...] = DEFAULT_CELLS
    failures: list = field(default_factory=list)
    artifacts: dict = field(default_factory=dict)

    def expect(self, index: int, check: str, inputs: dict, expected, got) -> None:
        if expected != got:
            self.failures.append(failure(index, check, inputs, expected, got))


# ---------------------------------------------------------------------------
# cone axioms

def _cone_axioms(ctx: Context, rng, i: int) -> None:
    sign = ctx.order.sign
    u, v, x = element(rng), element(rng), word_upto(rng, 6, 1)
    su, sv = sign(u), sign(v)
    ctx.expect(i, "zero_iff_identity", {"u": u}, u.is_identity(), su is Sign.ZERO)
    ctx.expect(i, "inverse", {"u": u}, -su, sign(invert(u)))
    ctx.expect(i, "conjugation", {"u": u, "x": x}, su, sign(conjugate(x, u)))
    if u and v:
        up = u if su is Sign.POSITIVE else invert(u)
        vp = v if sv is Sign.POSITIVE else invert(v)
        ctx.expect(i, "closure", {"u": up, "v": vp}, Sign.POSITIVE, sign(up * vp))


# ---------------------------------------------------------------------------
# monodromy invariance, in G and in pi_1(M)

def _invariance(ctx: Context, rng, i: int) -> None:
    order = ctx.order
    h, grp = order.h, order.h.group
    w = element(rng)
    s = order.sign(w)
    ctx.expect(i, "h", {"w": w}, s, order.sign(h(w)))
    ctx.expect(i, "h_inverse", {"w": w}, s, order.sign(h.inverse(w)))
    tau = BundleElement(Word.identity(), 1)
    ctx.expect(i, "tau_conjugation", {"w": w}, s,
               order.sign_bundle(grp.conj(tau, BundleElement(w, 0))))
    g = element(rng) if rng.random() < 0.5 else word_upto(rng, 8)
    p = BundleElement(g, rng.randint(-2, 2))
    q = BundleElement(word_upto(rng, 4), rng.randint(-1, 1))
    ctx.expect(i, "bundle_conjugation", {"p": p, "q": q},
               order.sign_bundle(p), order.sign_bundle(grp.conj(q, p)))


# ---------------------------------------------------------------------------
# convexity via coset signs

_CGAMMA = re.compile(r"Cgamma\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$")


def parse_selector(selector: str) -> tuple[str, Cell | None]:
    if selector in ("G2", "G3", "G4"):
        return selector, None
    m = _CGAMMA.match(selector)
    if m:
        return "Cgamma", (int(m.group(1)), int(m.group(2)))
    raise ConfigError(f"unknown subgroup selector {selector!r}; use G2, G3, G4 or Cgamma(m,n)")


def _cells_relative(rng, order: BiOrder, cell: Cell, below: bool) -> Cell:
    while True:
        cand = (cell[0] + rng.randint(-2, 2), cell[1] + rng.randint(-2, 2))
        c = order.cell_cmp(cand, cell)
        if (c <= 0) if below else (c > 0):
            return cand


def _true_in_c_gamma(order: BiOrder, w: Word, cell: Cell) -> bool:
    if w.exponent_sum() != (0, 0):
        return False
    c = cover.p2(w)
    return not c or order.cell_cmp(order.max_cell(c).max_cell, cell) <= 0


def c_gamma_element(rng, order: BiOrder, cell: Cell) -> Word:
    """Random element of C_gamma = {g in G2 : all cells of p2(g) <=_e gamma}."""
    parts = []
    for _ in range(rng.randint(1, 3)):
        x = walk_to(rng, _cells_relative(rng, order, cell, below=True), noise=2)
        parts.append(conjugate(x, GAMMA0 if rng.random() < 0.5 else invert(GAMMA0)))
    if rng.random() < 0.3:
        parts.append(g22_word(rng, 20))
    rng.shuffle(parts)
    return product(parts)


def outside_c_gamma(rng, order: BiOrder, cell: Cell) -> Word:
    while True:
        x = walk_to(rng, _cells_relative(rng, order, cell, below=False), noise=2)
        parts = [conjugate(x, GAMMA0 if rng.random() < 0.5 else invert(GAMMA0))]
        parts += [c_gamma_element(rng, order, cell) for _ in range(rng.randint(0, 1))]
        rng.shuffle(parts)
        w = product(parts)
        if not _true_in_c_gamma(order, w, cell):
            return w


def _coset_probe(ctx: Context, i: int, label: str, g: Word, c: Word, c2: Word) -> None:
    sign = ctx.order.sign
    left, left2 = sign(g * c), sign(g * c2)
    ctx.expect(i, f"{label}:left_coset", {"g": g, "c": c, "c'": c2}, left, left2)
    ctx.expect(i, f"{label}:right_coset", {"g": g, "c": c, "c'": c2}, sign(c * g), sign(c2 * g))
    if left is Sign.ZERO:
        ctx.failures.append(failure(i, f"{label}:nonzero", {"g": g, "c": c}, "nonzero", left))


def _sample_noncoset(rng, selector: str, cell: Cell | None, order: BiOrder):
    if selector == "G2":
        while True:
            g = word_upto(rng, 10, 1)
            if g.exponent_sum() != (0, 0):
                return g, g2_word(rng, 30), g2_word(rng, 30)
    if selector == "G3":
        # g outside G3: either off G2 entirely, or in G2 with nonzero winding
        abelian = rng.random() < 0.25
        while True:
            if abelian:
                g = word_upto(rng, 10, 1)
                if g.exponent_sum() != (0, 0):
                    break
            else:
                g = g2_word(rng, 14)
                if winding_total(cover.p2(g)):
                    break
        return g, g3_word(rng, 26), g3_word(rng, 26)
    if selector == "G4":
        while True:
            g = g3_word(rng, 20) if rng.random() < 0.8 else g2_word(rng, 14)
            if not magnus.in_lcs(g, 4):
                return g, g4_word(rng, 40), g4_word(rng, 40)
    return (outside_c_gamma(rng, order, cell), c_gamma_element(rng, order, cell),
            c_gamma_element(rng, order, cell))


def _convexity(ctx: Context, rng, i: int) -> None:
    selector, cell = parse_selector(ctx.selector or "G2")
    g, c, c2 = _sample_noncoset(rng, selector, cell, ctx.order)
    _coset_probe(ctx, i, ctx.selector or "G2", g, c, c2)


WITNESS_Y = GAMMA0 * GAMMA0 * invert(GAMMA1)
WITNESS_Z = invert(GAMMA0) * GAMMA1 * GAMMA1


def _convexity_prelude(ctx: Context) -> None:
    if parse_selector(ctx.selector or "G2")[0] != "G3":
        return
    # the pair y, z lies in the coset gamma0 G3; always probed, since random
    # coset sampling need not find a violation
    y, z = WITNESS_Y, WITNESS_Z
    sy, sz = ctx.order.sign(y), ctx.order.sign(z)
    if sy != sz:
        ctx.failures.append(failure(
            -1, "G3:witness",
            {"y": y, "z": z, "g": GAMMA0, "c": invert(GAMMA0) * y, "c'": invert(GAMMA0) * z},
            sy, sz))
    ctx.artifacts = {"witness_y": render(y), "witness_z": render(z),
                     "sign_y": str(sy), "sign_z": str(sz)}


# ---------------------------------------------------------------------------
# convex chain C_gamma inside G2

def _chain(ctx: Context, rng, i: int) -> None:
    order = ctx.order
    for cell in ctx.cells:
        label = f"Cgamma({cell[0]},{cell[1]})"
        g = outside_c_gamma(rng, order, cell)
        c, c2 = c_gamma_element(rng, order, cell), c_gamma_element(rng, order, cell)
        _coset_probe(ctx, i, label, g, c, c2)
        for other in ctx.cells:
            if order.cell_cmp(cell, other) < 0:
                ctx.expect(i, f"{label}:inclusion", {"c": c, "into": other}, True,
                           order.in_c_gamma(c, other))


def _chain_prelude(ctx: Context) -> None:
    order = ctx.order
    ranked = sorted(ctx.cells, key=functools.cmp_to_key(order.cell_cmp))
    witnesses = []
    for lo, hi in zip(ranked, ranked[1:]):
        w = conjugate(walk_to_exact(hi), GAMMA0)
        ok = order.in_c_gamma(w, hi) and not order.in_c_gamma(w, lo)
        if not ok:
            ctx.failures.append(failure(-1, "strict_inclusion", {"w": w, "lower": lo, "upper": hi},
                                        "in C_upper only", "not separated"))
        witnesses.append(f"C{lo} < C{hi}: {render(w)}")
    top = ranked[-1]
    above = max(((top[0] + dm, top[1] + dn) for dm, dn in ((1, 0), (-1, 0), (0, 1), (0, -1))),
                key=functools.cmp_to_key(order.cell_cmp))
    w = conjugate(walk_to_exact(above), GAMMA0)
    if order.in_c_gamma(w, top):
        ctx.failures.append(failure(-1, "proper_in_G2", {"w": w, "cell": top},
                                    "outside C_top", "inside"))
    witnesses.append(f"C{top} < G2: {render(w)}")
    ctx.artifacts = {"order": [list(c) for c in ranked], "witnesses": witnesses}


def walk_to_exact(cell: Cell) -> Word:
    m, n = cell
    return Word([1 if m > 0 else -1] * abs(m) + [2 if n > 0 else -2] * abs(n))


# ---------------------------------------------------------------------------
# cover laws

def _cover_laws(ctx: Context, rng, i: int) -> None:
    p2 = ctx.order.p2
    w = g2_word(rng, 60)
    pw = p2(w)
    ctx.expect(i, "oracle", {"w": w}, p2_oracle(w), pw)
    x = word_upto(rng, 8, 1)
    ctx.expect(i, "shift_lemma", {"w": w, "x": x}, shift(pw, x.exponent_sum()), p2(conjugate(x, w)))
    hw = ctx.order.h(w)
    ctx.expect(i, "equivariance", {"w": w}, cell_action(ctx.order.h.matrix, pw), p2(hw))
    u = g2_word(rng, 30)
    ctx.expect(i, "homomorphism", {"w": w, "u": u}, pw + p2(u), p2(w * u))
    c3 = g3_word(rng, 40)
    ctx.expect(i, "G3_winding", {"c": c3}, 0, winding_total(p2(c3)))
    k = g22_word(rng, 40)
    ctx.expect(i, "G2G2_kernel", {"c": k}, cover.CellSum(), p2(k))


# ---------------------------------------------------------------------------
# Magnus laws

def _magnus_laws(ctx: Context, rng, i: int) -> None:
    expand = ctx.order.expand
    cap = 6
    u, v = word_upto(rng, 8), word_upto(rng, 8)
    ctx.expect(i, "multiplicative", {"u": u, "v": v}, expand(u, cap) * expand(v, cap), expand(u * v, cap))
    ctx.expect(i, "inverse", {"u": u}, MagnusSeries.one(cap), expand(invert(u), cap) * expand(u, cap))
    s, t = element(rng), element(rng)
    ds, dt = magnus.depth(s, 8, expand), magnus.depth(t, 8, expand)
    if s and t and not isinstance(ds, AtLeast) and not isinstance(dt, AtLeast) and ds + dt <= 8:
        dc = magnus.depth(commutator(s, t), 8, expand)
        ctx.expect(i, "commutator_depth", {"u": s, "v": t}, True, dc >= ds + dt)
    if s:
        ctx.expect(i, "depth_one_iff_abelian", {"u": s}, s.exponent_sum() != (0, 0), ds == 1)
    g = g2_word(rng, 30)
    dg = magnus.depth(g, 8, expand)
    ctx.expect(i, "G2_depth", {"u": g}, True, dg >= 2)
    if dg >= 3:
        ctx.expect(i, "G3_winding", {"u": g}, 0, winding_total(cover.p2(g)))


def _magnus_prelude(ctx: Context) -> None:
    expand = ctx.order.expand
    ctx.expect(-1, "depth_abAB", {"u": GAMMA0}, 2, magnus.depth(GAMMA0, 8, expand))
    w = GAMMA0 * invert(GAMMA1)
    ctx.expect(-1, "depth_g0_g1inv", {"u": w}, 3, magnus.depth(w, 8, expand))


# ---------------------------------------------------------------------------
# standard-order stability under inner automorphisms

def _standard_stability(ctx: Context, rng, i: int) -> None:
    order = ctx.order
    x = word_upto(rng, 4, 1)
    phi = order.h.endo.then(inner(x))
    A = abelianized_matrix(phi)
    ctx.expect(i, "same_abelianization", {"x": x}, order.h.matrix, A)
    if A == order.h.matrix:
        ctx.expect(i, "same_eigen_data", {"x": x}, True, eigen_data(A) == order.eigen)
    w = element(rng)
    ctx.expect(i, "invariance", {"w": w, "x": x}, order.sign(w), order.sign(phi(w)))


# ---------------------------------------------------------------------------
# agreement with the brute-force evaluation of the definitions

def _reference(ctx: Context, rng, i: int) -> None:
    w = element(rng)
    ctx.expect(i, "definition", {"w": w}, reference_sign(w, ctx.order.cfg), ctx.order.sign(w))


_REGISTRY: dict[str, tuple[Callable, Callable | None]] = {
    "cone_axioms": (_cone_axioms, None),
    "invariance": (_invariance, None),
    "convexity": (_convexity, _convexity_prelude),
    "cover_laws": (_cover_laws, None),
    "magnus_laws": (_magnus_laws, _magnus_prelude),
    "chain_Cgamma": (_chain, _chain_prelude),
    "standard_stability": (_standard_stability, None),
    "reference": (_reference, None),
}


def _run_indices(ctx: Context, indices: Iterable[int]) -> list:
    fn = _REGISTRY[ctx.suite_id][0]
    ctx.failures = []
    for i in indices:
        rng = rng_for(ctx.suite_id, ctx.seed, i)
        try:
            fn(ctx, rng, i)
        except MagnusCapExceeded as exc:
            ctx.failures.append(failure(i, "resource", {}, "resolved",
                                        f"resource:MagnusCapExceeded(at_least={exc.at_least})"))
    return ctx.failures


def _chunk_worker(args) -> list:
    ctx, indices = args
    return _run_indices(ctx, indices)


def run_suite(suite_id: str, order: BiOrder | OrderConfig, n: int, seed: int = 0, *,
              selector: str | None = None, cells: Sequence[Cell] | None = None,
              workers: int = 1, indices: Iterable[int] | None = None) -> SuiteReport:
    if suite_id not in _REGISTRY:
        raise ConfigError(f"unknown suite {suite_id!r}; choose from {SUITES}")
    if not isinstance(order, BiOrder):
        order = BiOrder(order)
    if suite_id == "convexity":
        parse_selector(selector or "G2")
    ctx = Context(suite_id, order, seed, selector, tuple(cells or DEFAULT_CELLS))
    start = time.perf_counter()
    idx = list(range(n) if indices is None else indices)

    prelude = _REGISTRY[suite_id][1]
    if prelude and indices is None:
        prelude(ctx)
    failures = list(ctx.failures)
    artifacts = ctx.artifacts

    if workers > 1 and len(idx) > 1:
        chunks = [idx[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_chunk_worker, [(Context(suite_id, order, seed, selector, ctx.cells), c)
                                                 for c in chunks]):
                failures.extend(part)
    else:
        failures.extend(_run_indices(ctx, idx))
    failures.sort(key=lambda f: (f["index"], f["inputs"]["check"]))

    config = dict(order.cfg.to_dict())
    config["variant"] = order.name
    if selector is not None:
        config["selector"] = selector
    if suite_id == "chain_Cgamma":
        config["cells"] = [list(c) for c in ctx.cells]
    return SuiteReport(suite_id, config, seed, len(idx), failures,
                       int((time.perf_counter() - start) * 1000), artifacts)


# ---------------------------------------------------------------------------
# the G3 non-convexity witnesses

def check_lemma_witnesses(order: BiOrder | OrderConfig | None = None) -> SuiteReport:
    if order is None:
        order = OrderConfig()
    if not isinstance(order, BiOrder):
        order = BiOrder(order)
    if order.cfg.kind != "nonstandard":
        raise ConfigError("the witness checks need a nonstandard order")
    start = time.perf_counter()
    g0, g1, y, z = GAMMA0, GAMMA1, WITNESS_Y, WITNESS_Z
    cap = order.cfg.magnus_cap
    fails: list = []

    def expect(index, check, inputs, expected, got):
        if expected != got:
            fails.append(failure(index, check, inputs, expected, got))

    d = magnus.depth(g0 * invert(g1), cap)
    expect(0, "g0_g1inv_in_G3", {"w": g0 * invert(g1)}, True, d >= 3)
    expect(1, "y_z_in_g0G3", {"y": y, "z": z}, (True, True),
           (magnus.in_lcs(invert(g0) * y, 3, cap), magnus.in_lcs(invert(g0) * z, 3, cap)))
    p2 = order.p2
    expect(2, "p2_y", {"y": y}, 2 * p2(g0) - p2(g1), p2(y))
    sy, sz = order.sign(y), order.sign(z)
    expect(3, "opposite_signs", {"y": y, "z": z}, True, sy == -sz and sy is not Sign.ZERO)
    expect(4, "winding_totals", {"y": y, "z": z}, (1, 1),
           (winding_total(p2(y)), winding_total(p2(z))))
    config = dict(order.cfg.to_dict())
    config["variant"] = order.name
    return SuiteReport("witnesses", config, 0, 5, fails,
                       int((time.perf_counter() - start) * 1000),
                       {"y": render(y), "z": render(z), "sign_y": str(sy), "sign_z": str(sz)})
