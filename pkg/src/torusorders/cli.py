"""Command-line front end.

Order settings come from three layers, later ones winning: built-in
defaults, then ``--config FILE`` (flat ``key = value`` lines), then the
individual flags such as ``--monodromy`` or ``--order``.

Exit codes: 0 success or suite pass, 1 suite failure, 2 usage/config/input
error, 3 Magnus cap exceeded.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import magnus
from .cover import NotInCommutatorSubgroup, p2, winding_total
from .magnus import AtLeast, MagnusCapExceeded
from .monodromy import BundleElement, Monodromy
from .orders import ConfigError, OrderConfig, make_order, read_config_file
from .quadfield import MonodromyError, eigen_data
from .verify import MUTATIONS, SUITES, check_lemma_witnesses, mutate_order, run_suite
from .words import WordSyntaxError, parse_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _config_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("order configuration")
    g.add_argument("--config", metavar="PATH", help="flat key = value config file")
    g.add_argument("--monodromy", metavar="TWISTS", help="twist word over x, y, X, Y (default xy)")
    g.add_argument("--order", "--kind", dest="kind", choices=("standard", "nonstandard"))
    g.add_argument("--e1", choices=("+lambda", "-lambda", "+mu", "-mu"))
    g.add_argument("--e2", choices=("+lambda", "-lambda", "+mu", "-mu"))
    g.add_argument("--tensor-lex", dest="tensor_lex", choices=("lambda", "mu"))
    g.add_argument("--magnus-cap", dest="magnus_cap", type=int)
    g.add_argument("--hard-cap", dest="hard_cap", type=int)
    tau = g.add_mutually_exclusive_group()
    tau.add_argument("--tau-positive", dest="tau_positive", action="store_const", const=True)
    tau.add_argument("--tau-negative", dest="tau_positive", action="store_const", const=False)
    return p


_CONFIG_KEYS = ("monodromy", "kind", "e1", "e2", "tensor_lex", "magnus_cap", "hard_cap",
                "tau_positive")


def config_from_args(args: argparse.Namespace) -> OrderConfig:
    data: dict = read_config_file(args.config) if args.config else {}
    for key in _CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            data[key] = value
    return OrderConfig.from_mapping(data)


def build_parser() -> argparse.ArgumentParser:
    common = _config_flags()
    parser = _Parser(prog="torusorders",
                     description="Bi-orders on fundamental groups of punctured torus bundles.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("info", parents=[common], help="matrix, trace, classification and eigen data")

    p = sub.add_parser("sign", parents=[common], help="sign of a word (or of g tau^k)")
    p.add_argument("--word", required=True)
    p.add_argument("--tau-power", type=int, default=0, metavar="K",
                   help="sign of (word, K) in the bundle group")
    p.add_argument("--explain", action="store_true", help="also print the deciding branch")

    p = sub.add_parser("compare", parents=[common], help="compare two words")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = sub.add_parser("magnus", help="truncated Magnus expansion")
    p.add_argument("--word", required=True)
    p.add_argument("--cap", type=int, default=magnus.DEFAULT_CAP)

    p = sub.add_parser("p2", help="cell winding numbers of a commutator-subgroup word")
    p.add_argument("--word", required=True)

    p = sub.add_parser("verify", parents=[common], help="run a property suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--selector", help="convexity subgroup: G2, G3, G4 or Cgamma(m,n)")
    p.add_argument("--cells", help="chain cells as 'm,n;m,n;...' (default -1,0;0,0;1,0)")
    p.add_argument("--mutant", help=f"run against a broken order: {', '.join(MUTATIONS)}")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--report", metavar="PATH", help="write the JSON report here ('-' for stdout)")
    p.add_argument("--no-timing", action="store_true", help="write elapsed_ms as 0")

    p = sub.add_parser("witnesses", parents=[common], help="check the G3 non-convexity witnesses")
    p.add_argument("--report", metavar="PATH")
    p.add_argument("--no-timing", action="store_true")
    return parser


def _parse_cells(text: str) -> tuple[tuple[int, int], ...]:
    try:
        cells = tuple(tuple(int(v) for v in part.split(",")) for part in text.split(";") if part.strip())
    except ValueError:
        raise ConfigError(f"bad --cells {text!r}") from None
    if not cells or any(len(c) != 2 for c in cells):
        raise ConfigError(f"bad --cells {text!r}")
    return cells


def _write_report(report, path: str | None, timing: bool) -> None:
    if path is None:
        return
    text = report.to_json(timing=timing) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _cmd_info(args) -> int:
    cfg = config_from_args(args)
    h = Monodromy(cfg.monodromy)
    (a, b), (c, d) = h.matrix
    print(f"monodromy {h.twists}")
    print(f"matrix [[{a}, {b}], [{c}, {d}]]")
    print(f"trace {h.trace}")
    print(f"hyperbolic {str(h.classification.hyperbolic).lower()}")
    print(f"untwisted {str(h.classification.untwisted).lower()}")
    if h.accepted:
        e = eigen_data(h.matrix)
        print(f"D {e.D}")
        print(f"lambda {e.lam}")
        print(f"mu {e.mu}")
        print(f"e_lambda ({e.e_lambda[0]}, {e.e_lambda[1]})")
        print(f"e_mu ({e.e_mu[0]}, {e.e_mu[1]})")
    else:
        print("accepted false")
    return EXIT_OK


def _cmd_sign(args) -> int:
    order = make_order(config_from_args(args))
    w = parse_word(args.word)
    if args.tau_power:
        print(order.sign_bundle(BundleElement(w, args.tau_power)))
    else:
        print(order.sign(w))
        if args.explain:
            print(f"branch {order.branch(w) if order.cfg.kind == 'nonstandard' else 'standard'}")
    return EXIT_OK


def _cmd_compare(args) -> int:
    order = make_order(config_from_args(args))
    print(order.compare(parse_word(args.left), parse_word(args.right)))
    return EXIT_OK


def _cmd_magnus(args) -> int:
    if args.cap < 1:
        raise ConfigError("--cap must be at least 1")
    w = parse_word(args.word)
    d = magnus.depth(w, args.cap)
    if w.is_identity():
        print("depth inf")
    elif isinstance(d, AtLeast):
        print(f"depth {d}")
    else:
        print(f"depth {d}")
        print(f"leading {magnus.format_poly(magnus.leading_part(w, args.cap))}")
    print(magnus.expand(w, args.cap).dump())
    return EXIT_OK


def _cmd_p2(args) -> int:
    c = p2(parse_word(args.word))
    if c:
        print(c.dump())
    print(f"winding_total {winding_total(c)}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    cfg = config_from_args(args)
    order = mutate_order(cfg, args.mutant) if args.mutant else make_order(cfg)
    cells = _parse_cells(args.cells) if args.cells else None
    report = run_suite(args.suite, order, args.samples, args.seed, selector=args.selector,
                       cells=cells, workers=args.workers)
    _write_report(report, args.report, not args.no_timing)
    if args.report != "-":
        print(report.summary())
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_witnesses(args) -> int:
    report = check_lemma_witnesses(config_from_args(args))
    _write_report(report, args.report, not args.no_timing)
    if args.report != "-":
        print(f"y {report.artifacts['y']} {report.artifacts['sign_y']}")
        print(f"z {report.artifacts['z']} {report.artifacts['sign_z']}")
        print(report.summary())
    return EXIT_OK if report.passed else EXIT_FAIL


_COMMANDS = {"info": _cmd_info, "sign": _cmd_sign, "compare": _cmd_compare,
             "magnus": _cmd_magnus, "p2": _cmd_p2, "verify": _cmd_verify,
             "witnesses": _cmd_witnesses}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except MagnusCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ConfigError, MonodromyError, WordSyntaxError, NotInCommutatorSubgroup, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
