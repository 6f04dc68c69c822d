"""Command-line interface.

Exit codes: 0 success, 1 domain failure (not a cograph, failed check),
2 usage or parse error.  Machine output goes to stdout, diagnostics to
stderr.  Set ``COSPECTRA_TRACE=1`` to print the diagonalization trace of
``inertia`` to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from cospectra.cotree import CotreeError, depth
from cospectra.formats import ParseError, format_cotree, parse_input
from cospectra.graph import Graph
from cospectra.recognition import NotACograph, build_cotree

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2

_INLINE_COTREE = re.compile(r"^\s*[JU]\s*\(")


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    if not re.fullmatch(r"\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*", text):
        raise argparse.ArgumentTypeError(f"expected an integer or p/q, got {text!r}")
    try:
        return Fraction(text.replace(" ", ""))
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError("zero denominator") from None


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _bias(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError("join bias must lie in [0, 1]")
    return v


def _sizes(text: str) -> list:
    try:
        sizes = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}") from None
    if not sizes or any(s < 1 for s in sizes):
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return sizes


def _read_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if os.path.exists(source):
        try:
            with open(source, encoding="utf-8") as fh:
                return fh.read()
        except (OSError, UnicodeDecodeError) as exc:
            raise UsageError(f"cannot read {source}: {exc}") from None
    if _INLINE_COTREE.match(source):
        return source
    raise UsageError(f"cannot read {source}: no such file")


def _load(args, *, want: Optional[str] = None):
    fmt = None if args.format == "auto" else args.format
    obj = parse_input(_read_source(args.input), want or fmt)
    return obj


def _load_cotree(args):
    obj = _load(args)
    if isinstance(obj, Graph):
        obj = build_cotree(obj).unwrap()
    return obj


# -- commands ------------------------------------------------------------


def cmd_parse(args, out) -> int:
    t = _load_cotree(args)
    out(format_cotree(t))
    if args.stats:
        out(f"n={t.n} depth={depth(t)} interior={t.num_interior}")
    return EXIT_OK


def cmd_recognize(args, out) -> int:
    g = _load(args, want="edges")
    outcome = build_cotree(g)
    if outcome.ok:
        out(format_cotree(outcome.cotree))
        return EXIT_OK
    out("P4: " + " ".join(map(str, outcome.witness)))
    return EXIT_DOMAIN


def cmd_spectrum(args, out) -> int:
    from cospectra.spectrum import laplacian_spectrum

    spec = laplacian_spectrum(_load_cotree(args))
    out(spec.to_json() if args.json else spec.format_table())
    if args.plot:
        from cospectra.plotting import plot_spectrum

        plot_spectrum(spec, args.plot)
    return EXIT_OK


def cmd_inertia(args, out) -> int:
    from cospectra.diagonalization import Inertia, diagonalize

    t = _load_cotree(args)
    trace = os.environ.get("COSPECTRA_TRACE", "") not in ("", "0")
    result = diagonalize(t, -args.x, trace=trace)
    if trace:
        for step in result.trace:
            print(step, file=sys.stderr)
    out(str(Inertia(*result.signs())))
    return EXIT_OK


def cmd_trees(args, out) -> int:
    from cospectra.spanning import spanning_count_from_spectrum, spanning_tree_count
    from cospectra.spectrum import laplacian_spectrum

    t = _load_cotree(args)
    count = spanning_tree_count(t)
    if args.json:
        out(json.dumps({"n": t.n, "spanning_trees": str(count)}, separators=(",", ":")))
    else:
        out(str(count))
    if args.check:
        other = spanning_count_from_spectrum(laplacian_spectrum(t))
        if other != count:
            print(f"check failed: spectral product gives {other}", file=sys.stderr)
            return EXIT_DOMAIN
    return EXIT_OK


def cmd_gen(args, out) -> int:
    from cospectra.oracle import random_cotree

    out(format_cotree(random_cotree(args.n, args.seed, args.join_bias)))
    return EXIT_OK


def cmd_bench(args, out) -> int:
    from cospectra.bench import format_rows, linearity_ratio, run_bench

    rows = run_bench(args.sizes, args.trials, args.seed, args.join_bias)
    if args.json:
        out(json.dumps({"rows": [r.as_dict() for r in rows], "linearity_ratio": linearity_ratio(rows)}))
    else:
        out(format_rows(rows))
    if args.plot:
        from cospectra.plotting import plot_bench

        plot_bench(rows, args.plot)
    return EXIT_OK


def cmd_selftest(args, out) -> int:
    from cospectra.selftest import run_selftest

    ok = run_selftest(args.max_n, args.random, args.max_random_n, args.seed, out=out)
    return EXIT_OK if ok else EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cospectra", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("input", help="file path, '-' for stdin, or inline cotree text")
        p.add_argument("--format", choices=("auto", "cotree", "edges"), default="auto")
        return p

    p = with_input(sub.add_parser("parse", help="print the normalized cotree"))
    p.add_argument("--stats", action="store_true", help="also print n, depth and interior count")
    p.set_defaults(func=cmd_parse)

    p = with_input(sub.add_parser("recognize", help="build a cotree from an edge list"))
    p.set_defaults(func=cmd_recognize)

    p = with_input(sub.add_parser("spectrum", help="Laplacian spectrum"))
    p.add_argument("--json", action="store_true")
    p.add_argument("--plot", metavar="PATH", help="write a multiplicity bar chart")
    p.set_defaults(func=cmd_spectrum)

    p = with_input(sub.add_parser("inertia", help="eigenvalue counts above/equal/below x"))
    p.add_argument("--x", type=_rational, required=True, help="threshold, integer or p/q")
    p.set_defaults(func=cmd_inertia)

    p = with_input(sub.add_parser("trees", help="number of spanning trees"))
    p.add_argument("--check", action="store_true", help="cross-check with the spectral product")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("gen", help="emit a random cotree")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--join-bias", type=_bias, default=0.5)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the spectrum on random cotrees")
    p.add_argument("--sizes", type=_sizes, required=True, help="comma-separated leaf counts")
    p.add_argument("--trials", type=_positive_int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--join-bias", type=_bias, default=0.5)
    p.add_argument("--json", action="store_true")
    p.add_argument("--plot", metavar="PATH", help="write timing figures to PATH")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selftest", help="run the oracle-equivalence suites")
    p.add_argument("--max-n", type=_positive_int, default=6)
    p.add_argument("--random", type=int, default=50, help="number of random cotrees")
    p.add_argument("--max-random-n", type=_positive_int, default=40)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "max_n", 1) > 10:
        print("cospectra: error: --max-n must be <= 10", file=sys.stderr)
        return EXIT_USAGE
    out = lambda s: print(s)  # noqa: E731
    try:
        return args.func(args, out)
    except NotACograph as exc:
        print(f"cospectra: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ParseError, CotreeError, UsageError, ValueError) as exc:
        print(f"cospectra: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
