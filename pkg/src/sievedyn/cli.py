"""Command-line front end; every library operation is reachable from here.

Exit codes: 0 success, 1 computation error, 2 usage error.  Output is
deterministic: identical argv produces byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, acceptance, kneading, numtheory, sieve, words
from .words import parse_word


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sievedyn", description=__doc__)
    parser.add_argument("--version", action="version", version=f"sievedyn {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sieve", help="run the symbolic sieve recursion")
    p.add_argument("--steps", type=int, default=1, help="number of primes to absorb (state index)")
    p.add_argument("--cap", type=int, default=sieve.DEFAULT_CAP, help="explicit prefix cap")
    p.add_argument("--emit", choices=["word", "primes", "state", "next", "symbol", "gaps"], default="word")
    p.add_argument("--limit", type=int, help="upper bound for --emit primes")
    p.add_argument("--q", type=int, help="position for --emit symbol")
    p.add_argument("--gap", type=int, default=2, help="gap size for --emit gaps")
    p.add_argument("--lo", type=int, help="window start for --emit gaps")
    p.add_argument("--hi", type=int, help="window end for --emit gaps")

    p = sub.add_parser("compose", help="pointwise composition of periodic words")
    p.add_argument("operands", nargs="+", metavar="WORD")
    p.add_argument("--emit", choices=["word", "period"], default="word")

    p = sub.add_parser("star", help="renormalizing star product")
    p.add_argument("left", metavar="WORD")
    p.add_argument("right", metavar="WORD")

    p = sub.add_parser("compare", help="parity-lexicographic comparison")
    p.add_argument("left", metavar="WORD")
    p.add_argument("right", metavar="WORD")
    p.add_argument("--horizon", type=int, default=words.DEFAULT_HORIZON)

    p = sub.add_parser("admissible", help="kneading admissibility test")
    p.add_argument("word", metavar="WORD")
    p.add_argument("--horizon", type=int, default=words.DEFAULT_HORIZON)

    p = sub.add_parser("knead-u", help="invert a kneading word to the parameter u")
    p.add_argument("--word", required=True)
    p.add_argument("--horizon", type=int, default=None)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("itinerary", help="symbols of the critical orbit")
    p.add_argument("--u", type=float, required=True)
    p.add_argument("--n", type=int, default=64)
    p.add_argument("--c-tol", type=float, default=1e-12)
    p.add_argument("--emit", choices=["word", "orbit"], default="word")
    p.add_argument("--x0", type=float, default=0.0, help="start point for --emit orbit")

    p = sub.add_parser("entropy", help="topological entropy of a kneading word")
    p.add_argument("--word", help="kneading word")
    p.add_argument("--truncation", type=int, default=4096)
    p.add_argument("--u", type=float, help="with --laps: map parameter")
    p.add_argument("--n", type=int, default=20, help="with --laps: iterate count")
    p.add_argument("--laps", action="store_true", help="emit the lap count of the n-th iterate instead")

    p = sub.add_parser("lyapunov", help="Lyapunov exponent along the orbit")
    p.add_argument("--u", type=float, required=True)
    p.add_argument("--n", type=int, default=10**7)
    p.add_argument("--burn-in", type=int, default=10**4)
    p.add_argument("--x0", type=float, default=0.3)

    p = sub.add_parser("bifurcation", help="bifurcation diagram data (CSV, optional SVG)")
    p.add_argument("--u-min", type=float, required=True)
    p.add_argument("--u-max", type=float, required=True)
    p.add_argument("--u-steps", type=int, default=200)
    p.add_argument("--transient", type=int, default=500)
    p.add_argument("--keep", type=int, default=100)
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.add_argument("--svg", help="also write a standalone SVG scatter here")

    p = sub.add_parser("bands", help="band count of the attractor at u")
    p.add_argument("--u", type=float, required=True)
    p.add_argument("--samples", type=int, default=200_000)

    p = sub.add_parser("goldbach", help="even-number prime-pair counts")
    p.add_argument("--n", type=int, help="single even number")
    p.add_argument("--lo", type=int, help="range start (even)")
    p.add_argument("--hi", type=int, help="range end (even, inclusive)")

    p = sub.add_parser("twins", help="twin-prime pair count in a window")
    p.add_argument("--lo", type=int, required=True)
    p.add_argument("--hi", type=int, required=True)

    p = sub.add_parser("estimate", help="closed-form prime-count estimate at p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--actual", action="store_true", help="also count primes in (p, p^2)")

    p = sub.add_parser("verify", help="run acceptance suites")
    p.add_argument("--suite", default="all", help="suite name or 'all'")

    return parser


def _cmd_sieve(args, out) -> int:
    if args.steps < 1:
        raise ValueError("--steps must be >= 1")
    state = sieve.advance(sieve.initial_state(cap=args.cap), args.steps - 1)
    if args.emit == "word":
        out.write(words.format_word(sieve.state_period_word(state)) + "\n")
    elif args.emit == "next":
        out.write(words.format_word(sieve.next_prime_word(sieve.state_period_word(state))) + "\n")
    elif args.emit == "primes":
        if args.limit is None:
            raise ValueError("--emit primes requires --limit")
        for q in sieve.primes_from_state(state, args.limit):
            out.write(f"{q}\n")
    elif args.emit == "symbol":
        if args.q is None:
            raise ValueError("--emit symbol requires --q")
        out.write(sieve.symbol_at(state, args.q) + "\n")
    elif args.emit == "gaps":
        if args.lo is None or args.hi is None:
            raise ValueError("--emit gaps requires --lo and --hi")
        out.write(f"{sieve.gap_pattern_count(state, args.gap, args.lo, args.hi)}\n")
    else:  # state
        out.write(json.dumps(sieve.state_record(state), sort_keys=True) + "\n")
    return 0


def _cmd_compose(args, out) -> int:
    ws = [parse_word(t) for t in args.operands]
    acc = ws[0]
    for w in ws[1:]:
        acc = words.dot_compose(acc, w)
    if args.emit == "period":
        out.write(f"{words.minimal_period(acc)}\n")
    else:
        out.write(words.format_word(acc) + "\n")
    return 0


def _cmd_entropy(args, out) -> int:
    if args.laps:
        if args.u is None:
            raise ValueError("--laps requires --u")
        out.write(f"{kneading.lap_count_oracle(args.u, args.n)}\n")
    else:
        if args.word is None:
            raise ValueError("provide --word, or --laps with --u")
        out.write(_fmt(kneading.topological_entropy(parse_word(args.word), args.truncation)) + "\n")
    return 0


def _cmd_bifurcation(args, out) -> int:
    points = kneading.bifurcation_data(args.u_min, args.u_max, args.u_steps, args.transient, args.keep)
    csv_text = kneading.bifurcation_csv(points)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(csv_text)
    else:
        out.write(csv_text)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(bifurcation_svg(points, args.u_min, args.u_max))
    return 0


def _cmd_goldbach(args, out) -> int:
    if args.n is not None:
        out.write(f"{args.n},{numtheory.goldbach_r(args.n)}\n")
        return 0
    if args.lo is None or args.hi is None:
        raise ValueError("provide --n, or --lo and --hi")
    lo = args.lo + (args.lo % 2)
    out.write("n,r\n")
    for n in range(max(lo, 4), args.hi + 1, 2):
        out.write(f"{n},{numtheory.goldbach_r(n)}\n")
    return 0


def _cmd_verify(args, out) -> int:
    results = acceptance.run_suite(args.suite)
    for r in results:
        out.write(r.line() + "\n")
    failed = sum(not r.passed for r in results)
    out.write(f"# {len(results) - failed}/{len(results)} checks passed\n")
    return 0 if failed == 0 else 1


def bifurcation_svg(points, u_min: float, u_max: float, width: int = 720, height: int = 480) -> str:
    """Standalone SVG scatter with the two-band window markers."""
    def sx(u):
        return (u - u_min) / (u_max - u_min) * (width - 60) + 50
    def sy(x):
        return (1.0 - x) / 2.0 * (height - 40) + 20

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" style="background:#ffffff">',
        f'<rect x="50" y="20" width="{width - 60}" height="{height - 40}" '
        'style="fill:none;stroke:#888888;stroke-width:1"/>',
    ]
    for p in points:
        parts.append(f'<circle cx="{sx(p.u):.2f}" cy="{sy(p.x):.2f}" r="0.6" style="fill:#1f3b73"/>')
    for marker in kneading.BAND_MARKERS:
        if u_min <= marker <= u_max:
            x = sx(marker)
            parts.append(
                f'<line x1="{x:.2f}" y1="20" x2="{x:.2f}" y2="{height - 20}" '
                'style="stroke:#cc2222;stroke-width:1"/>'
            )
            parts.append(
                f'<text x="{x:.2f}" y="14" style="font:10px sans-serif;fill:#cc2222" '
                f'text-anchor="middle">{marker}</text>'
            )
    parts.append(f'<text x="{width / 2:.0f}" y="{height - 4}" style="font:11px sans-serif" '
                 'text-anchor="middle">u</text>')
    parts.append('<text x="12" y="24" style="font:11px sans-serif">x</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def run(argv: list[str], stdout=None, stderr=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help and usage errors
        return int(exc.code or 0)
    try:
        if args.command == "sieve":
            return _cmd_sieve(args, out)
        if args.command == "compose":
            return _cmd_compose(args, out)
        if args.command == "star":
            out.write(words.format_word(words.star_compose(parse_word(args.left), parse_word(args.right))) + "\n")
            return 0
        if args.command == "compare":
            ordering = words.parity_compare(parse_word(args.left), parse_word(args.right), args.horizon)
            out.write(ordering.name.capitalize() + "\n")
            return 0
        if args.command == "admissible":
            out.write(("true" if words.is_admissible(parse_word(args.word), args.horizon) else "false") + "\n")
            return 0
        if args.command == "knead-u":
            res = kneading.u_of_word(parse_word(args.word), horizon=args.horizon, u_tol=args.tol)
            if args.format == "json":
                out.write(json.dumps(res.to_record(), sort_keys=True) + "\n")
            else:
                out.write(f"u = {_fmt(res.u)} (horizon {res.horizon}, matched {res.matched_prefix_len})\n")
            return 0
        if args.command == "itinerary":
            if args.emit == "orbit":
                xs = kneading.iterate_map(args.u, args.x0, args.n)
                out.write("n,x\n")
                for k, x in enumerate(xs, start=1):
                    out.write(f"{k},{_fmt(x)}\n")
            else:
                out.write(words.format_word(kneading.itinerary(args.u, args.n, args.c_tol)) + "\n")
            return 0
        if args.command == "entropy":
            return _cmd_entropy(args, out)
        if args.command == "lyapunov":
            out.write(_fmt(kneading.lyapunov(args.u, args.n, args.burn_in, args.x0)) + "\n")
            return 0
        if args.command == "bifurcation":
            return _cmd_bifurcation(args, out)
        if args.command == "bands":
            out.write(f"{kneading.band_structure(args.u, samples=args.samples)}\n")
            return 0
        if args.command == "goldbach":
            return _cmd_goldbach(args, out)
        if args.command == "twins":
            out.write(f"{numtheory.twin_count(args.lo, args.hi)}\n")
            return 0
        if args.command == "estimate":
            est = numtheory.prime_count_estimate(args.p)
            if args.actual:
                table = numtheory.classic_sieve(args.p * args.p)
                actual = sum(1 for q in table.primes if args.p < q < args.p * args.p)
                out.write(f"{_fmt(est)},{actual},{_fmt(est / actual)}\n")
            else:
                out.write(_fmt(est) + "\n")
            return 0
        if args.command == "verify":
            return _cmd_verify(args, out)
    except (ValueError, kneading.InversionError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    raise AssertionError(f"unhandled command {args.command!r}")  # pragma: no cover


def main() -> None:
    sys.exit(run(sys.argv[1:]))
