"""Command-line entry point.

Exit codes: 0 on success, 1 when a cross-check or invariant check fails,
2 on bad input or an unmet precondition (one line on stderr).
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional, Sequence

from .checks import run_checks
from .decomposition import tight_cut_decomposition
from .dp import forcing_spectrum_dp
from .errors import OuterforceError
from .formats import (
    decomposition_text,
    emit_spectrum_report,
    export_decomposition_dot,
    parse_edge_list,
    spectrum_report,
)
from .graph import Graph
from .matching import cover_graph, has_perfect_matching
from .oracle import ladder, random_mc_outerplanar


class _Failure(Exception):
    """Raised by a command to exit with status 1 after printing its output."""


def _read_graph(path: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise OuterforceError(f"cannot read {path}: {exc.strerror}") from None
    return parse_edge_list(text)


def _write(text: str) -> None:
    sys.stdout.write(text)


def cmd_spectrum(args: argparse.Namespace) -> None:
    g = _read_graph(args.file)
    report, mismatch = spectrum_report(g, args.method, timing=not args.no_timing)
    _write(emit_spectrum_report(report, args.format))
    if mismatch:
        raise _Failure(mismatch)


def cmd_cover(args: argparse.Namespace) -> None:
    _write(cover_graph(_read_graph(args.file)).edge_list())


def cmd_decompose(args: argparse.Namespace) -> None:
    g = _read_graph(args.file)
    d = tight_cut_decomposition(g)
    _write(decomposition_text(d))
    if args.dot is None:
        return
    dot = export_decomposition_dot(d, g)
    if args.dot == "-":
        _write(dot)
    else:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)


def cmd_check(args: argparse.Namespace) -> None:
    g = _read_graph(args.file)
    if not has_perfect_matching(g):
        raise OuterforceError("no perfect matching")
    results = run_checks(g)
    for name, ok, detail in results:
        line = f"{'PASS' if ok else 'FAIL'} {name}"
        _write(f"{line}: {detail}\n" if detail else line + "\n")
    failed = [name for name, ok, _ in results if not ok]
    if failed:
        raise _Failure(f"{len(failed)} check(s) failed")


def cmd_gen(args: argparse.Namespace) -> None:
    if args.kind == "ladder":
        if args.k is None:
            raise OuterforceError("--kind ladder needs --k")
        g = ladder(args.k)
    else:
        if args.n is None or args.seed is None:
            raise OuterforceError("--kind random needs --n and --seed")
        g = random_mc_outerplanar(args.n, args.seed)
    _write(g.edge_list())


def cmd_bench(args: argparse.Namespace) -> None:
    _write("k n spectrum elapsed_ms\n")
    for k in range(args.step, args.max_k + 1, args.step):
        g = ladder(k)
        start = time.perf_counter()
        spec = forcing_spectrum_dp(g)
        elapsed = 0 if args.no_timing else round((time.perf_counter() - start) * 1000)
        braced = "{" + ",".join(map(str, spec.sorted())) + "}"
        _write(f"{k} {g.n} {braced} {elapsed}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="outerforce", description="Forcing spectra of outerplanar graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spectrum", help="compute the forcing spectrum")
    s.add_argument("file", help="edge-list file, or - for stdin")
    s.add_argument("--method", choices=["dp", "bf", "both"], default="dp")
    s.add_argument("--format", choices=["json", "text"], default="json")
    s.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("cover", help="print the cover graph as an edge list")
    s.add_argument("file")
    s.set_defaults(func=cmd_cover)

    s = sub.add_parser("decompose", help="print the tight cut decomposition")
    s.add_argument("file")
    s.add_argument("--dot", metavar="OUT", help="also write DOT to OUT (- for stdout)")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("check", help="cross-check the DP and structural invariants")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("gen", help="print a generated graph")
    s.add_argument("--kind", choices=["ladder", "random"], required=True)
    s.add_argument("--k", type=_positive)
    s.add_argument("--n", type=int)
    s.add_argument("--seed", type=int)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("bench", help="time the DP on ladders")
    s.add_argument("--kind", choices=["ladder"], default="ladder")
    s.add_argument("--max-k", type=_positive, required=True)
    s.add_argument("--step", type=_positive, default=10)
    s.add_argument("--no-timing", action="store_true")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except _Failure as exc:
        sys.stdout.flush()
        print(f"outerforce: {exc}", file=sys.stderr)
        return 1
    except (OuterforceError, ValueError) as exc:
        print(f"outerforce: {_one_line(exc)}", file=sys.stderr)
        return 2
    return 0


def _one_line(exc: BaseException) -> str:
    text = str(exc) if not isinstance(exc, KeyError) else str(exc.args[0] if exc.args else exc)
    return " ".join(text.split()) or type(exc).__name__


if __name__ == "__main__":
    sys.exit(main())
