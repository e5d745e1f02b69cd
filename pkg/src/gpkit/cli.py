"""Command-line front end: ``gp compute|check|generate|recognize|enumerate|verify``.

Graph input comes from ``--g6 STR``, ``--input FILE`` (``-`` for stdin) or,
when neither is given, stdin.  ``--json`` switches any subcommand to
newline-delimited JSON on stdout; logs and progress go to stderr.

Family instances are written as a label followed by ``key=value`` pairs, list
values bracketed and comma-separated with no spaces inside the brackets::

    gp generate --family F2 --params "r=[2,1] s=[1] t=[]"
    gp generate --family F7 --params "n=[1,1] S=[[0],[0]] T=[[0],[0]]"

Attachment sets (``S``, ``T``, ``Q``, ``M``) are 0-based indices inside the
clique block they refer to; :mod:`gpkit.families` lists every key.

Orders for ``verify --n`` are a single integer or an inclusive range ``4..7``.

Exit codes: 0 success, 1 input error, 2 usage error, 3 a check was falsified.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import IO, Any, Optional, Sequence

from gpkit import families, verifier
from gpkit.enumeration import GraphStream, enumerate_graphs, read_graph6_stream
from gpkit.gp import distances, eta, gp_certificate, gp_exact, is_gp_definitional, is_gp_structural
from gpkit.graph import Graph, GraphError, clique_number, girth
from gpkit.graph6 import to_graph6

EXIT_OK, EXIT_INPUT, EXIT_USAGE, EXIT_FALSIFIED = 0, 1, 2, 3

log = logging.getLogger("gpkit")


class InputError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"4..7"`` -> ``[4, 5, 6, 7]``; ``"5"`` -> ``[5]``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
        else:
            lo_i = hi_i = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo_i, hi_i + 1))


def parse_vertex_set(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertices, got {text!r}") from None


def _default_jobs() -> int:
    raw = os.environ.get("GPKIT_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        log.warning("ignoring non-integer GPKIT_JOBS=%r", raw)
        return 1


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="FILE", help="graph6 file, one graph per line ('-' for stdin)")
    src.add_argument("--g6", metavar="STR", help="a single inline graph6 record")
    p.add_argument("--lenient", action="store_true", help="skip malformed lines instead of failing")
    p.add_argument("--dedup", action="store_true", help="drop graphs isomorphic to an earlier one")


def _read_graphs(args, stdin: IO[str]) -> GraphStream:
    strict = not args.lenient
    if args.g6 is not None:
        return read_graph6_stream([args.g6], strict=True, provenance="--g6")
    if args.input is None or args.input == "-":
        return read_graph6_stream(stdin, strict=strict, dedup=args.dedup, provenance="stdin")
    try:
        with open(args.input, "rb") as fh:
            return read_graph6_stream(fh, strict=strict, dedup=args.dedup, provenance=args.input)
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror}") from None


def _emit(out: IO[str], record: dict[str, Any]) -> None:
    out.write(json.dumps(record, sort_keys=True) + "\n")


def _fmt_set(vs) -> str:
    return "{" + ",".join(str(v) for v in sorted(vs)) + "}"


# ---------------------------------------------------------------- compute


def compute_row(g: Graph) -> dict[str, Any]:
    """Invariants of one connected graph, keyed as in the JSON output."""
    dist = distances(g)
    if not dist.connected:
        raise GraphError("graph is disconnected")
    res = gp_exact(g, dist)
    return {
        "graph6": to_graph6(g),
        "n": g.order,
        "diameter": dist.max_distance(),
        "girth": girth(g),
        "omega": clique_number(g),
        "eta": eta(g),
        "gp": res.value,
        "witness": sorted(res.witness),
    }


def _safe_row(g: Graph):
    try:
        return compute_row(g)
    except GraphError as exc:
        return str(exc)


def cmd_compute(args, out: IO[str], stdin: IO[str]) -> int:
    stream = _read_graphs(args, stdin)
    rows = verifier._map(_safe_row, stream.graphs, args.jobs)
    status = EXIT_OK
    for i, row in enumerate(rows, 1):
        if isinstance(row, str):
            log.error("graph %d (%s): %s", i, to_graph6(stream.graphs[i - 1]), row)
            status = EXIT_INPUT
            continue
        if args.json:
            _emit(out, row)
        else:
            out.write(
                f"{row['graph6']} n={row['n']} diameter={row['diameter']} "
                f"girth={'-' if row['girth'] is None else row['girth']} omega={row['omega']} "
                f"eta={row['eta']} gp={row['gp']} witness={_fmt_set(row['witness'])}\n"
            )
    return status if not stream.errors else EXIT_INPUT


# ------------------------------------------------------------------ check


def cmd_check(args, out: IO[str], stdin: IO[str]) -> int:
    stream = _read_graphs(args, stdin)
    if len(stream) != 1:
        raise InputError(f"check takes exactly one graph, got {len(stream)}")
    g = stream.graphs[0]
    bad = [v for v in args.set if not 0 <= v < g.order]
    if bad:
        raise InputError(f"vertices {bad} are outside 0..{g.order - 1}")
    dist = distances(g)
    if not dist.connected:
        raise InputError("graph is disconnected")
    s = sorted(set(args.set))
    definitional = is_gp_definitional(g, s, dist)
    structural = is_gp_structural(g, s, dist)
    cert = gp_certificate(g, s, dist) if structural else None
    record = {
        "graph6": to_graph6(g),
        "set": s,
        "definitional": definitional,
        "structural": structural,
        "certificate": None
        if cert is None
        else {"blocks": [sorted(b) for b in cert.blocks], "block_distance": [list(r) for r in cert.block_distance]},
    }
    if args.json:
        _emit(out, record)
    else:
        out.write(f"{record['graph6']} set={_fmt_set(s)}\n")
        out.write(f"definitional: {'pass' if definitional else 'fail'}\n")
        out.write(f"structural: {'pass' if structural else 'fail'}\n")
        if cert is not None:
            out.write("blocks: " + " ".join(_fmt_set(b) for b in cert.blocks) + "\n")
            for row in cert.block_distance:
                out.write("  " + " ".join("-" if d is None else str(d) for d in row) + "\n")
    return EXIT_OK if definitional == structural else EXIT_FALSIFIED


# --------------------------------------------------------------- generate


def cmd_generate(args, out: IO[str], stdin: IO[str]) -> int:
    try:
        inst = families.parse_instance(f"{args.family} {args.params}")
        g = families.generate(inst, strict=args.strict)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    g6 = to_graph6(g)
    if args.json:
        _emit(out, {"instance": inst.to_text(), "n": g.order, "edges": [list(e) for e in g.edges()], "graph6": g6})
    elif args.emit == "g6":
        out.write(g6 + "\n")
    elif args.emit == "edges":
        out.write(f"{g.order} {g.size()}\n")
        for u, v in g.edges():
            out.write(f"{u} {v}\n")
    else:
        out.write(f"{inst.to_text()} n={g.order} m={g.size()} graph6={g6}\n")
    return EXIT_OK


# -------------------------------------------------------------- recognize


def cmd_recognize(args, out: IO[str], stdin: IO[str]) -> int:
    stream = _read_graphs(args, stdin)
    status = EXIT_OK
    for i, g in enumerate(stream, 1):
        g6 = to_graph6(g)
        try:
            res = families.recognize(g, strict=args.strict)
        except GraphError as exc:
            log.error("graph %d (%s): %s", i, g6, exc)
            status = EXIT_INPUT
            continue
        if args.json:
            _emit(out, {
                "graph6": g6,
                "families": res.matched_labels,
                "matches": [{"instance": m.instance.to_text(), "roles": list(m.roles)} for m in res.matches],
            })
            continue
        out.write(f"{g6} families={','.join(res.matched_labels) or '-'}\n")
        for m in res.matches:
            out.write(f"  {m.instance.to_text()} roles={list(m.roles)}\n")
    return status if not stream.errors else EXIT_INPUT


# -------------------------------------------------------------- enumerate


def cmd_enumerate(args, out: IO[str], stdin: IO[str]) -> int:
    try:
        stream = enumerate_graphs(args.n, connected=args.connected)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    for g in stream:
        if args.json:
            _emit(out, {"graph6": to_graph6(g), "n": g.order, "m": g.size()})
        else:
            out.write(to_graph6(g) + "\n")
    return EXIT_OK


# ----------------------------------------------------------------- verify


def run_check(args, sink) -> verifier.Report:
    ns = args.n
    kw = {"jobs": args.jobs, "sink": sink}
    if args.check == "main":
        return verifier.verify_main_theorem(ns, strict=args.strict, **kw)
    if args.check == "bound":
        return verifier.verify_bound(ns, **kw)
    if args.check == "diam2":
        return verifier.verify_diam2_formula(ns, **kw)
    if args.check == "cycles":
        return verifier.verify_cycles(max(ns), sink=sink)
    if args.check == "agreement":
        samples = 100_000 if args.samples is None else args.samples
        return verifier.verify_checker_agreement(ns, samples=samples, seed=args.seed, labeled=args.labeled, **kw)
    if args.check == "nminus1":
        return verifier.verify_n_minus_1(ns, **kw)
    if args.check == "oracle":
        samples = 10_000 if args.samples is None else args.samples
        return verifier.verify_oracle(ns, samples=samples, seed=args.seed, **kw)
    return verifier.verify_families(max(ns), strict=args.strict, **kw)


def cmd_verify(args, out: IO[str], stdin: IO[str]) -> int:
    sink = sys.stderr if args.progress else None
    try:
        report = run_check(args, sink)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    if args.json:
        report.write_jsonl(out, timing=args.timing)
    else:
        out.write(report.human(timing=args.timing) + "\n")
        if args.check == "cycles":
            for n, value in sorted(report.detail["gp"].items()):
                out.write(f"  C{n} gp={value}\n")
    return EXIT_OK if report.ok else EXIT_FALSIFIED


# ----------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gp", description="General position numbers of small graphs.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at debug level on stderr")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="newline-delimited JSON output")
        return p

    p = add("compute", "n, diameter, girth, omega, eta, gp and a gp-set of each graph")
    _add_input(p)
    p.add_argument("--jobs", type=int, default=_default_jobs(), help="worker processes (default $GPKIT_JOBS or 1)")
    p.set_defaults(func=cmd_compute)

    p = add("check", "test one vertex set with both general position checkers")
    _add_input(p)
    p.add_argument("--set", type=parse_vertex_set, required=True, metavar="V,V,...")
    p.set_defaults(func=cmd_check)

    p = add("generate", "build a member of one of the families F1..F8")
    p.add_argument("--family", required=True, type=str.upper, choices=families.LABELS)
    p.add_argument("--params", default="", help='e.g. "r=[2,1] s=[1] t=[]"')
    p.add_argument("--emit", choices=("summary", "g6", "edges"), default="summary")
    p.add_argument("--strict", action="store_true", help="literal family constraints")
    p.set_defaults(func=cmd_generate)

    p = add("recognize", "families F1..F8 containing each graph, with vertex roles")
    _add_input(p)
    p.add_argument("--strict", action="store_true", help="literal family constraints")
    p.set_defaults(func=cmd_recognize)

    p = add("enumerate", "one graph6 line per isomorphism class of order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true", help="connected graphs only")
    p.set_defaults(func=cmd_enumerate)

    p = add("verify", "run a machine check and report counterexamples")
    p.add_argument("--check", required=True, choices=verifier.CHECKS)
    p.add_argument("--n", type=parse_range, required=True, metavar="N|LO..HI")
    p.add_argument("--strict", action="store_true", help="literal family constraints (main, families)")
    p.add_argument("--samples", type=int, default=None, help="random samples (agreement, oracle)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--labeled", action="store_true", help="agreement over labelled graphs")
    p.add_argument("--timing", action="store_true", help="include durations (output no longer reproducible)")
    p.add_argument("--progress", action="store_true", help="stream JSON progress records to stderr")
    p.add_argument("--jobs", type=int, default=_default_jobs(), help="worker processes (default $GPKIT_JOBS or 1)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[IO[str]] = None,
         stdin: Optional[IO[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    if getattr(args, "jobs", 1) < 1:
        sys.stderr.write("gp: --jobs must be at least 1\n")
        return EXIT_USAGE
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    try:
        return args.func(args, out, stdin)
    except (InputError, GraphError) as exc:
        sys.stderr.write(f"gp: error: {exc}\n")
        return EXIT_INPUT
    except BrokenPipeError:
        return EXIT_OK


def run(argv: Sequence[str]) -> int:
    return main(list(argv))


if __name__ == "__main__":
    sys.exit(main())
