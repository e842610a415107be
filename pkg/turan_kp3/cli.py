"""
Command-line front door.

    python -m turan_kp3 value --n 9 --k 2
    python -m turan_kp3 construct --n 4 --k 1 --format edgelist
    python -m turan_kp3 pack --k 2 --input graph.g6
    python -m turan_kp3 verify --n 9 --k 2 --jobs 4 --json
    python -m turan_kp3 lemmas --n 7 --k 2
    python -m turan_kp3 bounds --n 9 --k 2
    python -m turan_kp3 certify --n 20 --k 4

Exit codes: 0 found / agree / certified, 1 not found / disagree, 2 usage or
input error. Results go to stdout, diagnostics and errors to stderr.
"""

import argparse
import json
import sys
from contextlib import redirect_stderr
from typing import List, Optional, TextIO

from pydantic import ValidationError

from .certification import certify_extremal_family
from .config import APP_NAME, APP_VERSION, Settings
from .enumeration import verify_lemmas, verify_turan
from .errors import GraphSizeError, TuranError
from .graph import Graph
from .graph6 import decode_graph6, encode_graph6
from .log import is_verbose, set_verbose
from .packing import contains_k_p3
from .report_cache import cached_verification
from .turan import erdos_gallai_bound, erdos_gallai_is_tight, ex_kp3, extremal_graphs, gorgol_lower_bounds, regime

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="tagged progress messages on stderr")

    instance = _Parser(add_help=False)
    instance.add_argument("--n", type=int, required=True, help="number of vertices")
    instance.add_argument("--k", type=int, required=True, help="number of disjoint P3 copies")

    parser = _Parser(prog=APP_NAME, description="Turán numbers and extremal graphs for k disjoint copies of P3")
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {APP_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("value", parents=[common, instance], help="regime and ex(n, k·P3)")

    p = sub.add_parser("construct", parents=[common, instance], help="print the extremal graphs")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")

    p = sub.add_parser("pack", parents=[common], help="test a graph6 graph for k·P3")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--input", default="-", help="graph6 file, or - for stdin")

    p = sub.add_parser("verify", parents=[common, instance], help="exhaustive check of the formula (n <= 10)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--depth", type=int, default=None, help="partition depth for --jobs > 1")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--refresh", action="store_true", help="ignore cached reports")

    p = sub.add_parser("lemmas", parents=[common, instance], help="structural lemma sweep (n <= 8, k in {2,3})")
    p.add_argument("--json", action="store_true")

    sub.add_parser("bounds", parents=[common, instance], help="classical bound and both lower-bound constructions")

    p = sub.add_parser("certify", parents=[common, instance], help="certify the extremal family (n <= 24)")
    p.add_argument("--json", action="store_true")
    return parser


def _settings(args: argparse.Namespace) -> Settings:
    fields = {"verbose": args.verbose}
    if args.command == "verify":
        fields.update(jobs=args.jobs, cache_dir=args.cache_dir, refresh=args.refresh)
        if args.depth is not None:
            fields["partition_depth"] = args.depth
    try:
        return Settings(**fields)
    except ValidationError as e:
        detail = "; ".join(f"{'.'.join(map(str, err['loc']))}: {err['msg']}" for err in e.errors())
        raise UsageError(detail) from None


def _edge_lines(g: Graph) -> List[str]:
    return [f"{u} {v}" for u, v in g.edges()]


def _read_graph6(source: str, stdin: TextIO) -> Graph:
    # raw bytes, so stray non-ASCII input surfaces as a graph6 error
    if source != "-":
        with open(source, "rb") as f:
            data = f.read()
    elif hasattr(stdin, "buffer"):
        data = stdin.buffer.read()
    else:
        data = stdin.read().encode("utf-8", errors="surrogateescape")
    line = next((ln.strip() for ln in data.splitlines() if ln.strip()), b"")
    return decode_graph6(line)


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_value(args: argparse.Namespace, out: TextIO) -> int:
    out.write(f"{regime(args.n, args.k).value} {ex_kp3(args.n, args.k)}\n")
    return EXIT_OK


def cmd_construct(args: argparse.Namespace, out: TextIO) -> int:
    family = extremal_graphs(args.n, args.k)
    if not family.realized:
        labels = ", ".join(d.label for d in family.descriptors)
        raise GraphSizeError(f"{labels}: too large to build (n={args.n})")
    if args.format == "graph6":
        for g in family.graphs:
            out.write(encode_graph6(g).decode("ascii") + "\n")
    else:
        blocks = ["\n".join(_edge_lines(g)) for g in family.graphs]
        out.write("\n\n".join(blocks) + "\n")
    return EXIT_OK


def cmd_pack(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    if args.k < 0:
        raise UsageError(f"--k must be >= 0 (got {args.k})")
    g = _read_graph6(args.input, stdin)
    found, witness = contains_k_p3(g, args.k)
    out.write(_yes_no(found) + "\n")
    if not found:
        return EXIT_NEGATIVE
    for x, y, z in witness:
        out.write(f"{x} {y} {z}\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings, out: TextIO, err: TextIO) -> int:
    report = cached_verification(
        args.n,
        args.k,
        lambda: verify_turan(args.n, args.k, jobs=settings.jobs, depth=settings.partition_depth),
        cache_dir=settings.cache_dir,
        force_refresh=settings.refresh,
    )
    if args.json:
        out.write(json.dumps(report.to_json_dict()) + "\n")
    else:
        doc = report.to_json_dict()
        doc.pop("elapsed_ms")
        for key, value in doc.items():
            if isinstance(value, list):
                value = " ".join(value)
            elif isinstance(value, bool):
                value = _yes_no(value)
            out.write(f"{key}: {value}\n")
        err.write(f"[verify] elapsed: {report.elapsed_ms} ms\n")
    return EXIT_OK if report.agree else EXIT_NEGATIVE


def cmd_lemmas(args: argparse.Namespace, out: TextIO) -> int:
    report = verify_lemmas(args.n, args.k)
    if args.json:
        doc = report.model_dump(mode="json", exclude={"elapsed_ms"})
        doc["violation_count"] = report.violation_count
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"graphs_scanned: {report.graphs_scanned}\n")
        out.write(f"graphs_checked: {report.graphs_checked}\n")
        for s in report.summaries:
            out.write(f"{s.kind.value}: applied={s.applied} skipped={s.skipped} violations={len(s.violations)}\n")
            for rec in s.violations:
                v = rec.violation
                out.write(f"  {rec.graph6} {v.clause} observed={v.observed} allowed={v.allowed}\n")
        for code in report.shape_failures:
            out.write(f"shape-failure: {code}\n")
        out.write(f"violations: {report.violation_count}\n")
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_bounds(args: argparse.Namespace, out: TextIO) -> int:
    n, k = args.n, args.k
    lower = gorgol_lower_bounds(n, k)
    out.write(f"erdos_gallai_p3: {erdos_gallai_bound(n, 3)} tight={_yes_no(erdos_gallai_is_tight(n, 3))}\n")
    out.write(f"clique_side: {lower.clique_side} K_{3 * k - 1} ∪ M_{n - 3 * k + 1}\n")
    out.write(f"hub_side: {lower.hub_side} K_{k - 1} + M_{n - k + 1}\n")
    out.write(f"best: {lower.best} attained_by={lower.attained_by}\n")
    out.write(f"ex: {ex_kp3(n, k)}\n")
    return EXIT_OK


def cmd_certify(args: argparse.Namespace, out: TextIO) -> int:
    report = certify_extremal_family(args.n, args.k)
    if args.json:
        doc = report.model_dump(mode="json", exclude={"elapsed_ms"})
        doc["certified"] = report.certified
        out.write(json.dumps(doc) + "\n")
    else:
        for g in report.graphs:
            out.write(
                f"{g.label} {g.graph6} edges={g.edge_count} "
                f"free={_yes_no(g.k_p3_free)} saturated={_yes_no(g.saturated)}\n"
            )
        out.write(f"certified: {_yes_no(report.certified)}\n")
    return EXIT_OK if report.certified else EXIT_NEGATIVE


def _dispatch(args: argparse.Namespace, settings: Settings, out: TextIO, err: TextIO, inp: TextIO) -> int:
    if args.command == "value":
        return cmd_value(args, out)
    if args.command == "construct":
        return cmd_construct(args, out)
    if args.command == "pack":
        return cmd_pack(args, out, inp)
    if args.command == "verify":
        return cmd_verify(args, settings, out, err)
    if args.command == "lemmas":
        return cmd_lemmas(args, out)
    if args.command == "bounds":
        return cmd_bounds(args, out)
    return cmd_certify(args, out)


def run(
    argv: Optional[List[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
    stdin: Optional[TextIO] = None,
) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    inp = stdin or sys.stdin
    was_verbose = is_verbose()
    try:
        args = build_parser().parse_args(argv)
        settings = _settings(args)
        set_verbose(settings.verbose)
        # tagged diagnostics follow the caller's error stream
        with redirect_stderr(err):
            return _dispatch(args, settings, out, err, inp)
    except (UsageError, TuranError, OSError) as e:
        err.write(f"error: {e}\n")
        return EXIT_ERROR
    except SystemExit as e:
        # --help / --version
        return e.code if isinstance(e.code, int) else EXIT_OK
    finally:
        set_verbose(was_verbose)


def main() -> int:
    return run(sys.argv[1:])
