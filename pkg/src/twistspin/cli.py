"""Command-line interface.

Subcommands: count, enumerate, verify, distinguish, catalog.  Machine output
is JSON on stdout with a fixed key order (byte-stable across runs for fixed
inputs; opt into wall-clock fields with --timing).  --pretty switches to a
human-readable rendering.

Exit codes: 0 success / verified, 2 usage error, 3 resource guard exceeded,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .catalog import CATALOG, get_knot
from .closed_forms import distinguish
from .enumerator import (
    CountReport,
    EnumerationError,
    OracleGuardError,
    SearchConfig,
    count_reps,
)
from .kernels import KernelConfigError
from .groups import DihedralGroup, FiniteGroup, GroupError, Sl2z3Group, group_from_descriptor
from .presentations import (
    KnotFileError,
    PresentationError,
    WirtingerPresentation,
    build_bts,
    parse_knot_file,
    serialize_knot,
)
from .verifier import run_suite

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_VERIFY_FAIL = 4


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _emit(data: dict) -> None:
    print(json.dumps(data, indent=2))


def _resolve_knot(name_or_path: str) -> WirtingerPresentation:
    try:
        return get_knot(name_or_path)
    except KeyError:
        pass
    path = Path(name_or_path)
    if path.is_file():
        try:
            pres = parse_knot_file(path.read_text(encoding="utf-8"))
        except KnotFileError as exc:
            raise CliError(f"cannot parse knot file {name_or_path}: {exc}") from exc
        if not pres.name:
            pres = WirtingerPresentation(
                pres.num_generators, pres.relators, name=path.stem
            )
        return pres
    raise CliError(
        f"unknown knot {name_or_path!r}: not a catalog name "
        f"({', '.join(CATALOG)}) or readable file"
    )


def _resolve_group(descriptor: str) -> FiniteGroup:
    try:
        return group_from_descriptor(descriptor)
    except GroupError as exc:
        raise CliError(str(exc)) from exc


def _resolve_h_image(group: FiniteGroup, label: str):
    if label == "auto":
        if isinstance(group, Sl2z3Group):
            return group.minus_identity
        if isinstance(group, DihedralGroup):
            return group.central_rotation
        raise CliError(f"no canonical h image for group {group.descriptor}")
    try:
        return group.parse_label(label)
    except GroupError as exc:
        raise CliError(str(exc)) from exc


def _parse_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text.strip())
    if not m:
        raise CliError(f"bad range syntax {text!r}; expected a..b")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise CliError(f"empty range {text!r}")
    return lo, hi


def _run_count(args: argparse.Namespace, dump_all: bool) -> int:
    pres = _resolve_knot(args.knot)
    group = _resolve_group(args.group)
    h_image = _resolve_h_image(group, args.h_image)
    try:
        bts = build_bts(pres, args.m, args.n)
    except PresentationError as exc:
        raise CliError(str(exc)) from exc
    config = SearchConfig(
        h_image=h_image,
        engine=args.engine,
        witness_limit=None if dump_all else args.witnesses,
    )
    try:
        report = count_reps(bts, group, config)
    except OracleGuardError as exc:
        raise CliError(str(exc), code=EXIT_GUARD) from exc
    except EnumerationError as exc:
        raise CliError(str(exc)) from exc
    if args.pretty:
        _print_count_pretty(report, dump_all)
    else:
        _emit(report.to_json_dict(include_runtime=args.timing))
    return EXIT_OK


def _print_count_pretty(report: CountReport, dump_all: bool) -> None:
    print(f"knot:     {report.knot}")
    print(f"m, n:     {report.m}, {report.n}  (beta = {report.beta})")
    print(f"group:    {report.group}   h -> {report.h_image}")
    print(f"engine:   {report.engine}")
    print(f"count:    {report.count}")
    shown = report.witnesses if dump_all else report.witnesses[:10]
    for rep in shown:
        labels = rep.labels()
        print("  " + ", ".join(f"x{i+1} -> {s}" for i, s in enumerate(labels["x"])))
    if len(report.witnesses) > len(shown):
        print(f"  ... {len(report.witnesses) - len(shown)} more")


def _cmd_count(args: argparse.Namespace) -> int:
    return _run_count(args, dump_all=False)


def _cmd_enumerate(args: argparse.Namespace) -> int:
    return _run_count(args, dump_all=True)


def _cmd_verify(args: argparse.Namespace) -> int:
    m_range = _parse_range(args.m_range)
    k_range = _parse_range(args.k_range)
    if k_range[0] < 1:
        raise CliError("k range must start at 1 or above")
    if args.knots.strip() == "all":
        knots = None
    else:
        knots = [s.strip() for s in args.knots.split(",") if s.strip()]
        for name in knots:
            try:
                get_knot(name)
            except KeyError as exc:
                raise CliError(str(exc)) from exc
    report = run_suite(args.suite, m_range=m_range, k_range=k_range, knots=knots)
    if args.pretty:
        for r in report.results:
            print(f"{r.status.upper():24s} {r.check_id}")
        print("overall:", "pass" if report.overall_pass else "fail")
    else:
        _emit(report.to_json_dict(include_runtime=args.timing))
    return EXIT_OK if report.overall_pass else EXIT_VERIFY_FAIL


def _cmd_distinguish(args: argparse.Namespace) -> int:
    k_max = args.kmax if args.kmax is not None else max(abs(args.m1), abs(args.m2), 2)
    if k_max < 1:
        raise CliError("--kmax must be >= 1")
    witness = distinguish(args.m1, args.m2, k_max)
    if witness is None:
        data = {
            "m1": args.m1,
            "m2": args.m2,
            "k_max": k_max,
            "result": "indistinguishable",
            "witness": None,
        }
        if args.pretty:
            print(f"indistinguishable up to k = {k_max} (counts agree for every k)")
        else:
            _emit(data)
        return EXIT_OK
    data = {
        "m1": args.m1,
        "m2": args.m2,
        "k_max": k_max,
        "result": "witness",
        "witness": {"k": witness.k, "count1": witness.count1, "count2": witness.count2},
    }
    if args.pretty:
        print(
            f"k = {witness.k} separates: count(m={args.m1}) = {witness.count1}, "
            f"count(m={args.m2}) = {witness.count2}"
        )
    else:
        _emit(data)
    return EXIT_OK


def _cmd_catalog(args: argparse.Namespace) -> int:
    if args.action == "list":
        entries = [
            {
                "name": entry.name,
                "generators": entry.presentation.num_generators,
                "relators": len(entry.presentation.relators),
                "diagram": entry.citation,
            }
            for entry in CATALOG.values()
        ]
        if args.pretty:
            for e in entries:
                print(
                    f"{e['name']:14s} l={e['generators']}  relators={e['relators']}  ({e['diagram']})"
                )
        else:
            _emit({"knots": entries})
        return EXIT_OK
    # show: canonical knot file for one entry
    if not args.knot:
        raise CliError("catalog show needs --knot")
    pres = _resolve_knot(args.knot)
    sys.stdout.write(serialize_knot(pres))
    return EXIT_OK


def _add_count_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--knot", required=True, help="catalog name or knot file path")
    p.add_argument("--m", type=int, required=True, help="twist parameter (any sign)")
    p.add_argument("--n", type=int, default=1, help="orbit parameter (positive, coprime to m)")
    p.add_argument("--group", required=True, help="target group: sl2z3 or d2k:<k>")
    p.add_argument(
        "--h-image",
        default="auto",
        help="image of the orbit generator: 'auto' (the order-2 central element) "
        "or a canonical element label",
    )
    p.add_argument("--engine", choices=("backtracking", "oracle"), default="backtracking")
    p.add_argument("--timing", action="store_true", help="include wall-clock fields")
    p.add_argument("--pretty", action="store_true", help="human-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistspin",
        description="Count finite-group representations of branched twist spins.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count representations for one parameter set")
    _add_count_args(p)
    p.add_argument("--witnesses", type=int, default=1024, help="witness list cap")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="dump every representation in canonical order")
    _add_count_args(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run the machine-check suite")
    p.add_argument("--suite", choices=("lemmas", "theorems", "all"), default="all")
    p.add_argument("--m-range", default="-6..6", help="a..b")
    p.add_argument("--k-range", default="1..8", help="a..b (dihedral parameters)")
    p.add_argument("--knots", default="all", help="'all' or comma-separated names")
    p.add_argument("--timing", action="store_true", help="include wall-clock fields")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("distinguish", help="find a dihedral count separating two twist parameters")
    p.add_argument("--m1", type=int, required=True)
    p.add_argument("--m2", type=int, required=True)
    p.add_argument("--kmax", type=int, default=None, help="default max(|m1|, |m2|, 2)")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_distinguish)

    p = sub.add_parser("catalog", help="list built-in knots")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("--knot", help="entry to show (with 'show')")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (PresentationError, GroupError, EnumerationError, KernelConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
