"""Command-line interface.

::

    treebij verify {lacasse|hurwitz|counts|tables|bijections} [flags]
    treebij table {w|f} --n N [--format csv|json]
    treebij map {fn-to-tree|tree-to-fn|merge|split|joyal|joyal-inv} [-i FILE] [-o FILE]
    treebij sample {tree|fn} --n N --seed S
    treebij selftest

Exit status: 0 success, 1 verification failure, 2 usage or input error.
``verify`` and ``selftest`` print one JSON run report per sweep on stdout and
a short summary on stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Optional

from . import bijections as bij
from . import checks
from . import identities as ids
from .errors import CapExceeded, TreeBijError
from .generation import sample_function, sample_triply_rooted
from .jsonio import (
    FormatError,
    dumps,
    function_from_obj,
    function_to_obj,
    tree_from_obj,
    tree_to_obj,
    triple_from_obj,
    triple_to_obj,
)
from .trees import DoublyRootedTree, TriplyRootedTree

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    checks_run: int
    first_failure: Optional[dict]
    elapsed_ms: int

    @property
    def status(self) -> str:
        return "fail" if self.first_failure is not None else "pass"

    def to_obj(self) -> dict:
        return {
            "command": self.command,
            "status": self.status,
            "checks_run": self.checks_run,
            "first_failure": self.first_failure,
            "elapsed_ms": self.elapsed_ms,
        }


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _seed(text: str) -> int:
    value = _nonnegative(text)
    if value >= 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def _cap_default() -> int:
    try:
        return ids.default_cap()
    except ValueError:
        raise UsageError(f"TREEBIJ_CAP must be an integer, got {os.environ['TREEBIJ_CAP']!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treebij",
        description="Bijections on doubly/triply rooted trees and exact identity checks.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def io_flags(p, inp=True):
        if inp:
            p.add_argument("-i", "--input", help="input JSON file (default stdin)")
        p.add_argument("-o", "--output", help="output file (default stdout)")

    verify = sub.add_parser("verify", help="run an exact verification sweep")
    vsub = verify.add_subparsers(dest="what", required=True)
    p = vsub.add_parser("lacasse")
    p.add_argument("--n-max", type=_positive, default=30)
    p = vsub.add_parser("hurwitz")
    p.add_argument("--n-max", type=_nonnegative, default=8)
    p.add_argument("--m-max", type=_positive, default=4)
    p.add_argument("--trials", type=_nonnegative, default=100)
    p.add_argument("--seed", type=_seed, default=0)
    for name, default in (("counts", 5), ("tables", 6), ("bijections", 5)):
        p = vsub.add_parser(name)
        p.add_argument("--n-max", type=_positive, default=default)
        p.add_argument("--cap", type=_positive, help="brute-force size cap (default $TREEBIJ_CAP or 6)")

    table = sub.add_parser("table", help="emit a refined count table")
    table.add_argument("which", choices=["w", "f"])
    table.add_argument("--n", type=_positive, required=True)
    table.add_argument("--format", choices=["csv", "json"], default="csv")
    table.add_argument("--brute", action="store_true", help="tally by enumeration instead of the formula")
    table.add_argument("--cap", type=_positive)
    io_flags(table, inp=False)

    mp = sub.add_parser("map", help="apply a bijection to a JSON object")
    mp.add_argument(
        "direction",
        choices=["fn-to-tree", "tree-to-fn", "merge", "split", "joyal", "joyal-inv"],
    )
    io_flags(mp)

    sample = sub.add_parser("sample", help="draw a uniform random object")
    sample.add_argument("kind", choices=["tree", "fn"])
    sample.add_argument("--n", type=_positive, required=True)
    sample.add_argument("--seed", type=_seed, default=0)
    io_flags(sample, inp=False)

    st = sub.add_parser("selftest", help="run every verification sweep at default sizes")
    st.add_argument("--cap", type=_positive)
    return parser


def _read_json(path: Optional[str]):
    try:
        if path is None or path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except OSError as exc:
        raise UsageError(f"cannot read input: {exc}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"input is not valid JSON: {exc}") from None


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _do_map(direction: str, obj) -> object:
    if direction == "fn-to-tree":
        return tree_to_obj(bij.phi_forward(function_from_obj(obj)))
    if direction == "joyal":
        return tree_to_obj(bij.joyal_forward(function_from_obj(obj)))
    if direction == "merge":
        return tree_to_obj(bij.merge(triple_from_obj(obj)))
    tree = tree_from_obj(obj)
    if direction == "joyal-inv":
        if not isinstance(tree, DoublyRootedTree):
            raise FormatError('joyal-inv expects a doubly rooted tree ("roots": [r1, r2])')
        return function_to_obj(bij.joyal_inverse(tree))
    if not isinstance(tree, TriplyRootedTree):
        raise FormatError(f'{direction} expects a triply rooted tree ("roots": [r1, r2, r3])')
    if direction == "tree-to-fn":
        return function_to_obj(bij.phi_inverse(tree))
    return triple_to_obj(bij.split(tree))


def _table_text(table: dict, fmt: str) -> str:
    rows = sorted(table.items())
    if fmt == "json":
        return dumps([{"i": i, "j": j, "count": c} for (i, j), c in rows])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["i", "j", "count"])
    for (i, j), c in rows:
        writer.writerow([i, j, c])
    return buf.getvalue()


def _timed(command: str, fn, *args) -> RunReport:
    start = time.perf_counter()
    result = fn(*args)
    elapsed = int((time.perf_counter() - start) * 1000)
    return RunReport(command, result.checks_run, result.first_failure, elapsed)


def _bijection_sweeps(n_max: int):
    return [
        ("merge-split", checks.merge_split, (n_max,)),
        ("phi", checks.phi, (n_max,)),
        ("joyal", checks.joyal, (n_max,)),
    ]


def _verify_plan(args, cap: int) -> list:
    what = args.what
    if what == "lacasse":
        return [("lacasse", checks.lacasse, (args.n_max,))]
    if what == "hurwitz":
        return [("hurwitz", checks.hurwitz, (args.n_max, args.m_max, args.trials, args.seed))]
    if args.n_max > cap and what in ("counts", "tables"):
        raise CapExceeded(f"--n-max {args.n_max} exceeds the brute-force cap {cap}; raise --cap")
    if what == "counts":
        return [("counts", checks.counts, (args.n_max, cap))]
    if what == "tables":
        return [("tables", checks.tables, (args.n_max, cap))]
    return _bijection_sweeps(args.n_max)


def _selftest_plan(cap: int) -> list:
    small = min(5, cap)
    return [
        ("lacasse", checks.lacasse, (30,)),
        ("hurwitz", checks.hurwitz, (8, 4, 100, 0)),
        ("counts", checks.counts, (small, cap)),
        ("tables", checks.tables, (cap, cap)),
        *_bijection_sweeps(small),
    ]


def _run_plan(prefix: str, plan: list) -> int:
    failed = False
    for name, fn, fargs in plan:
        report = _timed(f"{prefix} {name}".strip(), fn, *fargs)
        sys.stdout.write(dumps(report.to_obj()))
        print(f"{report.command}: {report.checks_run} checks, {report.status} "
              f"({report.elapsed_ms} ms)", file=sys.stderr)
        if report.first_failure is not None:
            print(f"first counterexample: {json.dumps(report.first_failure)}", file=sys.stderr)
            failed = True
    return EXIT_FAIL if failed else EXIT_OK


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        cap = getattr(args, "cap", None) or _cap_default()
        if args.cmd == "verify":
            return _run_plan(f"verify", _verify_plan(args, cap))
        if args.cmd == "selftest":
            return _run_plan("selftest", _selftest_plan(cap))
        if args.cmd == "table":
            if args.brute:
                table = (ids.w_count_brute if args.which == "w" else ids.f_count_brute)(args.n, cap)
            else:
                table = (ids.w_table if args.which == "w" else ids.f_table)(args.n)
            _write(_table_text(table, args.format), args.output)
            return EXIT_OK
        if args.cmd == "map":
            _write(dumps(_do_map(args.direction, _read_json(args.input))), args.output)
            return EXIT_OK
        if args.cmd == "sample":
            if args.kind == "tree":
                obj = tree_to_obj(sample_triply_rooted(args.n, args.seed))
            else:
                obj = function_to_obj(sample_function(args.n, args.seed))
            _write(dumps(obj), args.output)
            return EXIT_OK
    except (TreeBijError, UsageError) as exc:
        print(f"treebij: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    parser.error(f"unknown command {args.cmd}")  # pragma: no cover


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
