"""Acceptance gate: one test per criterion, each at its stated bound.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""
import time
from pathlib import Path

import pytest

from conftest import ACCEPTANCE_LINES
from treebij import checks
from treebij import identities as ids
from treebij.bijections import RootedTriple, merge, orbit_report, phi_forward, phi_inverse, split
from treebij.cli import run
from treebij.jsonio import canonicalize
from treebij.trees import DoublyRootedTree, FiniteFunction, validate_tree

CORPUS = sorted((Path(__file__).parent / "data" / "functions").glob("*.json"))


def _record(number, title, failures, elapsed, limit):
    ok = not failures and elapsed < limit
    line = f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {elapsed:.2f}s (limit {limit}s)"
    if failures:
        line += " | " + "; ".join(failures)
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failures, failures
    assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"


def _sweep(failures, name, result):
    if not result.passed:
        failures.append(f"{name} failed after {result.checks_run} checks: {result.first_failure}")


def drt(labels, edges, r1, r2):
    return DoublyRootedTree(validate_tree(labels, edges), r1, r2)


def test_1_lacasse(capsys):
    failures = []
    start = time.perf_counter()
    _sweep(failures, "lacasse", checks.lacasse(30))
    w = ids.lacasse_check(2)
    if (w.xi_scaled, w.xi2_scaled, w.triple_sum, w.power) != (10, 18, 8, 8):
        failures.append(f"n=2 witness {w}")
    code = run(["verify", "lacasse", "--n-max", "30"])
    if code != 0:
        failures.append(f"CLI exit {code}")
    elapsed = time.perf_counter() - start
    capsys.readouterr()
    _record(1, "Lacasse identity, n <= 30, exact", failures, elapsed, 1)


def test_2_hurwitz():
    failures = []
    start = time.perf_counter()
    _sweep(failures, "hurwitz", checks.hurwitz(n_max=8, m_max=4, trials=100, seed=0))
    for n in range(1, 9):
        if ids.abel_poly([0, 0], [0, 0], n) != ids.xi_scaled(n):
            failures.append(f"A_{n}(0,0;0,0) != n^n xi({n})")
        if ids.abel_poly([0, 0, 0], [0, 0, 0], n) != ids.xi2_scaled(n):
            failures.append(f"A_{n}(0,0,0;0,0,0) != n^n xi2({n})")
    elapsed = time.perf_counter() - start
    _record(2, "Hurwitz p=0 identity, m<=4, n<=8, 100 seeded x-vectors", failures, elapsed, 5)


def test_3_merge_split():
    failures = []
    start = time.perf_counter()
    _sweep(failures, "merge/split", checks.merge_split(5))

    fig2 = RootedTriple(
        drt([1, 3, 6, 8, 9, 12], [(6, 12), (6, 8), (12, 9), (8, 3), (8, 1)], 6, 12),
        drt([2, 10], [(2, 10)], 2, 2),
        drt([4, 5, 7, 11], [(5, 4), (4, 7), (4, 11)], 5, 4),
    )
    t = merge(fig2)
    want = {(6, 12), (6, 8), (9, 12), (3, 8), (1, 8), (2, 10), (4, 5), (4, 7), (4, 11), (2, 12), (5, 12)}
    if t.tree.edges != want or t.roots != (6, 2, 4) or split(t) != fig2:
        failures.append("Figure 2 merge mismatch")

    fig3 = RootedTriple(
        drt([1, 3, 6, 8, 9, 10], [(6, 10), (6, 8), (10, 9), (8, 3), (8, 1)], 6, 10),
        None,
        drt([2, 4, 5, 7], [(5, 4), (4, 7), (4, 2)], 5, 4),
    )
    t = merge(fig3)
    want = {(6, 10), (6, 8), (9, 10), (3, 8), (1, 8), (4, 5), (4, 7), (2, 4), (5, 10)}
    if t.tree.edges != want or t.roots != (6, 10, 4) or split(t) != fig3:
        failures.append("Figure 3 merge mismatch")
    elapsed = time.perf_counter() - start
    _record(3, "merge/split mutually inverse on T_n and Q_n, n <= 5; Figures 2, 3", failures, elapsed, 30)


def test_4_phi(f13_values, fig6_edges):
    failures = []
    start = time.perf_counter()
    _sweep(failures, "phi", checks.phi(5))
    f = FiniteFunction.from_values(f13_values, 12)
    t = phi_forward(f)
    if t.tree != validate_tree(range(1, 13), fig6_edges) or t.roots != (2, 3, 4):
        failures.append(f"Figure 6 mismatch: roots {t.roots}")
    if phi_inverse(t) != f:
        failures.append("Figure 6 inverse mismatch")
    rep = orbit_report(f)
    if rep.orbit != (3, 8, 6, 12, 2) or rep.periodic != (2, 4, 5, 6, 12):
        failures.append(f"Figure 6 orbit report {rep}")
    elapsed = time.perf_counter() - start
    _record(4, "phi/phi^-1 inverse with orbit/periodic property, n <= 5; Figure 6", failures, elapsed, 60)


def test_5_tables():
    failures = []
    start = time.perf_counter()
    _sweep(failures, "tables", checks.tables(6, cap=6))
    for n in range(1, 7):
        if sum(ids.w_count_brute(n).values()) != n ** (n + 1):
            failures.append(f"W total n={n}")
        if sum(ids.f_count_brute(n).values()) != n ** (n + 1):
            failures.append(f"F total n={n}")
    elapsed = time.perf_counter() - start
    _record(5, "W and F tables equal brute force, n <= 6; totals; F symmetry", failures, elapsed, 300)


def test_6_basic_counts():
    failures = []
    start = time.perf_counter()
    _sweep(failures, "counts", checks.counts(5, cap=6))
    elapsed = time.perf_counter() - start
    _record(6, "|R_n|, |D_n|, |T_n| and rooted forest counts, n <= 5", failures, elapsed, 60)


def test_7_cli_round_trip(tmp_path):
    failures = []
    if len(CORPUS) != 50:
        failures.append(f"corpus has {len(CORPUS)} files, expected 50")
    start = time.perf_counter()
    for path in CORPUS:
        tree, back = tmp_path / "t.json", tmp_path / "f.json"
        codes = (
            run(["map", "fn-to-tree", "-i", str(path), "-o", str(tree)]),
            run(["map", "tree-to-fn", "-i", str(tree), "-o", str(back)]),
        )
        if codes != (0, 0) or back.read_bytes() != canonicalize(path.read_text()).encode():
            failures.append(f"{path.name} exit {codes}")
    elapsed = time.perf_counter() - start
    _record(7, "CLI fn-to-tree | tree-to-fn byte-identical on 50-file corpus", failures, elapsed, 5)
