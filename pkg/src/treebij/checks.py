"""Verification sweeps shared by the CLI ``verify``/``selftest`` commands and the
acceptance tests.  Each sweep stops at the first failure and reports it."""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Optional

from . import identities as ids
from .bijections import joyal_forward, joyal_inverse, merge, orbit_report, phi_forward, phi_inverse, split
from .generation import (
    SplitMix64,
    all_doubly_rooted,
    all_functions,
    all_rooted_triples,
    all_triply_rooted,
)
from .jsonio import function_to_obj, tree_to_obj, triple_to_obj


@dataclass
class CheckResult:
    checks_run: int = 0
    first_failure: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.first_failure is None

    def run(self, cases: Iterable[tuple[bool, Callable[[], dict]]]) -> "CheckResult":
        """Consume ``(ok, witness_thunk)`` pairs until one fails."""
        for ok, witness in cases:
            self.checks_run += 1
            if not ok:
                self.first_failure = witness()
                break
        return self


def lacasse(n_max: int) -> CheckResult:
    def cases():
        for n in range(1, n_max + 1):
            w = ids.lacasse_check(n)
            ok = (
                w.ok
                and w.xi_scaled == ids.xi_scaled_factorial(n)
                and w.xi2_scaled == ids.xi2_scaled_single(n)
            )
            yield ok, lambda w=w: {"check": "lacasse", **asdict(w)}

    return CheckResult().run(cases())


def hurwitz(n_max: int, m_max: int, trials: int, seed: int) -> CheckResult:
    def cases():
        for n in range(1, n_max + 1):
            for m, target in ((2, ids.xi_scaled(n)), (3, ids.xi2_scaled(n))):
                got = ids.abel_poly([0] * m, [0] * m, n)
                yield got == target, lambda n=n, m=m, got=got, target=target: {
                    "check": "abel_special", "n": n, "m": m,
                    "abel": str(got), "expected": target,
                }
        rng = SplitMix64(seed)
        for m in range(1, m_max + 1):
            vectors = [[0] * m] + [[rng.below(6) for _ in range(m)] for _ in range(trials)]
            for x in vectors:
                for n in range(0, n_max + 1):
                    lhs = ids.abel_poly(x, [0] * m, n)
                    rhs = ids.hurwitz_rhs(x, n)
                    yield lhs == rhs, lambda x=x, n=n, lhs=lhs, rhs=rhs: {
                        "check": "hurwitz", "x": x, "n": n, "lhs": str(lhs), "rhs": rhs,
                    }

    return CheckResult().run(cases())


def counts(n_max: int, cap: int | None = None) -> CheckResult:
    def cases():
        for n in range(1, n_max + 1):
            b = ids.basic_counts_check(n, cap)
            yield b.ok, lambda b=b: {"check": "basic_counts", **asdict(b)}
        for n in range(1, n_max + 1):
            for k in range(1, n + 1):
                for roots in itertools.combinations(range(1, n + 1), k):
                    got = ids.forest_count_brute(n, roots, cap)
                    want = ids.forest_count(k, n)
                    yield got == want, lambda n=n, roots=roots, got=got, want=want: {
                        "check": "forest_count", "n": n, "roots": list(roots),
                        "brute": got, "formula": want,
                    }

    return CheckResult().run(cases())


def _table_diff(formula: dict, brute: dict) -> list:
    keys = sorted(set(formula) | set(brute))
    return [[i, j, formula.get((i, j), 0), brute.get((i, j), 0)]
            for i, j in keys if formula.get((i, j), 0) != brute.get((i, j), 0)]


def tables(n_max: int, cap: int | None = None) -> CheckResult:
    def cases():
        for n in range(1, n_max + 1):
            total = n ** (n + 1)
            wf, wb = ids.w_table(n), ids.w_count_brute(n, cap)
            ff, fb = ids.f_table(n), ids.f_count_brute(n, cap)
            yield wf == wb, lambda n=n, wf=wf, wb=wb: {
                "check": "w_table", "n": n, "diff_i_j_formula_brute": _table_diff(wf, wb)}
            yield ff == fb, lambda n=n, ff=ff, fb=fb: {
                "check": "f_table", "n": n, "diff_i_j_formula_brute": _table_diff(ff, fb)}
            for name, table in (("w_total", wf), ("f_total", ff)):
                s = sum(table.values())
                yield s == total, lambda n=n, name=name, s=s: {"check": name, "n": n, "sum": s}
            for i in range(0, n + 1):
                for j in range(0, n + 1):
                    a, b = ids.f_count(n, i + 1, j), ids.f_count(n, j + 1, i)
                    yield a == b, lambda n=n, i=i, j=j, a=a, b=b: {
                        "check": "f_symmetry", "n": n, "i": i, "j": j, "lhs": a, "rhs": b}
            for i in range(2, n + 2):
                for j in range(1, n + 1):
                    a, b = ids.f_count(n, i, j), ids.w_count(n, i - 2, j - 1)
                    yield a == b, lambda n=n, i=i, j=j: {
                        "check": "f_w_shift", "n": n, "i": i, "j": j}

    return CheckResult().run(cases())


def merge_split(n_max: int) -> CheckResult:
    def cases():
        for n in range(1, n_max + 1):
            for t in all_triply_rooted(n):
                back = merge(split(t))
                yield back == t, lambda t=t: {"check": "merge_split", "tree": tree_to_obj(t)}
            for q in all_rooted_triples(n):
                back = split(merge(q))
                yield back == q, lambda q=q: {"check": "split_merge", "triple": triple_to_obj(q)}

    return CheckResult().run(cases())


def phi(n_max: int) -> CheckResult:
    def cases():
        for n in range(1, n_max + 1):
            for f in all_functions(range(1, n + 2), range(1, n + 1)):
                t = phi_forward(f)
                rooted = t.rooted()
                report = orbit_report(f)
                ok = (
                    phi_inverse(t) == f
                    and set(report.orbit) == set(rooted.ancestors(t.r2))
                    and set(report.periodic) == set(rooted.ancestors(t.r3))
                )
                yield ok, lambda f=f: {"check": "phi", "function": function_to_obj(f)}
            for t in all_triply_rooted(n):
                yield phi_forward(phi_inverse(t)) == t, lambda t=t: {
                    "check": "phi_inverse", "tree": tree_to_obj(t)}

    return CheckResult().run(cases())


def joyal(n_max: int) -> CheckResult:
    def cases():
        for n in range(1, n_max + 1):
            s = range(1, n + 1)
            image = set()
            for f in all_functions(s, s):
                d = joyal_forward(f)
                image.add(d)
                yield joyal_inverse(d) == f, lambda f=f: {
                    "check": "joyal", "function": function_to_obj(f)}
            for d in all_doubly_rooted(s):
                yield d in image, lambda d=d: {"check": "joyal_onto", "tree": tree_to_obj(d)}

    return CheckResult().run(cases())


SWEEPS: dict[str, Callable[..., CheckResult]] = {
    "lacasse": lacasse,
    "hurwitz": hurwitz,
    "counts": counts,
    "tables": tables,
    "merge-split": merge_split,
    "phi": phi,
    "joyal": joyal,
}
