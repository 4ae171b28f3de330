"""Exhaustive verification sweeps.

Each check compares two independent routes to the same degree on one datum
and returns the list of disagreements. Sweeps run a check over every
canonical (sorted) connected datum up to a bound, optionally in a process
pool; results are merged in datum order so the report does not depend on
the number of workers.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .degrees import UnsupportedCaseError, classify_lambda1e, AgeCase, lambda1_degree, lambda1e_degree
from .localization import nonorbifold_relation, orbifold_relation, solve
from .monodromy import MonodromyDatum, enumerate_data
from .numeric import format_rational
from .tautring import check_graph_formula, evaluate_degree_4pt, graph_formula_lambda1e_question

__all__ = [
    "SweepResult",
    "check_identity",
    "check_localization",
    "check_graph",
    "check_question",
    "sweep",
    "SUITES",
    "run_suite",
]


@dataclass
class SweepResult:
    name: str
    data_checked: int = 0
    comparisons: int = 0
    failures: list[dict] = field(default_factory=list)
    caveats: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "data_checked": self.data_checked,
            "comparisons": self.comparisons,
            "failed": len(self.failures),
            "caveats": self.caveats,
            "failures": self.failures,
        }


def _failure(datum: MonodromyDatum, what: str, got: Fraction, expected: Fraction, **extra) -> dict:
    out = {"d": datum.d, "m": list(datum.m), "check": what,
           "got": format_rational(got), "expected": format_rational(expected)}
    out.update(extra)
    return out


# Each check returns (comparisons, failures, caveats).

def check_identity(datum: MonodromyDatum) -> tuple[int, list[dict], int]:
    """Eigen-sum identity plus the e <-> d-e symmetry; both forms of the
    lambda_1^e formula are cross-checked inside :func:`lambda1e_degree`."""
    d = datum.d
    values = [lambda1e_degree(datum, e) for e in range(d)]
    failures = []
    total = sum(values[1:], Fraction(0))
    expected = lambda1_degree(datum)
    if total != expected:
        failures.append(_failure(datum, "sum_e lambda1^e = lambda1", total, expected))
    for e in range(1, d):
        if values[e] != values[d - e]:
            failures.append(_failure(datum, f"lambda1^{e} = lambda1^{d - e}", values[e], values[d - e]))
        if values[e] < 0:
            failures.append(_failure(datum, f"lambda1^{e} >= 0", values[e], Fraction(0)))
    return d, failures, 0


def check_localization(datum: MonodromyDatum) -> tuple[int, list[dict], int]:
    expected = lambda1_degree(datum)
    failures = []
    count = 0
    for point in range(1, 5):
        got = solve(nonorbifold_relation(datum, infinity_point=point))
        count += 1
        if got != expected:
            failures.append(_failure(datum, f"localization (point {point} at infinity)", got, expected))
    for e in range(1, datum.d):
        if classify_lambda1e(datum, e).case_id is not AgeCase.AGE_SUM_TWO_HIGH:
            continue
        got = solve(orbifold_relation(datum, e))
        want = lambda1e_degree(datum, e)
        count += 1
        if got != want:
            failures.append(_failure(datum, f"orbifold localization e={e}", got, want))
    return count, failures, 0


def check_graph(datum: MonodromyDatum) -> tuple[int, list[dict], int]:
    checks = check_graph_formula(datum)
    failures = [
        _failure(datum, f"pairing with C{c.curve}", c.paired, c.expected,
                 induced=list(c.induced.m), geometric_caveat=c.geometric_caveat)
        for c in checks if not c.ok
    ]
    return len(checks), failures, sum(c.geometric_caveat for c in checks)


def check_question(datum: MonodromyDatum) -> tuple[int, list[dict], int]:
    failures = []
    for e in range(datum.d):
        got = evaluate_degree_4pt(graph_formula_lambda1e_question(datum, e))
        want = lambda1e_degree(datum, e)
        if got != want:
            failures.append(_failure(datum, f"question formula e={e}", got, want))
    return datum.d, failures, 0


def _data(dmax: int, ns: Iterable[int], canonical: bool = True) -> list[MonodromyDatum]:
    return [datum for n in ns for d in range(1, dmax + 1)
            for datum in enumerate_data(d, n, canonical=canonical)]


def sweep(
    name: str,
    check: Callable[[MonodromyDatum], tuple[int, list[dict], int]],
    data: list[MonodromyDatum],
    jobs: int = 1,
) -> SweepResult:
    result = SweepResult(name)
    if jobs > 1 and len(data) > 1:
        chunk = max(1, len(data) // (8 * jobs))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(check, data, chunksize=chunk))
    else:
        outcomes = [check(datum) for datum in data]
    for count, failures, caveats in outcomes:
        result.data_checked += 1
        result.comparisons += count
        result.failures.extend(failures)
        result.caveats += caveats
    return result


SUITES = {
    "identity": check_identity,
    "localization": check_localization,
    "graph": check_graph,
    "question": check_question,
}


def run_suite(name: str, dmax: int, nmax: int = 4, jobs: int = 1, canonical: bool = True) -> SweepResult:
    """Run a named suite over every connected datum with ``d <= dmax``
    (and ``4 <= n <= nmax`` for the graph suite)."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    ns = range(4, nmax + 1) if name == "graph" else [4]
    return sweep(name, SUITES[name], _data(dmax, ns, canonical), jobs)
