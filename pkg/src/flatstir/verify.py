"""Named verification suites producing structured pass/fail reports.

Each suite re-derives a family of facts two ways and compares:

* ``bijection``   -- both round trips, injectivity, image = filtered set,
  and the frozen order-4 pair fixture;
* ``runs``        -- the partition-side run-count formula against actual
  run counts, and the maximal-run-count bound with its witness;
* ``table1``      -- the run-count table against the frozen reference,
  through the exhaustive filter and through the partition images;
* ``table2``      -- the m-fold flattened counts: exhaustive scan,
  recurrence, and certified series against the frozen reference;
* ``conjectures`` -- the three-run formula against enumerated counts,
  and the m-fold recurrence/series/count identities.

Reports are deterministic apart from the clearly marked elapsed field.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import bijection, reference, tables, typeb, words
from .errors import BudgetExceededError
from .formulas import (
    dowling,
    flat2_closed,
    flat2_recurrence,
    flat3_conjecture,
    flatm_recurrence,
    flatm_series,
    max_runs,
    mstirling_count,
)

SUITES = ("bijection", "runs", "table1", "table2", "conjectures", "all")


@dataclass
class CaseResult:
    description: str
    expected: str
    actual: str

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass
class VerificationReport:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)
    elapsed_seconds: float = 0.0
    budget_hit: bool = False

    @property
    def passed(self) -> bool:
        return not self.budget_hit and all(c.passed for c in self.cases)

    def add(self, description: str, expected, actual) -> None:
        self.cases.append(CaseResult(description, str(expected), str(actual)))

    def render(self) -> str:
        lines = [f"suite: {self.suite}"]
        for case in self.cases:
            if case.passed:
                lines.append(f"PASS  {case.description} = {case.actual}")
            else:
                lines.append(
                    f"FAIL  {case.description}: expected {case.expected}, got {case.actual}"
                )
        if self.budget_hit:
            lines.append("budget: exceeded for at least one required case")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        lines.append(f"elapsed_seconds: {self.elapsed_seconds:.3f}")
        return "\n".join(lines) + "\n"


def _guard(report: VerificationReport, description: str, expected, thunk) -> None:
    try:
        actual = thunk()
    except BudgetExceededError as exc:
        report.budget_hit = True
        report.add(description, expected, f"budget exceeded ({exc})")
        return
    report.add(description, expected, actual)


def verify_bijection(max_n: int = 6, budget: int = words.DEFAULT_BUDGET) -> VerificationReport:
    report = VerificationReport("bijection")
    start = time.monotonic()
    fixture_bad = 0
    for ptext, wtext in reference.PAIRS_ORDER4:
        part = typeb.parse_partition(ptext)
        word = bijection.partition_to_word(part, verify_output=True)
        if words.format_word(word) != wtext or bijection.word_to_partition(word) != part:
            fixture_bad += 1
    report.add("order-4 pair fixture mismatches (24 pairs)", 0, fixture_bad)

    for order in range(1, max_n + 1):
        def round_trips(order=order):
            bad = 0
            images = set()
            for part in typeb.generate_typeb(order - 1, budget=budget):
                word = bijection.partition_to_word(part, verify_output=True)
                images.add(word.letters)
                if bijection.word_to_partition(word) != part:
                    bad += 1
            distinct = len(images) == dowling(order - 1)
            return f"failures=0 distinct={distinct}" if not bad else f"failures={bad}"

        _guard(report, f"order {order}: partition->word->partition over all partitions",
               "failures=0 distinct=True", round_trips)

        if mstirling_count(order, 2) <= budget:
            def reverse_trips(order=order):
                bad = 0
                image = set()
                for word in words.generate_flattened_filter(order, 2, budget=budget):
                    if bijection.partition_to_word(bijection.word_to_partition(word)) != word:
                        bad += 1
                    image.add(word.letters)
                same = image == {
                    w.letters for w in bijection.generate_flattened_from_partitions(order)
                }
                return f"failures={bad} image_equal={same}"

            _guard(report, f"order {order}: word->partition->word over filtered flat words",
                   "failures=0 image_equal=True", reverse_trips)
    report.elapsed_seconds = time.monotonic() - start
    return report


def verify_runs(max_n: int = 6, budget: int = words.DEFAULT_BUDGET) -> VerificationReport:
    report = VerificationReport("runs")
    start = time.monotonic()
    for order in range(1, max_n + 1):
        def formula_vs_actual(order=order):
            bad = 0
            for part in typeb.generate_typeb(order - 1, budget=budget):
                word = bijection.partition_to_word(part)
                if bijection.run_count_from_partition(part) != words.run_decomposition(
                    word
                ).run_count:
                    bad += 1
            return bad

        _guard(report, f"order {order}: run-count formula mismatches over all partitions",
               0, formula_vs_actual)

        def max_run_bound(order=order):
            by_runs = tables.count_runs_via_bijection(order, budget=budget)
            witness = bijection.max_runs_witness(order)
            attained = max(by_runs)
            witness_runs = words.run_decomposition(witness).run_count
            flat_ok = words.is_flattened(witness)
            return f"max={attained} witness={witness_runs} witness_flat={flat_ok}"

        bound = max_runs(order)
        _guard(report, f"order {order}: maximal run count and witness",
               f"max={bound} witness={bound} witness_flat=True", max_run_bound)
    report.elapsed_seconds = time.monotonic() - start
    return report


def _row_text(total: int, flat: int, by_runs: dict[int, int]) -> str:
    ks = ",".join(f"k{k}={by_runs[k]}" for k in sorted(by_runs))
    return f"total={total} flat={flat} {ks}"


def verify_table1(
    max_n: int = 7, budget: int = words.DEFAULT_BUDGET, workers: int = 1
) -> VerificationReport:
    report = VerificationReport("table1")
    start = time.monotonic()
    for n in range(1, min(max_n, 10) + 1):
        total, flat, by_runs = reference.TABLE1[n]
        expected = _row_text(total, flat, by_runs)
        if mstirling_count(n, 2) <= budget:
            def filter_row(n=n):
                stats = words.count_stirling_stats(n, 2, budget=budget, workers=workers)
                return _row_text(stats.total, stats.flat_total, stats.flat_by_runs)

            _guard(report, f"n={n}: exhaustive filter row", expected, filter_row)

        def bijection_row(n=n):
            by = tables.count_runs_via_bijection(n, budget=budget)
            return _row_text(mstirling_count(n, 2), sum(by.values()), by)

        _guard(report, f"n={n}: partition-image row", expected, bijection_row)
    report.elapsed_seconds = time.monotonic() - start
    return report


def verify_table2(
    max_n: int = 5, max_m: int = 5, budget: int = words.DEFAULT_BUDGET, workers: int = 1
) -> VerificationReport:
    report = VerificationReport("table2")
    start = time.monotonic()
    for n in range(1, min(max_n, 7) + 1):
        for m in range(2, max_m + 1):
            expected = reference.TABLE2[(n, m)]
            if mstirling_count(n, m) <= budget:
                _guard(
                    report,
                    f"n={n} m={m}: exhaustive flattened count",
                    expected,
                    lambda n=n, m=m: words.count_stirling_stats(
                        n, m, budget=budget, workers=workers
                    ).flat_total,
                )
            report.add(f"n={n} m={m}: recurrence", expected, flatm_recurrence(n, m))
            report.add(f"n={n} m={m}: certified series", expected, flatm_series(n, m))
    report.elapsed_seconds = time.monotonic() - start
    return report


def verify_conjectures(max_n: int = 10, budget: int = words.DEFAULT_BUDGET) -> VerificationReport:
    report = VerificationReport("conjectures")
    start = time.monotonic()
    for n in range(1, min(max_n, 10) + 1):
        def enumerated_flat3(n=n):
            return tables.count_runs_via_bijection(n, budget=budget).get(3, 0)

        _guard(
            report,
            f"three-run formula vs enumerated count, n={n}",
            flat3_conjecture(n),
            enumerated_flat3,
        )
    report.add(
        "two-run closed form vs recurrence, n<=30",
        0,
        sum(1 for n in range(1, 31) if flat2_closed(n) != flat2_recurrence(n + 1)),
    )
    report.add(
        "two-run recurrence vs reference column",
        0,
        sum(
            1
            for n in range(1, 11)
            if flat2_recurrence(n) != reference.TABLE1[n][2].get(2, 0)
        ),
    )
    report.add(
        "m-fold recurrence vs certified series over the reference grid",
        0,
        sum(
            1
            for (n, m) in reference.TABLE2
            if flatm_recurrence(n, m) != flatm_series(n, m)
        ),
    )
    report.add(
        "m-fold recurrence at m=2 vs partition counts, n<=12",
        0,
        sum(1 for n in range(1, 13) if flatm_recurrence(n, 2) != dowling(n - 1)),
    )
    report.elapsed_seconds = time.monotonic() - start
    return report


def run_suite(
    suite: str,
    max_n: int | None = None,
    budget: int = words.DEFAULT_BUDGET,
    workers: int = 1,
) -> list[VerificationReport]:
    """Run one named suite (or every suite) at its default or requested scale."""
    if suite == "bijection":
        return [verify_bijection(max_n or 6, budget)]
    if suite == "runs":
        return [verify_runs(max_n or 6, budget)]
    if suite == "table1":
        return [verify_table1(max_n or 7, budget, workers)]
    if suite == "table2":
        return [verify_table2(max_n or 5, 5, budget, workers)]
    if suite == "conjectures":
        return [verify_conjectures(max_n or 10, budget)]
    if suite == "all":
        return [
            verify_bijection(max_n or 6, budget),
            verify_runs(max_n or 6, budget),
            verify_table1(max_n or 7, budget, workers),
            verify_table2(max_n or 5, 5, budget, workers),
            verify_conjectures(max_n or 10, budget),
        ]
    raise ValueError(f"unknown suite {suite!r}")
