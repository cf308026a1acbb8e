"""Doubled and m-fold Stirling words: statistics, predicates, generators.

A word of order n and multiplicity m uses each value 1..n exactly m
times, and every letter lying strictly between two occurrences of a
value v must be larger than v.  Runs are maximal weakly increasing
segments; a word is *flattened* when the first letters of its runs are
weakly increasing.

Generation follows the insertion construction: the words of order n are
obtained from each word of order n-1 by inserting the block of m copies
of n into each of the (n-1)*m + 1 gap positions, gaps taken left to
right, parents in the same (recursive) order.  Every word is produced
exactly once, so the stream needs no dedup set, and the order is stable
across runs.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceededError, NotStirlingError, WordSyntaxError
from .formulas import mstirling_count

DEFAULT_BUDGET = 50_000_000


def _stirling_violation(letters: Sequence[int], m: int) -> str | None:
    """Reason ``letters`` is not an m-Stirling word, or None if it is one."""
    if m < 1:
        return f"multiplicity {m} is not positive"
    counts: dict[int, int] = {}
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for idx, v in enumerate(letters):
        if v < 1:
            return f"letter {v} at position {idx} is not a positive integer"
        counts[v] = counts.get(v, 0) + 1
        first.setdefault(v, idx)
        last[v] = idx
    for v, c in counts.items():
        if c != m:
            return f"value {v} occurs {c} times, expected {m}"
    n = len(counts)
    if counts and max(counts) != n:
        return f"values {sorted(counts)} do not cover 1..{n}"
    for v in counts:
        for idx in range(first[v] + 1, last[v]):
            if letters[idx] < v:
                return (
                    f"letter {letters[idx]} at position {idx} lies between "
                    f"occurrences of {v} but is smaller"
                )
    return None


def is_stirling(letters: Sequence[int], m: int) -> bool:
    """True iff ``letters`` is a valid m-Stirling word (empty allowed)."""
    return _stirling_violation(letters, m) is None


@dataclass(frozen=True)
class StirlingWord:
    """Immutable validated word; raises NotStirlingError on construction otherwise."""

    letters: tuple[int, ...]
    multiplicity: int = 2

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        reason = _stirling_violation(self.letters, self.multiplicity)
        if reason is not None:
            raise NotStirlingError(reason)

    @property
    def order(self) -> int:
        return len(self.letters) // self.multiplicity if self.letters else 0

    def __str__(self) -> str:
        return format_word(self.letters)


@dataclass(frozen=True)
class RunDecomposition:
    """Maximal weakly increasing segmentation of a word.

    ``segments`` holds half-open index ranges partitioning the word;
    the first letter of each segment after the first is strictly smaller
    than the letter preceding it (a descent), which is what makes the
    segmentation maximal and unique.
    """

    segments: tuple[tuple[int, int], ...]
    leading_terms: tuple[int, ...]

    @property
    def run_count(self) -> int:
        return len(self.segments)


def _descent_positions(letters: Sequence[int]) -> list[int]:
    return [i for i in range(len(letters) - 1) if letters[i] > letters[i + 1]]


def run_decomposition(w: StirlingWord) -> RunDecomposition:
    """Split ``w`` into its runs; the empty word has no segments."""
    letters = w.letters
    if not letters:
        return RunDecomposition((), ())
    starts = [0] + [i + 1 for i in _descent_positions(letters)]
    ends = starts[1:] + [len(letters)]
    segments = tuple(zip(starts, ends))
    return RunDecomposition(segments, tuple(letters[s] for s, _ in segments))


def _is_flat(letters: Sequence[int]) -> bool:
    """Flattened test on raw letters: run leading terms weakly increasing."""
    if not letters:
        return True
    lead = prev = letters[0]
    for x in letters[1:]:
        if x < prev:
            if x < lead:
                return False
            lead = x
        prev = x
    return True


def is_flattened(w: StirlingWord) -> bool:
    """True iff the leading terms of the runs of ``w`` are weakly increasing."""
    return _is_flat(w.letters)


def descent_count(w: StirlingWord) -> int:
    """Number of positions i with w_i > w_{i+1}; run count minus one when nonempty."""
    return len(_descent_positions(w.letters))


def _check_budget(n: int, m: int, budget: int) -> int:
    projected = mstirling_count(n, m)
    if projected > budget:
        raise BudgetExceededError(projected, budget, f"generating order-{n} words (m={m})")
    return projected


def _iter_letters(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """All m-Stirling words of order n as raw tuples, in insertion order."""

    def rec(word: tuple[int, ...], v: int) -> Iterator[tuple[int, ...]]:
        if v > n:
            yield word
            return
        block = (v,) * m
        for gap in range(len(word) + 1):
            yield from rec(word[:gap] + block + word[gap:], v + 1)

    yield from rec((), 1)


def _iter_letters_from(word: tuple[int, ...], v: int, n: int, m: int) -> Iterator[tuple[int, ...]]:
    if v > n:
        yield word
        return
    block = (v,) * m
    for gap in range(len(word) + 1):
        yield from _iter_letters_from(word[:gap] + block + word[gap:], v + 1, n, m)


def generate_stirling(n: int, m: int = 2, budget: int = DEFAULT_BUDGET) -> Iterator[StirlingWord]:
    """Yield every m-Stirling word of order n exactly once, in insertion order."""
    _check_budget(n, m, budget)
    for letters in _iter_letters(n, m):
        yield StirlingWord(letters, m)


def generate_flattened_filter(
    n: int, m: int = 2, budget: int = DEFAULT_BUDGET
) -> Iterator[StirlingWord]:
    """The flattened subsequence of ``generate_stirling``; brute-force oracle for flat counts."""
    _check_budget(n, m, budget)
    for letters in _iter_letters(n, m):
        if _is_flat(letters):
            yield StirlingWord(letters, m)


@dataclass
class StirlingStats:
    """Exhaustive counts for one (n, m): total words, flattened words, flat-by-run-count."""

    order: int
    multiplicity: int
    total: int = 0
    flat_total: int = 0
    flat_by_runs: dict[int, int] = field(default_factory=dict)

    def merge(self, other: "StirlingStats") -> None:
        self.total += other.total
        self.flat_total += other.flat_total
        for k, v in other.flat_by_runs.items():
            self.flat_by_runs[k] = self.flat_by_runs.get(k, 0) + v


def _scan_into(stats: StirlingStats, word: tuple[int, ...]) -> None:
    stats.total += 1
    if not word:
        stats.flat_total += 1
        stats.flat_by_runs[0] = stats.flat_by_runs.get(0, 0) + 1
        return
    runs = 1
    lead = prev = word[0]
    for x in word[1:]:
        if x < prev:
            if x < lead:
                return
            runs += 1
            lead = x
        prev = x
    stats.flat_total += 1
    stats.flat_by_runs[runs] = stats.flat_by_runs.get(runs, 0) + 1


def _stats_subtree(prefix: tuple[int, ...], v: int, n: int, m: int) -> StirlingStats:
    stats = StirlingStats(n, m)
    for word in _iter_letters_from(prefix, v, n, m):
        _scan_into(stats, word)
    return stats


def count_stirling_stats(
    n: int, m: int = 2, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> StirlingStats:
    """Exhaustively scan all of Q_n^m, counting total/flattened/flat-by-runs.

    With ``workers`` > 1 the insertion tree is split at a fixed shallow
    level and the per-subtree counts are summed (associative reduction),
    which cannot change the result, only the wall time.
    """
    _check_budget(n, m, budget)
    split_order = 3
    if workers <= 1 or n <= split_order:
        return _stats_subtree((), 1, n, m)
    stats = StirlingStats(n, m)
    prefixes = list(_iter_letters(split_order, m))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_stats_subtree, prefix, split_order + 1, n, m) for prefix in prefixes
        ]
        for fut in futures:
            stats.merge(fut.result())
    return stats


def format_word(word: StirlingWord | Iterable[int]) -> str:
    """Canonical text form: space-separated decimal letters."""
    letters = word.letters if isinstance(word, StirlingWord) else tuple(word)
    return " ".join(str(v) for v in letters)


def parse_word(text: str) -> tuple[int, ...]:
    """Parse canonical (space-separated) or compact (digit-string) word text.

    The compact form is only legal when every letter is a single digit
    1..9; multi-digit letters require the canonical form.
    """
    tokens = text.split()
    if not tokens:
        raise WordSyntaxError("empty word text (the empty word has no text form)")
    if len(tokens) == 1 and len(tokens[0]) > 1:
        compact = tokens[0]
        letters = []
        for pos, ch in enumerate(compact):
            if ch == "0":
                raise WordSyntaxError(
                    f"character {pos}: letter 0 is invalid (compact form allows digits 1-9 only)"
                )
            if not ch.isdigit():
                raise WordSyntaxError(
                    f"character {pos}: expected a digit 1-9 in compact word, found {ch!r}"
                )
            letters.append(int(ch))
        return tuple(letters)
    letters = []
    for pos, tok in enumerate(tokens):
        if not tok.isdigit() or int(tok) < 1 or (len(tok) > 1 and tok[0] == "0"):
            raise WordSyntaxError(
                f"token {pos}: expected a positive decimal letter, found {tok!r}"
            )
        letters.append(int(tok))
    return tuple(letters)
