"""Type B set partitions of [-n, n] in canonical (one-block-per-pair) form.

A full type B partition is a set partition of the integers -n..n that is
closed under negation and has exactly one self-negative block (the
zero-block).  The canonical form keeps, from each block pair {B, -B},
the block containing the smaller minimal positive element; strips the
negatives from the zero-block; sorts blocks by minimal positive element;
and inside each block lists negatives in decreasing order (as integers)
followed by positives in increasing order.

Canonical partitions are written in a small text grammar:

    partition := block (' | ' block)*
    block     := element (' ' element)*
    element   := '-'? nonzero-decimal | '0'

e.g. ``0 1 2 | -4 3``.  The first block is the zero-block and may only
contain nonnegative elements.  Input is whitespace-flexible around '|';
output always uses single spaces.

Validation diagnostics use the stable codes::

    zero-block-missing-zero   zero-block does not start with 0
    zero-block-negative       negative entry in the zero-block
    zero-block-order          zero-block not strictly increasing
    bad-magnitude             block element with magnitude < 1
    empty-positives           a block has no positive part
    intra-block-order         elements out of canonical order in a block
    negative-min-rule         min |negatives| not larger than min positives
    block-order               blocks not sorted by minimal positive element
    duplicate-value           a magnitude appears more than once
    coverage-gap              magnitudes do not cover 0..n exactly
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import PartitionSyntaxError, BudgetExceededError, NotCanonicalError, NotTypeBError
from .formulas import dowling

TYPEB_DEFAULT_BUDGET = 50_000_000

_ELEMENT_RE = re.compile(r"^(?:0|-?[1-9][0-9]*)$")


@dataclass(frozen=True)
class SignedBlock:
    """One canonical non-zero block: negative magnitudes, then positives.

    ``negatives`` holds magnitudes in increasing order, which is the
    canonical display order for the negatives themselves (-9 before -10).
    """

    negatives: tuple[int, ...]
    positives: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "negatives", tuple(self.negatives))
        object.__setattr__(self, "positives", tuple(self.positives))

    @property
    def magnitudes(self) -> tuple[int, ...]:
        return self.negatives + self.positives


@dataclass(frozen=True)
class TypeBPartition:
    """Canonical-form candidate; use ``validate_canonical`` to check invariants."""

    n: int
    zero_block: tuple[int, ...]
    blocks: tuple[SignedBlock, ...]

    def __post_init__(self):
        object.__setattr__(self, "zero_block", tuple(self.zero_block))
        object.__setattr__(self, "blocks", tuple(self.blocks))

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str


def _strictly_increasing(seq: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(seq, seq[1:]))


def validate_canonical(candidate: TypeBPartition) -> tuple[bool, list[Diagnostic]]:
    """Check every canonical-form invariant; diagnostics name each violated rule."""
    diags: list[Diagnostic] = []
    zb = candidate.zero_block
    if not zb or zb[0] != 0 or 0 not in zb:
        diags.append(Diagnostic("zero-block-missing-zero", "zero-block must start with 0"))
    if any(v < 0 for v in zb):
        diags.append(Diagnostic("zero-block-negative", "zero-block may not contain negatives"))
    if not _strictly_increasing(zb):
        diags.append(Diagnostic("zero-block-order", "zero-block must be strictly increasing"))

    for idx, block in enumerate(candidate.blocks, start=1):
        if any(v < 1 for v in block.magnitudes):
            diags.append(
                Diagnostic("bad-magnitude", f"block {idx} contains a magnitude below 1")
            )
        if not block.positives:
            diags.append(
                Diagnostic("empty-positives", f"block {idx} has no positive element")
            )
        if not _strictly_increasing(block.negatives) or not _strictly_increasing(
            block.positives
        ):
            diags.append(
                Diagnostic(
                    "intra-block-order",
                    f"block {idx} elements are not in canonical order "
                    "(negatives by decreasing value, then positives increasing)",
                )
            )
        if block.negatives and block.positives and min(block.negatives) <= min(block.positives):
            diags.append(
                Diagnostic(
                    "negative-min-rule",
                    f"block {idx}: min negative magnitude {min(block.negatives)} "
                    f"must exceed min positive {min(block.positives)}",
                )
            )

    mins = [min(b.positives) for b in candidate.blocks if b.positives]
    if len(mins) == len(candidate.blocks) and not _strictly_increasing(mins):
        diags.append(
            Diagnostic("block-order", "blocks must be sorted by minimal positive element")
        )

    magnitudes = list(zb) + [v for b in candidate.blocks for v in b.magnitudes]
    seen: set[int] = set()
    for v in magnitudes:
        if v in seen:
            diags.append(
                Diagnostic("duplicate-value", f"magnitude {v} appears more than once")
            )
            break
        seen.add(v)
    if set(magnitudes) != set(range(candidate.n + 1)):
        diags.append(
            Diagnostic(
                "coverage-gap",
                f"magnitudes must cover 0..{candidate.n} exactly; got {sorted(set(magnitudes))}",
            )
        )
    return (not diags, diags)


def ensure_canonical(candidate: TypeBPartition) -> TypeBPartition:
    ok, diags = validate_canonical(candidate)
    if not ok:
        raise NotCanonicalError(diags)
    return candidate


def block_pair_count(partition: TypeBPartition) -> int:
    """Number of non-zero blocks (= number of block pairs in the full family)."""
    return len(partition.blocks)


def expand(partition: TypeBPartition) -> list[frozenset[int]]:
    """Rebuild the full block family on [-n, n] from the canonical form."""
    ensure_canonical(partition)
    zero = frozenset(partition.zero_block) | frozenset(-v for v in partition.zero_block)
    family = [zero]
    for block in partition.blocks:
        kept = frozenset(-v for v in block.negatives) | frozenset(block.positives)
        family.append(kept)
        family.append(frozenset(-v for v in kept))
    return family


def canonicalize(blocks: Iterable[Iterable[int]]) -> TypeBPartition:
    """Canonicalize a full type B block family (any block order, any element order).

    Raises NotTypeBError naming the violated defining condition when the
    family is not a type B set partition.
    """
    family = [frozenset(b) for b in blocks]
    if any(not b for b in family):
        raise NotTypeBError(1, "blocks must be nonempty")
    elements = [v for b in family for v in b]
    if not elements:
        raise NotTypeBError(3, "a partition must cover at least {0}")
    n = max(abs(v) for v in elements)
    ground = set(range(-n, n + 1))
    if len(elements) != len(set(elements)):
        raise NotTypeBError(2, "blocks are not pairwise disjoint")
    if set(elements) != ground:
        missing = sorted(ground - set(elements))
        raise NotTypeBError(3, f"blocks do not cover [-{n}, {n}] (missing {missing})")
    family_set = set(family)
    for b in family:
        if frozenset(-v for v in b) not in family_set:
            raise NotTypeBError(4, f"negation of block {sorted(b)} is missing")
    self_negative = [b for b in family_set if b == frozenset(-v for v in b)]
    if len(self_negative) != 1:
        raise NotTypeBError(
            5, f"exactly one self-negative block required, found {len(self_negative)}"
        )

    zero_block = tuple(sorted(v for v in self_negative[0] if v >= 0))
    kept: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set(self_negative)
    for b in family_set:
        if b in seen:
            continue
        mate = frozenset(-v for v in b)
        seen.add(b)
        seen.add(mate)
        pos_b = [v for v in b if v > 0]
        pos_mate = [v for v in mate if v > 0]
        if pos_b and (not pos_mate or min(pos_b) < min(pos_mate)):
            kept.append(b)
        else:
            kept.append(mate)
    kept.sort(key=lambda b: min(v for v in b if v > 0))
    signed = tuple(
        SignedBlock(
            negatives=tuple(sorted(-v for v in b if v < 0)),
            positives=tuple(sorted(v for v in b if v > 0)),
        )
        for b in kept
    )
    return ensure_canonical(TypeBPartition(n, zero_block, signed))


def format_partition(partition: TypeBPartition) -> str:
    """Canonical text form: blocks joined by ' | ', negatives as '-k'."""
    parts = [" ".join(str(v) for v in partition.zero_block)]
    for block in partition.blocks:
        elems = [f"-{v}" for v in block.negatives] + [str(v) for v in block.positives]
        parts.append(" ".join(elems))
    return " | ".join(parts)


def parse_partition(text: str) -> TypeBPartition:
    """Parse canonical partition text.

    Syntax errors (malformed elements, empty blocks) raise
    PartitionSyntaxError with the offending position; structurally parseable
    text that violates canonical form raises NotCanonicalError carrying
    the usual diagnostics.
    """
    if not text.strip():
        raise PartitionSyntaxError("empty partition text")
    segments = text.split("|")
    parsed: list[list[int]] = []
    for b_idx, segment in enumerate(segments):
        tokens = segment.split()
        if not tokens:
            raise PartitionSyntaxError(f"block {b_idx}: empty block (expected elements)")
        values = []
        for t_idx, tok in enumerate(tokens):
            if not _ELEMENT_RE.match(tok):
                raise PartitionSyntaxError(
                    f"block {b_idx}, element {t_idx}: expected '0' or '-'? nonzero "
                    f"decimal, found {tok!r}"
                )
            values.append(int(tok))
        parsed.append(values)

    extra: list[Diagnostic] = []
    zero_block = tuple(parsed[0])
    blocks = []
    for b_idx, values in enumerate(parsed[1:], start=1):
        negatives = []
        positives = []
        seen_positive = False
        for v in values:
            if v < 0:
                if seen_positive:
                    extra.append(
                        Diagnostic(
                            "intra-block-order",
                            f"block {b_idx}: negatives must precede positives",
                        )
                    )
                negatives.append(-v)
            else:
                seen_positive = True
                positives.append(v)
        blocks.append(SignedBlock(tuple(negatives), tuple(positives)))

    magnitudes = [abs(v) for vs in parsed for v in vs]
    n = max(magnitudes)
    partition = TypeBPartition(n, zero_block, tuple(blocks))
    ok, diags = validate_canonical(partition)
    if extra or not ok:
        raise NotCanonicalError(extra + diags)
    return partition


def _subsets_lex(values: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Subsets in lexicographic order of their ascending element tuples."""

    def rec(prefix: tuple[int, ...], start: int) -> Iterator[tuple[int, ...]]:
        for i in range(start, len(values)):
            longer = prefix + (values[i],)
            yield longer
            yield from rec(longer, i + 1)

    yield ()
    yield from rec((), 0)


def _restricted_growth_strings(length: int) -> Iterator[tuple[int, ...]]:
    """All restricted growth strings of the given length, lexicographically."""
    if length == 0:
        yield ()
        return
    acc = [0] * length

    def rec(i: int, mx: int) -> Iterator[tuple[int, ...]]:
        if i == length:
            yield tuple(acc)
            return
        for v in range(mx + 2):
            acc[i] = v
            yield from rec(i + 1, max(mx, v))

    yield from rec(1, 0)


def _iter_typeb_raw(
    n: int,
) -> Iterator[tuple[tuple[int, ...], tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]]]:
    """Raw canonical partitions as (zero_block, ((negatives, positives), ...)).

    Deterministic order: zero-block supports in lexicographic subset
    order, remainder partitions in restricted-growth-string order, then
    sign vectors in binary counting order over the non-minimal elements
    taken in ascending order (bit 0 = smallest).
    """
    universe = tuple(range(1, n + 1))
    for support in _subsets_lex(universe):
        zero_block = (0,) + support
        rest = tuple(v for v in universe if v not in support)
        for rgs in _restricted_growth_strings(len(rest)):
            k = max(rgs) + 1 if rgs else 0
            members: list[list[int]] = [[] for _ in range(k)]
            for value, label in zip(rest, rgs):
                members[label].append(value)
            non_min = sorted(v for block in members for v in block[1:])
            for mask in range(1 << len(non_min)):
                negset = {v for j, v in enumerate(non_min) if mask >> j & 1}
                blocks = tuple(
                    (
                        tuple(v for v in block if v in negset),
                        tuple(v for v in block if v not in negset),
                    )
                    for block in members
                )
                yield zero_block, blocks


def generate_typeb(n: int, budget: int = TYPEB_DEFAULT_BUDGET) -> Iterator[TypeBPartition]:
    """Yield every canonical type B partition of [-n, n] exactly once.

    The stream is deterministic (see ``_iter_typeb_raw``) and its length
    is the type B partition count ``dowling(n)``, which is checked
    against the budget before any work happens.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    projected = dowling(n)
    if projected > budget:
        raise BudgetExceededError(projected, budget, f"generating type B partitions of [-{n}, {n}]")
    for zero_block, blocks in _iter_typeb_raw(n):
        yield TypeBPartition(n, zero_block, tuple(SignedBlock(ng, ps) for ng, ps in blocks))
