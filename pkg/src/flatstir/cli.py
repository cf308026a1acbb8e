"""Command-line interface.

Exit codes are a stable contract: 0 success, 1 verification or
coherence mismatch, 2 usage/parse error, 3 enumeration budget exceeded,
4 domain violation.  Comparable output goes to stdout; diagnostics go
to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bijection, oeis, tables, typeb, verify, words
from .errors import FlatstirError
from .words import DEFAULT_BUDGET


def _add_budget(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help=f"maximum number of objects any enumeration may visit (default {DEFAULT_BUDGET})",
    )


def _add_threads(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="worker processes for exhaustive counting (default: available parallelism)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flatstir",
        description="Generate, validate, map and count flattened (m-)Stirling "
        "permutations and type B set partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit words or partitions, one per line")
    p_gen.add_argument("object", choices=["stirling", "flat", "typeb"])
    p_gen.add_argument("--n", type=int, required=True, help="order / ground-set bound")
    p_gen.add_argument("--m", type=int, default=2, help="multiplicity (words only, default 2)")
    p_gen.add_argument("--format", choices=["lines", "json"], default="lines")
    p_gen.add_argument(
        "--via",
        choices=["filter", "bijection"],
        default="filter",
        help="for 'flat': filter the full word stream, or map the partition stream",
    )
    _add_budget(p_gen)

    p_map = sub.add_parser("map", help="apply the bijection in either direction")
    p_map.add_argument(
        "direction",
        choices=["phi", "psi"],
        help="phi: partition text -> word; psi: word text -> partition",
    )
    p_map.add_argument("input", help="partition text (phi) or word text (psi)")

    p_table = sub.add_parser("table", help="emit count tables as CSV or JSON")
    p_table.add_argument("--max-n", type=int, required=True)
    p_table.add_argument("--max-k", type=int, default=None, help="run-count columns (table 1)")
    p_table.add_argument("--mode", choices=["filter", "bijection", "formula"], default=None)
    p_table.add_argument("--format", choices=["csv", "json"], default="csv")
    p_table.add_argument("--mstirling", action="store_true", help="emit the m-fold table")
    p_table.add_argument("--max-m", type=int, default=5)
    p_table.add_argument("--output", default=None, help="write here instead of stdout")
    _add_budget(p_table)
    _add_threads(p_table)

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("suite", choices=list(verify.SUITES))
    p_verify.add_argument("--max-n", type=int, default=None)
    _add_budget(p_verify)
    _add_threads(p_verify)

    p_oeis = sub.add_parser("oeis", help="cross-check a computed prefix against a b-file")
    p_oeis.add_argument(
        "sequence",
        help="sequence id (e.g. A007405) or generator name "
        f"({', '.join(sorted(oeis.GENERATORS))})",
    )
    p_oeis.add_argument(
        "--generator",
        choices=sorted(oeis.GENERATORS),
        default=None,
        help="explicit generator (required only if the id is ambiguous)",
    )
    p_oeis.add_argument("--bfile", default=None, help="b-file path (default: bundled fixture)")
    p_oeis.add_argument("--max-terms", type=int, default=None)

    p_cache = sub.add_parser("cache", help="build, check or clear the count cache")
    p_cache.add_argument("action", choices=["build", "check", "clear"])
    p_cache.add_argument("--path", required=True)
    p_cache.add_argument("--max-n", type=int, default=10)
    p_cache.add_argument("--max-m", type=int, default=5)
    p_cache.add_argument("--sample", type=int, default=8, help="flat_k rows re-derived by check")
    _add_budget(p_cache)
    _add_threads(p_cache)

    return parser


def _cmd_gen(args) -> int:
    if args.object == "typeb":
        items = (typeb.format_partition(p) for p in typeb.generate_typeb(args.n, budget=args.budget))
    elif args.object == "stirling":
        items = (
            words.format_word(w) for w in words.generate_stirling(args.n, args.m, budget=args.budget)
        )
    else:
        if args.via == "bijection":
            if args.m != 2:
                print("gen flat --via bijection requires --m 2", file=sys.stderr)
                return 2
            items = (
                words.format_word(w)
                for w in bijection.generate_flattened_from_partitions(args.n, budget=args.budget)
            )
        else:
            items = (
                words.format_word(w)
                for w in words.generate_flattened_filter(args.n, args.m, budget=args.budget)
            )
    if args.format == "json":
        print(json.dumps(list(items)))
    else:
        for item in items:
            print(item)
    return 0


def _cmd_map(args) -> int:
    if args.direction == "phi":
        partition = typeb.parse_partition(args.input)
        print(words.format_word(bijection.partition_to_word(partition)))
    else:
        word = words.StirlingWord(words.parse_word(args.input), 2)
        print(typeb.format_partition(bijection.word_to_partition(word)))
    return 0


def _cmd_table(args) -> int:
    if args.mstirling:
        mode = args.mode or "formula"
        if mode == "bijection":
            print("the m-fold table supports --mode filter or formula", file=sys.stderr)
            return 2
        table = tables.mstirling_table(
            args.max_n, args.max_m, mode=mode, budget=args.budget, workers=args.threads
        )
        text = (
            tables.table2_csv(table, args.max_n, args.max_m)
            if args.format == "csv"
            else tables.table_to_json(table)
        )
    else:
        mode = args.mode or "bijection"
        if mode == "formula":
            print("the run-count table supports --mode filter or bijection", file=sys.stderr)
            return 2
        table = tables.flat_k_table(args.max_n, mode=mode, budget=args.budget, workers=args.threads)
        text = (
            tables.table1_csv(table, args.max_n, args.max_k)
            if args.format == "csv"
            else tables.table_to_json(table)
        )
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    reports = verify.run_suite(
        args.suite, max_n=args.max_n, budget=args.budget, workers=args.threads
    )
    for report in reports:
        sys.stdout.write(report.render())
    return 0 if all(r.passed for r in reports) else 1


def _cmd_oeis(args) -> int:
    if args.sequence in oeis.GENERATORS:
        generator = args.sequence
    else:
        matches = [g for g, s in oeis.GENERATORS.items() if s.sequence_id == args.sequence]
        if not matches:
            print(f"no registered generator for {args.sequence!r}", file=sys.stderr)
            return 2
        generator = matches[0]
    spec = oeis.GENERATORS[generator]
    if args.generator and args.generator != generator:
        print(
            f"{args.sequence} is registered against generator {generator}, "
            f"not {args.generator}",
            file=sys.stderr,
        )
        return 2
    if args.bfile:
        sequence = oeis.read_bfile(args.bfile, spec.sequence_id)
    else:
        sequence = oeis.parse_bfile(oeis.bundled_bfile_text(spec.sequence_id), spec.sequence_id)
    result = oeis.compare_sequence(sequence, generator, max_terms=args.max_terms)
    if result.first_mismatch:
        index, filed, local = result.first_mismatch
        print(
            f"{spec.sequence_id} vs {generator}: MISMATCH at index {index}: "
            f"b-file {filed}, computed {local}"
        )
        return 1
    print(
        f"{spec.sequence_id} vs {generator}: {result.checked} terms match "
        f"(indices {result.first_index}..{result.last_index})"
    )
    return 0


def _cmd_cache(args) -> int:
    if args.action == "build":
        table = tables.build_cache(
            args.path,
            max_n=args.max_n,
            max_m=args.max_m,
            budget=args.budget,
            workers=args.threads,
        )
        print(f"wrote {len(table.entries)} entries to {args.path}")
        return 0
    if args.action == "check":
        checked = tables.check_cache(
            args.path, sample_n=args.sample, budget=args.budget, workers=args.threads
        )
        print(f"checked {checked} entries: coherent")
        return 0
    removed = tables.clear_cache(args.path)
    print(f"removed {args.path}" if removed else f"nothing to remove at {args.path}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "gen": _cmd_gen,
        "map": _cmd_map,
        "table": _cmd_table,
        "verify": _cmd_verify,
        "oeis": _cmd_oeis,
        "cache": _cmd_cache,
    }
    try:
        return handlers[args.command](args)
    except FlatstirError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
