"""Verification command line.

Four subcommands, one report schema.  Every report is a table with the
columns n, chain, brute_force, formula, tag, agree, refinement, written
as CSV (default) or JSON.  Reports are deterministic: the same
arguments produce byte-identical output regardless of --jobs.

  count      brute-force totals of one chain for n = 1..n_max, with the
             count split by the position of the value 1
  verify     brute force against the closed form for chosen table rows,
             on both chains of each row
  symmetry   brute force on the two chains of every row, checking that
             the mirrored counts agree
  structure  exhaustive check, over permutations ending in 1, that
             strong 312 avoidance coincides with the unimodal shape

Exit codes: 0 all checks agree, 1 a disagreement or counterexample was
found, 2 usage or parse error.
"""

import argparse
import csv
import io
import itertools
import json
import os
import sys
from dataclasses import dataclass

from .chains import parse_chain, strongly_avoids
from .enumeration import MAX_ENUMERATION_N, count_chain
from .formulas import evaluate, formula_by_tag, formula_table
from .patterns import find_occurrence, parse_pattern
from .perm import ParseError, Permutation
from .structure import breakpoint_range, classify_strong_312_ending_in_1, unimodal_forms

_FIELDS = ("n", "chain", "brute_force", "formula", "tag", "agree", "refinement")

_PATTERN_312 = parse_pattern("312")


@dataclass(frozen=True)
class VerificationRow:
    """One report line: a brute-force count next to its reference value.

    formula holds whatever the row is checked against (a closed form,
    or the mirrored chain's count); agree must state whether the two
    values match, and must be true when there is nothing to match.
    """

    n: int
    chain: str
    brute_force: int
    formula: int | None = None
    tag: str | None = None
    agree: bool = True
    refinement: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        expected = self.formula is None or self.formula == self.brute_force
        if self.agree != expected:
            raise ValueError("agree must reflect the formula comparison")

    def csv_fields(self) -> list[str]:
        return [
            str(self.n),
            self.chain,
            str(self.brute_force),
            "" if self.formula is None else str(self.formula),
            self.tag or "",
            "true" if self.agree else "false",
            "" if self.refinement is None else ",".join(str(c) for c in self.refinement),
        ]

    def json_object(self) -> dict:
        return {
            "n": self.n,
            "chain": self.chain,
            "brute_force": self.brute_force,
            "formula": self.formula,
            "tag": self.tag,
            "agree": self.agree,
            "refinement": None if self.refinement is None else list(self.refinement),
        }


def render_report(rows: list[VerificationRow], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([row.json_object() for row in rows], indent=2) + "\n"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(_FIELDS)
    for row in rows:
        writer.writerow(row.csv_fields())
    return buffer.getvalue()


def _emit(rows: list[VerificationRow], args: argparse.Namespace) -> None:
    text = render_report(rows, args.format)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _effective_jobs(jobs: int, n: int) -> int:
    # Forking workers costs more than scanning n! words for small n.
    return jobs if n >= 7 else 1


def _words_ending_in_1(n: int):
    if n == 1:
        yield (1,)
        return
    for tail in itertools.permutations(range(2, n + 1)):
        yield tail + (1,)


def cmd_count(args: argparse.Namespace) -> int:
    chain = parse_chain(args.chain)
    rows = []
    for n in range(1, args.n_max + 1):
        ref = count_chain(n, chain, jobs=_effective_jobs(args.jobs, n), force=args.force)
        rows.append(
            VerificationRow(
                n=n,
                chain=chain.text(),
                brute_force=ref.total,
                refinement=ref.by_position_of_one,
            )
        )
    _emit(rows, args)
    return 0


def _selected_formulas(tags_text: str):
    if tags_text.strip().lower() == "all":
        return formula_table()
    return [formula_by_tag(tag.strip()) for tag in tags_text.split(",")]


def cmd_verify(args: argparse.Namespace) -> int:
    rows = []
    failures = []
    for formula in _selected_formulas(args.tags):
        for n in range(formula.valid_from, args.n_max + 1):
            expected = evaluate(formula, n)
            for side, chain in (("231", formula.chain_231), ("312", formula.chain_312)):
                got = count_chain(
                    n, chain, jobs=_effective_jobs(args.jobs, n), force=args.force
                ).total
                agree = got == expected
                rows.append(
                    VerificationRow(
                        n=n,
                        chain=chain.text(),
                        brute_force=got,
                        formula=expected,
                        tag=formula.tag,
                        agree=agree,
                    )
                )
                if not agree:
                    failures.append((formula.tag, n, side, got, expected))
    if not rows:
        print("no rows: every selected formula starts above n_max", file=sys.stderr)
    _emit(rows, args)
    if failures:
        tag, n, side, got, expected = failures[0]
        print(
            f"disagreement: tag={tag} n={n} side={side} "
            f"brute_force={got} formula={expected}",
            file=sys.stderr,
        )
        return 1
    return 0


def cmd_symmetry(args: argparse.Namespace) -> int:
    rows = []
    failures = []
    for formula in formula_table():
        for n in range(1, args.n_max + 1):
            jobs = _effective_jobs(args.jobs, n)
            left = count_chain(n, formula.chain_231, jobs=jobs, force=args.force).total
            right = count_chain(n, formula.chain_312, jobs=jobs, force=args.force).total
            agree = left == right
            rows.append(
                VerificationRow(
                    n=n,
                    chain=formula.chain_231.text(),
                    brute_force=left,
                    formula=right,
                    tag=formula.tag,
                    agree=agree,
                )
            )
            if not agree:
                failures.append((formula.tag, n, left, right))
    _emit(rows, args)
    if failures:
        tag, n, left, right = failures[0]
        print(
            f"mirror count mismatch: tag={tag} n={n} "
            f"chain_231 count={left} chain_312 count={right}",
            file=sys.stderr,
        )
        return 1
    return 0


def _describe_structure_witness(pi: Permutation) -> str:
    occurrence = find_occurrence(pi, _PATTERN_312)
    if occurrence is not None:
        return f"{pi.text()} itself contains 312 at positions {occurrence}"
    square = pi.power(2)
    occurrence = find_occurrence(square, _PATTERN_312)
    if occurrence is not None:
        return (
            f"the square of {pi.text()} is {square.text()}, "
            f"which contains 312 at positions {occurrence}"
        )
    return f"{pi.text()} and its square {square.text()} both avoid 312"


def cmd_structure(args: argparse.Namespace) -> int:
    rows = []
    first_witness = None
    for n in range(1, args.n_max + 1):
        strong_words = set()
        classified_words = set()
        witness = None
        for word in _words_ending_in_1(n):
            pi = Permutation(word)
            is_strong = strongly_avoids(pi, _PATTERN_312)
            k = classify_strong_312_ending_in_1(pi)
            if is_strong:
                strong_words.add(word)
            if k is not None:
                classified_words.add(word)
            if is_strong != (k is not None) and witness is None:
                witness = pi
        agree = strong_words == classified_words
        rows.append(
            VerificationRow(
                n=n,
                chain="312:312",
                brute_force=len(strong_words),
                formula=len(classified_words),
                agree=agree,
                refinement=tuple(breakpoint_range(n)),
            )
        )
        if witness is not None and first_witness is None:
            first_witness = (n, witness)
        # The classified words are exactly the admissible unimodal forms.
        assert len(classified_words) == len(unimodal_forms(n))
    _emit(rows, args)
    if first_witness is not None:
        n, pi = first_witness
        print(
            f"counterexample at n={n}: {_describe_structure_witness(pi)}",
            file=sys.stderr,
        )
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chainperm",
        description="Brute-force verification of chain pattern avoidance counts.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="report format"
    )
    common.add_argument("--out", help="write the report to this file instead of stdout")
    common.add_argument(
        "--jobs",
        type=int,
        default=os.cpu_count() or 1,
        help="worker processes for the enumeration (default: all cores)",
    )
    common.add_argument(
        "--force",
        action="store_true",
        help="allow sizes above the enumeration bound",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser(
        "count", parents=[common], help="brute-force totals for one chain"
    )
    count.add_argument("--chain", required=True, help="chain text, e.g. '312,231:312'")
    count.add_argument("--n-max", type=int, default=9, help="largest size to count")
    count.set_defaults(func=cmd_count)

    verify = sub.add_parser(
        "verify", parents=[common], help="check closed forms against brute force"
    )
    verify.add_argument(
        "--tags",
        default="all",
        help="comma-separated formula tags, or 'all' (default)",
    )
    verify.add_argument("--n-max", type=int, default=8, help="largest size to check")
    verify.set_defaults(func=cmd_verify)

    structure = sub.add_parser(
        "structure",
        parents=[common],
        help="check the unimodal shape of strong 312 avoiders ending in 1",
    )
    structure.add_argument("--n-max", type=int, default=9, help="largest size to check")
    structure.set_defaults(func=cmd_structure)

    symmetry = sub.add_parser(
        "symmetry",
        parents=[common],
        help="check that mirrored chains have equal counts",
    )
    symmetry.add_argument("--n-max", type=int, default=8, help="largest size to check")
    symmetry.set_defaults(func=cmd_symmetry)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n_max < 1:
        print("error: --n-max must be >= 1", file=sys.stderr)
        return 2
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return 2
    if args.n_max > MAX_ENUMERATION_N and not args.force:
        print(
            f"error: --n-max {args.n_max} walks more than {MAX_ENUMERATION_N}! "
            "permutations; pass --force to run anyway",
            file=sys.stderr,
        )
        return 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
