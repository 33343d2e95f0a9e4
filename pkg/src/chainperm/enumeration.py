"""Exhaustive enumeration of chain avoiders.

Every count here walks all n! permutations, so sizes are capped at
MAX_ENUMERATION_N unless the caller forces past it.  Counting can be
partitioned by first entry into n independent shards, which makes the
work embarrassingly parallel; shard results are merged by summation, so
totals are identical for every worker count.
"""

import itertools
import multiprocessing
from dataclasses import dataclass
from typing import Iterator

from .chains import ChainSpec, _avoids_prepared, _prepare_levels, _scratch_for
from .perm import Permutation

MAX_ENUMERATION_N = 14


def _check_size(n: int, force: bool) -> None:
    if n < 0:
        raise ValueError("size must be >= 0")
    if n > MAX_ENUMERATION_N and not force:
        raise ValueError(
            f"n={n} walks {n}! permutations, above the supported bound "
            f"{MAX_ENUMERATION_N}; pass force=True (CLI: --force) to run anyway"
        )


def _iter_words(n: int, first: int | None = None) -> Iterator[tuple[int, ...]]:
    """All words of S_n in lexicographic order, optionally fixing word[0]."""
    if first is None:
        yield from itertools.permutations(range(1, n + 1))
    else:
        rest = [v for v in range(1, n + 1) if v != first]
        for tail in itertools.permutations(rest):
            yield (first, *tail)


def generate_sn(n: int, *, force: bool = False) -> Iterator[Permutation]:
    """Stream the whole symmetric group in lexicographic order.

    >>> [str(p) for p in generate_sn(3)]
    ['123', '132', '213', '231', '312', '321']
    """
    _check_size(n, force)

    def gen() -> Iterator[Permutation]:
        for word in _iter_words(n):
            yield Permutation(word)

    return gen()


@dataclass(frozen=True)
class CountRefinement:
    """A chain-avoider count together with its split by the position of 1.

    by_position_of_one[i - 1] counts the avoiders whose value 1 sits at
    position i, so the entries add up to the total (the split is empty
    only for n = 0, where no position holds a 1).
    """

    n: int
    chain: ChainSpec
    total: int
    by_position_of_one: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "by_position_of_one", tuple(self.by_position_of_one))
        if len(self.by_position_of_one) != (self.n if self.n else 0):
            raise ValueError("refinement vector must have one entry per position")
        if any(c < 0 for c in self.by_position_of_one):
            raise ValueError("refinement entries must be >= 0")
        if self.n >= 1 and self.total != sum(self.by_position_of_one):
            raise ValueError("refinement entries must add up to the total")


def _count_shard(
    n: int, prepared: tuple, first: int | None
) -> tuple[int, list[int]]:
    scratch = _scratch_for(prepared)
    total = 0
    by_pos = [0] * n
    for word in _iter_words(n, first):
        if _avoids_prepared(word, prepared, scratch):
            total += 1
            by_pos[word.index(1)] += 1
    return total, by_pos


def _count_shard_task(args: tuple) -> tuple[int, list[int]]:
    return _count_shard(*args)


def count_chain(
    n: int, chain: ChainSpec, *, jobs: int = 1, force: bool = False
) -> CountRefinement:
    """Count the chain avoiders in S_n by exhaustive scan.

    jobs > 1 splits the scan across worker processes by first entry.
    Results do not depend on the worker count.
    """
    _check_size(n, force)
    prepared = _prepare_levels(chain.level_values())
    if n == 0:
        return CountRefinement(0, chain, 1, ())
    workers = max(1, min(jobs, n))
    if workers == 1:
        total, by_pos = _count_shard(n, prepared, None)
    else:
        tasks = [(n, prepared, first) for first in range(1, n + 1)]
        with multiprocessing.Pool(workers) as pool:
            shards = pool.map(_count_shard_task, tasks)
        total = sum(t for t, _ in shards)
        by_pos = [sum(col) for col in zip(*(b for _, b in shards))]
    return CountRefinement(n, chain, total, tuple(by_pos))


def count_sequence(
    chain: ChainSpec, n_max: int, *, jobs: int = 1, force: bool = False
) -> list[int]:
    """Totals of count_chain for n = 1, ..., n_max."""
    _check_size(n_max, force)
    return [count_chain(n, chain, jobs=jobs, force=force).total for n in range(1, n_max + 1)]


def list_chain_avoiders(
    n: int, chain: ChainSpec, *, force: bool = False
) -> Iterator[Permutation]:
    """Stream the chain avoiders of S_n in lexicographic order."""
    _check_size(n, force)
    prepared = _prepare_levels(chain.level_values())
    scratch = _scratch_for(prepared)

    def gen() -> Iterator[Permutation]:
        for word in _iter_words(n):
            if _avoids_prepared(word, prepared, scratch):
                yield Permutation(word)

    return gen()
