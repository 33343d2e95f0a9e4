"""Closed forms for the nine built-in chain-avoidance counts.

Each table row pairs two chains with equal counts (they are reverse
complements of each other) and the exact formula for that count.  All
arithmetic is integer only; the divisions in T42, T43 and T44 are exact
and checked.
"""

from dataclasses import dataclass
from typing import Callable

from .chains import ChainSpec, parse_chain


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def fibonacci(n: int) -> int:
    """Fibonacci numbers indexed so that F(1) = 1 and F(2) = 2.

    >>> [fibonacci(n) for n in range(1, 7)]
    [1, 2, 3, 5, 8, 13]
    """
    if n < 1:
        raise ValueError("fibonacci is defined for n >= 1")
    a, b = 1, 2
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def lucas(n: int) -> int:
    """Lucas numbers indexed so that L(1) = 1 and L(2) = 3.

    >>> [lucas(n) for n in range(1, 7)]
    [1, 3, 4, 7, 11, 18]
    """
    if n < 1:
        raise ValueError("lucas is defined for n >= 1")
    a, b = 1, 3
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def ceiling_half_sum(n: int) -> int:
    """Sum of ceil(i / 2) for i = 1..n, in closed form.

    Equals k^2 + k when n = 2k and k^2 + 2k + 1 when n = 2k + 1.
    """
    if n < 1:
        raise ValueError("ceiling_half_sum is defined for n >= 1")
    k, odd = divmod(n, 2)
    if odd:
        return k * k + 2 * k + 1
    return k * k + k


def _exact_div(numerator: int, divisor: int) -> int:
    quotient, remainder = divmod(numerator, divisor)
    if remainder:
        raise ArithmeticError(f"{numerator} is not divisible by {divisor}")
    return quotient


def _t31(n: int) -> int:
    return 2 * n - 3


def _t32(n: int) -> int:
    return fibonacci(n)


def _t33(n: int) -> int:
    k, odd = divmod(n, 2)
    return k * k + k + 1 if odd else k * k + 1


def _t34(n: int) -> int:
    return 2 ** (n - 1)


def _t41(n: int) -> int:
    return lucas(n + 1) - _ceil_half(n) - 1


def _t42(n: int) -> int:
    k, odd = divmod(n, 2)
    if odd:
        return _exact_div(14 * 4 ** (k - 1) - 2, 3)
    return _exact_div(7 * 4 ** (k - 1) - 1, 3)


def _t43(n: int) -> int:
    k, odd = divmod(n, 2)
    if odd:
        return _exact_div(4 * k**3 + 9 * k**2 + 5 * k, 6) + 1
    return _exact_div(4 * k**3 + 3 * k**2 - k, 6) + 1


@dataclass(frozen=True)
class FormulaId:
    """One row of the formula table.

    chain_231 and chain_312 are reverse complements of each other and
    count the same permutations; valid_from is the smallest n the closed
    form covers.
    """

    tag: str
    chain_231: ChainSpec
    chain_312: ChainSpec
    valid_from: int
    description: str

    def __post_init__(self) -> None:
        if self.chain_312 != self.chain_231.reverse_complement():
            raise ValueError(
                f"{self.tag}: the two chains must be reverse complements"
            )
        if self.valid_from < 1:
            raise ValueError(f"{self.tag}: valid_from must be >= 1")


_EVALUATORS: dict[str, Callable[[int], int]] = {
    "T31": _t31,
    "T32": _t32,
    "T33": _t33,
    "T34": _t34,
    "T35": _t33,
    "T41": _t41,
    "T42": _t42,
    "T43": _t43,
    "T44": _t43,
}

_ROWS = (
    ("T31", "123", "123", 3, "2n - 3"),
    ("T32", "321", "321", 1, "F(n) with F(1)=1, F(2)=2"),
    ("T33", "132", "213", 1, "k^2 + 1 for n = 2k, k^2 + k + 1 for n = 2k + 1"),
    ("T34", "312", "231", 1, "2^(n - 1)"),
    ("T35", "213", "132", 1, "k^2 + 1 for n = 2k, k^2 + k + 1 for n = 2k + 1"),
    ("T41", "1432", "3214", 1, "L(n + 1) - ceil(n / 2) - 1 with L(1)=1, L(2)=3"),
    ("T42", "1423", "2314", 2, "(7*4^(k-1) - 1)/3 for n = 2k, (14*4^(k-1) - 2)/3 for n = 2k + 1"),
    ("T43", "1243", "2134", 1, "(4k^3 + 3k^2 - k)/6 + 1 for n = 2k, (4k^3 + 9k^2 + 5k)/6 + 1 for n = 2k + 1"),
    ("T44", "2143", "2143", 1, "(4k^3 + 3k^2 - k)/6 + 1 for n = 2k, (4k^3 + 9k^2 + 5k)/6 + 1 for n = 2k + 1"),
)

_TABLE = tuple(
    FormulaId(
        tag=tag,
        chain_231=parse_chain(f"231,{side_231}:231"),
        chain_312=parse_chain(f"312,{side_312}:312"),
        valid_from=valid_from,
        description=description,
    )
    for tag, side_231, side_312, valid_from, description in _ROWS
)

_BY_TAG = {row.tag: row for row in _TABLE}


def formula_table() -> list[FormulaId]:
    """All nine rows, in tag order."""
    return list(_TABLE)


def formula_by_tag(tag: str) -> FormulaId:
    """Look one row up by tag, e.g. 'T41'."""
    try:
        return _BY_TAG[tag]
    except KeyError:
        known = ", ".join(sorted(_BY_TAG))
        raise ValueError(f"unknown formula tag {tag!r} (known: {known})") from None


def evaluate(formula: FormulaId, n: int) -> int:
    """The exact count the row predicts at size n.

    >>> evaluate(formula_by_tag("T34"), 6)
    32
    """
    if n < formula.valid_from:
        raise ValueError(
            f"{formula.tag} is stated for n >= {formula.valid_from}, got n={n}"
        )
    return _EVALUATORS[formula.tag](n)
