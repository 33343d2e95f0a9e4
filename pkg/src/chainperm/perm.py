"""Permutations in one-line notation.

A permutation of size n is stored as the word (pi(1), ..., pi(n)), a
rearrangement of 1..n.  Positions and values are both 1-based in every
public interface.  The empty permutation (n = 0) is allowed and acts as
the neutral element of both sum constructions.

Text form: sizes up to 9 use a plain digit string ("24153"), larger
sizes use comma-separated values ("10,3,1,...").  The parser accepts
either form.
"""

from dataclasses import dataclass
from typing import Iterable


class ParseError(ValueError):
    """Raised when permutation, pattern, or chain text cannot be parsed."""


@dataclass(frozen=True, eq=False)
class Permutation:
    """A bijection on {1, ..., n}, held as its one-line word.

    >>> Permutation((2, 4, 1, 5, 3))(2)
    4
    >>> str(Permutation((2, 4, 1, 5, 3)))
    '24153'
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        if sorted(values) != list(range(1, n + 1)):
            raise ValueError(f"{values!r} is not a permutation of 1..{n}")

    def __len__(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        """Apply the permutation to a 1-based position."""
        if not 1 <= i <= len(self.values):
            raise IndexError(f"position {i} out of range 1..{len(self.values)}")
        return self.values[i - 1]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Permutation):
            return self.values == other.values
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.values)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.values!r})"

    def text(self) -> str:
        """Canonical text form: digit string up to size 9, else comma-separated."""
        if len(self.values) <= 9:
            return "".join(str(v) for v in self.values)
        return ",".join(str(v) for v in self.values)

    def compose(self, inner: "Permutation") -> "Permutation":
        """The product self o inner, mapping i to self(inner(i)).

        >>> p = Permutation((2, 3, 1))
        >>> str(p.compose(p))
        '312'
        """
        if len(inner) != len(self):
            raise ValueError(
                f"cannot compose permutations of sizes {len(self)} and {len(inner)}"
            )
        return Permutation(tuple(self.values[j - 1] for j in inner.values))

    def power(self, k: int) -> "Permutation":
        """The k-th compositional power, with power 0 the identity."""
        if k < 0:
            raise ValueError("exponent must be >= 0")
        result = tuple(range(1, len(self.values) + 1))
        for _ in range(k):
            result = tuple(self.values[j - 1] for j in result)
        return Permutation(result)

    def reverse(self) -> "Permutation":
        """The word read right to left."""
        return Permutation(self.values[::-1])

    def complement(self) -> "Permutation":
        """Each value v replaced by n + 1 - v."""
        n = len(self.values)
        return Permutation(tuple(n + 1 - v for v in self.values))

    def reverse_complement(self) -> "Permutation":
        """Complement of the reverse.

        >>> str(Permutation((2, 3, 1)).reverse_complement())
        '312'
        """
        n = len(self.values)
        return Permutation(tuple(n + 1 - v for v in self.values[::-1]))

    def direct_sum(self, other: "Permutation") -> "Permutation":
        """self on 1..l, then other shifted up by l.

        >>> str(Permutation((2, 1)).direct_sum(Permutation((1, 3, 2))))
        '21354'
        """
        shift = len(self.values)
        return Permutation(self.values + tuple(v + shift for v in other.values))

    def skew_sum(self, other: "Permutation") -> "Permutation":
        """self shifted up by the size of other, then other.

        >>> str(Permutation((2, 1)).skew_sum(Permutation((1, 3, 2))))
        '54132'
        """
        shift = len(other.values)
        return Permutation(tuple(v + shift for v in self.values) + other.values)


def identity(n: int) -> Permutation:
    """The increasing word 1 2 ... n.

    >>> str(identity(4))
    '1234'
    """
    if n < 0:
        raise ValueError("size must be >= 0")
    return Permutation(tuple(range(1, n + 1)))


def reverse_identity(n: int) -> Permutation:
    """The decreasing word n ... 2 1.

    >>> str(reverse_identity(4))
    '4321'
    """
    if n < 0:
        raise ValueError("size must be >= 0")
    return Permutation(tuple(range(n, 0, -1)))


_DIGITS = set("123456789")


def parse_permutation(text: str) -> Permutation:
    """Parse either text form into a Permutation.

    >>> parse_permutation("24153").values
    (2, 4, 1, 5, 3)
    >>> parse_permutation("10,3,1,2,4,5,6,7,8,9")(1)
    10
    """
    s = text.strip()
    if not s:
        return Permutation(())
    if "," in s:
        parts = [p.strip() for p in s.split(",")]
        if any(not p for p in parts):
            raise ParseError(f"invalid permutation text {text!r}: empty entry")
        try:
            values = tuple(int(p) for p in parts)
        except ValueError:
            raise ParseError(
                f"invalid permutation text {text!r}: entries must be integers"
            ) from None
    else:
        if not set(s) <= _DIGITS:
            raise ParseError(
                f"invalid permutation text {text!r}: digit form allows only 1-9"
            )
        values = tuple(int(ch) for ch in s)
    try:
        return Permutation(values)
    except ValueError as exc:
        raise ParseError(f"invalid permutation text {text!r}: {exc}") from None
