"""Domain types shared by the whole package.

Conventions:

  - An integer set holds k distinct integers, stored sorted ascending.
  - A repeated sequence pairs a base set with a uniform multiplicity
    r >= 1: every base element occurs exactly r times, so the sequence
    has r*k terms.
  - A thresholded sum query takes alpha and a mode. Mode "at_least"
    keeps sub-collections with at least alpha members; "at_most" keeps
    those with at most total - alpha members (total = k for sets, r*k
    for sequences). The two windows mirror each other around the total.
  - SumSet is a sorted, duplicate-free value object. Its bitmap form
    sets bit (s + offset) for each achievable sum s, with offset equal
    to the negated minimum sum, so indices are always nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

AT_LEAST = "at_least"
AT_MOST = "at_most"
MODES = (AT_LEAST, AT_MOST)

UNRESTRICTED = "unrestricted"
RESTRICTED = "restricted"
GENERALIZED = "generalized"
FOLD_KINDS = (UNRESTRICTED, RESTRICTED, GENERALIZED)


class ParseError(ValueError):
    """Malformed, empty, duplicated, or out-of-range instance literal."""


@dataclass(frozen=True)
class Limits:
    """Input caps that keep bitmap widths and enumerations predictable."""

    max_abs_value: int = 10**6
    max_k: int = 64
    max_r: int = 64


DEFAULT_LIMITS = Limits()


def size_window(alpha: int, total: int, mode: str) -> range:
    """Member-count window selected by (alpha, mode) within [0, total]."""
    if not 0 <= alpha <= total:
        raise ValueError(f"alpha={alpha} out of range [0, {total}]")
    if mode == AT_LEAST:
        return range(alpha, total + 1)
    if mode == AT_MOST:
        return range(0, total - alpha + 1)
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


@dataclass(frozen=True)
class IntegerSet:
    """Nonempty set of distinct integers, kept sorted ascending."""

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.elements:
            raise ValueError("integer set must be nonempty")
        if any(b <= a for a, b in zip(self.elements, self.elements[1:])):
            raise ValueError("elements must be strictly increasing")

    @classmethod
    def from_iterable(
        cls, values: Iterable[int], limits: Limits = DEFAULT_LIMITS
    ) -> "IntegerSet":
        """Build from arbitrary integers, deduplicating and enforcing caps."""
        elems = tuple(sorted({int(v) for v in values}))
        if not elems:
            raise ValueError("integer set must be nonempty")
        if len(elems) > limits.max_k:
            raise ValueError(f"set has {len(elems)} elements; cap is {limits.max_k}")
        worst = max(abs(elems[0]), abs(elems[-1]))
        if worst > limits.max_abs_value:
            raise ValueError(
                f"element magnitude {worst} exceeds cap {limits.max_abs_value}"
            )
        return cls(elems)

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def total(self) -> int:
        return sum(self.elements)

    def negate(self) -> "IntegerSet":
        return IntegerSet(tuple(-x for x in reversed(self.elements)))

    def dilate(self, factor: int) -> "IntegerSet":
        """Multiply every element by a nonzero integer factor."""
        if factor == 0:
            raise ValueError("dilation factor must be nonzero")
        scaled = tuple(x * factor for x in self.elements)
        return IntegerSet(scaled if factor > 0 else scaled[::-1])

    def literal(self) -> str:
        """Canonical brace literal, parseable by parse_set."""
        return "{" + ",".join(str(x) for x in self.elements) + "}"

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, value: object) -> bool:
        return value in self.elements


@dataclass(frozen=True)
class RepSequence:
    """Base set with every element repeated exactly r times."""

    base: IntegerSet
    r: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("multiplicity r must be >= 1")

    @property
    def length(self) -> int:
        return self.r * self.base.k

    @property
    def total(self) -> int:
        return self.r * self.base.total

    def negate(self) -> "RepSequence":
        return RepSequence(self.base.negate(), self.r)


@dataclass(frozen=True)
class SignProfile:
    """Sign census of a set: negative count, positive count, zero flag,
    plus the two symmetry predicates the bound dispatcher keys on."""

    n: int
    p: int
    has_zero: bool
    self_disjoint: bool
    self_meet_zero: bool


def classify(a: IntegerSet) -> SignProfile:
    """Sign profile of a set. self_disjoint means no element's negation
    is present; self_meet_zero means zero is the only such coincidence."""
    elems = set(a.elements)
    meet = elems & {-x for x in elems}
    return SignProfile(
        n=sum(1 for x in a.elements if x < 0),
        p=sum(1 for x in a.elements if x > 0),
        has_zero=0 in elems,
        self_disjoint=not meet,
        self_meet_zero=meet == {0},
    )


@dataclass(frozen=True)
class SumSet:
    """Sorted, duplicate-free, nonempty set of achievable sums."""

    sums: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.sums:
            raise ValueError("sum set must be nonempty")
        if any(b <= a for a, b in zip(self.sums, self.sums[1:])):
            raise ValueError("sums must be strictly increasing")

    @classmethod
    def from_iterable(cls, values: Iterable[int]) -> "SumSet":
        return cls(tuple(sorted(set(values))))

    @classmethod
    def from_bitmap(cls, bitmap: int, offset: int) -> "SumSet":
        """Decode a bitmap where bit i means sum i - offset is achievable."""
        if bitmap <= 0:
            raise ValueError("bitmap must have at least one bit set")
        out = []
        while bitmap:
            low = bitmap & -bitmap
            out.append(low.bit_length() - 1 - offset)
            bitmap ^= low
        return cls(tuple(out))

    def to_bitmap(self) -> tuple[int, int]:
        """Encode as (bitmap, offset) with offset = -min_sum."""
        base = self.sums[0]
        bitmap = 0
        for s in self.sums:
            bitmap |= 1 << (s - base)
        return bitmap, -base

    @property
    def size(self) -> int:
        return len(self.sums)

    @property
    def min_sum(self) -> int:
        return self.sums[0]

    @property
    def max_sum(self) -> int:
        return self.sums[-1]

    def reflect(self, total: int) -> "SumSet":
        """Mirror every sum s to total - s."""
        return SumSet(tuple(total - s for s in reversed(self.sums)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.sums)

    def __len__(self) -> int:
        return len(self.sums)

    def __contains__(self, value: object) -> bool:
        return value in self.sums


def parse_set(text: str, limits: Limits = DEFAULT_LIMITS) -> IntegerSet:
    """Parse a set literal: "{a,b,...}" or interval shorthand "[a,b]".

    Raises ParseError on malformed syntax, empty sets, duplicates,
    reversed intervals, or cap violations.
    """
    s = text.strip()
    if s.startswith("{") and s.endswith("}"):
        body = s[1:-1].strip()
        if not body:
            raise ParseError("empty set literal")
        try:
            values = [int(part.strip()) for part in body.split(",")]
        except ValueError:
            raise ParseError(f"malformed set literal: {text!r}") from None
        if len(set(values)) != len(values):
            raise ParseError(f"duplicate element in set literal: {text!r}")
        return _capped(values, limits)
    if s.startswith("[") and s.endswith("]"):
        parts = s[1:-1].split(",")
        if len(parts) != 2:
            raise ParseError(f"interval literal needs two endpoints: {text!r}")
        try:
            lo, hi = int(parts[0].strip()), int(parts[1].strip())
        except ValueError:
            raise ParseError(f"malformed interval literal: {text!r}") from None
        if hi < lo:
            raise ParseError(f"interval [{lo},{hi}] is empty")
        return _capped(range(lo, hi + 1), limits)
    raise ParseError(f"unrecognized set literal: {text!r}")


def _capped(values: Iterable[int], limits: Limits) -> IntegerSet:
    try:
        return IntegerSet.from_iterable(values, limits)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_sequence(
    text: str, r: int, limits: Limits = DEFAULT_LIMITS
) -> RepSequence:
    """Parse a base-set literal and attach a uniform multiplicity r."""
    if r < 1:
        raise ParseError("multiplicity r must be a positive integer")
    if r > limits.max_r:
        raise ParseError(f"multiplicity {r} exceeds cap {limits.max_r}")
    return RepSequence(parse_set(text, limits), r)
