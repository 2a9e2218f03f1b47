"""Exact sum-set computation via count-resolved bitmaps.

Representation: one arbitrary-precision integer per count layer. Bit
(s + offset) of layer c is set iff sum s is achievable by choosing
exactly c members, where offset is the negated minimum achievable sum
(the negative-element total, scaled by r for sequences). Inserting an
element x is then a single shift-or per layer, walking layers top-down
so each copy is used at most once. Intermediate indices never go
negative: any partial selection's sum stays at or above the sum of the
negative elements processed so far.

Repeated sequences reuse the same transition, inserting each base
element r times; copies of equal value are interchangeable, so layer c
ends up holding exactly the sums reachable with c copies total.

Thresholded queries union a window of layers. Folds read one layer.
All public functions return sums sorted ascending.
"""

from __future__ import annotations

from .bounds import min_fold_size, min_sumset_size
from .model import (
    AT_LEAST,
    GENERALIZED,
    IntegerSet,
    RESTRICTED,
    RepSequence,
    SumSet,
    UNRESTRICTED,
    size_window,
)


def _shift(bitmap: int, delta: int) -> int:
    return bitmap << delta if delta >= 0 else bitmap >> -delta


def subset_layers(a: IntegerSet) -> tuple[list[int], int]:
    """Bitmaps of achievable sums per subset size; returns (layers, offset)."""
    offset = -sum(x for x in a.elements if x < 0)
    layers = [0] * (a.k + 1)
    layers[0] = 1 << offset
    for seen, x in enumerate(a.elements):
        for c in range(seen, -1, -1):
            if layers[c]:
                layers[c + 1] |= _shift(layers[c], x)
    return layers, offset


def sequence_layers(s: RepSequence) -> tuple[list[int], int]:
    """Bitmaps of achievable sums per copy count; returns (layers, offset)."""
    offset = -s.r * sum(x for x in s.base.elements if x < 0)
    layers = [0] * (s.length + 1)
    layers[0] = 1 << offset
    seen = 0
    for x in s.base.elements:
        for _ in range(s.r):
            for c in range(seen, -1, -1):
                if layers[c]:
                    layers[c + 1] |= _shift(layers[c], x)
            seen += 1
    return layers, offset


def union_layers(layers: list[int], window: range) -> int:
    bitmap = 0
    for c in window:
        bitmap |= layers[c]
    return bitmap


def sigma(a: IntegerSet, alpha: int, mode: str = AT_LEAST) -> SumSet:
    """Sums over subsets whose size lies in the (alpha, mode) window."""
    window = size_window(alpha, a.k, mode)
    layers, offset = subset_layers(a)
    return SumSet.from_bitmap(union_layers(layers, window), offset)


def sigma_seq(s: RepSequence, alpha: int, mode: str = AT_LEAST) -> SumSet:
    """Sums over subsequences whose copy count lies in the window."""
    window = size_window(alpha, s.length, mode)
    layers, offset = sequence_layers(s)
    return SumSet.from_bitmap(union_layers(layers, window), offset)


def add_sets(a: SumSet, b: SumSet) -> SumSet:
    """Exact pairwise-sum set {x + y : x in a, y in b}."""
    bitmap_b, _ = b.to_bitmap()
    acc = 0
    base_a = a.min_sum
    for x in a.sums:
        acc |= bitmap_b << (x - base_a)
    out = SumSet.from_bitmap(acc, -(a.min_sum + b.min_sum))
    # the additive floor |a| + |b| - 1 holds for any nonempty integer sets
    assert out.size >= min_sumset_size(a.size, b.size)
    return out


def h_fold(a: IntegerSet, h: int) -> SumSet:
    """h-term repeated-sum set with unrestricted multiplicity, h >= 1."""
    if h < 1:
        raise ValueError("fold count h must be >= 1 (h = 0 is the zero singleton)")
    single = SumSet.from_iterable(a.elements)
    acc = single
    for _ in range(h - 1):
        acc = add_sets(acc, single)
    assert acc.size >= min_fold_size(h, a.k)
    return acc


def fold_fast(
    a: IntegerSet, h: int, kind: str = RESTRICTED, r: int | None = None
) -> SumSet:
    """h-term repeated-sum set; same contract as oracle_fold.

    kind "unrestricted" allows any multiplicity, "restricted" at most one
    use per element (h <= k), "generalized" at most r uses (h <= r*k).
    """
    if h < 0:
        raise ValueError("h must be >= 0")
    if h == 0:
        return SumSet((0,))
    if kind == UNRESTRICTED:
        return h_fold(a, h)
    if kind == RESTRICTED:
        if h > a.k:
            raise ValueError(f"restricted fold needs h <= k, got h={h}, k={a.k}")
        layers, offset = subset_layers(a)
        return SumSet.from_bitmap(layers[h], offset)
    if kind == GENERALIZED:
        if r is None or r < 1:
            raise ValueError("generalized fold needs multiplicity r >= 1")
        if h > r * a.k:
            raise ValueError(
                f"generalized fold needs h <= r*k, got h={h}, r*k={r * a.k}"
            )
        layers, offset = sequence_layers(RepSequence(a, r))
        return SumSet.from_bitmap(layers[h], offset)
    raise ValueError(f"unknown fold kind {kind!r}")
