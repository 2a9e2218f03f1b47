"""Families of instances that attain the size floors with equality, and
a checker that confirms tightness point by point.

Each family pairs a construction (an interval-shaped set or repeated
sequence) with the one floor it is claimed to attain for every alpha in
the floor's range. check_tightness recomputes the achievable-sum set
with the engine and compares sizes exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bounds, engine
from .model import IntegerSet, RepSequence

POS_INTERVAL = "pos-interval"
NONNEG_INTERVAL = "nonneg-interval"
MIXED_PUNCTURED = "mixed-punctured"
MIXED_FULL = "mixed-full"
POS_INTERVAL_R = "pos-interval-r"
NONNEG_INTERVAL_R = "nonneg-interval-r"
MIXED_PUNCTURED_R = "mixed-punctured-r"
MIXED_FULL_R = "mixed-full-r"

FAMILY_IDS = (
    POS_INTERVAL,
    NONNEG_INTERVAL,
    MIXED_PUNCTURED,
    MIXED_FULL,
    POS_INTERVAL_R,
    NONNEG_INTERVAL_R,
    MIXED_PUNCTURED_R,
    MIXED_FULL_R,
)

_INTERVAL_FAMILIES = {POS_INTERVAL, NONNEG_INTERVAL, POS_INTERVAL_R, NONNEG_INTERVAL_R}
_MIXED_FAMILIES = {MIXED_PUNCTURED, MIXED_FULL, MIXED_PUNCTURED_R, MIXED_FULL_R}
_SEQ_FAMILIES = {POS_INTERVAL_R, NONNEG_INTERVAL_R, MIXED_PUNCTURED_R, MIXED_FULL_R}


@dataclass(frozen=True)
class WitnessFamily:
    """A parameterized extremal construction.

    Interval families take k (and r for sequence variants); mixed
    families take n and p (and r). Parameters must satisfy the matched
    floor's hypotheses, e.g. k >= 2 for sequence interval families.
    """

    family_id: str
    k: int | None = None
    n: int | None = None
    p: int | None = None
    r: int | None = None

    def __post_init__(self) -> None:
        if self.family_id not in FAMILY_IDS:
            raise ValueError(f"unknown family {self.family_id!r}")
        seq = self.family_id in _SEQ_FAMILIES
        if seq:
            if self.r is None or self.r < 1:
                raise ValueError(f"{self.family_id} needs r >= 1")
        elif self.r is not None:
            raise ValueError(f"{self.family_id} takes no r parameter")
        if self.family_id in _INTERVAL_FAMILIES:
            floor_k = 2 if seq else 1
            if self.k is None or self.k < floor_k:
                raise ValueError(f"{self.family_id} needs k >= {floor_k}")
            if self.n is not None or self.p is not None:
                raise ValueError(f"{self.family_id} takes only k (and r)")
        else:
            if self.n is None or self.n < 1 or self.p is None or self.p < 1:
                raise ValueError(f"{self.family_id} needs n >= 1 and p >= 1")
            if self.k is not None:
                raise ValueError(f"{self.family_id} takes n and p, not k")

    @property
    def is_sequence(self) -> bool:
        return self.family_id in _SEQ_FAMILIES


@dataclass(frozen=True)
class TightnessReport:
    family: WitnessFamily
    alpha: int
    computed_size: int
    bound: bounds.BoundResult
    tight: bool

    def to_json(self) -> dict:
        fam = {"family": self.family.family_id}
        for name in ("k", "n", "p", "r"):
            value = getattr(self.family, name)
            if value is not None:
                fam[name] = value
        return {
            **fam,
            "alpha": self.alpha,
            "size": self.computed_size,
            "bound": self.bound.to_json(),
            "tight": self.tight,
        }


def _base_set(fam: WitnessFamily) -> IntegerSet:
    if fam.family_id in (POS_INTERVAL, POS_INTERVAL_R):
        return IntegerSet(tuple(range(1, fam.k + 1)))
    if fam.family_id in (NONNEG_INTERVAL, NONNEG_INTERVAL_R):
        return IntegerSet(tuple(range(0, fam.k)))
    if fam.family_id in (MIXED_PUNCTURED, MIXED_PUNCTURED_R):
        return IntegerSet(tuple(range(-fam.n, 0)) + tuple(range(1, fam.p + 1)))
    return IntegerSet(tuple(range(-fam.n, fam.p + 1)))


def witness(fam: WitnessFamily) -> IntegerSet | RepSequence:
    """Materialize the family's instance."""
    base = _base_set(fam)
    if fam.is_sequence:
        return RepSequence(base, fam.r)
    return base


def claimed_bound(fam: WitnessFamily, alpha: int) -> bounds.BoundResult:
    """The floor this family is claimed to attain, evaluated at alpha."""
    if fam.family_id == POS_INTERVAL:
        return bounds.bound_disjoint(fam.k, alpha)
    if fam.family_id == NONNEG_INTERVAL:
        return bounds.bound_zero(fam.k, alpha)
    if fam.family_id == MIXED_PUNCTURED:
        return bounds.bound_mixed(fam.n, fam.p, alpha)
    if fam.family_id == MIXED_FULL:
        return bounds.bound_mixed_zero(fam.n, fam.p, alpha)
    if fam.family_id == POS_INTERVAL_R:
        return bounds.bound_seq_disjoint(fam.k, fam.r, alpha)
    if fam.family_id == NONNEG_INTERVAL_R:
        return bounds.bound_seq_zero(fam.k, fam.r, alpha)
    if fam.family_id == MIXED_PUNCTURED_R:
        return bounds.bound_seq_mixed(fam.n, fam.p, fam.r, alpha)
    return bounds.bound_seq_mixed_zero(fam.n, fam.p, fam.r, alpha)


def alpha_values(fam: WitnessFamily) -> range:
    """Thresholds covered by the matched floor: [0, k] for sets and
    [0, r*k - 1] for sequences (k counts distinct base elements)."""
    inst = witness(fam)
    if isinstance(inst, RepSequence):
        return range(0, inst.length)
    return range(0, inst.k + 1)


def check_tightness(fam: WitnessFamily, alpha: int) -> TightnessReport:
    """Compare the engine-computed size against the claimed floor."""
    inst = witness(fam)
    if isinstance(inst, RepSequence):
        size = engine.sigma_seq(inst, alpha).size
    else:
        size = engine.sigma(inst, alpha).size
    bound = claimed_bound(fam, alpha)
    return TightnessReport(fam, alpha, size, bound, size == bound.value)
