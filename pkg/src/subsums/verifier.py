"""Exhaustive verification campaigns over bounded universes.

A sweep enumerates every k-subset of [-max_abs, max_abs] (optionally
crossed with a range of multiplicities), computes the thresholded sum
set for each alpha under the policy, evaluates every applicable floor,
and aggregates: violation and tightness tallies plus the empirical
minimum size per (k, alpha) cell with example witnesses.

Determinism: instances are visited in lexicographic element order
(ascending k, then ascending r); aggregation is associative and merged
in instance order, so reports are identical for any worker count apart
from the elapsed-time field. Work is refused up front, not truncated,
when the instance-alpha pair count would exceed the budget.
"""

from __future__ import annotations

import csv
import itertools
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator, Sequence

from . import engine, oracle
from .bounds import BoundResult, applicable_bounds
from .model import IntegerSet, RepSequence, SumSet

DEFAULT_BUDGET = 10**6
WITNESS_CAP = 16
_CHUNK = 512


class BudgetExceeded(RuntimeError):
    """Raised before any work starts when a sweep would be too large."""


@dataclass(frozen=True)
class BoundCheck:
    bound: BoundResult
    tight: bool


@dataclass(frozen=True)
class VerificationRecord:
    """One (instance, alpha) row of a campaign."""

    instance: str
    r: int | None
    alpha: int
    sigma_size: int
    bounds: tuple[BoundCheck, ...]
    oracle_checked: bool
    violation: bool


@dataclass
class CampaignReport:
    """Aggregated result of one campaign."""

    universe: dict
    instances: int
    checks: int
    violations: int
    oracle_checked: int
    tight_by_theorem: dict[str, int]
    minima: list[dict]
    elapsed_ms: int
    records: list[VerificationRecord] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "universe": self.universe,
            "counts": {
                "instances": self.instances,
                "checks": self.checks,
                "violations": self.violations,
                "oracle_checked": self.oracle_checked,
            },
            "tight_by_theorem": dict(sorted(self.tight_by_theorem.items())),
            "minima": self.minima,
            "elapsed_ms": self.elapsed_ms,
        }


def write_records_csv(records: Iterable[VerificationRecord], path: str) -> None:
    """One CSV row per (record, bound); bound columns empty when no floor
    applies (e.g. the degenerate full-length sequence threshold)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            [
                "instance",
                "r",
                "alpha",
                "size",
                "theorem_id",
                "case",
                "bound",
                "tight",
                "violation",
            ]
        )
        for rec in records:
            head = [rec.instance, "" if rec.r is None else rec.r, rec.alpha,
                    rec.sigma_size]
            if not rec.bounds:
                writer.writerow(head + ["", "", "", "", int(rec.violation)])
                continue
            for chk in rec.bounds:
                writer.writerow(
                    head
                    + [
                        chk.bound.theorem_id,
                        chk.bound.case_label or "",
                        chk.bound.value,
                        int(chk.tight),
                        int(rec.violation),
                    ]
                )


# -- aggregation -------------------------------------------------------

def _new_agg() -> dict:
    return {
        "instances": 0,
        "checks": 0,
        "violations": 0,
        "oracle_checked": 0,
        "tight": Counter(),
        "minima": {},
        "records": [],
    }


def _note_minimum(minima: dict, key: tuple, size: int, literal: str) -> None:
    cur = minima.get(key)
    if cur is None or size < cur[0]:
        minima[key] = (size, [literal])
    elif size == cur[0] and len(cur[1]) < WITNESS_CAP:
        cur[1].append(literal)


def _merge_aggs(dst: dict, src: dict) -> None:
    dst["instances"] += src["instances"]
    dst["checks"] += src["checks"]
    dst["violations"] += src["violations"]
    dst["oracle_checked"] += src["oracle_checked"]
    dst["tight"].update(src["tight"])
    for key, (size, wits) in src["minima"].items():
        cur = dst["minima"].get(key)
        if cur is None or size < cur[0]:
            dst["minima"][key] = (size, list(wits[:WITNESS_CAP]))
        elif size == cur[0]:
            room = WITNESS_CAP - len(cur[1])
            if room > 0:
                cur[1].extend(wits[:room])
    dst["records"].extend(src["records"])


def _alphas(policy, total: int) -> list[int]:
    if policy == "all":
        return list(range(total + 1))
    return [a for a in policy if 0 <= a <= total]


def _policy_echo(policy) -> object:
    return policy if policy == "all" else sorted(set(policy))


# -- per-instance scans ------------------------------------------------

def _check_bounds(
    agg: dict,
    instance: IntegerSet | RepSequence,
    alpha: int,
    size: int,
) -> tuple[tuple[BoundCheck, ...], bool]:
    checks = []
    violation = False
    for bound in applicable_bounds(instance, alpha):
        tight = size == bound.value
        if bound.value > size:
            violation = True
        if tight:
            agg["tight"][bound.theorem_id] += 1
        agg["checks"] += 1
        checks.append(BoundCheck(bound, tight))
    if violation:
        agg["violations"] += 1
    return tuple(checks), violation


def _oracle_suffixes(by_size: list[set[int]]) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = [()] * len(by_size)
    acc: set[int] = set()
    for c in range(len(by_size) - 1, -1, -1):
        acc |= by_size[c]
        out[c] = tuple(sorted(acc))
    return out


def _scan_set(agg: dict, elems: tuple[int, ...], policy, use_oracle: bool,
              collect: bool) -> None:
    inst = IntegerSet(elems)
    k = inst.k
    layers, offset = engine.subset_layers(inst)
    suffix = [0] * (k + 2)
    for c in range(k, -1, -1):
        suffix[c] = suffix[c + 1] | layers[c]
    expected = None
    if use_oracle:
        expected = _oracle_suffixes(oracle.subset_sums_by_size(inst))
    literal = inst.literal()
    agg["instances"] += 1
    for alpha in _alphas(policy, k):
        bitmap = suffix[alpha]
        size = bitmap.bit_count()
        if expected is not None:
            if SumSet.from_bitmap(bitmap, offset).sums != expected[alpha]:
                raise RuntimeError(
                    f"engine/oracle mismatch on {literal} alpha={alpha}"
                )
            agg["oracle_checked"] += 1
        checks, violation = _check_bounds(agg, inst, alpha, size)
        _note_minimum(agg["minima"], (k, alpha), size, literal)
        if collect:
            agg["records"].append(
                VerificationRecord(
                    literal, None, alpha, size, checks, use_oracle, violation
                )
            )


def _scan_sequence(agg: dict, elems: tuple[int, ...], r: int, policy,
                   use_oracle: bool, collect: bool) -> None:
    inst = RepSequence(IntegerSet(elems), r)
    total = inst.length
    layers, offset = engine.sequence_layers(inst)
    suffix = [0] * (total + 2)
    for c in range(total, -1, -1):
        suffix[c] = suffix[c + 1] | layers[c]
    expected = None
    if use_oracle:
        expected = _oracle_suffixes(oracle.sequence_sums_by_size(inst))
    literal = inst.base.literal()
    agg["instances"] += 1
    for alpha in _alphas(policy, total):
        bitmap = suffix[alpha]
        size = bitmap.bit_count()
        if expected is not None:
            if SumSet.from_bitmap(bitmap, offset).sums != expected[alpha]:
                raise RuntimeError(
                    f"engine/oracle mismatch on {literal} r={r} alpha={alpha}"
                )
            agg["oracle_checked"] += 1
        checks, violation = _check_bounds(agg, inst, alpha, size)
        _note_minimum(agg["minima"], (inst.base.k, r, alpha), size, literal)
        if collect:
            agg["records"].append(
                VerificationRecord(
                    literal, r, alpha, size, checks, use_oracle, violation
                )
            )


def _set_chunk_worker(payload) -> dict:
    chunk, policy, use_oracle, collect = payload
    agg = _new_agg()
    for elems in chunk:
        _scan_set(agg, elems, policy, use_oracle, collect)
    return agg


def _seq_chunk_worker(payload) -> dict:
    chunk, policy, use_oracle, collect = payload
    agg = _new_agg()
    for elems, r in chunk:
        _scan_sequence(agg, elems, r, policy, use_oracle, collect)
    return agg


def _chunks(items: Iterable, size: int) -> Iterator[list]:
    batch: list = []
    for item in items:
        batch.append(item)
        if len(batch) >= size:
            yield batch
            batch = []
    if batch:
        yield batch


def _run_chunked(worker, instances, policy, use_oracle, collect,
                 workers: int) -> dict:
    agg = _new_agg()
    payloads = (
        (chunk, policy, use_oracle, collect)
        for chunk in _chunks(instances, _CHUNK)
    )
    if workers <= 1:
        for payload in payloads:
            _merge_aggs(agg, worker(payload))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for partial in pool.map(worker, payloads):
                _merge_aggs(agg, partial)
    return agg


# -- campaign entry points ---------------------------------------------

def _alpha_count(policy, total: int) -> int:
    if policy == "all":
        return total + 1
    return sum(1 for a in policy if 0 <= a <= total)


def sweep_sets(
    max_abs: int,
    k_range: Iterable[int],
    alpha_policy="all",
    oracle_check: bool = False,
    *,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
    collect_records: bool = False,
) -> CampaignReport:
    """Verify every floor over all k-subsets of [-max_abs, max_abs]."""
    started = time.perf_counter()
    ks = sorted(set(int(k) for k in k_range))
    if not ks or ks[0] < 1:
        raise ValueError("k range must contain only integers >= 1")
    pool_size = 2 * max_abs + 1
    pairs = sum(
        comb(pool_size, k) * _alpha_count(alpha_policy, k) for k in ks
    )
    if pairs > budget:
        raise BudgetExceeded(
            f"sweep needs {pairs} instance-alpha pairs; budget is {budget}"
        )
    values = range(-max_abs, max_abs + 1)
    instances = itertools.chain.from_iterable(
        itertools.combinations(values, k) for k in ks
    )
    agg = _run_chunked(
        _set_chunk_worker, instances, alpha_policy, oracle_check,
        collect_records, workers,
    )
    universe = {
        "kind": "sets",
        "max_abs": max_abs,
        "k": ks,
        "alpha_policy": _policy_echo(alpha_policy),
        "oracle": oracle_check,
    }
    return _finish(universe, agg, started, with_r=False)


def sweep_sequences(
    max_abs: int,
    k_range: Iterable[int],
    r_range: Iterable[int],
    alpha_policy="all",
    oracle_check: bool = False,
    *,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
    collect_records: bool = False,
) -> CampaignReport:
    """Verify every floor over all base k-subsets of [-max_abs, max_abs]
    crossed with every multiplicity in r_range."""
    started = time.perf_counter()
    ks = sorted(set(int(k) for k in k_range))
    rs = sorted(set(int(r) for r in r_range))
    if not ks or ks[0] < 1:
        raise ValueError("k range must contain only integers >= 1")
    if not rs or rs[0] < 1:
        raise ValueError("r range must contain only integers >= 1")
    pool_size = 2 * max_abs + 1
    pairs = sum(
        comb(pool_size, k) * _alpha_count(alpha_policy, r * k)
        for k in ks
        for r in rs
    )
    if pairs > budget:
        raise BudgetExceeded(
            f"sweep needs {pairs} instance-alpha pairs; budget is {budget}"
        )
    values = range(-max_abs, max_abs + 1)
    instances = (
        (elems, r)
        for k in ks
        for elems in itertools.combinations(values, k)
        for r in rs
    )
    agg = _run_chunked(
        _seq_chunk_worker, instances, alpha_policy, oracle_check,
        collect_records, workers,
    )
    universe = {
        "kind": "sequences",
        "max_abs": max_abs,
        "k": ks,
        "r": rs,
        "alpha_policy": _policy_echo(alpha_policy),
        "oracle": oracle_check,
    }
    return _finish(universe, agg, started, with_r=True)


def _finish(universe: dict, agg: dict, started: float, with_r: bool
            ) -> CampaignReport:
    minima = []
    for key in sorted(agg["minima"]):
        size, wits = agg["minima"][key]
        cell = {"k": key[0]}
        if with_r:
            cell["r"] = key[1]
        cell["alpha"] = key[-1]
        cell["size"] = size
        cell["witnesses"] = wits
        minima.append(cell)
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    return CampaignReport(
        universe=universe,
        instances=agg["instances"],
        checks=agg["checks"],
        violations=agg["violations"],
        oracle_checked=agg["oracle_checked"],
        tight_by_theorem=dict(agg["tight"]),
        minima=minima,
        elapsed_ms=elapsed_ms,
        records=agg["records"],
    )


def empirical_minimum(
    k: int,
    alpha: int,
    max_abs: int,
    zero_policy: str = "any",
    *,
    budget: int = DEFAULT_BUDGET,
    witness_cap: int = WITNESS_CAP,
) -> tuple[int, list[IntegerSet]]:
    """Smallest thresholded-sum-set size over all k-subsets of
    [-max_abs, max_abs], with up to witness_cap minimizing sets.

    zero_policy "require" keeps only subsets containing zero, "forbid"
    only those avoiding it, "any" all of them.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not 0 <= alpha <= k:
        raise ValueError(f"alpha={alpha} out of range [0, {k}]")
    if zero_policy not in ("any", "require", "forbid"):
        raise ValueError(f"unknown zero policy {zero_policy!r}")
    nonzero = [v for v in range(-max_abs, max_abs + 1) if v != 0]
    if zero_policy == "any":
        count = comb(2 * max_abs + 1, k)
        candidates: Iterable[Sequence[int]] = itertools.combinations(
            range(-max_abs, max_abs + 1), k
        )
    elif zero_policy == "forbid":
        count = comb(2 * max_abs, k)
        candidates = itertools.combinations(nonzero, k)
    else:
        count = comb(2 * max_abs, k - 1)
        candidates = (
            tuple(sorted(rest + (0,)))
            for rest in itertools.combinations(nonzero, k - 1)
        )
    if count > budget:
        raise BudgetExceeded(
            f"minimum search needs {count} instances; budget is {budget}"
        )
    best: int | None = None
    wits: list[IntegerSet] = []
    for elems in candidates:
        inst = IntegerSet(tuple(elems))
        size = engine.sigma(inst, alpha).size
        if best is None or size < best:
            best, wits = size, [inst]
        elif size == best and len(wits) < witness_cap:
            wits.append(inst)
    if best is None:
        raise ValueError("universe is empty; increase max_abs or lower k")
    return best, wits
