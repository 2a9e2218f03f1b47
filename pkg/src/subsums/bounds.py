"""Closed-form size floors for thresholded sum sets, plus a dispatcher
that lists every floor applicable to a given instance.

All arithmetic is exact integer arithmetic. Case selection mirrors the
hypotheses of each floor: a boundary value (alpha or block index equal
to n or p) always falls into the <= branch. Identifiers such as T2_1 or
C3_4 are stable strings that appear verbatim in JSON and CSV reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import IntegerSet, RepSequence, classify

T1_1 = "T1_1"
T1_2 = "T1_2"
T1_3 = "T1_3"
T2_1 = "T2_1"
C2_2 = "C2_2"
T2_3 = "T2_3"
C2_4 = "C2_4"
C2_5 = "C2_5"
T3_1_DISJOINT = "T3_1_disjoint"
T3_1_ZERO = "T3_1_zero"
T3_2 = "T3_2"
C3_3 = "C3_3"
C3_4 = "C3_4"

ALL_THEOREM_IDS = (
    T1_1,
    T1_2,
    T1_3,
    T2_1,
    C2_2,
    T2_3,
    C2_4,
    C2_5,
    T3_1_DISJOINT,
    T3_1_ZERO,
    T3_2,
    C3_3,
    C3_4,
)


@dataclass(frozen=True)
class BoundResult:
    """One evaluated floor: identifier, selected case, value, and an echo
    of the parameters it was evaluated at."""

    theorem_id: str
    case_label: str | None
    value: int
    params: dict[str, int] = field(default_factory=dict)

    def label(self) -> str:
        if self.case_label is None:
            return self.theorem_id
        return f"{self.theorem_id}({self.case_label})"

    def to_json(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "case": self.case_label,
            "value": self.value,
            "params": dict(self.params),
        }


def _tri(x: int) -> int:
    # triangular number x(x+1)/2, exact
    return x * (x + 1) // 2


def _tri0(x: int) -> int:
    # shifted triangular number x(x-1)/2, exact
    return x * (x - 1) // 2


def min_sumset_size(size_a: int, size_b: int) -> int:
    """Least possible size of a pairwise-sum set of two nonempty sets."""
    if size_a < 1 or size_b < 1:
        raise ValueError("operand sizes must be >= 1")
    return size_a + size_b - 1


def min_fold_size(h: int, k: int) -> int:
    """Least possible size of an h-fold repeated-sum set of k values."""
    if h < 1 or k < 1:
        raise ValueError("h and k must be >= 1")
    return h * k - h + 1


def m_index(alpha: int, r: int) -> int:
    """Block index m with (m-1)*r <= alpha < m*r, i.e. alpha//r + 1."""
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    if r < 1:
        raise ValueError("r must be >= 1")
    return alpha // r + 1


def _check_alpha(alpha: int, hi: int) -> None:
    if not 0 <= alpha <= hi:
        raise ValueError(f"alpha={alpha} out of range [0, {hi}]")


def bound_disjoint(k: int, alpha: int) -> BoundResult:
    """Floor k(k+1)/2 - alpha(alpha+1)/2 + 1 for sets where no element's
    negation is also present."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_alpha(alpha, k)
    value = _tri(k) - _tri(alpha) + 1
    return BoundResult(T2_1, None, value, {"k": k, "alpha": alpha})


def bound_zero(k: int, alpha: int) -> BoundResult:
    """Floor k(k-1)/2 - alpha(alpha-1)/2 + 1 for sets where zero is the
    only element whose negation is also present."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_alpha(alpha, k)
    value = _tri0(k) - _tri0(alpha) + 1
    return BoundResult(C2_2, None, value, {"k": k, "alpha": alpha})


def bound_mixed(n: int, p: int, alpha: int) -> BoundResult:
    """Four-case floor for sets of n negative and p positive integers
    (no zero). Cases split on alpha <= n and alpha <= p."""
    if n < 1 or p < 1:
        raise ValueError("n and p must be >= 1")
    _check_alpha(alpha, n + p)
    base = _tri(n) + _tri(p)
    if alpha <= n and alpha <= p:
        case, value = "i", base + 1
    elif alpha <= n:
        case, value = "ii", base - _tri(alpha - p) + 1
    elif alpha <= p:
        case, value = "iii", base - _tri(alpha - n) + 1
    else:
        case, value = "iv", base - _tri(alpha - n) - _tri(alpha - p) + 1
    return BoundResult(T2_3, case, value, {"n": n, "p": p, "alpha": alpha})


def bound_mixed_zero(n: int, p: int, alpha: int) -> BoundResult:
    """Four-case floor for sets of n negative integers, p positive
    integers, and zero. Same case split as bound_mixed with the alpha
    correction terms shifted by one."""
    if n < 1 or p < 1:
        raise ValueError("n and p must be >= 1")
    _check_alpha(alpha, n + p + 1)
    base = _tri(n) + _tri(p)
    if alpha <= n and alpha <= p:
        case, value = "i", base + 1
    elif alpha <= n:
        case, value = "ii", base - _tri0(alpha - p) + 1
    elif alpha <= p:
        case, value = "iii", base - _tri0(alpha - n) + 1
    else:
        case, value = "iv", base - _tri0(alpha - n) - _tri0(alpha - p) + 1
    return BoundResult(C2_4, case, value, {"n": n, "p": p, "alpha": alpha})


def bound_general(k: int, alpha: int, has_zero: bool) -> BoundResult:
    """Sign-agnostic floor for any set of k >= 2 integers, split only on
    whether zero is present. The case label records the parity of k; the
    parity-resolved form is evaluated alongside the floor-division form
    and the two are asserted equal."""
    if k < 2:
        raise ValueError("k must be >= 2")
    _check_alpha(alpha, k)
    if has_zero:
        value = k * k // 4 - _tri0(alpha) + 1
        parity_core = (k * k - 1) // 4 if k % 2 else k * k // 4
        parity_value = parity_core - _tri0(alpha) + 1
    else:
        value = (k + 1) ** 2 // 4 - _tri(alpha) + 1
        parity_core = (k + 1) ** 2 // 4 if k % 2 else ((k + 1) ** 2 - 1) // 4
        parity_value = parity_core - _tri(alpha) + 1
    assert value == parity_value
    case = "odd" if k % 2 else "even"
    return BoundResult(
        C2_5, case, value, {"k": k, "alpha": alpha, "has_zero": int(has_zero)}
    )


def bound_seq_disjoint(k: int, r: int, alpha: int) -> BoundResult:
    """Repeated-sequence floor r(k(k+1)/2 - m(m+1)/2) + m(mr - alpha) + 1
    for base sets where no element's negation is present. Requires
    alpha < r*k; the alpha = r*k query degenerates to a singleton and is
    handled by callers, not here."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if r < 1:
        raise ValueError("r must be >= 1")
    _check_alpha(alpha, r * k - 1)
    m = m_index(alpha, r)
    value = r * (_tri(k) - _tri(m)) + m * (m * r - alpha) + 1
    return BoundResult(
        T3_1_DISJOINT, None, value, {"k": k, "r": r, "alpha": alpha, "m": m}
    )


def bound_seq_zero(k: int, r: int, alpha: int) -> BoundResult:
    """Repeated-sequence floor r(k(k-1)/2 - m(m-1)/2) + (m-1)(mr - alpha) + 1
    for base sets where zero is the only self-negation coincidence."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if r < 1:
        raise ValueError("r must be >= 1")
    _check_alpha(alpha, r * k - 1)
    m = m_index(alpha, r)
    value = r * (_tri0(k) - _tri0(m)) + (m - 1) * (m * r - alpha) + 1
    return BoundResult(
        T3_1_ZERO, None, value, {"k": k, "r": r, "alpha": alpha, "m": m}
    )


def bound_seq_mixed(n: int, p: int, r: int, alpha: int) -> BoundResult:
    """Four-case repeated-sequence floor for base sets of n negative and
    p positive integers (no zero). Cases split on m <= n and m <= p,
    where m is the block index of alpha."""
    if n < 1 or p < 1:
        raise ValueError("n and p must be >= 1")
    if r < 1:
        raise ValueError("r must be >= 1")
    _check_alpha(alpha, r * (n + p) - 1)
    m = m_index(alpha, r)
    base = _tri(n) + _tri(p)
    slack = m * r - alpha
    if m <= n and m <= p:
        case, value = "i", r * base + 1
    elif m <= n:
        case, value = "ii", r * (base - _tri(m - p)) + (m - p) * slack + 1
    elif m <= p:
        case, value = "iii", r * (base - _tri(m - n)) + (m - n) * slack + 1
    else:
        case = "iv"
        value = (
            r * (base - _tri(m - n) - _tri(m - p))
            + (2 * m - n - p) * slack
            + 1
        )
    return BoundResult(
        T3_2, case, value, {"n": n, "p": p, "r": r, "alpha": alpha, "m": m}
    )


def bound_seq_mixed_zero(n: int, p: int, r: int, alpha: int) -> BoundResult:
    """Four-case repeated-sequence floor for base sets of n negative
    integers, p positive integers, and zero. Same case split as
    bound_seq_mixed with shifted correction terms and coefficients."""
    if n < 1 or p < 1:
        raise ValueError("n and p must be >= 1")
    if r < 1:
        raise ValueError("r must be >= 1")
    _check_alpha(alpha, r * (n + p + 1) - 1)
    m = m_index(alpha, r)
    base = _tri(n) + _tri(p)
    slack = m * r - alpha
    if m <= n and m <= p:
        case, value = "i", r * base + 1
    elif m <= n:
        case, value = "ii", r * (base - _tri0(m - p)) + (m - p - 1) * slack + 1
    elif m <= p:
        case, value = "iii", r * (base - _tri0(m - n)) + (m - n - 1) * slack + 1
    else:
        case = "iv"
        value = (
            r * (base - _tri0(m - n) - _tri0(m - p))
            + (2 * m - n - p - 2) * slack
            + 1
        )
    return BoundResult(
        C3_3, case, value, {"n": n, "p": p, "r": r, "alpha": alpha, "m": m}
    )


def bound_seq_general(k: int, r: int, alpha: int, has_zero: bool) -> BoundResult:
    """Sign-agnostic repeated-sequence floor for any base set of k >= 3
    integers, split only on zero membership. Case label is the parity of
    k; floor-division and parity-resolved forms are asserted equal."""
    if k < 3:
        raise ValueError("k must be >= 3")
    if r < 1:
        raise ValueError("r must be >= 1")
    _check_alpha(alpha, r * k - 1)
    m = m_index(alpha, r)
    if has_zero:
        value = r * (k * k // 4 - _tri0(m)) + 1
        parity_core = (k * k - 1) // 4 if k % 2 else k * k // 4
        parity_value = r * (parity_core - _tri0(m)) + 1
    else:
        value = r * ((k + 1) ** 2 // 4 - _tri(m)) + 1
        parity_core = (k + 1) ** 2 // 4 if k % 2 else ((k + 1) ** 2 - 1) // 4
        parity_value = r * (parity_core - _tri(m)) + 1
    assert value == parity_value
    case = "odd" if k % 2 else "even"
    return BoundResult(
        C3_4,
        case,
        value,
        {"k": k, "r": r, "alpha": alpha, "m": m, "has_zero": int(has_zero)},
    )


def bound_fp(size: int, alpha: int, p: int) -> BoundResult:
    """Prime-field floor min(p, size(size+1)/2 - alpha(alpha+1)/2 + 1)
    for subsets of nonzero residues with no self-negation coincidence."""
    if size < 1:
        raise ValueError("size must be >= 1")
    _check_alpha(alpha, size)
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    value = min(p, _tri(size) - _tri(alpha) + 1)
    return BoundResult(T1_3, None, value, {"size": size, "alpha": alpha, "p": p})


def applicable_bounds(
    instance: IntegerSet | RepSequence, alpha: int
) -> list[BoundResult]:
    """Every floor whose hypotheses the instance satisfies at this alpha.

    Sets accept alpha in [0, k]; sequences accept alpha in [0, r*k],
    where the degenerate alpha = r*k query matches no floor and yields
    an empty list (the achievable set is the singleton full sum).
    """
    if isinstance(instance, RepSequence):
        return _applicable_seq(instance, alpha)
    return _applicable_set(instance, alpha)


def _applicable_set(a: IntegerSet, alpha: int) -> list[BoundResult]:
    _check_alpha(alpha, a.k)
    prof = classify(a)
    out: list[BoundResult] = []
    if prof.self_disjoint:
        out.append(bound_disjoint(a.k, alpha))
    if prof.self_meet_zero:
        out.append(bound_zero(a.k, alpha))
    if prof.n >= 1 and prof.p >= 1:
        if prof.has_zero:
            out.append(bound_mixed_zero(prof.n, prof.p, alpha))
        else:
            out.append(bound_mixed(prof.n, prof.p, alpha))
    if a.k >= 2:
        out.append(bound_general(a.k, alpha, prof.has_zero))
    return out


def _applicable_seq(s: RepSequence, alpha: int) -> list[BoundResult]:
    _check_alpha(alpha, s.length)
    if alpha == s.length:
        return []
    prof = classify(s.base)
    k, r = s.base.k, s.r
    out: list[BoundResult] = []
    if k >= 2 and prof.self_disjoint:
        out.append(bound_seq_disjoint(k, r, alpha))
    if k >= 2 and prof.self_meet_zero:
        out.append(bound_seq_zero(k, r, alpha))
    if prof.n >= 1 and prof.p >= 1:
        if prof.has_zero:
            out.append(bound_seq_mixed_zero(prof.n, prof.p, r, alpha))
        else:
            out.append(bound_seq_mixed(prof.n, prof.p, r, alpha))
    if k >= 3:
        out.append(bound_seq_general(k, r, alpha, prof.has_zero))
    return out
