"""Closed-form floor evaluation: frozen spot values, case dispatch,
cross-family identities, and range validation."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from subsums.bounds import (
    ALL_THEOREM_IDS,
    BoundResult,
    applicable_bounds,
    bound_disjoint,
    bound_fp,
    bound_general,
    bound_mixed,
    bound_mixed_zero,
    bound_seq_disjoint,
    bound_seq_general,
    bound_seq_mixed,
    bound_seq_mixed_zero,
    bound_seq_zero,
    bound_zero,
    m_index,
    min_fold_size,
    min_sumset_size,
)
from subsums.model import parse_sequence, parse_set
from subsums.oracle import oracle_sigma_seq, oracle_sigma_set


class TestBlockIndex:
    @pytest.mark.parametrize(
        "alpha,r,expected",
        [(0, 2, 1), (1, 2, 1), (2, 2, 2), (5, 2, 3), (3, 1, 4), (0, 1, 1), (7, 3, 3)],
    )
    def test_values(self, alpha, r, expected):
        assert m_index(alpha, r) == expected

    @given(st.integers(0, 10_000), st.integers(1, 64))
    def test_bracketing(self, alpha, r):
        # m is the unique index with (m-1)*r <= alpha < m*r
        m = m_index(alpha, r)
        assert (m - 1) * r <= alpha < m * r

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            m_index(-1, 2)
        with pytest.raises(ValueError):
            m_index(0, 0)


class TestPairwiseFloors:
    def test_sumset_floor(self):
        assert min_sumset_size(4, 7) == 10
        assert min_sumset_size(1, 1) == 1

    def test_fold_floor(self):
        assert min_fold_size(3, 5) == 13
        assert min_fold_size(1, 9) == 9

    def test_rejects_empty_operands(self):
        with pytest.raises(ValueError):
            min_sumset_size(0, 3)
        with pytest.raises(ValueError):
            min_fold_size(0, 3)


class TestSetFloors:
    @pytest.mark.parametrize(
        "k,alpha,value",
        [(4, 2, 8), (5, 0, 16), (7, 7, 1), (1, 0, 2), (1, 1, 1)],
    )
    def test_disjoint(self, k, alpha, value):
        res = bound_disjoint(k, alpha)
        assert res.theorem_id == "T2_1"
        assert res.case_label is None
        assert res.value == value

    @pytest.mark.parametrize(
        "k,alpha,value",
        [(4, 1, 7), (5, 3, 8), (1, 0, 1), (1, 1, 1), (6, 6, 1)],
    )
    def test_zero(self, k, alpha, value):
        res = bound_zero(k, alpha)
        assert res.theorem_id == "C2_2"
        assert res.value == value

    @pytest.mark.parametrize(
        "n,p,alpha,case,value",
        [
            (2, 2, 1, "i", 7),
            (2, 2, 2, "i", 7),  # boundary alpha = n = p stays in case i
            (2, 2, 3, "iv", 5),
            (1, 3, 2, "iii", 7),
            (2, 1, 2, "ii", 4),
            (1, 1, 2, "iv", 1),
        ],
    )
    def test_mixed(self, n, p, alpha, case, value):
        res = bound_mixed(n, p, alpha)
        assert res.theorem_id == "T2_3"
        assert res.case_label == case
        assert res.value == value

    @pytest.mark.parametrize(
        "n,p,alpha,case,value",
        [
            (1, 1, 0, "i", 3),
            (2, 2, 2, "i", 7),
            (2, 2, 3, "iv", 7),
            (1, 2, 2, "iii", 5),
            (2, 1, 2, "ii", 5),
            (1, 1, 3, "iv", 1),  # alpha = n + p + 1 collapses to a singleton
        ],
    )
    def test_mixed_zero(self, n, p, alpha, case, value):
        res = bound_mixed_zero(n, p, alpha)
        assert res.theorem_id == "C2_4"
        assert res.case_label == case
        assert res.value == value

    @pytest.mark.parametrize(
        "k,alpha,has_zero,case,value",
        [
            (4, 1, False, "even", 6),
            (4, 1, True, "even", 5),
            (3, 0, False, "odd", 5),
            (3, 0, True, "odd", 3),
            (2, 0, False, "even", 3),
        ],
    )
    def test_general(self, k, alpha, has_zero, case, value):
        res = bound_general(k, alpha, has_zero)
        assert res.theorem_id == "C2_5"
        assert res.case_label == case
        assert res.value == value

    def test_general_can_reach_zero(self):
        # The sign-agnostic floor is weak at the top of the alpha range:
        # at k = 2, alpha = 2 it evaluates to 0 (sound but vacuous).
        assert bound_general(2, 2, False).value == 0
        assert oracle_sigma_set(parse_set("{1,2}"), 2).size == 1

    @given(st.integers(2, 100), st.booleans())
    def test_general_parity_form_agrees(self, k, has_zero):
        # floor-division form vs parity-resolved form, checked internally
        for alpha in range(k + 1):
            bound_general(k, alpha, has_zero)

    @given(st.integers(1, 20))
    def test_disjoint_dominates_general(self, k):
        # under the stronger hypothesis the dedicated floor never loses
        if k < 2:
            return
        for alpha in range(k + 1):
            assert bound_disjoint(k, alpha).value >= bound_general(k, alpha, False).value


class TestSequenceFloors:
    @pytest.mark.parametrize(
        "k,r,alpha,value",
        [(2, 2, 0, 7), (2, 2, 1, 6), (2, 2, 3, 3), (3, 1, 0, 7), (4, 3, 11, 5)],
    )
    def test_seq_disjoint(self, k, r, alpha, value):
        res = bound_seq_disjoint(k, r, alpha)
        assert res.theorem_id == "T3_1_disjoint"
        assert res.value == value
        assert res.params["m"] == m_index(alpha, r)

    @pytest.mark.parametrize(
        "k,r,alpha,value",
        [(2, 2, 0, 3), (2, 2, 3, 2), (3, 2, 0, 7), (4, 1, 2, 6)],
    )
    def test_seq_zero(self, k, r, alpha, value):
        res = bound_seq_zero(k, r, alpha)
        assert res.theorem_id == "T3_1_zero"
        assert res.value == value

    @pytest.mark.parametrize(
        "n,p,r,alpha,case,value",
        [
            (1, 1, 2, 0, "i", 5),
            (1, 1, 2, 1, "i", 5),
            (1, 1, 2, 3, "iv", 3),
            (2, 1, 1, 2, "iv", 4),
            (1, 2, 2, 3, "iii", 8),
            (2, 1, 2, 3, "ii", 8),
        ],
    )
    def test_seq_mixed(self, n, p, r, alpha, case, value):
        res = bound_seq_mixed(n, p, r, alpha)
        assert res.theorem_id == "T3_2"
        assert res.case_label == case
        assert res.value == value

    @pytest.mark.parametrize(
        "n,p,r,alpha,case,value",
        [
            (1, 1, 2, 0, "i", 5),
            (1, 1, 2, 2, "iv", 5),
            (2, 2, 1, 1, "i", 7),
            (1, 1, 1, 2, "iv", 3),
            (1, 2, 2, 4, "iv", 9),
        ],
    )
    def test_seq_mixed_zero(self, n, p, r, alpha, case, value):
        res = bound_seq_mixed_zero(n, p, r, alpha)
        assert res.theorem_id == "C3_3"
        assert res.case_label == case
        assert res.value == value

    @pytest.mark.parametrize(
        "k,r,alpha,has_zero,case,value",
        [
            (3, 2, 1, True, "odd", 5),
            (4, 1, 1, False, "even", 4),
            (3, 1, 0, False, "odd", 4),
            (5, 2, 3, True, "odd", 11),
        ],
    )
    def test_seq_general(self, k, r, alpha, has_zero, case, value):
        res = bound_seq_general(k, r, alpha, has_zero)
        assert res.theorem_id == "C3_4"
        assert res.case_label == case
        assert res.value == value

    def test_seq_general_can_go_nonpositive(self):
        # same weakness as the set form, amplified by the block index:
        # k = 3, r = 1, alpha = 2 gives m = 3 and a floor of -1
        assert bound_seq_general(3, 1, 2, False).value == -1
        assert oracle_sigma_seq(parse_sequence("{1,2,3}", 1), 2).size >= 1

    @given(st.integers(1, 8), st.integers(1, 8), st.integers(1, 4))
    def test_seq_case_slack_nonnegative(self, n, p, r):
        # every case's slack term (m*r - alpha) is positive by bracketing
        for alpha in range(r * (n + p)):
            res = bound_seq_mixed(n, p, r, alpha)
            m = res.params["m"]
            assert m * r - alpha >= 1


class TestReductionToSets:
    """With r = 1 each sequence floor collapses to its set counterpart."""

    @pytest.mark.parametrize("k", range(2, 13))
    def test_disjoint(self, k):
        for alpha in range(k):
            assert bound_seq_disjoint(k, 1, alpha).value == bound_disjoint(k, alpha).value

    @pytest.mark.parametrize("k", range(2, 13))
    def test_zero(self, k):
        for alpha in range(k):
            assert bound_seq_zero(k, 1, alpha).value == bound_zero(k, alpha).value

    @pytest.mark.parametrize("n", range(1, 7))
    @pytest.mark.parametrize("p", range(1, 7))
    def test_mixed(self, n, p):
        for alpha in range(n + p):
            seq = bound_seq_mixed(n, p, 1, alpha)
            flat = bound_mixed(n, p, alpha)
            assert seq.value == flat.value

    @pytest.mark.parametrize("n", range(1, 7))
    @pytest.mark.parametrize("p", range(1, 7))
    def test_mixed_zero(self, n, p):
        for alpha in range(n + p + 1):
            seq = bound_seq_mixed_zero(n, p, 1, alpha)
            flat = bound_mixed_zero(n, p, alpha)
            assert seq.value == flat.value

    @pytest.mark.parametrize("k", range(3, 13))
    @pytest.mark.parametrize("has_zero", [False, True])
    def test_general_is_weaker_at_r1(self, k, has_zero):
        # the sign-agnostic sequence form does not collapse to the set
        # form: its triangular term is taken at the block index m =
        # alpha + 1 with no slack compensation, so at r = 1 it never
        # beats the set floor and loses strictly once alpha > 0
        for alpha in range(k):
            seq = bound_seq_general(k, 1, alpha, has_zero).value
            flat = bound_general(k, alpha, has_zero).value
            assert seq <= flat
            if alpha > 0:
                assert seq < flat


class TestPositivity:
    """Every floor except the sign-agnostic pair stays >= 1 across its
    whole parameter range; the sign-agnostic forms can dip to 0 or below
    at extreme alpha, which the dispatch tests document explicitly."""

    def test_disjoint_and_zero(self):
        for k in range(1, 25):
            for alpha in range(k + 1):
                assert bound_disjoint(k, alpha).value >= 1
                assert bound_zero(k, alpha).value >= 1

    def test_mixed_families(self):
        for n in range(1, 9):
            for p in range(1, 9):
                for alpha in range(n + p + 1):
                    assert bound_mixed(n, p, alpha).value >= 1
                for alpha in range(n + p + 2):
                    assert bound_mixed_zero(n, p, alpha).value >= 1

    def test_sequence_families(self):
        for r in range(1, 5):
            for k in range(2, 9):
                for alpha in range(r * k):
                    assert bound_seq_disjoint(k, r, alpha).value >= 1
                    assert bound_seq_zero(k, r, alpha).value >= 1
            for n in range(1, 5):
                for p in range(1, 5):
                    for alpha in range(r * (n + p)):
                        assert bound_seq_mixed(n, p, r, alpha).value >= 1
                    for alpha in range(r * (n + p + 1)):
                        assert bound_seq_mixed_zero(n, p, r, alpha).value >= 1


class TestPrimeFieldFloor:
    def test_caps_at_field_size(self):
        assert bound_fp(3, 1, 7).value == 6
        assert bound_fp(5, 0, 7).value == 7
        assert bound_fp(2, 0, 11).value == 4

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            bound_fp(0, 0, 7)
        with pytest.raises(ValueError):
            bound_fp(3, 4, 7)
        with pytest.raises(ValueError):
            bound_fp(3, 1, 1)


class TestRangeValidation:
    @pytest.mark.parametrize(
        "call",
        [
            lambda: bound_disjoint(0, 0),
            lambda: bound_disjoint(4, 5),
            lambda: bound_disjoint(4, -1),
            lambda: bound_zero(3, 4),
            lambda: bound_mixed(0, 1, 0),
            lambda: bound_mixed(1, 1, 3),
            lambda: bound_mixed_zero(1, 0, 0),
            lambda: bound_mixed_zero(1, 1, 4),
            lambda: bound_general(1, 0, False),
            lambda: bound_general(3, 4, False),
            lambda: bound_seq_disjoint(1, 2, 0),
            lambda: bound_seq_disjoint(2, 0, 0),
            lambda: bound_seq_disjoint(2, 2, 4),  # alpha = r*k rejected
            lambda: bound_seq_zero(2, 2, 4),
            lambda: bound_seq_mixed(1, 1, 2, 4),
            lambda: bound_seq_mixed_zero(1, 1, 2, 6),
            lambda: bound_seq_general(2, 1, 0, False),
            lambda: bound_seq_general(3, 2, 6, False),
        ],
    )
    def test_raises(self, call):
        with pytest.raises(ValueError):
            call()


class TestDispatch:
    def test_mixed_set_gets_two_floors(self):
        a = parse_set("{-2,-1,1,2}")
        results = applicable_bounds(a, 1)
        by_id = {r.theorem_id: r for r in results}
        assert set(by_id) == {"T2_3", "C2_5"}
        assert by_id["T2_3"].value == 7
        assert by_id["T2_3"].case_label == "i"
        assert by_id["C2_5"].value == 6

    def test_positive_set_gets_disjoint_and_general(self):
        a = parse_set("{1,2,3}")
        results = applicable_bounds(a, 1)
        by_id = {r.theorem_id: r.value for r in results}
        assert by_id == {"T2_1": 6, "C2_5": 4}

    def test_zero_set_dispatch(self):
        a = parse_set("{0,1,3}")
        by_id = {r.theorem_id: r.value for r in applicable_bounds(a, 1)}
        assert by_id == {"C2_2": 4, "C2_5": 3}

    def test_singleton_set(self):
        a = parse_set("{5}")
        results = applicable_bounds(a, 0)
        assert [r.theorem_id for r in results] == ["T2_1"]
        assert results[0].value == 2

    def test_zero_singleton(self):
        a = parse_set("{0}")
        by_id = {r.theorem_id: r.value for r in applicable_bounds(a, 1)}
        assert by_id == {"C2_2": 1}

    def test_small_zero_sequence(self):
        s = parse_sequence("[0,1]", 2)
        results = applicable_bounds(s, 0)
        # k = 2 is below the sign-agnostic sequence threshold
        assert [(r.theorem_id, r.value) for r in results] == [("T3_1_zero", 3)]

    def test_mixed_sequence_dispatch(self):
        s = parse_sequence("{-1,1,2}", 2)
        by_id = {r.theorem_id: r.value for r in applicable_bounds(s, 2)}
        assert by_id == {"T3_2": 9, "C3_4": 3}

    def test_full_alpha_sequence_is_degenerate(self):
        s = parse_sequence("{1,2}", 3)
        assert applicable_bounds(s, 6) == []

    def test_alpha_out_of_range(self):
        with pytest.raises(ValueError):
            applicable_bounds(parse_set("{1,2}"), 3)
        with pytest.raises(ValueError):
            applicable_bounds(parse_sequence("{1,2}", 2), 5)

    def test_every_dispatched_floor_is_sound(self):
        # moderate sweep: each dispatched value really is a floor
        sets = ["{1,2,3}", "{-3,-1,2}", "{-2,0,2,5}", "{0,1,2,3}", "{-4,-2,-1}"]
        for text in sets:
            a = parse_set(text)
            for alpha in range(a.k + 1):
                truth = oracle_sigma_set(a, alpha).size
                for res in applicable_bounds(a, alpha):
                    assert truth >= res.value, (text, alpha, res.label())

    def test_every_dispatched_seq_floor_is_sound(self):
        specs = [("{1,2}", 3), ("{-1,1}", 2), ("{-1,0,2}", 2), ("{-2,-1,1}", 2)]
        for text, r in specs:
            s = parse_sequence(text, r)
            for alpha in range(s.length + 1):
                truth = oracle_sigma_seq(s, alpha).size
                for res in applicable_bounds(s, alpha):
                    assert truth >= res.value, (text, r, alpha, res.label())


class TestResultShape:
    def test_label_formats(self):
        assert bound_disjoint(4, 2).label() == "T2_1"
        assert bound_mixed(2, 2, 3).label() == "T2_3(iv)"

    def test_json_round_trip_keys(self):
        js = bound_seq_mixed(1, 2, 2, 3).to_json()
        assert js == {
            "theorem_id": "T3_2",
            "case": "iii",
            "value": 8,
            "params": {"n": 1, "p": 2, "r": 2, "alpha": 3, "m": 2},
        }

    def test_identifier_registry(self):
        assert len(ALL_THEOREM_IDS) == len(set(ALL_THEOREM_IDS)) == 13
        assert "T3_1_disjoint" in ALL_THEOREM_IDS

    def test_results_are_frozen(self):
        res = bound_disjoint(3, 1)
        with pytest.raises(AttributeError):
            res.value = 99  # type: ignore[misc]
