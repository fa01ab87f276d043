"""Row-count bounds and coordinate-budget conditions, exact-integer oracles."""

import pytest
from hypothesis import given, settings, strategies as st

from evnets import (
    Condition, FeasibilityReport, Signature,
    feasibility_report, net_rao_check, rao_feasible, rao_rhs,
    seq_kr_check, seq_lcm_check,
)
from evnets.errors import ParamError

import oracles


class TestSignature:
    def test_from_alphabets_sorts_and_lumps(self):
        assert Signature.from_alphabets((4, 2, 2, 4)).pairs == ((2, 2), (4, 2))
        assert Signature.from_alphabets((3,)).pairs == ((3, 1),)

    def test_columns(self):
        assert Signature(((2, 2), (4, 2))).columns == 4

    def test_validation(self):
        with pytest.raises(ParamError):
            Signature(((4, 1), (2, 1)))      # not increasing
        with pytest.raises(ParamError):
            Signature(((2, 1), (2, 1)))      # not strictly increasing
        with pytest.raises(ParamError):
            Signature(((1, 1),))
        with pytest.raises(ParamError):
            Signature(((2, 0),))


class TestRaoRhs:
    # frozen by the generating-polynomial oracle
    FROZEN = [
        ([(2, 1), (4, 1)], 2, 5),
        ([(2, 2), (4, 1)], 2, 6),
        ([(2, 4)], 2, 5),
        ([(2, 4)], 3, 8),        # classical: met by the fold-over construction
        ([(3, 4)], 2, 9),        # classical: met by the 9-run strength-2 array
        ([(2, 2), (3, 1), (4, 1)], 3, 20),
        ([(2, 3), (9, 2)], 4, 135),
        ([(4, 2)], 2, 7),
        ([(4, 2)], 3, 16),
    ]

    @pytest.mark.parametrize("pairs,t,expected", FROZEN)
    def test_frozen_values(self, pairs, t, expected):
        assert rao_rhs(pairs, t) == expected
        assert oracles.poly_rao_rhs(pairs, t) == expected

    def test_strength_zero_and_one(self):
        assert rao_rhs([(7, 3)], 0) == 1
        # t=1 needs at least l rows for a single column of size l
        assert rao_rhs([(2, 1)], 1) == 2
        assert rao_rhs([(5, 1)], 1) == 5

    def test_accepts_signature_objects(self):
        assert rao_rhs(Signature(((2, 4),)), 3) == 8

    def test_monotone_in_strength(self):
        pairs = [(2, 2), (3, 2)]
        values = [rao_rhs(pairs, t) for t in range(0, 6)]
        assert values == sorted(values)

    def test_input_validation(self):
        with pytest.raises(ParamError):
            rao_rhs([(4, 1), (2, 1)], 2)   # decreasing sizes
        with pytest.raises(ParamError):
            rao_rhs([(2, 1)], -1)
        with pytest.raises(ParamError):
            rao_rhs([(1, 2)], 2)

    def test_nondecreasing_duplicates_allowed(self):
        # unlumped input with repeated sizes is legal and equals the lumped form
        assert rao_rhs([(2, 1), (2, 1), (4, 1)], 2) == rao_rhs([(2, 2), (4, 1)], 2)

    @settings(deadline=None, max_examples=60)
    @given(st.lists(st.tuples(st.integers(2, 6), st.integers(1, 4)),
                    min_size=1, max_size=4),
           st.integers(0, 6))
    def test_matches_polynomial_oracle(self, raw, t):
        pairs = sorted(raw)
        assert rao_rhs(pairs, t) == oracles.poly_rao_rhs(pairs, t)

    @settings(deadline=None, max_examples=60)
    @given(st.lists(st.integers(2, 6), min_size=1, max_size=6), st.integers(0, 5))
    def test_lumping_invariance_both_parities(self, alphabets, t):
        # exact equality between the lumped signature and one-pair-per-column
        # input, for even and odd strengths alike (sizes sorted ascending)
        lumped = Signature.from_alphabets(alphabets)
        unlumped = [(l, 1) for l in sorted(alphabets)]
        assert rao_rhs(lumped, t) == rao_rhs(unlumped, t)

    def test_rao_feasible(self):
        assert rao_feasible(8, [(2, 4)], 3)
        assert not rao_feasible(7, [(2, 4)], 3)
        with pytest.raises(ParamError):
            rao_feasible(0, [(2, 4)], 3)


class TestNetRaoCheck:
    def test_frozen_violation(self):
        # four binary coordinates, 4 rows: 4 > 3, so no strength-2 array
        c = net_rao_check(2, 2, (1, 1, 1, 1), 1, "even")
        assert c.name == "rao-even-g1"
        assert c.applicable and not c.satisfied
        assert (c.lhs, c.rhs) == (4, 3)
        assert c.detail == {"m_threshold": 2}

    def test_inapplicable_is_vacuously_satisfied(self):
        c = net_rao_check(2, 1, (1, 1, 1, 1), 1, "even")
        assert not c.applicable and c.satisfied
        assert c.detail == {"m_threshold": 2}

    def test_odd_parity(self):
        c = net_rao_check(2, 3, (1, 1, 1), 1, "odd")
        assert c.name == "rao-odd-g1"
        assert c.applicable
        assert c.lhs == oracles.brute_net_rao_lhs(2, (1, 1, 1), 1, "odd") == 5
        assert c.rhs == 7

    def test_lhs_matches_subset_oracle(self):
        cases = [
            (2, 6, (1, 1, 2, 2), 1, "even"),
            (2, 6, (1, 1, 2, 2), 2, "even"),
            (2, 6, (1, 1, 2, 2), 1, "odd"),
            (3, 5, (1, 2, 2), 1, "even"),
            (3, 5, (1, 2, 2), 1, "odd"),
            (2, 8, (1, 1, 1, 2, 3), 2, "odd"),
        ]
        for b, m, e, g, parity in cases:
            c = net_rao_check(b, m, e, g, parity)
            assert c.lhs == oracles.brute_net_rao_lhs(b, e, g, parity)
            assert c.rhs == b ** m - 1

    def test_specializes_the_general_bound(self):
        # satisfied (when applicable) iff b**m rows clear the unlumped bound
        for b, m, e, g, parity in [
            (2, 2, (1, 1, 1, 1), 1, "even"),
            (2, 6, (1, 1, 2, 2), 2, "even"),
            (2, 4, (1, 1, 1), 1, "odd"),
            (3, 4, (1, 2, 2), 1, "even"),
        ]:
            c = net_rao_check(b, m, e, g, parity)
            if not c.applicable:
                continue
            t = 2 * g + (parity == "odd")
            pairs = [(b ** ei, 1) for ei in sorted(e)]
            assert c.satisfied == rao_feasible(b ** m, pairs, t)
            assert rao_rhs(pairs, t) == c.lhs + 1

    def test_requires_sorted_e(self):
        with pytest.raises(ParamError):
            net_rao_check(2, 3, (2, 1), 1, "even")

    def test_g_range_validation(self):
        with pytest.raises(ParamError):
            net_rao_check(2, 3, (1, 1), 2, "even")   # g > s/2
        with pytest.raises(ParamError):
            net_rao_check(2, 3, (1, 1), 1, "odd")    # g > (s-1)/2
        with pytest.raises(ParamError):
            net_rao_check(2, 3, (1, 1), 1, "both")


class TestSequenceConditions:
    def test_kr_names_and_values(self):
        conds = seq_kr_check(2, (1, 1, 1, 2))
        by_name = {c.name: c for c in conds}
        assert set(by_name) == {"kr-r1", "kr-r2"}
        assert (by_name["kr-r1"].lhs, by_name["kr-r1"].rhs) == (3, 2)
        assert not by_name["kr-r1"].satisfied
        assert (by_name["kr-r2"].lhs, by_name["kr-r2"].rhs) == (1, 4)
        assert by_name["kr-r2"].satisfied

    def test_lcm_subsets(self):
        conds = seq_lcm_check(2, (1, 1, 2, 2))
        by_name = {c.name: c for c in conds}
        assert set(by_name) == {"lcm-{1}", "lcm-{2}", "lcm-{1,2}"}
        joint = by_name["lcm-{1,2}"]
        assert (joint.lhs, joint.rhs) == (4, 4)
        assert joint.satisfied
        assert joint.detail == {"values": [1, 2], "lcm": 2}

    def test_lcm_violation(self):
        conds = seq_lcm_check(2, (1, 1, 2, 2, 2))
        joint = next(c for c in conds if c.name == "lcm-{1,2}")
        assert (joint.lhs, joint.rhs) == (5, 4)
        assert not joint.satisfied

    def test_lcm_matches_manual_computation(self):
        # distinct values {2, 3}: lcm 6, so up to 2**6 coordinates jointly
        conds = seq_lcm_check(2, (2, 2, 3))
        joint = next(c for c in conds if c.name == "lcm-{2,3}")
        assert joint.rhs == 64 and joint.lhs == 3 and joint.satisfied

    def test_dominance_filter_drops_implied_subsets(self):
        full = {c.name for c in seq_lcm_check(2, (1, 2))}
        kept = {c.name for c in seq_lcm_check(2, (1, 2), dominance_filter=True)}
        # {2} is implied by {1,2} (same lcm, superset), {1} is not
        assert full == {"lcm-{1}", "lcm-{2}", "lcm-{1,2}"}
        assert kept == {"lcm-{1}", "lcm-{1,2}"}

    def test_singleton_subsets_match_kr(self):
        e = (1, 1, 3, 3, 3)
        kr = {c.detail["value"]: (c.lhs, c.rhs, c.satisfied) for c in seq_kr_check(2, e)}
        for c in seq_lcm_check(2, e):
            vals = c.detail["values"]
            if len(vals) == 1:
                assert kr[vals[0]] == (c.lhs, c.rhs, c.satisfied)


class TestFeasibilityReport:
    def test_net_target_runs_all_g(self):
        rep = feasibility_report(2, 6, (1, 1, 2, 2), "net")
        names = [c.name for c in rep.conditions]
        assert names == ["rao-even-g1", "rao-even-g2", "rao-odd-g1"]
        assert rep.feasible

    def test_single_coordinate_is_vacuous(self):
        rep = feasibility_report(2, 3, (2,), "net")
        assert rep.conditions == () and rep.feasible

    def test_classical_net_threshold(self):
        # m=2, unit entries: feasible iff s <= b + 1
        for b in (2, 3, 5):
            for s in range(2, 2 * b + 3):
                rep = feasibility_report(b, 2, (1,) * s, "net")
                assert rep.feasible == (s <= b + 1), (b, s)

    def test_sequence_target_adds_budget_conditions(self):
        rep = feasibility_report(2, 6, (1, 1, 2, 2), "sequence")
        names = [c.name for c in rep.conditions]
        assert names == ["rao-even-g1", "rao-even-g2", "rao-odd-g1",
                         "kr-r1", "kr-r2", "lcm-{1,2}"]
        assert rep.feasible

    def test_sequence_rejections(self):
        assert not feasibility_report(2, 6, (1, 1, 1), "sequence").feasible
        assert not feasibility_report(2, 6, (1, 1, 2, 2, 2), "sequence").feasible

    def test_unsorted_input_is_normalized(self):
        rep = feasibility_report(2, 6, (2, 1, 2, 1), "net")
        assert rep.e == (1, 1, 2, 2)

    def test_violations_listed(self):
        rep = feasibility_report(2, 2, (1, 1, 1, 1), "net")
        assert not rep.feasible
        assert [c.name for c in rep.violations] == ["rao-even-g1"]

    def test_json_rendering_uses_strings_for_big_integers(self):
        rep = feasibility_report(2, 6, (1, 1, 2, 2), "sequence")
        js = rep.to_json()
        assert js["feasible"] is True
        assert js["base"] == 2 and js["e"] == [1, 1, 2, 2]
        for cond in js["conditions"]:
            assert isinstance(cond["lhs"], str) and isinstance(cond["rhs"], str)
        joint = next(c for c in js["conditions"] if c["condition"] == "lcm-{1,2}")
        assert joint["detail"]["lcm"] == "2"

    def test_target_validation(self):
        with pytest.raises(ParamError):
            feasibility_report(2, 3, (1, 1), "lattice")
