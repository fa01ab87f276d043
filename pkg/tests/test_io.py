"""Text-format contracts: round trips, canonicalization, line-numbered errors."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from evnets import (
    EVector, MixedOA, MixedOOA, PointSet,
    parse_moa, parse_mooa, parse_net,
    serialize_moa, serialize_mooa, serialize_net,
)
from evnets.dualcert import FunctionTuple
from evnets.errors import FormatError
from evnets.io import DIGIT_CHARS, parse_function_tuples
from evnets import corpus, net_to_mooa


HAM_23_TEXT = (
    "NET v1\n"
    "base 2 m 3 s 2 u 0\n"
    "e 1 1\n"
    "000 000\n"
    "100 001\n"
    "010 010\n"
    "110 011\n"
    "001 100\n"
    "101 101\n"
    "011 110\n"
    "111 111\n"
)


class TestNetFormat:
    def test_serialize_matches_frozen_text(self, ham23):
        assert serialize_net(ham23, 0, EVector((1, 1))) == HAM_23_TEXT

    def test_parse_recovers_points_and_parameters(self, ham23):
        nf = parse_net(HAM_23_TEXT)
        assert nf.points == ham23
        assert nf.u == 0 and nf.e.e == (1, 1)

    def test_parse_then_serialize_is_identity_on_canonical_text(self):
        assert serialize_net(*_unpack(parse_net(HAM_23_TEXT))) == HAM_23_TEXT

    def test_whitespace_is_normalized(self):
        messy = HAM_23_TEXT.replace("base 2", "base   2").replace("000 000", "  000\t000")
        assert serialize_net(*_unpack(parse_net(messy))) == HAM_23_TEXT

    def test_final_newline_optional(self):
        assert parse_net(HAM_23_TEXT.rstrip("\n")).points == parse_net(HAM_23_TEXT).points

    def test_point_count_is_body_line_count(self):
        nf = parse_net(HAM_23_TEXT.replace("111 111\n", ""))
        assert nf.points.count == 7

    def test_m_zero_round_trip(self):
        p = PointSet(2, np.zeros((2, 1, 0), dtype=np.int64))
        text = serialize_net(p, 0, EVector((1,)))
        assert text == "NET v1\nbase 2 m 0 s 1 u 0\ne 1\n\n\n"
        nf = parse_net(text)
        assert nf.points == p

    def test_digit_characters_above_nine(self):
        p = PointSet(12, np.array([[[10, 11]]], dtype=np.int64))
        text = serialize_net(p, 0, EVector((1,)))
        assert "AB" in text
        assert parse_net(text).points == p

    def test_base_36_limit(self):
        p36 = PointSet(36, np.array([[[35]]], dtype=np.int64))
        assert DIGIT_CHARS[35] == "Z"
        assert parse_net(serialize_net(p36, 0, EVector((1,)))).points == p36
        p37 = PointSet(37, np.array([[[36]]], dtype=np.int64))
        with pytest.raises(FormatError):
            serialize_net(p37, 0, EVector((1,)))

    @pytest.mark.parametrize("mutate, lineno", [
        (lambda t: t.replace("NET v1", "NET v2"), 1),
        (lambda t: t.replace("base 2 m 3 s 2 u 0", "base 2 m 3 s 2"), 2),
        (lambda t: t.replace("base 2 m 3 s 2 u 0", "base 2 m 3 s 2 u 9"), 2),
        (lambda t: t.replace("e 1 1", "e 1"), 3),
        (lambda t: t.replace("e 1 1", "e 0 1"), 3),
        (lambda t: t.replace("100 001", "100 01"), 5),
        (lambda t: t.replace("100 001", "100 002"), 5),
        (lambda t: t.replace("100 001", "100"), 5),
    ])
    def test_error_carries_line_number(self, mutate, lineno):
        with pytest.raises(FormatError) as err:
            parse_net(mutate(HAM_23_TEXT))
        assert err.value.line == lineno
        assert str(err.value).startswith(f"line {lineno}:")

    def test_truncated_header_reports_missing_line(self):
        with pytest.raises(FormatError) as err:
            parse_net("NET v1\n")
        assert err.value.line == 2

    def test_serialize_validates_claims(self, ham23):
        with pytest.raises(FormatError):
            serialize_net(ham23, 4, EVector((1, 1)))
        with pytest.raises(FormatError):
            serialize_net(ham23, 0, EVector((1, 1, 1)))

    @given(st.integers(2, 5), st.integers(0, 3), st.integers(1, 3),
           st.integers(1, 6), st.data())
    def test_round_trip_random_point_sets(self, b, m, s, n, data):
        flat = data.draw(st.lists(st.integers(0, b - 1), min_size=n * s * m,
                                  max_size=n * s * m))
        p = PointSet(b, np.array(flat, dtype=np.int64).reshape(n, s, m))
        u = data.draw(st.integers(0, m))
        e = EVector(tuple(data.draw(st.integers(1, 3)) for _ in range(s)))
        text = serialize_net(p, u, e)
        nf = parse_net(text)
        assert nf.points == p and nf.u == u and nf.e == e
        assert serialize_net(nf.points, nf.u, nf.e) == text


def _unpack(nf):
    return nf.points, nf.u, nf.e


MOA_TEXT = (
    "MOA v1\n"
    "N 4 k 2 t 1\n"
    "l 2 4\n"
    "0 0\n"
    "1 1\n"
    "0 2\n"
    "1 3\n"
)


class TestMoaFormat:
    def test_round_trip(self):
        a = parse_moa(MOA_TEXT)
        assert a.alphabets == (2, 4) and a.runs == 4 and a.strength == 1
        assert serialize_moa(a) == MOA_TEXT

    def test_row_count_enforced(self):
        with pytest.raises(FormatError) as err:
            parse_moa(MOA_TEXT + "0 0\n")
        assert err.value.line == 8  # first extra row
        with pytest.raises(FormatError):
            parse_moa(MOA_TEXT.replace("1 3\n", ""))

    def test_entry_range_enforced(self):
        with pytest.raises(FormatError) as err:
            parse_moa(MOA_TEXT.replace("0 2", "2 2"))
        assert err.value.line == 6

    @pytest.mark.parametrize("mutate, lineno", [
        (lambda t: t.replace("MOA v1", "MOAv1"), 1),
        (lambda t: t.replace("N 4 k 2 t 1", "N 4 k 2 t 3"), 2),
        (lambda t: t.replace("l 2 4", "l 1 4"), 3),
    ])
    def test_header_errors(self, mutate, lineno):
        with pytest.raises(FormatError) as err:
            parse_moa(mutate(MOA_TEXT))
        assert err.value.line == lineno


class TestMooaFormat:
    def test_round_trip_from_construction(self, ham23):
        arr = net_to_mooa(ham23, 0, EVector((1, 2)))
        text = serialize_mooa(arr)
        assert text.startswith("MOOA v1\nbase 2 m 3 s 2 u 0\ne 1 2\nbeta 3 1\n")
        back = parse_mooa(text)
        assert back == arr
        assert serialize_mooa(back) == text

    def test_beta_cap_enforced(self):
        bad = ("MOOA v1\nbase 2 m 2 s 1 u 1\ne 1\nbeta 2\n" + "0 0\n" * 4)
        with pytest.raises(FormatError) as err:
            parse_mooa(bad)
        assert err.value.line == 4

    def test_zero_column_rows_are_blank(self):
        text = "MOOA v1\nbase 2 m 1 s 1 u 1\ne 1\nbeta 0\n\n\n"
        arr = parse_mooa(text)
        assert arr.runs == 2 and arr.rows.shape == (2, 0)
        assert serialize_mooa(arr) == text
        with pytest.raises(FormatError) as err:
            parse_mooa(text.replace("\n\n\n", "\n0\n\n"))
        assert err.value.line == 5

    def test_row_count_is_base_power(self):
        text = "MOOA v1\nbase 2 m 2 s 1 u 0\ne 1\nbeta 2\n" + "0 0\n" * 3
        with pytest.raises(FormatError):
            parse_mooa(text)

    def test_entry_range_uses_block_alphabet(self, ham23):
        arr = net_to_mooa(ham23, 0, EVector((1, 2)))
        text = serialize_mooa(arr)
        lines = text.split("\n")
        lines[4] = lines[4].rsplit(" ", 1)[0] + " 4"  # block-1 alphabet is 4
        with pytest.raises(FormatError) as err:
            parse_mooa("\n".join(lines))
        assert err.value.line == 5


class TestFunctionTupleParsing:
    def test_parse_binds_frame(self, ham23):
        arr = net_to_mooa(ham23, 0, EVector((1, 2)))  # beta (3, 1), widths 2,2,2,4
        tuples = parse_function_tuples("1 0 1 3\n0 0 0 0\n", arr)
        assert tuples == [
            FunctionTuple(2, EVector((1, 2)), ((1, 0, 1), (3,))),
            FunctionTuple(2, EVector((1, 2)), ((0, 0, 0), (0,))),
        ]

    def test_residue_count_and_range_errors(self, ham23):
        arr = net_to_mooa(ham23, 0, EVector((1, 2)))
        with pytest.raises(FormatError) as err:
            parse_function_tuples("1 0 1\n", arr)
        assert err.value.line == 1
        with pytest.raises(FormatError) as err:
            parse_function_tuples("1 0 1 3\n0 0 2 0\n", arr)
        assert err.value.line == 2
