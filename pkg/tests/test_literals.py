from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equicut.exact import KElement, TowerReal, sqrt_adjoin
from equicut.literals import ParseError, format_k_element, format_number, parse_number


class TestParse:
    def test_integers_and_fractions(self):
        assert parse_number("2").as_fraction() == 2
        assert parse_number("-3/2").as_fraction() == Fraction(-3, 2)
        assert parse_number("0").is_zero()

    def test_roots(self):
        assert parse_number("sqrt(2)") == sqrt_adjoin(2)
        assert parse_number("2*sqrt(3)") == 2 * sqrt_adjoin(3)
        assert parse_number("sqrt(4)").as_fraction() == 2

    def test_expressions(self):
        v = parse_number("1/2 + 3*sqrt(5) - sqrt(2)")
        assert v == Fraction(1, 2) + 3 * sqrt_adjoin(5) - sqrt_adjoin(2)
        assert parse_number("(1 + sqrt(2))*sqrt(3)") == (1 + sqrt_adjoin(2)) * sqrt_adjoin(3)
        assert parse_number("-1*sqrt(2) + 1") == 1 - sqrt_adjoin(2)

    def test_nested_roots(self):
        v = parse_number("sqrt(2 + sqrt(3))")
        assert v * v == 2 + sqrt_adjoin(3)

    def test_whitespace_tolerance(self):
        assert parse_number("  1   +2* sqrt( 2 )  ") == 1 + 2 * sqrt_adjoin(2)

    def test_negative_factor_after_star(self):
        assert parse_number("2*-3").as_fraction() == -6

    def test_root_simplifies(self):
        assert parse_number("sqrt(8)") == 2 * sqrt_adjoin(2)
        assert parse_number("sqrt(2)*sqrt(2)").as_fraction() == 2


class TestParseErrors:
    @pytest.mark.parametrize(
        "text",
        [
            "",
            "sqrt 2",
            "- sqrt(2)",
            "1 +",
            "sqrt(2",
            "1/0",
            "foo",
            "1)",
            "1 2",
            "sqrt()",
            "1//2",
            "*2",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_number(text)

    def test_position_reported(self):
        with pytest.raises(ParseError) as err:
            parse_number("1 + foo")
        assert err.value.position == 4

    def test_negative_sqrt_literal_rejected(self):
        with pytest.raises(Exception):
            parse_number("sqrt(-2)")


class TestFormat:
    def test_rationals(self):
        assert format_number(0) == "0"
        assert format_number(Fraction(-3, 2)) == "-3/2"
        assert format_number(7) == "7"

    def test_simple_roots(self):
        assert format_number(sqrt_adjoin(2)) == "sqrt(2)"
        assert format_number(2 * sqrt_adjoin(3)) == "2*sqrt(3)"
        assert format_number(-sqrt_adjoin(2)) == "-1*sqrt(2)"
        assert format_number(1 - sqrt_adjoin(2)) == "1 - sqrt(2)"

    def test_multiquadratic_flattens(self):
        v = (1 + sqrt_adjoin(2)) * sqrt_adjoin(3)
        assert format_number(v) == "sqrt(3) + sqrt(6)"

    def test_composite_coefficient(self):
        v = (1 + sqrt_adjoin(3)) * sqrt_adjoin(2 + sqrt_adjoin(3))
        assert format_number(v) == "(1 + sqrt(3))*sqrt(2 + sqrt(3))"

    def test_nested_radicand(self):
        v = sqrt_adjoin(2 + sqrt_adjoin(3))
        assert format_number(v) == "sqrt(2 + sqrt(3))"

    def test_k_element(self):
        x = KElement([(1, Fraction(1, 2)), (5, 3), (2, -1)])
        assert format_k_element(x) == "1/2 - sqrt(2) + 3*sqrt(5)"
        assert format_k_element(KElement.zero()) == "0"
        assert format_k_element(KElement([(2, -1)])) == "-1*sqrt(2)"


CANONICAL = [
    "0",
    "7",
    "-3/2",
    "sqrt(2)",
    "-1*sqrt(2)",
    "2*sqrt(3)",
    "1/2 + 3*sqrt(5)",
    "1 - sqrt(2)",
    "-5 + 3*sqrt(2) - 2*sqrt(3) + sqrt(6)",
    "sqrt(2 + sqrt(3))",
    "1/3 + 2*sqrt(3) - sqrt(6)",
    "(1 + sqrt(3))*sqrt(2 + sqrt(3))",
    "2 - sqrt(2 + sqrt(3))",
]


class TestRoundTrip:
    @pytest.mark.parametrize("text", CANONICAL)
    def test_format_parse_identity(self, text):
        assert format_number(parse_number(text)) == text

    @pytest.mark.parametrize(
        "text",
        ["sqrt(8)", "sqrt(2)*sqrt(3)", "1 + 1", "sqrt(4/9)", "2/4", "sqrt(9)"],
    )
    def test_format_parse_stabilizes(self, text):
        once = format_number(parse_number(text))
        assert format_number(parse_number(once)) == once

    def test_value_preserved(self):
        for text in CANONICAL:
            v = parse_number(text)
            assert parse_number(format_number(v)) == v


small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=9)


def k_elements():
    return st.lists(
        st.tuples(st.sampled_from([1, 2, 3, 5, 6, 15]), small_fracs),
        min_size=0,
        max_size=4,
    ).map(KElement)


class TestHypothesisRoundTrip:
    @given(k_elements())
    @settings(max_examples=60, deadline=None)
    def test_k_element_round_trip(self, x):
        text = format_k_element(x)
        parsed = parse_number(text)
        assert parsed == x.to_tower()
        assert format_number(parsed) == text
