"""Unit tests for the Lie-word expression grammar."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fiblie.basis import enumerate_W_upto
from fiblie.core import ZERO, element, format_element, parse_element
from fiblie.expr import ParseError, eval_text


def test_examples():
    assert eval_text("[v2,v1,v1,v1]") == ZERO
    assert format_element(eval_text("t0*t1*v5")) == "t0*t1*v5"
    assert eval_text("v1^4") == ZERO
    assert format_element(eval_text("[v1,v2]")) == "v3"
    assert format_element(eval_text("[v1,v4]")) == "t0*t1*v5"
    assert eval_text("v1^2 + v1^2") == ZERO
    assert eval_text("0") == ZERO


def test_power_sugar_in_brackets():
    assert eval_text("[v2,v1^3]") == ZERO
    assert eval_text("[v2,v1^2,v2^2]") == ZERO
    assert eval_text("[v1,v2^4]") == ZERO
    # powers of two agree with the repeated-bracket reading
    assert eval_text("[v2,v1^2]") == eval_text("[v2,v1,v1]")
    # a first-argument power is the formal p-th power
    assert eval_text("[v1^2,v2]") == eval_text("[v1,[v1,v2]]")


def test_whitespace_and_nesting():
    assert eval_text(" [ v1 , [ v2 , v3 ] ] ") == eval_text("[v1,[v2,v3]]")
    assert format_element(eval_text("[[v1,v2],v3]")) == format_element(
        eval_text("[v1,v2,v3]")
    )


def test_errors_have_positions():
    cases = {
        "v1^3": 3,
        "[v1]": 0,
        "v1 +": 4,
        "[v1,v2": 6,
    }
    for text, pos in cases.items():
        with pytest.raises(ParseError) as err:
            eval_text(text)
        assert err.value.pos == pos
    with pytest.raises(ParseError):
        eval_text("q9")
    with pytest.raises(ParseError):
        eval_text("t0t1*v5")


def test_duplicate_tail_factor_is_zero():
    assert eval_text("t0*t0*v4") == ZERO


W7 = [m for level in enumerate_W_upto(7, "restricted") for m in level]
elements = st.lists(st.sampled_from(W7), min_size=0, max_size=4).map(element)


@settings(max_examples=250, deadline=None)
@given(elements)
def test_eval_of_canonical_print_is_identity(e):
    assert eval_text(format_element(e)) == e


@settings(max_examples=250, deadline=None)
@given(elements)
def test_print_eval_idempotent(e):
    text = format_element(e)
    assert format_element(eval_text(text)) == text
    assert parse_element(text) == e
