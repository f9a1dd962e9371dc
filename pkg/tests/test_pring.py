from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rsfans.pring import (LEX, NONNEG_CONSTANT, ONE, POSITIVE_OR_ZERO, SQUARES, SUMS_OF_SQUARES_Z, X, ZERO,
                          DualNumber, PreorderSpec, dual_sample, int_sample, parse_dual, support,
                          ts_char_subset_conditions, verify_total_preorder)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)
duals = st.builds(DualNumber, rationals, rationals)


def as_pair(v):
    """Oracle arithmetic on coefficient pairs (a, b) meaning aX + b."""
    return (v.a, v.b)


@given(duals, duals)
def test_product_against_truncated_polynomials(u, v):
    a1, b1 = as_pair(u)
    a2, b2 = as_pair(v)
    # (a1 X + b1)(a2 X + b2) = a1 a2 X² + (a1 b2 + a2 b1) X + b1 b2, with X² = 0
    assert as_pair(u * v) == (a1 * b2 + a2 * b1, b1 * b2)
    assert as_pair(u + v) == (a1 + a2, b1 + b2)


@given(duals, duals, duals)
def test_ring_laws(u, v, w):
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w
    assert u * v == v * u


@given(duals)
def test_lex_is_total_and_proper(v):
    assert LEX(v) or LEX(-v)
    assert not (LEX(v) and LEX(-v)) or v == ZERO


@pytest.mark.parametrize("N", [2, 5])
def test_lex_total_preorder_on_samples(N):
    rep = verify_total_preorder(LEX, dual_sample(N))
    assert rep.ok, rep.format()


def test_squares_are_not_total():
    rep = verify_total_preorder(SQUARES, dual_sample(2))
    ok, w = rep.results["T ∪ -T covers"]
    assert not ok
    v = parse_dual(w)
    assert not SQUARES(v) and not SQUARES(-v)
    assert not SQUARES(X) and not SQUARES(-X)


def test_integer_sums_of_squares():
    rep = verify_total_preorder(SUMS_OF_SQUARES_Z, int_sample(3))
    assert rep.ok
    assert not SUMS_OF_SQUARES_Z(-1)


@pytest.mark.parametrize("N", [1, 2, 4])
def test_lex_support_is_zero(N):
    assert support(LEX, dual_sample(N)).support == (ZERO,)


def test_radical_witness():
    s = support(LEX, dual_sample(2), [(X, ZERO)])
    assert s.radical_witness == (X, ZERO)
    assert X * X + ZERO == ZERO
    assert s.convex_witness is None


def test_zero_always_in_support():
    for T in (LEX, SQUARES, NONNEG_CONSTANT):
        assert ZERO in support(T, [ZERO, ONE]).support


def test_lex_character_conditions():
    rep = ts_char_subset_conditions(LEX, LEX, dual_sample(2))
    failing = [k for k, (ok, _) in rep.results.items() if not ok]
    # the support {0} of lex is not prime: X·X = 0
    assert failing == ["5 S ∩ -S prime"]
    a, b = (parse_dual(t) for t in rep.results["5 S ∩ -S prime"][1].strip("()").split(", "))
    assert a * b == ZERO and a != ZERO and b != ZERO
    assert rep.results["additively closed"][0]


def test_nonnegative_constant_term_passes_all():
    rep = ts_char_subset_conditions(NONNEG_CONSTANT, LEX, dual_sample(3))
    assert rep.ok, rep.format()


def test_positive_part_is_not_total():
    rep = ts_char_subset_conditions(POSITIVE_OR_ZERO, LEX, dual_sample(2))
    ok, w = rep.results["4 S ∪ -S covers"]
    assert not ok
    v = parse_dual(w)
    assert v.b == 0 and v.a != 0
    assert not POSITIVE_OR_ZERO(X) and not POSITIVE_OR_ZERO(-X)


def test_adding_x_breaks_primeness():
    S = PreorderSpec("lex with ±X", lambda v: LEX(v) or v in (X, -X))
    rep = ts_char_subset_conditions(S, LEX, dual_sample(2))
    ok, w = rep.results["5 S ∩ -S prime"]
    assert not ok
    a, b = (parse_dual(t) for t in w.strip("()").split(", "))
    assert a * b == ZERO


@pytest.mark.parametrize("text,value", [
    ("1X+0", DualNumber(1, 0)), ("0X-1", DualNumber(0, -1)), ("X", X), ("-X+3", DualNumber(-1, 3)),
    ("1/2X-3/4", DualNumber(Fraction(1, 2), Fraction(-3, 4))), ("7", DualNumber(0, 7)),
])
def test_parse_dual(text, value):
    assert parse_dual(text) == value


@given(duals)
def test_str_round_trip(v):
    assert parse_dual(str(v)) == v


@pytest.mark.parametrize("bad", ["", "X+", "abc", "1Y"])
def test_parse_dual_rejects(bad):
    with pytest.raises(ValueError):
        parse_dual(bad)
