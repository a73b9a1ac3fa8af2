import pytest
from hypothesis import given
from hypothesis import strategies as st

from hssatlas.arith import (
    FactorialRatio,
    NonIntegralRatio,
    eval_ratio_direct,
    eval_ratio_legendre,
    factorial,
)


def test_factorial_known_values():
    assert factorial(0) == 1
    assert factorial(1) == 1
    assert factorial(5) == 120
    assert factorial(10) == 3628800
    assert factorial(15) == 1307674368000


def test_factorial_agrees_with_prime_exponent_reconstruction():
    # 15! rebuilt purely from per-prime exponents, no multiplication chain
    assert eval_ratio_legendre(FactorialRatio((15,), ())) == 1307674368000


def test_factorial_rejects_negative_input():
    with pytest.raises(ValueError):
        factorial(-1)


def test_factorial_recurrence():
    for m in range(31):
        assert factorial(m + 1) == factorial(m) * (m + 1)


KNOWN_RATIOS = [
    (FactorialRatio((4,), (1, 2, 3)), 2),
    (FactorialRatio((6,), (6,)), 1),
    (FactorialRatio((10, 2, 4, 6), (4, 5, 6, 7)), 12),
    (FactorialRatio((15, 2, 4, 6, 8), (5, 6, 7, 8, 9)), 286),
    (FactorialRatio((), ()), 1),
    (FactorialRatio((0, 1), ()), 1),
]


@pytest.mark.parametrize("ratio,expected", KNOWN_RATIOS)
def test_eval_ratio_direct_known_values(ratio, expected):
    assert eval_ratio_direct(ratio) == expected


@pytest.mark.parametrize("ratio,expected", KNOWN_RATIOS)
def test_eval_ratio_legendre_known_values(ratio, expected):
    assert eval_ratio_legendre(ratio) == expected


@pytest.mark.parametrize("evaluate", [eval_ratio_direct, eval_ratio_legendre])
def test_non_integral_ratio_is_a_hard_error(evaluate):
    with pytest.raises(NonIntegralRatio):
        evaluate(FactorialRatio((2,), (3,)))
    with pytest.raises(NonIntegralRatio):
        evaluate(FactorialRatio((5, 5), (7,)))


factorial_args = st.lists(st.integers(min_value=0, max_value=40), max_size=6).map(tuple)


@given(num=factorial_args, den=factorial_args)
def test_both_evaluators_agree(num, den):
    """Same value when integral, and the same hard error when not."""
    ratio = FactorialRatio(num, den)
    try:
        direct = eval_ratio_direct(ratio)
    except NonIntegralRatio:
        with pytest.raises(NonIntegralRatio):
            eval_ratio_legendre(ratio)
        return
    assert eval_ratio_legendre(ratio) == direct


@given(args=factorial_args)
def test_identical_numerator_and_denominator_cancel(args):
    ratio = FactorialRatio(args, args)
    assert eval_ratio_direct(ratio) == 1
    assert eval_ratio_legendre(ratio) == 1
