import pytest

from hssatlas.oracle import (
    BRUTE_FORCE_CELL_LIMIT,
    ISOMORPHISM_PAIRS,
    Diagnostic,
    RectShape,
    ShapeTooLarge,
    check_type_i_degree,
    count_syt_bruteforce,
    count_syt_hook,
    isomorphism_diagnostics,
)


# Counts frozen from the exhaustive enumeration itself.
SYT_CASES = [
    ((1, 1), 1),
    ((1, 5), 1),
    ((2, 2), 2),
    ((2, 3), 5),
    ((2, 5), 42),
    ((3, 3), 42),
    ((3, 4), 462),
    ((4, 4), 24024),
]


@pytest.mark.parametrize("shape,expected", SYT_CASES)
def test_count_syt_bruteforce_known_values(shape, expected):
    assert count_syt_bruteforce(RectShape(*shape)) == expected


@pytest.mark.parametrize("shape,expected", SYT_CASES)
def test_count_syt_hook_known_values(shape, expected):
    assert count_syt_hook(RectShape(*shape)) == expected


def test_hook_formula_beyond_the_enumeration_limit():
    assert count_syt_hook(RectShape(4, 5)) == 1662804
    assert count_syt_hook(RectShape(5, 5)) == 701149020


def test_transposed_shapes_count_the_same():
    assert count_syt_bruteforce(RectShape(2, 4)) == count_syt_bruteforce(RectShape(4, 2))
    assert count_syt_hook(RectShape(3, 7)) == count_syt_hook(RectShape(7, 3))


def test_bruteforce_refuses_large_shapes():
    with pytest.raises(ShapeTooLarge):
        count_syt_bruteforce(RectShape(3, 7))
    with pytest.raises(ShapeTooLarge):
        count_syt_bruteforce(RectShape(5, 5))


def test_shape_sides_must_be_positive():
    with pytest.raises(ValueError):
        RectShape(0, 3)
    with pytest.raises(ValueError):
        RectShape(2, -1)


def test_bruteforce_equals_hook_on_the_whole_enumeration_envelope():
    for rows in range(1, 5):
        for cols in range(1, 6):
            shape = RectShape(rows, cols)
            if shape.cells > BRUTE_FORCE_CELL_LIMIT:
                continue
            assert count_syt_bruteforce(shape) == count_syt_hook(shape)


def test_check_type_i_degree_with_bruteforce_coverage():
    for s in range(2, 10):
        for k in range(1, s):
            assert check_type_i_degree(k, s) == "Pass"


def test_check_type_i_degree_hook_only_range():
    from hssatlas.invariants import degree_irreducible
    from hssatlas.spaces import type_i

    for s in range(10, 15):
        for k in range(1, s):
            shape = RectShape(min(k, s - k), max(k, s - k))
            assert count_syt_hook(shape) == degree_irreducible(type_i(k, s))


def test_isomorphism_diagnostics_expected_verdicts():
    expected = [
        Diagnostic("II(2)", "I(1,2)", True, 1, 1, "Pass"),
        Diagnostic("II(3)", "I(1,4)", True, 1, 1, "Pass"),
        Diagnostic("II(4)", "IV(6)", True, 2, 2, "Pass"),
        Diagnostic("III(1)", "I(1,2)", True, 1, 1, "Pass"),
        Diagnostic("III(2)", "IV(3)", True, 1, 2, "Mismatch"),
        Diagnostic("IV(4)", "I(2,4)", True, 2, 2, "Pass"),
    ]
    assert isomorphism_diagnostics() == expected


def test_diagnostics_are_deterministic_and_order_stable():
    first = isomorphism_diagnostics()
    second = isomorphism_diagnostics()
    assert first == second
    assert [d.left for d in first] == [left.render() for left, _ in ISOMORPHISM_PAIRS]


def test_exactly_one_mismatch_and_it_is_the_known_one():
    mismatches = [d for d in isomorphism_diagnostics() if d.verdict == "Mismatch"]
    assert len(mismatches) == 1
    only = mismatches[0]
    assert (only.left, only.right) == ("III(2)", "IV(3)")
    assert (only.degree_left, only.degree_right) == (1, 2)
    assert only.dims_match
