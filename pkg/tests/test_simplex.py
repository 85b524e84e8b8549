"""The exact simplex: statuses, degenerate problems, dual certificates."""

from fractions import Fraction

import pytest

from fsing.simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, maximize


def check_certificates(objective, le_rows, le_rhs, eq_rows, eq_rhs, result):
    """Primal feasibility, dual feasibility, strong duality, all exact."""
    x = result.x
    for row, b in zip(le_rows, le_rhs):
        assert sum(Fraction(a) * v for a, v in zip(row, x)) <= b
    for row, b in zip(eq_rows, eq_rhs):
        assert sum(Fraction(a) * v for a, v in zip(row, x)) == b
    assert all(v >= 0 for v in x)
    assert all(y >= 0 for y in result.dual_le)
    for j, c in enumerate(objective):
        lhs = sum(y * row[j] for y, row in zip(result.dual_le, le_rows))
        lhs += sum(y * row[j] for y, row in zip(result.dual_eq, eq_rows))
        assert lhs >= c
    dual_value = sum(y * b for y, b in zip(result.dual_le, le_rhs))
    dual_value += sum(y * b for y, b in zip(result.dual_eq, eq_rhs))
    assert dual_value == result.value


def test_simple_box():
    result = maximize([1, 1], [[1, 0], [0, 1]], [1, 1])
    assert result.status == OPTIMAL
    assert result.value == 2
    assert result.x == (1, 1)
    check_certificates([1, 1], [[1, 0], [0, 1]], [1, 1], [], [], result)


def test_fractional_optimum():
    result = maximize([1], [[2]], [1])
    assert result.value == Fraction(1, 2)


def test_equality_constraints():
    result = maximize([0, 1], [[0, 1]], [1], [[1, 1]], [1])
    assert result.status == OPTIMAL
    assert result.value == 1
    assert result.x == (0, 1)
    check_certificates([0, 1], [[0, 1]], [1], [[1, 1]], [1], result)


def test_infeasible():
    result = maximize([1], [[1]], [-1], [], [])
    assert result.status == INFEASIBLE


def test_infeasible_equalities():
    result = maximize([1, 1], [], [], [[1, 1], [1, 1]], [1, 2])
    assert result.status == INFEASIBLE


def test_unbounded():
    result = maximize([1, 0], [[0, 1]], [1])
    assert result.status == UNBOUNDED


def test_negative_rhs_flip():
    # x >= 2 written as -x <= -2, maximize -x: optimum at x = 2
    result = maximize([-1], [[-1]], [-2])
    assert result.status == OPTIMAL
    assert result.value == -2
    check_certificates([-1], [[-1]], [-2], [], [], result)


def test_beale_cycling_example():
    # classic cycling instance; Bland's rule must terminate at value 1/20
    objective = [Fraction(3, 4), -150, Fraction(1, 50), -6]
    le_rows = [
        [Fraction(1, 4), -60, Fraction(-1, 25), 9],
        [Fraction(1, 2), -90, Fraction(-1, 50), 3],
        [0, 0, 1, 0],
    ]
    le_rhs = [0, 0, 1]
    result = maximize(objective, le_rows, le_rhs)
    assert result.status == OPTIMAL
    assert result.value == Fraction(1, 20)
    check_certificates(objective, le_rows, le_rhs, [], [], result)


def test_degenerate_equalities_with_redundancy():
    result = maximize([1, 1], [[1, 1]], [1], [[1, 1], [2, 2]], [1, 2])
    assert result.status == OPTIMAL
    assert result.value == 1
    check_certificates([1, 1], [[1, 1]], [1], [[1, 1], [2, 2]], [1, 2], result)


def test_row_length_validation():
    with pytest.raises(ValueError):
        maximize([1, 2], [[1]], [1])
