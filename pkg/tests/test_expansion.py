from fractions import Fraction as F

import pytest

from luroth.expansion import (
    NoExpansion,
    child,
    cylinder_length,
    digits,
    element,
    evaluate,
    first_digit,
    left_adjacent,
    locate,
    luroth_map,
    right_adjacent,
    tail_measure,
)


def test_first_digit_branch_boundaries():
    # a(x) = n + 1 on [1/(n+1), 1/n)
    assert first_digit(F(1, 2)) == 2
    assert first_digit(F(1, 3)) == 3
    assert first_digit(F(2, 3)) == 2
    assert first_digit(F(999, 1000)) == 2
    assert first_digit(F(1, 1000)) == 1000


def test_luroth_map_piecewise():
    # T x = n(n+1)x - n on [1/(n+1), 1/n)
    assert luroth_map(F(5, 12)) == F(1, 2)  # n = 2: 6x - 2
    assert luroth_map(F(1, 2)) == 0  # n = 1: 2x - 1
    assert luroth_map(F(0)) == 0
    assert luroth_map(F(7, 10)) == F(2, 5)


def test_digits_finite_expansion():
    ds = digits(F(5, 12), 10)
    assert ds.digits == (3, 2) and ds.terminated


def test_digits_periodic_expansion():
    # 1/3 -> digit 3, T(1/3) = 6/3 - 2 = 0? No: 1/3 in [1/3, 1/2) -> a=3,
    # T = 3*2*(1/3) - 2 = 0: terminated in one digit.
    ds = digits(F(1, 3), 5)
    assert ds.digits == (3,) and ds.terminated
    # 2/5: a = 3, T = 6*(2/5) - 2 = 2/5: fixed point, never terminates.
    ds = digits(F(2, 5), 6)
    assert ds.digits == (3,) * 6 and not ds.terminated


def test_zero_has_no_expansion():
    with pytest.raises(NoExpansion):
        digits(F(0), 3)


def test_evaluate_reconstructs_terminated_points():
    assert evaluate((3, 2)) == F(5, 12)
    assert evaluate((2,)) == F(1, 2)
    for x in (F(5, 12), F(7, 18), F(31, 32), F(1, 7)):
        ds = digits(x, 64)
        if ds.terminated:
            assert evaluate(ds) == x


def test_cylinder_length_product():
    assert cylinder_length((2,)) == F(1, 2)
    assert cylinder_length((2, 3)) == F(1, 12)
    assert cylinder_length((3, 3, 2)) == F(1, 72)


def test_element_intervals():
    e = element((2, 3))
    assert (e.left, e.right) == (F(2, 3), F(3, 4))
    assert e.generation == 2 and e.length == F(1, 12)
    x = element(())
    assert (x.left, x.right) == (0, 1) and x.generation == 0


def test_child_nested_and_scaled():
    parent = element((2,))
    c = child(parent, 3)
    assert c.digits == (2, 3)
    assert parent.left <= c.left and c.right <= parent.right
    assert c.length == parent.length / 6
    with pytest.raises(ValueError):
        child(parent, 1)


def test_adjacency():
    e = element((2, 3))
    la = left_adjacent(e)
    assert la.digits == (2, 4) and (la.left, la.right) == (F(5, 8), F(2, 3))
    assert la.right == e.left
    ra = right_adjacent(e)
    assert ra.digits == (2, 2) and ra.left == e.right
    assert right_adjacent(element((2, 2))) is None
    assert right_adjacent(left_adjacent(e)) == e


def test_locate_interior_point():
    e = locate(F(2, 5), 3)
    assert e.digits == (3, 3, 3)
    assert e.left <= F(2, 5) <= e.right


def test_locate_accumulation_point_uses_trailing_twos():
    # 5/12 terminates after (3, 2); deeper generations switch to the
    # alternative expansion (3, 3, 2, 2, ...) with 5/12 on the right.
    e = locate(F(5, 12), 3)
    assert e.digits == (3, 3, 2)
    assert e.right == F(5, 12) and e.left == F(29, 72)
    assert locate(F(1), 4).digits == (2, 2, 2, 2)
    assert locate(F(1), 4).right == 1


def test_locate_exact_depth_termination():
    # A terminated point is the left (accumulation) endpoint of its own
    # cylinder, so even at exact depth the right-endpoint reading is used.
    assert locate(F(5, 12), 2).digits == (3, 3)
    assert element((3, 3)).right == F(5, 12)


def test_tail_measure_identity():
    e = element((2, 3))
    for b in range(2, 12):
        covered = sum(child(e, a).length for a in range(2, b + 1))
        assert covered + tail_measure(e, b) == e.length
    assert tail_measure(element((2,)), 4) == F(1, 8)


def test_generation_tiles_to_the_right():
    # Walking left-adjacent from locate(1, n) tiles (0, 1] with exact joins.
    e = locate(F(1), 3)
    total = F(0)
    for _ in range(200):
        total += e.length
        nxt = left_adjacent(e)
        assert nxt.right == e.left
        e = nxt
    assert total == 1 - e.right
