from fractions import Fraction as F

import pytest

from luroth.commensurate import cwg
from luroth.expansion import element
from luroth.geometry import ClosedBall
from luroth.oracles import (
    brute_contains,
    brute_cwg,
    commensurate_predicate,
    oracle_suite,
    tail_identity_holds,
    window_elements,
)


def test_brute_contains_known_windows():
    assert brute_contains(F(3, 5), F(4, 5), 2)  # R_23 = [2/3, 3/4] fits
    assert not brute_contains(F(3, 5), F(4, 5), 1)
    assert brute_contains(F(1, 2), F(1), 1)  # R_2 itself
    assert not brute_contains(F(51, 100), F(99, 100), 1)
    with pytest.raises(ValueError):
        brute_contains(F(0), F(1, 2), 1)


def test_brute_cwg_matches_production():
    for l, r in ((F(3, 5), F(4, 5)), (F(19, 40), F(21, 40)), (F(7, 16), F(9, 16))):
        assert brute_cwg(l, r) == cwg(ClosedBall.from_endpoints(l, r)).generation


def test_predicate_uniqueness():
    l, r = F(3, 5), F(4, 5)
    hits = [n for n in range(1, 8) if commensurate_predicate(l, r, n)]
    assert hits == [2]


def test_tail_identity():
    assert tail_identity_holds(element(()), 7)
    assert tail_identity_holds(element((2, 3)), 9)


def test_window_elements_walks_right_to_left():
    found, truncated = window_elements(F(3, 5), F(4, 5), 2, limit=50)
    assert not truncated
    assert found[0].right >= F(4, 5) >= found[0].left  # contains the right end
    for prev, cur in zip(found, found[1:]):
        assert cur.right == prev.left  # exact tiling
    assert any(e.digits == (2, 3) for e in found)


def test_window_elements_truncates_near_accumulation():
    # Just above 1/2 the generation-2 elements pile up without bound.
    found, truncated = window_elements(F(1, 2) + F(1, 10**9), F(3, 4), 2, limit=10)
    assert truncated and len(found) == 10


def test_oracle_suite_runs_clean():
    results = oracle_suite(samples=40, seed=2)
    assert results["cwg_checked"] > 0
    assert results["tail_checked"] > 0
    assert results["adjacency_checked"] > 0
