import pytest
from hypothesis import given
from hypothesis import strategies as st

from fplab import (
    DecreasingSet,
    coordinate_box,
    dominates,
    grid_expand,
    in_grid_expansion,
    minimal_complement,
    standard_ball,
    weighted_ball,
    weighted_order,
)

from conftest import decreasing_sets


def test_rejects_non_decreasing():
    with pytest.raises(ValueError):
        DecreasingSet([(1, 0)])  # (0,0) missing
    with pytest.raises(ValueError):
        DecreasingSet([(0, 0), (2, 0)])  # gap at (1,0)
    with pytest.raises(ValueError):
        DecreasingSet([])
    with pytest.raises(ValueError):
        DecreasingSet([(0, 0), (0, -1)])


def test_weighted_ball_shapes():
    # |i|_w < 5 with w=(2,3); (1,1) has weight exactly 5 and is excluded
    J = weighted_ball((2, 3), 5)
    assert set(J) == {(0, 0), (1, 0), (2, 0), (0, 1)}
    assert minimal_complement(J) == ((0, 2), (1, 1), (3, 0))
    with pytest.raises(ValueError):
        weighted_ball((0, 1), 2)
    with pytest.raises(ValueError):
        weighted_ball((1, 1), 0)


def test_box_and_ball():
    box = coordinate_box((2, 2))
    assert set(box) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert minimal_complement(box) == ((0, 2), (2, 0))

    ball = standard_ball(2, 2)
    assert set(ball) == {(0, 0), (1, 0), (0, 1)}
    assert minimal_complement(ball) == ((0, 2), (1, 1), (2, 0))


def test_nine_element_minimal_complement():
    # the nine-element staircase: columns of height 2 up to x1^2, then 1
    J = DecreasingSet([(i, 0) for i in range(6)] + [(i, 1) for i in range(3)])
    assert minimal_complement(J) == ((0, 2), (3, 1), (6, 0))


@given(decreasing_sets())
def test_minimal_complement_is_antichain_outside(J):
    comp = minimal_complement(J)
    for b in comp:
        assert b not in J
        # every predecessor is inside
        for k in range(J.num_vars):
            if b[k] > 0:
                assert b[:k] + (b[k] - 1,) + b[k + 1 :] in J
    for a in comp:
        for b in comp:
            assert a == b or not dominates(a, b)


@given(decreasing_sets())
def test_complement_generates_complement(J):
    # within a window, i is outside J iff it dominates some minimal element
    comp = minimal_complement(J)
    top = max(max(i) for i in J) + 2
    for i1 in range(top):
        for i2 in range(top):
            i = (i1, i2)
            outside = i not in J
            assert outside == any(dominates(i, b) for b in comp)


def test_grid_expansion_count_and_membership():
    J = DecreasingSet([(i, 0) for i in range(6)] + [(i, 1) for i in range(3)])
    js = grid_expand(J, (2, 2))
    assert len(js) == 4 * len(J) == 36
    expected = {(a, b) for a in range(12) for b in range(2)} | {
        (a, b) for a in range(6) for b in (2, 3)
    }
    assert js == expected
    for i in expected:
        assert in_grid_expansion(i, J, (2, 2))
    assert not in_grid_expansion((12, 0), J, (2, 2))
    assert not in_grid_expansion((0, 4), J, (2, 2))


@given(decreasing_sets(), st.tuples(st.integers(1, 3), st.integers(1, 3)))
def test_grid_expansion_cardinality(J, sizes):
    js = grid_expand(J, sizes)
    assert len(js) == sizes[0] * sizes[1] * len(J)
    # floor-division membership agrees with the explicit set
    for i in js:
        assert in_grid_expansion(i, J, sizes)


@given(
    st.tuples(st.integers(1, 3), st.integers(1, 3)),
    st.integers(1, 6),
    st.tuples(st.integers(1, 3), st.integers(1, 3)),
)
def test_weighted_ball_expansion_characterization(w, r, sizes):
    """i lies in (B_w,r)_S exactly when sum_j floor(i_j/s_j) w_j < r."""
    J = weighted_ball(w, r)
    top = [s * (max(i[k] for i in J) + 1) + 1 for k, s in enumerate(sizes)]
    for i1 in range(top[0]):
        for i2 in range(top[1]):
            member = in_grid_expansion((i1, i2), J, sizes)
            quot = (i1 // sizes[0], i2 // sizes[1])
            assert member == (weighted_order(quot, w) < r)


def test_weighted_order():
    assert weighted_order((2, 3), (3, 2)) == 12
    assert weighted_order((0, 0), (1, 1)) == 0


def test_decreasing_set_api():
    J = standard_ball(2, 2)
    assert len(J) == 3
    assert sorted(J) == [(0, 0), (0, 1), (1, 0)]
    assert J == standard_ball(2, 2)
    assert hash(J) == hash(standard_ball(2, 2))
    assert J != coordinate_box((2, 2))
