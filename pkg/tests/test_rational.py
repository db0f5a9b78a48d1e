"""Exact linear algebra: RREF canonicalization, kernels, subspace lattice ops."""

from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbitspan.rational import RationalSubspace, matrix_rank, nullspace, rref, solve, vec


def test_rref_normalizes_pivots_and_drops_zero_rows():
    rows = [[Q(2), Q(4)], [Q(1), Q(2)], [Q(0), Q(0)]]
    assert rref(rows) == [[Q(1), Q(2)]]


def test_rref_is_canonical_for_row_equivalent_inputs():
    a = [[Q(1), Q(2), Q(3)], [Q(0), Q(1), Q(1)]]
    b = [[Q(2), Q(5), Q(7)], [Q(1), Q(3), Q(4)]]  # same row space
    assert rref(a) == rref(b)


def test_nullspace_dimensions():
    rows = [vec([1, -1, 0]), vec([0, 1, -1])]
    kernel = nullspace(rows, 3)
    assert len(kernel) == 1
    assert kernel[0] == vec([1, 1, 1])


def test_solve_consistent_and_inconsistent():
    rows = [vec([1, 1]), vec([1, -1]), vec([2, 0])]
    assert solve(rows, [Q(2), Q(0), Q(2)]) == [Q(1), Q(1)]
    assert solve(rows, [Q(2), Q(0), Q(5)]) is None


def test_subspace_equality_is_structural():
    s1 = RationalSubspace.span_of(3, [vec([1, 1, 0]), vec([0, 0, 1])])
    s2 = RationalSubspace.span_of(3, [vec([2, 2, 2]), vec([0, 0, 5]), vec([1, 1, 1])])
    assert s1 == s2
    assert s1.dim == 2


def test_constraints_round_trip():
    s = RationalSubspace.from_constraints(4, [vec([1, -1, 0, 0]), vec([0, 0, 1, 0])])
    assert s.dim == 2
    back = RationalSubspace.from_constraints(4, s.constraints())
    assert back == s


def test_intersection_of_kernel_and_span():
    palindromic = RationalSubspace.from_constraints(3, [vec([1, 0, -1])])
    first_two = RationalSubspace.span_of(3, [vec([1, 0, 0]), vec([0, 1, 0])])
    meet = palindromic.intersection(first_two)
    assert meet.dim == 1
    assert meet.contains(vec([0, 1, 0]))
    assert not meet.contains(vec([1, 0, 0]))


def test_full_and_zero():
    assert RationalSubspace.full(5).dim == 5
    assert RationalSubspace.zero(5).dim == 0
    assert RationalSubspace.zero(5).contains(vec([0] * 5))


def test_contains_rejects_wrong_dimension():
    with pytest.raises(ValueError):
        RationalSubspace.full(3).contains(vec([1, 2]))


small_fracs = st.fractions(min_value=-3, max_value=3, max_denominator=4)
small_matrix = st.lists(st.lists(small_fracs, min_size=4, max_size=4), min_size=1, max_size=4)


@given(small_matrix)
def test_rank_bounded_and_basis_contained(rows):
    s = RationalSubspace.span_of(4, rows)
    assert s.dim == matrix_rank(rows) <= 4
    for row in rows:
        assert s.contains(vec(row))


@given(small_matrix, small_matrix)
def test_intersection_contained_in_both(rows_a, rows_b):
    a = RationalSubspace.span_of(4, rows_a)
    b = RationalSubspace.span_of(4, rows_b)
    meet = a.intersection(b)
    assert a.contains_subspace(meet)
    assert b.contains_subspace(meet)
    assert meet.dim <= min(a.dim, b.dim)


@given(small_matrix)
def test_dimension_formula_with_constraints(rows):
    s = RationalSubspace.span_of(4, rows)
    assert len(s.constraints()) == 4 - s.dim
