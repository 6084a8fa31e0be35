"""
Tests for exact rational linear algebra.
"""

import os
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../src")))

from conetensor.exactla import (
    RationalMatrix,
    Reducer,
    complement,
    full_basis,
    kernel_basis,
    parallel,
    primitive,
    rank,
    rank_of,
    rref,
    sign_normalized,
    solve,
    span_basis,
    subspace_contains,
    subspace_intersection,
    subspace_ops,
    subspace_sum,
    to_fraction,
)
from conetensor.exceptions import DimensionMismatchError


RATIONALS = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def rational_spans(draw, dim=None):
    """(dim, spanning vectors) with dim <= 6; vectors may be dependent or zero."""
    if dim is None:
        dim = draw(st.integers(min_value=1, max_value=6))
    count = draw(st.integers(min_value=0, max_value=dim + 1))
    vectors = draw(st.lists(st.tuples(*[RATIONALS] * dim), min_size=count, max_size=count))
    return dim, vectors


@st.composite
def rational_matrices(draw):
    rows = draw(st.integers(min_value=1, max_value=5))
    cols = draw(st.integers(min_value=1, max_value=6))
    entries = draw(st.lists(RATIONALS, min_size=rows * cols, max_size=rows * cols))
    return RationalMatrix.from_rows([entries[r * cols : (r + 1) * cols] for r in range(rows)])


class TestScalars:
    """Tests for scalar parsing and primitive vectors"""

    def test_parses_fraction_strings(self):
        assert to_fraction("3/4") == Fraction(3, 4)
        assert to_fraction(" -2 ") == Fraction(-2)
        assert to_fraction(5) == Fraction(5)

    def test_rejects_booleans_and_floats(self):
        with pytest.raises(TypeError):
            to_fraction(True)
        with pytest.raises(TypeError):
            to_fraction(0.5)

    def test_primitive_clears_denominators(self):
        assert primitive([Fraction(1, 2), Fraction(-1, 3), 0]) == (3, -2, 0)
        assert primitive([4, 6]) == (2, 3)
        assert primitive([0, 0]) == (0, 0)

    def test_primitive_keeps_orientation(self):
        assert primitive([-2, 4]) == (-1, 2)
        assert sign_normalized([-2, 4]) == (1, -2)

    def test_parallel_means_positive_multiple(self):
        assert parallel((1, 2), (2, 4))
        assert not parallel((1, 2), (-1, -2))
        assert not parallel((0, 0), (1, 0))


class TestMatrix:
    """Tests for RationalMatrix and row reduction"""

    def test_from_rows_requires_cols_for_empty(self):
        m = RationalMatrix.from_rows([], 3)
        assert (m.rows, m.cols) == (0, 3)

    def test_ragged_rows_rejected(self):
        with pytest.raises(DimensionMismatchError):
            RationalMatrix.from_rows([[1, 2], [3]])

    def test_product_and_transpose(self):
        a = RationalMatrix.from_rows([[1, 2], [3, 4]])
        assert (a @ RationalMatrix.identity(2)) == a
        assert a.transpose().row(0) == (1, 3)
        assert a.apply((1, 1)) == (3, 7)

    def test_rref_unique_form(self):
        m = RationalMatrix.from_rows([[2, 4, 2], [1, 2, 3]])
        reduced, pivots = rref(m)
        assert pivots == [0, 2]
        assert reduced.row(0) == (1, 2, 0)
        assert reduced.row(1) == (0, 0, 1)
        assert rank(m) == 2

    def test_solve(self):
        m = RationalMatrix.from_rows([[1, 1], [1, -1]])
        assert solve(m, (2, 0)) == (1, 1)
        assert solve(RationalMatrix.from_rows([[1, 1], [1, 1]]), (1, 2)) is None


class TestSubspaces:
    """Tests for canonical subspace bases"""

    def test_span_basis_is_canonical(self):
        assert span_basis([(2, 2, 0), (0, 0, 3)], 3) == span_basis([(1, 1, 3), (0, 0, -1)], 3)
        assert span_basis([], 3) == []

    def test_full_basis_is_standard(self):
        assert full_basis(3) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]

    def test_kernel_basis(self):
        m = RationalMatrix.from_rows([[1, 1, 0]])
        kernel = kernel_basis(m)
        assert len(kernel) == 2
        assert all(sum(v[:2]) == 0 for v in kernel)

    def test_complement_of_nothing_is_everything(self):
        assert complement([], 2) == full_basis(2)
        assert complement(full_basis(2), 2) == []

    def test_intersection_and_sum(self):
        a = [(1, 0, 0), (0, 1, 0)]
        b = [(0, 1, 0), (0, 0, 1)]
        assert subspace_intersection(a, b, 3) == [(0, 1, 0)]
        assert subspace_sum(a, b, 3) == full_basis(3)
        assert subspace_contains(a, [(1, 1, 0)], 3)
        assert not subspace_contains(a, [(0, 0, 1)], 3)

    def test_subspace_ops_dispatch(self):
        assert subspace_ops([(1, 0)], [(0, 1)], "sum", 2) == full_basis(2)
        assert subspace_ops([(1, 0)], [(0, 1)], "intersection", 2) == []
        with pytest.raises(ValueError):
            subspace_ops([(1, 0)], [(0, 1)], "union", 2)
        with pytest.raises(DimensionMismatchError):
            subspace_ops([(1, 0, 0)], [(0, 1)], "sum", 2)

    def test_reducer_projection_kernel(self):
        basis = [(1, 0, 1)]
        reducer = Reducer(basis, 3)
        projection = reducer.projection_matrix()
        assert projection.rows == 2
        assert projection.apply((1, 0, 1)) == (0, 0)
        assert not all(x == 0 for x in projection.apply((1, 0, 0)))


@pytest.mark.slow
class TestSubspaceProperties:
    """Random rational subspaces of ambient dimension up to 6"""

    @given(rational_spans())
    @settings(max_examples=200, deadline=None)
    def test_span_basis_idempotent_and_rank(self, drawn):
        """The canonical basis spans the same space and is its own canonical basis."""
        dim, vectors = drawn
        basis = span_basis(vectors, dim)
        assert span_basis(basis, dim) == basis
        assert len(basis) == rank_of(vectors, dim)
        assert subspace_contains(basis, vectors, dim)
        assert subspace_contains(vectors, basis, dim)

    @given(st.data())
    @settings(max_examples=200, deadline=None)
    def test_intersection_contained_in_both(self, data):
        dim, a = data.draw(rational_spans())
        _, b = data.draw(rational_spans(dim=dim))
        meet = subspace_intersection(a, b, dim)
        assert subspace_contains(a, meet, dim)
        assert subspace_contains(b, meet, dim)
        # Dimension formula
        assert len(meet) == rank_of(a, dim) + rank_of(b, dim) - len(subspace_sum(a, b, dim))

    @given(rational_spans())
    @settings(max_examples=200, deadline=None)
    def test_complement_annihilates(self, drawn):
        dim, vectors = drawn
        annihilator = complement(span_basis(vectors, dim), dim)
        assert all(sum(x * y for x, y in zip(a, v)) == 0 for a in annihilator for v in vectors)
        assert len(annihilator) + rank_of(vectors, dim) == dim

    @given(rational_matrices())
    @settings(max_examples=200, deadline=None)
    def test_rref_idempotent(self, m):
        reduced, pivots = rref(m)
        again, pivots_again = rref(reduced)
        assert again == reduced
        assert pivots_again == pivots

    @given(rational_matrices())
    @settings(max_examples=200, deadline=None)
    def test_rank_plus_nullity(self, m):
        kernel = kernel_basis(m)
        assert rank(m) + len(kernel) == m.cols
        assert all(x == 0 for v in kernel for x in m.apply(v))
