"""
Tests for polyhedral cones: double description, canonical forms and duality.
"""

import os
import sys

import pytest
from hypothesis import given, settings, strategies as st

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../src")))

from conetensor.cone import (
    ConeRepInput,
    PREDICATES,
    cone_binops,
    cone_from,
    contains,
    dual,
    full_space,
    image_cone,
    intersect,
    is_proper,
    is_simplex,
    is_subset,
    lineality_space,
    make_cone,
    minkowski_sum,
    orthant,
    predicates,
    preimage_cone,
    quotient_cone,
    separating_generator,
    zero_cone,
)
from conetensor.exactla import RationalMatrix
from conetensor.exceptions import (
    DimensionMismatchError,
    DoubleDescriptionLimitError,
    EmptyRepresentationError,
    InconsistentRepresentationError,
)

Q_RAYS = [(1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1)]
Q_INEQS = [(1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 1)]
SWAP = RationalMatrix.from_rows([[0, 1], [1, 0]])


RATIONALS = st.fractions(min_value=-2, max_value=2, max_denominator=3)


@st.composite
def generated_cones(draw):
    """Cones in R^d, d <= 5, spanned by at most 8 small rational generators."""
    dim = draw(st.integers(min_value=1, max_value=5))
    rays = draw(st.lists(st.tuples(*[RATIONALS] * dim), max_size=8))
    return make_cone(dim, rays=rays)


class TestConeConstruction:
    """Tests for cone_from and the two representations"""

    def test_square_cone_from_inequalities(self):
        q = make_cone(3, ineqs=Q_INEQS)
        assert q.rays == ((-1, -1, 1), (-1, 1, 1), (1, -1, 1), (1, 1, 1))
        assert q.lineality == ()
        assert q.eqs == ()

    def test_both_sides_agree(self):
        a = make_cone(3, rays=Q_RAYS)
        b = make_cone(3, ineqs=Q_INEQS)
        assert a == b
        assert make_cone(3, rays=Q_RAYS, ineqs=Q_INEQS) == a

    def test_redundant_generators_removed(self):
        c = make_cone(2, rays=[(1, 0), (0, 1), (1, 1), (2, 0)])
        assert c.rays == ((0, 1), (1, 0))

    def test_halfplane_has_lineality(self):
        c = make_cone(2, ineqs=[(0, 1)])
        assert c.lineality == ((1, 0),)
        assert c.rays == ((0, 1),)
        assert lineality_space(c) == [(1, 0)]
        assert not is_proper(c)

    def test_zero_and_full_cones(self):
        z, f = zero_cone(2), full_space(2)
        assert z.rays == () and z.lineality == ()
        assert len(z.eqs) == 2
        assert f.ineqs == () and f.eqs == ()
        assert len(f.lineality) == 2
        assert dual(z) == f

    def test_zero_dimensional_space(self):
        c = make_cone(0, rays=[])
        assert c.dim == 0
        assert dual(c) == c

    def test_fractional_input_is_scaled(self):
        c = make_cone(2, rays=[("1/2", 0), (0, "3/4")])
        assert c == orthant(2)

    def test_name_does_not_affect_equality(self):
        assert orthant(2) == make_cone(2, rays=[(0, 1), (1, 0)], name="other")

    def test_empty_representation_rejected(self):
        with pytest.raises(EmptyRepresentationError):
            make_cone(2)

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(DimensionMismatchError):
            make_cone(2, rays=[(1, 0, 0)])

    def test_inconsistent_sides_rejected(self):
        with pytest.raises(InconsistentRepresentationError) as excinfo:
            make_cone(2, rays=[(1, 0)], ineqs=[(0, 1)])
        assert excinfo.value.witness is not None

    def test_double_description_limit(self):
        with pytest.raises(DoubleDescriptionLimitError) as excinfo:
            cone_from(ConeRepInput(3, ineqs=Q_INEQS), max_rows=1)
        assert excinfo.value.limit == 1

    def test_limit_from_environment(self, monkeypatch):
        monkeypatch.setenv("CONETENSOR_MAX_DD_ROWS", "1")
        with pytest.raises(DoubleDescriptionLimitError):
            make_cone(3, ineqs=Q_INEQS)


class TestDualityAndPredicates:
    """Tests for dual cones, membership and predicates"""

    def test_square_cone_dual(self):
        q = make_cone(3, rays=Q_RAYS)
        assert dual(q) == make_cone(3, rays=Q_INEQS)
        assert dual(dual(q)) == q

    def test_dual_of_halfplane_is_a_ray(self):
        halfplane = make_cone(2, ineqs=[(0, 1)])
        d = dual(halfplane)
        assert d.rays == ((0, 1),)
        assert d.eqs == ((1, 0),)

    def test_contains(self):
        q = make_cone(3, rays=Q_RAYS)
        assert contains(q, (0, 0, 1))
        assert contains(q, (1, 1, 1))
        assert not contains(q, (2, 0, 1))
        with pytest.raises(DimensionMismatchError):
            contains(q, (0, 1))

    def test_predicates(self):
        q = make_cone(3, rays=Q_RAYS)
        assert PREDICATES["is_proper"](q)
        assert PREDICATES["is_generating"](q)
        assert not is_simplex(q)
        assert is_simplex(orthant(3))
        assert predicates(zero_cone(2), "is_zero")
        assert predicates(full_space(2), "is_full_space")
        assert not predicates(make_cone(2, rays=[(1, 0)]), "is_generating")
        with pytest.raises(ValueError):
            predicates(q, "is_round")

    @pytest.mark.slow
    @given(generated_cones())
    @settings(max_examples=100, deadline=None)
    def test_dual_matches_constraint_construction(self, c):
        """Dual from swapping representations equals the dual built by double description."""
        rebuilt = make_cone(c.dim, ineqs=list(c.rays), eqs=list(c.lineality))
        assert rebuilt == dual(c)
        assert make_cone(c.dim, ineqs=list(c.ineqs), eqs=list(c.eqs)) == c
        assert dual(dual(c)) == c
        assert all(contains(c, g) for g in c.generators())


class TestBinaryOperations:
    """Tests for intersections, sums and inclusion"""

    def test_sum_and_intersection(self):
        halfplane = make_cone(2, ineqs=[(0, 1)])
        assert minkowski_sum(orthant(2), make_cone(2, rays=[(-1, 0)])) == halfplane
        assert intersect(halfplane, make_cone(2, ineqs=[(1, 0)])) == orthant(2)

    def test_subset(self):
        halfplane = make_cone(2, ineqs=[(0, 1)])
        assert is_subset(orthant(2), halfplane)
        assert not is_subset(halfplane, orthant(2))
        assert separating_generator(halfplane, orthant(2)) == (-1, 0)

    def test_dispatch(self):
        assert cone_binops(orthant(2), orthant(2), "equals")
        assert cone_binops(orthant(2), full_space(2), "subset")
        with pytest.raises(ValueError):
            cone_binops(orthant(2), orthant(2), "union")
        with pytest.raises(DimensionMismatchError):
            intersect(orthant(2), orthant(3))


class TestLinearImages:
    """Tests for images, preimages and quotients"""

    def test_image_and_preimage(self):
        ray = make_cone(2, rays=[(1, 0)])
        assert image_cone(SWAP, ray) == make_cone(2, rays=[(0, 1)])
        assert preimage_cone(SWAP, orthant(2)) == orthant(2)

    def test_image_dimension_checked(self):
        with pytest.raises(DimensionMismatchError):
            image_cone(SWAP, orthant(3))
        with pytest.raises(DimensionMismatchError):
            preimage_cone(SWAP, orthant(3))

    def test_quotient_by_lineality_is_proper(self):
        halfplane = make_cone(2, ineqs=[(0, 1)])
        quotient, projection = quotient_cone(halfplane, halfplane.lineality)
        assert projection.rows == 1
        assert quotient == make_cone(1, rays=[(1,)])

    def test_quotient_by_extremal_ray(self):
        q = make_cone(3, rays=Q_RAYS)
        quotient, projection = quotient_cone(q, [(1, 1, 1)])
        assert quotient.dim == 2
        assert is_proper(quotient)
        assert len(quotient.rays) == 2
        assert projection.apply((1, 1, 1)) == (0, 0)
