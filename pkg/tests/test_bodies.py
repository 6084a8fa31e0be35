"""
Tests for polytopes, their homogenizations and tensor hulls.
"""

import os
import sys
from fractions import Fraction

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../src")))

from conetensor.bodies import (
    face_tensor_check,
    homogenize,
    hull_slice_check,
    is_extreme_point,
    is_polytope_face,
    polytope_faces,
    polytope_from_points,
    tensor_hull,
)
from conetensor.cone import make_cone
from conetensor.corpus import get_polytope
from conetensor.exceptions import ImproperFaceError, NotAFaceError, NotSymmetricError, PreconditionError


class TestPolytopes:
    """Tests for polytope construction"""

    def test_interior_points_dropped(self):
        p = polytope_from_points([[0], [1], [2]])
        assert p.vertices == ((Fraction(0),), (Fraction(2),))
        assert not p.symmetric

    def test_symmetry_detected(self):
        assert get_polytope("square").symmetric
        assert not get_polytope("shifted").symmetric

    def test_needs_a_point(self):
        with pytest.raises(PreconditionError):
            polytope_from_points([])

    def test_homogenize_segment(self):
        assert homogenize(get_polytope("segment")) == make_cone(2, rays=[(-1, 1), (1, 1)])

    def test_extreme_points(self):
        square = get_polytope("square")
        assert is_extreme_point(square, (1, -1))
        assert not is_extreme_point(square, (0, 0))


class TestTensorHull:
    """Tests for convex hulls of tensor products"""

    def test_segment_with_itself(self):
        hull = tensor_hull(get_polytope("segment"), get_polytope("segment"))
        assert hull.vertices == ((Fraction(-1),), (Fraction(1),))

    def test_square_times_segment_is_square(self):
        hull = tensor_hull(get_polytope("square"), get_polytope("segment"))
        assert hull == get_polytope("square")
        assert hull.name == "square(x)segment"

    def test_hull_slice_for_symmetric_pairs(self):
        assert hull_slice_check(get_polytope("segment"), get_polytope("square"))
        assert hull_slice_check(get_polytope("cross2"), get_polytope("segment"))

    def test_hull_slice_needs_symmetry(self):
        with pytest.raises(NotSymmetricError):
            hull_slice_check(get_polytope("shifted"), get_polytope("segment"))


class TestPolytopeFaces:
    """Tests for polytope faces and face products"""

    @pytest.mark.parametrize("name, count", [("segment", 3), ("square", 9), ("cross2", 9)])
    def test_face_counts(self, name, count):
        assert len(polytope_faces(get_polytope(name))) == count

    def test_diagonal_is_not_a_face(self):
        square = get_polytope("square")
        # Sorted vertices: 0 (-1,-1), 1 (-1,1), 2 (1,-1), 3 (1,1)
        assert is_polytope_face(square, [0, 1])
        assert not is_polytope_face(square, [0, 3])
        assert not is_polytope_face(square, [])

    def test_face_products(self):
        square, segment = get_polytope("square"), get_polytope("segment")
        assert face_tensor_check(square, segment, [0], [0])
        assert face_tensor_check(square, segment, [0, 1], [1])

    def test_face_products_need_proper_faces(self):
        square, segment = get_polytope("square"), get_polytope("segment")
        with pytest.raises(ImproperFaceError):
            face_tensor_check(square, segment, [], [0])
        with pytest.raises(ImproperFaceError):
            face_tensor_check(square, segment, [0], [0, 1])
        with pytest.raises(NotAFaceError):
            face_tensor_check(square, segment, [0, 3], [0])
