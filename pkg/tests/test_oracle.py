"""
Tests for the reference oracles: Fourier-Motzkin membership, the segment face
test and the exact simplex.
"""

import os
import random
import sys
from fractions import Fraction

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../src")))

from conetensor.cone import contains, make_cone
from conetensor.corpus import get_cone
from conetensor.exceptions import NotASubsetError, NotInConeError, PreconditionError
from conetensor.facelab import all_faces, is_face
from conetensor.oracle import (
    INFEASIBLE,
    OPTIMAL,
    UNBOUNDED,
    extremality_definitional,
    face_definitional,
    lp_max_coordinate,
    membership_fm,
    membership_fm_cone,
)


class TestMembership:
    """Tests for Fourier-Motzkin membership"""

    def test_square_cone(self):
        q = get_cone("Q")
        assert membership_fm(q.rays, (0, 0, 1))
        assert membership_fm(q.rays, (Fraction(1, 2), -1, 1))
        assert not membership_fm(q.rays, (2, 0, 1))

    def test_no_generators(self):
        assert membership_fm([], (0, 0))
        assert not membership_fm([], (1, 0))

    def test_lineality_both_signs(self):
        assert membership_fm([(0, 1)], (-5, 3), lineality=[(1, 0)])
        assert not membership_fm([(0, 1)], (0, -1), lineality=[(1, 0)])
        assert membership_fm_cone(get_cone("halfplane"), (-5, 3))

    def test_agrees_with_inequalities(self):
        q = get_cone("Q")
        rng = random.Random(7)
        for _ in range(40):
            x = tuple(rng.randint(-3, 3) for _ in range(3))
            assert membership_fm_cone(q, x) == contains(q, x)


class TestFaceDefinition:
    """Tests for the segment-based face test"""

    def test_agrees_on_square_cone_faces(self):
        q = get_cone("Q")
        for face in all_faces(q):
            assert face_definitional(q, face.cone())

    def test_rejects_diagonal(self):
        q = get_cone("Q")
        diagonal = make_cone(3, rays=[(1, 1, 1), (-1, -1, 1)])
        assert not face_definitional(q, diagonal)
        assert face_definitional(q, diagonal) == is_face(q, diagonal)

    def test_rejects_interior_ray(self):
        q = get_cone("Q")
        assert not face_definitional(q, make_cone(3, rays=[(0, 0, 1)]))

    def test_candidate_must_be_subset(self):
        with pytest.raises(NotASubsetError):
            face_definitional(get_cone("Q"), make_cone(3, rays=[(1, 0, 0)]))


class TestSimplex:
    """Tests for the exact simplex and extremality"""

    def test_optimal(self):
        assert lp_max_coordinate([(1, 0), (0, 1), (1, 1)], (1, 1), 2) == (OPTIMAL, Fraction(1))

    def test_infeasible(self):
        assert lp_max_coordinate([(1, 0)], (0, 1), 0) == (INFEASIBLE, None)

    def test_unbounded(self):
        assert lp_max_coordinate([(1,), (-1,)], (0,), 0) == (UNBOUNDED, None)

    def test_extremality(self):
        q = get_cone("Q")
        assert extremality_definitional(q, (1, 1, 1))
        assert not extremality_definitional(q, (0, 0, 1))
        assert not extremality_definitional(get_cone("halfplane"), (1, 0))

    def test_extremality_preconditions(self):
        q = get_cone("Q")
        with pytest.raises(PreconditionError):
            extremality_definitional(q, (0, 0, 0))
        with pytest.raises(NotInConeError):
            extremality_definitional(q, (1, 0, 0))
