"""
Tests for faces, order ideals, quotient maps and the tensor face constructions.
"""

import logging
import os
import sys

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../src")))

from conetensor.cone import dual, make_cone, orthant
from conetensor.corpus import get_cone
from conetensor.exactla import RationalMatrix
from conetensor.exceptions import (
    NotAFaceError,
    NotAnIdealError,
    NotASubsetError,
    NotInConeError,
    PreconditionError,
)
from conetensor.facelab import (
    SCAND,
    SCOR,
    SUM_FORM,
    TENSOR_PLUS_LINEALITY,
    Face,
    all_faces,
    andface,
    bipositive_ideal_inclusion,
    combined_face,
    diamond,
    dual_face,
    exposed_face,
    extremal_rays,
    face_join,
    face_meet,
    face_of,
    face_sublattice_check,
    homomorphism_checks,
    ideal_face,
    injective_face_msetn,
    injective_ideal,
    injective_orface_andface,
    injective_sublattice_check,
    is_face,
    is_ideal,
    make_face,
    make_ideal,
    maximal_ideals,
    orface,
    span_is_ideal,
)

# Sorted rays of Q: 0 (-1,-1,1), 1 (-1,1,1), 2 (1,-1,1), 3 (1,1,1)
E00, E01, E10, E11 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)


@pytest.fixture
def q():
    return get_cone("Q")


@pytest.fixture
def std2():
    # Sorted rays: 0 (0,1), 1 (1,0)
    return orthant(2)


class TestFaces:
    """Tests for face construction and enumeration"""

    def test_square_cone_face_lattice(self, q):
        faces = all_faces(q)
        assert len(faces) == 10
        assert faces[0].is_minimal
        assert faces[-1].is_maximal
        assert [len(f.ray_subset) for f in faces] == [0, 1, 1, 1, 1, 2, 2, 2, 2, 4]

    def test_facets(self, q):
        facets = [f.ray_subset for f in all_faces(q) if len(f.ray_subset) == 2]
        assert facets == [(0, 1), (0, 2), (1, 3), (2, 3)]

    def test_opposite_rays_are_not_a_face(self, q):
        with pytest.raises(NotAFaceError):
            make_face(q, (0, 3))
        with pytest.raises(NotAFaceError):
            make_face(q, (7,))

    def test_face_of_points(self, q):
        assert face_of(q, [(1, 0, 1)]).ray_subset == (2, 3)
        assert face_of(q, [(0, 0, 1)]).is_maximal
        with pytest.raises(NotASubsetError):
            face_of(q, [(2, 0, 1)])

    def test_meet_and_join(self, q):
        assert face_meet(make_face(q, (0, 1)), make_face(q, (1, 3))).ray_subset == (1,)
        assert face_join(make_face(q, (0,)), make_face(q, (3,))).is_maximal
        with pytest.raises(PreconditionError):
            face_meet(make_face(q, (0,)), make_face(orthant(3), (0,)))

    def test_is_face(self, q):
        assert is_face(q, make_face(q, (0, 1)).cone())
        assert not is_face(q, make_cone(3, rays=[(1, 1, 1), (-1, -1, 1)]))
        with pytest.raises(NotASubsetError):
            is_face(q, make_cone(3, rays=[(1, 0, 0)]))

    def test_extremal_rays(self, q):
        assert extremal_rays(q) == list(q.rays)
        assert extremal_rays(get_cone("halfplane")) == []

    def test_extremal_rays_of_improper_cone_logged(self, caplog):
        with caplog.at_level(logging.DEBUG, logger="conetensor.facelab"):
            assert extremal_rays(get_cone("halfplane")) == []
        assert "no extremal rays" in caplog.text
        assert extremal_rays(get_cone("zero2")) == []


class TestExposedAndDualFaces:
    """Tests for faces cut out by positive functionals"""

    def test_exposed_face(self, q):
        assert exposed_face(q, (1, 0, 1)) == Face(q, (0, 1))
        with pytest.raises(NotInConeError):
            exposed_face(q, (1, 0, 0))

    def test_dual_face_of_two_functionals(self, q):
        assert dual_face(q, [(1, 0, 1), (0, 1, 1)]).ray_subset == (0,)

    def test_diamond(self, q):
        face = diamond(q, make_face(q, (0, 1)))
        assert face.parent == dual(q)
        assert face.rays == [(1, 0, 1)]
        assert diamond(q, Face(q, ())).is_maximal


class TestIdeals:
    """Tests for order ideals and maximal ideals"""

    def test_span_of_face_is_ideal(self, q):
        face = make_face(q, (0, 1))
        ideal = span_is_ideal(q, face)
        assert len(ideal.basis) == 2
        assert ideal_face(ideal) == face

    def test_non_face_span_is_not_ideal(self, q):
        assert not is_ideal(q, [(1, 0, 1)])
        with pytest.raises(NotAnIdealError):
            make_ideal(q, [(1, 0, 1)])

    def test_lineality_is_ideal(self):
        halfplane = get_cone("halfplane")
        assert make_ideal(halfplane, halfplane.lineality).basis == ((1, 0),)

    def test_maximal_ideals(self, q, std2):
        assert len(maximal_ideals(q)) == 4
        assert all(len(basis) == 2 for basis in maximal_ideals(q))
        assert len(maximal_ideals(std2)) == 2
        assert maximal_ideals(get_cone("full2")) == []


class TestProjectiveFaces:
    """Tests for orface and andface on min(E, F)"""

    def test_orface_and_andface_on_orthants(self, std2):
        m, n = make_face(std2, (1,)), make_face(std2, (1,))
        assert orface(std2, std2, m, n) == make_cone(4, rays=[E00, E01, E10])
        assert andface(std2, std2, m, n) == make_cone(4, rays=[E00])

    def test_sublattice_identities(self, q):
        qstar = get_cone("Qstar")
        checks = face_sublattice_check(q, qstar, make_face(q, (0, 1)), make_face(qstar, (0,)), suite="thmD")
        assert len(checks) == 4
        assert all(c.passed for c in checks)
        assert all(c.suite == "thmD" for c in checks)

    def test_combined_face(self, std2):
        e1, e2 = make_face(std2, (1,)), make_face(std2, (0,))
        assert combined_face(std2, std2, e1, e1, e2, e2) == make_cone(4, rays=[E00, E11])

    def test_combined_face_needs_disjoint_faces(self, std2):
        e1 = make_face(std2, (1,))
        with pytest.raises(PreconditionError):
            combined_face(std2, std2, e1, e1, e1, make_face(std2, (0,)))


class TestInjectiveFaces:
    """Tests for SCorface, SCandface and injective ideals"""

    def test_scor_and_scand_on_orthants(self, std2):
        m, n = make_face(std2, (1,)), make_face(std2, (1,))
        assert injective_orface_andface(std2, std2, m, n, SCOR) == orface(std2, std2, m, n)
        assert injective_orface_andface(std2, std2, m, n, SCAND) == andface(std2, std2, m, n)
        with pytest.raises(ValueError):
            injective_orface_andface(std2, std2, m, n, "xor")

    def test_square_pair_faces(self, q):
        qstar = get_cone("Qstar")
        m, n = make_face(q, (0, 1)), make_face(qstar, (0,))
        result = injective_orface_andface(q, qstar, m, n, SCOR)
        assert result.dim == 9

    def test_msetn(self, std2):
        n = make_face(std2, (1,))
        assert injective_face_msetn(std2, std2, [(1, 0)], n) == make_cone(4, rays=[E00, E10, E11])
        with pytest.raises(NotInConeError):
            injective_face_msetn(std2, std2, [(-1, 0)], n)

    def test_injective_sublattice_on_square_pair(self, q):
        qstar = get_cone("Qstar")
        checks = injective_sublattice_check(q, qstar, make_face(q, (0, 1)), make_face(qstar, (0,)), suite="thmD")
        assert len(checks) == 8
        failed = [str(c) for c in checks if not c.passed]
        assert not failed, "\n".join(failed)
        assert all(c.suite == "thmD" for c in checks)

    def test_injective_sublattice_on_orthants(self, std2):
        faces = all_faces(std2)
        for m in faces:
            for n in faces:
                assert all(c.passed for c in injective_sublattice_check(std2, std2, m, n))

    def test_injective_ideal_forms(self, std2):
        i = make_ideal(std2, [(1, 0)])
        basis, ok = injective_ideal(std2, std2, i, i, TENSOR_PLUS_LINEALITY)
        assert basis == [E00] and ok
        basis, ok = injective_ideal(std2, std2, i, i, SUM_FORM)
        assert len(basis) == 3 and ok
        assert bipositive_ideal_inclusion(std2, std2, i, i)
        with pytest.raises(ValueError):
            injective_ideal(std2, std2, i, i, "product")


class TestHomomorphisms:
    """Tests for positive maps factored through quotients"""

    def test_quotient_by_lineality_is_bipositive(self):
        halfplane = get_cone("halfplane")
        t = RationalMatrix.from_rows([[0, 1]])
        report = homomorphism_checks(t, halfplane, make_cone(1, rays=[(1,)]), [(1, 0)])
        assert report.factors_through and report.factor_positive
        assert report.quotient_bipositive and report.inside_lineality
        assert report.consistent

    def test_third_isomorphism(self):
        std3 = orthant(3)
        t = RationalMatrix.from_rows([[0, 0, 1]])
        report = homomorphism_checks(t, std3, orthant(1), [(1, 0, 0)], [(1, 0, 0), (0, 1, 0)])
        assert not report.quotient_bipositive
        assert not report.inside_lineality
        assert report.third_isomorphism is True
        assert report.ideal_correspondence is True
        assert report.consistent

    def test_map_must_vanish_on_subspace(self, std2):
        t = RationalMatrix.from_rows([[1, 1]])
        with pytest.raises(PreconditionError):
            homomorphism_checks(t, std2, orthant(1), [(1, 0)])
