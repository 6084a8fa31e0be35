# src/conetensor/bodies.py
"""Convex polytopes handled through their homogenization cones."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from .cone import Cone, intersect, make_cone
from .exactla import RationalVector, check_dim, neg, unit_vector, vector
from .exceptions import ImproperFaceError, NotAFaceError, NotSymmetricError, PreconditionError
from .facelab import all_faces, is_face
from .tensorcone import projective_cone, vec_tensor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Polytope:
    """Bounded polytope given by its vertices (sorted, exact)."""

    dim: int
    vertices: Tuple[RationalVector, ...]
    symmetric: bool
    name: str = field(default="", compare=False)

    def __str__(self) -> str:
        label = self.name or "polytope"
        return f"{label}(dim={self.dim}, vertices={len(self.vertices)}, symmetric={self.symmetric})"


def _lift(v: Sequence) -> tuple:
    return tuple(v) + (1,)


def _drop(r: Sequence) -> RationalVector:
    height = Fraction(r[-1])
    return tuple(Fraction(x) / height for x in r[:-1])


def homogenize(p: Polytope) -> Cone:
    """Cone in dimension ``dim + 1`` generated by the points ``(v, 1)``."""
    return make_cone(p.dim + 1, rays=[_lift(v) for v in p.vertices], name=f"hom({p.name})" if p.name else "")


def polytope_from_points(points: Sequence[Sequence], dim: int = -1, name: str = "") -> Polytope:
    """Convex hull of ``points``, keeping only extreme points."""
    if not points:
        raise PreconditionError("a polytope needs at least one point")
    width = len(points[0]) if dim < 0 else dim
    check_dim(points, width, "polytope point")
    hom = make_cone(width + 1, rays=[_lift(vector(p)) for p in points])
    vertices = tuple(sorted(_drop(r) for r in hom.rays))
    symmetric = set(vertices) == {neg(v) for v in vertices}
    return Polytope(width, vertices, symmetric, name)


def tensor_hull(c: Polytope, d: Polytope) -> Polytope:
    """conv{x (x) y : x in c, y in d}."""
    points = [vec_tensor(x, y) for x in c.vertices for y in d.vertices]
    label = f"{c.name}(x){d.name}" if c.name and d.name else ""
    return polytope_from_points(points, c.dim * d.dim, label)


def is_extreme_point(p: Polytope, x: Sequence) -> bool:
    return tuple(Fraction(v) for v in x) in set(p.vertices)


def _require_symmetric(*polytopes: Polytope) -> None:
    for p in polytopes:
        if not p.symmetric:
            raise NotSymmetricError(p.name or "polytope")


def homogenized_slice(c: Polytope, d: Polytope) -> Polytope:
    """Tensor block of min(hom c, hom d) on the slice {mixed coordinates 0, last coordinate 1}."""
    m, n = c.dim, d.dim
    width = n + 1
    total = (m + 1) * width
    mixed = [unit_vector(total, i * width + n) for i in range(m)] + [unit_vector(total, m * width + j) for j in range(n)]
    sliced = intersect(projective_cone(homogenize(c), homogenize(d)), make_cone(total, ineqs=[], eqs=mixed))
    last = total - 1
    points = []
    for r in sliced.rays:
        height = Fraction(r[last])
        points.append(tuple(Fraction(r[i * width + j]) / height for i in range(m) for j in range(n)))
    return polytope_from_points(points, m * n)


def hull_slice_check(c: Polytope, d: Polytope) -> bool:
    """The homogenized projective cone, sliced, reproduces the tensor hull of two symmetric polytopes."""
    _require_symmetric(c, d)
    return homogenized_slice(c, d) == tensor_hull(c, d)


def _vertex_face_cone(p: Polytope, indices: Sequence[int]) -> Cone:
    return make_cone(p.dim + 1, rays=[_lift(p.vertices[i]) for i in indices])


def is_polytope_face(p: Polytope, indices: Sequence[int]) -> bool:
    if not indices:
        return False
    return is_face(homogenize(p), _vertex_face_cone(p, indices))


def polytope_faces(p: Polytope) -> List[Tuple[int, ...]]:
    """Non-empty faces of ``p`` as vertex-index tuples, via the faces of the homogenization."""
    hom = homogenize(p)
    index = {v: k for k, v in enumerate(p.vertices)}
    faces = []
    for face in all_faces(hom):
        if face.ray_subset:
            faces.append(tuple(sorted(index[_drop(hom.rays[i])] for i in face.ray_subset)))
    return sorted(faces, key=lambda s: (len(s), s))


def face_tensor_check(c: Polytope, d: Polytope, m: Sequence[int], n: Sequence[int]) -> bool:
    """Whether conv(M (x) N) is a face of the tensor hull, for proper faces M of c and N of d."""
    _require_symmetric(c, d)
    for p, face, label in ((c, m, "left face"), (d, n, "right face")):
        chosen = sorted(set(face))
        if not chosen or len(chosen) == len(p.vertices):
            raise ImproperFaceError(label)
        if not is_polytope_face(p, chosen):
            raise NotAFaceError(label)
    hull = tensor_hull(c, d)
    points = [vec_tensor(c.vertices[i], d.vertices[j]) for i in sorted(set(m)) for j in sorted(set(n))]
    candidate = make_cone(hull.dim + 1, rays=[_lift(x) for x in points])
    return is_face(homogenize(hull), candidate)
