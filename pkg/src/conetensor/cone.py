# src/conetensor/cone.py
"""
Closed polyhedral cones with both representations kept in canonical form.

A cone is stored as generators (extremal rays modulo the lineality space, plus a
basis of that space) and as constraints (inequalities ``<a, x> >= 0`` plus a
basis of the implicit equalities). Conversion between the two goes through
cddlib (pycddlib) with exact fractions; both outputs are then canonicalized
here so that equal cones compare equal.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import cdd

from .config import ConfigManager
from .exactla import (
    IntVector,
    RationalMatrix,
    Reducer,
    check_dim,
    dot,
    is_zero,
    neg,
    primitive,
    rank_of,
    span_basis,
    vector,
)
from .exceptions import (
    DimensionMismatchError,
    DoubleDescriptionLimitError,
    EmptyRepresentationError,
    InconsistentRepresentationError,
)

logger = logging.getLogger(__name__)

VectorList = Tuple[IntVector, ...]


@dataclass(frozen=True)
class Cone:
    """Closed polyhedral cone in R^dim.

    ``rays`` and ``ineqs`` are primitive integer vectors reduced modulo
    ``lineality`` and ``eqs`` respectively, then sorted. ``name`` is a label
    only and does not take part in equality.
    """

    dim: int
    rays: VectorList
    lineality: VectorList
    ineqs: VectorList
    eqs: VectorList
    name: str = field(default="", compare=False)

    def generators(self) -> List[IntVector]:
        """Rays plus both orientations of every lineality basis vector."""
        return list(self.rays) + list(self.lineality) + [neg(v) for v in self.lineality]

    def constraints(self) -> List[IntVector]:
        """Inequalities plus both orientations of every equation."""
        return list(self.ineqs) + list(self.eqs) + [neg(v) for v in self.eqs]

    def span(self) -> List[IntVector]:
        return span_basis(list(self.rays) + list(self.lineality), self.dim)

    def named(self, name: str) -> "Cone":
        return Cone(self.dim, self.rays, self.lineality, self.ineqs, self.eqs, name)

    def __str__(self) -> str:
        label = self.name or "cone"
        return (
            f"{label}(dim={self.dim}, rays={len(self.rays)}, lineality={len(self.lineality)}, "
            f"ineqs={len(self.ineqs)}, eqs={len(self.eqs)})"
        )


@dataclass(frozen=True)
class ConeRepInput:
    """Raw input for :func:`cone_from`. ``None`` marks an absent side; an empty list is a present, empty side."""

    dim: int
    rays: Optional[Sequence[Sequence]] = None
    lineality: Optional[Sequence[Sequence]] = None
    ineqs: Optional[Sequence[Sequence]] = None
    eqs: Optional[Sequence[Sequence]] = None
    name: str = ""

    @property
    def has_v(self) -> bool:
        return self.rays is not None or self.lineality is not None

    @property
    def has_h(self) -> bool:
        return self.ineqs is not None or self.eqs is not None


# --- Double description ---
NUMBER_TYPE = "fraction"


def _to_int_vectors(vectors: Iterable[Sequence]) -> List[IntVector]:
    out = []
    for v in vectors:
        p = primitive(vector(v))
        if not is_zero(p):
            out.append(p)
    return out


def double_description(
    ineqs: Sequence[Sequence[int]],
    eqs: Sequence[Sequence[int]],
    dim: int,
    max_rows: Optional[int] = None,
) -> Tuple[List[IntVector], List[IntVector]]:
    """Generators of ``{x : A x >= 0, E x = 0}`` as ``(rays, lineality)``.

    The conversion is done by cddlib in exact rational arithmetic. Rays are
    extremal modulo the returned lineality vectors but are not yet canonical;
    callers pass them through :func:`cone_from`.

    Raises:
        DoubleDescriptionLimitError: if more than ``max_rows`` rays come back.
    """
    limit = max_rows if max_rows is not None else ConfigManager.max_dd_rows()
    if dim == 0:
        return [], []

    # Row [b, a] reads b + <a, x> >= 0; the leading 1 >= 0 keeps the matrix non-empty
    mat = cdd.Matrix([[1] + [0] * dim], number_type=NUMBER_TYPE)
    mat.rep_type = cdd.RepType.INEQUALITY
    rows = [[0] + list(a) for a in _to_int_vectors(ineqs)]
    if rows:
        mat.extend(rows)
    eq_rows = [[0] + list(e) for e in _to_int_vectors(eqs)]
    if eq_rows:
        mat.extend(eq_rows, linear=True)

    generators = cdd.Polyhedron(mat).get_generators()
    generators.canonicalize()

    rays: List[IntVector] = []
    lineality: List[IntVector] = []
    for i in range(generators.row_size):
        row = generators[i]
        # Vertices (leading 1) can only be the apex
        if row[0] != 0:
            continue
        v = primitive(row[1:])
        if is_zero(v):
            continue
        if i in generators.lin_set:
            lineality.append(v)
        else:
            rays.append(v)
    if len(rays) > limit:
        raise DoubleDescriptionLimitError(limit, len(rays))
    logger.debug(f"Double description in dim {dim}: {len(rows)} inequalities -> {len(rays)} rays, "
                 f"{len(lineality)} lineality vectors")
    return rays, lineality


# --- Canonical forms ---
def _canonical_pair(vectors: Iterable[Sequence], basis: Sequence[Sequence], dim: int) -> VectorList:
    """Reduce ``vectors`` modulo span(basis), make them primitive, drop zeros and duplicates, sort."""
    reducer = Reducer(basis, dim)
    out = set()
    for v in vectors:
        p = primitive(reducer.reduce(v))
        if not is_zero(p):
            out.add(p)
    return tuple(sorted(out))


def _assemble(dim: int, rays, lineality, ineqs, eqs, name: str) -> Cone:
    lin = tuple(span_basis(lineality, dim))
    eq = tuple(span_basis(eqs, dim))
    return Cone(
        dim=dim,
        rays=_canonical_pair(rays, lin, dim),
        lineality=lin,
        ineqs=_canonical_pair(ineqs, eq, dim),
        eqs=eq,
        name=name,
    )


def _from_generators(dim: int, rays, lineality, max_rows: Optional[int]) -> Tuple[list, list, list, list]:
    ineqs, eqs = double_description(rays, lineality, dim, max_rows)
    v_rays, v_lin = double_description(ineqs, eqs, dim, max_rows)
    return v_rays, v_lin, ineqs, eqs


def _from_constraints(dim: int, ineqs, eqs, max_rows: Optional[int]) -> Tuple[list, list, list, list]:
    v_rays, v_lin = double_description(ineqs, eqs, dim, max_rows)
    h_ineqs, h_eqs = double_description(v_rays, v_lin, dim, max_rows)
    return v_rays, v_lin, h_ineqs, h_eqs


def cone_from(rep: ConeRepInput, max_rows: Optional[int] = None) -> Cone:
    """Complete the missing representation, canonicalize both and return the cone.

    Raises:
        EmptyRepresentationError: if neither side is present.
        DimensionMismatchError: if a vector does not have ``rep.dim`` entries.
        InconsistentRepresentationError: if both sides are given and disagree.
    """
    if rep.dim < 0:
        raise DimensionMismatchError("a non-negative dimension", rep.dim, "cone")
    if not rep.has_v and not rep.has_h:
        raise EmptyRepresentationError()
    for what, vectors in (("ray", rep.rays), ("lineality vector", rep.lineality),
                          ("inequality", rep.ineqs), ("equation", rep.eqs)):
        check_dim(vectors or [], rep.dim, what)

    if rep.has_v:
        rays = _to_int_vectors(rep.rays or [])
        lin = _to_int_vectors(rep.lineality or [])
        built = _assemble(rep.dim, *_from_generators(rep.dim, rays, lin, max_rows), rep.name)
        if rep.has_h:
            ineqs = _to_int_vectors(rep.ineqs or [])
            eqs = _to_int_vectors(rep.eqs or [])
            other = _assemble(rep.dim, *_from_constraints(rep.dim, ineqs, eqs, max_rows), rep.name)
            if built != other:
                raise InconsistentRepresentationError(separating_generator(built, other) or
                                                      separating_generator(other, built))
        return built

    ineqs = _to_int_vectors(rep.ineqs or [])
    eqs = _to_int_vectors(rep.eqs or [])
    return _assemble(rep.dim, *_from_constraints(rep.dim, ineqs, eqs, max_rows), rep.name)


def make_cone(
    dim: int,
    rays: Optional[Sequence[Sequence]] = None,
    lineality: Optional[Sequence[Sequence]] = None,
    ineqs: Optional[Sequence[Sequence]] = None,
    eqs: Optional[Sequence[Sequence]] = None,
    name: str = "",
) -> Cone:
    """Keyword shortcut for ``cone_from(ConeRepInput(...))``."""
    return cone_from(ConeRepInput(dim, rays, lineality, ineqs, eqs, name))


def zero_cone(dim: int) -> Cone:
    return make_cone(dim, rays=[], name=f"zero{dim}")


def full_space(dim: int) -> Cone:
    return make_cone(dim, ineqs=[], name=f"full{dim}")


def orthant(dim: int) -> Cone:
    return make_cone(dim, rays=[tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)], name=f"std{dim}")


# --- Duality and basic queries ---
def dual(c: Cone) -> Cone:
    """Dual cone, obtained by swapping the two canonical representations."""
    return Cone(c.dim, rays=c.ineqs, lineality=c.eqs, ineqs=c.rays, eqs=c.lineality,
                name=f"{c.name}*" if c.name else "")


def lineality_space(c: Cone) -> List[IntVector]:
    return list(c.lineality)


def is_proper(c: Cone) -> bool:
    return not c.lineality


def is_generating(c: Cone) -> bool:
    return not c.eqs


def is_full_space(c: Cone) -> bool:
    return not c.ineqs and not c.eqs


def is_zero_cone(c: Cone) -> bool:
    return not c.rays and not c.lineality


def is_simplex(c: Cone) -> bool:
    """Proper with linearly independent rays."""
    return is_proper(c) and rank_of(list(c.rays), c.dim) == len(c.rays)


PREDICATES = {
    "is_proper": is_proper,
    "is_generating": is_generating,
    "is_full_space": is_full_space,
    "is_zero": is_zero_cone,
    "is_simplex": is_simplex,
}


def predicates(c: Cone, which: str) -> bool:
    try:
        return PREDICATES[which](c)
    except KeyError:
        raise ValueError(f"Unknown predicate: {which}") from None


def contains(c: Cone, x: Sequence) -> bool:
    if len(x) != c.dim:
        raise DimensionMismatchError(c.dim, len(x), "point")
    return all(dot(a, x) >= 0 for a in c.ineqs) and all(dot(e, x) == 0 for e in c.eqs)


def separating_generator(a: Cone, b: Cone) -> Optional[IntVector]:
    """A generator of ``a`` lying outside ``b``, or None when ``a`` is a subset of ``b``."""
    for g in a.generators():
        if not contains(b, g):
            return g
    return None


# --- Binary operations ---
def _same_dim(a: Cone, b: Cone) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(a.dim, b.dim, "cone")


def intersect(a: Cone, b: Cone) -> Cone:
    _same_dim(a, b)
    return make_cone(a.dim, ineqs=list(a.ineqs) + list(b.ineqs), eqs=list(a.eqs) + list(b.eqs))


def minkowski_sum(a: Cone, b: Cone) -> Cone:
    _same_dim(a, b)
    return make_cone(a.dim, rays=list(a.rays) + list(b.rays), lineality=list(a.lineality) + list(b.lineality))


def is_subset(a: Cone, b: Cone) -> bool:
    _same_dim(a, b)
    return separating_generator(a, b) is None


def cones_equal(a: Cone, b: Cone) -> bool:
    _same_dim(a, b)
    return a == b


def cone_binops(a: Cone, b: Cone, kind: str):
    """Dispatch ``intersect``, ``minkowski_sum``, ``equals`` or ``subset``."""
    if kind == "intersect":
        return intersect(a, b)
    if kind == "minkowski_sum":
        return minkowski_sum(a, b)
    if kind == "equals":
        return cones_equal(a, b)
    if kind == "subset":
        return is_subset(a, b)
    raise ValueError(f"Unknown cone operation: {kind}")


# --- Linear images ---
def image_cone(t: RationalMatrix, c: Cone) -> Cone:
    """Pushforward ``T[c]``."""
    if t.cols != c.dim:
        raise DimensionMismatchError(t.cols, c.dim, "linear map domain")
    return make_cone(t.rows, rays=[t.apply(r) for r in c.rays], lineality=[t.apply(l) for l in c.lineality])


def preimage_cone(t: RationalMatrix, g: Cone) -> Cone:
    """Pullback ``T^-1[g]``."""
    if t.rows != g.dim:
        raise DimensionMismatchError(t.rows, g.dim, "linear map codomain")
    tt = t.transpose()
    return make_cone(t.cols, ineqs=[tt.apply(a) for a in g.ineqs], eqs=[tt.apply(e) for e in g.eqs])


def quotient_cone(c: Cone, subspace: Sequence[Sequence]) -> Tuple[Cone, RationalMatrix]:
    """Image of ``c`` in ``R^dim / span(subspace)``.

    The quotient is identified with the coordinate subspace on the non-pivot
    columns of the subspace's echelon form; the returned matrix is that
    projection and its kernel is exactly span(subspace).
    """
    check_dim(subspace, c.dim, "subspace vector")
    projection = Reducer(subspace, c.dim).projection_matrix()
    return image_cone(projection, c), projection
