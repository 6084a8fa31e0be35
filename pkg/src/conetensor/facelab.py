# src/conetensor/facelab.py
"""
Faces, order ideals and quotients of polyhedral cones, and the face
constructions on projective and injective tensor cones.

A face is stored as the sorted indices of the parent's rays it contains; the
parent's lineality space is always part of it. Order ideals are stored as a
canonical subspace basis and are valid only when the quotient cone is proper.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .cone import (
    Cone,
    contains,
    dual,
    image_cone,
    intersect,
    is_proper,
    make_cone,
    minkowski_sum,
    preimage_cone,
    quotient_cone,
    separating_generator,
)
from .exactla import (
    IntVector,
    RationalMatrix,
    Reducer,
    add,
    check_dim,
    complement,
    dot,
    full_basis,
    kernel_basis,
    neg,
    rank,
    span_basis,
    subspace_contains,
    subspace_intersection,
    zero_vector,
)
from .exceptions import (
    DimensionMismatchError,
    IdentityViolationError,
    NotAFaceError,
    NotAnIdealError,
    NotASubsetError,
    NotInConeError,
    PreconditionError,
)
from .models import CheckResult, format_vector
from .tensorcone import (
    injective_cone,
    injective_lineality,
    projective_cone,
    projective_lineality,
    vec_tensor,
)

logger = logging.getLogger(__name__)

MAX_FACE_ENUMERATION_DIM = 9

SCOR = "scor"
SCAND = "scand"
TENSOR_PLUS_LINEALITY = "tensor_plus_lineality"
SUM_FORM = "sum_form"


@dataclass(frozen=True)
class Face:
    parent: Cone
    ray_subset: Tuple[int, ...]

    @property
    def rays(self) -> List[IntVector]:
        return [self.parent.rays[i] for i in self.ray_subset]

    def cone(self) -> Cone:
        return make_cone(self.parent.dim, rays=self.rays, lineality=list(self.parent.lineality))

    def generators(self) -> List[IntVector]:
        return self.rays + list(self.parent.lineality) + [neg(v) for v in self.parent.lineality]

    @property
    def is_minimal(self) -> bool:
        return not self.ray_subset

    @property
    def is_maximal(self) -> bool:
        return len(self.ray_subset) == len(self.parent.rays)

    def __str__(self) -> str:
        return f"face{list(self.ray_subset)}"


@dataclass(frozen=True)
class OrderIdeal:
    parent: Cone
    basis: Tuple[IntVector, ...]


@dataclass(frozen=True)
class HomomorphismReport:
    """Outcome of the quotient-map checks for a positive map vanishing on a subspace."""

    factors_through: bool
    factor_positive: bool
    quotient_bipositive: bool
    inside_lineality: bool
    third_isomorphism: Optional[bool] = None
    ideal_correspondence: Optional[bool] = None

    @property
    def consistent(self) -> bool:
        flags = [
            self.factors_through,
            self.factor_positive,
            self.quotient_bipositive == self.inside_lineality,
            self.third_isomorphism is not False,
            self.ideal_correspondence is not False,
        ]
        return all(flags)


# --- Face closure helpers ---
def _tight_ineqs(c: Cone, points: Sequence[Sequence]) -> List[int]:
    return [k for k, a in enumerate(c.ineqs) if all(dot(a, p) == 0 for p in points)]


def _rays_tight_on(c: Cone, ineq_indices: Sequence[int]) -> Tuple[int, ...]:
    return tuple(
        i for i, r in enumerate(c.rays) if all(dot(c.ineqs[k], r) == 0 for k in ineq_indices)
    )


def face_of(c: Cone, vectors: Sequence[Sequence]) -> Face:
    """Smallest face of ``c`` containing every vector given."""
    check_dim(vectors, c.dim, "point")
    for v in vectors:
        if not contains(c, v):
            raise NotASubsetError(v)
    return Face(c, _rays_tight_on(c, _tight_ineqs(c, vectors)))


def make_face(c: Cone, ray_subset: Sequence[int]) -> Face:
    """Validated constructor: the index set must be closed, i.e. a face."""
    indices = tuple(sorted(set(ray_subset)))
    if any(i < 0 or i >= len(c.rays) for i in indices):
        raise NotAFaceError(f"ray subset {list(indices)}")
    closed = _rays_tight_on(c, _tight_ineqs(c, [c.rays[i] for i in indices]))
    if closed != indices:
        raise NotAFaceError(f"ray subset {list(indices)}")
    return Face(c, indices)


def face_from_cone(c: Cone, candidate: Cone) -> Face:
    """The face of ``c`` equal to ``candidate``; raises NotAFaceError if there is none."""
    if not is_face(c, candidate):
        raise NotAFaceError()
    return Face(c, tuple(i for i, r in enumerate(c.rays) if contains(candidate, r)))


def whole_face(c: Cone) -> Face:
    return Face(c, tuple(range(len(c.rays))))


def minimal_face(c: Cone) -> Face:
    return Face(c, ())


def face_meet(a: Face, b: Face) -> Face:
    if a.parent != b.parent:
        raise PreconditionError("faces of different cones cannot be intersected")
    return Face(a.parent, tuple(sorted(set(a.ray_subset) & set(b.ray_subset))))


def face_join(a: Face, b: Face) -> Face:
    if a.parent != b.parent:
        raise PreconditionError("faces of different cones cannot be joined")
    rays = [a.parent.rays[i] for i in sorted(set(a.ray_subset) | set(b.ray_subset))]
    return face_of(a.parent, rays)


def all_faces(c: Cone) -> List[Face]:
    """Every face of ``c``, smallest first, by closing sets of tight inequalities."""
    if c.dim > MAX_FACE_ENUMERATION_DIM:
        raise PreconditionError(f"face enumeration is limited to ambient dimension {MAX_FACE_ENUMERATION_DIM}")
    top = tuple(range(len(c.rays)))
    seen = {top}
    frontier = [top]
    while frontier:
        current = frontier.pop()
        for k, a in enumerate(c.ineqs):
            sub = tuple(i for i in current if dot(a, c.rays[i]) == 0)
            if sub == current:
                continue
            closed = _rays_tight_on(c, _tight_ineqs(c, [c.rays[i] for i in sub]))
            if closed not in seen:
                seen.add(closed)
                frontier.append(closed)
    return [Face(c, s) for s in sorted(seen, key=lambda s: (len(s), s))]


# --- Face and ideal tests ---
def _subspace_cone(basis: Sequence[Sequence], dim: int) -> Cone:
    return make_cone(dim, rays=[], lineality=list(basis))


def _restrict_to_span(c: Cone, basis: Sequence[Sequence]) -> Cone:
    """``c`` intersected with span(basis)."""
    return intersect(c, make_cone(c.dim, ineqs=[], eqs=complement(basis, c.dim)))


def is_ideal(c: Cone, basis: Sequence[Sequence]) -> bool:
    """True iff the quotient of ``c`` by span(basis) is proper."""
    quotient, _ = quotient_cone(c, basis)
    return is_proper(quotient)


def make_ideal(c: Cone, basis: Sequence[Sequence]) -> OrderIdeal:
    canonical = tuple(span_basis(basis, c.dim))
    if not is_ideal(c, canonical):
        raise NotAnIdealError(canonical)
    return OrderIdeal(c, canonical)


def is_face(c: Cone, candidate: Cone) -> bool:
    """True iff ``candidate`` is a face of ``c``.

    Uses the polyhedral form of the full-subcone criterion: the candidate equals
    ``c`` restricted to its own span, and that span is an order ideal.

    Raises:
        NotASubsetError: if ``candidate`` is not contained in ``c``.
    """
    if c.dim != candidate.dim:
        raise DimensionMismatchError(c.dim, candidate.dim, "candidate face")
    witness = separating_generator(candidate, c)
    if witness is not None:
        raise NotASubsetError(witness)
    span = candidate.span()
    if _restrict_to_span(c, span) != candidate:
        return False
    return is_ideal(c, span)


def span_is_ideal(c: Cone, m: Face) -> OrderIdeal:
    """The order ideal span(M); checks that it cuts ``c`` back down to M."""
    face_cone = m.cone()
    basis = tuple(face_cone.span())
    restricted = _restrict_to_span(c, basis)
    if restricted != face_cone:
        raise IdentityViolationError("span(M) cap c = M", separating_generator(restricted, face_cone))
    if not is_ideal(c, basis):
        raise NotAnIdealError(basis)
    return OrderIdeal(c, basis)


def ideal_face(ideal: OrderIdeal) -> Face:
    """The face ``I cap c`` of an order ideal."""
    restricted = _restrict_to_span(ideal.parent, ideal.basis)
    return face_from_cone(ideal.parent, restricted)


def extremal_rays(c: Cone) -> List[IntVector]:
    """Canonical extremal rays; none unless the cone is proper."""
    if not is_proper(c):
        logger.debug(f"{c} has lineality dimension {len(c.lineality)}, no extremal rays")
        return []
    return list(c.rays)


# --- Exposed and dual faces ---
def _require_dual(c: Cone, phi: Sequence) -> None:
    if len(phi) != c.dim:
        raise DimensionMismatchError(c.dim, len(phi), "functional")
    if not contains(dual(c), phi):
        raise NotInConeError(phi, "dual cone")


def exposed_face(c: Cone, phi: Sequence) -> Face:
    """``c cap ker(phi)`` for a positive functional ``phi``."""
    _require_dual(c, phi)
    return Face(c, tuple(i for i, r in enumerate(c.rays) if dot(phi, r) == 0))


def dual_face(c: Cone, subset: Sequence[Sequence]) -> Face:
    """``c cap subset^perp``; checked against the face exposed by the sum of ``subset``."""
    for phi in subset:
        _require_dual(c, phi)
    face = Face(c, tuple(i for i, r in enumerate(c.rays) if all(dot(phi, r) == 0 for phi in subset)))
    witness = zero_vector(c.dim)
    for phi in subset:
        witness = add(witness, phi)
    if exposed_face(c, witness) != face:
        raise IdentityViolationError("dual face = exposed face of the sum functional", format_vector(witness))
    return face


def diamond(c: Cone, m: Face) -> Face:
    """Dual face ``dual(c) cap M^perp`` as a face of ``dual(c)``."""
    dual_cone = dual(c)
    rays = m.rays
    return Face(dual_cone, tuple(k for k, a in enumerate(c.ineqs) if all(dot(a, r) == 0 for r in rays)))


def maximal_ideals(c: Cone) -> List[List[IntVector]]:
    """Supporting hyperplanes of ``c``, each verified to have a one-dimensional proper quotient."""
    if not c.ineqs:
        return []
    if c.eqs:
        logger.warning(f"Maximal ideals of a non-generating cone {c}: using facet hyperplanes within its span")
    span = c.span()
    result = []
    for a in c.ineqs:
        hyper = subspace_intersection(kernel_basis(RationalMatrix.from_rows([a], c.dim)), span, c.dim)
        basis = span_basis(hyper + list(c.eqs), c.dim)
        quotient, projection = quotient_cone(c, basis)
        if projection.rows != 1 or not is_proper(quotient):
            raise IdentityViolationError("maximal ideal has a one-dimensional proper quotient", format_vector(a))
        result.append(basis)
    return result


# --- Projective face constructions ---
def _subspace_tensor(left: Sequence[Sequence], right: Sequence[Sequence], dim: int) -> List[IntVector]:
    return span_basis([vec_tensor(a, b) for a in left for b in right], dim)


def orface(e: Cone, f: Cone, m: Face, n: Face) -> Cone:
    """min(M, F+) + min(E+, N)."""
    return minkowski_sum(projective_cone(m.cone(), f), projective_cone(e, n.cone()))


def andface(e: Cone, f: Cone, m: Face, n: Face) -> Cone:
    """min(M, N) + lin(min(E+, F+))."""
    lineality = projective_lineality(e, f)
    return minkowski_sum(projective_cone(m.cone(), n.cone()), _subspace_cone(lineality, e.dim * f.dim))


def _equality_check(identity: str, left: Cone, right: Cone, suite: str) -> CheckResult:
    witness = separating_generator(left, right) or separating_generator(right, left)
    return CheckResult(suite=suite, name=identity, passed=left == right, witness=format_vector(witness))


def face_sublattice_check(e: Cone, f: Cone, m: Face, n: Face, suite: str = "faces") -> List[CheckResult]:
    """The four sublattice identities between orfaces and andfaces of min(e, f)."""
    top_e, top_f = whole_face(e), whole_face(f)
    low_e, low_f = minimal_face(e), minimal_face(f)
    and_m_top = andface(e, f, m, top_f)
    and_top_n = andface(e, f, top_e, n)
    return [
        _equality_check("orface(M,N) = andface(M,F+) + andface(E+,N)", orface(e, f, m, n),
                        minkowski_sum(and_m_top, and_top_n), suite),
        _equality_check("andface(M,N) = andface(M,F+) & andface(E+,N)", andface(e, f, m, n),
                        intersect(and_m_top, and_top_n), suite),
        _equality_check("orface(M,lin F) = andface(M,F+)", orface(e, f, m, low_f), and_m_top, suite),
        _equality_check("orface(lin E,N) = andface(E+,N)", orface(e, f, low_e, n), and_top_n, suite),
    ]


def injective_sublattice_check(e: Cone, f: Cone, m: Face, n: Face, suite: str = "faces") -> List[CheckResult]:
    """The SCorface/SCandface diamond of max(e, f) and the one-sided forms of SCorface(M,N).

    Every face of a polyhedral cone is a dual face, so both the intersection
    formula and the join formula hold for all (M, N).
    """
    maxcone = injective_cone(e, f)
    top_e, top_f = whole_face(e), whole_face(f)
    low_e, low_f = minimal_face(e), minimal_face(f)
    m_dia, n_dia = diamond(e, m), diamond(f, n)

    left_face = scorface(e, f, m, low_f)
    right_face = scorface(e, f, low_e, n)
    m_face_dual_f = _row_cone(maxcone.dim, _mfacen_rows(m.cone(), _dual_generators(f)))
    dual_e_set_n = _row_cone(maxcone.dim, _msetn_rows(_dual_generators(e), n.cone()))
    top = scorface(e, f, m, n)
    join = face_of(maxcone, left_face.generators() + right_face.generators()).cone()
    one_sided_left = intersect(_row_cone(maxcone.dim, _mfacen_rows(m.cone(), n_dia.generators())), maxcone)
    one_sided_right = intersect(_row_cone(maxcone.dim, _msetn_rows(m_dia.generators(), n.cone())), maxcone)
    return [
        _equality_check("SCorface(M,lin F) = SCandface(M,F+)", left_face, scandface(e, f, m, top_f), suite),
        _equality_check("SCandface(M,F+) = <M | dual(F)>", scandface(e, f, m, top_f), m_face_dual_f, suite),
        _equality_check("SCorface(lin E,N) = SCandface(E+,N)", right_face, scandface(e, f, top_e, n), suite),
        _equality_check("SCandface(E+,N) = <dual(E) | N>", scandface(e, f, top_e, n), dual_e_set_n, suite),
        _equality_check("SCandface(M,N) = SCorface(M,lin F) & SCorface(lin E,N)", scandface(e, f, m, n),
                        intersect(left_face, right_face), suite),
        _equality_check("SCorface(M,N) = join of SCorface(M,lin F) and SCorface(lin E,N)", top, join, suite),
        _equality_check("SCorface(M,N) = <M | N dual> & max", top, one_sided_left, suite),
        _equality_check("SCorface(M,N) = <M dual | N> & max", top, one_sided_right, suite),
    ]


def combined_face(e: Cone, f: Cone, m1: Face, n1: Face, m2: Face, n2: Face) -> Cone:
    """andface(M1,N1) + andface(M2,N2) for faces meeting only in the lineality spaces."""
    if set(m1.ray_subset) & set(m2.ray_subset):
        raise PreconditionError("M1 and M2 must intersect in the lineality space of E+")
    if set(n1.ray_subset) & set(n2.ray_subset):
        raise PreconditionError("N1 and N2 must intersect in the lineality space of F+")
    result = minkowski_sum(andface(e, f, m1, n1), andface(e, f, m2, n2))
    other = intersect(orface(e, f, m1, n2), orface(e, f, m2, n1))
    if result != other:
        witness = separating_generator(result, other) or separating_generator(other, result)
        raise IdentityViolationError("combined face = orface(M1,N2) & orface(M2,N1)", format_vector(witness))
    if not is_face(projective_cone(e, f), result):
        raise IdentityViolationError("combined face is a face of the projective cone")
    return result


# --- Injective face constructions ---
def _msetn_rows(functionals: Sequence[Sequence], n_cone: Cone) -> Tuple[List[tuple], List[tuple]]:
    """Rows of ``U^T phi in N`` for every ``phi``: inequalities and equations on the tensor space."""
    ineqs = [vec_tensor(phi, b) for phi in functionals for b in n_cone.ineqs]
    eqs = [vec_tensor(phi, b) for phi in functionals for b in n_cone.eqs]
    return ineqs, eqs


def _mfacen_rows(m_cone: Cone, functionals: Sequence[Sequence]) -> Tuple[List[tuple], List[tuple]]:
    """Rows of ``U psi in M`` for every ``psi``."""
    ineqs = [vec_tensor(a, psi) for a in m_cone.ineqs for psi in functionals]
    eqs = [vec_tensor(a, psi) for a in m_cone.eqs for psi in functionals]
    return ineqs, eqs


def injective_face_msetn(e: Cone, f: Cone, mprime: Sequence[Sequence], n: Face) -> Cone:
    """Tensors ``u`` in max(e, f) with ``U^T phi`` in N for all ``phi`` in ``mprime``."""
    for phi in mprime:
        _require_dual(e, phi)
    maxcone = injective_cone(e, f)
    ineqs, eqs = _msetn_rows(mprime, n.cone())
    return make_cone(maxcone.dim, ineqs=ineqs + list(maxcone.ineqs), eqs=eqs + list(maxcone.eqs))


def _dual_generators(c: Cone) -> List[IntVector]:
    return list(c.ineqs) + list(c.eqs) + [neg(v) for v in c.eqs]


def _row_cone(dim: int, rows: Tuple[List[tuple], List[tuple]]) -> Cone:
    ineqs, eqs = rows
    return make_cone(dim, ineqs=ineqs, eqs=eqs)


def _perp_of(target: Cone, face: Cone) -> Cone:
    """``target cap span(face)^perp``."""
    return intersect(target, make_cone(target.dim, ineqs=[], eqs=face.span()))


def scorface(e: Cone, f: Cone, m: Face, n: Face) -> Cone:
    maxcone = injective_cone(e, f)
    m_dia, n_dia = diamond(e, m), diamond(f, n)
    left_i, left_e = _mfacen_rows(m.cone(), n_dia.generators())
    right_i, right_e = _msetn_rows(m_dia.generators(), n.cone())
    return make_cone(
        maxcone.dim,
        ineqs=left_i + right_i + list(maxcone.ineqs),
        eqs=left_e + right_e + list(maxcone.eqs),
    )


def scandface(e: Cone, f: Cone, m: Face, n: Face) -> Cone:
    left_i, left_e = _mfacen_rows(m.cone(), _dual_generators(f))
    right_i, right_e = _msetn_rows(_dual_generators(e), n.cone())
    return make_cone(e.dim * f.dim, ineqs=left_i + right_i, eqs=left_e + right_e)


def injective_orface_andface(e: Cone, f: Cone, m: Face, n: Face, kind: str, verify: bool = True) -> Cone:
    """SCorface or SCandface of (M, N) in max(e, f).

    With ``verify`` the result is checked to be a face of max(e, f) and to equal
    the dual face of the matching projective construction on the dual faces.
    """
    if kind == SCOR:
        result = scorface(e, f, m, n)
    elif kind == SCAND:
        result = scandface(e, f, m, n)
    else:
        raise ValueError(f"Unknown injective face kind: {kind}")
    if not verify:
        return result

    maxcone = injective_cone(e, f)
    if not is_face(maxcone, result):
        raise IdentityViolationError(f"{kind} is a face of the injective cone")
    de, df = dual(e), dual(f)
    m_dia, n_dia = diamond(e, m), diamond(f, n)
    partner = andface(de, df, m_dia, n_dia) if kind == SCOR else orface(de, df, m_dia, n_dia)
    expected = _perp_of(maxcone, partner)
    if expected != result:
        witness = separating_generator(result, expected) or separating_generator(expected, result)
        raise IdentityViolationError(f"{kind}(M,N) = dual face of the projective construction on dual faces",
                                     format_vector(witness))
    return result


# --- Ideals of the injective cone ---
def injective_ideal(e: Cone, f: Cone, i: OrderIdeal, j: OrderIdeal, kind: str) -> Tuple[List[IntVector], bool]:
    """Candidate ideal of max(e, f) built from ideals I of e and J of f, and whether it is one."""
    for ideal, parent in ((i, e), (j, f)):
        if ideal.parent != parent or not is_ideal(parent, ideal.basis):
            raise NotAnIdealError(ideal.basis)
    dim = e.dim * f.dim
    if kind == TENSOR_PLUS_LINEALITY:
        basis = span_basis(_subspace_tensor(i.basis, j.basis, dim) + injective_lineality(e, f), dim)
    elif kind == SUM_FORM:
        basis = span_basis(
            _subspace_tensor(i.basis, full_basis(f.dim), dim) + _subspace_tensor(full_basis(e.dim), j.basis, dim),
            dim,
        )
    else:
        raise ValueError(f"Unknown injective ideal form: {kind}")
    return basis, is_ideal(injective_cone(e, f), basis)


def bipositive_ideal_inclusion(e: Cone, f: Cone, i: OrderIdeal, j: OrderIdeal) -> bool:
    """min(e, f) restricted to I (x) J equals min(e cap I, f cap J)."""
    dim = e.dim * f.dim
    restricted = _restrict_to_span(projective_cone(e, f), _subspace_tensor(i.basis, j.basis, dim))
    return restricted == projective_cone(_restrict_to_span(e, i.basis), _restrict_to_span(f, j.basis))


# --- Quotient maps ---
def _section(basis: Sequence[Sequence], dim: int) -> RationalMatrix:
    """Right inverse of the quotient projection: coordinates placed back on the free columns."""
    free = Reducer(basis, dim).free_columns
    return RationalMatrix.from_rows([[1 if r == col else 0 for col in free] for r in range(dim)], len(free))


def homomorphism_checks(
    t: RationalMatrix, e: Cone, g: Cone, i: Sequence[Sequence], j: Optional[Sequence[Sequence]] = None
) -> HomomorphismReport:
    """Factor ``t`` through ``E / I`` and test the quotient-map statements.

    With ``j`` (containing ``i``) the nested quotient ``(E/I)/(J/I)`` is compared
    with ``E/J`` and the ideal correspondence of ``J`` and ``J/I`` is checked.
    """
    check_dim(i, e.dim, "subspace vector")
    if t.cols != e.dim or t.rows != g.dim:
        raise DimensionMismatchError((g.dim, e.dim), (t.rows, t.cols), "linear map")
    if any(any(x != 0 for x in t.apply(v)) for v in i):
        raise PreconditionError("the subspace must lie in the kernel of the map")
    if not all(contains(g, t.apply(v)) for v in e.generators()):
        raise PreconditionError("the map must be positive")

    quotient, projection = quotient_cone(e, i)
    factor = t @ _section(i, e.dim)
    factors_through = factor @ projection == t
    factor_positive = all(contains(g, factor.apply(v)) for v in quotient.generators())
    quotient_bipositive = preimage_cone(projection, quotient) == e
    inside_lineality = subspace_contains(e.lineality, i, e.dim)

    third = correspondence = None
    if j is not None:
        check_dim(j, e.dim, "subspace vector")
        if not subspace_contains(j, i, e.dim):
            raise PreconditionError("the second subspace must contain the first")
        j_mod_i = [projection.apply(v) for v in j]
        nested, nested_projection = quotient_cone(quotient, j_mod_i)
        direct, direct_projection = quotient_cone(e, j)
        iso = direct_projection @ _section(i, e.dim) @ _section(j_mod_i, quotient.dim)
        third = (
            iso.rows == iso.cols
            and rank(iso) == iso.rows
            and image_cone(iso, nested) == direct
            and iso @ nested_projection @ projection == direct_projection
        )
        correspondence = is_proper(direct) == is_proper(nested)

    logger.debug(f"Homomorphism checks on {e}: bipositive={quotient_bipositive}, lineality={inside_lineality}")
    return HomomorphismReport(
        factors_through=factors_through,
        factor_positive=factor_positive,
        quotient_bipositive=quotient_bipositive,
        inside_lineality=inside_lineality,
        third_isomorphism=third,
        ideal_correspondence=correspondence,
    )

