# src/conetensor/tensorcone.py
"""
Tensor products of polyhedral cones.

Coordinates on ``R^m (x) R^n`` are fixed once: the pair ``(i, j)`` (0-based)
lives at index ``i * n + j``. ``vec_tensor``, ``kron_map``, the reshape used by
``reshape_rank`` and the JSON documents all use this order.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .cone import (
    Cone,
    contains,
    image_cone,
    is_proper,
    is_subset,
    make_cone,
    preimage_cone,
    separating_generator,
)
from .exactla import (
    IntVector,
    RationalMatrix,
    dot,
    full_basis,
    is_zero,
    neg,
    primitive,
    rank,
    subspace_contains,
    subspace_sum,
)
from .exceptions import DimensionMismatchError, PreconditionError
from .models import RankOneVerdict

logger = logging.getLogger(__name__)

PROJECTIVE = "projective"
INJECTIVE = "injective"
TENSOR_KINDS = (PROJECTIVE, INJECTIVE)

# Reason tags reported by rank_one_classify, in evaluation order.
CLAUSE_LEFT_LINEALITY = "left-lineality"
CLAUSE_RIGHT_LINEALITY = "right-lineality"
CLAUSE_POSITIVE_PAIR = "positive-pair"
CLAUSE_NEGATED_PAIR = "negated-pair"
CLAUSE_NONE = "none"


@dataclass(frozen=True)
class TensorSpace:
    left_dim: int
    right_dim: int

    @property
    def total_dim(self) -> int:
        return self.left_dim * self.right_dim

    def index(self, i: int, j: int) -> int:
        return i * self.right_dim + j

    def reshape(self, u: Sequence) -> RationalMatrix:
        """The ``left_dim x right_dim`` matrix whose (i, j) entry is ``u[index(i, j)]``."""
        if len(u) != self.total_dim:
            raise DimensionMismatchError(self.total_dim, len(u), "tensor")
        return RationalMatrix.from_rows(
            [[u[self.index(i, j)] for j in range(self.right_dim)] for i in range(self.left_dim)],
            self.right_dim,
        )


def vec_tensor(x: Sequence, y: Sequence) -> tuple:
    return tuple(a * b for a in x for b in y)


def kron_map(t: RationalMatrix, s: RationalMatrix) -> RationalMatrix:
    """Kronecker product, so that ``kron_map(t, s) @ (x (x) y) == (t x) (x) (s y)``."""
    rows = []
    for i in range(t.rows):
        for k in range(s.rows):
            rows.append([t[i, j] * s[k, l] for j in range(t.cols) for l in range(s.cols)])
    return RationalMatrix.from_rows(rows, t.cols * s.cols)


def reshape_rank(u: Sequence, space: TensorSpace) -> int:
    return rank(space.reshape(u))


def _tensor_span(left: Sequence[Sequence], right: Sequence[Sequence]) -> List[IntVector]:
    return [primitive(vec_tensor(a, b)) for a in left for b in right]


# --- Tensor cones ---
def projective_cone(e: Cone, f: Cone) -> Cone:
    """Cone generated by elementary tensors of positive vectors (the min-wedge)."""
    e_gens = list(e.rays) + list(e.lineality)
    f_gens = list(f.rays) + list(f.lineality)
    rays = _tensor_span(e.rays, f.rays)
    lineality = _tensor_span(e.lineality, f_gens) + _tensor_span(e_gens, f.lineality)
    result = make_cone(e.dim * f.dim, rays=rays, lineality=lineality, name=_label("min", e, f))
    logger.debug(f"Projective cone {result}")
    return result


def injective_cone(e: Cone, f: Cone) -> Cone:
    """Tensors pairing non-negatively with every elementary tensor of dual-positive functionals (the max-wedge)."""
    ineqs = _tensor_span(e.ineqs, f.ineqs)
    eqs = _tensor_span(e.eqs, list(f.ineqs) + list(f.eqs)) + _tensor_span(list(e.ineqs) + list(e.eqs), f.eqs)
    result = make_cone(e.dim * f.dim, ineqs=ineqs, eqs=eqs, name=_label("max", e, f))
    logger.debug(f"Injective cone {result}")
    return result


def tensor_cone(e: Cone, f: Cone, kind: str) -> Cone:
    if kind == PROJECTIVE:
        return projective_cone(e, f)
    if kind == INJECTIVE:
        return injective_cone(e, f)
    raise ValueError(f"Unknown tensor kind: {kind}")


def _label(prefix: str, e: Cone, f: Cone) -> str:
    if e.name and f.name:
        return f"{prefix}({e.name},{f.name})"
    return ""


def projective_lineality(e: Cone, f: Cone) -> List[IntVector]:
    """(lin(e) (x) span(f)) + (span(e) (x) lin(f)), evaluated directly."""
    dim = e.dim * f.dim
    return subspace_sum(_tensor_span(e.lineality, f.span()), _tensor_span(e.span(), f.lineality), dim)


def injective_lineality(e: Cone, f: Cone) -> List[IntVector]:
    """(lin(e) (x) R^n) + (R^m (x) lin(f))."""
    dim = e.dim * f.dim
    return subspace_sum(
        _tensor_span(e.lineality, full_basis(f.dim)), _tensor_span(full_basis(e.dim), f.lineality), dim
    )


def is_reasonable(k: Cone, e: Cone, f: Cone) -> bool:
    """True iff min(e, f) <= k <= max(e, f)."""
    if k.dim != e.dim * f.dim:
        raise DimensionMismatchError(e.dim * f.dim, k.dim, "tensor cone")
    return is_subset(projective_cone(e, f), k) and is_subset(k, injective_cone(e, f))


def rank_one_classify(
    u_left: Sequence, u_right: Sequence, e: Cone, f: Cone, which: str
) -> RankOneVerdict:
    """Decide whether ``u_left (x) u_right`` lies in the chosen tensor cone of (e, f).

    Clauses are tried in order: left factor in the lineality space, right factor
    in the lineality space, both factors positive, both factors negative.
    """
    if len(u_left) != e.dim:
        raise DimensionMismatchError(e.dim, len(u_left), "left factor")
    if len(u_right) != f.dim:
        raise DimensionMismatchError(f.dim, len(u_right), "right factor")
    if is_zero(u_left) or is_zero(u_right):
        raise PreconditionError("rank-one classification needs two non-zero factors")
    if which not in TENSOR_KINDS:
        raise ValueError(f"Unknown tensor kind: {which}")

    x_lin = subspace_contains(e.lineality, [u_left], e.dim)
    y_lin = subspace_contains(f.lineality, [u_right], f.dim)
    if which == PROJECTIVE:
        left = x_lin and subspace_contains(f.span(), [u_right], f.dim)
        right = y_lin and subspace_contains(e.span(), [u_left], e.dim)
    else:
        left, right = x_lin, y_lin

    if left:
        clause = CLAUSE_LEFT_LINEALITY
    elif right:
        clause = CLAUSE_RIGHT_LINEALITY
    elif contains(e, u_left) and contains(f, u_right):
        clause = CLAUSE_POSITIVE_PAIR
    elif contains(e, tuple(-x for x in u_left)) and contains(f, tuple(-y for y in u_right)):
        clause = CLAUSE_NEGATED_PAIR
    else:
        clause = CLAUSE_NONE
    return RankOneVerdict(member=clause != CLAUSE_NONE, clause=clause, kind=which)


def rank_one_dual_clause(u_left: Sequence, u_right: Sequence, e: Cone, f: Cone) -> bool:
    """True iff ``phi(u_left) * psi(u_right) >= 0`` for every phi in dual(e) and psi in dual(f).

    Checked on generators of the dual cones; equivalent to membership in max(e, f).
    """
    if len(u_left) != e.dim:
        raise DimensionMismatchError(e.dim, len(u_left), "left factor")
    if len(u_right) != f.dim:
        raise DimensionMismatchError(f.dim, len(u_right), "right factor")
    left = [dot(a, u_left) for a in list(e.ineqs) + list(e.eqs) + [neg(v) for v in e.eqs]]
    right = [dot(b, u_right) for b in list(f.ineqs) + list(f.eqs) + [neg(v) for v in f.eqs]]
    return all(s * t >= 0 for s in left for t in right)


def rank_one_agreement(u_left: Sequence, u_right: Sequence, cones: Sequence[Cone]) -> bool:
    """True iff ``u_left (x) u_right`` is in all of ``cones`` or in none of them.

    For generating e and f every reasonable cone of (e, f) decides rank-one tensors the same way.
    """
    u = vec_tensor(u_left, u_right)
    return len({contains(k, u) for k in cones}) <= 1


# --- Positive maps ---
def _check_map(t: RationalMatrix, e: Cone, g: Cone) -> None:
    if t.cols != e.dim or t.rows != g.dim:
        raise DimensionMismatchError((g.dim, e.dim), (t.rows, t.cols), "linear map")


def is_positive_map(t: RationalMatrix, e: Cone, g: Cone) -> bool:
    """True iff ``T[e]`` is contained in ``g``."""
    _check_map(t, e, g)
    return all(contains(g, t.apply(v)) for v in e.generators())


def pushforward_check(t: RationalMatrix, e: Cone, g: Cone) -> bool:
    """True iff ``T[e] == g``."""
    _check_map(t, e, g)
    return image_cone(t, e) == g


def is_bipositive(t: RationalMatrix, e: Cone, g: Cone) -> bool:
    """True iff ``T^-1[g] == e`` (a pullback)."""
    _check_map(t, e, g)
    return preimage_cone(t, g) == e


def is_order_retract(p: RationalMatrix, e: Cone) -> bool:
    """True iff ``p`` is an idempotent positive map of ``e`` into itself."""
    if p.rows != p.cols:
        raise DimensionMismatchError(p.rows, p.cols, "projection")
    return p @ p == p and is_positive_map(p, e, e)


def separating_witness(a: Cone, b: Cone) -> Optional[IntVector]:
    """A generator of ``a`` outside ``b``; None when ``a`` is a subset of ``b``."""
    return separating_generator(a, b)


def rank_one_rays(c: Cone, space: TensorSpace) -> Tuple[List[IntVector], List[IntVector]]:
    """Split the rays of a tensor cone into rank-one and higher-rank reshapes."""
    low, high = [], []
    for r in c.rays:
        (low if reshape_rank(r, space) == 1 else high).append(r)
    return low, high


def tensor_rays(e: Cone, f: Cone) -> List[IntVector]:
    """Canonical set of ``a (x) b`` over rays of a proper pair (primitive, sorted)."""
    return sorted(set(_tensor_span(e.rays, f.rays)))


def properness_expected(e: Cone, f: Cone, kind: str) -> bool:
    """Closed-form prediction of whether the tensor cone of the given kind is proper."""
    if kind == PROJECTIVE:
        trivial = (not e.rays and not e.lineality) or (not f.rays and not f.lineality)
    else:
        trivial = e.dim == 0 or f.dim == 0
    return trivial or (is_proper(e) and is_proper(f))

