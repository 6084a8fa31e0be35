# src/conetensor/oracle.py
"""
Slow, exact reference checks that share no algorithm with the main paths.

Membership goes through Fourier-Motzkin elimination, faces through the
segment definition, and extremality through an exact rational simplex.
Nothing in the library calls into this module; only the verification suites do.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Set, Tuple

from .cone import Cone, contains
from .exactla import add, dot, is_zero, parallel, scale
from .exceptions import NotASubsetError, NotInConeError, PreconditionError

logger = logging.getLogger(__name__)

FACE_GRID = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


# --- Elimination kept apart from exactla ---
def _gauss_jordan(rows: List[List[Fraction]], cols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """Plain Gauss-Jordan on Fraction rows. Returns (reduced rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots: List[int] = []
    top = 0
    for c in range(cols):
        pick = next((r for r in range(top, len(rows)) if rows[r][c] != 0), None)
        if pick is None:
            continue
        rows[top], rows[pick] = rows[pick], rows[top]
        lead = rows[top][c]
        rows[top] = [x / lead for x in rows[top]]
        for r in range(len(rows)):
            if r != top and rows[r][c] != 0:
                factor = rows[r][c]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[top])]
        pivots.append(c)
        top += 1
        if top == len(rows):
            break
    return rows, pivots


# --- Fourier-Motzkin membership ---
@dataclass(frozen=True)
class _Row:
    """``coeffs . lam <= rhs`` with the set of original rows it was combined from."""

    coeffs: Tuple[Fraction, ...]
    rhs: Fraction
    history: frozenset


def membership_fm(generators: Sequence[Sequence], x: Sequence, lineality: Sequence[Sequence] = ()) -> bool:
    """Decide whether ``x`` is a non-negative combination of ``generators`` (lineality entered with both signs)."""
    gens = [tuple(Fraction(v) for v in g) for g in generators]
    gens += [tuple(Fraction(v) for v in l) for l in lineality]
    gens += [tuple(-Fraction(v) for v in l) for l in lineality]
    dim = len(x)
    if not gens:
        return is_zero(x)
    k = len(gens)

    # Equalities sum_i lam_i g_i = x, solved for pivot variables
    augmented = [[gens[i][c] for i in range(k)] + [Fraction(x[c])] for c in range(dim)]
    reduced, pivots = _gauss_jordan(augmented, k + 1)
    if pivots and pivots[-1] == k:
        return False
    pivot_set = set(pivots)
    free = [i for i in range(k) if i not in pivot_set]

    # lam_p = b_p - sum_f a_pf lam_f >= 0  becomes  sum_f a_pf lam_f <= b_p; lam_f >= 0 becomes -lam_f <= 0
    rows: List[_Row] = []
    for r, p in enumerate(pivots):
        rows.append(_Row(tuple(reduced[r][f] for f in free), reduced[r][k], frozenset([len(rows)])))
    for pos in range(len(free)):
        rows.append(_Row(tuple(Fraction(-1 if q == pos else 0) for q in range(len(free))), Fraction(0),
                         frozenset([len(rows)])))

    for eliminated, var in enumerate(range(len(free))):
        upper = [r for r in rows if r.coeffs[var] > 0]
        lower = [r for r in rows if r.coeffs[var] < 0]
        kept = [r for r in rows if r.coeffs[var] == 0]
        seen: Set[Tuple[Tuple[Fraction, ...], Fraction]] = {(r.coeffs, r.rhs) for r in kept}
        for u in upper:
            for lo in lower:
                history = u.history | lo.history
                # Chernikov: a combination of more than (eliminated + 2) originals is redundant
                if len(history) > eliminated + 2:
                    continue
                cu, cl = u.coeffs[var], -lo.coeffs[var]
                coeffs = tuple(cl * a + cu * b for a, b in zip(u.coeffs, lo.coeffs))
                rhs = cl * u.rhs + cu * lo.rhs
                key = (coeffs, rhs)
                if key in seen:
                    continue
                seen.add(key)
                kept.append(_Row(coeffs, rhs, history))
        rows = kept
        logger.debug(f"Fourier-Motzkin step {eliminated + 1}/{len(free)}: {len(rows)} rows")

    return all(r.rhs >= 0 for r in rows)


def membership_fm_cone(c: Cone, x: Sequence) -> bool:
    return membership_fm(c.rays, x, c.lineality)


# --- Segment-based face test ---
def face_definitional(c: Cone, candidate: Cone) -> bool:
    """Face test from the segment definition, over the generators of ``c``.

    A pair of generators whose grid combination lands in the candidate must
    have both ends in it. A generator of ``c`` outside the candidate that can be
    split off a relative-interior point of the candidate also refutes the face.
    """
    for g in candidate.generators():
        if not contains(c, g):
            raise NotASubsetError(g)
    gens = c.generators()
    inside = [contains(candidate, g) for g in gens]
    for i, g in enumerate(gens):
        for j in range(i + 1, len(gens)):
            if inside[i] and inside[j]:
                continue
            h = gens[j]
            for t in FACE_GRID:
                point = add(scale(t, g), scale(1 - t, h))
                if contains(candidate, point):
                    logger.debug(f"Segment witness {g} / {h} at {t}")
                    return False

    p = tuple(sum(col) for col in zip(*candidate.rays)) if candidate.rays else tuple(0 for _ in range(c.dim))
    for g, ok in zip(gens, inside):
        if ok:
            continue
        # p - s*g stays in c for small s > 0 exactly when every inequality active on g is slack at p
        if all(dot(a, p) > 0 for a in c.ineqs if dot(a, g) > 0):
            logger.debug(f"Relative-interior witness {g}")
            return False
    return True


# --- Exact simplex ---
def _pivot(tableau: List[List[Fraction]], basis: List[int], row: int, col: int) -> None:
    pivot_row = tableau[row]
    factor = pivot_row[col]
    if factor != 1:
        tableau[row] = pivot_row = [v / factor for v in pivot_row]
    for r in range(len(tableau)):
        if r != row and tableau[r][col] != 0:
            f = tableau[r][col]
            tableau[r] = [a - f * b for a, b in zip(tableau[r], pivot_row)]
    basis[row] = col


def _optimize(tableau: List[List[Fraction]], basis: List[int], cost: Sequence[Fraction], allowed: Sequence[int]) -> str:
    """Maximize ``cost . x`` over the tableau in place with Bland's rule."""
    while True:
        entering = None
        for j in allowed:
            if j in basis:
                continue
            reduced = cost[j] - sum(cost[basis[i]] * tableau[i][j] for i in range(len(tableau)))
            if reduced > 0:
                entering = j
                break
        if entering is None:
            return OPTIMAL
        best = None
        for i, row in enumerate(tableau):
            if row[entering] > 0:
                ratio = row[-1] / row[entering]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return UNBOUNDED
        _pivot(tableau, basis, best[1], entering)


def lp_max_coordinate(columns: Sequence[Sequence], b: Sequence, target: int) -> Tuple[str, Optional[Fraction]]:
    """Maximize ``lam[target]`` subject to ``sum_i lam_i columns[i] = b``, ``lam >= 0``.

    Returns ``(status, value)`` where status is optimal, unbounded or infeasible.
    """
    k = len(columns)
    m = len(b)
    tableau = []
    for r in range(m):
        row = [Fraction(columns[i][r]) for i in range(k)] + [Fraction(0)] * m + [Fraction(b[r])]
        if row[-1] < 0:
            row = [-v for v in row]
        row[k + r] = Fraction(1)
        tableau.append(row)
    basis = [k + r for r in range(m)]

    phase_one = [Fraction(0)] * k + [Fraction(-1)] * m
    _optimize(tableau, basis, phase_one, range(k + m))
    if any(tableau[i][-1] != 0 for i in range(m) if basis[i] >= k):
        return INFEASIBLE, None

    # Drive zero-valued artificials out of the basis; rows with no real entry are redundant
    for i in reversed(range(len(tableau))):
        if basis[i] < k:
            continue
        col = next((j for j in range(k) if tableau[i][j] != 0), None)
        if col is None:
            del tableau[i]
            del basis[i]
        else:
            _pivot(tableau, basis, i, col)

    cost = [Fraction(1 if j == target else 0) for j in range(k + m)]
    status = _optimize(tableau, basis, cost, range(k))
    if status == UNBOUNDED:
        return UNBOUNDED, None
    value = next((tableau[i][-1] for i in range(len(tableau)) if basis[i] == target), Fraction(0))
    return OPTIMAL, value


def extremality_definitional(c: Cone, x: Sequence) -> bool:
    """True iff every non-negative decomposition of ``x`` into generators uses only multiples of ``x``."""
    if is_zero(x):
        raise PreconditionError("extremality is defined for non-zero vectors")
    if not contains(c, x):
        raise NotInConeError(x, "cone")
    gens = c.generators()
    for idx, g in enumerate(gens):
        if parallel(g, x):
            continue
        status, value = lp_max_coordinate(gens, x, idx)
        if status == INFEASIBLE:
            raise NotInConeError(x, "cone")
        if status == UNBOUNDED or (value is not None and value > 0):
            return False
    return True

