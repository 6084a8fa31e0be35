# src/conetensor/exactla.py
"""Exact rational linear algebra.

Every geometric predicate in the package goes through this module, so nothing
here ever touches floating point. Scalars are :class:`fractions.Fraction`,
vectors are plain tuples of Fractions (or ints, which compare and hash equal),
and matrices are immutable :class:`RationalMatrix` values.

Subspaces are passed around as canonical bases: the non-zero rows of the
reduced row echelon form of any spanning set, each scaled to a primitive
integer vector, sorted lexicographically. Two subspaces are equal exactly when
their canonical bases compare equal.

Row reduction and null spaces are delegated to sympy; results are converted
back to Fractions at the boundary.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

import sympy

from .exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)

RationalScalar = Fraction
RationalVector = Tuple[Fraction, ...]
IntVector = Tuple[int, ...]
Scalar = Union[int, Fraction, str]


# --- Scalars and vectors ---
def to_fraction(value: Scalar) -> Fraction:
    """Parse an int, a Fraction or a ``"p/q"`` string into a Fraction."""
    if isinstance(value, bool):
        raise TypeError(f"Booleans are not rational scalars: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"Unsupported scalar type {type(value).__name__}: {value!r}")


def vector(values: Iterable[Scalar]) -> RationalVector:
    return tuple(to_fraction(v) for v in values)


def zero_vector(dim: int) -> IntVector:
    return (0,) * dim


def unit_vector(dim: int, index: int) -> IntVector:
    return tuple(1 if i == index else 0 for i in range(dim))


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def add(a: Sequence, b: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence, b: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def scale(s, a: Sequence) -> tuple:
    return tuple(s * x for x in a)


def neg(a: Sequence) -> tuple:
    return tuple(-x for x in a)


def is_zero(a: Sequence) -> bool:
    return all(x == 0 for x in a)


def primitive(v: Sequence) -> IntVector:
    """Clear denominators and divide by the gcd, keeping the orientation of ``v``."""
    fracs = [Fraction(x) for x in v]
    denominators = [f.denominator for f in fracs if f != 0]
    if not denominators:
        return tuple(0 for _ in fracs)
    lcm = reduce(lambda a, b: a * b // gcd(a, b), denominators, 1)
    ints = [int(f * lcm) for f in fracs]
    g = reduce(gcd, (abs(i) for i in ints if i != 0))
    return tuple(i // g for i in ints)


def sign_normalized(v: Sequence) -> IntVector:
    """Primitive form with the first non-zero entry positive (used for basis vectors)."""
    p = primitive(v)
    for x in p:
        if x != 0:
            return p if x > 0 else tuple(-y for y in p)
    return p


def parallel(a: Sequence, b: Sequence) -> bool:
    """True iff ``a`` is a positive multiple of ``b`` (both non-zero)."""
    if is_zero(a) or is_zero(b):
        return False
    return primitive(a) == primitive(b)


def check_dim(vectors: Iterable[Sequence], dim: int, what: str = "vector") -> None:
    for v in vectors:
        if len(v) != dim:
            raise DimensionMismatchError(dim, len(v), what)


# --- Matrices ---
@dataclass(frozen=True)
class RationalMatrix:
    """Row-major immutable matrix of Fractions."""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(self.rows * self.cols, len(self.entries), "matrix entries")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: int = -1) -> "RationalMatrix":
        """Build from a list of rows; ``cols`` is required when ``rows`` is empty."""
        if not rows:
            return cls(0, max(cols, 0), ())
        width = len(rows[0])
        if cols >= 0 and cols != width:
            raise DimensionMismatchError(cols, width, "matrix row")
        check_dim(rows, width, "matrix row")
        return cls(len(rows), width, tuple(to_fraction(x) for row in rows for x in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]], rows: int) -> "RationalMatrix":
        if not columns:
            return cls(rows, 0, ())
        check_dim(columns, rows, "matrix column")
        return cls.from_rows([[col[i] for col in columns] for i in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, tuple(Fraction(1 if i == j else 0) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        r, c = index
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> RationalVector:
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def row_list(self) -> List[RationalVector]:
        return [self.row(r) for r in range(self.rows)]

    def column(self, c: int) -> RationalVector:
        return tuple(self.entries[r * self.cols + c] for r in range(self.rows))

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols, self.rows, tuple(self.entries[r * self.cols + c] for c in range(self.cols) for r in range(self.rows))
        )

    def apply(self, v: Sequence) -> RationalVector:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise DimensionMismatchError(self.cols, len(v), "vector")
        return tuple(dot(self.row(r), v) for r in range(self.rows))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(self.cols, other.rows, "matrix product")
        cols = [other.column(c) for c in range(other.cols)]
        return RationalMatrix(
            self.rows,
            other.cols,
            tuple(dot(self.row(r), cols[c]) for r in range(self.rows) for c in range(other.cols)),
        )

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in self.row(r)) + "]" for r in range(self.rows))


# --- Row reduction ---
def _to_sympy(rows: Sequence[Sequence], cols: int) -> sympy.Matrix:
    entries = []
    for row in rows:
        for x in row:
            f = Fraction(x)
            entries.append(sympy.Rational(f.numerator, f.denominator))
    return sympy.Matrix(len(rows), cols, entries)


def _from_sympy(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def _rref_rows(rows: List[List[Fraction]], cols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """Gauss-Jordan elimination through sympy. Returns (rows, pivot columns)."""
    if not rows or cols == 0:
        return [list(r) for r in rows], []
    reduced, pivots = _to_sympy(rows, cols).rref()
    return [[_from_sympy(reduced[r, c]) for c in range(cols)] for r in range(len(rows))], list(pivots)


def rref(m: RationalMatrix) -> Tuple[RationalMatrix, List[int]]:
    """Unique reduced row echelon form of ``m`` and its pivot columns."""
    rows = [list(m.row(r)) for r in range(m.rows)]
    reduced, pivots = _rref_rows(rows, m.cols)
    return RationalMatrix(m.rows, m.cols, tuple(x for row in reduced for x in row)), pivots


def rank(m: RationalMatrix) -> int:
    return len(rref(m)[1])


def rank_of(vectors: Sequence[Sequence], dim: int) -> int:
    if not vectors:
        return 0
    return len(_rref_rows([[Fraction(x) for x in v] for v in vectors], dim)[1])


def span_basis(vectors: Iterable[Sequence], dim: int) -> List[IntVector]:
    """Canonical basis of the span of ``vectors``."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    check_dim(rows, dim, "spanning vector")
    if not rows:
        return []
    reduced, pivots = _rref_rows(rows, dim)
    return sorted(primitive(reduced[i]) for i in range(len(pivots)))


def kernel_basis(m: RationalMatrix) -> List[IntVector]:
    """Canonical basis of the null space of ``m``; empty when ``m`` is injective."""
    if m.cols == 0:
        return []
    if m.rows == 0:
        return full_basis(m.cols)
    vectors = [[_from_sympy(x) for x in column] for column in _to_sympy(m.row_list(), m.cols).nullspace()]
    return span_basis(vectors, m.cols)


def complement(basis: Sequence[Sequence], dim: int) -> List[IntVector]:
    """Annihilator of span(basis) under the standard pairing."""
    if not basis:
        return full_basis(dim)
    return kernel_basis(RationalMatrix.from_rows(basis))


def solve(m: RationalMatrix, b: Sequence) -> Union[RationalVector, None]:
    """One solution of ``m x = b`` (free variables set to zero), or None."""
    if len(b) != m.rows:
        raise DimensionMismatchError(m.rows, len(b), "right-hand side")
    rows = [list(m.row(r)) + [Fraction(b[r])] for r in range(m.rows)]
    reduced, pivots = _rref_rows(rows, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for i, p in enumerate(pivots):
        x[p] = reduced[i][m.cols]
    return tuple(x)


class Reducer:
    """Reduces vectors modulo a subspace using the RREF of its basis.

    The result has zeros in the pivot columns of the subspace, which picks one
    representative per coset and doubles as the coordinate projection onto the
    non-pivot columns.
    """

    def __init__(self, basis: Sequence[Sequence], dim: int) -> None:
        self.dim = dim
        rows = [[Fraction(x) for x in v] for v in basis]
        if rows:
            reduced, pivots = _rref_rows(rows, dim)
            self.rows = reduced[: len(pivots)]
            self.pivots = pivots
        else:
            self.rows, self.pivots = [], []
        pivot_set = set(self.pivots)
        self.free_columns = [c for c in range(dim) if c not in pivot_set]

    def reduce(self, v: Sequence) -> RationalVector:
        out = [Fraction(x) for x in v]
        for row, p in zip(self.rows, self.pivots):
            coeff = out[p]
            if coeff != 0:
                out = [x - coeff * y for x, y in zip(out, row)]
        return tuple(out)

    def projection_matrix(self) -> RationalMatrix:
        """Matrix of ``v -> reduce(v)[free_columns]``; its kernel is the subspace."""
        rows = []
        for j in self.free_columns:
            row = [Fraction(0)] * self.dim
            row[j] = Fraction(1)
            for prow, p in zip(self.rows, self.pivots):
                row[p] = -prow[j]
            rows.append(row)
        return RationalMatrix.from_rows(rows, self.dim)


# --- Subspaces ---
def subspace_sum(a: Sequence[Sequence], b: Sequence[Sequence], dim: int) -> List[IntVector]:
    return span_basis(list(a) + list(b), dim)


def subspace_intersection(a: Sequence[Sequence], b: Sequence[Sequence], dim: int) -> List[IntVector]:
    """Kernel of the stacked annihilators of ``a`` and ``b``."""
    stacked = complement(a, dim) + complement(b, dim)
    if not stacked:
        return full_basis(dim)
    return kernel_basis(RationalMatrix.from_rows(stacked, dim))


def subspace_contains(a: Sequence[Sequence], b: Sequence[Sequence], dim: int) -> bool:
    """True iff span(b) is contained in span(a)."""
    return rank_of(list(a) + list(b), dim) == rank_of(list(a), dim)


def subspace_ops(a: Sequence[Sequence], b: Sequence[Sequence], kind: str, dim: int):
    """Dispatch ``sum``, ``intersection`` or ``contains`` on two spanning sets."""
    check_dim(a, dim, "subspace vector")
    check_dim(b, dim, "subspace vector")
    if kind == "sum":
        return subspace_sum(a, b, dim)
    if kind == "intersection":
        return subspace_intersection(a, b, dim)
    if kind == "contains":
        return subspace_contains(a, b, dim)
    raise ValueError(f"Unknown subspace operation: {kind}")


def full_basis(dim: int) -> List[IntVector]:
    return span_basis([unit_vector(dim, i) for i in range(dim)], dim)
