"""Exact integer/rational matrix kernel.

Everything here is arbitrary-precision and tolerance-free: rank and
determinant use fraction-free (Bareiss) elimination on Python ints, the
nullspace basis comes from a rational RREF and is returned in a canonical
integer form, and the characteristic polynomial uses the Faddeev-LeVerrier
recurrence (whose divisions are exact for integer matrices).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class IntMatrix:
    """Immutable matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in data)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError("cols does not match row width")
            cols = width
        else:
            cols = 0 if cols is None else cols
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", rows)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([(0,) * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> int:
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.data), cols=self.rows) if self.data else IntMatrix(
            [() for _ in range(self.cols)], cols=self.rows
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        bt = list(zip(*other.data)) if other.data else [()] * other.cols
        out = [
            tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
            for row in self.data
        ]
        return IntMatrix(out, cols=other.cols)

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class RatVector:
    """Vector of exact rationals (Fraction keeps entries in lowest terms)."""

    entries: tuple

    def __init__(self, entries):
        object.__setattr__(
            self, "entries", tuple(Fraction(e) for e in entries)
        )

    @property
    def dim(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)


@dataclass(frozen=True)
class KernelBasis:
    """Canonical integer basis of a nullspace.

    Vectors are the RREF free-variable parametrization, each scaled to a
    primitive integer vector (entry gcd 1) whose first non-zero entry is
    positive, ordered by free-column index.  Equal matrices always produce
    identical bases, so nullspace equality is plain tuple equality.
    """

    ambient: int
    vectors: tuple

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def supports(self) -> set:
        """Union of the supports of the basis vectors."""
        out = set()
        for vec in self.vectors:
            out.update(i for i, x in enumerate(vec) if x != 0)
        return out


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial det(tI - M), coefficients descending."""

    coefficients: tuple

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def constant_term(self) -> int:
        return self.coefficients[-1]


def _echelon_int(rows_data: list[list[int]], n_rows: int, n_cols: int):
    """In-place fraction-free row echelon; returns (rank, sign, last_pivot).

    Pivot choice is the first row with a non-zero entry in the current
    column; Bareiss one-step division keeps every intermediate entry an
    integer (a minor of the input).
    """
    rank = 0
    sign = 1
    prev = 1
    for col in range(n_cols):
        pivot_row = None
        for i in range(rank, n_rows):
            if rows_data[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != rank:
            rows_data[rank], rows_data[pivot_row] = (
                rows_data[pivot_row],
                rows_data[rank],
            )
            sign = -sign
        piv = rows_data[rank][col]
        row_r = rows_data[rank]
        for i in range(rank + 1, n_rows):
            factor = rows_data[i][col]
            row_i = rows_data[i]
            for j in range(col + 1, n_cols):
                row_i[j] = (piv * row_i[j] - factor * row_r[j]) // prev
            row_i[col] = 0
        prev = piv
        rank += 1
    return rank, sign, prev


def rank(m: IntMatrix) -> int:
    """Exact rank over the rationals."""
    data = [list(r) for r in m.data]
    r, _, _ = _echelon_int(data, m.rows, m.cols)
    return r


def det(m: IntMatrix) -> int:
    """Exact determinant of a square matrix (Bareiss)."""
    if m.rows != m.cols:
        raise ValueError("determinant requires a square matrix")
    data = [list(r) for r in m.data]
    r, sign, last = _echelon_int(data, m.rows, m.cols)
    if r < m.rows:
        return 0
    return sign * last


def is_nonsingular(m: IntMatrix) -> bool:
    return det(m) != 0


def _rref_fractions(m: IntMatrix):
    """Rational reduced row echelon form; returns (rows, pivot_columns)."""
    data = [[Fraction(x) for x in row] for row in m.data]
    pivots = []
    r = 0
    for col in range(m.cols):
        pivot_row = None
        for i in range(r, m.rows):
            if data[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        data[r], data[pivot_row] = data[pivot_row], data[r]
        inv = data[r][col]
        data[r] = [x / inv for x in data[r]]
        for i in range(m.rows):
            if i != r and data[i][col] != 0:
                factor = data[i][col]
                data[i] = [a - factor * b for a, b in zip(data[i], data[r])]
        pivots.append(col)
        r += 1
    return data, pivots


def _primitive_int_vector(fracs) -> tuple:
    """Scale a non-zero rational vector to a primitive integer vector
    whose first non-zero entry is positive."""
    lcm = 1
    for f in fracs:
        d = f.denominator
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(f * lcm) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


def nullspace_basis(m: IntMatrix) -> KernelBasis:
    """Canonical basis of {x : m @ x = 0}; empty iff m has full column rank."""
    rref, pivots = _rref_fractions(m)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    vectors = []
    for free in free_cols:
        vec = [Fraction(0)] * m.cols
        vec[free] = Fraction(1)
        for i, piv_col in enumerate(pivots):
            vec[piv_col] = -rref[i][free]
        vectors.append(_primitive_int_vector(vec))
    return KernelBasis(ambient=m.cols, vectors=tuple(vectors))


def char_poly(m: IntMatrix) -> CharPoly:
    """Characteristic polynomial det(tI - m) with exact integer coefficients.

    Faddeev-LeVerrier: the trace at step k is always divisible by k for an
    integer matrix, so the whole run stays in the integers.
    """
    if m.rows != m.cols:
        raise ValueError("characteristic polynomial requires a square matrix")
    n = m.rows
    coeffs = [1]
    a = [list(r) for r in m.data]
    work = [row[:] for row in a]
    for k in range(1, n + 1):
        trace = sum(work[i][i] for i in range(n))
        if trace % k != 0:
            raise ArithmeticError("non-integer trace in exact recurrence")
        c = -(trace // k)
        coeffs.append(c)
        if k == n:
            break
        for i in range(n):
            work[i][i] += c
        work = [
            [sum(a[i][t] * work[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
    return CharPoly(coefficients=tuple(coeffs))


def mat_vec(m: IntMatrix, v: RatVector) -> RatVector:
    """Exact matrix-vector product."""
    if m.cols != v.dim:
        raise ValueError("dimension mismatch")
    return RatVector(
        sum(a * x for a, x in zip(row, v.entries)) for row in m.data
    )
