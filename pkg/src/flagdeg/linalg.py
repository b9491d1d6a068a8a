"""Exact linear algebra over the rationals and the integers.

Subspaces are kept in reduced row echelon form with Fraction entries, so two
subspaces are equal iff their canonical bases are literally equal, and every
subspace is hashable. Integer matrices get their Smith normal form through
elementary row and column operations, with the elementary divisors returned
as a divisibility chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def _as_fractions(row: Iterable) -> list[Fraction]:
    return [Fraction(x) for x in row]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form over the rationals.

    Returns the nonzero rows and the pivot columns. The result is the unique
    canonical basis of the row space: pivots are 1, pivot columns are clear
    above and below, rows are ordered by pivot column.

    >>> rref([[2, 4], [1, 3]])
    (((Fraction(1, 1), Fraction(0, 1)), (Fraction(0, 1), Fraction(1, 1))), (0, 1))
    """
    m = [_as_fractions(r) for r in rows]
    if not m:
        return (), ()
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    basis = tuple(tuple(row) for row in m[:r])
    return basis, tuple(pivots)


def nullspace(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """Canonical basis of the right kernel {x : rows @ x = 0} in Q^ncols."""
    basis, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    vectors = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -basis[i][f]
        vectors.append(v)
    out, _ = rref(vectors)
    return out


def mat_mul_vec(matrix: Sequence[Sequence[Fraction]], vec: Sequence[Fraction]) -> Vector:
    return tuple(sum((row[j] * vec[j] for j in range(len(vec))), ZERO) for row in matrix)


def determinant(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    m = [_as_fractions(r) for r in rows]
    n = len(m)
    det = ONE
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return ZERO
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            det = -det
        det *= m[c][c]
        inv = ONE / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


@dataclass(frozen=True)
class RationalSubspace:
    """A linear subspace of Q^ambient in canonical (RREF) form."""

    ambient: int
    basis: Matrix

    def __post_init__(self):
        for row in self.basis:
            if len(row) != self.ambient:
                raise ValueError("basis row length does not match ambient dimension")

    @classmethod
    def from_vectors(cls, ambient: int, vectors: Sequence[Sequence]) -> "RationalSubspace":
        basis, _ = rref([_as_fractions(v) for v in vectors])
        return cls(ambient, basis)

    @classmethod
    def zero(cls, ambient: int) -> "RationalSubspace":
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient: int) -> "RationalSubspace":
        return cls.coordinate(ambient, range(1, ambient + 1))

    @classmethod
    def coordinate(cls, ambient: int, indices: Iterable[int]) -> "RationalSubspace":
        """Span of the standard basis vectors with the given 1-based indices."""
        rows = []
        for i in sorted(set(indices)):
            if not 1 <= i <= ambient:
                raise ValueError(f"coordinate index {i} outside 1..{ambient}")
            v = [ZERO] * ambient
            v[i - 1] = ONE
            rows.append(v)
        return cls(ambient, tuple(tuple(r) for r in rows))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains_vector(self, vec: Sequence) -> bool:
        v = _as_fractions(vec)
        for row in self.basis:
            p = next(j for j, x in enumerate(row) if x != 0)
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return all(x == 0 for x in v)

    def contains(self, other: "RationalSubspace") -> bool:
        return all(self.contains_vector(row) for row in other.basis)

    def sum_with(self, other: "RationalSubspace") -> "RationalSubspace":
        return RationalSubspace.from_vectors(self.ambient, list(self.basis) + list(other.basis))

    def annihilator(self) -> "RationalSubspace":
        """Vectors dot-orthogonal to this subspace (the row-space kernel)."""
        return RationalSubspace(self.ambient, nullspace(self.basis, self.ambient))

    def intersect(self, other: "RationalSubspace") -> "RationalSubspace":
        rows = list(self.annihilator().basis) + list(other.annihilator().basis)
        return RationalSubspace(self.ambient, nullspace(rows, self.ambient))

    def apply(self, matrix: Sequence[Sequence]) -> "RationalSubspace":
        """Image under the linear map given by a (codomain x ambient) matrix."""
        mat = [_as_fractions(r) for r in matrix]
        codomain = len(mat)
        images = [mat_mul_vec(mat, row) for row in self.basis]
        return RationalSubspace.from_vectors(codomain, images)

    def preimage(self, matrix: Sequence[Sequence]) -> "RationalSubspace":
        """Preimage under the map Q^domain -> Q^ambient given by the matrix.

        The matrix has `ambient` rows; the result lives in Q^domain where
        domain is the column count.
        """
        mat = [_as_fractions(r) for r in matrix]
        if len(mat) != self.ambient:
            raise ValueError("matrix codomain does not match subspace ambient")
        domain = len(mat[0]) if mat else 0
        ann = self.annihilator().basis
        # rows of (A @ M) where A annihilates the subspace
        rows = []
        for a in ann:
            rows.append(tuple(sum((a[i] * mat[i][j] for i in range(self.ambient)), ZERO)
                              for j in range(domain)))
        return RationalSubspace(domain, nullspace(rows, domain))

    def pad(self, ambient: int) -> "RationalSubspace":
        """Embed into a larger space by appending zero coordinates."""
        if ambient < self.ambient:
            raise ValueError("cannot pad to a smaller ambient dimension")
        extra = (ZERO,) * (ambient - self.ambient)
        return RationalSubspace(ambient, tuple(row + extra for row in self.basis))

    def coordinate_support(self) -> tuple[int, ...] | None:
        """1-based indices if this is a span of standard basis vectors, else None."""
        indices = []
        for row in self.basis:
            support = [j for j, x in enumerate(row) if x != 0]
            if len(support) != 1 or row[support[0]] != 1:
                return None
            indices.append(support[0] + 1)
        return tuple(sorted(indices))

    def right_pivot_columns(self) -> tuple[int, ...]:
        """1-based rightmost-pivot columns after eliminating from the right.

        These are the positions where dim(U intersect <e_1..e_k>) jumps as k
        grows, which is what pins down the Schubert cell of a flag member.
        """
        reversed_rows = [tuple(reversed(row)) for row in self.basis]
        basis, pivots = rref(reversed_rows)
        return tuple(sorted(self.ambient - p for p in pivots))


def smith_normal_form(entries: Sequence[Sequence[int]]) -> "SmithNormalFormResult":
    """Smith normal form of an integer matrix via elementary operations.

    Only the invariants are returned: the elementary divisors (nonnegative,
    each dividing the next) and the rank.
    """
    m = [list(map(int, row)) for row in entries]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    divisors: list[int] = []
    s = 0
    while s < min(nrows, ncols):
        # locate a smallest nonzero entry in the trailing block
        best = None
        for i in range(s, nrows):
            for j in range(s, ncols):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        m[s], m[i] = m[i], m[s]
        for row in m:
            row[s], row[j] = row[j], row[s]
        if m[s][s] < 0:
            m[s] = [-x for x in m[s]]
        # clear the edging; restart whenever a division leaves a remainder
        while True:
            dirty = False
            for i in range(s + 1, nrows):
                if m[i][s] != 0:
                    q = m[i][s] // m[s][s]
                    m[i] = [a - q * b for a, b in zip(m[i], m[s])]
                    if m[i][s] != 0:
                        m[s], m[i] = m[i], m[s]
                        dirty = True
            for j in range(s + 1, ncols):
                if m[s][j] != 0:
                    q = m[s][j] // m[s][s]
                    for row in m:
                        row[j] -= q * row[s]
                    if m[s][j] != 0:
                        for row in m:
                            row[s], row[j] = row[j], row[s]
                        dirty = True
            if m[s][s] < 0:
                m[s] = [-x for x in m[s]]
            if not dirty:
                break
        # enforce divisibility of the remaining block by the pivot
        offender = None
        for i in range(s + 1, nrows):
            for j in range(s + 1, ncols):
                if m[i][j] % m[s][s] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            m[s] = [a + b for a, b in zip(m[s], m[offender])]
            continue
        divisors.append(m[s][s])
        s += 1
    return SmithNormalFormResult(divisors=tuple(divisors), rank=len(divisors))


@dataclass(frozen=True)
class SmithNormalFormResult:
    divisors: tuple[int, ...]
    rank: int

    def __post_init__(self):
        for a, b in zip(self.divisors, self.divisors[1:]):
            if a <= 0 or b % a != 0:
                raise ValueError("elementary divisors must form a divisibility chain")

    @property
    def all_units(self) -> bool:
        return all(d == 1 for d in self.divisors)


@dataclass(frozen=True)
class IntegerMatrix:
    """A dense integer matrix with explicit dimensions."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry grid does not match declared dimensions")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntegerMatrix":
        cols = len(columns)
        rows = len(columns[0]) if columns else 0
        entries = tuple(tuple(int(columns[j][i]) for j in range(cols)) for i in range(rows))
        return cls(rows=rows, cols=cols, entries=entries)

    def smith_normal_form(self) -> SmithNormalFormResult:
        return smith_normal_form(self.entries)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]
