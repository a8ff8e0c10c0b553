"""Dense exact linear algebra over small finite fields.

Vectors and matrices are immutable value types holding element codes (ints)
plus their FieldCtx. Everything here is plain Gauss-Jordan elimination; the
dimensions this package works at (r <= ~20, q <= 256) never justify more.

For F_2 there is an additional bit-packed representation (one int per
vector, XOR arithmetic) used by the hot enumeration loops; gf2_rank must
agree with the generic rank on every input, which the test suite checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DimensionMismatchError, FieldMismatchError
from .gf import FieldCtx


@dataclass(frozen=True)
class FqVector:
    """Immutable vector over a fixed field context."""

    ctx: FieldCtx
    coords: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        q = self.ctx.q
        for c in self.coords:
            if not 0 <= c < q:
                raise ValueError(f"coordinate {c} out of range for {self.ctx!r}")
        if len(self.coords) < 1:
            raise DimensionMismatchError("vectors must have dimension >= 1")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check_compat(self, other: "FqVector") -> None:
        if self.ctx != other.ctx:
            raise FieldMismatchError(f"{self.ctx!r} vs {other.ctx!r}")
        if len(self.coords) != len(other.coords):
            raise DimensionMismatchError(
                f"dimension {len(self.coords)} vs {len(other.coords)}"
            )

    def __add__(self, other: "FqVector") -> "FqVector":
        self._check_compat(other)
        add = self.ctx._add
        return FqVector(self.ctx, tuple(add[a][b] for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "FqVector") -> "FqVector":
        self._check_compat(other)
        ctx = self.ctx
        return FqVector(ctx, tuple(ctx.sub(a, b) for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "FqVector":
        neg = self.ctx._neg
        return FqVector(self.ctx, tuple(neg[a] for a in self.coords))

    def scale(self, alpha: int) -> "FqVector":
        mul = self.ctx._mul
        return FqVector(self.ctx, tuple(mul[alpha][a] for a in self.coords))

    def encode(self) -> int:
        """Canonical integer encoding: base-q digits, first coordinate most
        significant, so numeric order equals lexicographic order."""
        code = 0
        q = self.ctx.q
        for c in self.coords:
            code = code * q + c
        return code

    def __repr__(self) -> str:
        return f"FqVector(q={self.ctx.q}, {self.coords})"


def zero_vector(ctx: FieldCtx, r: int) -> FqVector:
    return FqVector(ctx, (0,) * r)


def unit_vector(ctx: FieldCtx, r: int, i: int) -> FqVector:
    coords = [0] * r
    coords[i] = 1
    return FqVector(ctx, tuple(coords))


def decode_vector(ctx: FieldCtx, r: int, code: int) -> FqVector:
    coords = [0] * r
    q = ctx.q
    for i in range(r - 1, -1, -1):
        coords[i] = code % q
        code //= q
    return FqVector(ctx, tuple(coords))


@dataclass(frozen=True)
class FqMatrix:
    """Immutable row-major matrix over a fixed field context."""

    ctx: FieldCtx
    rows: int
    cols: int
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        if len(self.entries) != self.rows:
            raise DimensionMismatchError(
                f"expected {self.rows} rows, got {len(self.entries)}"
            )
        q = self.ctx.q
        for row in self.entries:
            if len(row) != self.cols:
                raise DimensionMismatchError(
                    f"expected {self.cols} columns, got {len(row)}"
                )
            for c in row:
                if not 0 <= c < q:
                    raise ValueError(f"entry {c} out of range for {self.ctx!r}")

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "FqMatrix":
        rows = [tuple(r) for r in rows]
        if cols is None:
            if not rows:
                raise DimensionMismatchError("cannot infer column count of empty matrix")
            cols = len(rows[0])
        return cls(ctx, len(rows), cols, tuple(rows))

    @classmethod
    def from_row_vectors(cls, vectors: Sequence[FqVector], ctx: Optional[FieldCtx] = None,
                         cols: Optional[int] = None) -> "FqMatrix":
        if not vectors:
            if ctx is None or cols is None:
                raise DimensionMismatchError("empty matrix needs explicit ctx and cols")
            return cls(ctx, 0, cols, ())
        ctx = vectors[0].ctx
        return cls.from_rows(ctx, [v.coords for v in vectors])

    @classmethod
    def from_columns(cls, vectors: Sequence[FqVector]) -> "FqMatrix":
        if not vectors:
            raise DimensionMismatchError("no columns given")
        ctx = vectors[0].ctx
        r = vectors[0].dim
        rows = [tuple(v.coords[i] for v in vectors) for i in range(r)]
        return cls(ctx, r, len(vectors), tuple(rows))

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "FqMatrix":
        return cls(ctx, n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def row(self, i: int) -> FqVector:
        return FqVector(self.ctx, self.entries[i])

    def row_vectors(self) -> List[FqVector]:
        return [FqVector(self.ctx, r) for r in self.entries]

    def column(self, j: int) -> FqVector:
        return FqVector(self.ctx, tuple(r[j] for r in self.entries))

    def column_vectors(self) -> List[FqVector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "FqMatrix":
        return FqMatrix(
            self.ctx,
            self.cols,
            self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def matmul(self, other: "FqMatrix") -> "FqMatrix":
        if self.ctx != other.ctx:
            raise FieldMismatchError(f"{self.ctx!r} vs {other.ctx!r}")
        if self.cols != other.rows:
            raise DimensionMismatchError(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ctx = self.ctx
        add, mul = ctx._add, ctx._mul
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = 0
                for t in range(self.cols):
                    acc = add[acc][mul[self.entries[i][t]][other.entries[t][j]]]
                row.append(acc)
            out.append(tuple(row))
        return FqMatrix(ctx, self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return all(not any(r) for r in self.entries)

    def __repr__(self) -> str:
        return f"FqMatrix(q={self.ctx.q}, {self.rows}x{self.cols})"


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------

def _row_reduce(ctx: FieldCtx, rows: List[List[int]], ncols: int) -> Tuple[List[List[int]], List[int]]:
    """In-place Gauss-Jordan; returns (rows, pivot_cols). Rows end up in
    reduced row echelon form with zero rows at the bottom."""
    sub, mul, inv = ctx.sub, ctx._mul, ctx._inv
    pivots: List[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        iv = inv[rows[r][c]]
        if iv != 1:
            rows[r] = [mul[iv][x] for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [sub(x, mul[f][y]) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rref(matrix: FqMatrix) -> Tuple[FqMatrix, int, List[int]]:
    """Reduced row echelon form, rank, and pivot columns."""
    rows = [list(r) for r in matrix.entries]
    rows, pivots = _row_reduce(matrix.ctx, rows, matrix.cols)
    reduced = FqMatrix(matrix.ctx, matrix.rows, matrix.cols, tuple(tuple(r) for r in rows))
    return reduced, len(pivots), pivots


def rank(matrix: FqMatrix) -> int:
    rows = [list(r) for r in matrix.entries]
    _, pivots = _row_reduce(matrix.ctx, rows, matrix.cols)
    return len(pivots)


def kernel_basis(matrix: FqMatrix) -> List[FqVector]:
    """Basis of {x : M x^T = 0}, one vector per free column, in ascending
    free-column order."""
    ctx = matrix.ctx
    rows = [list(r) for r in matrix.entries]
    rows, pivots = _row_reduce(ctx, rows, matrix.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        v = [0] * matrix.cols
        v[free] = 1
        for i, pc in enumerate(pivots):
            v[pc] = ctx.neg(rows[i][free])
        basis.append(FqVector(ctx, tuple(v)))
    return basis


def _common_frame(vectors: Sequence[FqVector]) -> Tuple[FieldCtx, int]:
    ctx = vectors[0].ctx
    dim = vectors[0].dim
    for v in vectors[1:]:
        if v.ctx != ctx:
            raise FieldMismatchError(f"{v.ctx!r} vs {ctx!r}")
        if v.dim != dim:
            raise DimensionMismatchError(f"dimension {v.dim} vs {dim}")
    return ctx, dim


def is_linearly_independent(vectors: Sequence[FqVector]) -> bool:
    if not vectors:
        return True
    ctx, dim = _common_frame(vectors)
    rows = [list(v.coords) for v in vectors]
    _, pivots = _row_reduce(ctx, rows, dim)
    return len(pivots) == len(vectors)


def in_span(v: FqVector, vectors: Sequence[FqVector]) -> bool:
    """True iff v lies in the linear span of vectors."""
    if not vectors:
        return v.is_zero()
    ctx, dim = _common_frame(list(vectors) + [v])
    rows = [list(u.coords) for u in vectors]
    _, pivots = _row_reduce(ctx, rows, dim)
    base = len(pivots)
    rows.append(list(v.coords))
    _, pivots = _row_reduce(ctx, [r[:] for r in rows], dim)
    return len(pivots) == base


def extract_basis(vectors: Sequence[FqVector]) -> List[FqVector]:
    """Maximal linearly independent sublist, scanning in input order and
    keeping a vector iff it increases the rank (first-seen wins)."""
    if not vectors:
        return []
    ctx, dim = _common_frame(vectors)
    sub, mul, inv = ctx.sub, ctx._mul, ctx._inv
    reduced: List[Tuple[int, List[int]]] = []  # (pivot_col, normalized row)
    basis: List[FqVector] = []
    for v in vectors:
        row = list(v.coords)
        for pc, red in reduced:
            if row[pc]:
                f = row[pc]
                row = [sub(x, mul[f][y]) for x, y in zip(row, red)]
        pivot = next((c for c in range(dim) if row[c]), None)
        if pivot is None:
            continue
        iv = inv[row[pivot]]
        if iv != 1:
            row = [mul[iv][x] for x in row]
        reduced.append((pivot, row))
        basis.append(v)
    return basis


def span_size(vectors: Sequence[FqVector]) -> int:
    """|<vectors>| = q^rank; exact, no enumeration."""
    if not vectors:
        return 1
    ctx, dim = _common_frame(vectors)
    rows = [list(v.coords) for v in vectors]
    _, pivots = _row_reduce(ctx, rows, dim)
    return ctx.q ** len(pivots)


# ---------------------------------------------------------------------------
# bit-packed F_2 path
# ---------------------------------------------------------------------------

def gf2_pack(coords: Iterable[int]) -> int:
    """Pack binary coordinates into an int; first coordinate is the most
    significant bit, matching FqVector.encode for q = 2."""
    word = 0
    for c in coords:
        word = (word << 1) | (c & 1)
    return word


def gf2_unpack(word: int, r: int) -> Tuple[int, ...]:
    return tuple((word >> (r - 1 - i)) & 1 for i in range(r))


def gf2_rank(words: Sequence[int]) -> int:
    """Rank over F_2 of row bitmasks, by XOR elimination."""
    basis: List[int] = []
    for w in words:
        for b in basis:
            w = min(w, w ^ b)
        if w:
            basis.append(w)
            basis.sort(reverse=True)
    return len(basis)
