"""Dense matrices over one finite field.

Entries are stored as an integer code array (see ``field``); matrices
are immutable values, and every operation returns a new matrix. Scale
is desk scale (n up to a few hundred), so everything is plain Gaussian
elimination with first-nonzero pivoting and no column permutation:
coordinate positions carry meaning for codes and erasure patterns.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CharacteristicMismatch,
    DimensionMismatch,
    FieldMismatch,
    IndexOutOfRange,
    LeadingBlockSingular,
    NotSquare,
    NotStrictlyIncreasing,
    RankDeficient,
    Singular,
)
from .field import FieldElement, FieldSpec


class FieldMatrix:
    """Matrix over a single FieldSpec, entries in row-major order."""

    __slots__ = ("spec", "_codes")

    def __init__(self, spec: FieldSpec, codes: np.ndarray) -> None:
        codes = np.asarray(codes, dtype=np.int64)
        if codes.ndim != 2:
            raise DimensionMismatch("matrix codes must be 2-dimensional")
        if codes.size and (codes.min() < 0 or codes.max() >= spec.order):
            raise ValueError(f"entry code out of range for {spec}")
        self.spec = spec
        self._codes = codes
        self._codes.setflags(write=False)

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Sequence[Sequence[int | FieldElement]]) -> "FieldMatrix":
        """Build from nested sequences. Integer entries are element
        codes (for prime fields, codes coincide with values)."""
        data = []
        for r in rows:
            out = []
            for v in r:
                if isinstance(v, FieldElement):
                    if v.spec.field_id != spec.field_id:
                        raise FieldMismatch(f"entry from {v.spec} in {spec} matrix")
                    out.append(v.code)
                else:
                    out.append(int(v))
            data.append(out)
        return cls(spec, np.array(data, dtype=np.int64))

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "FieldMatrix":
        return cls(spec, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int) -> "FieldMatrix":
        return cls(spec, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def diagonal(cls, spec: FieldSpec, entries: Sequence[int | FieldElement]) -> "FieldMatrix":
        n = len(entries)
        m = np.zeros((n, n), dtype=np.int64)
        for i, v in enumerate(entries):
            m[i, i] = v.code if isinstance(v, FieldElement) else int(v)
        return cls(spec, m)

    @property
    def rows(self) -> int:
        return self._codes.shape[0]

    @property
    def cols(self) -> int:
        return self._codes.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._codes.shape

    @property
    def codes(self) -> np.ndarray:
        """Read-only view of the entry codes."""
        return self._codes

    def __getitem__(self, key: tuple[int, int]) -> FieldElement:
        i, j = key
        return FieldElement(self.spec, int(self._codes[i, j]))

    def row(self, i: int) -> list[FieldElement]:
        return [FieldElement(self.spec, int(c)) for c in self._codes[i]]

    def col(self, j: int) -> list[FieldElement]:
        return [FieldElement(self.spec, int(c)) for c in self._codes[:, j]]

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.spec, self._codes.T.copy())

    def to_lists(self) -> list[list[int]]:
        return self._codes.tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return (self.spec.field_id == other.spec.field_id
                and np.array_equal(self._codes, other._codes))

    __hash__ = None

    def __repr__(self) -> str:
        return f"FieldMatrix({self.spec}, {self.rows}x{self.cols})"


def _same_field(a: FieldMatrix, b: FieldMatrix) -> None:
    if a.spec.field_id != b.spec.field_id:
        raise FieldMismatch(f"{a.spec} vs {b.spec}")


def mat_mul(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    """Standard matrix product over the common field."""
    _same_field(a, b)
    if a.cols != b.rows:
        raise DimensionMismatch(f"{a.shape} x {b.shape}")
    spec = a.spec
    ac = a.codes.tolist()
    bc = b.codes.tolist()
    mul, add = spec.mul_code, spec.add_code
    out = np.zeros((a.rows, b.cols), dtype=np.int64)
    for i in range(a.rows):
        arow = ac[i]
        for j in range(b.cols):
            acc = 0
            for l in range(a.cols):
                v = arow[l]
                if v:
                    acc = add(acc, mul(v, bc[l][j]))
            out[i, j] = acc
    return FieldMatrix(spec, out)


def _eliminate(m: list[list[int]], spec: FieldSpec, reduced: bool) -> list[int]:
    """In-place row echelon; returns the pivot column list.

    Pivot choice: first nonzero entry scanning top-down, columns left
    to right. Pivots are normalized to 1. ``reduced`` also clears
    entries above each pivot (RREF).
    """
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    mul, sub, inv = spec.mul_code, spec.sub_code, spec.inv_code
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        if pv != 1:
            pinv = inv(pv)
            m[row] = [mul(pinv, v) if v else 0 for v in m[row]]
        targets = range(nrows) if reduced else range(row + 1, nrows)
        for r in targets:
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [sub(v, mul(f, w)) if w else v for v, w in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    return pivots


def rank(a: FieldMatrix) -> int:
    """Row-echelon rank."""
    m = a.codes.tolist()
    return len(_eliminate(m, a.spec, reduced=False))


def is_nonsingular(a: FieldMatrix) -> bool:
    if a.rows != a.cols:
        raise NotSquare(f"{a.shape} matrix")
    return rank(a) == a.rows


def submatrix(a: FieldMatrix, row_indices: Sequence[int], col_indices: Sequence[int]) -> FieldMatrix:
    """Rows and columns selected by strictly increasing index lists."""
    for name, idx, bound in (("row", row_indices, a.rows), ("col", col_indices, a.cols)):
        if any(i + 1 > bound or i < 0 for i in idx):
            raise IndexOutOfRange(f"{name} index out of range in {list(idx)}")
        if any(x >= y for x, y in zip(idx, idx[1:])):
            raise NotStrictlyIncreasing(f"{name} indices {list(idx)}")
    sel = a.codes[np.ix_(list(row_indices), list(col_indices))]
    return FieldMatrix(a.spec, sel.copy())


def solve(a: FieldMatrix, b: Sequence[FieldElement]) -> list[FieldElement]:
    """Unique x with a @ x = b, for square nonsingular a."""
    if a.rows != a.cols:
        raise NotSquare(f"{a.shape} matrix")
    if len(b) != a.rows:
        raise DimensionMismatch(f"rhs length {len(b)} for {a.shape}")
    spec = a.spec
    aug = a.codes.tolist()
    for i, v in enumerate(b):
        v = spec.element(v)
        aug[i].append(v.code)
    pivots = _eliminate(aug, spec, reduced=True)
    if pivots != list(range(a.rows)):
        raise Singular(f"matrix of rank {len(pivots)} in solve")
    return [FieldElement(spec, row[-1]) for row in aug]


def vec_mat_mul(v: Sequence[FieldElement], a: FieldMatrix) -> list[FieldElement]:
    """Row vector times matrix."""
    if len(v) != a.rows:
        raise DimensionMismatch(f"vector length {len(v)} for {a.shape}")
    spec = a.spec
    codes = [spec.element(x).code for x in v]
    ac = a.codes.tolist()
    mul, add = spec.mul_code, spec.add_code
    out = []
    for j in range(a.cols):
        acc = 0
        for i, c in enumerate(codes):
            if c:
                acc = add(acc, mul(c, ac[i][j]))
        out.append(FieldElement(spec, acc))
    return out


def embed_matrix(a: FieldMatrix, target: FieldSpec) -> FieldMatrix:
    """Entrywise constant-polynomial embedding of a prime-field matrix.

    The embedding is the identity on codes, so only the field tag
    changes.
    """
    if a.spec.t != 1:
        raise FieldMismatch("embedding is defined on prime-field matrices")
    if a.spec.p != target.p:
        raise CharacteristicMismatch(f"cannot embed {a.spec} matrix into {target}")
    return FieldMatrix(target, a.codes.copy())


def to_systematic(g: FieldMatrix) -> FieldMatrix:
    """Reduced row-echelon form [I_k | A]; the row space is unchanged.

    No column permutation is performed: the leading k x k block must
    already be nonsingular, else LeadingBlockSingular. Rank-deficient
    input raises RankDeficient.
    """
    m = g.codes.tolist()
    pivots = _eliminate(m, g.spec, reduced=True)
    if len(pivots) < g.rows:
        raise RankDeficient(f"rank {len(pivots)} < {g.rows} rows")
    if pivots != list(range(g.rows)):
        raise LeadingBlockSingular(f"pivot columns {pivots}")
    return FieldMatrix(g.spec, np.array(m, dtype=np.int64))


def is_systematic(g: FieldMatrix) -> bool:
    """True iff the first k columns form the identity."""
    k = g.rows
    if g.cols < k:
        return False
    return np.array_equal(g.codes[:, :k], np.eye(k, dtype=np.int64))
