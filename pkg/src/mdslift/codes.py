"""Linear codes over a finite field.

Provides the GRS base construction (always MDS), exact minimum
distance by exhaustive codeword enumeration, the minor-criterion MDS
check, single row/column scalings, diagonal sandwich products, and a
hard-coded [8,3,6] reference code over F_7 used throughout the tests.

The two MDS detectors are deliberately independent: ``is_mds`` checks
nonsingularity of every k-column submatrix and scales with C(n, k),
while ``min_distance`` enumerates q^k - 1 codewords. Where both are
feasible they must agree (d = n - k + 1 iff all minors nonsingular),
and the test suite asserts exactly that.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicateAlpha,
    IndexOutOfRange,
    RankDeficient,
    TooLong,
    TooManyCodewords,
    ZeroDiagonalEntry,
    ZeroMultiplier,
    ZeroScalar,
)
from .field import FieldElement, FieldSpec, make_prime_field
from .matrix import FieldMatrix, _eliminate, rank, vec_mat_mul

#: Cap on q^k - 1 for exhaustive minimum-distance enumeration.
DEFAULT_ENUM_LIMIT = 1 << 26

_CHUNK = 1 << 18  # messages per enumeration block


class LinearCode:
    """An [n, k] linear code given by a full-row-rank generator matrix.

    The minimum distance ``d`` starts unknown and is cached set-once by
    ``min_distance``; a cached value always satisfies the Singleton
    bound 1 <= d <= n - k + 1.
    """

    __slots__ = ("spec", "generator", "n", "k", "_d")

    def __init__(self, generator: FieldMatrix, d: int | None = None) -> None:
        k, n = generator.shape
        if k > n:
            raise DimensionMismatch(f"k={k} rows exceed n={n} columns")
        if rank(generator) != k:
            raise RankDeficient(f"generator rank < k={k}")
        self.spec = generator.spec
        self.generator = generator
        self.n = n
        self.k = k
        self._d = None
        if d is not None:
            self.set_distance(d)

    @property
    def d(self) -> int | None:
        """Known minimum distance, or None before computation."""
        return self._d

    def set_distance(self, d: int) -> None:
        """Set-once cache; repeated sets must agree."""
        if not 1 <= d <= self.n - self.k + 1:
            raise ValueError(f"d={d} violates Singleton for [{self.n},{self.k}]")
        if self._d is not None and self._d != d:
            raise ValueError(f"distance already cached as {self._d}, got {d}")
        self._d = d

    def params(self) -> str:
        d = "?" if self._d is None else str(self._d)
        return f"[{self.n},{self.k},{d}]"

    def __repr__(self) -> str:
        return f"LinearCode({self.params()} over {self.spec})"


def grs_generator(
    spec: FieldSpec,
    n: int,
    k: int,
    alphas: Sequence[FieldElement] | None = None,
    vs: Sequence[FieldElement] | None = None,
) -> LinearCode:
    """Generalized Reed-Solomon code with entries v_j * alpha_j^i.

    Defaults: alphas = the first n field elements in code order, vs all
    ones. Any choice of distinct alphas and nonzero vs yields an MDS
    code (verified in tests, not assumed here: d is left uncached).
    """
    if n > spec.order:
        raise TooLong(f"n={n} exceeds field order {spec.order}")
    if not 1 <= k <= n:
        raise DimensionMismatch(f"k={k} outside [1, n={n}]")
    if alphas is None:
        alphas = [spec.from_code(c) for c in range(n)]
    if vs is None:
        vs = [spec.one()] * n
    if len(alphas) != n or len(vs) != n:
        raise DimensionMismatch(f"need {n} alphas and vs")
    a_codes = [spec.element(a).code for a in alphas]
    v_codes = [spec.element(v).code for v in vs]
    if len(set(a_codes)) != n:
        raise DuplicateAlpha("evaluation points must be pairwise distinct")
    if any(v == 0 for v in v_codes):
        raise ZeroMultiplier("column multipliers must be nonzero")
    rows = []
    cur = list(v_codes)
    for _ in range(k):
        rows.append(cur)
        cur = [spec.mul_code(c, a) for c, a in zip(cur, a_codes)]
    return LinearCode(FieldMatrix(spec, np.array(rows, dtype=np.int64)))


def example1_code() -> LinearCode:
    """Reference [8,3] code over F_7 in systematic form.

    Fixed fixture used across the test suite; its minimum distance 6
    and MDS property are recomputed, never assumed.
    """
    spec = make_prime_field(7)
    g = FieldMatrix.from_rows(spec, [
        [1, 0, 0, 6, 4, 2, 5, 3],
        [0, 1, 0, 3, 1, 5, 1, 3],
        [0, 0, 1, 3, 5, 2, 4, 6],
    ])
    return LinearCode(g)


def encode_message(code: LinearCode, message: Sequence[FieldElement]) -> list[FieldElement]:
    """Codeword m . G for a length-k message."""
    if len(message) != code.k:
        raise DimensionMismatch(f"message length {len(message)} != k={code.k}")
    return vec_mat_mul(message, code.generator)


def _mul_matrix(spec: FieldSpec, c_code: int) -> np.ndarray:
    # multiplication by a constant is F_p-linear on coordinate vectors;
    # row i is the coordinate vector of x^i * c
    rows = []
    for i in range(spec.t):
        prod = spec.mul_code(spec.p ** i, c_code)
        rows.append(spec.code_to_coords(prod))
    return np.array(rows, dtype=np.int64)


def _min_weight_prime(spec: FieldSpec, g: np.ndarray, total: int) -> int:
    p = spec.p
    k, n = g.shape
    best = n
    for start in range(1, total + 1, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total + 1), dtype=np.int64)
        digits = np.empty((idx.size, k), dtype=np.int64)
        for i in range(k):
            idx, digits[:, i] = np.divmod(idx, p)
        weights = np.count_nonzero((digits @ g) % p, axis=1)
        best = min(best, int(weights.min()))
        if best == 1:
            break
    return best


def _min_weight_ext(spec: FieldSpec, g: np.ndarray, total: int) -> int:
    p, q, t = spec.p, spec.order, spec.t
    k, n = g.shape
    # lmaps[i][j]: t x t matrix over F_p realizing multiplication by g[i, j]
    lmaps = [[_mul_matrix(spec, int(g[i, j])) for j in range(n)] for i in range(k)]
    best = n
    for start in range(1, total + 1, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total + 1), dtype=np.int64)
        m = idx.size
        coords = np.empty((m, k, t), dtype=np.int64)
        for i in range(k):
            idx, codes = np.divmod(idx, q)
            for j in range(t):
                codes, coords[:, i, j] = np.divmod(codes, p)
        weights = np.zeros(m, dtype=np.int64)
        for j in range(n):
            acc = coords[:, 0, :] @ lmaps[0][j]
            for i in range(1, k):
                acc += coords[:, i, :] @ lmaps[i][j]
            weights += (acc % p).any(axis=1)
        best = min(best, int(weights.min()))
        if best == 1:
            break
    return best


def min_distance(code: LinearCode, enum_limit: int = DEFAULT_ENUM_LIMIT) -> int:
    """Exact minimum Hamming weight over all q^k - 1 nonzero messages.

    Linear code, so minimum distance = minimum nonzero weight. The
    result is cached on the code. Enumeration beyond ``enum_limit``
    codewords is refused.
    """
    if code.d is not None:
        return code.d
    spec = code.spec
    total = spec.order ** code.k - 1
    if total > enum_limit:
        raise TooManyCodewords(f"{total} codewords exceed limit {enum_limit}")
    g = np.asarray(code.generator.codes)
    if spec.t == 1:
        best = _min_weight_prime(spec, g, total)
    else:
        best = _min_weight_ext(spec, g, total)
    code.set_distance(best)
    return best


def is_mds(code: LinearCode) -> bool:
    """Minor criterion: every k-column submatrix is nonsingular.

    Equivalent to d = n - k + 1; scales with C(n, k) instead of q^k so
    it works over fields too large to enumerate.
    """
    g = code.generator.codes
    spec, k = code.spec, code.k
    for cols in combinations(range(code.n), k):
        m = g[:, cols].tolist()
        if len(_eliminate(m, spec, reduced=False)) < k:
            return False
    return True


def _scalar_code(spec: FieldSpec, c: int | FieldElement) -> int:
    code = spec.element(c).code if isinstance(c, FieldElement) else int(c)
    if not 0 <= code < spec.order:
        raise ValueError(f"scalar code {code} out of range for {spec}")
    return code


def scale_row(g: FieldMatrix, i: int, c: int | FieldElement) -> FieldMatrix:
    """Copy of g with row i multiplied by nonzero c (int = element code)."""
    spec = g.spec
    cc = _scalar_code(spec, c)
    if cc == 0:
        raise ZeroScalar("row scaling by zero")
    if not 0 <= i < g.rows:
        raise IndexOutOfRange(f"row {i} of {g.rows}")
    out = g.codes.copy()
    out[i] = [spec.mul_code(cc, int(v)) for v in out[i]]
    return FieldMatrix(spec, out)


def scale_col(g: FieldMatrix, j: int, c: int | FieldElement) -> FieldMatrix:
    """Copy of g with column j multiplied by nonzero c (int = element code)."""
    spec = g.spec
    cc = _scalar_code(spec, c)
    if cc == 0:
        raise ZeroScalar("column scaling by zero")
    if not 0 <= j < g.cols:
        raise IndexOutOfRange(f"column {j} of {g.cols}")
    out = g.codes.copy()
    out[:, j] = [spec.mul_code(cc, int(v)) for v in out[:, j]]
    return FieldMatrix(spec, out)


def _diag_codes(spec: FieldSpec, diag, length: int, side: str) -> list[int]:
    entries = getattr(diag, "diag", diag)
    codes = [_scalar_code(spec, e) for e in entries]
    if len(codes) != length:
        raise DimensionMismatch(f"{side} diagonal length {len(codes)}, need {length}")
    if any(c == 0 for c in codes):
        raise ZeroDiagonalEntry(f"{side} diagonal contains zero")
    return codes


def monomial_sandwich(d: FieldMatrix, m1, m2) -> FieldMatrix:
    """Product M1 . d . M2 for nonzero diagonals M1 (rows), M2 (cols).

    m1 and m2 may be element sequences or any object with a ``diag``
    attribute; entry (i, j) of the result is m1_i * d_ij * m2_j.
    """
    spec = d.spec
    left = _diag_codes(spec, m1, d.rows, "left")
    right = _diag_codes(spec, m2, d.cols, "right")
    mul = spec.mul_code
    out = d.codes.copy()
    for i in range(d.rows):
        li = left[i]
        out[i] = [mul(li, mul(int(v), rj)) for v, rj in zip(out[i], right)]
    return FieldMatrix(spec, out)
