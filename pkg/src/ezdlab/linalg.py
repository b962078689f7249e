"""Exact dense linear algebra over GF(p) and the rationals.

Matrices over GF(p) are stored as int64 numpy arrays with entries in
[0, p); rational matrices use object arrays of Fraction.  Everything is
immutable after construction and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

__all__ = [
    "Field",
    "Matrix",
    "RrefResult",
    "rref",
    "kernel_basis",
    "solve",
    "solve_matrix",
    "inverse",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """GF(p) for a prime p, or the rationals when p is None."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @staticmethod
    def prime(p: int) -> "Field":
        return Field(p)

    @staticmethod
    def rationals() -> "Field":
        return Field(None)

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    # scalar helpers (used by the polynomial layer, which is not numpy-backed)
    def canon(self, a):
        if self.p is not None:
            return int(a) % self.p
        return Fraction(a)

    def add(self, a, b):
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p is not None else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p is not None else a * b

    def neg(self, a):
        return (-a) % self.p if self.p is not None else -a

    def inv(self, a):
        if self.p is not None:
            a = a % self.p
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(a, self.p - 2, self.p)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    @property
    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def __str__(self) -> str:
        return f"GF({self.p})" if self.p is not None else "QQ"


GF101 = Field.prime(101)


def _canon_array(field: Field, arr) -> np.ndarray:
    if field.p is not None:
        a = np.asarray(arr, dtype=np.int64) % field.p
    else:
        src = np.asarray(arr, dtype=object)
        a = np.empty(src.shape, dtype=object)
        flat_src = src.reshape(-1)
        flat = a.reshape(-1)
        for i in range(flat_src.size):
            flat[i] = Fraction(flat_src[i])
    a.setflags(write=False)
    return a


class Matrix:
    """An immutable exact matrix over a :class:`Field`."""

    __slots__ = ("field", "data")

    def __init__(self, field: Field, data):
        self.field = field
        if isinstance(data, np.ndarray) and data.flags.writeable is False and (
            (field.p is not None and data.dtype == np.int64)
            or (field.p is None and data.dtype == object)
        ):
            self.data = data
        else:
            self.data = _canon_array(field, data)
        if self.data.ndim != 2:
            raise ValueError("matrix data must be 2-dimensional")

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_rows(field: Field, rows: Iterable[Iterable]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        if field.p is not None:
            return Matrix(field, np.array(rows, dtype=np.int64).reshape(len(rows), ncols))
        arr = np.empty((len(rows), ncols), dtype=object)
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                arr[i, j] = Fraction(v)
        return Matrix(field, arr)

    @staticmethod
    def zeros(field: Field, rows: int, cols: int) -> "Matrix":
        if field.p is not None:
            return Matrix(field, np.zeros((rows, cols), dtype=np.int64))
        arr = np.empty((rows, cols), dtype=object)
        arr[...] = Fraction(0)
        return Matrix(field, arr)

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        m = Matrix.zeros(field, n, n).data.copy()
        for i in range(n):
            m[i, i] = field.one
        return Matrix(field, m)

    @staticmethod
    def column(field: Field, entries: Iterable) -> "Matrix":
        return Matrix.from_rows(field, [[e] for e in entries])

    @staticmethod
    def hstack(mats: list["Matrix"]) -> "Matrix":
        field = mats[0].field
        return Matrix(field, np.hstack([m.data for m in mats]))

    @staticmethod
    def vstack(mats: list["Matrix"]) -> "Matrix":
        field = mats[0].field
        return Matrix(field, np.vstack([m.data for m in mats]))

    @staticmethod
    def block_diag(mats: list["Matrix"]) -> "Matrix":
        field = mats[0].field
        r = sum(m.rows for m in mats)
        c = sum(m.cols for m in mats)
        out = Matrix.zeros(field, r, c).data.copy()
        i = j = 0
        for m in mats:
            out[i : i + m.rows, j : j + m.cols] = m.data
            i += m.rows
            j += m.cols
        return Matrix(field, out)

    # -- basics -------------------------------------------------------
    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.data.shape == other.data.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self):
        if self.field.p is not None:
            return hash((self.field, self.data.shape, self.data.tobytes()))
        return hash((self.field, self.data.shape, tuple(self.data.reshape(-1))))

    def __repr__(self):
        return f"Matrix({self.field}, {self.data.tolist()!r})"

    def entry(self, i: int, j: int):
        return self.data[i, j]

    def col(self, j: int) -> "Matrix":
        return Matrix(self.field, self.data[:, j : j + 1])

    def is_zero(self) -> bool:
        if self.field.p is not None:
            return not self.data.any()
        return all(v == 0 for v in self.data.reshape(-1))

    def to_lists(self):
        return [list(r) for r in self.data.tolist()]

    # -- arithmetic ---------------------------------------------------
    def _wrap(self, arr) -> "Matrix":
        if self.field.p is not None:
            arr = arr % self.field.p
        return Matrix(self.field, arr)

    def __add__(self, other: "Matrix") -> "Matrix":
        return self._wrap(self.data + other.data)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self._wrap(self.data - other.data)

    def __neg__(self) -> "Matrix":
        return self._wrap(-self.data)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.data.shape} @ {other.data.shape}")
        return self._wrap(self.data.dot(other.data))

    def scale(self, c) -> "Matrix":
        c = self.field.canon(c)
        return self._wrap(self.data * c)

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, np.ascontiguousarray(self.data.T))


@dataclass(frozen=True)
class RrefResult:
    reduced: Matrix
    pivot_columns: tuple
    rank: int


def _rref_inplace(a: np.ndarray, field: Field):
    """Row-reduce ``a`` in place; returns pivot column list."""
    p = field.p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        sub = a[r:, c]
        if p is not None:
            nz = np.nonzero(sub)[0]
        else:
            nz = np.array([i for i in range(sub.shape[0]) if sub[i] != 0])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        if p is not None:
            inv = pow(int(a[r, c]), p - 2, p)
            a[r] = (a[r] * inv) % p
            colv = a[:, c].copy()
            colv[r] = 0
            tgt = np.nonzero(colv)[0]
            if tgt.size:
                a[tgt] = (a[tgt] - np.outer(colv[tgt], a[r])) % p
        else:
            inv = Fraction(1) / a[r, c]
            a[r] = a[r] * inv
            for t in range(rows):
                if t != r and a[t, c] != 0:
                    a[t] = a[t] - a[t, c] * a[r]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> RrefResult:
    a = m.data.copy()
    pivots = _rref_inplace(a, m.field)
    return RrefResult(Matrix(m.field, a), tuple(pivots), len(pivots))


def rank(m: Matrix) -> int:
    return rref(m).rank


def kernel_basis(m: Matrix) -> Matrix:
    """Columns span the null space of ``m``; column count = cols - rank."""
    res = rref(m)
    red = res.reduced.data
    pivots = list(res.pivot_columns)
    free = [j for j in range(m.cols) if j not in set(pivots)]
    out = Matrix.zeros(m.field, m.cols, len(free)).data.copy()
    for k, j in enumerate(free):
        out[j, k] = m.field.one
        for r, pc in enumerate(pivots):
            v = red[r, j]
            if v != 0:
                out[pc, k] = m.field.neg(v) if m.field.p is None else (-int(v)) % m.field.p
    return Matrix(m.field, out)


def solve(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """One solution of a x = b (b a column), or None if b is not in im(a)."""
    if b.rows != a.rows:
        raise ValueError("dimension mismatch between matrix and right-hand side")
    x = solve_matrix(a, b)
    return x


def solve_matrix(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """Solve a X = B columnwise; None if any column is unsolvable."""
    if b.rows != a.rows:
        raise ValueError("dimension mismatch between matrix and right-hand side")
    aug = Matrix.hstack([a, b])
    res = rref(aug)
    red = res.reduced.data
    pivots = [c for c in res.pivot_columns if c < a.cols]
    if len(pivots) != res.rank:
        return None  # some pivot fell in the b block: inconsistent system
    out = Matrix.zeros(a.field, a.cols, b.cols).data.copy()
    for r, pc in enumerate(pivots):
        out[pc, :] = red[r, a.cols :]
    return Matrix(a.field, out)


def inverse(m: Matrix) -> Optional[Matrix]:
    if m.rows != m.cols:
        return None
    x = solve_matrix(m, Matrix.identity(m.field, m.rows))
    if x is None:
        return None
    # solve_matrix succeeding on the identity forces full rank
    return x


def is_invertible(m: Matrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def image_basis(m: Matrix) -> Matrix:
    """A basis of the column space, as columns of the original matrix."""
    res = rref(m)
    cols = [m.data[:, [c]] for c in res.pivot_columns]
    if not cols:
        return Matrix.zeros(m.field, m.rows, 0)
    return Matrix(m.field, np.hstack(cols))


def subspace_equal(a: Matrix, b: Matrix) -> bool:
    """Do the columns of a and b span the same subspace?"""
    ra = rank(a)
    rb = rank(b)
    if ra != rb:
        return False
    return rank(Matrix.hstack([a, b])) == ra


def in_span(basis: Matrix, v: Matrix) -> bool:
    return rank(Matrix.hstack([basis, v])) == rank(basis)
