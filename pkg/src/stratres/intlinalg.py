"""Exact integer and rational linear algebra.

Everything here is bit-exact: matrices hold arbitrary-precision Python
integers, determinants use fraction-free (Bareiss) elimination, signatures
use congruence diagonalization over exact rationals, and Smith normal form
tracks unimodular transforms so saturations and dual bases can be read off.
No floating point enters any code path.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Tuple

from .errors import (
    DegenerateFormError,
    DimensionMismatchError,
    InputError,
    NotUnimodularError,
    WrongSymmetryError,
    ZeroVectorError,
)

Vector = Tuple[int, ...]


class IntMatrix:
    """Immutable integer matrix, row-major.

    Rows and columns may be zero; the 0x0 matrix is the identity object of
    the direct-sum monoid and has determinant 1.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]):
        entries = tuple(int(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionMismatchError(
                f"entry count {len(entries)} != {rows}x{cols}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        m = len(rows)
        n = len(rows[0]) if m else 0
        if any(len(r) != n for r in rows):
            raise DimensionMismatchError("ragged rows")
        return cls(m, n, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, m: int, n: int) -> "IntMatrix":
        return cls(m, n, [0] * (m * n))

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            [self[i, j] for j in range(self.cols) for i in range(self.rows)],
        )

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other[k, j] for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, out)

    def mat_vec(self, v: Sequence[int]) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatchError(f"vector length {len(v)} != {self.cols}")
        return tuple(
            sum(self[i, k] * v[k] for k in range(self.cols)) for i in range(self.rows)
        )

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"IntMatrix({self.to_rows()!r})"


def _as_matrix(m) -> IntMatrix:
    if isinstance(m, IntMatrix):
        return m
    return IntMatrix.from_rows(m)


def determinant(m) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    The empty 0x0 matrix has determinant 1 (empty product).
    """
    m = _as_matrix(m)
    if not m.is_square():
        raise DimensionMismatchError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss: division is exact at every step
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


class BilinearForm:
    """Square integer Gram matrix with a symmetry sign.

    ``epsilon = +1`` means symmetric, ``epsilon = -1`` skew-symmetric; the
    constructor enforces ``matrix^T == epsilon * matrix``.
    """

    __slots__ = ("matrix", "epsilon")

    def __init__(self, matrix, epsilon: int):
        matrix = _as_matrix(matrix)
        if not matrix.is_square():
            raise DimensionMismatchError("bilinear form needs a square matrix")
        if epsilon not in (1, -1):
            raise InputError(f"epsilon must be +1 or -1, got {epsilon}")
        for i in range(matrix.rows):
            for j in range(matrix.rows):
                if matrix[j, i] != epsilon * matrix[i, j]:
                    raise WrongSymmetryError(
                        f"matrix is not {'symmetric' if epsilon == 1 else 'skew-symmetric'}"
                    )
        self.matrix = matrix
        self.epsilon = epsilon

    @classmethod
    def symmetric(cls, rows) -> "BilinearForm":
        return cls(rows, 1)

    @classmethod
    def skew(cls, rows) -> "BilinearForm":
        return cls(rows, -1)

    @property
    def rank(self) -> int:
        return self.matrix.rows

    def evaluate(self, x: Sequence[int], y: Sequence[int]) -> int:
        """x^T (Gram) y, exact."""
        if len(x) != self.rank or len(y) != self.rank:
            raise DimensionMismatchError("vector length does not match form rank")
        fy = self.matrix.mat_vec(y)
        return sum(int(a) * b for a, b in zip(x, fy))

    def determinant(self) -> int:
        return determinant(self.matrix)

    def is_unimodular(self) -> bool:
        return abs(self.determinant()) == 1

    def negate(self) -> "BilinearForm":
        m = self.matrix
        return BilinearForm(
            IntMatrix(m.rows, m.cols, [-e for e in m.entries]), self.epsilon
        )

    def direct_sum(self, other: "BilinearForm") -> "BilinearForm":
        if self.epsilon != other.epsilon:
            raise WrongSymmetryError("cannot direct-sum forms of different symmetry")
        n, m = self.rank, other.rank
        out = [[0] * (n + m) for _ in range(n + m)]
        for i in range(n):
            for j in range(n):
                out[i][j] = self.matrix[i, j]
        for i in range(m):
            for j in range(m):
                out[n + i][n + j] = other.matrix[i, j]
        return BilinearForm(out, self.epsilon)

    def __eq__(self, other):
        return (
            isinstance(other, BilinearForm)
            and self.epsilon == other.epsilon
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.epsilon, self.matrix))

    def __repr__(self):
        kind = "symmetric" if self.epsilon == 1 else "skew"
        return f"BilinearForm({self.matrix.to_rows()!r}, {kind})"


class Signature(Tuple[int, int]):
    """Inertia pair (positive index, negative index)."""

    def __new__(cls, positive, negative):
        return super().__new__(cls, (positive, negative))

    @property
    def positive(self) -> int:
        return self[0]

    @property
    def negative(self) -> int:
        return self[1]

    @property
    def index(self) -> int:
        """The signature p - q."""
        return self[0] - self[1]


def signature(f: BilinearForm) -> Signature:
    """Inertia of a nondegenerate symmetric form.

    Congruence diagonalization over exact rationals.  A zero pivot whose row
    still carries a nonzero off-diagonal entry is handled as a 2x2 block
    [[0, a], [a, 0]], which contributes (1, 1).
    """
    if f.epsilon != 1:
        raise WrongSymmetryError("signature is defined for symmetric forms")
    n = f.rank
    if n == 0:
        return Signature(0, 0)
    if f.determinant() == 0:
        raise DegenerateFormError("signature of a degenerate form")
    a = [[Fraction(f.matrix[i, j]) for j in range(n)] for i in range(n)]
    idx = list(range(n))
    pos = neg = 0
    while idx:
        # prefer a nonzero diagonal pivot
        piv = next((k for k in idx if a[k][k] != 0), None)
        if piv is not None:
            d = a[piv][piv]
            if d > 0:
                pos += 1
            else:
                neg += 1
            idx.remove(piv)
            # row-only updates suffice: each updated row is orthogonal to the
            # pivot, so stale entries in later rows pair to the same values
            for i in idx:
                c = a[i][piv] / d
                if c:
                    for j in idx:
                        a[i][j] -= c * a[piv][j]
            continue
        # all remaining diagonal entries vanish: take a hyperbolic 2x2 block
        k = idx[0]
        j = next((j for j in idx[1:] if a[k][j] != 0), None)
        if j is None:
            raise DegenerateFormError("zero row encountered during diagonalization")
        pos += 1
        neg += 1
        b = a[k][j]
        idx.remove(k)
        idx.remove(j)
        for i in idx:
            ck = a[i][j] / b  # coefficient on e_k
            cj = a[i][k] / b  # coefficient on e_j
            if ck or cj:
                for m in idx:
                    a[i][m] -= ck * a[k][m] + cj * a[j][m]
    return Signature(pos, neg)


class FormType:
    I = "I"
    II = "II"


def form_type(f: BilinearForm) -> str:
    """Type II iff every self-pairing is even; for integer matrices this is
    equivalent to an even diagonal."""
    if f.epsilon != 1:
        raise WrongSymmetryError("form type is defined for symmetric forms")
    for i in range(f.rank):
        if f.matrix[i, i] % 2 != 0:
            return FormType.I
    return FormType.II


def _solve_exact(mat: IntMatrix, rhs: Sequence[int]):
    """Solve mat * x = rhs over the rationals by Gaussian elimination."""
    n = mat.rows
    a = [[Fraction(mat[i, j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return None
        a[c], a[p] = a[p], a[c]
        d = a[c][c]
        a[c] = [x / d for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [a[i][n] for i in range(n)]


def solve_dual(f: BilinearForm, phi: Sequence[int]) -> Vector:
    """The unique integer vector kappa with f(kappa, -) = phi.

    Integrality is guaranteed by unimodularity; the solve itself is an
    exact rational elimination.
    """
    if len(phi) != f.rank:
        raise DimensionMismatchError("covector length does not match form rank")
    if not f.is_unimodular():
        raise NotUnimodularError("dual solve needs |det| = 1")
    # f(kappa, x) = phi(x) for all x  <=>  matrix^T kappa = phi
    sol = _solve_exact(f.matrix.transpose(), phi)
    assert sol is not None
    assert all(x.denominator == 1 for x in sol)
    return tuple(int(x) for x in sol)


def primitive_reduce(v: Sequence[int]) -> Tuple[Vector, int]:
    """Split a nonzero integer vector into (primitive part, content)."""
    v = tuple(int(x) for x in v)
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g == 0:
        raise ZeroVectorError("zero vector has no primitive part")
    return tuple(x // g for x in v), g


def _egcd(a: int, b: int):
    """g, s, t with s*a + t*b = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def smith_normal_form(m) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """U, D, V with U m V = D diagonal, U and V unimodular, and the diagonal
    entries nonnegative in a divisibility chain."""
    m = _as_matrix(m)
    rows, cols = m.rows, m.cols
    d = m.to_rows()
    u = IntMatrix.identity(rows).to_rows()
    v = IntMatrix.identity(cols).to_rows()

    def row_op(i, j, a, b, c, e):
        # rows i, j <- (a*ri + b*rj, c*ri + e*rj); det of the 2x2 must be +-1
        for k in range(cols):
            x, y = d[i][k], d[j][k]
            d[i][k] = a * x + b * y
            d[j][k] = c * x + e * y
        for k in range(rows):
            x, y = u[i][k], u[j][k]
            u[i][k] = a * x + b * y
            u[j][k] = c * x + e * y

    def col_op(i, j, a, b, c, e):
        for k in range(rows):
            x, y = d[k][i], d[k][j]
            d[k][i] = a * x + b * y
            d[k][j] = c * x + e * y
        for k in range(cols):
            x, y = v[i][k], v[j][k]
            v[i][k] = a * x + b * y
            v[j][k] = c * x + e * y

    t = 0
    limit = min(rows, cols)
    while t < limit:
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        i, j = piv
        if i != t:
            row_op(t, i, 0, 1, 1, 0)
        if j != t:
            col_op(t, j, 0, 1, 1, 0)
        while True:
            changed = False
            for i in range(t + 1, rows):
                if d[i][t]:
                    g, s, x = _egcd(d[t][t], d[i][t])
                    a, b = d[t][t] // g, d[i][t] // g
                    row_op(t, i, s, x, -b, a)
                    changed = True
            for j in range(t + 1, cols):
                if d[t][j]:
                    g, s, x = _egcd(d[t][t], d[t][j])
                    a, b = d[t][t] // g, d[t][j] // g
                    col_op(t, j, s, x, -b, a)
                    changed = True
            if not changed:
                break
        # fold in any lower-right entry the pivot does not divide yet
        p = d[t][t]
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if d[i][j] % p != 0:
                    bad = i
                    break
            if bad:
                break
        if bad is not None:
            row_op(t, bad, 1, 1, 0, 1)
            continue
        t += 1
    # normalize signs on the diagonal
    for k in range(min(rows, cols)):
        if d[k][k] < 0:
            for c2 in range(cols):
                d[k][c2] = -d[k][c2]
            for c2 in range(rows):
                u[k][c2] = -u[k][c2]
    vt = [[v[i][j] for i in range(cols)] for j in range(cols)]  # transpose back
    return (
        IntMatrix.from_rows(u),
        IntMatrix.from_rows(d),
        IntMatrix.from_rows(vt),
    )


def invariant_factors(m) -> Tuple[int, ...]:
    """Nonzero Smith invariant factors of an integer matrix."""
    _, d, _ = smith_normal_form(m)
    out = []
    for k in range(min(d.rows, d.cols)):
        if d[k, k] != 0:
            out.append(d[k, k])
    return tuple(out)


def inverse_unimodular(m) -> IntMatrix:
    """Exact inverse of an integer matrix with determinant +-1."""
    m = _as_matrix(m)
    if not m.is_square():
        raise DimensionMismatchError("inverse of a non-square matrix")
    n = m.rows
    cols = []
    for j in range(n):
        rhs = [int(i == j) for i in range(n)]
        sol = _solve_exact(m, rhs)
        if sol is None:
            raise NotUnimodularError("matrix is singular")
        if any(x.denominator != 1 for x in sol):
            raise NotUnimodularError("matrix is not invertible over the integers")
        cols.append([int(x) for x in sol])
    return IntMatrix.from_rows([[cols[j][i] for j in range(n)] for i in range(n)])


def saturation_basis(rows: Sequence[Sequence[int]], ambient: int) -> Tuple[Vector, ...]:
    """Basis of the pure closure (saturation) of the row span inside Z^ambient.

    The closure is the smallest direct summand containing the span; for a
    full-content span it is the span itself.
    """
    if not rows:
        return ()
    mat = IntMatrix.from_rows(rows)
    if mat.cols != ambient:
        raise DimensionMismatchError("row length does not match ambient rank")
    u, d, v = smith_normal_form(mat)
    r = sum(1 for k in range(min(d.rows, d.cols)) if d[k, k] != 0)
    vinv = inverse_unimodular(v)
    return tuple(tuple(vinv.row(i)) for i in range(r))


def span_is_direct_summand(rows: Sequence[Sequence[int]], ambient: int) -> bool:
    """True when the rows are independent and span a direct summand
    (all Smith invariant factors equal 1)."""
    if not rows:
        return True
    mat = IntMatrix.from_rows(rows)
    if mat.cols != ambient:
        raise DimensionMismatchError("row length does not match ambient rank")
    facs = invariant_factors(mat)
    return len(facs) == len(rows) and all(f == 1 for f in facs)
