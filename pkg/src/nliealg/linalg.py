"""Exact dense linear algebra over the rationals (and dual numbers).

Rank and nullspace go through fraction-free Bareiss elimination on an
integer-cleared copy, so all pivoting arithmetic stays in Z.  Dual-number
matrices support the ring operations (add/mul/apply) but are rejected by
rank/nullspace/solve, which need a field.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError, NotInvertibleError, UnsupportedRingError
from .rings import Dual, QQ_ZERO, QQ_ONE


class Matrix:
    """Immutable row-major matrix of exact scalars."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = [tuple(row) for row in entries]
        if not entries:
            raise InputError("matrix needs at least one row")
        cols = len(entries[0])
        if any(len(row) != cols for row in entries):
            raise InputError("ragged matrix rows")
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(entries))

    def __setattr__(self, *_):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[QQ_ONE if i == j else QQ_ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls([[QQ_ZERO] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.entries]!r})"

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix([[-a for a in row] for row in self.entries])

    def scale(self, c):
        return Matrix([[c * a for a in row] for row in self.entries])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        return Matrix(
            [
                [sum((self.entries[i][k] * other.entries[k][j] for k in range(self.cols)), QQ_ZERO)
                 for j in range(other.cols)]
                for i in range(self.rows)
            ]
        )

    def apply(self, vec):
        """Matrix-vector product; entry [i][j] is the e_i-coefficient of the image of e_j."""
        if len(vec) != self.cols:
            raise InputError(f"vector length {len(vec)} != {self.cols}")
        return [sum((self.entries[i][j] * vec[j] for j in range(self.cols)), QQ_ZERO) for i in range(self.rows)]

    def power(self, k):
        if self.rows != self.cols:
            raise InputError("power of non-square matrix")
        out = Matrix.identity(self.rows)
        for _ in range(k):
            out = out @ self
        return out

    def is_zero(self):
        return all(not a for row in self.entries for a in row)

    def is_rational(self):
        return all(not isinstance(a, Dual) for row in self.entries for a in row)

    def _check_same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("shape mismatch")

    def _require_rational(self, what):
        if not self.is_rational():
            raise UnsupportedRingError(f"{what} is only defined over the rationals, not dual numbers")

    # -- fraction-free elimination -------------------------------------

    def _integer_rows(self):
        out = []
        for row in self.entries:
            row = [Fraction(a) for a in row]
            lcm = 1
            for a in row:
                if a:
                    g = _gcd(lcm, a.denominator)
                    lcm = lcm // g * a.denominator
            out.append([int(a * lcm) for a in row])
        return out

    def _bareiss_echelon(self):
        """Fraction-free row echelon form; returns (rows, pivot column list)."""
        m = self._integer_rows()
        nr, nc = self.rows, self.cols
        pivots = []
        prev = 1
        r = 0
        for c in range(nc):
            piv = next((i for i in range(r, nr) if m[i][c] != 0), None)
            if piv is None:
                continue
            if piv != r:
                m[r], m[piv] = m[piv], m[r]
            for i in range(r + 1, nr):
                for j in range(c + 1, nc):
                    m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
                m[i][c] = 0
            prev = m[r][c]
            pivots.append(c)
            r += 1
            if r == nr:
                break
        return m, pivots

    def rank(self):
        self._require_rational("rank")
        _, pivots = self._bareiss_echelon()
        return len(pivots)

    def nullspace_basis(self):
        """Exact basis of the right nullspace, one vector per free column."""
        self._require_rational("nullspace")
        m, pivots = self._bareiss_echelon()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [QQ_ZERO] * self.cols
            v[fc] = QQ_ONE
            for r in range(len(pivots) - 1, -1, -1):
                pc = pivots[r]
                s = sum(Fraction(m[r][j]) * v[j] for j in range(pc + 1, self.cols))
                v[pc] = -s / m[r][pc]
            basis.append(v)
        return basis

    def solve(self, b):
        """One exact solution of self @ x = b, or None when inconsistent."""
        self._require_rational("solve")
        if len(b) != self.rows:
            raise InputError(f"rhs length {len(b)} != {self.rows} rows")
        if any(isinstance(x, Dual) for x in b):
            raise UnsupportedRingError("solve is only defined over the rationals")
        m = [[Fraction(a) for a in row] + [Fraction(bv)] for row, bv in zip(self.entries, b)]
        nr, nc = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(nc):
            piv = next((i for i in range(r, nr) if m[i][c]), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = 1 / m[r][c]
            m[r] = [a * inv for a in m[r]]
            for i in range(nr):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * p for a, p in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        for i in range(r, nr):
            if m[i][nc]:
                return None
        x = [QQ_ZERO] * nc
        for row_idx, c in enumerate(pivots):
            x[c] = m[row_idx][nc]
        return x

    def det(self):
        self._require_rational("determinant")
        if self.rows != self.cols:
            raise InputError("determinant of non-square matrix")
        m = [[Fraction(a) for a in row] for row in self.entries]
        n = self.rows
        out = QQ_ONE
        for c in range(n):
            piv = next((i for i in range(c, n) if m[i][c]), None)
            if piv is None:
                return QQ_ZERO
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                out = -out
            out *= m[c][c]
            inv = 1 / m[c][c]
            for i in range(c + 1, n):
                if m[i][c]:
                    f = m[i][c] * inv
                    m[i] = [a - f * p for a, p in zip(m[i], m[c])]
        return out

    def inverse(self):
        self._require_rational("inverse")
        if self.rows != self.cols:
            raise InputError("inverse of non-square matrix")
        n = self.rows
        m = [[Fraction(a) for a in row] + [QQ_ONE if i == j else QQ_ZERO for j in range(n)]
             for i, row in enumerate(self.entries)]
        for c in range(n):
            piv = next((i for i in range(c, n) if m[i][c]), None)
            if piv is None:
                raise NotInvertibleError("matrix is singular")
            m[c], m[piv] = m[piv], m[c]
            inv = 1 / m[c][c]
            m[c] = [a * inv for a in m[c]]
            for i in range(n):
                if i != c and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * p for a, p in zip(m[i], m[c])]
        return Matrix([row[n:] for row in m])


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v):
    return [c * a for a in v]


def vec_zero(n):
    return [QQ_ZERO] * n


def vec_is_zero(v):
    return all(not a for a in v)


def unit_vector(n, i):
    """0-based unit vector."""
    v = [QQ_ZERO] * n
    v[i] = QQ_ONE
    return v
