"""Cochain complexes for n-Lie algebras and for Reynolds operators.

Degree-m cochains (m >= 1) are multilinear maps on (m-1) wedge blocks of
size n-1 plus one plain vector slot, with values in the module V.  They
are stored as flat coefficient tuples in lexicographic basis order
(I_1, ..., I_{m-1}, j, v).  Degree 0 of the Reynolds complex is
Lambda^{n-1}(g) itself.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .algebra import (
    RepresentationTable,
    ad,
    fundamental_action,
    wedge_single,
)
from .errors import InputError, PreconditionError, SizeGuardError
from .linalg import Matrix, vec_add, vec_scale, vec_zero
from .reynolds import check_reynolds, induced_bracket
from .rings import QQ_ZERO
from .verdict import fail, ok
from .wedge import WedgeBasis

DEFAULT_SIZE_GUARD = 2_000_000


class Cochain:
    """Degree-m cochain with coefficients in a module of dimension module_dim."""

    def __init__(self, arity, dim, module_dim, degree, data):
        if degree < 1:
            raise InputError("Cochain degree must be >= 1; degree 0 is a wedge element")
        self.arity = arity
        self.dim = dim
        self.module_dim = module_dim
        self.degree = degree
        self.wedge = WedgeBasis(dim, arity - 1)
        expected = len(self.wedge) ** (degree - 1) * dim * module_dim
        data = tuple(data)
        if len(data) != expected:
            raise InputError(f"cochain data length {len(data)} != {expected}")
        self.data = data

    @classmethod
    def zero(cls, arity, dim, module_dim, degree):
        size = len(WedgeBasis(dim, arity - 1)) ** (degree - 1) * dim * module_dim
        return cls(arity, dim, module_dim, degree, [QQ_ZERO] * size)

    @classmethod
    def from_operator(cls, arity, op):
        """A linear operator g -> V as a degree-1 cochain."""
        data = []
        for j in range(op.cols):
            for v in range(op.rows):
                data.append(op.entries[v][j])
        return cls(arity, op.cols, op.rows, 1, data)

    def to_operator(self):
        if self.degree != 1:
            raise InputError("only degree-1 cochains are operators")
        return Matrix(
            [
                [self.data[j * self.module_dim + v] for j in range(self.dim)]
                for v in range(self.module_dim)
            ]
        )

    def _index(self, blocks, j):
        b = len(self.wedge)
        idx = 0
        for blk in blocks:
            idx = idx * b + self.wedge.index[blk]
        return (idx * self.dim + (j - 1)) * self.module_dim

    def value_on_basis(self, blocks, j):
        """Module vector at canonical wedge-basis blocks and basis index j."""
        base = self._index(blocks, j)
        return list(self.data[base:base + self.module_dim])

    def evaluate(self, blocks, vec):
        """Multilinear evaluation: blocks are wedge coefficient dicts,
        vec a plain coefficient vector."""
        if len(blocks) != self.degree - 1:
            raise InputError(f"expected {self.degree - 1} wedge blocks, got {len(blocks)}")
        out = vec_zero(self.module_dim)
        items = [sorted(blk.items()) for blk in blocks]
        for combo in product(*items) if items else [()]:
            coeff = Fraction(1)
            keys = []
            for key, c in combo:
                coeff *= c
                keys.append(key)
            if not coeff:
                continue
            for j, vj in enumerate(vec):
                if vj:
                    out = vec_add(out, vec_scale(coeff * vj, self.value_on_basis(keys, j + 1)))
        return out

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return (
            (self.arity, self.dim, self.module_dim, self.degree) ==
            (other.arity, other.dim, other.module_dim, other.degree)
            and self.data == other.data
        )

    def is_zero(self):
        return all(not a for a in self.data)

    def __add__(self, other):
        return Cochain(self.arity, self.dim, self.module_dim, self.degree,
                       [a + b for a, b in zip(self.data, other.data)])

    def __sub__(self, other):
        return Cochain(self.arity, self.dim, self.module_dim, self.degree,
                       [a - b for a, b in zip(self.data, other.data)])

    def scale(self, c):
        return Cochain(self.arity, self.dim, self.module_dim, self.degree,
                       [c * a for a in self.data])


def coboundary(algebra, rho, cochain):
    """The n-Lie coboundary of a degree-m cochain (m >= 1)."""
    n, d = algebra.arity, algebra.dim
    if cochain.arity != n or cochain.dim != d:
        raise InputError("cochain/algebra mismatch")
    if rho.arity != n or rho.algebra_dim != d or rho.module_dim != cochain.module_dim:
        raise InputError("representation/cochain mismatch")
    m = cochain.degree
    wedge = cochain.wedge
    dv = cochain.module_dim
    out = []
    for blocks in product(wedge.tuples, repeat=m):
        for j in range(1, d + 1):
            vec = vec_zero(dv)
            block_dicts = [wedge_single(blk, d) for blk in blocks]
            unit_j = vec_zero(d)
            unit_j[j - 1] = Fraction(1)
            # pair terms: X_a o X_b replaces X_b, X_a removed
            for a in range(1, m + 1):
                for b in range(a + 1, m + 1):
                    action = fundamental_action(algebra, block_dicts[a - 1], block_dicts[b - 1])
                    args = [
                        (action if idx == b else block_dicts[idx - 1])
                        for idx in range(1, m + 1)
                        if idx != a
                    ]
                    term = cochain.evaluate(args, unit_j)
                    vec = vec_add(vec, vec_scale(Fraction((-1) ** a), term))
            # bracket into the plain slot
            for a in range(1, m + 1):
                args = [block_dicts[idx - 1] for idx in range(1, m + 1) if idx != a]
                moved = ad(algebra, block_dicts[a - 1]).apply(unit_j)
                term = cochain.evaluate(args, moved)
                vec = vec_add(vec, vec_scale(Fraction((-1) ** a), term))
            # representation acting on the value
            for a in range(1, m + 1):
                args = [block_dicts[idx - 1] for idx in range(1, m + 1) if idx != a]
                term = rho.matrix_for_wedge(block_dicts[a - 1]).apply(cochain.evaluate(args, unit_j))
                vec = vec_add(vec, vec_scale(Fraction((-1) ** (a + 1)), term))
            # last-block terms
            last = blocks[m - 1]
            head = [wedge_single(blk, d) for blk in blocks[:m - 1]]
            for i in range(1, n):
                prefix = last[:i - 1] + last[i:]
                mat = rho.matrix_for_tuple(prefix + (j,))
                unit_i = vec_zero(d)
                unit_i[last[i - 1] - 1] = Fraction(1)
                term = mat.apply(cochain.evaluate(head, unit_i))
                vec = vec_add(vec, vec_scale(Fraction((-1) ** (n + m - i + 1)), term))
            out.extend(vec)
    return Cochain(n, d, dv, m + 1, out)


def reynolds_representation(algebra, op):
    """The action rho_R making (g; rho_R) a representation of (g, [.]_R)."""
    pre = check_reynolds(algebra, op)
    if not pre:
        raise PreconditionError("operator is not a Reynolds operator", pre.counterexample)
    n, d = algebra.arity, algebra.dim
    tables = {}
    for tup in WedgeBasis(d, n - 1):
        units = algebra.units(tup)
        r_units = [op.apply(u) for u in units]
        cols = []
        for j in range(1, d + 1):
            x = vec_zero(d)
            x[j - 1] = Fraction(1)
            val = algebra.bracket(r_units + [x])
            val = vec_add(val, op.apply(algebra.bracket(r_units + [x])))
            for i in range(n - 1):
                args = list(r_units)
                args[i] = units[i]
                val = [a - b for a, b in zip(val, op.apply(algebra.bracket(args + [x])))]
            cols.append(val)
        mat = Matrix([[cols[j][i] for j in range(d)] for i in range(d)])
        if not mat.is_zero():
            tables[tup] = mat
    return RepresentationTable(n, d, d, tables)


def delta_r_operator(algebra, op, x_wedge):
    """delta_R(X) x = R[X,x] - [X,Rx] - R[X,Rx] as a linear operator."""
    adx = ad(algebra, x_wedge)
    return op @ adx - adx @ op - op @ adx @ op


def delta_r_cochain(algebra, op, x_wedge):
    return Cochain.from_operator(algebra.arity, delta_r_operator(algebra, op, x_wedge))


class ReynoldsComplex:
    """The cochain complex of a verified Reynolds operator, with coefficients
    in the algebra itself: delta_R at level 0, d_R above."""

    def __init__(self, algebra, op):
        pre = check_reynolds(algebra, op)
        if not pre:
            raise PreconditionError("operator is not a Reynolds operator", pre.counterexample)
        self.base = algebra
        self.op = op
        self.induced = induced_bracket(algebra, op)
        self.rho = reynolds_representation(algebra, op)
        self.wedge = WedgeBasis(algebra.dim, algebra.arity - 1)

    def cochain_dim(self, m):
        d = self.base.dim
        if m == 0:
            return len(self.wedge)
        return len(self.wedge) ** (m - 1) * d * d

    def d_r(self, cochain):
        """The coboundary of the induced algebra with coefficients in rho_R."""
        return coboundary(self.induced, self.rho, cochain)

    def delta_matrix(self):
        """Matrix of delta_R: C^0 -> C^1 in the flattened bases."""
        d = self.base.dim
        cols = []
        for tup in self.wedge:
            cols.append(delta_r_cochain(self.base, self.op, wedge_single(tup, d)).data)
        rows = d * d
        return Matrix([[cols[c][r] for c in range(len(cols))] for r in range(rows)])

    def differential_matrix(self, m, size_guard=DEFAULT_SIZE_GUARD):
        """Matrix of the level-m differential (m >= 0)."""
        if m == 0:
            return self.delta_matrix()
        n, d = self.base.arity, self.base.dim
        src = self.cochain_dim(m)
        dst = self.cochain_dim(m + 1)
        if src * dst > size_guard:
            raise SizeGuardError(
                f"differential at degree {m} needs a {dst}x{src} matrix, over the guard {size_guard}"
            )
        cols = []
        for c in range(src):
            data = [QQ_ZERO] * src
            data[c] = Fraction(1)
            basis_cochain = Cochain(n, d, d, m, data)
            cols.append(self.d_r(basis_cochain).data)
        return Matrix([[cols[c][r] for c in range(src)] for r in range(dst)])

    def dimensions(self, m_max, size_guard=DEFAULT_SIZE_GUARD):
        """[(m, dim Z^m, dim B^m, dim H^m)] for m = 0..m_max.

        H^0 = ker(delta_R); asserts square-zero of consecutive differentials.
        """
        if m_max < 0:
            raise InputError("m_max must be >= 0")
        mats = [self.differential_matrix(m, size_guard) for m in range(m_max + 1)]
        out = []
        prev_rank = 0
        for m in range(m_max + 1):
            dm = mats[m]
            rank = dm.rank()
            z = dm.cols - rank
            b = prev_rank
            if m > 0 and not (mats[m] @ mats[m - 1]).is_zero():
                raise PreconditionError(f"differential square is nonzero at degree {m}")
            if z - b < 0:
                raise PreconditionError(f"negative cohomology dimension at degree {m}")
            out.append((m, z, b, z - b))
            prev_rank = rank
        return out


def check_complex(algebra, rho, degree, sample_cochains):
    """d(d f) == 0 for the supplied cochains; a development cross-check."""
    for f in sample_cochains:
        twice = coboundary(algebra, rho, coboundary(algebra, rho, f))
        if not twice.is_zero():
            return fail("complex-square-zero", {"degree": degree}, list(twice.data), [QQ_ZERO] * len(twice.data))
    return ok("complex-square-zero")
