"""Reynolds operators on n-Lie algebras.

The defining identity, verified on increasing basis tuples:

    [Rx_1,...,Rx_n] = sum_i (-1)^{n-i} R[Rx_1,...,^Rx_i,...,Rx_n, x_i]
                      - R[Rx_1,...,Rx_n]

All checks run over whichever scalar ring the operator matrix carries, so
the same verifier doubles as the first-order deformation check over the
dual numbers.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import NAryAlgebra, algebra_from_bracket_function, is_derivation
from .errors import InputError, NotInvertibleError, PreconditionError
from .linalg import Matrix, vec_add, vec_zero
from .verdict import fail, ok
from .wedge import increasing_tuples


def _reynolds_rhs(algebra, op, tup):
    """sum_i R[Rx_1,...,x_i,...,Rx_n] - R[Rx_1,...,Rx_n] on a basis tuple.

    The hatted form of the identity, with x_i moved back into slot i,
    absorbs the (-1)^{n-i} sign.
    """
    n = algebra.arity
    units = algebra.units(tup)
    r_units = [op.apply(u) for u in units]
    acc = vec_zero(algebra.dim)
    for i in range(n):
        args = list(r_units)
        args[i] = units[i]
        acc = vec_add(acc, algebra.bracket(args))
    acc = [a - b for a, b in zip(acc, algebra.bracket(r_units))]
    return op.apply(acc)


def check_reynolds(algebra, op):
    """Verify the Reynolds identity on all increasing basis n-tuples."""
    if op.rows != algebra.dim or op.cols != algebra.dim:
        raise InputError("operator dimension mismatch")
    for tup in increasing_tuples(algebra.dim, algebra.arity):
        lhs = algebra.bracket([op.apply(u) for u in algebra.units(tup)])
        rhs = _reynolds_rhs(algebra, op, tup)
        if lhs != rhs:
            return fail("reynolds", {"tuple": tup}, lhs, rhs)
    return ok("reynolds")


def induced_bracket(algebra, op):
    """The bracket [x_1,...,x_n]_R making R a homomorphism onto the original."""
    pre = check_reynolds(algebra, op)
    if not pre:
        raise PreconditionError("operator is not a Reynolds operator", pre.counterexample)

    def value(tup):
        units = algebra.units(tup)
        r_units = [op.apply(u) for u in units]
        acc = vec_zero(algebra.dim)
        for i in range(algebra.arity):
            args = list(r_units)
            args[i] = units[i]
            acc = vec_add(acc, algebra.bracket(args))
        return [a - b for a, b in zip(acc, algebra.bracket(r_units))]

    return algebra_from_bracket_function(
        algebra.arity, algebra.dim, value, basis_names=algebra.basis_names
    )


def check_hom_pair(algebra, r_from, r_to, phi, psi):
    """(phi, psi) is a homomorphism of Reynolds operators: phi is an algebra
    homomorphism and phi . r_from = r_to . psi."""
    square = phi @ r_from - r_to @ psi
    if not square.is_zero():
        return fail(
            "hom-square",
            {"identity": "phi.R = R'.psi"},
            [a for row in (phi @ r_from).entries for a in row],
            [a for row in (r_to @ psi).entries for a in row],
        )
    for tup in algebra.basis_tuples():
        lhs = phi.apply(algebra.bracket_on_basis(tup))
        rhs = algebra.bracket([phi.apply(u) for u in algebra.units(tup)])
        if lhs != rhs:
            return fail("hom-bracket", {"tuple": tup}, lhs, rhs)
    return ok("hom-pair")


def reynolds_to_derivation(algebra, op):
    """R^{-1} - Id/(n-1) for an invertible Reynolds operator."""
    pre = check_reynolds(algebra, op)
    if not pre:
        raise PreconditionError("operator is not a Reynolds operator", pre.counterexample)
    try:
        inv = op.inverse()
    except NotInvertibleError:
        raise NotInvertibleError("Reynolds operator is singular; no derivation correspondence")
    c = Fraction(1, algebra.arity - 1)
    return inv - Matrix.identity(algebra.dim).scale(c)


def derivation_to_reynolds(algebra, deriv):
    """(D + Id/(n-1))^{-1} for a derivation D, when invertible."""
    pre = is_derivation(algebra, deriv)
    if not pre:
        raise PreconditionError("operator is not a derivation", pre.counterexample)
    c = Fraction(1, algebra.arity - 1)
    p = deriv + Matrix.identity(algebra.dim).scale(c)
    try:
        return p.inverse()
    except NotInvertibleError:
        raise NotInvertibleError("D + Id/(n-1) is singular")


def reynolds_from_nilpotent_derivation(algebra, deriv):
    """Finite series sum_m (-1)^m (n-1)^{m+1} D^m for nilpotent D.

    Equals derivation_to_reynolds(D) exactly; only the nilpotent case is
    supported, where the series terminates.
    """
    pre = is_derivation(algebra, deriv)
    if not pre:
        raise PreconditionError("operator is not a derivation", pre.counterexample)
    d = algebra.dim
    if not deriv.power(d).is_zero():
        raise PreconditionError("derivation is not nilpotent; the series does not terminate")
    n = algebra.arity
    acc = Matrix.zero(d)
    term = Matrix.identity(d)
    for m in range(d):
        coeff = Fraction((-1) ** m * (n - 1) ** (m + 1))
        acc = acc + term.scale(coeff)
        term = term @ deriv
        if term.is_zero():
            break
    return acc
