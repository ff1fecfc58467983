"""First-order deformations of a Reynolds operator.

A direction S deforms R to R + tS with t^2 = 0.  The cocycle condition
is checked twice, by independent routes: once through the explicit
t-linear identity on basis tuples, and once by re-running the Reynolds
verifier over the dual numbers with the operator R + eps*S.  The two
verdicts must agree; a mismatch is a bug, not a result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import ad
from .cohomology import delta_r_operator
from .errors import InternalConsistencyError, PreconditionError
from .linalg import Matrix, vec_add, vec_sub, vec_zero
from .reynolds import check_hom_pair, check_reynolds
from .rings import EPS
from .verdict import fail, ok
from .wedge import increasing_tuples


def _t_linear_check(algebra, op, direction):
    """The explicit first-order condition on all increasing basis tuples."""
    n, d = algebra.arity, algebra.dim
    for tup in increasing_tuples(d, n):
        units = algebra.units(tup)
        r_units = [op.apply(u) for u in units]
        s_units = [direction.apply(u) for u in units]
        lhs = vec_zero(d)
        for i in range(n):
            args = list(r_units)
            args[i] = s_units[i]
            lhs = vec_add(lhs, algebra.bracket(args))
        rhs = vec_zero(d)
        for i in range(n):
            args = list(r_units)
            args[i] = units[i]
            rhs = vec_add(rhs, direction.apply(algebra.bracket(args)))
        rhs = vec_sub(rhs, direction.apply(algebra.bracket(r_units)))
        for i in range(n):
            args = list(r_units)
            args[i] = s_units[i]
            rhs = vec_sub(rhs, op.apply(algebra.bracket(args)))
        for i in range(n):
            for j in range(n):
                if j == i:
                    continue
                args = list(r_units)
                args[i] = units[i]
                args[j] = s_units[j]
                rhs = vec_add(rhs, op.apply(algebra.bracket(args)))
        if lhs != rhs:
            return fail("deformation-cocycle", {"tuple": tup}, lhs, rhs)
    return ok("deformation-cocycle")


def is_infinitesimal_deformation(algebra, op, direction):
    """Does R + tS stay Reynolds to first order?  Verified by two routes."""
    pre = check_reynolds(algebra, op)
    if not pre:
        raise PreconditionError("base operator is not a Reynolds operator", pre.counterexample)
    direct = _t_linear_check(algebra, op, direction)
    dual_op = op + direction.scale(EPS)
    dual = check_reynolds(algebra, dual_op)
    if bool(direct) != bool(dual):
        raise InternalConsistencyError(
            "t-linear check and dual-number check disagree: "
            f"direct={bool(direct)}, dual={bool(dual)}"
        )
    return direct


def check_equivalence_witness(algebra, op, dir1, dir2, x_wedge):
    """Is (Id + t*ad_X, Id + t*ad_X - t*[X,R]) a homomorphism pair from
    R + t*dir1 to R + t*dir2 over the dual numbers?"""
    for s in (dir1, dir2):
        res = is_infinitesimal_deformation(algebra, op, s)
        if not res:
            raise PreconditionError("direction is not a cocycle", res.counterexample)
    d = algebra.dim
    adx = ad(algebra, x_wedge)
    ident = Matrix.identity(d)
    phi = ident + adx.scale(EPS)
    psi = ident + adx.scale(EPS) - (adx @ op).scale(EPS)
    r1t = op + dir1.scale(EPS)
    r2t = op + dir2.scale(EPS)
    verdict = check_hom_pair(algebra, r1t, r2t, phi, psi)
    if verdict:
        if dir1 - dir2 != delta_r_operator(algebra, op, x_wedge):
            raise InternalConsistencyError(
                "homomorphism pair verified but dir1 - dir2 is not the coboundary of X"
            )
    return verdict


@dataclass(frozen=True)
class TrivialityResult:
    """Outcome of the triviality decision.  status is 'trivial',
    'nontrivial', or 'unknown'; a witness accompanies 'trivial' as a
    wedge coefficient dict, and 'unknown' carries the diverging verdict."""

    status: str
    witness: dict | None = field(default=None)
    detail: object = field(default=None)


def is_trivial_deformation(algebra, op, direction):
    """Solve direction = delta_R(X) and verify the induced pair."""
    res = is_infinitesimal_deformation(algebra, op, direction)
    if not res:
        raise PreconditionError("direction is not a cocycle", res.counterexample)
    d = algebra.dim
    basis = increasing_tuples(d, algebra.arity - 1)
    cols = []
    for tup in basis:
        delta = delta_r_operator(algebra, op, {tup: Fraction(1)})
        cols.append([delta.entries[i][j] for i in range(d) for j in range(d)])
    target = [direction.entries[i][j] for i in range(d) for j in range(d)]
    system = Matrix([[cols[c][r] for c in range(len(basis))] for r in range(d * d)])
    solution = system.solve(target)
    if solution is None:
        return TrivialityResult("nontrivial")
    witness = {tup: c for tup, c in zip(basis, solution) if c}
    verdict = check_equivalence_witness(
        algebra, op, direction, Matrix.zero(d), witness
    )
    if verdict:
        return TrivialityResult("trivial", witness=witness)
    return TrivialityResult("unknown", witness=witness, detail=verdict)
