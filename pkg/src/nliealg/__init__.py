"""Exact arithmetic for n-Lie algebras: Reynolds and Nijenhuis operators,
NS structures, operator cohomology, and first-order deformations."""

from .algebra import (
    NAryAlgebra,
    RepresentationTable,
    adjoint_representation,
    check_filippov,
    check_representation,
    is_derivation,
    semidirect_product,
)
from .cohomology import Cochain, ReynoldsComplex, coboundary, reynolds_representation
from .constructions import (
    LinearFunctional,
    check_assoc_reynolds,
    comm_assoc_algebra,
    extend_by_functional,
    reynolds_lift_criterion,
)
from .deformation import (
    check_equivalence_witness,
    is_infinitesimal_deformation,
    is_trivial_deformation,
)
from .errors import NLieError
from .linalg import Matrix
from .nijenhuis import check_nijenhuis, deformed_algebra, deformed_bracket_ladder
from .ns import NSAlgebra, check_ns, ns_from_nijenhuis, ns_from_reynolds, subadjacent
from .reynolds import check_reynolds, induced_bracket

__all__ = [
    "NAryAlgebra",
    "RepresentationTable",
    "adjoint_representation",
    "check_filippov",
    "check_representation",
    "is_derivation",
    "semidirect_product",
    "Cochain",
    "ReynoldsComplex",
    "coboundary",
    "reynolds_representation",
    "LinearFunctional",
    "check_assoc_reynolds",
    "comm_assoc_algebra",
    "extend_by_functional",
    "reynolds_lift_criterion",
    "check_equivalence_witness",
    "is_infinitesimal_deformation",
    "is_trivial_deformation",
    "NLieError",
    "Matrix",
    "check_nijenhuis",
    "deformed_algebra",
    "deformed_bracket_ladder",
    "NSAlgebra",
    "check_ns",
    "ns_from_nijenhuis",
    "ns_from_reynolds",
    "subadjacent",
    "check_reynolds",
    "induced_bracket",
]
