"""Exact integer homology, cohomology and intersection theory of symmetric
products of a closed genus-g surface, with derived invariants, embedding
obstructions and an independent brute-force verification oracle."""

from .core import (
    B,
    UNIT,
    CurveContext,
    IntegralityError,
    TensorClass,
    surface_mul,
    tensor_mul,
    tensor_pair,
)
from .homology import (
    HomologyClass,
    basis_monomials,
    betti,
    coproduct,
    pontryagin_mul,
    primitive_basis,
    restrict_to_n,
    spherical_class,
)
from .cohomology import (
    CohomologyClass,
    coordinates,
    cup,
    kronecker,
    macdonald_relation,
    pullback,
    spanning_monomials,
    theta,
)
from .duality import (
    IntersectionMatrix,
    intersection,
    intersection_matrix,
    inverse_poincare_dual,
    poincare_dual,
    signature,
)
from .invariants import (
    CliffordCertificate,
    ObstructionReport,
    canonical_class,
    characteristic_test,
    chern_classes,
    clifford_bound,
    euler_characteristic,
    hirzebruch_signature,
    km_admissible,
    rational_curve_degrees,
)
from .oracle import (
    GradedRingSpec,
    invariant_cup_check,
    invariant_rank,
    pushforward,
)

__version__ = "0.1.0"
