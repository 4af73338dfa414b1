"""Finite commutative rings, their ideal structure, and projective lines.

The package builds fully tabulated finite commutative rings with unity
from a small specification grammar (prime fields, polynomial quotients,
direct products), computes their unit/zero-divisor partition, ideal
lattice, Jacobson radical and quotients, and enumerates the projective
line over each ring together with its neighbour/distant structure and
the point maps induced by canonical homomorphisms.
"""

from .errors import (
    BoundExceededError,
    BuildError,
    ElementError,
    HomomorphismError,
    IdealError,
    InducedMapError,
    RingAxiomError,
    RinglineError,
    RingSpecError,
)
from .homs import (
    QuotientRing,
    RingHom,
    check_hom,
    compose,
    hom_violation,
    identity_hom,
    kernel,
    quotient_ring,
    require_hom,
)
from .ideals import (
    Ideal,
    all_ideals,
    ideal_intersection,
    ideal_sum,
    is_local,
    jacobson_radical,
    jacobson_radical_quasiregular,
    maximal_ideals,
    principal_ideal,
)
from .projline import (
    LineCounts,
    LineMap,
    NeighbourGraph,
    NeighbourhoodProfile,
    PairClass,
    PointKind,
    ProjLine,
    ProjPoint,
    count_formulas,
    enumerate_points,
    induced_map,
    is_admissible,
    jacobson_points,
    neighbour_graph,
    neighbourhood,
    neighbourhood_profile,
    pair_class,
)
from .rings import (
    DEFAULT_MAX_ELEMENTS,
    ElementClass,
    FiniteRing,
    build_ring,
    build_ring_from_text,
    verify_ring,
)
from .specparse import (
    PolyQuotient,
    PrimeField,
    Product,
    RingSpec,
    parse_ring_spec,
    spec_to_string,
)

__version__ = "0.1.0"

__all__ = [
    "BoundExceededError",
    "BuildError",
    "DEFAULT_MAX_ELEMENTS",
    "ElementClass",
    "ElementError",
    "FiniteRing",
    "HomomorphismError",
    "Ideal",
    "IdealError",
    "InducedMapError",
    "LineCounts",
    "LineMap",
    "NeighbourGraph",
    "NeighbourhoodProfile",
    "PairClass",
    "PointKind",
    "PolyQuotient",
    "PrimeField",
    "Product",
    "ProjLine",
    "ProjPoint",
    "QuotientRing",
    "RingAxiomError",
    "RingHom",
    "RingSpec",
    "RingSpecError",
    "RinglineError",
    "all_ideals",
    "build_ring",
    "build_ring_from_text",
    "check_hom",
    "compose",
    "count_formulas",
    "enumerate_points",
    "hom_violation",
    "ideal_intersection",
    "ideal_sum",
    "identity_hom",
    "induced_map",
    "is_admissible",
    "is_local",
    "jacobson_points",
    "jacobson_radical",
    "jacobson_radical_quasiregular",
    "kernel",
    "maximal_ideals",
    "neighbour_graph",
    "neighbourhood",
    "neighbourhood_profile",
    "pair_class",
    "parse_ring_spec",
    "principal_ideal",
    "quotient_ring",
    "require_hom",
    "spec_to_string",
    "verify_ring",
]
