"""Finite commutative rings, duplications along an ideal, and their
zero-divisor graphs, with an exhaustive verification harness."""

from .amalgam import (
    AmalgamRing,
    NotAnIdealError,
    StructureChecks,
    ZDClassification,
    amalgamated_duplication,
    classify_zero_divisors,
    idealization,
    structure_checks,
    to_product_rep,
    verify_product_embedding,
)
from .graphs import (
    DisconnectedGraphError,
    GraphInvariants,
    ZDGraph,
    build_graph,
    complete_bipartition,
    diameter,
    distance,
    edge_count,
    export_dot,
    girth,
    graph_invariants,
    is_complete,
    is_complete_bipartite,
    is_connected,
    is_star,
    universal_vertices,
)
from .rings import (
    FiniteRing,
    Ideal,
    all_ideals,
    annihilator,
    annihilator_pair,
    direct_product,
    ideal_from_generators,
    ideal_violations,
    is_domain,
    is_field,
    is_ideal,
    is_prime_ideal,
    is_reduced,
    make_zn,
    minimal_primes,
    prime_ideals,
    principal_ideal,
    product_ring,
    verify_ring_axioms,
    zero_divisors,
    zset_square_zero,
)
from .specs import SpecError, expand_family, parse_ideal_spec, parse_ring_spec
from .theorems import (
    Instance,
    InstanceRecord,
    PreconditionError,
    Status,
    SweepReport,
    TheoremId,
    VerificationOutcome,
    check_annihilators_meet_ideal,
    check_completeness_equivalence,
    check_diam_three_persists,
    check_diam_two_preserved,
    check_domain_equivalences,
    check_girth_classification,
    check_ideal_zdivs_diam_three,
    check_nonideal_zdivs_diam_three,
    check_universal_vertex_diam_three,
    check_universal_vertex_prime_zdivs,
    instance_invariant_violations,
    run_all,
    sweep,
)

__version__ = "0.1.0"
