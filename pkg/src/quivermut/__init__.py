"""quivermut: exact quiver mutation, surface triangulations, class enumeration."""

from .quiver import (
    DegreePair,
    Quiver,
    are_isomorphic,
    arrow_count,
    canonical_form,
    canonical_key,
    degrees,
    embeds_as_full_subquiver,
    full_subquiver,
    is_connected,
    mutate,
    quiver_from_arrows,
    quiver_from_json,
    quiver_to_dot,
    quiver_to_json,
    relabel,
)
from .mutation_class import (
    ClassReport,
    WalkReport,
    class_report_to_json,
    constant_arrow_verdict,
    enumerate_class,
    random_mutation_walk,
    walk_report_to_json,
)
from .surface import (
    ARC,
    BOUNDARY,
    Edge,
    MarkedSurface,
    SurfaceStats,
    Triangulation,
    add_boundary_marked_point,
    add_puncture_on_arc,
    classify_arc,
    flip,
    has_spade_triangle,
    quiver_of,
    triangulation_from_json,
    triangulation_to_json,
    validate,
)
from .generators import (
    EXCEPTIONAL_NAMES,
    a_n_quiver,
    exceptional_quiver,
    exists_constant_class,
    markov_quiver,
    polygon_fan_triangulation,
    qg0_quiver,
    qg0_triangulation,
    qgb_quiver,
    qgb_triangulation,
)
from .verify import (
    ClaimResult,
    has_failure,
    report_to_json,
    run_claims,
    verify_an_embedding,
    verify_corollary,
    verify_exceptional,
    verify_flip_mutation,
    verify_lemma_addb,
    verify_lemma_addp,
    verify_prop_in1out1,
    verify_theorem_const,
)

__all__ = [
    "DegreePair",
    "Quiver",
    "are_isomorphic",
    "arrow_count",
    "canonical_form",
    "canonical_key",
    "degrees",
    "embeds_as_full_subquiver",
    "full_subquiver",
    "is_connected",
    "mutate",
    "quiver_from_arrows",
    "quiver_from_json",
    "quiver_to_dot",
    "quiver_to_json",
    "relabel",
    "ClassReport",
    "WalkReport",
    "class_report_to_json",
    "constant_arrow_verdict",
    "enumerate_class",
    "random_mutation_walk",
    "walk_report_to_json",
    "ARC",
    "BOUNDARY",
    "Edge",
    "MarkedSurface",
    "SurfaceStats",
    "Triangulation",
    "add_boundary_marked_point",
    "add_puncture_on_arc",
    "classify_arc",
    "flip",
    "has_spade_triangle",
    "quiver_of",
    "triangulation_from_json",
    "triangulation_to_json",
    "validate",
    "EXCEPTIONAL_NAMES",
    "a_n_quiver",
    "exceptional_quiver",
    "exists_constant_class",
    "markov_quiver",
    "polygon_fan_triangulation",
    "qg0_quiver",
    "qg0_triangulation",
    "qgb_quiver",
    "qgb_triangulation",
    "ClaimResult",
    "has_failure",
    "report_to_json",
    "run_claims",
    "verify_an_embedding",
    "verify_corollary",
    "verify_exceptional",
    "verify_flip_mutation",
    "verify_lemma_addb",
    "verify_lemma_addp",
    "verify_prop_in1out1",
    "verify_theorem_const",
]
