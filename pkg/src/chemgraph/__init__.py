"""Extremal chemical graphs for degree-based topological indices.

A chemical graph here is a connected simple graph with maximum degree 3,
order at least 7 and size at most (3n-3)/2.  The package evaluates 33
classical degree-based indices on edge censuses, decides which of twelve
census-defined families contains the extremal graphs of an index, produces
witness graphs, and verifies every characterization against a brute-force
isomorphism-free enumeration oracle.
"""

from .census import (
    Census,
    InconsistentCensusError,
    RealizabilityResult,
    TransformDomainError,
    TransformVector,
    VertexCounts,
    apply_transform,
    is_nm_preserving,
    is_realizable,
    order_size,
    vertex_counts,
)
from .classify import (
    ClassificationResult,
    ClassificationRule,
    RULES,
    UNCLASSIFIED,
    UNION_F1_F3,
    VerificationReport,
    classify,
    predicted_censuses,
    verify_characterization,
)
from .families import (
    FamilyCensusSet,
    FamilyId,
    SearchBudgetExceeded,
    chemical_size_range,
    construct_f1_explicit,
    family_censuses,
    is_member,
    realize_census,
)
from .graphs import (
    ChemicalCheck,
    Graph,
    Graph6Error,
    complete_graph,
    cycle_graph,
    edge_census,
    is_chemical_graph,
    parse_graph6,
    path_graph,
    write_graph6,
)
from .indices import (
    BUILTINS,
    DEFAULT_EPS,
    IndexDefinition,
    RR_RANDIC,
    VProfile,
    builtin,
    builtin_names,
    complement,
    evaluate,
    index_from_json,
    index_to_json,
    lookup,
    v_profile,
)
from .oracle import (
    ExtremalReport,
    census_atlas,
    enumerate_connected_maxdeg3,
    extremal_censuses,
)

__version__ = "0.1.0"
