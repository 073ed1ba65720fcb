"""Exact lattice algebra for six maximal-order space groups: singular graphs,
covering lifts, and the resulting classification tables."""

from .classify import (
    CASES,
    SCHEMA_VERSION,
    ClassificationRow,
    ClaimCheck,
    GenusEntry,
    Theorem1Cell,
    VerificationReport,
    classify_case,
    labeled_marked_edges,
    report_to_json,
    report_to_text,
    rows_to_csv,
    rows_to_json,
    rows_to_text,
    table_to_csv,
    table_to_json,
    table_to_text,
    theorem1_cells,
    theorem1_table,
    verify_claims,
    verify_tables,
)
from .errors import (
    ClosureOverflow,
    Disconnected,
    FrameMismatch,
    NotASubgroup,
    RankDeficient,
    SignatureCountMismatch,
    TorsymError,
    UnknownGroup,
    UnmatchedLattice,
)
from .lattices import (
    SubgroupHNF,
    TRIVIAL_SUBGROUP,
    coset_reps,
    covolume,
    hnf,
    index,
    intersect,
    join,
    member,
    vec,
)
from .periodic_graphs import (
    PeriodicGraph,
    SingularEdge,
    cycle_image_lattice,
    edge_orbit_graph,
    lift_connected,
    lift_connected_bruteforce,
    lift_genus,
    marked_edges,
    singular_graph,
    suppress_valence_two,
    to_obj_lines,
)
from .spacegroups import (
    GROUP_NAMES,
    Axis,
    Isometry,
    SpaceGroup,
    canonical_group_name,
    fixed_axis,
    make_group,
    stabilizer,
    stabilizer_order,
)
from .sublattices import (
    FAMILY_TAGS,
    LatticeFamily,
    enumerate_sublattices,
    instantiate,
    invariant_sublattices,
    is_invariant,
    match_family,
    normal_translation_subgroups,
)

__all__ = [
    "CASES",
    "SCHEMA_VERSION",
    "ClassificationRow",
    "ClaimCheck",
    "GenusEntry",
    "Theorem1Cell",
    "VerificationReport",
    "classify_case",
    "labeled_marked_edges",
    "report_to_json",
    "report_to_text",
    "rows_to_csv",
    "rows_to_json",
    "rows_to_text",
    "table_to_csv",
    "table_to_json",
    "table_to_text",
    "theorem1_cells",
    "theorem1_table",
    "verify_claims",
    "verify_tables",
    "ClosureOverflow",
    "Disconnected",
    "FrameMismatch",
    "NotASubgroup",
    "RankDeficient",
    "SignatureCountMismatch",
    "TorsymError",
    "UnknownGroup",
    "UnmatchedLattice",
    "SubgroupHNF",
    "TRIVIAL_SUBGROUP",
    "coset_reps",
    "covolume",
    "hnf",
    "index",
    "intersect",
    "join",
    "member",
    "vec",
    "PeriodicGraph",
    "SingularEdge",
    "cycle_image_lattice",
    "edge_orbit_graph",
    "lift_connected",
    "lift_connected_bruteforce",
    "lift_genus",
    "marked_edges",
    "singular_graph",
    "suppress_valence_two",
    "to_obj_lines",
    "GROUP_NAMES",
    "Axis",
    "Isometry",
    "SpaceGroup",
    "canonical_group_name",
    "fixed_axis",
    "make_group",
    "stabilizer",
    "stabilizer_order",
    "FAMILY_TAGS",
    "LatticeFamily",
    "enumerate_sublattices",
    "instantiate",
    "invariant_sublattices",
    "is_invariant",
    "match_family",
    "normal_translation_subgroups",
]

__version__ = "0.1.0"
