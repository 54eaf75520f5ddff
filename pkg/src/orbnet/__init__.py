"""Quadratic orbital networks over Z_n.

Graphs on the residues mod n whose edges come from the maps x -> x^2 + a_i,
together with their dynamical structure (branches, attractors, garden of
eden), graph invariants (cliques, Euler characteristic, diameter, inductive
dimension, planarity) and an exhaustive scan/verification engine.
"""

from .branches import (
    branch_cover_number,
    branch_graph,
    branch_masks,
    positively_connected,
    strongly_connected_components,
)
from .dynamics import (
    FunctionalDigraph,
    Modulus,
    QuadraticFamily,
    apply_map,
    attractor_cycles,
    branch,
    garden_of_eden,
    is_fermat_prime,
    is_prime,
    is_primitive_root,
    iterate_word,
    multiplicative_order,
    primes_between,
)
from .errors import CheckpointError, UnsupportedArityError, UsageError
from .graphs import (
    Graph,
    InducedSubgraph,
    build_orbital_graph,
    export_graph,
    graph_from_json,
    unit_sphere,
)
from .invariants import (
    INFINITE,
    CliqueVector,
    InvariantReport,
    clique_counts,
    connected_components,
    cycle_rank,
    degree_histogram,
    diameter,
    euler_characteristic,
    inductive_dimension,
)
from .planarity import (
    PlanarityVerdict,
    is_planar,
    kuratowski_witness,
    verify_embedding,
    verify_kuratowski,
)
from .survey import (
    ALL_INVARIANTS,
    CSV_HEADER,
    LEMMA_SETS,
    LEMMAS,
    PREDICATES,
    LemmaReport,
    ScanRecord,
    analyze_family,
    compute_record,
    enumerate_space,
    find_exceptions,
    records_json,
    resolve_lemma_ids,
    scan_space,
    space_size,
    summarize,
    verify_lemmas,
    write_csv,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_INVARIANTS",
    "CSV_HEADER",
    "CheckpointError",
    "CliqueVector",
    "FunctionalDigraph",
    "Graph",
    "INFINITE",
    "InducedSubgraph",
    "InvariantReport",
    "LEMMAS",
    "LEMMA_SETS",
    "LemmaReport",
    "Modulus",
    "PREDICATES",
    "PlanarityVerdict",
    "QuadraticFamily",
    "ScanRecord",
    "UnsupportedArityError",
    "UsageError",
    "analyze_family",
    "apply_map",
    "attractor_cycles",
    "branch",
    "branch_cover_number",
    "branch_graph",
    "branch_masks",
    "build_orbital_graph",
    "clique_counts",
    "compute_record",
    "connected_components",
    "cycle_rank",
    "degree_histogram",
    "diameter",
    "enumerate_space",
    "euler_characteristic",
    "export_graph",
    "find_exceptions",
    "garden_of_eden",
    "graph_from_json",
    "inductive_dimension",
    "is_fermat_prime",
    "is_planar",
    "is_prime",
    "is_primitive_root",
    "iterate_word",
    "kuratowski_witness",
    "multiplicative_order",
    "positively_connected",
    "primes_between",
    "records_json",
    "resolve_lemma_ids",
    "scan_space",
    "space_size",
    "strongly_connected_components",
    "summarize",
    "unit_sphere",
    "verify_embedding",
    "verify_kuratowski",
    "verify_lemmas",
    "write_csv",
    "__version__",
]
