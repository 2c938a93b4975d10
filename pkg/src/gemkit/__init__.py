"""gemkit: edge-colored graphs encoding PL 4-manifolds.

Validation and a text file format, regular genus, gem classification with Z2
homology, combinatorial moves (pair switches, dipoles, connected sums) and
trisection-genus bounds, as a library and a `gemkit` command-line tool.
"""

from pathlib import Path

from .core import (
    ColoredGraph,
    Residue,
    ResidueTable,
    euler_characteristic,
    is_bipartite,
    load,
    order_two_graph,
    pair_counts,
    parse,
    residue_count,
    residue_table,
    residues,
    save,
    serialize,
    two_coloring,
)
from .errors import (
    DimensionError,
    DisconnectedGraphError,
    GemError,
    GemParseError,
    InvalidGraphError,
    MoveError,
    PreconditionError,
    StructureError,
)
from .gems import (
    CERTIFIED_SPHERE,
    UNKNOWN,
    GemClassification,
    certify_sphere,
    classify,
    orientability,
    z2_betti,
)
from .genus import (
    CyclicPermutation,
    enumerate_permutations,
    format_half_integer,
    genus_table,
    regular_genus,
    regular_genus_min,
)
from .moves import (
    DipoleSpec,
    Isomorphism,
    MoveRecord,
    PipelineRecord,
    RhoPair,
    cancel_dipole,
    connected_sum,
    factorized_rho3_switch,
    find_dipoles,
    find_rho_pairs,
    fingerprint,
    insert_dipole,
    involved_colors,
    iso_check,
    pair_count_deltas,
    replay,
    rho1_pipeline,
    switch_rho_pair,
)
from .trisection import (
    HAT4_ORDERS,
    StarOrdering,
    TrisectionReport,
    betti_lower_bound,
    condition_star,
    ggt_upper_bound,
    is_closed_certified,
    trisection_genus_bound_closed,
    trisection_report,
)

__version__ = "0.1.0"


def corpus_dir() -> Path:
    """Directory of the gem files shipped with the package."""
    return Path(__file__).parent / "data"


def corpus_files() -> list[Path]:
    """The shipped gem files, sorted by name."""
    return sorted(corpus_dir().glob("*.gem"))
