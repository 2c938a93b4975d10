"""Classification of colored graphs and Z2 homology of the dual complex."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .core import ColoredGraph, euler_characteristic, is_bipartite, residues
from .errors import DimensionError, DisconnectedGraphError
from .genus import regular_genus_min

CERTIFIED_SPHERE = "certified-sphere"
UNKNOWN = "unknown"

ORIENTABLE = "orientable"
NON_ORIENTABLE = "non-orientable"


def certify_sphere(graph: ColoredGraph) -> str:
    """One-sided sphere certificate via regular genus.

    Genus zero certifies the sphere of the graph's dimension; any positive
    minimum yields ``unknown``, never a negative verdict, because graph-level
    genus can exceed the genus of the encoded manifold.
    """
    if not graph.is_connected():
        raise DisconnectedGraphError("sphere certification requires a connected graph")
    if graph.dimension == 0:
        raise DimensionError("no sphere certificate for dimension-0 graphs")
    if graph.dimension == 1:
        # A connected 2-colored graph is a single bicolored cycle.
        return CERTIFIED_SPHERE
    value, _ = regular_genus_min(graph)
    return CERTIFIED_SPHERE if value == 0 else UNKNOWN


@dataclass(frozen=True)
class GemClassification:
    """Summary of the structural checks on a connected 5-colored graph."""

    connected: bool
    bipartite: bool
    residue_counts: dict[int, int]          # color c -> number of c-complement residues
    crystallization: bool
    in_class_gs: bool
    sphere_certification: dict[int, tuple[str, ...]]
    singular_color_candidates: tuple[int, ...]


def classify(graph: ColoredGraph) -> GemClassification:
    """Classify a connected graph of dimension 4.

    ``crystallization`` is the count condition (one residue per dropped
    color).  ``in_class_gs`` additionally demands that every residue missing
    a color in 0..3 certifies as a sphere, leaving 4 as the only candidate
    singular color.  Certification is one-sided, so
    ``singular_color_candidates`` over-approximates the singular colors.
    """
    if graph.dimension != 4:
        raise DimensionError(
            f"classification is specific to dimension 4, got {graph.dimension}")
    if not graph.is_connected():
        raise DisconnectedGraphError("classification requires a connected graph")
    bipartite, _ = is_bipartite(graph)
    counts = {}
    certification = {}
    candidates = []
    for c in graph.colors:
        other = [d for d in graph.colors if d != c]
        parts = residues(graph, other)
        counts[c] = len(parts)
        statuses = tuple(certify_sphere(r.induced_graph) for r in parts)
        certification[c] = statuses
        if any(s != CERTIFIED_SPHERE for s in statuses):
            candidates.append(c)
    crystallization = all(v == 1 for v in counts.values())
    in_class_gs = counts[4] == 1 and all(
        s == CERTIFIED_SPHERE for c in range(4) for s in certification[c])
    return GemClassification(
        connected=True,
        bipartite=bipartite,
        residue_counts=counts,
        crystallization=crystallization,
        in_class_gs=in_class_gs,
        sphere_certification=certification,
        singular_color_candidates=tuple(candidates),
    )


def orientability(graph: ColoredGraph) -> str:
    """Orientable iff bipartite, for graphs assumed to encode manifolds."""
    bipartite, _ = is_bipartite(graph)
    return ORIENTABLE if bipartite else NON_ORIENTABLE


# ---------------------------------------------------------------------------
# Z2 homology of the dual pseudocomplex
# ---------------------------------------------------------------------------
#
# The k-simplices (k < n) are the residues over color sets of size n - k and
# the n-simplices are the graph vertices.  A k-simplex keeps one face per
# color added to its color set: the component of the enlarged set containing
# it.  Ranks of the mod-2 boundary maps give the Betti numbers.

def _gf2_rank(columns: list[int]) -> int:
    """Rank over GF(2) of a matrix given as bit-packed column integers."""
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            bit = col.bit_length() - 1
            if bit in pivots:
                col ^= pivots[bit]
            else:
                pivots[bit] = col
                rank += 1
                break
    return rank


def z2_betti(graph: ColoredGraph) -> tuple[int, ...]:
    """Betti numbers over Z2 of the pseudocomplex encoded by the graph."""
    if not graph.is_connected():
        raise DisconnectedGraphError("Betti numbers require a connected graph")
    n = graph.dimension

    # Simplex ids per dimension k: (color set, component index) with
    # components numbered in least-vertex order; k = n uses plain vertices.
    comp_index: dict[tuple[int, ...], list[int]] = {}
    comp_counts: dict[tuple[int, ...], int] = {}
    offsets: list[dict[tuple[int, ...], int]] = []
    sizes = []
    for k in range(n):
        size = n - k
        offset = {}
        total = 0
        for combo in itertools.combinations(range(n + 1), size):
            idx = graph.component_index(combo)
            comp_index[combo] = idx
            count = max(idx) + 1
            comp_counts[combo] = count
            offset[combo] = total
            total += count
        offsets.append(offset)
        sizes.append(total)
    sizes.append(graph.order)

    ranks = [0] * (n + 2)  # ranks[k] = rank of the boundary map from dim k
    for k in range(1, n + 1):
        columns = []
        if k < n:
            size = n - k
            for combo in itertools.combinations(range(n + 1), size):
                idx = comp_index[combo]
                for comp in range(comp_counts[combo]):
                    rep = idx.index(comp)
                    bits = 0
                    for extra in range(n + 1):
                        if extra in combo:
                            continue
                        bigger = tuple(sorted(combo + (extra,)))
                        face = offsets[k - 1][bigger] + comp_index[bigger][rep]
                        bits ^= 1 << face
                    columns.append(bits)
        else:
            for v in range(graph.order):
                bits = 0
                for c in range(n + 1):
                    single = (c,)
                    face = offsets[n - 1][single] + comp_index[single][v]
                    bits ^= 1 << face
                columns.append(bits)
        ranks[k] = _gf2_rank(columns)

    betti = tuple(sizes[k] - ranks[k] - ranks[k + 1] for k in range(n + 1))
    chi = euler_characteristic(graph)
    alternating = sum((-1) ** k * b for k, b in enumerate(betti))
    if alternating != chi:
        raise AssertionError(
            f"Betti/Euler mismatch: sum {alternating} vs chi {chi}")
    return betti
