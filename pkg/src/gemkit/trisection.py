"""Condition (*), trisection reports and genus bounds for 5-colored graphs.

A graph in class G_s (unique residue missing color 4, colors 0..3 all
certified spherical) together with a cyclic color permutation ending in 4
decomposes the encoded compact 4-manifold into two 4-dimensional
handlebodies and a cone piece, all meeting in a closed surface.  Condition
(*) is the combinatorial test guaranteeing the third pairwise intersection
is a handlebody, making the decomposition a genuine trisection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import ColoredGraph, is_bipartite, residue_count, residues
from .errors import DimensionError, DisconnectedGraphError, PreconditionError, StructureError
from .gems import CERTIFIED_SPHERE, classify
from .genus import CyclicPermutation, regular_genus

# The three cyclic orders of {0,1,2,3} up to rotation and inverse; only this
# residual cycle matters once color 4 is pinned to the last slot.
HAT4_ORDERS: tuple[tuple[int, int, int, int], ...] = (
    (0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3))


@dataclass(frozen=True)
class StarOrdering:
    """An edge ordering witnessing condition (*).

    ``edges[j]`` is the j-th 4-colored edge selected and ``witnesses[j]`` a
    color i in 0..3 such that every 4-colored edge of the {4,i}-cycle through
    it was selected no later than step j.
    """

    edges: tuple[tuple[int, int], ...]
    witnesses: tuple[int, ...]


def _four_cycle_groups(graph: ColoredGraph) -> dict[int, dict[tuple[int, int], frozenset]]:
    """For each i in 0..3, map every 4-edge to the 4-edges of its {4,i}-cycle."""
    edges4 = graph.edges_of_color(4)
    groups: dict[int, dict[tuple[int, int], frozenset]] = {}
    for i in range(4):
        comp = graph.component_index((4, i))
        buckets: dict[int, list[tuple[int, int]]] = {}
        for e in edges4:
            buckets.setdefault(comp[e[0]], []).append(e)
        table = {}
        for members in buckets.values():
            cycle = frozenset(members)
            for e in members:
                table[e] = cycle
        groups[i] = table
    return groups


def condition_star(graph: ColoredGraph) -> Optional[StarOrdering]:
    """Greedy search for an ordering satisfying condition (*).

    Repeatedly selects any unselected 4-colored edge whose {4,i}-cycle, for
    some witness color i, has all its other 4-colored edges already selected.
    Addability never disappears as the selected set grows, so the greedy
    search succeeds exactly when some valid ordering exists.  Ties break on
    lowest edge (then lowest witness color) for reproducible witnesses.
    """
    if graph.dimension != 4:
        raise DimensionError("condition (*) is defined for dimension-4 graphs")
    if not graph.is_connected():
        raise DisconnectedGraphError("condition (*) requires a connected graph")
    edges4 = graph.edges_of_color(4)
    groups = _four_cycle_groups(graph)
    selected: set[tuple[int, int]] = set()
    order: list[tuple[int, int]] = []
    witnesses: list[int] = []
    while len(order) < len(edges4):
        progressed = False
        for e in edges4:
            if e in selected:
                continue
            for i in range(4):
                if groups[i][e] <= selected | {e}:
                    selected.add(e)
                    order.append(e)
                    witnesses.append(i)
                    progressed = True
                    break
            if progressed:
                break
        if not progressed:
            return None
    return StarOrdering(tuple(order), tuple(witnesses))


def is_valid_star_ordering(graph: ColoredGraph, ordering: StarOrdering) -> bool:
    """Check the defining property of a condition-(*) ordering."""
    edges4 = graph.edges_of_color(4)
    if sorted(ordering.edges) != sorted(edges4):
        return False
    groups = _four_cycle_groups(graph)
    prefix: set[tuple[int, int]] = set()
    for e, i in zip(ordering.edges, ordering.witnesses):
        prefix.add(e)
        if not groups[i][e] <= prefix:
            return False
    return True


def normalize_last4(permutation) -> tuple[int, int, int, int, int]:
    """Write a cyclic permutation of 0..4 with color 4 in the last slot.

    The leading 4-cycle is canonicalized (starts at 0, second entry smaller
    than fourth), which fixes the role assignment of the two handlebodies.
    Accepts a CyclicPermutation or any 5-color cyclic sequence.
    """
    if isinstance(permutation, CyclicPermutation):
        seq = permutation.colors
    else:
        seq = tuple(permutation)
    if sorted(seq) != [0, 1, 2, 3, 4]:
        raise PreconditionError(f"need a cyclic permutation of 0..4, got {seq}")
    k = seq.index(4)
    rotated = seq[k + 1:] + seq[:k]   # the four colors following 4 cyclically
    head = CyclicPermutation.from_sequence(rotated).colors
    return head + (4,)


def _hat4_residue(graph: ColoredGraph) -> ColoredGraph:
    parts = residues(graph, (0, 1, 2, 3))
    if len(parts) != 1:
        raise PreconditionError(
            f"need a unique residue missing color 4, found {len(parts)}")
    return parts[0].induced_graph


def rho_hat4(graph: ColoredGraph, order4: Sequence[int]) -> Fraction:
    """Genus of the unique 4-complement residue for one cyclic 4-order."""
    residue = _hat4_residue(graph)
    return regular_genus(residue, CyclicPermutation.from_sequence(order4))


@dataclass(frozen=True)
class TrisectionReport:
    """Invariants of the decomposition induced by one permutation."""

    epsilon: tuple[int, int, int, int, int]
    genus_h1: int
    genus_h2: int
    central_surface_euler: int
    central_surface_rho: Fraction
    orientable: bool
    surface_genus: int
    ggt_upper_bound: Fraction


def trisection_report(graph: ColoredGraph, permutation) -> TrisectionReport:
    """Handlebody genera and central-surface invariants for one permutation.

    Requires a connected dimension-4 graph in class G_s satisfying condition
    (*).  The central surface's Euler characteristic is assembled from
    bicolored cycle counts and independently cross-checked against the genus
    of the residue missing color 4.
    """
    eps = normalize_last4(permutation)
    cls = classify(graph)
    if not cls.in_class_gs:
        raise PreconditionError(
            "graph is not in class G_s (unique residue missing color 4 with "
            "colors 0..3 certified spherical)")
    if condition_star(graph) is None:
        raise PreconditionError("condition (*) fails: no trisection report")
    e0, e1, e2, e3 = eps[:4]
    p = graph.half_order

    def g(colors):
        return residue_count(graph, colors)

    def g_hat(c):
        return residue_count(graph, [d for d in range(5) if d != c])

    genus_h1 = g((e1, e3, 4)) - g_hat(e0) - g_hat(e2) + 1
    genus_h2 = g((e0, e2, 4)) - g_hat(e1) - g_hat(e3) + 1
    if genus_h1 < 0 or genus_h2 < 0:
        raise StructureError(
            f"negative handlebody genus ({genus_h1}, {genus_h2})")
    central_euler = (g((e0, e1)) + g((e1, e2)) + g((e2, e3)) + g((e3, e0))
                     - 2 * p)
    rho = rho_hat4(graph, eps[:4])
    if central_euler != 2 - 2 * rho:
        raise AssertionError(
            f"central surface mismatch: chi {central_euler} vs genus {rho}")
    orientable, _ = is_bipartite(graph)
    if orientable:
        if rho.denominator != 1:
            raise StructureError(f"non-integral genus {rho} on a bipartite graph")
        surface_genus = int(rho)
    else:
        surface_genus = int(2 * rho)
    return TrisectionReport(
        epsilon=eps,
        genus_h1=genus_h1,
        genus_h2=genus_h2,
        central_surface_euler=central_euler,
        central_surface_rho=rho,
        orientable=orientable,
        surface_genus=surface_genus,
        ggt_upper_bound=rho,
    )


def ggt_upper_bound(graph: ColoredGraph) -> Optional[tuple[Fraction, tuple[int, ...]]]:
    """Best trisection-genus bound this graph yields, with its witness.

    Minimizes the residue genus over the three inequivalent cyclic orders of
    0..3.  Returns None when condition (*) fails: the graph then provides no
    bound (which never means no trisection exists).
    """
    cls = classify(graph)
    if not cls.in_class_gs:
        raise PreconditionError(
            "graph is not in class G_s; no trisection bound defined")
    if condition_star(graph) is None:
        return None
    residue = _hat4_residue(graph)
    best = None
    witness = None
    for order4 in HAT4_ORDERS:
        value = regular_genus(residue, CyclicPermutation.from_sequence(order4))
        if best is None or value < best:
            best = value
            witness = order4 + (4,)
    return best, witness


def trisection_genus_bound_closed(graph: ColoredGraph, m: int) -> Optional[Fraction]:
    """Trisection-genus bound for the closed manifold capping the boundary.

    ``m`` declares (by pipeline provenance) that the boundary is a connected
    sum of m sphere bundles over the circle; m = 0 means the input is already
    closed.  The bound is the graph's own bound: capping with a genus-m
    handlebody keeps the central surface.  Returns None when no bound exists.
    """
    if m < 0:
        raise PreconditionError(f"need m >= 0, got {m}")
    result = ggt_upper_bound(graph)
    if result is None:
        return None
    return result[0]


def is_closed_certified(graph: ColoredGraph) -> bool:
    """Whether all five complement residues certify as spheres."""
    cls = classify(graph)
    return all(s == CERTIFIED_SPHERE
               for statuses in cls.sphere_certification.values()
               for s in statuses)


def betti_lower_bound(graph: ColoredGraph) -> int:
    """Lower bound for the trisection genus of a certified-closed gem.

    The sum of the first and second Z2 Betti numbers bounds the trisection
    genus of a closed 4-manifold from below.  Refused unless every
    complement residue certifies as a sphere, since the inequality is stated
    for closed manifolds only.
    """
    from .gems import z2_betti

    if not is_closed_certified(graph):
        raise PreconditionError(
            "lower bound requires all five complement residues certified "
            "as spheres (closed-manifold certificate)")
    betti = z2_betti(graph)
    return betti[1] + betti[2]
