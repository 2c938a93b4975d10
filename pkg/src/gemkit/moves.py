"""Combinatorial moves on colored graphs: pair switches, dipoles, sums.

All moves are pure: the input graph is never modified and the rewired graph
is returned as a new value.  Records of applied moves carry enough data to
replay a pipeline and to audit the cycle-count bookkeeping that the
trisection bounds rely on.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .core import (
    ColoredGraph,
    pair_counts,
    residue_count,
    residues,
    serialize,
    two_coloring,
)
from .errors import MoveError, PreconditionError, StructureError
from .gems import classify
from .genus import CyclicPermutation, format_half_integer, regular_genus
from .trisection import HAT4_ORDERS, StarOrdering, condition_star


def fingerprint(graph: ColoredGraph) -> str:
    """Short stable digest of a graph's canonical serialization."""
    return hashlib.sha256(serialize(graph).encode("utf-8")).hexdigest()[:16]


# ---------------------------------------------------------------------------
# Rho pairs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RhoPair:
    """Two same-colored edges sharing the bicolored cycle of each involved color.

    ``involved`` lists exactly the colors c for which both edges lie on one
    {color, c}-cycle; it is non-empty (h >= 1) and never contains ``color``.
    The four endpoints are automatically distinct because each color class
    is a perfect matching.
    """

    color: int
    edge_a: tuple[int, int]
    edge_b: tuple[int, int]
    involved: tuple[int, ...]

    @property
    def h(self) -> int:
        return len(self.involved)


def involved_colors(graph: ColoredGraph, color: int,
                    edge_a: tuple[int, int], edge_b: tuple[int, int]) -> tuple[int, ...]:
    """Colors whose bicolored cycle (with ``color``) contains both edges."""
    out = []
    for c in graph.colors:
        if c == color:
            continue
        comp = graph.component_index((color, c))
        if comp[edge_a[0]] == comp[edge_b[0]]:
            out.append(c)
    return tuple(out)


def find_rho_pairs(graph: ColoredGraph, color: int,
                   required_involved: Iterable[int] = ()) -> list[RhoPair]:
    """All pairs of ``color``-edges whose involved colors cover the request.

    Filtering is exact: a pair involving strictly more colors than requested
    is still returned, with its true involved set.  Pairs sharing no cycle at
    all are not pairs in this sense and are omitted.
    """
    required = tuple(sorted(set(required_involved)))
    if color in required:
        raise MoveError(f"color {color} cannot be among its own involved colors")
    comp_maps = {}
    for c in graph.colors:
        if c != color:
            comp_maps[c] = graph.component_index((color, c))
    pairs = []
    edges = graph.edges_of_color(color)
    for ea, eb in itertools.combinations(edges, 2):
        involved = tuple(c for c in graph.colors if c != color
                         and comp_maps[c][ea[0]] == comp_maps[c][eb[0]])
        if involved and set(required) <= set(involved):
            pairs.append(RhoPair(color, ea, eb, involved))
    return pairs


def _check_pair(graph: ColoredGraph, pair: RhoPair) -> None:
    i = pair.color
    for u, v in (pair.edge_a, pair.edge_b):
        if not graph.has_edge(u, v, i):
            raise MoveError(f"({u},{v}) is not a {i}-colored edge of this graph")
    if pair.edge_a == pair.edge_b:
        raise MoveError("a pair needs two distinct edges")
    actual = involved_colors(graph, i, pair.edge_a, pair.edge_b)
    if actual != tuple(sorted(pair.involved)):
        raise MoveError(
            f"stale pair: involved colors are {actual}, not {pair.involved}")
    if not actual:
        raise MoveError("edges sharing no bicolored cycle do not form a pair")


def resolve_switch_variant(graph: ColoredGraph, pair: RhoPair,
                           variant: str = "canonical") -> str:
    """Concrete reconnection ("A" or "B") for a requested switch variant.

    Variant A pairs lowest endpoints together; canonical switching picks the
    variant whose new edges join opposite bipartition classes and falls back
    to A on graphs with no bipartition.
    """
    if variant in ("A", "B"):
        return variant
    if variant != "canonical":
        raise MoveError(f"unknown switch variant {variant!r}")
    classes = two_coloring(graph)
    if classes is None:
        return "A"
    a, b = pair.edge_a
    c, d = pair.edge_b
    cross_a = classes[a] != classes[c] and classes[b] != classes[d]
    cross_b = classes[a] != classes[d] and classes[b] != classes[c]
    if cross_a == cross_b:
        raise StructureError(
            "no bipartition-preserving reconnection exists for this pair")
    return "A" if cross_a else "B"


def switch_rho_pair(graph: ColoredGraph, pair: RhoPair,
                    variant: str = "canonical") -> ColoredGraph:
    """Cancel the pair's edges and reconnect their endpoints crosswise.

    Variant A joins (a,c) and (b,d) for edges (a,b), (c,d); variant B joins
    (a,d) and (b,c).  Switching the reversed pair afterwards restores the
    original graph.
    """
    _check_pair(graph, pair)
    chosen = resolve_switch_variant(graph, pair, variant)
    a, b = pair.edge_a
    c, d = pair.edge_b
    row = list(graph.matching(pair.color))
    if chosen == "A":
        joins = ((a, c), (b, d))
    else:
        joins = ((a, d), (b, c))
    for u, v in joins:
        row[u] = v
        row[v] = u
    matchings = [list(graph.matching(col)) for col in graph.colors]
    matchings[pair.color] = row
    return ColoredGraph.from_matchings(graph.dimension, matchings)


def pair_count_deltas(before: ColoredGraph,
                      after: ColoredGraph) -> dict[tuple[int, int], int]:
    """Per color pair, the change in bicolored cycle counts."""
    b = pair_counts(before)
    a = pair_counts(after)
    return {pair: a[pair] - b[pair] for pair in b}


def rho1_delta_law(deltas: dict[tuple[int, int], int], color: int) -> bool:
    """Check the cycle-count changes of a switch of a pair involving only 4.

    The {color,4}-cycle splits (+1), every {color,j}-count with j in 0..3
    drops by one, and every count not touching ``color`` is unchanged.
    """
    for (a, b), delta in deltas.items():
        pair = {a, b}
        if pair == {color, 4}:
            expected = 1
        elif color in pair and 4 not in pair:
            expected = -1
        else:
            expected = 0
        if delta != expected:
            return False
    return True


# ---------------------------------------------------------------------------
# Dipoles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DipoleSpec:
    """Two vertices joined by exactly the edges of ``colors``.

    Proper means the vertices lie in different components once only the
    complementary colors are kept; only proper dipoles may be cancelled
    without changing the encoded manifold.
    """

    u: int
    v: int
    colors: tuple[int, ...]
    proper: bool

    @property
    def size(self) -> int:
        return len(self.colors)


def _dipole_at(graph: ColoredGraph, u: int, v: int) -> Optional[DipoleSpec]:
    joining = tuple(c for c in graph.colors if graph.partner(u, c) == v)
    if not joining or len(joining) > graph.dimension:
        return None
    complement = [c for c in graph.colors if c not in joining]
    comp = graph.component_index(complement)
    return DipoleSpec(u, v, joining, proper=comp[u] != comp[v])


def find_dipoles(graph: ColoredGraph, size: int) -> list[DipoleSpec]:
    """All vertex pairs joined by exactly ``size`` parallel edges."""
    if not (1 <= size <= graph.dimension):
        raise MoveError(
            f"dipole size must be in 1..{graph.dimension}, got {size}")
    out = []
    seen = set()
    for c in graph.colors:
        for u, v in graph.edges_of_color(c):
            if (u, v) in seen:
                continue
            seen.add((u, v))
            spec = _dipole_at(graph, u, v)
            if spec is not None and spec.size == size:
                out.append(spec)
    out.sort(key=lambda s: (s.u, s.v))
    return out


def cancel_dipole(graph: ColoredGraph, spec: DipoleSpec) -> ColoredGraph:
    """Delete the dipole vertices and weld the hanging same-colored edges.

    Refused for improper dipoles, where cancellation is not guaranteed to
    preserve the encoded manifold.
    """
    actual = _dipole_at(graph, spec.u, spec.v)
    if actual is None or actual.colors != tuple(sorted(spec.colors)):
        raise MoveError(
            f"vertices {spec.u},{spec.v} are not joined by exactly colors "
            f"{tuple(sorted(spec.colors))}")
    if not actual.proper:
        raise MoveError(
            f"dipole {spec.u},{spec.v} is not proper; cancellation refused")
    u, v = spec.u, spec.v
    mapping = {}
    for w in range(graph.order):
        if w not in (u, v):
            mapping[w] = len(mapping)
    edges = []
    for a, b, c in graph.edges():
        if u in (a, b) or v in (a, b):
            continue
        edges.append((mapping[a], mapping[b], c))
    for c in graph.colors:
        if c in actual.colors:
            continue
        x = graph.partner(u, c)
        y = graph.partner(v, c)
        if x == y:
            raise StructureError(
                f"welding color {c} would create a loop at vertex {x}")
        edges.append((mapping[x], mapping[y], c))
    return ColoredGraph(graph.dimension, edges, order=graph.order - 2)


def insert_dipole(graph: ColoredGraph,
                  attachment: dict[int, tuple[int, int]],
                  dipole_colors: Iterable[int]) -> tuple[ColoredGraph, DipoleSpec]:
    """Insert two vertices joined by ``dipole_colors``, cutting chosen edges.

    ``attachment`` maps each remaining color c to one existing c-edge given
    as an ordered pair (s, t): s is rewired to the first new vertex and t to
    the second.  Properness of the created dipole is not guaranteed; it is
    checked on the result and reported in the returned spec.
    """
    dipole_colors = tuple(sorted(set(dipole_colors)))
    if not (1 <= len(dipole_colors) <= graph.dimension):
        raise MoveError(
            f"dipole size must be in 1..{graph.dimension}, "
            f"got {len(dipole_colors)}")
    for c in dipole_colors:
        if c not in graph.colors:
            raise MoveError(f"color {c} out of range")
    complement = tuple(c for c in graph.colors if c not in dipole_colors)
    if tuple(sorted(attachment)) != complement:
        raise MoveError(
            f"attachment must select one edge for each color in {complement}")
    for c, (s, t) in attachment.items():
        if not graph.has_edge(s, t, c):
            raise MoveError(f"({s},{t}) is not a {c}-colored edge")
    a = graph.order
    b = graph.order + 1
    cut = {tuple(sorted(attachment[c])) + (c,) for c in attachment}
    edges = [e for e in graph.edges() if e not in cut]
    for c in dipole_colors:
        edges.append((a, b, c))
    for c, (s, t) in attachment.items():
        edges.append((s, a, c))
        edges.append((b, t, c))
    new_graph = ColoredGraph(graph.dimension, edges, order=graph.order + 2)
    spec = _dipole_at(new_graph, a, b)
    if spec is None or spec.colors != dipole_colors:
        raise MoveError("attachment wired the new vertices inconsistently")
    return new_graph, spec


# ---------------------------------------------------------------------------
# Factorized switch of a pair inside the residue missing color 4
# ---------------------------------------------------------------------------

def factorized_rho3_switch(graph: ColoredGraph, pair: RhoPair) -> ColoredGraph:
    """Realize a residue-level pair switch as edge insertion plus dipole drop.

    The pair must consist of i-colored edges (i in 0..3) lying on a common
    {i,j}-cycle for every other j in 0..3, inside the unique residue missing
    color 4.  A two-vertex piece carrying a fresh 4-colored edge is inserted
    (splicing the pair's first edge and the attachments of one endpoint of
    the second), creating a 3-dipole whose cancellation leaves a graph
    isomorphic to the directly switched one.  Order is unchanged overall.
    """
    if graph.dimension != 4:
        raise PreconditionError("factorized switch is defined for dimension 4")
    if residue_count(graph, (0, 1, 2, 3)) != 1:
        raise PreconditionError("need a unique residue missing color 4")
    i = pair.color
    if i not in range(4):
        raise MoveError(f"pair color must be in 0..3, got {i}")
    _check_pair(graph, pair)
    others = [j for j in range(4) if j != i]
    if not set(others) <= set(pair.involved):
        raise MoveError(
            f"pair does not share every {{{i},j}}-cycle inside the residue "
            f"missing color 4 (involved: {pair.involved})")
    v1, v2 = pair.edge_a
    v3, _v4 = pair.edge_b
    classes = two_coloring(graph)
    if classes is None:
        x, other = v1, v2
    else:
        # Pick the splice orientation matching the canonical direct switch.
        if classes[v1] != classes[v3]:
            x, other = v1, v2
        else:
            x, other = v2, v1
    attachment = {i: (x, other)}
    for j in others:
        attachment[j] = (graph.partner(v3, j), v3)
    inserted, _ = insert_dipole(graph, attachment, dipole_colors=(4,))
    created = _dipole_at(inserted, v3, graph.order + 1)
    if created is None or created.colors != tuple(others):
        raise StructureError("factorization did not create the expected 3-dipole")
    if not created.proper:
        raise MoveError(
            "factorization unavailable: the created 3-dipole is not proper "
            "(the pair also shares the cycle with color 4)")
    return cancel_dipole(inserted, created)


# ---------------------------------------------------------------------------
# Graph connected sum
# ---------------------------------------------------------------------------

def connected_sum(graph1: ColoredGraph, v1: int,
                  graph2: ColoredGraph, v2: int) -> ColoredGraph:
    """Delete one vertex from each graph and weld same-colored hanging edges."""
    if graph1.dimension != graph2.dimension:
        raise MoveError("connected sum needs graphs of equal dimension")
    if not graph1.is_connected() or not graph2.is_connected():
        raise MoveError("connected sum needs connected graphs")
    for graph, v in ((graph1, v1), (graph2, v2)):
        if not (0 <= v < graph.order):
            raise MoveError(f"vertex {v} out of range 0..{graph.order - 1}")
    map1 = {}
    for w in range(graph1.order):
        if w != v1:
            map1[w] = len(map1)
    offset = len(map1)
    map2 = {}
    for w in range(graph2.order):
        if w != v2:
            map2[w] = offset + len(map2)
    edges = []
    for a, b, c in graph1.edges():
        if v1 not in (a, b):
            edges.append((map1[a], map1[b], c))
    for a, b, c in graph2.edges():
        if v2 not in (a, b):
            edges.append((map2[a], map2[b], c))
    for c in graph1.colors:
        x = graph1.partner(v1, c)
        y = graph2.partner(v2, c)
        edges.append((map1[x], map2[y], c))
    result = ColoredGraph(graph1.dimension, edges,
                          order=graph1.order + graph2.order - 2)
    if not result.is_connected():
        raise StructureError("connected sum produced a disconnected graph")
    return result


# ---------------------------------------------------------------------------
# Move records and replay
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MoveRecord:
    """One applied move: kind, parameters and the digest of the result."""

    kind: str
    params: dict
    fingerprint: str
    meta: dict = field(default_factory=dict)

    def to_line(self) -> str:
        return json.dumps(
            {"kind": self.kind, "params": self.params,
             "fingerprint": self.fingerprint, "meta": self.meta},
            sort_keys=True)

    @classmethod
    def from_line(cls, line: str) -> "MoveRecord":
        data = json.loads(line)
        return cls(kind=data["kind"], params=data["params"],
                   fingerprint=data["fingerprint"], meta=data.get("meta", {}))


def replay(initial: ColoredGraph, records: Sequence[MoveRecord],
           others: Optional[dict[str, ColoredGraph]] = None) -> ColoredGraph:
    """Re-apply a move log, verifying each post-move fingerprint."""
    current = initial
    for k, record in enumerate(records, start=1):
        params = record.params
        if record.kind == "rho-switch":
            ea = tuple(params["edge_a"])
            eb = tuple(params["edge_b"])
            color = params["color"]
            pair = RhoPair(color, ea, eb,
                           involved_colors(current, color, ea, eb))
            current = switch_rho_pair(current, pair, params["variant_used"])
        elif record.kind == "dipole-cancel":
            spec = _dipole_at(current, params["u"], params["v"])
            if spec is None:
                raise MoveError(f"replay step {k}: dipole vanished")
            current = cancel_dipole(current, spec)
        elif record.kind == "dipole-insert":
            attachment = {int(c): tuple(e) for c, e in params["attachment"].items()}
            current, _ = insert_dipole(current, attachment,
                                       tuple(params["colors"]))
        elif record.kind == "connected-sum":
            if not others or params["other"] not in others:
                raise MoveError(
                    f"replay step {k}: second summand "
                    f"{params['other']} not supplied")
            current = connected_sum(current, params["v1"],
                                    others[params["other"]], params["v2"])
        else:
            raise MoveError(f"replay step {k}: unknown move kind {record.kind!r}")
        if fingerprint(current) != record.fingerprint:
            raise MoveError(f"replay step {k}: fingerprint mismatch")
    return current


# ---------------------------------------------------------------------------
# Switch pipeline raising the residue genus one switch at a time
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PipelineRecord:
    """Outcome of a sequence of canonical switches of pairs involving only 4.

    ``bound`` is the smallest base residue genus plus the number of switches;
    it only applies when the final graph stays in class G_s and satisfies
    condition (*), which ``bound_available`` reports.
    """

    color: int
    switch_count: int
    initial: ColoredGraph
    final: ColoredGraph
    steps: tuple[MoveRecord, ...]
    base_residue_genus: dict[tuple[int, ...], Fraction]
    final_residue_genus: dict[tuple[int, ...], Fraction]
    bound: Fraction
    bound_available: bool
    in_class_gs: bool
    star: Optional[StarOrdering]
    notes: tuple[str, ...]


def _hat4_genus_vector(graph: ColoredGraph) -> dict[tuple[int, ...], Fraction]:
    parts = residues(graph, (0, 1, 2, 3))
    if len(parts) != 1:
        raise MoveError(
            f"need a unique residue missing color 4, found {len(parts)}")
    residue = parts[0].induced_graph
    return {order: regular_genus(residue, CyclicPermutation.from_sequence(order))
            for order in HAT4_ORDERS}


def rho1_pipeline(graph: ColoredGraph, color: int, m: int) -> PipelineRecord:
    """Perform m canonical switches of pairs of ``color`` involving only 4.

    The input must pass the crystallization count check.  After each switch
    the cycle-count bookkeeping is verified: the {color,4}-count rises by
    one, every {color,j}-count with j in 0..3 drops by one, all other counts
    stay put, and the genus of the residue missing color 4 rises by one for
    each of its three cyclic orders.  Candidate pairs whose canonical switch
    violates the bookkeeping (possible only without a bipartition) are
    skipped.
    """
    if color not in range(4):
        raise PreconditionError(f"pipeline color must be in 0..3, got {color}")
    if m < 1:
        raise PreconditionError(f"need at least one switch, got m={m}")
    cls = classify(graph)
    if not cls.crystallization:
        raise PreconditionError(
            "pipeline input must pass the crystallization count check")
    base = _hat4_genus_vector(graph)
    current = graph
    current_vec = base
    steps = []
    for step in range(1, m + 1):
        candidates = [p for p in find_rho_pairs(current, color, (4,))
                      if p.involved == (4,)]
        accepted = None
        for pair in candidates:
            variant = resolve_switch_variant(current, pair, "canonical")
            trial = switch_rho_pair(current, pair, variant)
            deltas = pair_count_deltas(current, trial)
            if not rho1_delta_law(deltas, color):
                continue
            trial_vec = _hat4_genus_vector(trial)
            if any(trial_vec[o] != current_vec[o] + 1 for o in HAT4_ORDERS):
                continue
            accepted = (pair, variant, trial, deltas, trial_vec)
            break
        if accepted is None:
            raise MoveError(
                f"step {step}: no pair of color {color} involving exactly "
                f"color 4 admits a bookkeeping-preserving canonical switch")
        pair, variant, trial, deltas, trial_vec = accepted
        steps.append(MoveRecord(
            kind="rho-switch",
            params={"color": color, "edge_a": list(pair.edge_a),
                    "edge_b": list(pair.edge_b), "variant": "canonical",
                    "variant_used": variant},
            fingerprint=fingerprint(trial),
            meta={"step": step,
                  "deltas": {f"{a},{b}": d for (a, b), d in sorted(deltas.items())},
                  "residue_genus": {",".join(map(str, o)): format_half_integer(v)
                                    for o, v in sorted(trial_vec.items())}},
        ))
        current = trial
        current_vec = trial_vec
    final_cls = classify(current)
    star = condition_star(current)
    base_min = min(base.values())
    bound = base_min + m
    if min(current_vec.values()) != bound:
        raise AssertionError("pipeline bookkeeping drifted from the bound")
    notes = []
    final_residue = residues(current, (0, 1, 2, 3))[0].induced_graph
    residue_bipartite = two_coloring(final_residue) is not None
    graph_bipartite = two_coloring(current) is not None
    notes.append(
        f"final residue missing color 4 is "
        f"{'bipartite' if residue_bipartite else 'non-bipartite'}, graph is "
        f"{'bipartite' if graph_bipartite else 'non-bipartite'}")
    notes.append(
        "final residue genus minimum "
        f"{format_half_integer(min(current_vec.values()))} "
        f"(switch count {m})")
    return PipelineRecord(
        color=color,
        switch_count=m,
        initial=graph,
        final=current,
        steps=tuple(steps),
        base_residue_genus=base,
        final_residue_genus=current_vec,
        bound=bound,
        bound_available=final_cls.in_class_gs and star is not None,
        in_class_gs=final_cls.in_class_gs,
        star=star,
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# Colored-graph isomorphism
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Isomorphism:
    """A vertex bijection carrying edges to edges, with its color relabeling."""

    vertex_map: tuple[int, ...]
    color_map: tuple[int, ...]


def _residue_fingerprint(graph: ColoredGraph) -> tuple:
    n = graph.dimension
    table = []
    for size in range(2, n + 1):
        for combo in itertools.combinations(range(n + 1), size):
            table.append((combo, residue_count(graph, combo)))
    return (graph.order, two_coloring(graph) is not None, tuple(table))


def _propagate(g1: ColoredGraph, g2: ColoredGraph, seed: int,
               target: int) -> Optional[dict[int, int]]:
    mapping = {seed: target}
    image = {target}
    queue = [seed]
    while queue:
        v = queue.pop()
        for c in g1.colors:
            w1 = g1.partner(v, c)
            w2 = g2.partner(mapping[v], c)
            if w1 in mapping:
                if mapping[w1] != w2:
                    return None
            else:
                if w2 in image:
                    return None
                mapping[w1] = w2
                image.add(w2)
                queue.append(w1)
    return mapping


def _color_preserving_iso(g1: ColoredGraph,
                          g2: ColoredGraph) -> Optional[tuple[int, ...]]:
    if _residue_fingerprint(g1) != _residue_fingerprint(g2):
        return None
    comps1 = g1.components()
    comps2 = g2.components()
    if sorted(len(c) for c in comps1) != sorted(len(c) for c in comps2):
        return None
    vmap = [-1] * g1.order
    used = [False] * len(comps2)

    def assign(index: int) -> bool:
        if index == len(comps1):
            return True
        comp = comps1[index]
        for j, comp2 in enumerate(comps2):
            if used[j] or len(comp2) != len(comp):
                continue
            for target in comp2:
                mapping = _propagate(g1, g2, comp[0], target)
                if mapping is None:
                    continue
                for a, b in mapping.items():
                    vmap[a] = b
                used[j] = True
                if assign(index + 1):
                    return True
                used[j] = False
                for a in mapping:
                    vmap[a] = -1
        return False

    if assign(0):
        return tuple(vmap)
    return None


def iso_check(g1: ColoredGraph, g2: ColoredGraph,
              allow_color_permutation: bool = False) -> Optional[Isomorphism]:
    """A color-preserving (or color-permuting) isomorphism, if one exists.

    Graphs with differing residue-count tables are rejected before any
    search; otherwise a seeded propagation fixes the image of one vertex per
    component and follows the matchings, which determines everything.
    """
    if g1.dimension != g2.dimension or g1.order != g2.order:
        return None
    identity = tuple(range(g1.dimension + 1))
    if not allow_color_permutation:
        vmap = _color_preserving_iso(g1, g2)
        if vmap is None:
            return None
        return Isomorphism(vmap, identity)
    for sigma in itertools.permutations(range(g1.dimension + 1)):
        inverse = [0] * len(sigma)
        for c, s in enumerate(sigma):
            inverse[s] = c
        vmap = _color_preserving_iso(g1, g2.recolored(inverse))
        if vmap is not None:
            return Isomorphism(vmap, tuple(sigma))
    return None
