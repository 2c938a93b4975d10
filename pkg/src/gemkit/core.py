"""Data model and file format for edge-colored multigraphs encoding manifolds.

A graph of dimension n is an (n+1)-regular multigraph on vertices 0..2p-1
whose edges are properly colored by 0..n: every vertex carries exactly one
edge of each color.  Equivalently, every color class is a perfect matching,
which is how graphs are stored internally.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    DisconnectedGraphError,
    GemParseError,
    InvalidGraphError,
)


class ColoredGraph:
    """An immutable (n+1)-regular, properly edge-colored multigraph.

    ``partner(v, c)`` gives the unique vertex joined to ``v`` by the
    c-colored edge.  All operations in this package treat graphs as values:
    moves return new instances and never mutate their input.

    Dimension 4 is the main case; residues of color subsets reuse the same
    type with a smaller dimension (down to 0), while the file format only
    accepts dimension >= 2.
    """

    __slots__ = ("_dimension", "_matchings")

    def __init__(self, dimension: int, edges: Iterable[tuple[int, int, int]],
                 order: Optional[int] = None):
        if dimension < 0:
            raise InvalidGraphError(f"dimension must be >= 0, got {dimension}")
        edges = list(edges)
        if order is None:
            if not edges:
                raise InvalidGraphError("graph with no edges needs an explicit order")
            order = max(max(u, v) for u, v, _ in edges) + 1
        if order <= 0 or order % 2 != 0:
            raise InvalidGraphError(f"vertex count must be a positive even number, got {order}")
        matchings = [[-1] * order for _ in range(dimension + 1)]
        for u, v, c in edges:
            if not (0 <= c <= dimension):
                raise InvalidGraphError(f"color {c} out of range 0..{dimension}")
            if not (0 <= u < order and 0 <= v < order):
                raise InvalidGraphError(f"edge ({u},{v},{c}) has a vertex outside 0..{order - 1}")
            if u == v:
                raise InvalidGraphError(f"loop at vertex {u} with color {c}")
            row = matchings[c]
            if row[u] != -1:
                raise InvalidGraphError(f"duplicate color {c} at vertex {u}")
            if row[v] != -1:
                raise InvalidGraphError(f"duplicate color {c} at vertex {v}")
            row[u] = v
            row[v] = u
        for c, row in enumerate(matchings):
            for v, w in enumerate(row):
                if w == -1:
                    raise InvalidGraphError(f"missing color {c} at vertex {v}")
        self._dimension = dimension
        self._matchings = tuple(tuple(row) for row in matchings)

    @classmethod
    def from_matchings(cls, dimension: int,
                       matchings: Sequence[Sequence[int]]) -> "ColoredGraph":
        """Build a graph from one involution per color (validated)."""
        if len(matchings) != dimension + 1:
            raise InvalidGraphError(
                f"expected {dimension + 1} matchings, got {len(matchings)}")
        order = len(matchings[0]) if matchings else 0
        edges = []
        for c, row in enumerate(matchings):
            if len(row) != order:
                raise InvalidGraphError("matchings of unequal length")
            for v, w in enumerate(row):
                if v < w:
                    edges.append((v, w, c))
        return cls(dimension, edges, order=order)

    @property
    def dimension(self) -> int:
        return self._dimension

    @property
    def order(self) -> int:
        """Number of vertices, 2p."""
        return len(self._matchings[0])

    @property
    def half_order(self) -> int:
        """p = half the number of vertices."""
        return self.order // 2

    @property
    def colors(self) -> range:
        return range(self._dimension + 1)

    def partner(self, vertex: int, color: int) -> int:
        return self._matchings[color][vertex]

    def matching(self, color: int) -> tuple[int, ...]:
        return self._matchings[color]

    def edges(self) -> list[tuple[int, int, int]]:
        """All edges as (u, v, c) with u < v, sorted by (c, u, v)."""
        out = []
        for c, row in enumerate(self._matchings):
            for v, w in enumerate(row):
                if v < w:
                    out.append((v, w, c))
        out.sort(key=lambda e: (e[2], e[0], e[1]))
        return out

    def edges_of_color(self, color: int) -> list[tuple[int, int]]:
        row = self._matchings[color]
        return [(v, w) for v, w in enumerate(row) if v < w]

    def has_edge(self, u: int, v: int, color: int) -> bool:
        return 0 <= u < self.order and self._matchings[color][u] == v

    def components(self, colors: Optional[Iterable[int]] = None) -> tuple[tuple[int, ...], ...]:
        """Connected components of the subgraph keeping only ``colors``.

        Components are returned sorted by least vertex, each as a sorted
        vertex tuple, so the output is deterministic.
        """
        if colors is None:
            colors = self.colors
        colors = sorted(set(colors))
        seen = [False] * self.order
        comps = []
        for start in range(self.order):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for c in colors:
                    w = self._matchings[c][v]
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def component_index(self, colors: Iterable[int]) -> list[int]:
        """Vertex -> index of its component in ``components(colors)``."""
        idx = [-1] * self.order
        for k, comp in enumerate(self.components(colors)):
            for v in comp:
                idx[v] = k
        return idx

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def relabeled(self, mapping: Sequence[int]) -> "ColoredGraph":
        """New graph with vertex v renamed to mapping[v] (a bijection)."""
        if sorted(mapping) != list(range(self.order)):
            raise InvalidGraphError("vertex relabeling is not a bijection")
        edges = [(mapping[u], mapping[v], c) for u, v, c in self.edges()]
        return ColoredGraph(self._dimension, edges, order=self.order)

    def recolored(self, mapping: Sequence[int]) -> "ColoredGraph":
        """New graph with color c renamed to mapping[c] (a bijection)."""
        if sorted(mapping) != list(range(self._dimension + 1)):
            raise InvalidGraphError("color relabeling is not a bijection")
        edges = [(u, v, mapping[c]) for u, v, c in self.edges()]
        return ColoredGraph(self._dimension, edges, order=self.order)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ColoredGraph)
                and self._dimension == other._dimension
                and self._matchings == other._matchings)

    def __hash__(self) -> int:
        return hash((self._dimension, self._matchings))

    def __repr__(self) -> str:
        return f"ColoredGraph(dimension={self._dimension}, order={self.order})"


def order_two_graph(dimension: int) -> ColoredGraph:
    """The order-2 graph: two vertices joined by one edge of every color.

    It encodes the sphere of the given dimension; the 4-dimensional instance
    is the reference input of most baseline checks.
    """
    return ColoredGraph(dimension, [(0, 1, c) for c in range(dimension + 1)],
                        order=2)


# ---------------------------------------------------------------------------
# Gem file format
# ---------------------------------------------------------------------------
#
#   # comment lines start with '#'
#   dim 4
#   vertices 2
#   edge 0 1 0
#   ...
#
# Header lines come first (dim, then vertices), followed by exactly
# (n+1) * p 'edge u v c' lines.  Tokens are whitespace-separated; blank
# lines are ignored; the trailing newline is optional.

def parse(text: str) -> ColoredGraph:
    """Parse gem file contents into a validated graph."""
    dimension = None
    order = None
    edges = []
    edge_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        keyword = tokens[0]
        if keyword == "dim":
            if dimension is not None:
                raise GemParseError("repeated 'dim' line", lineno)
            dimension = _parse_int(tokens, 1, "dim", lineno, expected_len=2)
            if dimension < 2:
                raise GemParseError(f"dimension must be >= 2, got {dimension}", lineno)
        elif keyword == "vertices":
            if dimension is None:
                raise GemParseError("'vertices' before 'dim'", lineno)
            if order is not None:
                raise GemParseError("repeated 'vertices' line", lineno)
            order = _parse_int(tokens, 1, "vertices", lineno, expected_len=2)
            if order <= 0 or order % 2 != 0:
                raise GemParseError(
                    f"vertex count must be a positive even number, got {order}", lineno)
        elif keyword == "edge":
            if order is None:
                raise GemParseError("'edge' before 'dim'/'vertices' header", lineno)
            if len(tokens) != 4:
                raise GemParseError("expected 'edge <u> <v> <c>'", lineno)
            u = _parse_int(tokens, 1, "edge", lineno)
            v = _parse_int(tokens, 2, "edge", lineno)
            c = _parse_int(tokens, 3, "edge", lineno)
            if not (0 <= u < order) or not (0 <= v < order):
                raise GemParseError(
                    f"edge vertex outside 0..{order - 1}: ({u},{v})", lineno)
            if not (0 <= c <= dimension):
                raise GemParseError(f"edge color outside 0..{dimension}: {c}", lineno)
            if u == v:
                raise InvalidGraphError(f"loop at vertex {u} with color {c}", lineno)
            edges.append((u, v, c))
            edge_lines.append(lineno)
        else:
            raise GemParseError(f"unknown keyword {keyword!r}", lineno)
    if dimension is None:
        raise GemParseError("missing 'dim' header")
    if order is None:
        raise GemParseError("missing 'vertices' header")
    expected = (dimension + 1) * (order // 2)
    if len(edges) != expected:
        raise GemParseError(
            f"expected {expected} edge lines for dim {dimension} and "
            f"{order} vertices, found {len(edges)}")
    # Re-raise coloring violations with the offending line attached.
    seen = {}
    for (u, v, c), lineno in zip(edges, edge_lines):
        for vertex in (u, v):
            if (vertex, c) in seen:
                raise InvalidGraphError(
                    f"duplicate color {c} at vertex {vertex}", lineno)
            seen[(vertex, c)] = lineno
    return ColoredGraph(dimension, edges, order=order)


def _parse_int(tokens, pos, keyword, lineno, expected_len=None):
    if expected_len is not None and len(tokens) != expected_len:
        raise GemParseError(f"expected '{keyword} <integer>'", lineno)
    try:
        return int(tokens[pos])
    except (IndexError, ValueError):
        raise GemParseError(f"bad integer in '{keyword}' line", lineno) from None


def serialize(graph: ColoredGraph) -> str:
    """Deterministic gem file contents: edges sorted by (color, u, v)."""
    lines = [f"dim {graph.dimension}", f"vertices {graph.order}"]
    for u, v, c in graph.edges():
        lines.append(f"edge {u} {v} {c}")
    return "\n".join(lines) + "\n"


def load(path) -> ColoredGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def save(graph: ColoredGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(graph))


# ---------------------------------------------------------------------------
# Residues
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Residue:
    """A connected component of the subgraph restricted to a color set.

    ``induced_graph`` is the component as a standalone graph of dimension
    len(colors) - 1, with vertices renumbered in increasing order and colors
    reindexed by rank in the sorted color set.
    """

    colors: tuple[int, ...]
    vertices: tuple[int, ...]
    induced_graph: ColoredGraph

    @property
    def size(self) -> int:
        return len(self.vertices)


def residues(graph: ColoredGraph, colors: Iterable[int]) -> list[Residue]:
    """All components of the subgraph keeping only ``colors``.

    The empty color set is rejected; the 0-color case of the duality is the
    plain vertex count and has no residue object.
    """
    colors = sorted(set(colors))
    if not colors:
        raise InvalidGraphError("residue query needs a non-empty color set")
    for c in colors:
        if c not in graph.colors:
            raise InvalidGraphError(f"color {c} out of range 0..{graph.dimension}")
    color_rank = {c: k for k, c in enumerate(colors)}
    out = []
    for comp in graph.components(colors):
        vertex_rank = {v: k for k, v in enumerate(comp)}
        edges = []
        for c in colors:
            for v in comp:
                w = graph.partner(v, c)
                if v < w:
                    edges.append((vertex_rank[v], vertex_rank[w], color_rank[c]))
        induced = ColoredGraph(len(colors) - 1, edges, order=len(comp))
        out.append(Residue(tuple(colors), comp, induced))
    return out


def residue_count(graph: ColoredGraph, colors: Iterable[int]) -> int:
    """Number of components of the color-restricted subgraph (the count g)."""
    colors = sorted(set(colors))
    if not colors:
        raise InvalidGraphError("residue count needs a non-empty color set")
    return len(graph.components(colors))


@dataclass(frozen=True)
class ResidueTable:
    """Component counts per color set, keyed by sorted color tuples."""

    counts: dict[tuple[int, ...], int]

    def count(self, colors: Iterable[int]) -> int:
        return self.counts[tuple(sorted(set(colors)))]

    def items(self):
        return sorted(self.counts.items())


def residue_table(graph: ColoredGraph, sizes: Iterable[int]) -> ResidueTable:
    """Counts g_C for every color set C of each requested size."""
    n = graph.dimension
    counts = {}
    for size in sorted(set(sizes)):
        if not (1 <= size <= n + 1):
            raise InvalidGraphError(
                f"residue size must be in 1..{n + 1}, got {size}")
        for combo in itertools.combinations(range(n + 1), size):
            counts[combo] = residue_count(graph, combo)
    return ResidueTable(counts)


def pair_counts(graph: ColoredGraph) -> dict[tuple[int, int], int]:
    """g over every 2-color set; the working table of the genus formula."""
    return {
        pair: residue_count(graph, pair)
        for pair in itertools.combinations(range(graph.dimension + 1), 2)
    }


# ---------------------------------------------------------------------------
# Global invariants
# ---------------------------------------------------------------------------

def is_bipartite(graph: ColoredGraph) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Whether the underlying multigraph has no odd cycle.

    Requires a connected graph, so the 2-coloring witness (normalized with
    vertex 0 in class 0) is unique when it exists.
    """
    if not graph.is_connected():
        raise DisconnectedGraphError("bipartiteness test requires a connected graph")
    classes = two_coloring(graph)
    if classes is None:
        return False, None
    return True, classes


def two_coloring(graph: ColoredGraph) -> Optional[tuple[int, ...]]:
    """A proper 2-coloring of the vertices, or None if an odd cycle exists.

    Works per component (class 0 assigned to each component's least vertex),
    so it is also usable on the disconnected intermediates produced by moves.
    """
    classes = [-1] * graph.order
    for start in range(graph.order):
        if classes[start] != -1:
            continue
        classes[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for c in graph.colors:
                w = graph.partner(v, c)
                if classes[w] == -1:
                    classes[w] = 1 - classes[v]
                    stack.append(w)
                elif classes[w] == classes[v]:
                    return None
    return tuple(classes)


def euler_characteristic(graph: ColoredGraph) -> int:
    """Euler characteristic of the dual pseudocomplex.

    k-simplices for k < n correspond to residues over color sets of size
    n - k, and the n-simplices to the 2p graph vertices; the alternating sum
    runs over those counts.
    """
    if not graph.is_connected():
        raise DisconnectedGraphError("Euler characteristic requires a connected graph")
    n = graph.dimension
    total = 0
    for size in range(1, n + 1):
        sign = -1 if (n - size) % 2 else 1
        for combo in itertools.combinations(range(n + 1), size):
            total += sign * residue_count(graph, combo)
    total += (2 * graph.half_order) if n % 2 == 0 else -(2 * graph.half_order)
    return total
