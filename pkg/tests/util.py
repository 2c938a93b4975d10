"""Shared generators and independent oracles for the test suite.

The oracles deliberately re-derive quantities by different algorithms than
the library (union-find instead of BFS, explicit cycle walks instead of
component counts, exhaustive enumeration instead of greedy search) so that
agreement is meaningful.
"""

from __future__ import annotations

import itertools
import random

from gemkit import ColoredGraph, order_two_graph
from gemkit import moves as mv


# ---------------------------------------------------------------------------
# Random graph generators
# ---------------------------------------------------------------------------

def random_matching(rng: random.Random, order: int) -> list[int]:
    verts = list(range(order))
    rng.shuffle(verts)
    row = [0] * order
    for k in range(0, order, 2):
        a, b = verts[k], verts[k + 1]
        row[a] = b
        row[b] = a
    return row


def random_bipartite_matching(rng: random.Random, order: int) -> list[int]:
    half = order // 2
    bottoms = list(range(half, order))
    rng.shuffle(bottoms)
    row = [0] * order
    for a, b in zip(range(half), bottoms):
        row[a] = b
        row[b] = a
    return row


def random_graph(rng: random.Random, p: int, n: int = 4,
                 bipartite: bool = False, connected: bool = True,
                 tries: int = 400) -> ColoredGraph:
    """A random valid graph: one random perfect matching per color."""
    maker = random_bipartite_matching if bipartite else random_matching
    for _ in range(tries):
        rows = [maker(rng, 2 * p) for _ in range(n + 1)]
        graph = ColoredGraph.from_matchings(n, rows)
        if not connected or graph.is_connected():
            return graph
    raise RuntimeError(f"no connected random graph found (p={p}, n={n})")


def random_insertion(rng: random.Random, graph: ColoredGraph):
    """A random dipole insertion (any size, any attachment)."""
    n = graph.dimension
    h = rng.choice(range(1, n + 1))
    dipole = tuple(sorted(rng.sample(range(n + 1), h)))
    attachment = {}
    for c in graph.colors:
        if c in dipole:
            continue
        e = rng.choice(graph.edges_of_color(c))
        attachment[c] = e if rng.random() < 0.5 else (e[1], e[0])
    return mv.insert_dipole(graph, attachment, dipole)


def grow_sphere_crystallization(seed: int, steps: int) -> ColoredGraph:
    """Grow a crystallization from the order-2 graph by proper insertions.

    Every accepted step keeps the crystallization counts and the class-G_s
    certificates, so the result still encodes the 4-sphere.
    """
    from gemkit import classify

    rng = random.Random(seed)
    graph = order_two_graph(4)
    made = guard = 0
    while made < steps and guard < 600:
        guard += 1
        candidate, spec = random_insertion(rng, graph)
        if not spec.proper:
            continue
        cls = classify(candidate)
        if not (cls.crystallization and cls.in_class_gs):
            continue
        graph = candidate
        made += 1
    if made < steps:
        raise RuntimeError(f"growth stalled at {made} steps (seed {seed})")
    return graph


def shuffled_copy(rng: random.Random, graph: ColoredGraph) -> ColoredGraph:
    """A relabeled copy with a random vertex bijection."""
    mapping = list(range(graph.order))
    rng.shuffle(mapping)
    return graph.relabeled(mapping)


# ---------------------------------------------------------------------------
# Union-find oracle (components without BFS)
# ---------------------------------------------------------------------------

class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def uf_components(graph: ColoredGraph, colors) -> list[tuple[int, ...]]:
    uf = UnionFind(graph.order)
    for c in colors:
        for u, v in graph.edges_of_color(c):
            uf.union(u, v)
    groups: dict[int, list[int]] = {}
    for v in range(graph.order):
        groups.setdefault(uf.find(v), []).append(v)
    return sorted(tuple(sorted(g)) for g in groups.values())


def uf_component_count(graph: ColoredGraph, colors) -> int:
    return len(uf_components(graph, colors))


# ---------------------------------------------------------------------------
# Explicit cycle walking (faces of the regular embedding)
# ---------------------------------------------------------------------------

def walk_bicolored_cycles(graph: ColoredGraph, a: int, b: int) -> int:
    """Count {a,b}-cycles by literally walking them edge by edge."""
    visited = [False] * graph.order
    cycles = 0
    for start in range(graph.order):
        if visited[start]:
            continue
        cycles += 1
        v, color = start, a
        while True:
            visited[v] = True
            v = graph.partner(v, color)
            color = b if color == a else a
            if v == start and color == a:
                break
    return cycles


def face_count_genus(graph: ColoredGraph, permutation) -> object:
    """Genus via 2 - V + E - F with faces counted by cycle walking."""
    from fractions import Fraction

    cols = permutation.colors
    faces = 0
    for j in range(len(cols)):
        a, b = cols[j], cols[(j + 1) % len(cols)]
        faces += walk_bicolored_cycles(graph, a, b)
    vertices = graph.order
    edges = (graph.dimension + 1) * graph.half_order
    return Fraction(2 - vertices + edges - faces, 2)


def same_cycle_by_walk(graph: ColoredGraph, i: int, c: int,
                       edge_a, edge_b) -> bool:
    """Whether both i-colored edges lie on one {i,c}-cycle, by walking it."""
    v, color = edge_a[0], i
    seen_edges = set()
    while True:
        w = graph.partner(v, color)
        if color == i:
            seen_edges.add(tuple(sorted((v, w))))
        v, color = w, (c if color == i else i)
        if v == edge_a[0] and color == i:
            break
    return tuple(sorted(edge_b)) in seen_edges


# ---------------------------------------------------------------------------
# Exhaustive oracles
# ---------------------------------------------------------------------------

def has_odd_cycle_bruteforce(graph: ColoredGraph) -> bool:
    """Odd-cycle search by enumerating simple cycles (small graphs only).

    Parallel edges only create even closed walks, so the underlying simple
    graph decides the answer.
    """
    adjacency = [set() for _ in range(graph.order)]
    for u, v, _ in graph.edges():
        adjacency[u].add(v)
        adjacency[v].add(u)

    def extend(path, used):
        start = path[0]
        v = path[-1]
        if len(path) >= 3 and start in adjacency[v] and len(path) % 2 == 1:
            return True
        for w in adjacency[v]:
            if w in used or w < start:
                continue
            if extend(path + [w], used | {w}):
                return True
        return False

    return any(extend([s], {s}) for s in range(graph.order))


def star_ordering_exists_bruteforce(graph: ColoredGraph) -> bool:
    """Condition (*) by trying every ordering of the 4-colored edges."""
    edges4 = graph.edges_of_color(4)
    p = len(edges4)
    index = {e: k for k, e in enumerate(edges4)}
    masks = []
    for i in range(4):
        comp = graph.component_index((4, i))
        cycle_mask: dict[int, int] = {}
        for e in edges4:
            cycle_mask.setdefault(comp[e[0]], 0)
            cycle_mask[comp[e[0]]] |= 1 << index[e]
        masks.append([cycle_mask[comp[e[0]]] for e in edges4])
    for ordering in itertools.permutations(range(p)):
        prefix = 0
        for k in ordering:
            prefix |= 1 << k
            if not any(masks[i][k] & ~prefix == 0 for i in range(4)):
                break
        else:
            return True
    return False
