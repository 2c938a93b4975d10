"""Regular genus of colored graphs, per cyclic permutation and minimized.

For a connected graph of dimension n and a cyclic permutation of the color
set, the genus of the associated regular surface embedding is determined by
the counts of bicolored cycles over consecutive color pairs:

    2 - 2*rho = sum over consecutive pairs of g_{pair} + (1 - n) * p

The value is an exact half-integer (integral on bipartite graphs, where the
surface is orientable; half the non-orientable genus otherwise).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import ColoredGraph, pair_counts
from .errors import DisconnectedGraphError, InvalidGraphError, StructureError


@dataclass(frozen=True, order=True)
class CyclicPermutation:
    """A cyclic arrangement of the colors 0..n, up to rotation and inverse.

    The canonical representative starts with 0 and has its second entry
    smaller than its last (for n >= 2; the single n = 1 arrangement (0, 1)
    is kept as-is).
    """

    colors: tuple[int, ...]

    def __post_init__(self):
        n = len(self.colors) - 1
        if n < 1:
            raise InvalidGraphError("cyclic permutation needs at least 2 colors")
        if sorted(self.colors) != list(range(n + 1)):
            raise InvalidGraphError(
                f"not a permutation of 0..{n}: {self.colors}")
        if self.colors[0] != 0 or (n >= 2 and self.colors[1] > self.colors[-1]):
            raise InvalidGraphError(
                f"not in canonical form (rotate to start at 0, orient "
                f"second < last): {self.colors}")

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "CyclicPermutation":
        """Canonicalize an arbitrary rotation/reflection of a color cycle."""
        seq = tuple(seq)
        n = len(seq) - 1
        if 0 not in seq:
            raise InvalidGraphError(f"cyclic permutation must contain color 0: {seq}")
        k = seq.index(0)
        rotated = seq[k:] + seq[:k]
        if n >= 2 and rotated[1] > rotated[-1]:
            rotated = (rotated[0],) + tuple(reversed(rotated[1:]))
        return cls(rotated)

    @property
    def dimension(self) -> int:
        return len(self.colors) - 1

    def consecutive_pairs(self) -> list[tuple[int, int]]:
        """The n+1 unordered color pairs of consecutive entries (cyclically)."""
        cols = self.colors
        out = []
        for j in range(len(cols)):
            a, b = cols[j], cols[(j + 1) % len(cols)]
            out.append((a, b) if a < b else (b, a))
        return out


def enumerate_permutations(n: int) -> list[CyclicPermutation]:
    """All canonical cyclic permutations of 0..n, lexicographically.

    There are n!/2 of them for n >= 2; dimension 1 has the single
    arrangement (0, 1).
    """
    if n < 1:
        raise InvalidGraphError(f"need n >= 1, got {n}")
    if n == 1:
        return [CyclicPermutation((0, 1))]
    out = []
    for rest in itertools.permutations(range(1, n + 1)):
        if rest[0] < rest[-1]:
            out.append(CyclicPermutation((0,) + rest))
    return out


def genus_from_pair_sum(pair_sum: int, half_order: int, dimension: int) -> Fraction:
    """Half-integer genus from the bicolored-cycle total of one permutation."""
    value = Fraction(2 - (pair_sum + (1 - dimension) * half_order), 2)
    if value < 0:
        raise StructureError(
            f"negative genus {value}: the input cannot encode a manifold")
    return value


def regular_genus(graph: ColoredGraph,
                  permutation: CyclicPermutation) -> Fraction:
    """Genus of the regular embedding for one cyclic permutation."""
    if permutation.dimension != graph.dimension:
        raise InvalidGraphError(
            f"permutation of dimension {permutation.dimension} applied to a "
            f"graph of dimension {graph.dimension}")
    if not graph.is_connected():
        raise DisconnectedGraphError("regular genus requires a connected graph")
    counts = pair_counts(graph)
    if graph.dimension == 1:
        # Both cyclic neighbours of color 0 are color 1: the pair counts twice.
        total = 2 * counts[(0, 1)]
    else:
        total = sum(counts[pair] for pair in permutation.consecutive_pairs())
    return genus_from_pair_sum(total, graph.half_order, graph.dimension)


def regular_genus_min(graph: ColoredGraph) -> tuple[Fraction, CyclicPermutation]:
    """Minimum genus over all canonical permutations, with its witness.

    Ties resolve to the lexicographically least witness, so results are
    reproducible regardless of evaluation order.
    """
    if not graph.is_connected():
        raise DisconnectedGraphError("regular genus requires a connected graph")
    counts = pair_counts(graph)
    best = None
    witness = None
    for perm in enumerate_permutations(graph.dimension):
        if graph.dimension == 1:
            total = 2 * counts[(0, 1)]
        else:
            total = sum(counts[pair] for pair in perm.consecutive_pairs())
        value = genus_from_pair_sum(total, graph.half_order, graph.dimension)
        if best is None or value < best:
            best = value
            witness = perm
    return best, witness


def format_half_integer(value: Fraction | int) -> str:
    """Render an exact half-integer as "k" or "k/2" (never floating point)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    if value.denominator == 2:
        return f"{value.numerator}/2"
    raise InvalidGraphError(f"not a half-integer: {value}")


def genus_table(graph: ColoredGraph) -> list[tuple[CyclicPermutation, Fraction]]:
    """Genus per canonical permutation, in enumeration order."""
    return [(perm, regular_genus(graph, perm))
            for perm in enumerate_permutations(graph.dimension)]
