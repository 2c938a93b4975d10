"""Regular genus: enumeration, the cycle-count formula, minimization."""

import itertools
import random
from fractions import Fraction

import pytest

from gemkit import (
    CyclicPermutation,
    InvalidGraphError,
    StructureError,
    enumerate_permutations,
    format_half_integer,
    order_two_graph,
    regular_genus,
    regular_genus_min,
    residues,
)
from gemkit.genus import genus_from_pair_sum

from util import face_count_genus, random_graph


def test_enumeration_counts():
    assert len(enumerate_permutations(4)) == 12
    assert len(enumerate_permutations(3)) == 3
    assert len(enumerate_permutations(2)) == 1


def test_every_arrangement_reduces_to_exactly_one_canonical_form():
    for n in (3, 4):
        canon = set(enumerate_permutations(n))
        for arrangement in itertools.permutations(range(n + 1)):
            matches = {perm for perm in canon
                       if CyclicPermutation.from_sequence(arrangement) == perm}
            assert len(matches) == 1


def test_canonical_form_is_enforced():
    with pytest.raises(InvalidGraphError):
        CyclicPermutation((1, 0, 2, 3, 4))
    with pytest.raises(InvalidGraphError):
        CyclicPermutation((0, 4, 1, 2, 3))
    with pytest.raises(InvalidGraphError):
        CyclicPermutation((0, 1, 2, 2))


def test_sphere_genus_zero_for_all_permutations():
    graph = order_two_graph(4)
    for perm in enumerate_permutations(4):
        assert regular_genus(graph, perm) == 0
    value, witness = regular_genus_min(graph)
    assert value == 0
    assert witness.colors == (0, 1, 2, 3, 4)


def test_residue_of_sphere_has_genus_zero():
    graph = order_two_graph(4)
    residue = residues(graph, (0, 1, 2, 3))[0].induced_graph
    assert residue.dimension == 3
    for perm in enumerate_permutations(3):
        assert regular_genus(residue, perm) == 0


def test_formula_matches_face_count_oracle():
    rng = random.Random(41)
    for _ in range(40):
        n = rng.choice([3, 4])
        graph = random_graph(rng, rng.randint(2, 6), n=n,
                             bipartite=rng.random() < 0.5)
        for perm in enumerate_permutations(n):
            assert regular_genus(graph, perm) == face_count_genus(graph, perm)


def test_minimum_matches_explicit_enumeration():
    rng = random.Random(43)
    for _ in range(15):
        graph = random_graph(rng, rng.randint(2, 5))
        value, witness = regular_genus_min(graph)
        table = [(regular_genus(graph, perm), perm)
                 for perm in enumerate_permutations(4)]
        best = min(v for v, _ in table)
        assert value == best
        assert witness == min(p for v, p in table if v == best)


def test_bipartite_genus_is_integral():
    rng = random.Random(47)
    for _ in range(15):
        graph = random_graph(rng, rng.randint(2, 6), bipartite=True)
        for perm in enumerate_permutations(4):
            assert regular_genus(graph, perm).denominator == 1
    # In general twice the genus is a non-negative integer.
    for _ in range(15):
        graph = random_graph(rng, rng.randint(2, 6))
        for perm in enumerate_permutations(4):
            value = regular_genus(graph, perm)
            assert value >= 0
            assert (2 * value).denominator == 1


def test_genus_invariant_under_vertex_relabeling():
    rng = random.Random(53)
    graph = random_graph(rng, 5)
    mapping = list(range(graph.order))
    rng.shuffle(mapping)
    other = graph.relabeled(mapping)
    for perm in enumerate_permutations(4):
        assert regular_genus(graph, perm) == regular_genus(other, perm)


def test_negative_genus_is_a_structural_error():
    # The formula guard itself: a pair-cycle total too large for the order.
    with pytest.raises(StructureError):
        genus_from_pair_sum(20, 2, 4)


def test_half_integer_formatting():
    assert format_half_integer(Fraction(3, 1)) == "3"
    assert format_half_integer(Fraction(3, 2)) == "3/2"
    assert format_half_integer(0) == "0"
    with pytest.raises(InvalidGraphError):
        format_half_integer(Fraction(1, 3))
