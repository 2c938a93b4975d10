"""Classification, sphere certificates, orientability and Z2 homology."""

import random

import pytest

from gemkit import (
    CERTIFIED_SPHERE,
    UNKNOWN,
    ColoredGraph,
    DimensionError,
    certify_sphere,
    classify,
    euler_characteristic,
    is_bipartite,
    order_two_graph,
    orientability,
    residues,
    z2_betti,
)
from gemkit import moves as mv

from util import grow_sphere_crystallization, random_graph, random_insertion


def test_certify_order_two_graphs():
    assert certify_sphere(order_two_graph(3)) == CERTIFIED_SPHERE
    assert certify_sphere(order_two_graph(2)) == CERTIFIED_SPHERE
    assert certify_sphere(order_two_graph(1)) == CERTIFIED_SPHERE


def test_certify_is_one_sided():
    # A switch pipeline output has a residue of positive genus: the status
    # must be "unknown", never a negative verdict.
    graph = grow_sphere_crystallization(3, 3)
    for color in range(4):
        pairs = [p for p in mv.find_rho_pairs(graph, color, (4,))
                 if p.involved == (4,)]
        if pairs:
            switched = mv.switch_rho_pair(graph, pairs[0], "canonical")
            residue = residues(switched, (0, 1, 2, 3))[0].induced_graph
            assert certify_sphere(residue) == UNKNOWN
            return
    pytest.skip("no suitable pair in this grown instance")


def test_classify_sphere_baseline():
    cls = classify(order_two_graph(4))
    assert cls.connected and cls.bipartite
    assert cls.residue_counts == {c: 1 for c in range(5)}
    assert cls.crystallization and cls.in_class_gs
    assert cls.singular_color_candidates == ()
    assert all(statuses == (CERTIFIED_SPHERE,)
               for statuses in cls.sphere_certification.values())


def test_classify_requires_dimension_4():
    with pytest.raises(DimensionError):
        classify(order_two_graph(3))


def test_classify_switched_crystallization_flags_color_4():
    graph = grow_sphere_crystallization(0, 4)
    for color in range(4):
        pairs = [p for p in mv.find_rho_pairs(graph, color, (4,))
                 if p.involved == (4,)]
        if pairs:
            switched = mv.switch_rho_pair(graph, pairs[0], "canonical")
            cls = classify(switched)
            assert cls.residue_counts[4] == 1
            assert 4 in cls.singular_color_candidates
            return
    pytest.skip("no suitable pair in this grown instance")


def test_classify_two_residues_missing_color_4():
    # Colors 0..3 all parallel, color 4 crossed: two residues missing color 4.
    edges = [(0, 1, c) for c in range(4)] + [(2, 3, c) for c in range(4)]
    edges += [(0, 2, 4), (1, 3, 4)]
    graph = ColoredGraph(4, edges, order=4)
    cls = classify(graph)
    assert cls.residue_counts[4] == 2
    assert not cls.crystallization
    assert not cls.in_class_gs


def test_orientability_matches_bipartiteness():
    rng = random.Random(61)
    seen = set()
    for _ in range(20):
        graph = random_graph(rng, rng.randint(2, 5),
                             bipartite=rng.random() < 0.5)
        flag, _ = is_bipartite(graph)
        expected = "orientable" if flag else "non-orientable"
        assert orientability(graph) == expected
        seen.add(expected)
    assert len(seen) == 2


def test_orientability_stable_under_dipole_cancellation():
    rng = random.Random(67)
    done = 0
    while done < 10:
        graph = random_graph(rng, rng.randint(3, 5))
        inserted, spec = random_insertion(rng, graph)
        if not (spec.proper and inserted.is_connected()):
            continue
        cancelled = mv.cancel_dipole(inserted, spec)
        assert orientability(cancelled) == orientability(inserted)
        done += 1


def test_betti_sphere():
    assert z2_betti(order_two_graph(4)) == (1, 0, 0, 0, 1)
    assert z2_betti(order_two_graph(3)) == (1, 0, 0, 1)
    assert z2_betti(order_two_graph(2)) == (1, 0, 1)


def test_betti_alternating_sum_equals_euler():
    rng = random.Random(71)
    for _ in range(20):
        n = rng.choice([3, 4])
        graph = random_graph(rng, rng.randint(2, 5), n=n)
        betti = z2_betti(graph)
        total = sum((-1) ** k * b for k, b in enumerate(betti))
        assert total == euler_characteristic(graph)
        assert betti[0] == 1
        assert betti[n] in (0, 1)


def test_betti_duality_on_certified_closed_gems():
    # Every grown crystallization keeps all residues certified spherical, so
    # the complex is a closed manifold and Z2 duality must hold.
    for seed in (0, 1, 2):
        graph = grow_sphere_crystallization(seed, 3)
        betti = z2_betti(graph)
        assert betti == tuple(reversed(betti))
        assert betti == (1, 0, 0, 0, 1)


def test_betti_invariant_under_proper_dipole_cancellation():
    rng = random.Random(73)
    done = 0
    while done < 12:
        graph = random_graph(rng, rng.randint(3, 5))
        inserted, spec = random_insertion(rng, graph)
        if not (spec.proper and inserted.is_connected()):
            continue
        assert z2_betti(inserted) == z2_betti(graph)
        cancelled = mv.cancel_dipole(inserted, spec)
        assert z2_betti(cancelled) == z2_betti(graph)
        done += 1
