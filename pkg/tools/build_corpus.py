"""Deterministic corpus builder: verifies and writes the shipped gem files.

The two structured 5-colored graphs below were found by the searches in
scan_order8.py / scan_gem_growth.py (exhaustive order-8 enumeration of
3-dimensional bundle crystallizations, fifth-color assembly, then dipole
growth with a reverse pair switch).  They are frozen here as matchings and
every property the corpus claims is re-verified by the library before a
single file is written:

  sphere_order2 / sphere3_order2   order-2 graphs (spheres);
  sphere_grown                     sphere crystallization grown by proper
                                   dipole insertions (has switchable pairs);
  bundle3_order8                   3-dimensional crystallization with the
                                   homology of an orientable sphere bundle
                                   over the circle, certified by switching
                                   its full-involvement pair down to a
                                   genus-0 sphere graph;
  handlebody_gem_order10           class-G_s gem, condition (*) holding,
                                   residue genus 1 (a compact piece bounded
                                   by the bundle);
  closed_b1_order10                closed certified crystallization with
                                   Betti vector (1,1,0,1,1); every residue
                                   has genus 0 at every order and the switch
                                   pipeline yields the trisection bound 1
                                   for every color;
  star_negative                    valid connected graph with no condition-
                                   (*) ordering (every {4,i}-cycle carries
                                   all 4-colored edges).

Run from the repository root:  python tools/build_corpus.py
"""

import json
import subprocess
import sys
from pathlib import Path

import gemkit as gk
from gemkit import moves as mv

DATA = Path(__file__).resolve().parent.parent / "src" / "gemkit" / "data"

LAM8 = [
    [1, 0, 3, 2, 5, 4, 7, 6],
    [1, 0, 5, 6, 7, 2, 3, 4],
    [3, 2, 1, 0, 7, 6, 5, 4],
    [7, 4, 3, 2, 1, 6, 5, 0],
]

GEM10 = [
    [1, 0, 3, 2, 5, 4, 7, 6, 9, 8],
    [1, 0, 5, 6, 7, 2, 3, 4, 9, 8],
    [3, 9, 8, 0, 7, 6, 5, 4, 2, 1],
    [7, 4, 3, 2, 1, 6, 5, 0, 9, 8],
    [8, 9, 3, 2, 7, 6, 5, 4, 0, 1],
]

CLOSED10 = [
    [1, 0, 3, 2, 5, 4, 7, 6, 9, 8],
    [1, 0, 5, 6, 7, 2, 3, 4, 9, 8],
    [1, 0, 8, 9, 7, 6, 5, 4, 2, 3],
    [7, 4, 3, 2, 1, 6, 5, 0, 9, 8],
    [8, 9, 3, 2, 7, 6, 5, 4, 0, 1],
]


def grow_sphere_4d(seed, steps):
    import random

    rng = random.Random(seed)
    graph = gk.order_two_graph(4)
    made = guard = 0
    while made < steps and guard < 800:
        guard += 1
        h = rng.choice([1, 2, 3])
        dipole = tuple(sorted(rng.sample(range(5), h)))
        attachment = {}
        for c in graph.colors:
            if c in dipole:
                continue
            e = rng.choice(graph.edges_of_color(c))
            attachment[c] = e if rng.random() < 0.5 else (e[1], e[0])
        candidate, spec = mv.insert_dipole(graph, attachment, dipole)
        if not spec.proper:
            continue
        cls = gk.classify(candidate)
        if not (cls.crystallization and cls.in_class_gs):
            continue
        graph = candidate
        made += 1
    if made < steps:
        raise RuntimeError(f"4d growth stalled (seed {seed})")
    return graph


def closed_check_3d(graph):
    for c in graph.colors:
        other = [d for d in graph.colors if d != c]
        for part in gk.residues(graph, other):
            if gk.euler_characteristic(part.induced_graph) != 2:
                return False
    return True


def crystallization_counts(graph):
    return all(
        gk.residue_count(graph, [c for c in graph.colors if c != drop]) == 1
        for drop in graph.colors)


def verify_bundle3(lam):
    """The summand-loss certificate: some full-involvement pair switches to
    a connected genus-0 graph, so the encoded 3-manifold carries (and by the
    homology, equals) a sphere bundle over the circle."""
    assert crystallization_counts(lam) and closed_check_3d(lam)
    assert gk.z2_betti(lam) == (1, 1, 1, 1)
    for i in range(4):
        others = tuple(j for j in range(4) if j != i)
        for p in mv.find_rho_pairs(lam, i, others):
            if p.involved != others:
                continue
            for variant in ("A", "B"):
                cand = mv.switch_rho_pair(lam, p, variant)
                if not cand.is_connected() or not closed_check_3d(cand):
                    continue
                if gk.certify_sphere(cand) == gk.CERTIFIED_SPHERE:
                    return True
    return False


def star_negative(p):
    order = 2 * p
    edges = []
    for c in range(4):
        for k in range(p):
            edges.append((2 * k, 2 * k + 1, c))
    for k in range(p):
        edges.append(((2 * k + 1) % order, (2 * k + 2) % order, 4))
    return gk.ColoredGraph(4, edges, order=order)


def write(name, graph, expect):
    for key, value in expect.items():
        assert value, f"{name}: check {key!r} failed"
    path = DATA / name
    gk.save(graph, path)
    print(f"wrote {path.name} (order {graph.order}, dim {graph.dimension})")
    return path


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    (DATA / "snapshots").mkdir(exist_ok=True)
    written = []

    sphere4 = gk.order_two_graph(4)
    written.append(write("sphere_order2.gem", sphere4, {
        "chi": gk.euler_characteristic(sphere4) == 2,
        "betti": gk.z2_betti(sphere4) == (1, 0, 0, 0, 1),
        "crystallization": gk.classify(sphere4).crystallization,
    }))

    sphere3 = gk.order_two_graph(3)
    written.append(write("sphere3_order2.gem", sphere3, {
        "chi": gk.euler_characteristic(sphere3) == 0,
        "betti": gk.z2_betti(sphere3) == (1, 0, 0, 1),
    }))

    grown = grow_sphere_4d(0, 4)
    cls = gk.classify(grown)
    written.append(write("sphere_grown.gem", grown, {
        "crystallization": cls.crystallization,
        "in_class_gs": cls.in_class_gs,
        "betti": gk.z2_betti(grown) == (1, 0, 0, 0, 1),
        "chi": gk.euler_characteristic(grown) == 2,
        "star": gk.condition_star(grown) is not None,
    }))

    lam = gk.ColoredGraph.from_matchings(3, LAM8)
    written.append(write("bundle3_order8.gem", lam, {
        "bundle_certificate": verify_bundle3(lam),
    }))

    gem = gk.ColoredGraph.from_matchings(4, GEM10)
    gcls = gk.classify(gem)
    ggt = gk.ggt_upper_bound(gem)
    written.append(write("handlebody_gem_order10.gem", gem, {
        "in_class_gs": gcls.in_class_gs,
        "star": gk.condition_star(gem) is not None,
        "ggt_is_1": ggt is not None and ggt[0] == 1,
    }))

    closed = gk.ColoredGraph.from_matchings(4, CLOSED10)
    ccls = gk.classify(closed)
    checks = {
        "crystallization": ccls.crystallization,
        "closed_certified": gk.is_closed_certified(closed),
        "betti": gk.z2_betti(closed) == (1, 1, 0, 1, 1),
        "chi": gk.euler_characteristic(closed) == 0,
        "bipartite": gk.is_bipartite(closed)[0],
        "star_fails": gk.condition_star(closed) is None,
        "betti_lower_bound_1": gk.betti_lower_bound(closed) == 1,
    }
    # Flat residue genus and a working switch pipeline for every color.
    for color in range(4):
        rec = mv.rho1_pipeline(closed, color, 1)
        checks[f"pipeline_color_{color}"] = (
            rec.bound == 1 and rec.bound_available
            and min(rec.base_residue_genus.values()) == 0)
    written.append(write("closed_b1_order10.gem", closed, checks))

    negative = star_negative(3)
    written.append(write("star_negative.gem", negative, {
        "connected": negative.is_connected(),
        "no_star": gk.condition_star(negative) is None,
    }))

    # Committed expected-output snapshots: the exact `gemkit info` JSON.
    for path in written:
        proc = subprocess.run(
            [sys.executable, "-m", "gemkit.cli", "info", str(path)],
            capture_output=True, text=True, check=True)
        snap = DATA / "snapshots" / (path.stem + ".info.json")
        snap.write_text(proc.stdout)
        print(f"wrote snapshots/{snap.name}")

    print("corpus complete:", len(written), "files")


if __name__ == "__main__":
    main()
