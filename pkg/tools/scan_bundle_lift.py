"""Background search: lift a 3-dimensional bundle crystallization to a
5-colored gem whose exact low-color pair switches to a closed crystallization
with a working m=1 pipeline.  Grows the bundle by proper dipole insertions
(manifold preserved, exactness of the 3d closed check keeps provenance),
then samples fifth-color matchings.

Writes hits to /tmp/bundle_lift_hits.pkl.
"""

import itertools
import pickle
import random
import sys
from pathlib import Path

import gemkit as gk
from gemkit import moves as mv

sys.path.insert(0, str(Path(__file__).parent))
from build_corpus import closed_check_3d, crystallization_counts


def grow_bundle(lam, rng, target_order):
    """Proper dipole insertions keeping crystallization + closed checks."""
    graph = lam
    guard = 0
    while graph.order < target_order and guard < 4000:
        guard += 1
        h = rng.choice([1, 2])
        dipole = tuple(sorted(rng.sample(range(4), h)))
        attachment = {}
        for c in graph.colors:
            if c in dipole:
                continue
            e = rng.choice(graph.edges_of_color(c))
            attachment[c] = e if rng.random() < 0.5 else (e[1], e[0])
        cand, spec = mv.insert_dipole(graph, attachment, dipole)
        if not spec.proper:
            continue
        if not (crystallization_counts(cand) and closed_check_3d(cand)):
            continue
        if gk.z2_betti(cand) != (1, 1, 1, 1):
            continue
        graph = cand
    return graph if graph.order == target_order else None


def exact_rho3_pairs(lam):
    out = []
    for i in range(4):
        others = tuple(j for j in range(4) if j != i)
        for p in mv.find_rho_pairs(lam, i, others):
            if p.involved == others:
                out.append(p)
    return out


def random_matching(rng, order):
    verts = list(range(order))
    rng.shuffle(verts)
    row = [0] * order
    for k in range(0, order, 2):
        a, b = verts[k], verts[k + 1]
        row[a] = b
        row[b] = a
    return row


def try_mu(lam, pairs, mu):
    rows = [list(lam.matching(c)) for c in range(4)] + [list(mu)]
    gem = gk.ColoredGraph.from_matchings(4, rows)
    if not gem.is_connected():
        return None
    for p in pairs:
        others = tuple(j for j in range(4) if j != p.color)
        inv = mv.involved_colors(gem, p.color, p.edge_a, p.edge_b)
        if inv != others:
            continue
        cls = gk.classify(gem)
        if not cls.in_class_gs:
            return None  # independent of the pair; no point trying others
        if gk.condition_star(gem) is None:
            return None
        pair5 = mv.RhoPair(p.color, p.edge_a, p.edge_b, inv)
        for variant in ("A", "B"):
            closed = mv.switch_rho_pair(gem, pair5, variant)
            if not closed.is_connected():
                continue
            ccls = gk.classify(closed)
            if not (ccls.crystallization and gk.is_closed_certified(closed)):
                continue
            try:
                rec = mv.rho1_pipeline(closed, p.color, 1)
            except gk.GemError:
                continue
            if rec.bound_available and rec.bound == 1 \
                    and min(rec.base_residue_genus.values()) == 0:
                return gem, closed, p.color
    return None


def main():
    bundles = pickle.loads(Path("/tmp/true_bundles.pkl").read_bytes())
    rng = random.Random(20240810)
    hits = []
    for target in (10, 12, 14):
        print(f"=== target order {target}", flush=True)
        for li, rows, *_ in bundles[:10]:
            lam8 = gk.ColoredGraph.from_matchings(3, rows)
            for attempt in range(6):
                lam = lam8 if target == 8 else grow_bundle(lam8, rng, target)
                if lam is None:
                    continue
                pairs = exact_rho3_pairs(lam)
                if not pairs:
                    continue
                budget = 4000
                for _ in range(budget):
                    mu = random_matching(rng, lam.order)
                    result = try_mu(lam, pairs, mu)
                    if result is not None:
                        gem, closed, color = result
                        hits.append((list(map(list, gem._matchings)),
                                     list(map(list, closed._matchings)), color))
                        Path("/tmp/bundle_lift_hits.pkl").write_bytes(
                            pickle.dumps(hits))
                        print(f"HIT at order {target} (Lambda {li}, color "
                              f"{color}); total {len(hits)}", flush=True)
                        break
                if hits:
                    break
            if hits:
                break
        if hits:
            break
    print("done; hits:", len(hits))


if __name__ == "__main__":
    main()
