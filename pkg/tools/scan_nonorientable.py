"""Background search for a non-bipartite chain: a twisted-bundle 3d
crystallization, a non-orientable handlebody-style gem over it, and a closed
non-bipartite crystallization feeding the pipeline.  Mirrors
scan_gem_growth.py with unrestricted matchings.

Writes hits to /tmp/nonor_hits.pkl.
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
from scan_gem_growth import exact_pairs, grow_step, try_reverse


def random_matching(rng, order):
    verts = list(range(order))
    rng.shuffle(verts)
    row = [0] * order
    for k in range(0, order, 2):
        a, b = verts[k], verts[k + 1]
        row[a] = b
        row[b] = a
    return tuple(row)


def find_twisted_bundles(rng, order, budget):
    out = []
    for _ in range(budget):
        rows = [random_matching(rng, order) for _ in range(4)]
        lam = gk.ColoredGraph.from_matchings(3, rows)
        if not lam.is_connected():
            continue
        if gk.two_coloring(lam) is not None:
            continue
        if not (crystallization_counts(lam) and closed_check_3d(lam)):
            continue
        if gk.z2_betti(lam) != (1, 1, 1, 1):
            continue
        # summand-loss certificate
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
                        out.append(lam)
                        if len(out) >= 10:
                            return out
    return out


def assemble(lam, rng, budget):
    rows3 = [list(lam.matching(c)) for c in range(4)]
    gems = []
    for _ in range(budget):
        mu = random_matching(rng, lam.order)
        gem = gk.ColoredGraph.from_matchings(4, rows3 + [list(mu)])
        if not gem.is_connected():
            continue
        cls = gk.classify(gem)
        if not cls.in_class_gs:
            continue
        if gk.condition_star(gem) is None:
            continue
        gems.append(gem)
        if len(gems) >= 8:
            break
    return gems


def main():
    rng = random.Random(777)
    hits = []
    for order in (8, 10):
        bundles = find_twisted_bundles(rng, order, 150000)
        print(f"order {order}: twisted bundles found {len(bundles)}",
              flush=True)
        for lam in bundles:
            for gem in assemble(lam, rng, 30000):
                result = try_reverse(gem)
                if result is not None:
                    closed, color, rec = result
                    hits.append((list(map(list, gem._matchings)),
                                 list(map(list, closed._matchings)), color))
                    Path("/tmp/nonor_hits.pkl").write_bytes(pickle.dumps(hits))
                    print(f"DIRECT HIT order {order} color {color}",
                          flush=True)
                # also grow a few steps and retry
                current = gem
                for depth in range(4):
                    stepped = None
                    for _ in range(300):
                        stepped = grow_step(current, rng)
                        if stepped is not None:
                            break
                    if stepped is None:
                        break
                    current = stepped
                    result = try_reverse(current)
                    if result is not None:
                        closed, color, rec = result
                        hits.append((list(map(list, current._matchings)),
                                     list(map(list, closed._matchings)),
                                     color))
                        Path("/tmp/nonor_hits.pkl").write_bytes(
                            pickle.dumps(hits))
                        print(f"GROWTH HIT order {current.order} color "
                              f"{color}; total {len(hits)}", flush=True)
                        if len(hits) >= 3:
                            print("enough")
                            return
    print("done; hits:", len(hits))


if __name__ == "__main__":
    main()
