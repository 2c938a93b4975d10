"""One-off search: order-8 bipartite crystallizations viable for the switch
pipeline (base residue genus 0, certificates surviving, condition (*) on the
final graph).  Writes hits to /tmp/order8_hits.txt as serialized gems."""

import itertools
import sys

sys.setrecursionlimit(10000)

import gemkit as gk
from gemkit import moves as mv

X = [0, 2, 4, 6]
Y = [1, 3, 5, 7]
PERMS = list(itertools.permutations(Y))


def matching_from(perm):
    row = [0] * 8
    for a, b in zip(X, perm):
        row[a] = b
        row[b] = a
    return tuple(row)


M = [matching_from(p) for p in PERMS]
M0 = matching_from((1, 3, 5, 7))


def comp_index(rows, colors):
    idx = [-1] * 8
    k = 0
    for s in range(8):
        if idx[s] != -1:
            continue
        stack = [s]
        idx[s] = k
        while stack:
            v = stack.pop()
            for c in colors:
                w = rows[c][v]
                if idx[w] == -1:
                    idx[w] = k
                    stack.append(w)
        k += 1
    return idx, k


def crystallization_counts(rows):
    for drop in range(5):
        colors = [c for c in range(5) if c != drop]
        _, k = comp_index(rows, colors)
        if k != 1:
            return False
    return True


def main():
    hits = []
    checked = 0
    for r1 in M:
        for r2 in M:
            for r3 in M:
                for r4 in M:
                    rows = (M0, r1, r2, r3, r4)
                    if not crystallization_counts(rows):
                        continue
                    checked += 1
                    # cheap pair filter: some color i with a pair of i-edges
                    # sharing the {i,4}-cycle and no {i,j}-cycle
                    cand_colors = []
                    for i in range(4):
                        maps = {}
                        for c in range(5):
                            if c != i:
                                maps[c], _ = comp_index(rows, (i, c))
                        edges = [(v, rows[i][v]) for v in range(8) if v < rows[i][v]]
                        found = False
                        for (a, _), (b, _) in itertools.combinations(edges, 2):
                            if maps[4][a] != maps[4][b]:
                                continue
                            if any(maps[j][a] == maps[j][b] for j in range(4) if j != i):
                                continue
                            found = True
                            break
                        if found:
                            cand_colors.append(i)
                    if not cand_colors:
                        continue
                    g = gk.ColoredGraph.from_matchings(4, rows)
                    if not gk.is_closed_certified(g):
                        continue
                    for i in cand_colors:
                        try:
                            rec = mv.rho1_pipeline(g, i, 1)
                        except gk.GemError:
                            continue
                        if rec.bound_available and min(rec.base_residue_genus.values()) == 0:
                            hits.append((g, i))
                            with open("/tmp/order8_hits.txt", "a") as fh:
                                fh.write(f"# color {i}\n" + gk.serialize(g) + "\n")
                            print(f"HIT color {i} (total {len(hits)})", flush=True)
                            if len(hits) >= 20:
                                print("enough hits, stopping")
                                return
    print(f"done; crystallizations checked: {checked}, hits: {len(hits)}")


if __name__ == "__main__":
    main()
