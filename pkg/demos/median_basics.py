"""Tour of the median-graph layer: recognition, hyperplanes, cubes, metrics.

Run with: python3 demos/median_basics.py
"""

import itertools

from cubekit.median import L1, LINF, MedianGraph


def grid(a, b):
    vs = [f"{x},{y}" for x in range(a + 1) for y in range(b + 1)]
    es = []
    for x in range(a + 1):
        for y in range(b + 1):
            if x < a:
                es.append((f"{x},{y}", f"{x + 1},{y}"))
            if y < b:
                es.append((f"{x},{y}", f"{x},{y + 1}"))
    return MedianGraph(vs, es)


def main():
    g = grid(3, 2)
    print(f"3x2 grid: {g.n} vertices, {len(g.edges)} edges")
    v = g.is_median()
    print(f"is_median: {v.ok}")

    hps = g.hyperplanes()
    print(f"\n{len(hps)} hyperplanes (3 vertical + 2 horizontal):")
    for h in hps:
        print(f"  #{h.index}: {len(h.dual_edges)} dual edges, "
              f"sides {len(h.side_a)}/{len(h.side_b)}, max cube dim {h.dimension}")

    maximal = [c for c in g.cubes() if c.maximal]
    print(f"\nmaximal cubes: {len(maximal)} (all squares in a grid)")

    a, b = "0,0", "3,2"
    print(f"\ndistances {a} -> {b}:")
    print(f"  l1   = {g.distance(a, b, L1)}   (counts separating hyperplanes)")
    print(f"  linf = {g.distance(a, b, LINF)}   (steps through cube corners)")
    sep = g.separating(a, b)
    print(f"  separating hyperplanes: {sep}")

    # a triple and its median
    m = set(g.ids)
    for x, y in itertools.combinations(["0,0", "3,0", "1,2"], 2):
        ix, iy = g.indices_of([x, y])
        m &= {
            g.ids[k]
            for k in range(g.n)
            if g.dist[ix, k] + g.dist[k, iy] == g.dist[ix, iy]
        }
    print(f"\nmedian of (0,0), (3,0), (1,2): {sorted(m)}")

    # two classic non-median graphs, with witnesses
    k23 = MedianGraph(
        ["u1", "u2", "w1", "w2", "w3"],
        [(u, w) for u in ("u1", "u2") for w in ("w1", "w2", "w3")],
    )
    bad = k23.is_median()
    print(f"\nK_2,3 is_median: {bad.ok}, witness triple {bad.witness} "
          f"has medians {bad.medians}")

    tri = MedianGraph(
        [str(i) for i in range(6)],
        [(str(i), str((i + 1) % 6)) for i in range(6)] + [("0", "2")],
    )
    bad = tri.is_median()
    print(f"C6 + chord is_median: {bad.ok}, witness {bad.witness} "
          f"(the chord makes a triangle, so no median exists)")


if __name__ == "__main__":
    main()
