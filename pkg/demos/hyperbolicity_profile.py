"""Flatness diagnostics side by side: grids, rectangles, delta, bigons.

A fat grid graph is as far from hyperbolic as a median graph gets; a tree
is perfectly hyperbolic; a hypercube is flat but bounded.  The four
diagnostics quantify that spectrum and obey the advertised inequalities.

Run with: python3 demos/hyperbolicity_profile.py
"""

import itertools
import random

from cubekit.diagnostics import bigon_thinness, delta, max_grid, max_thick_rectangle
from cubekit.median import L1, LINF, MedianGraph, ram_bound


def grid(a, b):
    vs = [f"{x},{y}" for x in range(a + 1) for y in range(b + 1)]
    es = [
        (f"{x},{y}", f"{x + 1},{y}")
        for x in range(a)
        for y in range(b + 1)
    ] + [
        (f"{x},{y}", f"{x},{y + 1}")
        for x in range(a + 1)
        for y in range(b)
    ]
    return MedianGraph(vs, es)


def hypercube(n):
    vs = ["".join(bits) for bits in itertools.product("01", repeat=n)]
    es = [
        (v, v[:i] + "1" + v[i + 1:])
        for v in vs
        for i in range(n)
        if v[i] == "0"
    ]
    return MedianGraph(vs, es)


def tree(n, seed):
    rng = random.Random(seed)
    vs = [str(i) for i in range(n)]
    es = [(str(rng.randrange(i)), str(i)) for i in range(1, n)]
    return MedianGraph(vs, es)


def main():
    cases = {
        "tree(30)": tree(30, 5),
        "grid 2x2": grid(2, 2),
        "grid 5x5": grid(5, 5),
        "cube dim 4": hypercube(4),
        "cube dim 5": hypercube(5),
    }
    print(f"{'fixture':12s} {'grid':>5s} {'rect':>5s} {'delta1':>7s} "
          f"{'deltaInf':>9s} {'bigon1':>7s} {'bigonInf':>9s}")
    for name, g in cases.items():
        gr = max_grid(g)
        rr = max_thick_rectangle(g)
        d1 = delta(g, L1)
        di = delta(g, LINF)
        b1 = bigon_thinness(g, L1)
        bi = bigon_thinness(g, LINF)
        print(f"{name:12s} {gr.thinness:5d} {rr.thickness:5d} "
              f"{str(d1.value):>7s} {str(di.value):>9s} "
              f"{b1.value:7d} {bi.value:9d}")

    print("\nchecks on each row:")
    print("  grid thinness <= rectangle thickness + 1")
    print("  bigon(l1)     <= 2 * RamBound(grid thinness)")
    print("  bigon(linf)   <= grid thinness + 3")
    print("  every grid min-side <= 4 * delta(linf) + 2")
    for name, g in cases.items():
        gr = max_grid(g)
        rr = max_thick_rectangle(g)
        assert gr.thinness <= rr.thickness + 1
        assert bigon_thinness(g, L1).value <= 2 * ram_bound(gr.thinness)
        assert bigon_thinness(g, LINF).value <= gr.thinness + 3
        for p, q in gr.pareto:
            assert min(p, q) <= 4 * delta(g, LINF).value + 2
    print("all hold.")

    g = grid(5, 5)
    rep = max_grid(g)
    best = rep.witnesses[-1]
    print(f"\nlargest grid in the 5x5 grid graph: "
          f"{len(best.verticals)} x {len(best.horizontals)} hyperplanes")
    print(f"  verticals   {best.verticals}")
    print(f"  horizontals {best.horizontals}")


if __name__ == "__main__":
    main()
