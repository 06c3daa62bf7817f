"""Coning off convex rows of a grid: metrics, fineness, cycle counts.

The clique cone-off joins member vertices directly; the apex cone-off
routes through one new vertex per member.  Their metrics agree up to a
factor of two, and coning the rows of a grid collapses the horizontal
direction to nothing.

Run with: python3 demos/coneoff_tour.py
"""

from cubekit.diagnostics import (
    APEX,
    CLIQUE,
    cone_off,
    cycle_probe,
    fineness_certificate,
)
from cubekit.median import MedianGraph


def grid(a, b):
    vs = [f"{x},{y}" for x in range(a + 1) for y in range(b + 1)]
    es = [
        (f"{x},{y}", f"{x + 1},{y}") for x in range(a) for y in range(b + 1)
    ] + [
        (f"{x},{y}", f"{x},{y + 1}") for x in range(a + 1) for y in range(b)
    ]
    return MedianGraph(vs, es)


def main():
    a = b = 5
    g = grid(a, b)
    rows = {f"row{y}": [f"{x},{y}" for x in range(a + 1)] for y in range(b + 1)}
    print(f"{a}x{b} grid, coning off its {len(rows)} rows")

    clique = cone_off(g, rows, CLIQUE)
    apex = cone_off(g, rows, APEX)
    print(f"  clique cone-off: {clique.graph.n} vertices, {len(clique.graph.edges)} edges")
    print(f"  apex cone-off:   {apex.graph.n} vertices, {len(apex.graph.edges)} edges")

    corners = ("0,0", f"{a},{b}")
    base = g.distance(*corners)
    dc = clique.distance(*corners)
    da = apex.distance(*corners)
    print(f"\ncorner to corner: base {base}, clique {dc}, apex {da}")
    print(f"  sandwich dc <= da <= 2 dc: {dc} <= {da} <= {2 * dc}")

    # each row is crossed once per column, so every edge has multiplicity 1
    cert = fineness_certificate(g, rows)
    print(f"\nfineness certificate:")
    print(f"  max members through one edge: {cert.multiplicity} "
          f"at {cert.multiplicity_edge}")
    print(f"  max hyperplanes crossing two members: {cert.common_crossings} "
          f"for pair {cert.crossing_pair}")

    print("\nsimple cycles through the edge ('0,0', '1,0') of the clique cone-off:")
    for length in (3, 4, 5):
        count, method = cycle_probe(clique, ("0,0", "1,0"), length)
        print(f"  length {length}: {count} ({method})")


if __name__ == "__main__":
    main()
