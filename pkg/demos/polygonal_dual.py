"""From an even polygonal complex to its dual cube complex and back.

Two hexagons sharing an edge: walls pair opposite edges, orientations of
the wall set cubulate into a median graph, maximal cubes classify back to
the polygons, and dual vertices project to points of the complex.

Run with: python3 demos/polygonal_dual.py
"""

from fractions import Fraction

from cubekit.polygonal import (
    PolygonalComplex,
    classify_maximal_cubes,
    dual_cube_complex,
    dual_projection,
    pieces,
    polygonal_sc_check,
    separation_transfer,
    walls,
)


def two_hexagons():
    vs = [f"v{i}" for i in range(6)] + [f"w{i}" for i in range(4)]
    es = {f"e{i}": (f"v{i}", f"v{(i + 1) % 6}") for i in range(6)}
    ring = ["v1", "w0", "w1", "w2", "w3", "v0"]
    for i in range(5):
        es[f"f{i}"] = (ring[i], ring[i + 1])
    polys = {
        "P": [(f"e{i}", 1) for i in range(6)],
        "Q": [("e0", 1)] + [(f"f{i}", 1) for i in range(5)],
    }
    return PolygonalComplex(vs, es, polys)


def square_chain(n):
    vs = [f"t{i}" for i in range(n + 1)] + [f"b{i}" for i in range(n + 1)]
    es = {f"v{i}": (f"t{i}", f"b{i}") for i in range(n + 1)}
    for i in range(n):
        es[f"top{i}"] = (f"t{i}", f"t{i + 1}")
        es[f"bot{i}"] = (f"b{i}", f"b{i + 1}")
    polys = {
        f"P{i}": [(f"top{i}", 1), (f"v{i + 1}", 1), (f"bot{i}", -1), (f"v{i}", -1)]
        for i in range(n)
    }
    return PolygonalComplex(vs, es, polys)


def main():
    x = two_hexagons()
    print(f"two hexagons sharing edge e0: {len(x.ids)} vertices, "
          f"{len(x.edges)} edges, {len(x.polygons)} polygons")

    for pc in pieces(x):
        print(f"  piece {pc.edges} between {pc.polygons}")

    rep = polygonal_sc_check(x, Fraction(1, 4))
    print(f"C'(1/4): {'pass' if rep.metric.passed else 'fail'}, "
          f"C(4): {'pass' if rep.cover.passed else 'fail'}, "
          f"T(4): {'pass' if rep.link.passed else 'fail'}")

    ws = walls(x)
    print(f"\n{len(ws)} walls:")
    for w in ws:
        print(f"  wall {w.index}: edges {w.edges} carried by {w.polygons}")

    dc = dual_cube_complex(x)
    print(f"\ndual cube complex: {dc.graph.n} vertices, "
          f"{len(dc.graph.edges)} edges, median: {dc.graph.is_median().ok}")

    tags = classify_maximal_cubes(dc)
    for t in tags.tags:
        print(f"  {t.kind} over {t.ref!r}: dimension {t.dimension}, "
              f"{len(t.vertices)} dual vertices")

    # the shared edge survives as the projection of the middle dual vertices
    kinds = {}
    for v in dc.graph.ids:
        pt = dual_projection(x, dc, v, tags)
        kinds.setdefault((pt.kind, pt.cell), []).append(v)
    print("\nprojections of the dual vertices:")
    for (kind, cell), vs in sorted(kinds.items()):
        print(f"  {kind} at {cell}: {len(vs)} vertices")

    chain = square_chain(6)
    dchain = dual_cube_complex(chain)
    ctags = classify_maximal_cubes(dchain)
    ids = dchain.graph.ids
    far = max(
        ((u, w) for u in ids for w in ids),
        key=lambda p: dchain.graph.distance(*p),
    )
    tr = separation_transfer(chain, dchain, *far, ctags)
    print(f"\nseparation transfer across a 6-square chain, pair {far}:")
    print(f"  disjoint dual hyperplanes: {tr.dual_disjoint}")
    print(f"  disjoint walls missing both cells: {tr.wall_disjoint}")
    print(f"  transfer (lose at most two): {'holds' if tr.holds else 'fails'}")


if __name__ == "__main__":
    main()
