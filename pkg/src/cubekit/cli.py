"""The ``cubekit`` command line tool.

One binary with a subcommand tree (``median``, ``diag``, ``coneoff``,
``racg``, ``sc``, ``poly``) that parses the text formats, dispatches into
the library, and emits either a human summary or deterministic JSON.

Every report carries the input digests, the parameters, a list of results
tagged with their method (exact, lower_bound, or one_sided), the statement
each command checks, and the wall-clock duration.  Exit codes: 0 for a
computed or passing result, 1 when a pass/fail verdict is negative, 2 for
input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .diagnostics import (
    APEX,
    CLIQUE,
    EXACT,
    bigon_thinness,
    cone_off,
    contracting,
    cycle_probe,
    delta,
    fineness_certificate,
    max_grid,
    max_thick_rectangle,
)
from .errors import CubekitError
from .formats import parse_graph, parse_polygons, parse_subsets
from .median import L1, LINF, MedianGraph
from .polygonal import (
    PolygonalComplex,
    classify_maximal_cubes,
    dual_cube_complex,
    dual_projection,
    pieces,
    polygonal_sc_check,
    separation_transfer,
    walls,
)
from .racg import (
    LARGE_JOINS,
    SQUARES,
    DefiningGraph,
    ball,
    contracting_generators,
    j_sequence,
    normal_form,
    relhyp_report,
)
from .smallcancel import check_small_cancellation, presentation_from_text

ONE_SIDED = "one_sided"

ANCHORS = {
    "median check": "a graph is median when every vertex triple has exactly one median vertex",
    "median hyperplanes": "hyperplanes are edge classes under opposite-sides-of-a-square and split the graph into two halfspaces",
    "median cubes": "cubes are vertex sets pairwise differing on a fixed set of pairwise transverse hyperplanes",
    "median dist": "l1 counts separating hyperplanes; linf counts the steps of greedy moves across disjoint hyperplane batches",
    "diag grid": "a (p,q)-grid is two families of hyperplanes, consecutively separating within each and fully transverse across",
    "diag rect": "a flat rectangle is an isometrically embedded a-by-b grid graph; L-thick when both sides reach L",
    "diag delta": "the four-point constant is half the defect between the two largest of the three pair-sum distances",
    "diag bigon": "bigon thinness is the largest divergence between two geodesics sharing both endpoints",
    "coneoff build": "coning off convex subcomplexes joins member vertices directly (clique) or through an apex; the two metrics differ by at most a factor of two",
    "coneoff fineness": "an edge lies in few members and two members cross few common hyperplanes when the cone-off is fine",
    "coneoff probe": "counting simple cycles of a fixed length through an edge probes fineness of the cone-off",
    "racg nf": "shortlex normal forms rewrite words using involutions and the commutations of the defining graph",
    "racg ball": "the ball of radius r in the Cayley graph of a right-angled Coxeter group is median",
    "racg squares": "induced 4-cycles of the defining graph generate flats in the group",
    "racg contracting": "a generator's wall is contracting exactly when the generator lies on no induced square",
    "racg jdecomp": "iterating merge-and-close on square joins reaches the canonical minimal join decomposition",
    "racg relhyp": "the group is hyperbolic relative to the decomposition's members unless the iteration swallows the whole graph",
    "sc check": "pieces are common prefixes of distinct symmetrized relators; C'(lambda) bounds pieces below lambda times the relator, T(q) forbids short relator cycles",
    "poly validate": "polygons must close up, embed, and have an even number of at least four sides",
    "poly sc": "pieces are shared boundary paths; C'(lambda) bounds them against both polygons, C(n) forbids covering a boundary by fewer than n pieces, T(n) forbids short link cycles",
    "poly walls": "walls are edge classes under opposite-in-a-polygon; cutting one splits a small-cancellation complex in two",
    "poly dual": "orienting every wall consistently and closing under compatible flips cubulates the wall space into a median graph",
    "poly classify": "every maximal dual cube comes from an isolated edge or from a polygon with twice its dimension in sides",
    "poly project": "a dual vertex projects to the center, midpoint, or vertex of the intersection of its surrounding polygons; R+2 disjoint dual hyperplanes transfer to R disjoint walls",
}


@dataclass
class AnalysisReport:
    command: str
    inputs: list[dict]
    parameters: dict
    results: list[dict]
    verdict: bool | None
    anchors: list[str]
    duration_s: float


def _plain(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, (frozenset, set)):
        items = [_plain(v) for v in x]
        try:
            return sorted(items)
        except TypeError:
            return sorted(items, key=repr)
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def _read(path: str) -> tuple[str, dict]:
    with open(path, "rb") as fh:
        data = fh.read()
    return data.decode("utf-8"), {
        "path": path,
        "sha256": hashlib.sha256(data).hexdigest(),
    }


def _result(quantity, value, method=EXACT, witness=None):
    out = {"quantity": quantity, "value": _plain(value), "method": method}
    if witness is not None:
        out["witness"] = _plain(witness)
    return out


def _emit(report: AnalysisReport, as_json: bool) -> int:
    if as_json:
        payload = {
            "command": report.command,
            "inputs": report.inputs,
            "parameters": _plain(report.parameters),
            "results": report.results,
            "verdict": report.verdict,
            "anchors": report.anchors,
            "duration_s": round(report.duration_s, 6),
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(report.command)
        for inp in report.inputs:
            print(f"  input {inp['path']}  sha256:{inp['sha256'][:12]}")
        for k, v in sorted(report.parameters.items()):
            print(f"  param {k} = {_plain(v)}")
        for r in report.results:
            line = f"{r['quantity']}: {r['value']}  [{r['method']}]"
            print(line)
            if "witness" in r:
                print(f"  witness: {r['witness']}")
        if report.verdict is not None:
            print("verdict:", "pass" if report.verdict else "fail")
    if report.verdict is False:
        return 1
    return 0


def _load_graph(path: str) -> tuple[MedianGraph, dict]:
    text, digest = _read(path)
    vs, es = parse_graph(text)
    return MedianGraph(vs, es), digest


def _load_median(path: str) -> tuple[MedianGraph, dict]:
    g, digest = _load_graph(path)
    g.require_median()
    return g, digest


def _load_complex(path: str) -> tuple[PolygonalComplex, dict]:
    text, digest = _read(path)
    return PolygonalComplex.from_raw(parse_polygons(text)), digest


def _metric(name: str) -> str:
    return LINF if name == "linf" else L1


# -- command handlers: each returns (inputs, parameters, results, verdict) ---------


def _cmd_median_check(args):
    g, digest = _load_graph(args.file)
    v = g.is_median()
    results = [
        _result("vertices", g.n),
        _result("edges", len(g.edges)),
        _result(
            "is_median",
            v.ok,
            witness=None if v.ok else {"triple": v.witness, "medians": v.medians},
        ),
    ]
    return [digest], {}, results, v.ok


def _cmd_median_hyperplanes(args):
    g, digest = _load_median(args.file)
    hps = g.hyperplanes()
    listing = [
        {
            "index": h.index,
            "dual_edges": h.dual_edges,
            "side_sizes": [len(h.side_a), len(h.side_b)],
            "dimension": h.dimension,
        }
        for h in hps
    ]
    return [digest], {}, [
        _result("hyperplane_count", len(hps)),
        _result("hyperplanes", listing),
    ], None


def _cmd_median_cubes(args):
    g, digest = _load_median(args.file)
    cubes = g.cubes()
    by_dim: dict[int, int] = {}
    for c in cubes:
        by_dim[c.dimension] = by_dim.get(c.dimension, 0) + 1
    maximal = [c for c in cubes if c.maximal]
    return [digest], {}, [
        _result("cube_count_by_dimension", {str(k): v for k, v in sorted(by_dim.items())}),
        _result("maximal_cube_count", len(maximal)),
        _result(
            "maximal_cubes",
            [
                {"dimension": c.dimension, "vertices": c.vertices}
                for c in sorted(maximal, key=lambda c: (c.dimension, sorted(c.vertices)))
            ],
        ),
    ], None


def _cmd_median_dist(args):
    g, digest = _load_median(args.file)
    m = _metric(args.metric)
    d = g.dist_matrix(m)
    ix, iy = g.indices_of([args.x, args.y])
    return [digest], {"metric": args.metric, "x": args.x, "y": args.y}, [
        _result("distance", int(d[ix, iy]))
    ], None


def _cmd_diag_grid(args):
    g, digest = _load_median(args.file)
    rep = max_grid(g, cap=args.cap)
    witness = None
    if rep.witnesses:
        best = rep.witnesses[-1]
        witness = {"verticals": best.verticals, "horizontals": best.horizontals}
    return [digest], {"cap": args.cap}, [
        _result("grid_pareto", rep.pareto, rep.method),
        _result("grid_thinness", rep.thinness, rep.method, witness),
    ], None


def _cmd_diag_rect(args):
    g, digest = _load_median(args.file)
    rep = max_thick_rectangle(g, cap=args.cap)
    witness = None
    if rep.best is not None:
        witness = {"a": rep.best.a, "b": rep.best.b, "embedding": rep.best.embedding}
    return [digest], {"cap": args.cap}, [
        _result("rectangle_pareto", rep.pareto, rep.method),
        _result("rectangle_thickness", rep.thickness, rep.method, witness),
    ], None


def _cmd_diag_delta(args):
    g, digest = _load_median(args.file)
    rep = delta(g, metric=_metric(args.metric))
    return [digest], {"metric": args.metric}, [
        _result("delta", rep.value, rep.method, rep.witness)
    ], None


def _cmd_diag_bigon(args):
    g, digest = _load_median(args.file)
    rep = bigon_thinness(g, metric=_metric(args.metric))
    return [digest], {"metric": args.metric}, [
        _result("bigon_thinness", rep.value, rep.method, rep.witness)
    ], None


def _cmd_coneoff_build(args):
    g, dg = _load_median(args.graph)
    text, ds = _read(args.subs)
    family = parse_subsets(text)
    cone = cone_off(g, family, kind=args.kind)
    results = [
        _result("kind", cone.kind),
        _result("members", sorted(cone.members)),
        _result("vertices", cone.graph.n),
        _result("edges", len(cone.graph.edges)),
    ]
    params = {"kind": args.kind}
    if args.pair:
        x, y = args.pair
        results.append(_result("pair_distance", cone.distance(x, y)))
        params.update({"x": x, "y": y})
    return [dg, ds], params, results, None


def _cmd_coneoff_fineness(args):
    g, dg = _load_median(args.graph)
    text, ds = _read(args.subs)
    cert = fineness_certificate(g, parse_subsets(text))
    return [dg, ds], {}, [
        _result("edge_multiplicity", cert.multiplicity, witness=cert.multiplicity_edge),
        _result("common_crossings", cert.common_crossings, witness=cert.crossing_pair),
    ], None


def _cmd_coneoff_probe(args):
    g, dg = _load_median(args.graph)
    text, ds = _read(args.subs)
    cone = cone_off(g, parse_subsets(text), kind=args.kind)
    count, method = cycle_probe(cone, tuple(args.edge), args.probe_length)
    return [dg, ds], {
        "kind": args.kind,
        "edge": list(args.edge),
        "probe_length": args.probe_length,
    }, [_result("cycle_count", count, method)], None


def _load_defining(path: str) -> tuple[DefiningGraph, dict]:
    text, digest = _read(path)
    vs, es = parse_graph(text)
    return DefiningGraph(vs, es), digest


def _cmd_racg_nf(args):
    dg, digest = _load_defining(args.file)
    nf = normal_form(dg, args.word)
    return [digest], {"word": list(args.word)}, [
        _result("normal_form", str(nf)),
        _result("length", len(nf)),
    ], None


def _cmd_racg_ball(args):
    dg, digest = _load_defining(args.file)
    b = ball(dg, args.radius)
    results = [
        _result("radius", b.radius),
        _result("vertices", b.graph.n),
        _result("edges", len(b.graph.edges)),
        _result("identity", b.identity),
    ]
    if b.note:
        results.append(_result("note", b.note, ONE_SIDED))
    return [digest], {"radius": args.radius}, results, None


def _cmd_racg_squares(args):
    dg, digest = _load_defining(args.file)
    squares = dg.induced_squares()
    return [digest], {}, [
        _result("square_count", len(squares)),
        _result("squares", squares),
        _result("square_vertices", dg.square_vertices()),
    ], None


def _cmd_racg_contracting(args):
    dg, digest = _load_defining(args.file)
    rep = contracting_generators(dg)
    return [digest], {}, [
        _result("contracting", dict(rep.contracting)),
        _result("star_peripherals", rep.star_peripherals),
        _result("join_peripherals", rep.join_peripherals),
    ], None


def _cmd_racg_jdecomp(args):
    dg, digest = _load_defining(args.file)
    rep = j_sequence(dg, seed=args.seed)
    return [digest], {"seed": args.seed}, [
        _result("trace", [list(step) for step in rep.trace]),
        _result("members", rep.members),
        _result("trivial", rep.trivial),
    ], None


def _cmd_racg_relhyp(args):
    dg, digest = _load_defining(args.file)
    rep = relhyp_report(dg, seed=args.seed)
    return [digest], {"seed": args.seed}, [
        _result("relatively_hyperbolic", rep.relatively_hyperbolic),
        _result("peripherals", rep.peripherals),
        _result("meaning", rep.meaning),
        _result("trace", [list(step) for step in rep.decomposition.trace]),
    ], rep.relatively_hyperbolic


def _cmd_sc_check(args):
    text, digest = _read(args.file)
    values = None
    if args.values:
        values = tuple(int(t) for t in args.values.split(","))
    pres = presentation_from_text(text, values=values)
    lam = Fraction(args.lam)
    verdict = check_small_cancellation(pres, lam, t=args.t)
    cp = verdict.cprime
    tv = verdict.t
    results = [
        _result("kind", verdict.kind),
        _result("relator_count", len(pres.relators)),
        _result("symmetrized_count", verdict.member_count),
        _result(
            "Cprime",
            "pass" if cp.passed else "fail",
            witness=None
            if cp.witness is None
            else {
                "piece": cp.witness.word,
                "length": cp.witness.length,
                "relator": cp.witness.relator,
                "ratio": cp.witness.ratio,
            },
        ),
        _result(
            "T",
            "pass" if tv.passed else "fail",
            witness=tv.witness,
        ),
    ]
    if tv.detail:
        results.append(_result("T_detail", tv.detail))
    for note in verdict.notes:
        results.append(_result("note", note))
    params = {"lambda": str(lam), "t": args.t}
    if values is not None:
        params["values"] = list(values)
    results.insert(2, _result("relators", [pres.display(r) for r in pres.relators]))
    return [digest], params, results, cp.passed and tv.passed


def _cmd_poly_validate(args):
    text, digest = _read(args.file)
    raw = parse_polygons(text)
    try:
        x = PolygonalComplex.from_raw(raw)
    except CubekitError as e:
        return [digest], {}, [
            _result("valid", False, witness=str(e))
        ], False
    return [digest], {}, [
        _result("valid", True),
        _result("vertices", len(x.ids)),
        _result("edges", len(x.edges)),
        _result("polygons", len(x.polygons)),
        _result("sides", {pid: x.sides(pid) for pid in sorted(x.polygons)}),
    ], True


def _cmd_poly_sc(args):
    x, digest = _load_complex(args.file)
    rep = polygonal_sc_check(
        x, Fraction(args.lam), n_cover=args.cover, n_link=args.link
    )
    results = [
        _result("piece_count", len(rep.pieces)),
        _result("max_piece", rep.max_piece),
        _result(
            "Cprime",
            "pass" if rep.metric.passed else "fail",
            witness=None
            if rep.metric.witness is None
            else {
                "piece_edges": rep.metric.witness[0].edges,
                "polygon": rep.metric.witness[1],
            },
        ),
        _result(
            "cover",
            "pass" if rep.cover.passed else "fail",
            witness=rep.cover.witness,
        ),
        _result("cover_values", dict(rep.cover.covers)),
        _result(
            "T",
            "pass" if rep.link.passed else "fail",
            witness=rep.link.witness,
        ),
    ]
    params = {"lambda": args.lam, "cover": args.cover, "link": args.link}
    return [digest], params, results, rep.passed


def _cmd_poly_walls(args):
    x, digest = _load_complex(args.file)
    ws = walls(x)
    listing = [
        {
            "index": w.index,
            "edges": w.edges,
            "polygons": w.polygons,
            "sides": [sorted(s) for s in w.sides],
            "two_sided": w.two_sided,
        }
        for w in ws
    ]
    return [digest], {}, [
        _result("wall_count", len(ws)),
        _result("walls", listing),
    ], None


def _cmd_poly_dual(args):
    x, digest = _load_complex(args.file)
    dc = dual_cube_complex(x)
    g = dc.graph
    results = [
        _result("vertices", g.n),
        _result("edges", len(g.edges)),
        _result("walls", len(dc.walls)),
        _result("hyperplane_walls", list(dc.hyperplane_walls)),
        _result(
            "graph",
            {
                "vertices": list(g.ids),
                "edges": [[g.ids[a], g.ids[b]] for a, b in g.edges],
            },
        ),
        _result("principal", dc.principal),
    ]
    return [digest], {}, results, None


def _render_dual_text(args) -> int:
    x, _ = _load_complex(args.file)
    dc = dual_cube_complex(x)
    g = dc.graph
    print(f"# dual cube complex of {args.file}")
    for v in g.ids:
        print(f"vertex {v}")
    for a, b in g.edges:
        print(f"edge {g.ids[a]} {g.ids[b]}")
    print("# sidecar: wall labels")
    for w in dc.walls:
        print(f"# wall {w.index} : {' '.join(w.edges)}")
    for j, k in enumerate(dc.hyperplane_walls):
        print(f"# hyperplane {j} -> wall {k}")
    for v in x.ids:
        print(f"# principal {v} -> {dc.principal[v]}")
    return 0


def _cmd_poly_classify(args):
    x, digest = _load_complex(args.file)
    dc = dual_cube_complex(x)
    rep = classify_maximal_cubes(dc)
    return [digest], {}, [
        _result("classified", rep.ok),
        _result(
            "tags",
            [
                {
                    "kind": t.kind,
                    "ref": t.ref,
                    "dimension": t.dimension,
                    "vertices": t.vertices,
                }
                for t in rep.tags
            ],
        ),
        _result(
            "unmatched",
            [{"walls": wset, "vertices": verts} for wset, verts in rep.unmatched],
        ),
    ], rep.ok


def _cmd_poly_project(args):
    x, digest = _load_complex(args.file)
    dc = dual_cube_complex(x)
    rep = classify_maximal_cubes(dc)

    def point_dict(pt):
        out = {"kind": pt.kind, "cell": list(pt.cell), "carrier": pt.carrier}
        if pt.path:
            out["path"] = pt.path
        if pt.note:
            out["note"] = pt.note
        return out

    pu = dual_projection(x, dc, args.vertex, rep)
    results = [_result("projection", point_dict(pu))]
    verdict = None
    params = {"vertex": args.vertex}
    if args.other:
        tr = separation_transfer(x, dc, args.vertex, args.other, rep)
        params["other"] = args.other
        results.append(_result("other_projection", point_dict(tr.point_w)))
        results.append(
            _result("dual_disjoint", tr.dual_disjoint, witness=tr.dual_family)
        )
        results.append(
            _result("wall_disjoint", tr.wall_disjoint, witness=tr.wall_family)
        )
        verdict = tr.holds
    return [digest], params, results, verdict


def _build_parser() -> argparse.ArgumentParser:
    root = argparse.ArgumentParser(
        prog="cubekit",
        description="median graphs, hyperbolicity diagnostics, Coxeter "
        "decompositions, small-cancellation checks, polygonal duals",
    )
    root.add_argument("--json", action="store_true", help="emit a JSON report")
    subs = root.add_subparsers(dest="module", required=True)

    def metric_flag(p):
        p.add_argument("--metric", choices=["l1", "linf"], default="l1")

    median = subs.add_parser("median").add_subparsers(dest="op", required=True)
    p = median.add_parser("check")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_median_check)
    p = median.add_parser("hyperplanes")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_median_hyperplanes)
    p = median.add_parser("cubes")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_median_cubes)
    p = median.add_parser("dist")
    p.add_argument("file")
    p.add_argument("x")
    p.add_argument("y")
    metric_flag(p)
    p.set_defaults(handler=_cmd_median_dist)

    diag = subs.add_parser("diag").add_subparsers(dest="op", required=True)
    p = diag.add_parser("grid")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=200_000)
    p.set_defaults(handler=_cmd_diag_grid)
    p = diag.add_parser("rect")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=50_000)
    p.set_defaults(handler=_cmd_diag_rect)
    p = diag.add_parser("delta")
    p.add_argument("file")
    metric_flag(p)
    p.set_defaults(handler=_cmd_diag_delta)
    p = diag.add_parser("bigon")
    p.add_argument("file")
    metric_flag(p)
    p.set_defaults(handler=_cmd_diag_bigon)

    cone = subs.add_parser("coneoff").add_subparsers(dest="op", required=True)
    p = cone.add_parser("build")
    p.add_argument("graph")
    p.add_argument("subs")
    p.add_argument("--kind", choices=[CLIQUE, APEX], default=CLIQUE)
    p.add_argument("--pair", nargs=2, metavar=("X", "Y"))
    p.set_defaults(handler=_cmd_coneoff_build)
    p = cone.add_parser("fineness")
    p.add_argument("graph")
    p.add_argument("subs")
    p.set_defaults(handler=_cmd_coneoff_fineness)
    p = cone.add_parser("probe")
    p.add_argument("graph")
    p.add_argument("subs")
    p.add_argument("--kind", choices=[CLIQUE, APEX], default=CLIQUE)
    p.add_argument("--edge", nargs=2, required=True, metavar=("X", "Y"))
    p.add_argument("--probe-length", type=int, default=3)
    p.set_defaults(handler=_cmd_coneoff_probe)

    racg = subs.add_parser("racg").add_subparsers(dest="op", required=True)
    p = racg.add_parser("nf")
    p.add_argument("file")
    p.add_argument("word", nargs="*")
    p.set_defaults(handler=_cmd_racg_nf)
    p = racg.add_parser("ball")
    p.add_argument("file")
    p.add_argument("-r", "--radius", type=int, required=True)
    p.set_defaults(handler=_cmd_racg_ball)
    p = racg.add_parser("squares")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_racg_squares)
    p = racg.add_parser("contracting")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_racg_contracting)
    p = racg.add_parser("jdecomp")
    p.add_argument("file")
    p.add_argument("--seed", choices=[SQUARES, LARGE_JOINS], default=SQUARES)
    p.set_defaults(handler=_cmd_racg_jdecomp)
    p = racg.add_parser("relhyp")
    p.add_argument("file")
    p.add_argument("--seed", choices=[SQUARES, LARGE_JOINS], default=SQUARES)
    p.set_defaults(handler=_cmd_racg_relhyp)

    sc = subs.add_parser("sc").add_subparsers(dest="op", required=True)
    p = sc.add_parser("check")
    p.add_argument("file")
    p.add_argument("--lambda", dest="lam", default="1/4")
    p.add_argument("--t", type=int, default=4)
    p.add_argument("--values", help="comma-separated parameter values")
    p.set_defaults(handler=_cmd_sc_check)

    poly = subs.add_parser("poly").add_subparsers(dest="op", required=True)
    p = poly.add_parser("validate")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_poly_validate)
    p = poly.add_parser("sc")
    p.add_argument("file")
    p.add_argument("--lambda", dest="lam", default="1/4")
    p.add_argument("--cover", type=int, default=4)
    p.add_argument("--link", type=int, default=4)
    p.set_defaults(handler=_cmd_poly_sc)
    p = poly.add_parser("walls")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_poly_walls)
    p = poly.add_parser("dual")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_poly_dual)
    p = poly.add_parser("classify")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_poly_classify)
    p = poly.add_parser("project")
    p.add_argument("file")
    p.add_argument("vertex")
    p.add_argument("other", nargs="?")
    p.set_defaults(handler=_cmd_poly_project)

    return root


def _print_version() -> int:
    print(f"cubekit {__version__}")
    print("command anchors:")
    for cmd in sorted(ANCHORS):
        print(f"  {cmd}: {ANCHORS[cmd]}")
    return 0


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if "--version" in argv:
        return _print_version()
    parser = _build_parser()
    args = parser.parse_args(argv)
    command = f"{args.module} {args.op}"
    # plain-text dual export doubles as the graph-format round-trip surface
    if command == "poly dual" and not args.json:
        try:
            return _render_dual_text(args)
        except (CubekitError, OSError) as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
    start = time.perf_counter()
    try:
        inputs, params, results, verdict = args.handler(args)
    except (CubekitError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    report = AnalysisReport(
        command=command,
        inputs=inputs,
        parameters=params,
        results=results,
        verdict=verdict,
        anchors=[ANCHORS[command]],
        duration_s=time.perf_counter() - start,
    )
    return _emit(report, args.json)


if __name__ == "__main__":
    raise SystemExit(main())
