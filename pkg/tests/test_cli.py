"""End-to-end tests for the cubekit command line tool."""

import json

import pytest

from cubekit import cli
from cubekit.formats import parse_graph
from cubekit.median import MedianGraph

SQUARE = """\
vertex a
vertex b
vertex c
vertex d
edge a b
edge b c
edge c d
edge d a
"""

K23 = """\
vertex u1
vertex u2
vertex w1
vertex w2
vertex w3
edge u1 w1
edge u1 w2
edge u1 w3
edge u2 w1
edge u2 w2
edge u2 w3
"""

C5 = """\
vertex a
vertex b
vertex c
vertex d
vertex e
edge a b
edge b c
edge c d
edge d e
edge e a
"""

SUBS = """\
sub top : a b
sub side : b c
"""

HEX_POLY = """\
vertex v0
vertex v1
vertex v2
vertex v3
vertex v4
vertex v5
edge e0 v0 v1
edge e1 v1 v2
edge e2 v2 v3
edge e3 v3 v4
edge e4 v4 v5
edge e5 v5 v0
polygon P : +e0 +e1 +e2 +e3 +e4 +e5
"""

TRIANGLE_POLY = """\
vertex p
vertex q
vertex r
edge e1 p q
edge e2 q r
edge e3 r p
polygon P : +e1 +e2 +e3
"""

PENTAGON_POWER = """\
generators a b
param k = 1,2,3
relator (a^k b^k)^5
"""

SQUARE_POWER = """\
generators a b
param k = 1,2,3
relator (a^k b^k)^4
"""


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def run_json(capsys, argv):
    code = cli.main(["--json"] + argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestExitCodes:
    def test_median_pass_is_zero(self, files, capsys):
        assert cli.main(["median", "check", files("g", SQUARE)]) == 0

    def test_median_fail_is_one(self, files, capsys):
        code, rep = run_json(capsys, ["median", "check", files("g", K23)])
        assert code == 1
        assert rep["verdict"] is False
        witness = rep["results"][2]["witness"]
        assert sorted(witness["triple"]) == ["w1", "w2", "w3"]

    def test_missing_file_is_two(self, capsys):
        assert cli.main(["median", "check", "/nonexistent/g.graph"]) == 2

    def test_parse_error_is_two(self, files, capsys):
        code = cli.main(["median", "check", files("g", "vertex a\nedge a\n")])
        assert code == 2
        assert "line 2" in capsys.readouterr().err

    def test_semantic_error_is_two(self, files, capsys):
        # parses fine, fails graph validation inside the library
        text = "vertex a\nvertex b\nedge a b\nedge a b\n"
        assert cli.main(["median", "check", files("g", text)]) == 2

    def test_relhyp_verdicts(self, files, capsys):
        assert cli.main(["racg", "relhyp", files("c4", SQUARE)]) == 1
        assert cli.main(["racg", "relhyp", files("c5", C5)]) == 0

    def test_odd_polygon_split_by_phase(self, files, capsys):
        path = files("t", TRIANGLE_POLY)
        # validate treats the rejection as its own verdict
        code, rep = run_json(capsys, ["poly", "validate", path])
        assert code == 1
        assert rep["verdict"] is False
        assert "3 sides" in rep["results"][0]["witness"]
        # any analysis needing the complex reports an input error
        assert cli.main(["poly", "sc", path]) == 2


class TestReportShape:
    def test_json_fields(self, files, capsys):
        code, rep = run_json(capsys, ["median", "check", files("g", SQUARE)])
        assert code == 0
        assert set(rep) == {
            "anchors",
            "command",
            "duration_s",
            "inputs",
            "parameters",
            "results",
            "verdict",
        }
        assert rep["command"] == "median check"
        assert len(rep["inputs"][0]["sha256"]) == 64
        for r in rep["results"]:
            assert {"quantity", "value", "method"} <= set(r)
            assert r["method"] in {"exact", "lower_bound", "one_sided"}

    def test_json_deterministic_modulo_duration(self, files, capsys):
        path = files("p", PENTAGON_POWER)
        _, a = run_json(capsys, ["sc", "check", path])
        _, b = run_json(capsys, ["sc", "check", path])
        a.pop("duration_s")
        b.pop("duration_s")
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)

    def test_anchor_echoed(self, files, capsys):
        _, rep = run_json(capsys, ["diag", "grid", files("g", SQUARE)])
        assert rep["anchors"] == [cli.ANCHORS["diag grid"]]

    def test_version_lists_every_command(self, capsys):
        assert cli.main(["--version"]) == 0
        out = capsys.readouterr().out
        for cmd in cli.ANCHORS:
            assert cmd in out

    def test_anchor_keys_match_command_tree(self):
        expected = {
            "median check",
            "median hyperplanes",
            "median cubes",
            "median dist",
            "diag grid",
            "diag rect",
            "diag delta",
            "diag bigon",
            "coneoff build",
            "coneoff fineness",
            "coneoff probe",
            "racg nf",
            "racg ball",
            "racg squares",
            "racg contracting",
            "racg jdecomp",
            "racg relhyp",
            "sc check",
            "poly validate",
            "poly sc",
            "poly walls",
            "poly dual",
            "poly classify",
            "poly project",
        }
        assert set(cli.ANCHORS) == expected


class TestMedianCommands:
    def test_hyperplane_listing(self, files, capsys):
        _, rep = run_json(capsys, ["median", "hyperplanes", files("g", SQUARE)])
        results = {r["quantity"]: r for r in rep["results"]}
        assert results["hyperplane_count"]["value"] == 2
        listing = results["hyperplanes"]["value"]
        assert all(h["dimension"] == 2 for h in listing)
        assert all(h["side_sizes"] == [2, 2] for h in listing)

    def test_cubes(self, files, capsys):
        _, rep = run_json(capsys, ["median", "cubes", files("g", SQUARE)])
        results = {r["quantity"]: r for r in rep["results"]}
        assert results["maximal_cube_count"]["value"] == 1
        assert results["cube_count_by_dimension"]["value"] == {"1": 4, "2": 1}

    def test_dist_metrics(self, files, capsys):
        path = files("g", SQUARE)
        _, l1 = run_json(capsys, ["median", "dist", path, "a", "c"])
        _, li = run_json(
            capsys, ["median", "dist", path, "a", "c", "--metric", "linf"]
        )
        assert l1["results"][0]["value"] == 2
        assert li["results"][0]["value"] == 1
        assert li["parameters"]["metric"] == "linf"


class TestDiagCommands:
    def test_grid_witness(self, files, capsys):
        _, rep = run_json(capsys, ["diag", "grid", files("g", SQUARE)])
        results = {r["quantity"]: r for r in rep["results"]}
        assert results["grid_thinness"]["value"] == 1
        w = results["grid_thinness"]["witness"]
        assert len(w["verticals"]) == 1 and len(w["horizontals"]) == 1

    def test_delta_and_bigon(self, files, capsys):
        path = files("g", SQUARE)
        _, d = run_json(capsys, ["diag", "delta", path, "--metric", "linf"])
        assert d["results"][0]["value"] == 0
        _, b = run_json(capsys, ["diag", "bigon", path])
        assert b["results"][0]["value"] == 1


class TestConeoffCommands:
    def test_build_with_pair(self, files, capsys):
        g, s = files("g", SQUARE), files("s", SUBS)
        _, rep = run_json(capsys, ["coneoff", "build", g, s, "--pair", "a", "c"])
        results = {r["quantity"]: r for r in rep["results"]}
        assert results["members"]["value"] == ["side", "top"]
        assert results["pair_distance"]["value"] == 2
        assert len(rep["inputs"]) == 2

    def test_apex_build(self, files, capsys):
        g, s = files("g", SQUARE), files("s", SUBS)
        _, rep = run_json(capsys, ["coneoff", "build", g, s, "--kind", "apex"])
        results = {r["quantity"]: r for r in rep["results"]}
        assert results["vertices"]["value"] == 6

    def test_fineness(self, files, capsys):
        g, s = files("g", SQUARE), files("s", SUBS)
        _, rep = run_json(capsys, ["coneoff", "fineness", g, s])
        results = {r["quantity"]: r for r in rep["results"]}
        assert results["edge_multiplicity"]["value"] == 1
        assert results["common_crossings"]["value"] == 0

    def test_probe(self, files, capsys):
        g, s = files("g", SQUARE), files("s", SUBS)
        _, rep = run_json(
            capsys,
            ["coneoff", "probe", g, s, "--edge", "a", "b", "--probe-length", "4"],
        )
        r = rep["results"][0]
        assert r["quantity"] == "cycle_count"
        assert r["method"] in {"exact", "lower_bound"}


class TestRacgCommands:
    def test_nf(self, files, capsys):
        _, rep = run_json(capsys, ["racg", "nf", files("g", SQUARE), "a", "b", "a"])
        results = {r["quantity"]: r for r in rep["results"]}
        assert results["normal_form"]["value"] == "b"
        assert results["length"]["value"] == 1

    def test_ball(self, files, capsys):
        _, rep = run_json(capsys, ["racg", "ball", files("g", C5), "-r", "2"])
        results = {r["quantity"]: r for r in rep["results"]}
        assert results["vertices"]["value"] == 21

    def test_squares(self, files, capsys):
        _, rep = run_json(capsys, ["racg", "squares", files("g", SQUARE)])
        results = {r["quantity"]: r for r in rep["results"]}
        assert results["squares"]["value"] == [["a", "b", "c", "d"]]

    def test_contracting(self, files, capsys):
        _, rep = run_json(capsys, ["racg", "contracting", files("g", C5)])
        results = {r["quantity"]: r for r in rep["results"]}
        assert all(results["contracting"]["value"].values())

    def test_jdecomp_trace(self, files, capsys):
        _, rep = run_json(capsys, ["racg", "jdecomp", files("g", SQUARE)])
        results = {r["quantity"]: r for r in rep["results"]}
        assert results["trace"]["value"] == [[["a", "b", "c", "d"]]]
        assert results["trivial"]["value"] is True

    def test_relhyp_report(self, files, capsys):
        code, rep = run_json(capsys, ["racg", "relhyp", files("g", C5)])
        assert code == 0
        results = {r["quantity"]: r for r in rep["results"]}
        assert results["peripherals"]["value"] == []
        assert "trace" in results


class TestScCommand:
    def test_pass(self, files, capsys):
        code, rep = run_json(capsys, ["sc", "check", files("p", PENTAGON_POWER)])
        assert code == 0
        results = {r["quantity"]: r for r in rep["results"]}
        assert results["Cprime"]["value"] == "pass"
        assert results["T"]["value"] == "pass"
        assert rep["verdict"] is True

    def test_fail_with_piece_witness(self, files, capsys):
        code, rep = run_json(capsys, ["sc", "check", files("p", SQUARE_POWER)])
        assert code == 1
        results = {r["quantity"]: r for r in rep["results"]}
        assert results["Cprime"]["value"] == "fail"
        assert results["Cprime"]["witness"]["length"] == 2
        assert results["T"]["value"] == "pass"

    def test_values_filter(self, files, capsys):
        path = files("p", SQUARE_POWER)
        code, rep = run_json(capsys, ["sc", "check", path, "--values", "1"])
        results = {r["quantity"]: r for r in rep["results"]}
        assert results["relator_count"]["value"] == 1
        assert rep["parameters"]["values"] == [1]

    def test_bad_lambda_is_input_error(self, files, capsys):
        path = files("p", PENTAGON_POWER)
        assert cli.main(["sc", "check", path, "--lambda", "5/4"]) == 2


class TestPolyCommands:
    def test_validate(self, files, capsys):
        code, rep = run_json(capsys, ["poly", "validate", files("h", HEX_POLY)])
        assert code == 0
        results = {r["quantity"]: r for r in rep["results"]}
        assert results["sides"]["value"] == {"P": 6}

    def test_sc(self, files, capsys):
        code, rep = run_json(capsys, ["poly", "sc", files("h", HEX_POLY)])
        assert code == 0
        results = {r["quantity"]: r for r in rep["results"]}
        assert results["cover_values"]["value"] == {"P": None}

    def test_walls(self, files, capsys):
        _, rep = run_json(capsys, ["poly", "walls", files("h", HEX_POLY)])
        results = {r["quantity"]: r for r in rep["results"]}
        listing = results["walls"]["value"]
        assert len(listing) == 3
        assert all(w["two_sided"] for w in listing)
        assert listing[0]["edges"] == ["e0", "e3"]

    def test_dual_text_roundtrip(self, files, capsys):
        cli.main(["poly", "dual", files("h", HEX_POLY)])
        out = capsys.readouterr().out
        vs, es = parse_graph(out)
        g = MedianGraph(vs, es)
        assert g.n == 8 and len(g.edges) == 12
        assert g.is_median().ok
        assert "# wall 0 : e0 e3" in out
        assert "# principal v0 ->" in out

    def test_dual_json(self, files, capsys):
        _, rep = run_json(capsys, ["poly", "dual", files("h", HEX_POLY)])
        results = {r["quantity"]: r for r in rep["results"]}
        assert results["vertices"]["value"] == 8
        assert sorted(results["hyperplane_walls"]["value"]) == [0, 1, 2]
        graph = results["graph"]["value"]
        assert len(graph["vertices"]) == 8 and len(graph["edges"]) == 12

    def test_classify(self, files, capsys):
        code, rep = run_json(capsys, ["poly", "classify", files("h", HEX_POLY)])
        assert code == 0
        results = {r["quantity"]: r for r in rep["results"]}
        tags = results["tags"]["value"]
        assert tags[0]["kind"] == "cell-cube" and tags[0]["dimension"] == 3

    def test_project_and_transfer(self, files, capsys):
        path = files("h", HEX_POLY)
        code, rep = run_json(capsys, ["poly", "project", path, "o000"])
        assert code == 0
        assert rep["results"][0]["value"]["kind"] == "polygon-center"
        code, rep = run_json(capsys, ["poly", "project", path, "o000", "o111"])
        assert code == 0
        results = {r["quantity"]: r for r in rep["results"]}
        assert results["dual_disjoint"]["value"] == 1
        assert rep["verdict"] is True

    def test_unknown_dual_vertex_is_input_error(self, files, capsys):
        assert cli.main(["poly", "project", files("h", HEX_POLY), "zzz"]) == 2
