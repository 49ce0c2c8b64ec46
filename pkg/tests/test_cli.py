import json

import pytest
from hypothesis import given, settings

from test_graph import graphs
from truemper.cli.io import (
    ParseError,
    parse_edge_list,
    parse_graph6,
    render_edge_list,
    render_graph6,
)
from truemper.cli.main import generate, main
from truemper.cli.report import DETECT_KEYS, ORACLE_KEYS, XCHECK_KEYS
from truemper.detectors.pipeline import witness_to_model
from truemper.graph import Graph
from truemper.patterns import ConfigSpec, cube, make_config, make_gk, plant
from truemper.witness import BrokenWheel, Prism, Pyramid, Theta, validate_witness


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, g, name="g.txt"):
    p = tmp_path / name
    p.write_text(render_edge_list(g))
    return p


def witness_from_json(d):
    kind = d["kind"]
    paths = tuple(tuple(p) for p in d.get("paths", ()))
    if kind == "theta":
        return Theta(*d["hubs"], paths)
    if kind == "pyramid":
        return Pyramid(d["apex"], tuple(d["triangle"]), paths)
    if kind == "long-prism":
        return Prism(tuple(d["triangles"][0]), tuple(d["triangles"][1]), paths)
    return BrokenWheel(tuple(d["rim"]), d["center"])


class TestFormats:
    def test_edge_list_comments(self):
        g = parse_edge_list("# K2\n2 1  # header\n\n0 1\n")
        assert g == Graph(2, [(0, 1)])

    @pytest.mark.parametrize("text", [
        "", "3\n", "3 1\n0 1\n1 2\n", "3 2\n0 1\n1 0\n", "3 2\n0 1\n0 1\n",
        "3 1\n0 3\n", "3 1\n1 1\n", "3 1\n0 x\n", "3 1\n0 1 2\n", "-1 0\n",
    ])
    def test_edge_list_rejects(self, text):
        with pytest.raises(ParseError):
            parse_edge_list(text)

    def test_graph6_rejects(self):
        with pytest.raises(ParseError):
            parse_graph6("not graph6 at all\n")

    def test_graph6_known(self):
        assert parse_graph6("Bw\n")[0] == Graph(3, [(0, 1), (0, 2), (1, 2)])

    @settings(max_examples=200)
    @given(graphs(max_n=12))
    def test_round_trip(self, g):
        assert parse_edge_list(render_edge_list(g)) == g
        assert parse_graph6(render_graph6(g)) == [g]

    @pytest.mark.parametrize("spec", [("theta", (2, 3, 4)), ("pyramid", (1, 2, 4)), ("prism", (3, 1, 2)),
                                      ("broken-wheel", (1, 3, 1, 3))])
    def test_round_trip_generated(self, spec):
        for seed in range(10):
            g = plant(ConfigSpec(*spec), 6, 0.4, seed, relabel=True)
            assert parse_edge_list(render_edge_list(g)) == g
            assert parse_graph6(render_graph6(g)) == [g]
        for k in (1, 2, 3):
            assert parse_graph6(render_graph6(make_gk(k))) == [make_gk(k)]


class TestDetect:
    def test_k23(self, tmp_path, capsys):
        p = write(tmp_path, make_config(ConfigSpec("theta", (2, 2, 2)))[0])
        code, out, _ = run(capsys, "detect", p)
        rep = json.loads(out)
        assert code == 0 and rep["contains_k23"] and rep["stage"] == "theta"
        assert list(rep) == [k for k in DETECT_KEYS if k in rep]
        assert rep["schema"] == "truemper-report/1"

    def test_c10(self, tmp_path, capsys):
        code, out, _ = run(capsys, "detect", write(tmp_path, generate("cycle", ["10"], 0)))
        rep = json.loads(out)
        assert code == 0 and rep["contains_k23"] is False and rep["stage"] == "none"
        assert rep["witness"] is None and rep["model"] is None

    def test_stage_broken_wheel_on_cube(self, tmp_path, capsys):
        code, out, _ = run(capsys, "detect", "--stage", "broken-wheel", write(tmp_path, cube()))
        rep = json.loads(out)
        assert rep["contains_k23"] and rep["stage"] == "broken-wheel"
        assert rep["precondition"]["satisfied"] is True

    def test_stage_precondition_violation(self, tmp_path, capsys):
        g = make_config(ConfigSpec("theta", (2, 2, 2)))[0]
        _, out, _ = run(capsys, "detect", "--stage", "broken-wheel", write(tmp_path, g))
        rep = json.loads(out)
        assert rep["precondition"] == {"required": "pyramid-theta-long-prism-free", "satisfied": False,
                                       "violated_by": "theta"}
        assert rep["stage"] == "theta"

    def test_witness_only(self, tmp_path, capsys):
        g = make_config(ConfigSpec("pyramid", (1, 2, 2)))[0]
        _, out, _ = run(capsys, "detect", "--witness", write(tmp_path, g))
        rep = json.loads(out)
        assert "witness" in rep and "model" not in rep

    def test_witnesses_validate_against_input(self, tmp_path, capsys):
        for kind, ls in [("theta", (2, 3, 2)), ("pyramid", (2, 1, 3)), ("prism", (2, 2, 1)),
                         ("broken-wheel", (1, 2, 1, 2))]:
            g = plant(ConfigSpec(kind, ls), 5, 0.3, 4, relabel=True)
            _, out, _ = run(capsys, "detect", write(tmp_path, g))
            rep = json.loads(out)
            w = witness_from_json(rep["witness"])
            assert validate_witness(g, w)
            assert witness_to_model(g, w).as_lists() == rep["model"]

    def test_deterministic(self, tmp_path, capsys):
        p = write(tmp_path, plant(ConfigSpec("broken-wheel", (2, 2, 2)), 5, 0.3, 1))
        a = run(capsys, "detect", "--no-timings", p)[1]
        b = run(capsys, "detect", "--no-timings", p)[1]
        assert a == b and "timings_ms" not in a

    def test_graph6_input(self, tmp_path, capsys):
        p = tmp_path / "k.g6"
        run(capsys, "gen", "theta", 2, 2, 2, "--format", "graph6", "--out", p)
        code, out, _ = run(capsys, "detect", p)
        assert code == 0 and json.loads(out)["stage"] == "theta"

    def test_stdin(self, monkeypatch, capsys):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("4 4\n0 1\n1 2\n2 3\n3 0\n"))
        code, out, _ = run(capsys, "detect", "-")
        assert code == 0 and json.loads(out)["input"] == "-"

    def test_parse_error(self, tmp_path, capsys):
        p = tmp_path / "bad.txt"
        p.write_text("3 2\n0 1\n1 0\n")
        code, _, err = run(capsys, "detect", p)
        assert code == 3 and "duplicate" in err

    def test_missing_file(self, tmp_path, capsys):
        code, _, err = run(capsys, "detect", tmp_path / "nope.txt")
        assert code == 3 and err

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["detect", "--stage", "wheel", "x"])
        assert exc.value.code == 2


class TestOracle:
    def test_separators_k23(self, tmp_path, capsys):
        g = make_config(ConfigSpec("theta", (2, 2, 2)))[0]
        _, out, _ = run(capsys, "oracle", "--method", "separators", write(tmp_path, g))
        rep = json.loads(out)
        assert rep["contains_k23"] and rep["certificate"] == {"separator": [2, 3, 4]}
        assert list(rep) == [k for k in ORACLE_KEYS if k in rep]

    def test_model_tree(self, tmp_path, capsys):
        tree = Graph(7, [(1, 0), (2, 0), (3, 1), (4, 1), (5, 2), (6, 2)])
        _, out, _ = run(capsys, "oracle", "--method", "model", write(tmp_path, tree))
        rep = json.loads(out)
        assert rep["contains_k23"] is False and rep["certificate"] is None

    def test_exhaustive_short_prism(self, tmp_path, capsys):
        g = make_config(ConfigSpec("prism", (1, 1, 1)))[0]
        _, out, _ = run(capsys, "oracle", "--method", "exhaustive", write(tmp_path, g))
        assert json.loads(out)["contains_k23"] is False

    def test_size_refusal(self, tmp_path, capsys):
        p = write(tmp_path, generate("cycle", ["15"], 0))
        code, _, err = run(capsys, "oracle", "--method", "model", p)
        assert code == 4 and "--force" in err
        code, out, _ = run(capsys, "oracle", "--method", "model", "--force", p)
        assert code == 0 and json.loads(out)["contains_k23"] is False
        assert run(capsys, "oracle", "--method", "separators", p)[0] == 0
        p21 = write(tmp_path, generate("cycle", ["21"], 0), "c21.txt")
        assert run(capsys, "oracle", "--method", "separators", p21)[0] == 4


class TestGen:
    def test_gk1(self, capsys):
        _, out, _ = run(capsys, "gen", "gk", 1)
        assert parse_edge_list(out) == make_gk(1)
        assert out.splitlines()[0] == "4 4"

    def test_cube(self, capsys):
        _, out, _ = run(capsys, "gen", "cube")
        assert out.splitlines()[0] == "8 12"

    def test_theta_is_k23(self, capsys):
        _, out, _ = run(capsys, "gen", "theta", 2, 2, 2)
        g = parse_edge_list(out)
        assert sorted(g.degree(v) for v in range(g.n)) == [2, 2, 2, 3, 3]

    def test_seeded(self, capsys, tmp_path):
        a = run(capsys, "gen", "random", 12, 0.4, "--seed", 3)[1]
        b = run(capsys, "gen", "random", 12, 0.4, "--seed", 3)[1]
        c = run(capsys, "gen", "chordal", 12, "--seed", 3)[1]
        assert a == b and a != c

    def test_plant(self, capsys):
        _, out, _ = run(capsys, "gen", "plant", "broken-wheel", 1, 2, 2, "--background", 6,
                        "--edge-prob", 0.3, "--seed", 42)
        assert parse_edge_list(out).n == 12

    @pytest.mark.parametrize("argv", [["theta", "1", "2", "2"], ["gk", "0"], ["gk"], ["cube", "3"],
                                      ["random", "5"], ["pyramid", "a", "b", "c"], ["plant"]])
    def test_bad_params(self, capsys, argv):
        assert run(capsys, "gen", *argv)[0] == 2


class TestXcheck:
    def test_empty(self, capsys):
        code, out, err = run(capsys, "xcheck", "--n", 0, "--count", 1)
        rep = json.loads(out)
        assert code == 0 and rep["agreement"]["all"] == rep["agreement"]["total"] == 1
        assert rep["positives"]["pipeline"] == 0
        assert list(rep) == [k for k in XCHECK_KEYS if k in rep]
        assert "agreement 1/1" in err

    def test_random(self, capsys):
        code, out, _ = run(capsys, "xcheck", "--n", 10, "--count", 500, "--p", 0.3, "--seed", 7)
        rep = json.loads(out)
        assert code == 0 and rep["agreement"]["all"] == 500
        assert rep["counterexample"] is None

    def test_exhaustive_n6(self, capsys):
        code, out, err = run(capsys, "xcheck", "--n", 6, "--count", "exhaustive", "--no-timings")
        rep = json.loads(out)
        assert code == 0 and "agreement 32768/32768" in err
        assert all(v == 32768 for row in rep["agreement"]["matrix"] for v in row)

    def test_workers_give_same_report(self, capsys, monkeypatch):
        argv = ("xcheck", "--n", 8, "--count", 60, "--seed", 2, "--no-timings")
        one = run(capsys, *argv)[1]
        monkeypatch.setenv("TRUEMPER_THREADS", "2")
        two = run(capsys, *argv)[1]
        assert one == two

    def test_refusals(self, capsys):
        assert run(capsys, "xcheck", "--n", 15, "--count", 1)[0] == 4
        assert run(capsys, "xcheck", "--n", 8, "--count", "exhaustive")[0] == 4
        with pytest.raises(SystemExit) as exc:
            main(["xcheck", "--n", "5", "--count", "lots"])
        assert exc.value.code == 2

    def test_disagreement_exit(self, capsys, monkeypatch):
        import importlib

        cli = importlib.import_module("truemper.cli.main")
        real = cli.check_one
        monkeypatch.setattr(cli, "check_one", lambda n, e: (not real(n, e)[0],) + real(n, e)[1:])
        code, out, _ = run(capsys, "xcheck", "--n", 5, "--count", 3)
        rep = json.loads(out)
        assert code == 5 and rep["counterexample"]["graph"].startswith("5 ")


def test_bench(tmp_path, capsys):
    code, out, _ = run(capsys, "bench", "--n", 8, 12, "--count", 3, "--out-dir", tmp_path / "b")
    assert code == 0
    csv_text = (tmp_path / "b" / "bench.csv").read_text().splitlines()
    assert csv_text[0].startswith("n,p,index,seed") and len(csv_text) == 7
    assert (tmp_path / "b" / "bench.png").stat().st_size > 1000
