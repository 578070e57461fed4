"""
End-to-end tests of the skeletal command line: exit codes, artifacts and configuration.
"""

import json
from pathlib import Path

import pandas as pd
import pytest

from conftest import cycle
from generators import complete_kpartite
from harness import parse_seed_range
from hgraph import ArgumentError
from hgraph.io import dumps, load_hypergraph, save_hypergraph
from main import build_parser, main

GOLDEN_DIR = Path(__file__).parent / "golden"

# subcommand, argv, exit code; inputs come from the golden_inputs fixture
GOLDEN = [
    ("gen", ["gen", "complete-kpartite", "--sizes", "2,2"], 0),
    ("degeneracy", ["degeneracy", "--in", "k22.json", "--i", "1"], 0),
    ("validate", ["validate", "--in", "k22.json"], 0),
    ("prune", ["prune", "--in", "edgeless.json", "--d", "1"], 2),
    ("embed", ["embed", "--host", "edgeless.json", "--pattern", "k22.json", "--mode", "anchored"], 2),
    ("turan-lb", ["turan-lb", "--family", "complete", "--k", "2", "--d", "2", "--n", "1"], 0),
    ("brute-ex", ["brute-ex", "--pattern", "triangle.json", "--n", "4"], 0),
    ("brute-ramsey", ["brute-ramsey", "--pattern", "triangle.json", "--q", "2", "--N-max", "4"], 0),
    ("ramsey", ["ramsey", "--pattern", "triangle.json", "--q", "2", "--N", "3", "--exhaustive"], 0),
]


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    """Run every command from an empty directory with no SKELETAL_* variables set."""
    monkeypatch.chdir(tmp_path)
    for name in ("SEED", "RETRIES", "CAPS", "OUT", "FORMAT", "PAPER_CONSTANTS", "LOG_LEVEL"):
        monkeypatch.delenv(f"SKELETAL_{name}", raising=False)


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "triangle.json"
    save_hypergraph(cycle(3), path)
    return path


def read(path):
    return json.loads(path.read_text(encoding="utf-8"))


class TestUsage:

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["frobnicate"],
            ["gen"],
            ["gen", "complete-kpartite", "--sizes", "2,2", "--cap", "bogus=3"],
            ["gen", "complete-kpartite", "--sizes", "2,2", "--cap", "cliques=many"],
        ],
    )
    def test_usage_errors_exit_one(self, argv):
        assert main(argv) == 1

    def test_missing_family_parameter(self, tmp_path):
        assert main(["gen", "hedgehog", "--k", "3", "--out", str(tmp_path / "h.json")]) == 1
        assert not (tmp_path / "h.json").exists()

    def test_missing_input_file(self, tmp_path):
        assert main(["degeneracy", "--in", str(tmp_path / "absent.json")]) == 1

    def test_seed_ranges(self):
        assert parse_seed_range("7") == [7]
        assert parse_seed_range("0..2") == [0, 1, 2]
        with pytest.raises(ArgumentError):
            parse_seed_range("3..1")
        with pytest.raises(ArgumentError):
            parse_seed_range("a..b")


class TestStructures:

    def test_gen_writes_a_loadable_hypergraph(self, tmp_path):
        out = tmp_path / "octahedron.json"
        assert main(["gen", "complete-kpartite", "--sizes", "2,2,2", "--out", str(out)]) == 0
        H = load_hypergraph(out)
        assert H.k == 3
        assert H.num_edges == 8
        assert H.partite_proper

    def test_gen_to_stdout(self, capsys):
        assert main(["gen", "hedgehog", "--k", "3", "--d", "2"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["n"] == 8
        assert len(payload["edges"]) == 4

    def test_gen_validate_degeneracy(self, tmp_path):
        graph = tmp_path / "g.json"
        assert main(["gen", "complete-kpartite", "--sizes", "2,2,2", "--out", str(graph)]) == 0
        assert main(["validate", "--in", str(graph), "--out", str(tmp_path / "v.json")]) == 0
        assert read(tmp_path / "v.json")["result"]["kind"] == "hypergraph"

        out = tmp_path / "d.json"
        assert main(["degeneracy", "--in", str(graph), "--i", "1", "--out", str(out)]) == 0
        artifact = read(out)
        assert artifact["command"] == "degeneracy"
        assert artifact["status"] == "ok"
        assert artifact["result"]["value"] == 4
        assert artifact["result"]["verified"] is True
        assert "version" in artifact
        assert "out" not in artifact["config"]

    def test_degeneracy_index_out_of_range(self, triangle_file):
        assert main(["degeneracy", "--in", str(triangle_file), "--i", "2"]) == 1

    def test_validate_reports_duplicates(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(dumps({"k": 2, "n": 3, "edges": [[0, 1], [1, 0]]}), encoding="utf-8")
        out = tmp_path / "v.json"
        assert main(["validate", "--in", str(bad), "--out", str(out)]) == 1
        artifact = read(out)
        assert artifact["status"] == "invalid"
        assert artifact["result"]["diagnostics"]

    def test_validate_reports_json_line(self, tmp_path):
        bad = tmp_path / "broken.json"
        bad.write_text('{\n  "k": 2,\n  "n": oops\n}\n', encoding="utf-8")
        out = tmp_path / "v.json"
        assert main(["validate", "--in", str(bad), "--out", str(out)]) == 1
        assert read(out)["result"]["diagnostics"][0]["line"] == 3

    def test_validate_coloring(self, tmp_path):
        coloring = tmp_path / "f.json"
        coloring.write_text(dumps({"N": 3, "k": 2, "q": 2, "colors": [0, 1, 2]}), encoding="utf-8")
        out = tmp_path / "v.json"
        assert main(["validate", "--in", str(coloring), "--out", str(out)]) == 1
        assert read(out)["result"]["kind"] == "coloring"


class TestStages:

    def test_default_constants_fail_with_artifact(self, tmp_path, k22):
        host, pattern, out = tmp_path / "G.json", tmp_path / "H.json", tmp_path / "run.json"
        save_hypergraph(complete_kpartite([6, 6]), host)
        save_hypergraph(k22, pattern)
        assert main(["embed", "--host", str(host), "--pattern", str(pattern), "--out", str(out)]) == 2
        artifact = read(out)
        assert artifact["status"] == "failed"
        assert artifact["result"]["stage"] == "constants"
        assert artifact["result"]["reason"] == "subasymptotic"

    def test_overridden_constants_embed(self, tmp_path, k22):
        host, pattern, out = tmp_path / "G.json", tmp_path / "H.json", tmp_path / "run.json"
        save_hypergraph(complete_kpartite([8, 8]), host)
        save_hypergraph(k22, pattern)
        argv = ["embed", "--host", str(host), "--pattern", str(pattern), "--theta", "8", "--prune-t", "0"]
        assert main(argv + ["--tuple-length", "2", "--seed", "1", "--out", str(out)]) == 0
        result = read(out)["result"]
        assert len(result["mapping"]) == 4
        assert result["regime"] == "subasymptotic"

    def test_anchored_embed(self, tmp_path, k22, dense_bipartite):
        host, pattern, out = tmp_path / "G.json", tmp_path / "H.json", tmp_path / "run.json"
        save_hypergraph(dense_bipartite, host)
        save_hypergraph(k22, pattern)
        assert main(["embed", "--host", str(host), "--pattern", str(pattern), "--mode", "anchored", "--out", str(out)]) == 0
        assert len(read(out)["result"]["mapping"]) == 4

    def test_prune_complete_host(self, tmp_path, dense_bipartite):
        host, out = tmp_path / "G.json", tmp_path / "prune.json"
        save_hypergraph(dense_bipartite, host)
        assert main(["prune", "--in", str(host), "--d", "1", "--out", str(out)]) == 0
        result = read(out)["result"]
        assert result["trace"]["survivor_edges"] == dense_bipartite.num_edges
        assert all(result["trace"]["extending"])

    def test_brute_ex(self, tmp_path, triangle_file):
        out = tmp_path / "ex.json"
        assert main(["brute-ex", "--pattern", str(triangle_file), "--n", "5", "--out", str(out)]) == 0
        assert read(out)["result"]["value"] == 6

    def test_brute_ex_over_cap(self, tmp_path, triangle_file):
        out = tmp_path / "ex.json"
        assert main(["brute-ex", "--pattern", str(triangle_file), "--n", "9", "--out", str(out)]) == 2
        result = read(out)["result"]
        assert result["stage"] == "budget"
        assert result["best"]["value"] == len(result["best"]["witness"]["edges"])

    def test_brute_ramsey(self, tmp_path, triangle_file):
        out = tmp_path / "r.json"
        assert main(["brute-ramsey", "--pattern", str(triangle_file), "--q", "2", "--N-max", "6", "--out", str(out)]) == 0
        result = read(out)["result"]
        assert result["value"] == 6
        assert result["unknown"] is False

    def test_turan_seed_sweep(self, tmp_path):
        out = tmp_path / "lb.json"
        argv = ["turan-lb", "--family", "complete", "--k", "2", "--d", "2", "--n", "20", "--seeds", "0..2"]
        assert main(argv + ["--format", "csv", "--out", str(out)]) == 0
        reports = read(out)["result"]["reports"]
        assert [r["root_seed"] for r in reports] == [0, 1, 2]
        table = pd.read_csv(tmp_path / "lb.csv")
        assert list(table["root_seed"]) == [0, 1, 2]


class TestArtifacts:

    def ramsey(self, triangle_file, out, *extra):
        argv = ["ramsey", "--pattern", str(triangle_file), "--q", "2", "--N", "5", "--samples", "4"]
        return main(argv + list(extra) + ["--out", str(out)])

    def test_same_seed_same_bytes(self, tmp_path, triangle_file):
        assert self.ramsey(triangle_file, tmp_path / "a.json", "--seed", "7") == 0
        assert self.ramsey(triangle_file, tmp_path / "b.json", "--seed", "7") == 0
        assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()

    def test_csv_table(self, tmp_path, triangle_file):
        assert self.ramsey(triangle_file, tmp_path / "r.json", "--format", "csv") == 0
        table = pd.read_csv(tmp_path / "r.csv")
        assert len(table) == 4
        assert set(table["N"]) == {5}

    def test_seed_from_environment(self, tmp_path, triangle_file, monkeypatch):
        monkeypatch.setenv("SKELETAL_SEED", "0x10")
        assert self.ramsey(triangle_file, tmp_path / "env.json") == 0
        assert read(tmp_path / "env.json")["config"]["seed"] == 16
        assert self.ramsey(triangle_file, tmp_path / "flag.json", "--seed", "3") == 0
        assert read(tmp_path / "flag.json")["config"]["seed"] == 3

    def test_dotenv_file(self, tmp_path, triangle_file):
        (tmp_path / ".env").write_text("SKELETAL_RETRIES=5\n", encoding="utf-8")
        assert self.ramsey(triangle_file, tmp_path / "r.json") == 0
        assert read(tmp_path / "r.json")["config"]["retries"] == 5

    def test_cap_override_echoed(self, tmp_path, triangle_file):
        assert self.ramsey(triangle_file, tmp_path / "r.json", "--cap", "cliques=500", "--budget", "1000") == 0
        caps = read(tmp_path / "r.json")["config"]["caps"]
        assert caps["cliques"] == 500
        assert caps["search_nodes"] == 1000

    def test_exhaustive_over_cap_fails(self, tmp_path, triangle_file):
        out = tmp_path / "r.json"
        argv = ["ramsey", "--pattern", str(triangle_file), "--q", "2", "--N", "8", "--exhaustive"]
        assert main(argv + ["--out", str(out)]) == 2
        assert read(out)["status"] == "failed"


class TestGoldenArtifacts:
    """Default-config artifacts compared byte for byte with the checked-in copies under tests/golden."""

    @pytest.fixture
    def golden_inputs(self, tmp_path, k22):
        save_hypergraph(k22, tmp_path / "k22.json")
        save_hypergraph(cycle(3), tmp_path / "triangle.json")
        save_hypergraph(k22.with_edges([]), tmp_path / "edgeless.json")

    @pytest.mark.parametrize("name,argv,code", GOLDEN, ids=[case[0] for case in GOLDEN])
    def test_matches_golden(self, golden_inputs, tmp_path, name, argv, code):
        assert main(argv + ["--out", "artifact.json"]) == code
        assert (tmp_path / "artifact.json").read_bytes() == (GOLDEN_DIR / f"{name}.json").read_bytes()

    def test_every_subcommand_covered(self):
        subparsers = next(a for a in build_parser()._actions if a.dest == "command")
        assert sorted(case[0] for case in GOLDEN) == sorted(subparsers.choices)
