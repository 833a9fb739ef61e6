import numpy as np
import pytest

from hyperim import import_benson, load_edge_list
from hyperim.cli import main
from synthetic import random_hypergraph

DEMO = "0 1 2 3\n0 4 5\n2 3 6\n2 3 6\n"


@pytest.fixture
def demo_path(tmp_path):
    path = tmp_path / "demo.txt"
    path.write_text(DEMO)
    return str(path)


@pytest.fixture
def benson_prefix(tmp_path):
    (tmp_path / "toy-nverts.txt").write_text("2\n3\n")
    (tmp_path / "toy-simplices.txt").write_text("1\n2\n1\n3\n4\n")
    return str(tmp_path / "toy")


def run(args):
    return main(args)


class TestConvert:
    def test_benson_round_trip(self, benson_prefix, tmp_path):
        out = tmp_path / "converted.txt"
        assert run(["convert", "--input", benson_prefix, "--format", "benson",
                    "--output", str(out)]) == 0
        with open(out) as handle:
            converted = load_edge_list(handle)
        with open(benson_prefix + "-nverts.txt") as nv, \
                open(benson_prefix + "-simplices.txt") as sx:
            assert converted == import_benson(nv, sx)

    def test_edge_list_canonicalizes(self, tmp_path):
        src = tmp_path / "messy.txt"
        src.write_text("# comment\n2 1 1\n\n0 2\n")
        out = tmp_path / "clean.txt"
        assert run(["convert", "--input", str(src), "--output", str(out)]) == 0
        assert out.read_text() == "1 2\n0 2\n"

    def test_missing_file_is_data_error(self, tmp_path):
        assert run(["convert", "--input", str(tmp_path / "nope.txt")]) == 2


class TestStats:
    def test_schema_and_values(self, demo_path, tmp_path, capsys):
        assert run(["stats", "--input", demo_path]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "dataset,vertices,hyperedges,edges,avg_deg,avg_size,theta_lstar"
        fields = lines[1].split(",")
        assert fields[0] == "demo.txt"
        assert fields[1:4] == ["7", "4", "11"]
        assert float(fields[4]) == pytest.approx(2 * 11 / 7, rel=1e-5)


class TestGenRR:
    def test_schema(self, demo_path, capsys):
        assert run(["gen-rr", "--input", demo_path, "--theta", "50",
                    "--algo", "naive", "--seed", "3"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("algo,theta,total_members,size_draws")
        fields = lines[1].split(",")
        assert fields[0] == "naive"
        assert int(fields[3]) == 0  # no size draws for the naive sampler
        assert int(fields[5]) > 0


class TestSeeds:
    def test_deterministic_across_workers_and_repeats(self, demo_path, tmp_path):
        outputs = []
        for tag, workers in (("a", "1"), ("b", "8"), ("c", "1")):
            out = tmp_path / f"seeds_{tag}.csv"
            assert run(["seeds", "--input", demo_path, "--k", "2",
                        "--theta", "400", "--seed", "9", "--workers", workers,
                        "--output", str(out)]) == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1] == outputs[2]

    def test_brr_reports_bounds_and_iterations(self, demo_path, capsys):
        assert run(["seeds", "--input", demo_path, "--algo", "hyperim-brr",
                    "--k", "2", "--epsilon", "0.2", "--delta", "0.1",
                    "--seed", "5"]) == 0
        out = capsys.readouterr().out
        lines = out.splitlines()
        assert lines[0] == ("rank,vertex,marginal_coverage,cumulative_coverage,"
                            "influence_estimate,lower,upper,ratio")
        assert "iter,theta,coverage,lower,upper,ratio,stopped" in lines

    def test_single_hyperedge_returns_a_member(self, tmp_path, capsys):
        path = tmp_path / "one.txt"
        path.write_text("0 1 2\n")
        assert run(["seeds", "--input", str(path), "--k", "1",
                    "--theta", "100", "--seed", "0"]) == 0
        first_row = capsys.readouterr().out.splitlines()[1]
        assert first_row.split(",")[1] in {"0", "1", "2"}

    def test_k_list_rejected_outside_bench(self, demo_path):
        assert run(["seeds", "--input", demo_path, "--k", "1,2"]) == 1


class TestEvaluate:
    def test_schema(self, demo_path, capsys):
        assert run(["evaluate", "--input", demo_path, "--k", "2",
                    "--theta", "200", "--runs", "500", "--seed", "2"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "model,k,runs,mean_spread,stderr,wall_ms"
        fields = lines[1].split(",")
        assert fields[:3] == ["ic", "2", "500"]
        assert 1.0 <= float(fields[3]) <= 7.0

    def test_explicit_seed_list(self, demo_path, capsys):
        assert run(["evaluate", "--input", demo_path, "--seeds", "0,2",
                    "--runs", "300", "--seed", "2"]) == 0
        fields = capsys.readouterr().out.splitlines()[1].split(",")
        assert fields[1] == "2"


class TestBench:
    def test_requires_two_algos(self, demo_path):
        assert run(["bench", "--input", demo_path, "--algo", "hyperim"]) == 1

    def test_rows_and_counter_relation(self, demo_path, capsys):
        assert run(["bench", "--input", demo_path, "--algo", "hyperim,naive",
                    "--k", "1,2", "--theta", "300", "--runs", "300",
                    "--seed", "6"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("algo,k,rr_count,spread_mean")
        rows = [line.split(",") for line in lines[1:]]
        assert len(rows) == 4
        by_algo_k = {(r[0], r[1]): r for r in rows}
        for k in ("1", "2"):
            stratified = int(by_algo_k[("hyperim", k)][5])
            flips = int(by_algo_k[("naive", k)][7])
            assert stratified <= flips

    def test_duplicate_algo_rows_agree(self, demo_path, capsys):
        assert run(["bench", "--input", demo_path, "--algo", "hyperim,hyperim",
                    "--k", "2", "--theta", "200", "--runs", "200",
                    "--seed", "6"]) == 0
        rows = [line.split(",")[:-1]  # drop wall_ms
                for line in capsys.readouterr().out.splitlines()[1:]]
        assert rows[0] == rows[1]


class TestExitCodes:
    def test_usage_error(self):
        assert run(["seeds"]) == 1

    def test_unknown_command(self):
        assert run(["frobnicate"]) == 1

    def test_parse_error(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("0 x\n")
        assert run(["stats", "--input", str(path)]) == 2

    def test_empty_input(self, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_text("# nothing\n")
        assert run(["stats", "--input", str(path)]) == 2


def test_benson_conversion_matches_direct_load(tmp_path):
    rng = np.random.default_rng(61)
    h = random_hypergraph(rng, 40, 60, duplicate_fraction=0.2)
    nverts = "\n".join(str(len(he)) for he in h.hyperedges) + "\n"
    simplices = "\n".join(str(v + 1) for he in h.hyperedges for v in he) + "\n"
    (tmp_path / "rand-nverts.txt").write_text(nverts)
    (tmp_path / "rand-simplices.txt").write_text(simplices)
    out = tmp_path / "rand.txt"
    assert main(["convert", "--input", str(tmp_path / "rand"), "--format", "benson",
                 "--output", str(out)]) == 0
    with open(out) as handle:
        assert load_edge_list(handle) == h
