import json
import math

import pytest
from click.testing import CliRunner

from oddsrule.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args, **kwargs):
    return runner.invoke(main, list(args), catch_exceptions=False, **kwargs)


class TestAnalyze:
    def test_inline_text(self, runner):
        res = invoke(runner, "analyze", "0,0,0.5,0,0")
        assert res.exit_code == 0
        assert "s             3" in res.output
        assert "V_n           0.5" in res.output
        assert "[equality]" in res.output

    def test_inline_json(self, runner):
        res = invoke(runner, "analyze", "0,0,0.5,0,0", "--format", "json")
        assert res.exit_code == 0
        doc = json.loads(res.output)
        assert doc["n"] == 5
        assert doc["s"] == 3
        assert doc["v_n"] == 0.5
        assert doc["bounds"]["upper"]["equality"] is True
        assert doc["bounds"]["upper"]["value"] == 0.5

    def test_out_of_range_exits_2(self, runner):
        res = invoke(runner, "analyze", "1.5")
        assert res.exit_code == 2
        assert "outside [0, 1]" in res.output

    def test_empty_exits_2(self, runner):
        res = invoke(runner, "analyze", ",")
        assert res.exit_code == 2

    def test_nan_token_exits_2(self, runner):
        res = invoke(runner, "analyze", "0.2,nan")
        assert res.exit_code == 2

    def test_two_sources_rejected(self, runner):
        res = invoke(runner, "analyze", "0.5", "--secretary", "4")
        assert res.exit_code == 2

    def test_no_source_rejected(self, runner):
        res = invoke(runner, "analyze")
        assert res.exit_code == 2

    def test_file_lines(self, runner, tmp_path):
        path = tmp_path / "probs.txt"
        path.write_text("0\n0\n0.5\n0\n0\n")
        res = invoke(runner, "analyze", "--file", str(path), "--format", "json")
        assert res.exit_code == 0
        assert json.loads(res.output)["s"] == 3

    def test_file_json(self, runner, tmp_path):
        path = tmp_path / "probs.json"
        path.write_text(json.dumps({"p": [0.2, 0.2, 0.2, 0.2]}))
        res = invoke(runner, "analyze", "--file", str(path), "--format", "json")
        assert res.exit_code == 0
        doc = json.loads(res.output)
        assert doc["bounds"]["lower"]["case"] == 2
        assert doc["bounds"]["lower"]["equality"] is True

    def test_missing_file_exits_2(self, runner, tmp_path):
        res = invoke(runner, "analyze", "--file", str(tmp_path / "nope.txt"))
        assert res.exit_code == 2

    def test_infinite_sums_render_as_strings(self, runner):
        res = invoke(runner, "analyze", "1,0.2", "--format", "json")
        assert res.exit_code == 0
        doc = json.loads(res.output)
        assert doc["suffix_sums"][0] == "inf"
        assert doc["v_n_odds_ratio"] is None

    def test_secretary_source(self, runner):
        res = invoke(runner, "analyze", "--secretary", "10", "--format", "json")
        doc = json.loads(res.output)
        assert doc["s"] == 4
        assert abs(doc["v_n"] - 0.39869047619047626) < 1e-12

    def test_extremal_source(self, runner):
        res = invoke(
            runner, "analyze", "--extremal", "case2:n=4,s=1", "--format", "json"
        )
        doc = json.loads(res.output)
        assert doc["bounds"]["lower"]["equality"] is True

    def test_json_byte_identical(self, runner):
        a = invoke(runner, "analyze", "0.3,0.1,0.7", "--format", "json")
        b = invoke(runner, "analyze", "0.3,0.1,0.7", "--format", "json")
        assert a.output == b.output


class TestSecretaryCommand:
    def test_matches_analyze(self, runner):
        direct = invoke(runner, "secretary", "10", "--format", "json")
        via_analyze = invoke(
            runner, "analyze", "--secretary", "10", "--format", "json"
        )
        assert direct.output == via_analyze.output

    def test_rejects_zero(self, runner):
        assert invoke(runner, "secretary", "0").exit_code == 2


class TestOracleCheck:
    def test_tie_sequence_agrees(self, runner):
        res = invoke(
            runner, "oracle-check", "0.5,0.5", "--trials", "100000", "--seed", "42"
        )
        assert res.exit_code == 0
        assert "MISMATCH" not in res.output

    def test_single_item(self, runner):
        res = invoke(runner, "oracle-check", "0.3", "--trials", "20000")
        assert res.exit_code == 0

    def test_large_n_skips_exhaustive(self, runner):
        probs = ",".join(["0.2"] * 25)
        res = invoke(runner, "oracle-check", probs, "--trials", "20000")
        assert res.exit_code == 0
        assert "skipped" in res.output

    def test_json_mode(self, runner):
        res = invoke(
            runner,
            "oracle-check",
            "0,0,0.5,0,0",
            "--trials",
            "50000",
            "--format",
            "json",
        )
        assert res.exit_code == 0
        doc = json.loads(res.output)
        assert doc["agree"] is True
        assert doc["values"]["formula"] == 0.5
        assert abs(doc["values"]["exhaustive"] - 0.5) < 1e-15


class TestSweep:
    def test_reference_row(self, runner, tmp_path):
        out = tmp_path / "sweep.csv"
        res = invoke(runner, "sweep", "--n", "10", "--s", "4", "--rs", "1", "-o", str(out))
        assert res.exit_code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "n,s,R_s,case,lower,upper,corollary,v_n"
        fields = lines[1].split(",")
        assert fields[0] == "10" and fields[1] == "4"
        assert float(fields[4]) == pytest.approx((8 / 7) ** -7, abs=1e-12)
        assert float(fields[5]) == 0.5
        # case 2 at R_s = 1: the equal-window config fills v_n
        assert fields[7] != ""
        assert float(fields[7]) == pytest.approx((8 / 7) ** -7, abs=1e-12)

    def test_degenerate_point(self, runner, tmp_path):
        out = tmp_path / "sweep.csv"
        res = invoke(runner, "sweep", "--n", "6", "--s", "6", "--rs", "1.5", "-o", str(out))
        assert res.exit_code == 0
        fields = out.read_text().splitlines()[1].split(",")
        assert float(fields[6]) == 0.5  # corollary at s = n
        assert fields[3] == "2"  # case 3 unreachable at s = n

    def test_inconsistent_point_skipped_with_notice(self, runner, tmp_path):
        out = tmp_path / "sweep.csv"
        res = runner.invoke(
            main,
            ["sweep", "--n", "6", "--s", "2,3", "--rs", "0.5,2", "-o", str(out)],
        )
        assert res.exit_code == 0
        assert "skipping inconsistent point" in res.output
        body = out.read_text().splitlines()[1:]
        assert all(line.split(",")[2] != "0.5" for line in body)

    def test_byte_identical_runs(self, runner, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["--n", "4:8", "--s", "1:3", "--rs", "0.25,1,1.5,3"]
        assert invoke(runner, "sweep", *args, "-o", str(a)).exit_code == 0
        assert invoke(runner, "sweep", *args, "-o", str(b)).exit_code == 0
        assert a.read_bytes() == b.read_bytes()

    def test_all_rows_lower_le_upper(self, runner, tmp_path):
        out = tmp_path / "sweep.csv"
        invoke(
            runner, "sweep", "--n", "3:12:3", "--s", "1:12", "--rs",
            "0.5,1,1.2,2,5", "-o", str(out),
        )
        for line in out.read_text().splitlines()[1:]:
            fields = line.split(",")
            assert float(fields[4]) <= float(fields[5]) + 1e-12

    def test_empty_grid_exits_2(self, runner, tmp_path):
        res = runner.invoke(
            main, ["sweep", "--n", "5:4", "--s", "1", "--rs", "1", "-o",
                   str(tmp_path / "x.csv")],
        )
        assert res.exit_code == 2

    def test_unwritable_path_exits_2(self, runner):
        res = runner.invoke(
            main, ["sweep", "--n", "5", "--s", "1", "--rs", "1", "-o",
                   "/nonexistent-dir/out.csv"],
        )
        assert res.exit_code == 2

    def test_stdout_dash(self, runner):
        res = invoke(runner, "sweep", "--n", "5", "--s", "2", "--rs", "1,2", "-o", "-")
        assert res.exit_code == 0
        assert res.output.startswith("n,s,R_s,case,lower,upper,corollary,v_n")


class TestExtremalCommand:
    def test_upper_reference(self, runner):
        res = invoke(runner, "extremal", "upper", "--n", "5", "--s", "3", "--rs", "1")
        assert res.exit_code == 0
        assert res.output.splitlines()[0] == "0,0,0.5,0,0"

    def test_case2_reference(self, runner):
        res = invoke(runner, "extremal", "case2", "--n", "4", "--s", "1")
        assert res.output.splitlines()[0] == "0.2,0.2,0.2,0.2"

    def test_case3_reference(self, runner):
        res = invoke(
            runner, "extremal", "case3", "--n", "2", "--s", "1",
            "--alpha", "0.5", "--format", "json",
        )
        doc = json.loads(res.output)
        assert doc["p"][0] == pytest.approx(2 / 3, abs=1e-15)
        assert doc["p"][1] == pytest.approx(1 / 3, abs=1e-15)
        assert doc["v_n"] == pytest.approx(5 / 9, abs=1e-14)
        assert doc["attainment"] == "limiting"
        assert doc["v_n"] > doc["target_bound"]

    def test_inconsistent_exits_2(self, runner):
        res = runner.invoke(
            main, ["extremal", "upper", "--n", "5", "--s", "3", "--rs", "0.5"]
        )
        assert res.exit_code == 2

    def test_round_trip_through_analyze(self, runner):
        gen = invoke(runner, "extremal", "case1", "--n", "3", "--rs", "0.7")
        probs = gen.output.splitlines()[0]
        res = invoke(runner, "analyze", probs, "--format", "json")
        doc = json.loads(res.output)
        assert doc["bounds"]["lower"]["case"] == 1
        assert doc["bounds"]["lower"]["equality"] is True

    def test_case3_round_trip_is_strictly_above(self, runner):
        gen = invoke(runner, "extremal", "case3", "--n", "6", "--s", "2")
        probs = gen.output.splitlines()[0]
        res = invoke(runner, "analyze", probs, "--format", "json")
        low = json.loads(res.output)["bounds"]["lower"]
        assert low["case"] == 3
        assert low["strict"] is True
        assert low["satisfied"] is True
        assert low["equality"] is False


class TestSimulate:
    def test_deterministic(self, runner):
        args = ["simulate", "0,0,0.5,0,0", "--trials", "30000", "--seed", "7",
                "--format", "json"]
        a = runner.invoke(main, args, catch_exceptions=False)
        b = runner.invoke(main, args, catch_exceptions=False)
        assert a.output == b.output
        doc = json.loads(a.output)
        assert doc["k"] == 3  # defaults to the optimal threshold
        assert abs(doc["estimate"] - doc["exact"]) <= 5 * doc["std_error"]

    def test_explicit_k(self, runner):
        res = invoke(
            runner, "simulate", "0,0,0.5,0,0", "--k", "5", "--trials", "1000",
            "--format", "json",
        )
        doc = json.loads(res.output)
        assert doc["wins"] == 0
        assert doc["exact"] == 0.0

    def test_env_var_sets_trials(self, runner):
        res = runner.invoke(
            main,
            ["simulate", "0.5,0.5", "--seed", "1", "--format", "json"],
            env={"ODDSRULE_TRIALS": "12345"},
            catch_exceptions=False,
        )
        assert json.loads(res.output)["trials"] == 12345

    def test_bad_k_exits_2(self, runner):
        res = runner.invoke(main, ["simulate", "0.5", "--k", "9", "--trials", "10"])
        assert res.exit_code == 2
