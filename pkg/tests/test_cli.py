import json
import re
import time

import pytest

from monkeytyper.cli import main

TABLE_ARGS = [
    "--attempts",
    "60,3101,159174,8096722,345380940",
    "--times",
    "0.0001,0.006,0.36,22.355,1097.5",
]


def run(argv):
    return main([str(a) for a in argv])


def read(out_dir, name):
    return (out_dir / name).read_text()


class TestSimulate:
    def test_single_cell_run(self, tmp_path, capsys):
        code = run(
            ["simulate", "--target", "a", "--alphabet", "a", "--max-prefix", "1",
             "--iterations", "1", "--out", tmp_path]
        )
        assert code == 0
        csv_text = read(tmp_path, "measurements.csv")
        assert "1,1,1," in csv_text
        assert "average,1,1.0," in csv_text
        out = capsys.readouterr().out
        assert "average,1,1.0" in out

    def test_manifest_lists_every_output(self, tmp_path):
        run(["simulate", "--target", "a", "--alphabet", "a", "--max-prefix", "1",
             "--iterations", "1", "--out", tmp_path])
        manifest = json.loads(read(tmp_path, "manifest.json"))
        assert manifest["command"] == "simulate"
        assert sorted(manifest["outputs"]) == ["manifest.json", "measurements.csv"]
        for name in manifest["outputs"]:
            assert (tmp_path / name).exists()

    def test_out_of_alphabet_character_named_in_diagnostic(self, tmp_path, capsys):
        code = run(
            ["simulate", "--alphabet", "letters+space", "--max-prefix", "8",
             "--iterations", "1", "--out", tmp_path]
        )
        assert code != 0
        assert "','" in capsys.readouterr().err

    def test_no_timing_runs_are_byte_identical(self, tmp_path):
        for sub in ("a", "b"):
            run(["simulate", "--target", "abab", "--alphabet", "ab", "--max-prefix", "3",
                 "--iterations", "5", "--seed", "7", "--no-timing",
                 "--out", tmp_path / sub])
        assert read(tmp_path / "a", "measurements.csv") == read(
            tmp_path / "b", "measurements.csv"
        )
        assert read(tmp_path / "a", "manifest.json") == read(
            tmp_path / "b", "manifest.json"
        )

    def test_rerun_from_manifest_reproduces_attempts(self, tmp_path):
        run(["simulate", "--target", "abab", "--alphabet", "ab", "--max-prefix", "3",
             "--iterations", "4", "--seed", "99", "--no-timing", "--out", tmp_path / "a"])
        config = json.loads(read(tmp_path / "a", "manifest.json"))["config"]
        run(["simulate", "--target", config["target"], "--alphabet", config["alphabet"],
             "--max-prefix", config["max_prefix"], "--iterations", config["iterations"],
             "--seed", config["seed"], "--budget", config["budget"],
             "--workers", config["workers"], "--no-timing", "--out", tmp_path / "b"])
        assert read(tmp_path / "a", "measurements.csv") == read(
            tmp_path / "b", "measurements.csv"
        )

    def test_extend_alphabet_flag(self, tmp_path):
        code = run(
            ["simulate", "--target", "a,", "--alphabet", "a", "--max-prefix", "2",
             "--iterations", "1", "--extend-alphabet", "--out", tmp_path]
        )
        assert code == 0
        manifest = json.loads(read(tmp_path, "manifest.json"))
        assert manifest["config"]["extend_alphabet"] is True


class TestProject:
    def test_from_lists_hits_published_projection(self, tmp_path, capsys):
        code = run(["project", *TABLE_ARGS, "--out", tmp_path])
        assert code == 0
        out = capsys.readouterr().out
        assert "attempts 2.68e69" in out
        assert "8.18e62" in out
        for name in (
            "projection.csv",
            "projection.json",
            "attempts_log10.csv",
            "seconds_log10.csv",
            "manifest.json",
        ):
            assert (tmp_path / name).exists()

    def test_projection_files_agree(self, tmp_path):
        run(["project", *TABLE_ARGS, "--out", tmp_path])
        rows = json.loads(read(tmp_path, "projection.json"))
        assert len(rows) == 41
        assert rows[-1]["attempts"] == "2.680e69"
        csv_lines = read(tmp_path, "projection.csv").splitlines()
        assert len(csv_lines) == 42
        assert csv_lines[0] == "prefix_len,text_part,attempts,seconds,hours,region"
        series = read(tmp_path, "attempts_log10.csv").splitlines()
        assert series[0] == "prefix_len,log10_attempts"
        assert len(series) == 42

    def test_paper_style_formatting(self, tmp_path):
        run(["project", *TABLE_ARGS, "--paper-style", "--out", tmp_path])
        text = read(tmp_path, "projection.csv")
        assert "2,68E+69" in text
        assert "6,00E+01" in text
        # formatting switch only: same structure either way
        assert text.splitlines()[0] == "prefix_len,text_part,attempts,seconds,hours,region"

    def test_base_echo_without_extrapolation(self, tmp_path):
        run(["project", "--attempts", "1,2,4", "--times", "1,2,4", "--target", "abc",
             "--out", tmp_path])
        rows = json.loads(read(tmp_path, "projection.json"))
        assert [r["region"] for r in rows] == ["measured"] * 3
        assert [r["attempts"] for r in rows] == ["1.000e0", "2.000e0", "4.000e0"]

    def test_from_measurements_file(self, tmp_path):
        run(["simulate", "--target", "abab", "--alphabet", "ab", "--max-prefix", "3",
             "--iterations", "5", "--seed", "11", "--out", tmp_path / "sim"])
        code = run(["project", "--measurements", tmp_path / "sim" / "measurements.csv",
                    "--target", "abab", "--out", tmp_path / "proj"])
        assert code == 0
        rows = json.loads(read(tmp_path / "proj", "projection.json"))
        assert len(rows) == 4

    def test_requires_two_base_points(self, tmp_path, capsys):
        code = run(["project", "--attempts", "60", "--times", "0.1", "--out", tmp_path])
        assert code != 0
        assert "at least 2" in capsys.readouterr().err

    def test_requires_some_input(self, tmp_path, capsys):
        with pytest.raises(SystemExit):
            run(["project", "--out", tmp_path])


class TestProb:
    def test_phrase(self, capsys):
        assert run(["prob", "--alphabet-size", "52", "--length", "41"]) == 0
        out = capsys.readouterr().out
        assert "success probability: 4.404e-71" in out
        assert "expected attempts: 2.271e70" in out

    def test_coin(self, capsys):
        run(["prob", "--alphabet-size", "2", "--length", "1"])
        assert "success probability: 5.000e-1" in capsys.readouterr().out

    def test_soliloquy(self, capsys):
        run(["prob", "--alphabet-size", "52", "--length", "1520"])
        out = capsys.readouterr().out
        match = re.search(r"success probability: (\d\.\d+)e(-\d+)", out)
        assert match and int(match.group(2)) == -2609
        assert abs(float(match.group(1)) - 4.73) <= 0.01

    def test_rejects_nonpositive(self, capsys):
        assert run(["prob", "--alphabet-size", "0", "--length", "5"]) == 2
        assert "positive" in capsys.readouterr().err

    def test_optional_out_writes_manifest(self, tmp_path):
        run(["prob", "--alphabet-size", "2", "--length", "1", "--out", tmp_path])
        manifest = json.loads(read(tmp_path, "manifest.json"))
        assert manifest["config"] == {"alphabet_size": 2, "length": 1}
        assert "5.000e-1" in read(tmp_path, "prob.txt")


class TestCensus:
    def test_bundled_corpus(self, capsys):
        assert run(["census", "--bundled-hamlet"]) == 0
        out = capsys.readouterr().out
        assert "raw" in out and "1520" in out and "matches" in out

    def test_small_file(self, tmp_path, capsys):
        path = tmp_path / "t.txt"
        path.write_text("To be")
        run(["census", "--file", path])
        out = capsys.readouterr().out
        assert re.search(r"raw\s+5", out)

    def test_empty_file(self, tmp_path, capsys):
        path = tmp_path / "empty.txt"
        path.write_text("")
        run(["census", "--file", path])
        out = capsys.readouterr().out
        assert re.search(r"raw\s+0", out)

    def test_unreadable_file_exits_nonzero(self, tmp_path, capsys):
        assert run(["census", "--file", tmp_path / "missing.txt"]) == 2
        assert "missing.txt" in capsys.readouterr().err

    def test_optional_out(self, tmp_path):
        run(["census", "--bundled-hamlet", "--out", tmp_path])
        assert "1520" in read(tmp_path, "census.txt")
        manifest = json.loads(read(tmp_path, "manifest.json"))
        assert manifest["config"]["source"] == "bundled-hamlet"


class TestReport:
    def test_published_data_summary(self, tmp_path, capsys):
        assert run(["report", "--use-paper-data", "--out", tmp_path]) == 0
        summary = read(tmp_path, "summary.txt")
        assert capsys.readouterr().out == summary
        assert "2.68e69" in summary
        assert "2.95e66" in summary
        assert "8.18e62" in summary
        assert "9.32e55" in summary  # published years figure, flagged not reproduced
        assert "census" in summary

    def test_published_data_bundle_files(self, tmp_path):
        run(["report", "--use-paper-data", "--out", tmp_path])
        manifest = json.loads(read(tmp_path, "manifest.json"))
        assert sorted(manifest["outputs"]) == [
            "attempts_log10.csv",
            "manifest.json",
            "projection.csv",
            "projection.json",
            "seconds_log10.csv",
            "summary.txt",
        ]
        for name in manifest["outputs"]:
            assert (tmp_path / name).exists()

    def test_published_data_runs_are_byte_identical(self, tmp_path):
        for sub in ("a", "b"):
            run(["report", "--use-paper-data", "--no-timing", "--out", tmp_path / sub])
        for name in json.loads(read(tmp_path / "a", "manifest.json"))["outputs"]:
            assert read(tmp_path / "a", name) == read(tmp_path / "b", name)

    def test_fresh_simulation_bundle(self, tmp_path):
        code = run(
            ["report", "--target", "abab", "--alphabet", "ab", "--max-prefix", "3",
             "--iterations", "5", "--seed", "21", "--out", tmp_path]
        )
        assert code == 0
        assert (tmp_path / "measurements.csv").exists()
        summary = read(tmp_path, "summary.txt")
        assert "fresh simulation, seed 21" in summary
        assert "measured throughput" in summary

    def test_fresh_default_alphabet_bundle_under_a_minute(self, tmp_path):
        # expected work is about 10 * (53 + 53^2 + 53^3) candidate generations
        start = time.perf_counter()
        code = run(
            ["report", "--max-prefix", "3", "--iterations", "10", "--seed", "42",
             "--out", tmp_path]
        )
        elapsed = time.perf_counter() - start
        assert code == 0 and elapsed < 60
        manifest = json.loads(read(tmp_path, "manifest.json"))
        assert "measurements.csv" in manifest["outputs"]
        assert "summary.txt" in manifest["outputs"]
        for name in manifest["outputs"]:
            assert (tmp_path / name).exists()
