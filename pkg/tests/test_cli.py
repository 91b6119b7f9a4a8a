import json

import pytest

from review_diffusion import (
    enumerate_journeys_oracle,
    oracle_labels,
)
from review_diffusion.cli import main
from review_diffusion.files import read_channels_file, write_channels_file
from helpers import worked_example_channels, worked_example_network

WINDOW_ARGS = ["--window-start", "2024-03-04T00:00:00Z", "--window-end", "2024-04-01T00:00:00Z"]


def run_cli(*argv):
    return main([str(a) for a in argv])


@pytest.fixture
def example_channels_file(tmp_path):
    path = tmp_path / "example.jsonl"
    write_channels_file(worked_example_channels(), path)
    return path


class TestIngestCommand:
    def test_fixture_end_to_end(self, events_fixture, bots_fixture, tmp_path, capsys):
        out = tmp_path / "out"
        code = run_cli(
            "ingest", events_fixture, "--salt", "s3", "--bots", bots_fixture,
            "--out", out, *WINDOW_ARGS,
        )
        assert code == 0
        channels = read_channels_file(out / "channels.jsonl")
        assert len(channels) == 4  # r1..r4; r5 lies before the window
        report = (out / "ingest_report.txt").read_text()
        assert "channels emitted:              4" in report
        assert "events dropped (bot):          2" in report
        assert "singleton channels:            1" in report

    def test_bots_absent_from_channels(self, events_fixture, bots_fixture, tmp_path):
        out = tmp_path / "out"
        run_cli(
            "ingest", events_fixture, "--salt", "s3", "--bots", bots_fixture,
            "--out", out, *WINDOW_ARGS,
        )
        with_bots = tmp_path / "with-bots"
        run_cli("ingest", events_fixture, "--salt", "s3", "--out", with_bots, *WINDOW_ARGS)
        lean = sorted(len(c.participants) for c in read_channels_file(out / "channels.jsonl"))
        fat = sorted(len(c.participants) for c in read_channels_file(with_bots / "channels.jsonl"))
        assert lean != fat  # the rules removed someone

    def test_bad_window_leaves_no_outputs(self, events_fixture, tmp_path):
        out = tmp_path / "out"
        code = run_cli(
            "ingest", events_fixture, "--salt", "s3", "--out", out,
            "--window-start", "2024-04-01", "--window-end", "2024-03-04",
        )
        assert code == 1
        assert not out.exists()

    def test_empty_salt(self, events_fixture, tmp_path):
        code = run_cli(
            "ingest", events_fixture, "--salt", "", "--out", tmp_path / "o", *WINDOW_ARGS
        )
        assert code == 1

    def test_drop_singletons_flag(self, events_fixture, tmp_path):
        out = tmp_path / "out"
        run_cli(
            "ingest", events_fixture, "--salt", "s3", "--drop-singletons",
            "--out", out, *WINDOW_ARGS,
        )
        channels = read_channels_file(out / "channels.jsonl")
        assert all(len(c.participants) >= 2 for c in channels)

    def test_malformed_events_exit_2(self, tmp_path):
        bad = tmp_path / "events.jsonl"
        bad.write_text("{broken\n")
        code = run_cli("ingest", bad, "--salt", "s", "--out", tmp_path / "o", *WINDOW_ARGS)
        assert code == 2


class TestSimulateCommand:
    def test_dump_matches_oracle(self, example_channels_file, tmp_path):
        out = tmp_path / "sim"
        code = run_cli(
            "simulate", example_channels_file, "--out", out,
            "--window-start", "0", "--window-end", "10",
        )
        assert code == 0
        net = worked_example_network()
        records = [json.loads(l) for l in (out / "reach.jsonl").read_text().splitlines()]
        assert len(records) == 25
        by_pair = {(r["source"], r["target"]): r for r in records}
        for source in net.vertices:
            labels = oracle_labels(
                enumerate_journeys_oracle(net, source, max_hops=4), source
            )
            for target, label in labels.items():
                rec = by_pair[(source, target)]
                assert rec["hops"] == label.topological_hops
                assert rec["duration_seconds"] == label.temporal_duration
                assert rec["foremost_arrival"] == label.foremost_arrival

    def test_jobs_do_not_change_bytes(self, example_channels_file, tmp_path):
        outs = []
        for jobs in (1, 8):
            out = tmp_path / f"jobs{jobs}"
            run_cli(
                "simulate", example_channels_file, "--jobs", jobs, "--out", out,
                "--window-start", "0", "--window-end", "10",
            )
            outs.append((out / "reach.jsonl").read_bytes())
        assert outs[0] == outs[1]

    def test_empty_channels_file(self, tmp_path):
        empty = tmp_path / "empty.jsonl"
        empty.write_text("")
        out = tmp_path / "out"
        code = run_cli("simulate", empty, "--out", out)
        assert code == 0
        assert (out / "reach.jsonl").read_text() == ""

    def test_unknown_sources_named(self, example_channels_file, tmp_path, capsys):
        code = run_cli(
            "simulate", example_channels_file, "--sources", "v1,ghost",
            "--out", tmp_path / "o", "--window-start", "0", "--window-end", "10",
        )
        assert code == 2
        assert "ghost" in capsys.readouterr().err

    def test_sampled_sources(self, example_channels_file, tmp_path):
        out = tmp_path / "out"
        code = run_cli(
            "simulate", example_channels_file, "--sources", "2", "--seed", "1",
            "--out", out, "--window-start", "0", "--window-end", "10",
        )
        assert code == 0
        sources = {json.loads(l)["source"] for l in (out / "reach.jsonl").read_text().splitlines()}
        assert len(sources) <= 2


class TestReportCommand:
    def run_pipeline(self, example_channels_file, tmp_path):
        sim = tmp_path / "sim"
        run_cli(
            "simulate", example_channels_file, "--out", sim,
            "--window-start", "0", "--window-end", "10",
        )
        rep = tmp_path / "rep"
        code = run_cli(
            "report", sim / "reach.jsonl", example_channels_file, "--out", rep,
            "--window-start", "0", "--window-end", "10",
        )
        return code, rep

    def test_normalized_max(self, example_channels_file, tmp_path):
        code, rep = self.run_pipeline(example_channels_file, tmp_path)
        assert code == 0
        rows = (rep / "ranges.csv").read_text().splitlines()[1:]
        best = max(float(r.split(",")[2]) for r in rows)
        assert best == pytest.approx(5 / 6)

    def test_rerun_identical(self, example_channels_file, tmp_path):
        _, rep1 = self.run_pipeline(example_channels_file, tmp_path / "a")
        _, rep2 = self.run_pipeline(example_channels_file, tmp_path / "b")
        for path in sorted(rep1.iterdir()):
            assert path.read_bytes() == (rep2 / path.name).read_bytes()

    def test_missing_dump(self, example_channels_file, tmp_path):
        code = run_cli(
            "report", tmp_path / "nope.jsonl", example_channels_file, "--out", tmp_path / "r"
        )
        assert code == 1

    def test_summary_printed(self, example_channels_file, tmp_path, capsys):
        self.run_pipeline(example_channels_file, tmp_path)
        out = capsys.readouterr().out
        assert "vertices: 6" in out
        assert "median hops:" in out


class TestGenerateCommand:
    GEN_ARGS = [
        "generate", "--n-vertices", "30", "--n-channels", "40", "--seed", "42",
        "--mean-channel-size", "3", "--mean-duration", "86400",
    ]

    def test_same_seed_same_bytes(self, tmp_path):
        blobs = []
        for name in ("a", "b"):
            out = tmp_path / name
            assert run_cli(*self.GEN_ARGS, "--out", out, *WINDOW_ARGS) == 0
            blobs.append((out / "channels.jsonl").read_bytes())
        assert blobs[0] == blobs[1]

    def test_zero_channels(self, tmp_path):
        out = tmp_path / "out"
        code = run_cli(
            "generate", "--n-vertices", "5", "--n-channels", "0",
            "--out", out, *WINDOW_ARGS,
        )
        assert code == 0
        assert (out / "channels.jsonl").read_text() == ""

    def test_infeasible_size(self, tmp_path):
        code = run_cli(
            "generate", "--n-vertices", "2", "--n-channels", "5",
            "--mean-channel-size", "10", "--out", tmp_path / "o", *WINDOW_ARGS,
        )
        assert code == 1

    def test_generated_channels_valid(self, tmp_path):
        out = tmp_path / "out"
        run_cli(*self.GEN_ARGS, "--out", out, *WINDOW_ARGS)
        channels = read_channels_file(out / "channels.jsonl")
        assert len(channels) == 40
        start, end = 1709510400, 1711929600
        for c in channels:
            assert len(c.participants) >= 2
            assert start <= c.opens_at <= c.closes_at <= end


class TestRunCommand:
    def test_end_to_end(self, events_fixture, bots_fixture, tmp_path):
        out = tmp_path / "out"
        code = run_cli(
            "run", events_fixture, "--salt", "s3", "--bots", bots_fixture,
            "--out", out, *WINDOW_ARGS,
        )
        assert code == 0
        for name in (
            "channels.jsonl",
            "ingest_report.txt",
            "reach.jsonl",
            "ranges.csv",
            "topological_distances.csv",
            "temporal_distances.csv",
            "bounds.csv",
        ):
            assert (out / name).exists(), name

    def test_usage_error_exit_code(self):
        assert run_cli("run") == 1  # missing required arguments

    def test_unknown_command_exit_code(self):
        assert run_cli("frobnicate") == 1
