"""Pipeline orchestration: ingest, simulate, report, plus a synthetic generator.

Exit codes: 0 success, 1 usage or configuration error, 2 data error. Every
command validates its configuration before touching output files.
"""

from __future__ import annotations

import argparse
import random
import statistics
import sys
from dataclasses import dataclass
from pathlib import Path

from . import files, metrics
from .errors import DataError
from .ingest import BotRuleSet, ingest_events
from .journeys import all_pairs
from .model import Boundedness, Channel, TimeWindow, build_network, to_epoch_seconds

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class ConfigError(Exception):
    """Bad flags or configuration; maps to exit code 1."""


@dataclass
class RunConfig:
    """Reproducible run parameters shared by the pipeline commands."""

    window: TimeWindow | None = None
    salt: str = ""
    bot_rules_path: Path | None = None
    jobs: int = 1
    sources: str | None = None
    seed: int = 0
    output_dir: Path = Path(".")
    drop_singletons: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> _Parser:
    parser = _Parser(prog="review-diffusion", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: _Parser, window: bool = False) -> None:
        p.add_argument("--out", required=True, help="output directory")
        if window:
            p.add_argument("--window-start", help="ISO-8601 UTC or epoch seconds")
            p.add_argument("--window-end", help="ISO-8601 UTC or epoch seconds")

    p_ingest = sub.add_parser("ingest", help="events file -> channels file + report")
    p_ingest.add_argument("events_path")
    p_ingest.add_argument("--salt", required=True)
    p_ingest.add_argument("--bots", help="bot rules file (one id or pattern per line)")
    p_ingest.add_argument("--drop-singletons", action="store_true")
    add_common(p_ingest, window=True)

    p_sim = sub.add_parser("simulate", help="channels file -> reach dump")
    p_sim.add_argument("channels_path")
    p_sim.add_argument("--jobs", type=int, default=1)
    p_sim.add_argument("--sources", help="sample size or comma-separated participant ids")
    p_sim.add_argument("--seed", type=int, default=0)
    add_common(p_sim, window=True)

    p_rep = sub.add_parser("report", help="reach dump + channels -> measurement CSVs")
    p_rep.add_argument("reach_dump")
    p_rep.add_argument("channels_path")
    p_rep.add_argument("--sources", help="restrict to the sources simulate was given")
    p_rep.add_argument("--seed", type=int, default=0)
    add_common(p_rep, window=True)

    p_gen = sub.add_parser("generate", help="seeded synthetic channels file")
    p_gen.add_argument("--n-vertices", type=int, required=True)
    p_gen.add_argument("--n-channels", type=int, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--mean-channel-size", type=float, default=3.0)
    p_gen.add_argument("--mean-duration", type=float, default=86400.0)
    add_common(p_gen, window=True)

    p_run = sub.add_parser("run", help="ingest + simulate + report in one go")
    p_run.add_argument("events_path")
    p_run.add_argument("--salt", required=True)
    p_run.add_argument("--bots")
    p_run.add_argument("--drop-singletons", action="store_true")
    p_run.add_argument("--jobs", type=int, default=1)
    p_run.add_argument("--sources")
    p_run.add_argument("--seed", type=int, default=0)
    add_common(p_run, window=True)

    return parser


def _parse_window(args: argparse.Namespace, required: bool) -> TimeWindow | None:
    start = getattr(args, "window_start", None)
    end = getattr(args, "window_end", None)
    if start is None and end is None:
        if required:
            raise ConfigError("--window-start and --window-end are required")
        return None
    if start is None or end is None:
        raise ConfigError("--window-start and --window-end must be given together")
    try:
        return TimeWindow(to_epoch_seconds(start), to_epoch_seconds(end))
    except DataError as exc:
        raise ConfigError(str(exc)) from exc


def _infer_window(channels: list[Channel]) -> TimeWindow:
    if not channels:
        return TimeWindow(0, 1)
    start = min(c.opens_at for c in channels)
    end = max(c.closes_at for c in channels)
    return TimeWindow(start, max(end, start + 1))


def _resolve_sources(spec: str | None, vertices: tuple[str, ...], seed: int) -> list[str] | None:
    if spec is None:
        return None
    spec = spec.strip()
    if spec.isdigit():
        size = int(spec)
        if size >= len(vertices):
            return None
        return sorted(random.Random(seed).sample(sorted(vertices), size))
    ids = [s for s in (part.strip() for part in spec.split(",")) if s]
    if not ids:
        raise ConfigError("--sources must be a size or a comma-separated id list")
    return ids


def _ensure_outdir(path_str: str) -> Path:
    out = Path(path_str)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_ingest(args: argparse.Namespace) -> int:
    window = _parse_window(args, required=True)
    if not args.salt:
        raise ConfigError("--salt must be non-empty")
    events_path = Path(args.events_path)
    if not events_path.exists():
        raise ConfigError(f"events file not found: {events_path}")
    rules = files.read_bot_rules(args.bots) if args.bots else BotRuleSet()
    with open(events_path, encoding="utf-8") as fh:
        channels, report = ingest_events(
            fh, rules, args.salt, window, drop_singletons=args.drop_singletons
        )
    out = _ensure_outdir(args.out)
    files.write_channels_file(channels, out / "channels.jsonl")
    (out / "ingest_report.txt").write_text(report.to_text(), encoding="utf-8")
    sys.stdout.write(report.to_text())
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    if args.jobs < 1:
        raise ConfigError(f"--jobs must be >= 1, got {args.jobs}")
    window = _parse_window(args, required=False)
    channels_path = Path(args.channels_path)
    if not channels_path.exists():
        raise ConfigError(f"channels file not found: {channels_path}")
    channels = files.read_channels_file(channels_path)
    network = build_network(channels, window or _infer_window(channels))
    sources = _resolve_sources(args.sources, network.vertices, args.seed)
    results = all_pairs(network, sources=sources, jobs=args.jobs)
    out = _ensure_outdir(args.out)
    files.write_reach_dump(results, out / "reach.jsonl")
    sys.stdout.write(
        f"simulated {len(results)} sources over {len(network.vertices)} vertices, "
        f"{len(network.channels)} channels\n"
    )
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    window = _parse_window(args, required=False)
    dump_path = Path(args.reach_dump)
    channels_path = Path(args.channels_path)
    for p in (dump_path, channels_path):
        if not p.exists():
            raise ConfigError(f"input file not found: {p}")
    channels = files.read_channels_file(channels_path)
    network = build_network(channels, window or _infer_window(channels))
    sources = _resolve_sources(args.sources, network.vertices, getattr(args, "seed", 0))
    simulated = sources if sources is not None else list(network.vertices)
    results = files.read_reach_dump(dump_path, sources=simulated)
    out = _ensure_outdir(args.out)
    metrics.write_reports(results, network.channels, network, out)
    topo, temp = metrics.distance_distributions(results)
    summary = [
        f"vertices: {len(network.vertices)}",
        f"channels: {len(network.channels)}",
        f"median hops: {statistics.median(topo) if topo else 'n/a'}",
        f"median hours: {statistics.median(temp):.3f}" if temp else "median hours: n/a",
    ]
    sys.stdout.write("\n".join(summary) + "\n")
    return EXIT_OK


def generate_channels(
    n_vertices: int,
    n_channels: int,
    seed: int,
    window: TimeWindow,
    mean_channel_size: float = 3.0,
    mean_duration: float = 86400.0,
) -> list[Channel]:
    """Seeded synthetic channels: sizes >= 2, intervals inside the window."""
    if n_vertices < 1:
        raise ConfigError(f"n_vertices must be >= 1, got {n_vertices}")
    if n_channels < 0:
        raise ConfigError(f"n_channels must be >= 0, got {n_channels}")
    if n_channels > 0 and n_vertices < 2:
        raise ConfigError("channels need >= 2 participants; provide n_vertices >= 2")
    if mean_channel_size > n_vertices:
        raise ConfigError(
            f"mean channel size {mean_channel_size} exceeds vertex count {n_vertices}"
        )
    rng = random.Random(seed)
    width = len(str(max(n_vertices - 1, 1)))
    pool = [f"p{i:0{width}d}" for i in range(n_vertices)]
    spread = max(mean_channel_size / 3.0, 0.5)
    channels = []
    for i in range(n_channels):
        size = int(round(rng.gauss(mean_channel_size, spread)))
        size = max(2, min(size, n_vertices))
        participants = frozenset(rng.sample(pool, size))
        opens = rng.randint(window.start, window.end)
        duration = int(rng.expovariate(1.0 / mean_duration)) if mean_duration > 0 else 0
        closes = min(window.end, opens + duration)
        channels.append(
            Channel(
                id=f"c{i:06d}",
                participants=participants,
                opens_at=opens,
                closes_at=closes,
                boundedness=Boundedness.BOUNDED,
            )
        )
    return channels


def cmd_generate(args: argparse.Namespace) -> int:
    window = _parse_window(args, required=True)
    channels = generate_channels(
        args.n_vertices,
        args.n_channels,
        args.seed,
        window,
        mean_channel_size=args.mean_channel_size,
        mean_duration=args.mean_duration,
    )
    out = _ensure_outdir(args.out)
    files.write_channels_file(channels, out / "channels.jsonl")
    sys.stdout.write(f"generated {len(channels)} channels\n")
    return EXIT_OK


def cmd_run(args: argparse.Namespace) -> int:
    cmd_ingest(args)
    sim_args = argparse.Namespace(
        channels_path=str(Path(args.out) / "channels.jsonl"),
        jobs=args.jobs,
        sources=args.sources,
        seed=args.seed,
        out=args.out,
        window_start=args.window_start,
        window_end=args.window_end,
    )
    cmd_simulate(sim_args)
    rep_args = argparse.Namespace(
        reach_dump=str(Path(args.out) / "reach.jsonl"),
        channels_path=str(Path(args.out) / "channels.jsonl"),
        sources=args.sources,
        seed=args.seed,
        out=args.out,
        window_start=args.window_start,
        window_end=args.window_end,
    )
    return cmd_report(rep_args)


_COMMANDS = {
    "ingest": cmd_ingest,
    "simulate": cmd_simulate,
    "report": cmd_report,
    "generate": cmd_generate,
    "run": cmd_run,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except DataError as exc:
        sys.stderr.write(f"data error: {exc}\n")
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
