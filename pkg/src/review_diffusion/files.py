"""Line-delimited file formats shared between pipeline stages.

Channel files and reach dumps are JSON lines, UTF-8, one record per line,
written in sorted order so identical inputs produce identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Sequence

from .errors import ParseError
from .ingest import BotRuleSet
from .journeys import ReachLabel, SourceResult
from .model import Boundedness, Channel

_BOUNDEDNESS_VALUES = {b.value for b in Boundedness}


def channel_to_record(channel: Channel) -> dict:
    return {
        "id": channel.id,
        "participants": sorted(channel.participants),
        "opens_at": channel.opens_at,
        "closes_at": channel.closes_at,
        "boundedness": channel.boundedness.value,
    }


def write_channels_file(channels: Sequence[Channel], path: str | Path) -> Path:
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for channel in sorted(channels, key=lambda c: c.id):
            fh.write(json.dumps(channel_to_record(channel), sort_keys=True) + "\n")
    return path


def read_channels_lines(lines: Iterable[str]) -> list[Channel]:
    channels = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
        try:
            channels.append(_record_to_channel(record))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    return channels


def read_channels_file(path: str | Path) -> list[Channel]:
    with open(path, encoding="utf-8") as fh:
        return read_channels_lines(fh)


def _record_to_channel(record: dict) -> Channel:
    for key in ("id", "participants", "opens_at", "closes_at"):
        if key not in record:
            raise ValueError(f"missing field {key!r}")
    boundedness = record.get("boundedness", Boundedness.BOUNDED.value)
    if boundedness not in _BOUNDEDNESS_VALUES:
        raise ValueError(f"unknown boundedness {boundedness!r}")
    participants = record["participants"]
    if not isinstance(participants, list):
        raise ValueError("participants must be an array of strings")
    return Channel(
        id=str(record["id"]),
        participants=frozenset(str(p) for p in participants),
        opens_at=int(record["opens_at"]),
        closes_at=int(record["closes_at"]),
        boundedness=Boundedness(boundedness),
    )


def write_reach_dump(results: Sequence[SourceResult], path: str | Path) -> Path:
    """Dump every (source, target) reach label as one JSON record per line."""
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for result in sorted(results, key=lambda r: r.source):
            for target in sorted(result.reach):
                label = result.reach[target]
                record = {
                    "source": result.source,
                    "target": target,
                    "hops": label.topological_hops,
                    "duration_seconds": label.temporal_duration,
                    "foremost_arrival": label.foremost_arrival,
                }
                fh.write(json.dumps(record, sort_keys=True) + "\n")
    return path


def read_reach_dump(path: str | Path, sources: Iterable[str] | None = None) -> list[SourceResult]:
    """Group dumped pair records back into SourceResults, sorted by source.

    ``sources`` names the simulated sources; sources without any reachable
    target do not appear in the dump, so the caller must say which empty
    results to materialize. Defaults to the sources present in the dump.
    """
    grouped: dict[str, dict[str, ReachLabel]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
            try:
                source = str(record["source"])
                target = str(record["target"])
                label = ReachLabel(
                    topological_hops=int(record["hops"]),
                    temporal_duration=int(record["duration_seconds"]),
                    foremost_arrival=int(record["foremost_arrival"]),
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise ParseError(f"line {lineno}: bad reach record ({exc})") from exc
            grouped.setdefault(source, {})[target] = label
    if sources is not None:
        for source in sources:
            grouped.setdefault(source, {})
    return [
        SourceResult(source=s, reach=dict(sorted(grouped[s].items())))
        for s in sorted(grouped)
    ]


def read_bot_rules(path: str | Path) -> BotRuleSet:
    with open(path, encoding="utf-8") as fh:
        return BotRuleSet.from_lines(fh)
