#!/usr/bin/env python3
"""Full pipeline demo: raw review events to measurement CSVs.

Builds a small event log in memory, then runs ingest (bot filtering,
anonymization, channel construction), simulation, and reporting, leaving the
CSVs in ./demo_output/.
"""

import json
from pathlib import Path

from review_diffusion import (
    BotRuleSet,
    TimeWindow,
    all_pairs,
    build_network,
    ingest_events,
    to_epoch_seconds,
    write_reports,
)

window = TimeWindow(
    to_epoch_seconds("2024-03-04T00:00:00Z"),
    to_epoch_seconds("2024-04-01T00:00:00Z"),
)


def event(review, actor, etype, ts, **extra):
    record = {"review_id": review, "actor_id": actor, "event_type": etype, "timestamp": ts}
    record.update(extra)
    return json.dumps(record)


lines = [
    event("pr-101", "ana", "create", "2024-03-05T09:00:00Z"),
    event("pr-101", "ben", "comment", "2024-03-05T15:00:00Z"),
    event("pr-101", "ci-runner[bot]", "comment", "2024-03-05T15:01:00Z"),
    event("pr-101", "cho", "approve", "2024-03-06T10:00:00Z"),
    event("pr-102", "ben", "create", "2024-03-07T09:00:00Z"),
    event("pr-102", "dia", "comment", "2024-03-08T09:00:00Z"),
    event("pr-103", "dia", "create", "2024-03-12T09:00:00Z"),
    event("pr-103", "ana", "comment", "2024-03-13T09:00:00Z"),
    event("pr-103", "eli", "comment", "2024-03-14T09:00:00Z", review_created_at="2024-02-20T00:00:00Z"),
    event("pr-104", "eli", "create", "2024-03-20T09:00:00Z"),
    event("pr-104", "cho", "comment", "2024-03-22T09:00:00Z"),
]

rules = BotRuleSet.from_lines(["*[bot]"])
channels, report = ingest_events(lines, rules, salt="demo-salt", window=window)

print("ingest report")
print(report.to_text())

net = build_network(channels, window)
print(net)

results = all_pairs(net)
out_dir = Path(__file__).parent / "demo_output"
written = write_reports(results, net.channels, net, out_dir)
print("\nwrote:")
for path in written:
    print(f"  {path}")

print("\nranges.csv:")
print((out_dir / "ranges.csv").read_text())
