#!/usr/bin/env python3
"""Reachability on a synthetic network the size of a large review system.

Generates a seeded random network (1800 participants, 10000 reviews over four
weeks), runs the all-pairs simulation across a worker pool, and summarizes the
distance distributions.
"""

import statistics
import time

from review_diffusion import (
    TimeWindow,
    all_pairs,
    build_network,
    distance_distributions,
    normalized_ranges,
    quantile_ranges,
    to_epoch_seconds,
)
from review_diffusion.cli import generate_channels

window = TimeWindow(
    to_epoch_seconds("2024-03-04T00:00:00Z"),
    to_epoch_seconds("2024-04-01T00:00:00Z"),
)

print("generating 10000 channels over 1800 participants (seed 7)...")
channels = generate_channels(
    n_vertices=1800,
    n_channels=10000,
    seed=7,
    window=window,
    mean_channel_size=3.0,
    mean_duration=2 * 86400,
)
net = build_network(channels, window)
print(net)

started = time.monotonic()
results = all_pairs(net, jobs=8)
elapsed = time.monotonic() - started
pairs = sum(len(r.reach) for r in results)
print(f"all-pairs over {len(results)} sources: {pairs} reachable pairs in {elapsed:.1f}s")

topo, temp = distance_distributions(results)
print(f"median hops: {statistics.median(topo):.0f}, max hops: {max(topo)}")
print(f"median hours: {statistics.median(temp):.1f}, max hours: {max(temp):.1f}")

norm = list(normalized_ranges(results, len(net.vertices)).values())
row = quantile_ranges(norm)
print("normalized range quantiles (lower..max):")
for q in sorted(row):
    lower, upper = row[q]
    print(f"  q={q}: {lower:.2f} .. {upper:.2f}")
