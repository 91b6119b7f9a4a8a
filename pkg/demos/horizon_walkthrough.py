#!/usr/bin/env python3
"""Walk through reachability in a six-person review network.

Four review discussions connect six people. Because information travels only
forward in time, who can reach whom depends entirely on the order in which
the discussions close, not just on who talks to whom.
"""

from review_diffusion import (
    Channel,
    TimeWindow,
    all_pairs,
    build_network,
    enumerate_journeys_oracle,
    horizon,
    oracle_labels,
    single_source,
    to_bipartite,
)

DAY = 86400

channels = [
    Channel("triage", frozenset({"ana", "ben", "cho"}), 0 * DAY, 1 * DAY),
    Channel("refactor", frozenset({"ben", "dia"}), 1 * DAY, 2 * DAY),
    Channel("hotfix", frozenset({"dia", "eli", "fox"}), 2 * DAY, 3 * DAY),
    Channel("release", frozenset({"cho", "eli", "fox"}), 3 * DAY, 4 * DAY),
]
window = TimeWindow(0, 7 * DAY)
net = build_network(channels, window)

print(net)
print()

bg = to_bipartite(net)
print(f"bipartite view: {len(bg.vertex_nodes)} participants + {len(bg.channel_nodes)} channels,")
print(f"{len(bg.incidence)} incidence pairs")
print()

result = single_source(net, "ana")
print("ana's horizon:", ", ".join(sorted(horizon(result))))
for target in sorted(result.reach):
    label = result.reach[target]
    print(
        f"  ana -> {target}: {label.topological_hops} review(s), "
        f"{label.temporal_duration / DAY:.0f} day(s), "
        f"arrives day {label.foremost_arrival / DAY:.0f}"
    )
print()

# the exhaustive oracle enumerates every journey and must agree
journeys = enumerate_journeys_oracle(net, "ana", max_hops=4)
print(f"exhaustive enumeration found {len(journeys)} journeys from ana")
assert oracle_labels(journeys, "ana") == result.reach
print("engine and oracle agree on every label")
print()

print("horizon sizes for everyone:")
for r in all_pairs(net):
    print(f"  {r.source}: reaches {len(r.reach)} of {len(net.vertices) - 1}")
print()

# same people, same discussions, reversed close order: diffusion collapses
reversed_channels = [
    Channel("triage", frozenset({"ana", "ben", "cho"}), 3 * DAY, 4 * DAY),
    Channel("refactor", frozenset({"ben", "dia"}), 2 * DAY, 3 * DAY),
    Channel("hotfix", frozenset({"dia", "eli", "fox"}), 1 * DAY, 2 * DAY),
    Channel("release", frozenset({"cho", "eli", "fox"}), 0 * DAY, 1 * DAY),
]
reversed_net = build_network(reversed_channels, window)
print("with close order reversed, ana reaches:", sorted(horizon(single_source(reversed_net, "ana"))))
