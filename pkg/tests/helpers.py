"""Shared builders for the test suite."""

from __future__ import annotations

import random

from review_diffusion import Channel, CommunicationNetwork, TimeWindow, build_network

WINDOW_TICKS = 100


def worked_example_channels() -> list[Channel]:
    """Six participants, four channels, close ordering e1 < e2 < e4 < e3.

    Unit-width intervals; under this ordering the first participant can reach
    every other one.
    """
    return [
        Channel("e1", frozenset({"v1", "v2", "v3"}), 0, 1),
        Channel("e2", frozenset({"v2", "v4"}), 1, 2),
        Channel("e4", frozenset({"v4", "v5", "v6"}), 2, 3),
        Channel("e3", frozenset({"v3", "v5", "v6"}), 3, 4),
    ]


def worked_example_network(window: TimeWindow | None = None) -> CommunicationNetwork:
    return build_network(worked_example_channels(), window or TimeWindow(0, 10))


def make_random_network(
    rng: random.Random,
    max_vertices: int = 7,
    max_channels: int = 8,
    ticks: int = WINDOW_TICKS,
    allow_singletons: bool = True,
) -> CommunicationNetwork:
    """Small random network with closed intervals inside a fixed-tick window.

    Duplicate close times occur regularly at these sizes, which exercises the
    equal-close-group handling in the engine.
    """
    n_vertices = rng.randint(2, max_vertices)
    vertices = [f"v{i}" for i in range(n_vertices)]
    n_channels = rng.randint(1, max_channels)
    channels = []
    for i in range(n_channels):
        low = 1 if allow_singletons else 2
        size = rng.randint(low, min(4, n_vertices))
        participants = frozenset(rng.sample(vertices, size))
        a, b = sorted(rng.randint(0, ticks) for _ in range(2))
        channels.append(Channel(f"c{i}", participants, a, b))
    return build_network(channels, TimeWindow(0, ticks))
