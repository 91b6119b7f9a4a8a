import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from review_diffusion import (
    Boundedness,
    Channel,
    DataError,
    TimeWindow,
    build_network,
    is_active,
    latency,
    to_bipartite,
    to_epoch_seconds,
)
from helpers import make_random_network


def chan(cid, parts, opens, closes):
    return Channel(cid, frozenset(parts), opens, closes)


class TestTimeWindow:
    def test_valid(self):
        w = TimeWindow(10, 20)
        assert w.duration == 10
        assert w.contains(10) and w.contains(20)
        assert not w.contains(21)

    @pytest.mark.parametrize("start,end", [(20, 10), (10, 10), (-1, 10)])
    def test_invalid(self, start, end):
        with pytest.raises(DataError):
            TimeWindow(start, end)


class TestTimestampParsing:
    @pytest.mark.parametrize(
        "value,expected",
        [
            (1709510400, 1709510400),
            ("1709510400", 1709510400),
            ("2024-03-04T00:00:00Z", 1709510400),
            ("2024-03-04T00:00:00+00:00", 1709510400),
            ("2024-03-04", 1709510400),
            ("2024-03-04T01:00:00+01:00", 1709510400),
        ],
    )
    def test_accepted_forms(self, value, expected):
        assert to_epoch_seconds(value) == expected

    @pytest.mark.parametrize("value", [-5, "not a date", "2024-13-99", None, 1.5, True])
    def test_rejected_forms(self, value):
        with pytest.raises(DataError):
            to_epoch_seconds(value)


class TestChannel:
    def test_interval_must_be_ordered(self):
        with pytest.raises(DataError):
            chan("c", {"a"}, 20, 10)

    def test_participants_required(self):
        with pytest.raises(DataError):
            chan("c", set(), 0, 1)

    def test_participants_coerced_to_frozenset(self):
        c = Channel("c", {"a", "b"}, 0, 1)
        assert isinstance(c.participants, frozenset)


class TestBuildNetwork:
    def test_identity_clamp(self):
        net = build_network([chan("c1", {"a", "b"}, 10, 20)], TimeWindow(0, 100))
        assert net.vertices == ("a", "b")
        assert len(net.channels) == 1
        assert (net.channels[0].opens_at, net.channels[0].closes_at) == (10, 20)

    def test_clamps_to_window_end(self):
        net = build_network([chan("c1", {"a", "b"}, 10, 200)], TimeWindow(0, 100))
        assert (net.channels[0].opens_at, net.channels[0].closes_at) == (10, 100)

    def test_empty(self):
        net = build_network([], TimeWindow(0, 100))
        assert net.vertices == ()
        assert net.channels == ()

    def test_duplicate_id_rejected(self):
        cs = [chan("c1", {"a"}, 0, 1), chan("c1", {"b"}, 2, 3)]
        with pytest.raises(DataError, match="c1"):
            build_network(cs, TimeWindow(0, 100))

    def test_nonoverlapping_channels_dropped(self):
        cs = [
            chan("before", {"a"}, 0, 5),
            chan("inside", {"b"}, 20, 30),
            chan("after", {"c"}, 150, 160),
        ]
        net = build_network(cs, TimeWindow(10, 100))
        assert [c.id for c in net.channels] == ["inside"]
        assert net.vertices == ("b",)

    def test_boundary_overlap_kept(self):
        # a channel touching the window edge survives as a zero-length interval
        net = build_network([chan("edge", {"a"}, 0, 10)], TimeWindow(10, 100))
        assert (net.channels[0].opens_at, net.channels[0].closes_at) == (10, 10)

    def test_clamping_idempotent(self):
        rng = random.Random(7)
        window = TimeWindow(0, 100)
        for _ in range(50):
            net = make_random_network(rng)
            again = build_network(list(net.channels), window)
            assert [c for c in again.channels] == list(net.channels)
            assert again.vertices == net.vertices

    def test_channels_of(self):
        net = build_network(
            [chan("c1", {"a", "b"}, 0, 5), chan("c2", {"b"}, 6, 7)], TimeWindow(0, 100)
        )
        assert [c.id for c in net.channels_of("b")] == ["c1", "c2"]
        with pytest.raises(DataError):
            net.channels_of("nobody")


class TestPresenceAndLatency:
    def test_active_on_closed_interval(self):
        c = chan("c", {"a"}, 10, 20)
        assert is_active(c, 10)
        assert is_active(c, 20)
        assert not is_active(c, 21)
        assert not is_active(c, 9)

    def test_zero_length_channel(self):
        c = chan("c", {"a"}, 10, 10)
        assert is_active(c, 10)
        assert latency(c) == 0

    def test_activity_is_a_single_interval(self):
        rng = random.Random(11)
        for _ in range(30):
            net = make_random_network(rng)
            for c in net.channels:
                active = [t for t in range(0, 101) if is_active(c, t)]
                assert active == list(range(c.opens_at, c.closes_at + 1))

    def test_latency(self):
        assert latency(chan("c", {"a"}, 10, 20)) == 10
        clamped = build_network([chan("c", {"a"}, 10, 200)], TimeWindow(0, 100)).channels[0]
        assert latency(clamped) == 90


class TestBipartite:
    def test_worked_example_counts(self, example_network):
        bg = to_bipartite(example_network)
        assert len(bg.vertex_nodes) == 6
        assert len(bg.channel_nodes) == 4
        assert len(bg.incidence) == 11  # 3 + 2 + 3 + 3

    def test_empty(self):
        bg = to_bipartite(build_network([], TimeWindow(0, 1)))
        assert bg.vertex_nodes == () and bg.channel_nodes == () and bg.incidence == ()

    def test_singleton(self):
        bg = to_bipartite(build_network([chan("c", {"a"}, 0, 1)], TimeWindow(0, 10)))
        assert bg.vertex_nodes == ("a",)
        assert bg.channel_nodes == ("c",)
        assert bg.incidence == (("a", "c"),)

    def test_lossless_intervals(self, example_network):
        bg = to_bipartite(example_network)
        for c in example_network.channels:
            assert bg.channel_intervals[c.id] == (c.opens_at, c.closes_at)

    @settings(max_examples=60, derandomize=True)
    @given(st.integers(min_value=0, max_value=2**31))
    def test_roundtrip_counts(self, seed):
        net = make_random_network(random.Random(seed))
        bg = to_bipartite(net)
        assert len(bg.vertex_nodes) == len(net.vertices)
        assert len(bg.channel_nodes) == len(net.channels)
        assert len(bg.incidence) == sum(len(c.participants) for c in net.channels)
        rebuilt = {cid: set() for cid in bg.channel_nodes}
        for v, cid in bg.incidence:
            rebuilt[cid].add(v)
        assert rebuilt == {c.id: set(c.participants) for c in net.channels}


def test_boundedness_values():
    assert {b.value for b in Boundedness} == {
        "bounded",
        "left-bounded",
        "right-bounded",
        "unbounded",
    }
