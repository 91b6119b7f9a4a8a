"""Time-varying hypergraph model of review communication.

A code review discussion is a *channel*: a hyperedge connecting all its human
participants, active over a closed time interval ``[opens_at, closes_at]``.
The set of channels inside an observation window forms a
:class:`CommunicationNetwork`. Temporal semantics are delivery-at-close:
information injected into an active channel reaches every participant exactly
when the channel closes, so reachability depends only on channel close times.

All timestamps are integer seconds since the Unix epoch, UTC.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from datetime import datetime, timezone
from enum import Enum

from .errors import DataError

TimeStamp = int
ParticipantId = str


def to_epoch_seconds(value: int | str) -> int:
    """Convert an integer or ISO-8601 UTC string to epoch seconds.

    Accepted string forms: full ISO-8601 (``2024-03-04T12:00:00Z``, explicit
    offsets) and bare dates (``2024-03-04``, meaning midnight UTC). Naive
    datetimes are interpreted as UTC.
    """
    if isinstance(value, bool):
        raise DataError(f"not a timestamp: {value!r}")
    if isinstance(value, int):
        ts = value
    elif isinstance(value, str):
        text = value.strip()
        if text.isdigit():
            ts = int(text)
        else:
            if text.endswith(("Z", "z")):
                text = text[:-1] + "+00:00"
            try:
                parsed = datetime.fromisoformat(text)
            except ValueError as exc:
                raise DataError(f"unparseable timestamp: {value!r}") from exc
            if parsed.tzinfo is None:
                parsed = parsed.replace(tzinfo=timezone.utc)
            ts = int(parsed.timestamp())
    else:
        raise DataError(f"not a timestamp: {value!r}")
    if ts < 0:
        raise DataError(f"negative timestamp: {value!r}")
    return ts


class Boundedness(str, Enum):
    """How a channel's true lifespan relates to the observation window.

    A channel cut at its start by the window is right-bounded, one cut at its
    end is left-bounded, one cut at both is unbounded, and one fully inside
    the window is bounded.
    """

    BOUNDED = "bounded"
    LEFT_BOUNDED = "left-bounded"
    RIGHT_BOUNDED = "right-bounded"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class TimeWindow:
    """Half-ordered observation window ``[start, end]`` with start < end."""

    start: TimeStamp
    end: TimeStamp

    def __post_init__(self) -> None:
        if self.start < 0:
            raise DataError(f"window start must be non-negative, got {self.start}")
        if self.start >= self.end:
            raise DataError(f"invalid window: start {self.start} >= end {self.end}")

    @property
    def duration(self) -> int:
        return self.end - self.start

    def contains(self, t: TimeStamp) -> bool:
        return self.start <= t <= self.end


@dataclass(frozen=True)
class Channel:
    """A review discussion as an interval-stamped hyperedge over participants."""

    id: str
    participants: frozenset[ParticipantId]
    opens_at: TimeStamp
    closes_at: TimeStamp
    boundedness: Boundedness = Boundedness.BOUNDED

    def __post_init__(self) -> None:
        if not self.id:
            raise DataError("channel id must be non-empty")
        if not isinstance(self.participants, frozenset):
            object.__setattr__(self, "participants", frozenset(self.participants))
        if not self.participants:
            raise DataError(f"channel {self.id!r} has no participants")
        if any(not p for p in self.participants):
            raise DataError(f"channel {self.id!r} has an empty participant id")
        if self.opens_at < 0:
            raise DataError(f"channel {self.id!r} opens before the epoch")
        if self.opens_at > self.closes_at:
            raise DataError(
                f"channel {self.id!r} opens at {self.opens_at} after it closes at {self.closes_at}"
            )


def is_active(channel: Channel, t: TimeStamp) -> bool:
    """Presence test: the channel is active on the closed interval of its lifespan."""
    return channel.opens_at <= t <= channel.closes_at


def latency(channel: Channel) -> int:
    """Seconds needed to exchange information in the channel.

    Delivery-at-close: whatever is injected while the channel is active is
    delivered to all participants at ``closes_at``, so the latency is the full
    interval length.
    """
    return channel.closes_at - channel.opens_at


class _NetworkIndex:
    """Integer-indexed view of a network, precomputed for the journey engine.

    Channels are ordered by (closes_at, id) and grouped by equal close time;
    channels in the same group cannot feed each other because feasible
    succession requires strictly increasing close times.
    """

    __slots__ = ("vertex_ids", "vertex_pos", "opens", "closes", "parts", "groups", "channel_ids")

    def __init__(self, vertex_ids: tuple[str, ...], channels: tuple[Channel, ...]) -> None:
        self.vertex_ids = vertex_ids
        self.vertex_pos = {v: i for i, v in enumerate(vertex_ids)}
        ordered = sorted(channels, key=lambda c: (c.closes_at, c.id))
        self.opens = [c.opens_at for c in ordered]
        self.closes = [c.closes_at for c in ordered]
        self.channel_ids = [c.id for c in ordered]
        self.parts = [sorted(self.vertex_pos[p] for p in c.participants) for c in ordered]
        groups: list[tuple[int, int]] = []
        i, n = 0, len(ordered)
        while i < n:
            j = i + 1
            while j < n and self.closes[j] == self.closes[i]:
                j += 1
            groups.append((i, j))
            i = j
        self.groups = groups


class CommunicationNetwork:
    """The time-varying hypergraph over a window: vertices, channels, presence.

    Instances are immutable after :func:`build_network` and safe to share
    read-only across worker processes. ``vertex_presence`` is constant true:
    participants are modeled as always available inside the window.
    """

    def __init__(self, channels: tuple[Channel, ...], window: TimeWindow) -> None:
        self.channels: tuple[Channel, ...] = channels
        self.window = window
        self.vertex_presence = True
        self.vertices: tuple[ParticipantId, ...] = tuple(
            sorted({p for c in channels for p in c.participants})
        )
        by_vertex: dict[str, list[Channel]] = {v: [] for v in self.vertices}
        for c in channels:
            for p in c.participants:
                by_vertex[p].append(c)
        self._by_vertex = {v: tuple(cs) for v, cs in by_vertex.items()}
        self._index = _NetworkIndex(self.vertices, channels)

    def __len__(self) -> int:
        return len(self.vertices)

    def channels_of(self, participant: ParticipantId) -> tuple[Channel, ...]:
        """All channels the participant takes part in."""
        if participant not in self._by_vertex:
            raise DataError(f"unknown participant: {participant!r}")
        return self._by_vertex[participant]

    def __repr__(self) -> str:
        return (
            f"CommunicationNetwork(vertices={len(self.vertices)}, "
            f"channels={len(self.channels)}, window=[{self.window.start}, {self.window.end}])"
        )


def build_network(channels: list[Channel] | tuple[Channel, ...], window: TimeWindow) -> CommunicationNetwork:
    """Validate, clamp, and index channels into an immutable network.

    Channels are clamped to the window; channels with no overlap are dropped.
    Parallel channels (same participants and interval, distinct ids) are kept,
    duplicate ids are rejected.
    """
    seen: set[str] = set()
    for c in channels:
        if c.id in seen:
            raise DataError(f"duplicate channel id: {c.id!r}")
        seen.add(c.id)
    clamped: list[Channel] = []
    for c in channels:
        if c.closes_at < window.start or c.opens_at > window.end:
            continue
        opens = max(c.opens_at, window.start)
        closes = min(c.closes_at, window.end)
        if opens != c.opens_at or closes != c.closes_at:
            c = dataclasses.replace(c, opens_at=opens, closes_at=closes)
        clamped.append(c)
    return CommunicationNetwork(tuple(clamped), window)


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite expansion of a network: vertices on one side, channels on the other.

    Lossless: channel intervals ride along as right-node attributes, so the
    hypergraph can be reconstructed from this view.
    """

    vertex_nodes: tuple[ParticipantId, ...]
    channel_nodes: tuple[str, ...]
    incidence: tuple[tuple[ParticipantId, str], ...]
    channel_intervals: dict[str, tuple[TimeStamp, TimeStamp]]


def to_bipartite(network: CommunicationNetwork) -> BipartiteGraph:
    """Expand the hypergraph into its equivalent bipartite graph.

    One left node per vertex, one right node per channel, and an incidence
    pair (v, e) exactly when v participates in e.
    """
    pairs = [
        (p, c.id)
        for c in network.channels
        for p in sorted(c.participants)
    ]
    return BipartiteGraph(
        vertex_nodes=network.vertices,
        channel_nodes=tuple(c.id for c in network.channels),
        incidence=tuple(pairs),
        channel_intervals={c.id: (c.opens_at, c.closes_at) for c in network.channels},
    )
