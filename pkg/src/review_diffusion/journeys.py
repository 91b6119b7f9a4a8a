"""Time-respecting reachability: horizons and minimal journeys per source.

A journey is a walk through channels whose close times strictly increase;
under delivery-at-close this is exactly the feasibility rule "next channel
shares a participant and closes later". Every channel delivers at its own
close time no matter when information was injected, which collapses the three
journey objectives to one scalar per channel:

* hop count of the best journey ending at the channel,
* latest possible departure (opens_at of the best first channel),
* the fixed arrival, the channel's close time.

All three are computed in a single sweep over channels in ascending close
order; channels with equal close times cannot feed each other, so each equal-
close group reads only vertex state accumulated from strictly earlier groups.
The exhaustive depth-first oracle exists to keep that sweep honest.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field

from .errors import DataError
from .model import Channel, CommunicationNetwork, ParticipantId, TimeStamp

_UNSET = -1


@dataclass(frozen=True)
class Journey:
    """An ordered channel sequence realizing one time-respecting walk."""

    channels: tuple[Channel, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.channels, tuple):
            object.__setattr__(self, "channels", tuple(self.channels))
        if not self.channels:
            raise DataError("a journey needs at least one channel")
        for prev, nxt in zip(self.channels, self.channels[1:]):
            if prev.participants.isdisjoint(nxt.participants):
                raise DataError(
                    f"journey breaks the walk property between {prev.id!r} and {nxt.id!r}"
                )
            if nxt.closes_at <= prev.closes_at:
                raise DataError(
                    f"journey close times must strictly increase ({prev.id!r} -> {nxt.id!r})"
                )

    @property
    def hops(self) -> int:
        return len(self.channels)

    @property
    def departure(self) -> TimeStamp:
        return self.channels[0].opens_at

    @property
    def arrival(self) -> TimeStamp:
        return self.channels[-1].closes_at

    @property
    def duration(self) -> int:
        return self.arrival - self.departure


@dataclass(frozen=True, slots=True)
class ReachLabel:
    """Per-target minima over all journeys from one source.

    The three fields are independent minima; in general no single journey
    achieves all of them.
    """

    topological_hops: int
    temporal_duration: int
    foremost_arrival: TimeStamp


@dataclass
class SourceResult:
    """Diffusion outcome for one source: its horizon with minimal labels."""

    source: ParticipantId
    reach: dict[ParticipantId, ReachLabel] = field(default_factory=dict)


def horizon(result: SourceResult) -> set[ParticipantId]:
    """The set of participants the source can reach via at least one journey."""
    return set(result.reach)


def _sweep(index, source_pos: int) -> tuple[list[int], list[int], list[int]]:
    """One ascending-close pass computing hop/duration/arrival minima.

    Returns per-vertex arrays (min hops, min duration, min arrival) with
    ``_UNSET`` marking unreachable vertices. Vertex state (``reached``,
    ``vhop``, ``vld``) is merged only after finishing each equal-close group,
    which enforces strictly-increasing close times along journeys.
    """
    n = len(index.vertex_ids)
    out_hops = [_UNSET] * n
    out_dur = [_UNSET] * n
    out_arr = [_UNSET] * n

    reached = bytearray(n)  # vertex holds delivered information from an earlier group
    vhop = [0] * n          # min hops over infected channels seen so far
    vld = [0] * n           # max journey departure over infected channels seen so far

    opens, closes, parts = index.opens, index.closes, index.parts
    for start, end in index.groups:
        group_updates: list[tuple[list[int], int, int]] = []
        close_t = closes[start]
        for e in range(start, end):
            members = parts[e]
            best_hop = -1
            best_ld = _UNSET
            for w in members:
                if reached[w]:
                    h = vhop[w]
                    if best_hop < 0 or h < best_hop:
                        best_hop = h
                    if vld[w] > best_ld:
                        best_ld = vld[w]
            if source_pos in members:
                hop_e = 1
                ld_e = opens[e] if best_ld < opens[e] else best_ld
            elif best_hop >= 0:
                hop_e = best_hop + 1
                ld_e = best_ld
            else:
                continue  # no journey reaches this channel
            dur_e = close_t - ld_e
            for v in members:
                if out_hops[v] == _UNSET:
                    out_hops[v] = hop_e
                    out_dur[v] = dur_e
                    out_arr[v] = close_t
                else:
                    if hop_e < out_hops[v]:
                        out_hops[v] = hop_e
                    if dur_e < out_dur[v]:
                        out_dur[v] = dur_e
            group_updates.append((members, hop_e, ld_e))
        for members, hop_e, ld_e in group_updates:
            for w in members:
                if not reached[w]:
                    reached[w] = 1
                    vhop[w] = hop_e
                    vld[w] = ld_e
                else:
                    if hop_e < vhop[w]:
                        vhop[w] = hop_e
                    if ld_e > vld[w]:
                        vld[w] = ld_e
    return out_hops, out_dur, out_arr


def single_source(network: CommunicationNetwork, source: ParticipantId) -> SourceResult:
    """Horizon and minimal journey labels from one source.

    ``reach`` maps every reachable participant (never the source itself) to
    the minima of hops, duration, and arrival over all journeys to it.
    """
    index = network._index
    if source not in index.vertex_pos:
        raise DataError(f"unknown source: {source!r}")
    source_pos = index.vertex_pos[source]
    out_hops, out_dur, out_arr = _sweep(index, source_pos)
    reach: dict[str, ReachLabel] = {}
    for v, vid in enumerate(index.vertex_ids):
        if v == source_pos or out_hops[v] == _UNSET:
            continue
        reach[vid] = ReachLabel(
            topological_hops=out_hops[v],
            temporal_duration=out_dur[v],
            foremost_arrival=out_arr[v],
        )
    return SourceResult(source=source, reach=reach)


_POOL_NETWORK: CommunicationNetwork | None = None


def _pool_init(network: CommunicationNetwork) -> None:
    global _POOL_NETWORK
    _POOL_NETWORK = network


def _pool_run(source: ParticipantId) -> SourceResult:
    assert _POOL_NETWORK is not None
    return single_source(_POOL_NETWORK, source)


def all_pairs(
    network: CommunicationNetwork,
    sources: list[ParticipantId] | None = None,
    jobs: int = 1,
) -> list[SourceResult]:
    """Run :func:`single_source` for every requested source, sorted by id.

    The network is shared read-only; with ``jobs > 1`` sources fan out over a
    process pool. Output order is by source id regardless of scheduling.
    """
    if sources is None:
        ids = list(network.vertices)
    else:
        known = set(network.vertices)
        unknown = sorted(set(sources) - known)
        if unknown:
            raise DataError(f"unknown sources: {', '.join(repr(u) for u in unknown)}")
        ids = sorted(set(sources))
    if jobs < 1:
        raise DataError(f"jobs must be >= 1, got {jobs}")
    if jobs == 1 or len(ids) <= 1:
        return [single_source(network, s) for s in ids]
    ctx = multiprocessing.get_context("fork")
    chunk = max(1, len(ids) // (jobs * 4))
    with ctx.Pool(processes=jobs, initializer=_pool_init, initargs=(network,)) as pool:
        return pool.map(_pool_run, ids, chunksize=chunk)


ORACLE_CHANNEL_LIMIT = 16


def enumerate_journeys_oracle(
    network: CommunicationNetwork,
    source: ParticipantId,
    max_hops: int,
    channel_limit: int = ORACLE_CHANNEL_LIMIT,
) -> list[Journey]:
    """Exhaustively enumerate every journey from the source, up to max_hops.

    Brute-force ground truth for the sweep: depth-first extension of partial
    walks by any channel that shares a participant with the last one and
    closes strictly later. Guard-railed to small networks; journey counts grow
    exponentially in the channel count.
    """
    if max_hops < 1:
        raise DataError(f"max_hops must be >= 1, got {max_hops}")
    if len(network.channels) > channel_limit:
        raise DataError(
            f"oracle limited to {channel_limit} channels, network has {len(network.channels)}"
        )
    if source not in network._index.vertex_pos:
        raise DataError(f"unknown source: {source!r}")
    channels = network.channels
    journeys: list[Journey] = []

    def extend(path: tuple[Channel, ...]) -> None:
        journeys.append(Journey(channels=path))
        if len(path) >= max_hops:
            return
        last = path[-1]
        for c in channels:
            if c.closes_at > last.closes_at and not c.participants.isdisjoint(last.participants):
                extend(path + (c,))

    for c in channels:
        if source in c.participants:
            extend((c,))
    return journeys


def oracle_labels(journeys: list[Journey], source: ParticipantId) -> dict[ParticipantId, ReachLabel]:
    """Minima over an enumerated journey list, the ground truth for ReachLabel.

    A journey delivers to the participants of its final channel; prefixes of
    longer journeys are enumerated in their own right, so intermediate
    deliveries are covered.
    """
    best_hops: dict[str, int] = {}
    best_dur: dict[str, int] = {}
    best_arr: dict[str, int] = {}
    for j in journeys:
        for v in j.channels[-1].participants:
            if v == source:
                continue
            if v not in best_hops or j.hops < best_hops[v]:
                best_hops[v] = j.hops
            if v not in best_dur or j.duration < best_dur[v]:
                best_dur[v] = j.duration
            if v not in best_arr or j.arrival < best_arr[v]:
                best_arr[v] = j.arrival
    return {
        v: ReachLabel(
            topological_hops=best_hops[v],
            temporal_duration=best_dur[v],
            foremost_arrival=best_arr[v],
        )
        for v in sorted(best_hops)
    }
