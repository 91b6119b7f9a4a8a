"""Aggregation of per-source reach results into the four diffusion measurements.

Absolute and normalized diffusion ranges answer how widely information can
spread; topological and temporal distance distributions answer how quickly.
Everything here is a pure function over immutable inputs, reported as ECDFs,
quantile-range rows, boundedness shares, and deterministic CSV files.
"""

from __future__ import annotations

import collections
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import DataError
from .model import Boundedness, Channel, CommunicationNetwork, ParticipantId
from .journeys import SourceResult

SECONDS_PER_HOUR = 3600
DEFAULT_QUANTILES = (0.3, 0.5, 0.7, 0.9)


@dataclass(frozen=True)
class EcdfSeries:
    """Empirical cumulative distribution as (value, fraction) step points."""

    points: tuple[tuple[float, float], ...]

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(v for v, _ in self.points)

    @property
    def fractions(self) -> tuple[float, ...]:
        return tuple(f for _, f in self.points)


@dataclass(frozen=True)
class QuantileRangeTable:
    """Per-dataset rows mapping quantile q to the range [Q(q), max]."""

    rows: dict[str, dict[float, tuple[float, float]]]


@dataclass(frozen=True)
class BoundsShares:
    """Fractions of channels per boundedness kind; they sum to one."""

    shares: dict[Boundedness, float]


def absolute_ranges(results: Iterable[SourceResult]) -> dict[ParticipantId, int]:
    """Horizon cardinality per source: how many participants it can reach."""
    return {r.source: len(r.reach) for r in results}


def normalized_ranges(
    results: Iterable[SourceResult], vertex_count: int
) -> dict[ParticipantId, float]:
    """Horizon cardinality divided by network size.

    The source is never in its own horizon, so the maximum attainable value
    is (|V| - 1) / |V|.
    """
    if vertex_count == 0:
        raise DataError("vertex_count must be >= 1")
    out: dict[str, float] = {}
    for r in results:
        if len(r.reach) > vertex_count - 1:
            raise DataError(
                f"horizon of {r.source!r} has {len(r.reach)} members, exceeds |V|-1 = {vertex_count - 1}"
            )
        out[r.source] = len(r.reach) / vertex_count
    return out


def ecdf(values: Sequence[float]) -> EcdfSeries:
    """Fraction of observations <= x for each distinct value x, ascending."""
    if len(values) == 0:
        raise DataError("ecdf of an empty sample is undefined")
    n = len(values)
    counts = collections.Counter(values)
    points = []
    cumulative = 0
    for v in sorted(counts):
        cumulative += counts[v]
        points.append((float(v), cumulative / n))
    return EcdfSeries(points=tuple(points))


def quantile_ranges(
    values: Sequence[float], qs: Sequence[float] = DEFAULT_QUANTILES
) -> dict[float, tuple[float, float]]:
    """One quantile-range row: q -> (Q(q), max).

    Q uses linear interpolation between closest order statistics, the default
    of mainstream statistics tooling; comparisons against other tables should
    state the method.
    """
    if len(values) == 0:
        raise DataError("quantiles of an empty sample are undefined")
    for q in qs:
        if not 0.0 < q < 1.0:
            raise DataError(f"quantile {q} outside (0, 1)")
    arr = np.asarray(values, dtype=float)
    upper = float(arr.max())
    return {q: (float(np.quantile(arr, q)), upper) for q in qs}


def quantile_table(
    labeled_values: dict[str, Sequence[float]], qs: Sequence[float] = DEFAULT_QUANTILES
) -> QuantileRangeTable:
    """Assemble quantile-range rows for several datasets."""
    return QuantileRangeTable(
        rows={label: quantile_ranges(vals, qs) for label, vals in labeled_values.items()}
    )


def distance_distributions(
    results: Iterable[SourceResult],
) -> tuple[list[int], list[float]]:
    """Flattened hop and duration multisets over all ordered reachable pairs.

    Durations are converted to hours for reporting; unreachable pairs are
    excluded rather than encoded as infinity. Both lists follow the same
    (source, target) order, so their lengths match.
    """
    topological: list[int] = []
    temporal_hours: list[float] = []
    for r in sorted(results, key=lambda r: r.source):
        for target in sorted(r.reach):
            label = r.reach[target]
            topological.append(label.topological_hops)
            temporal_hours.append(label.temporal_duration / SECONDS_PER_HOUR)
    return topological, temporal_hours


def bounds_shares(channels: Sequence[Channel]) -> BoundsShares:
    """Share of channels per boundedness kind."""
    if not channels:
        raise DataError("bounds shares of an empty channel set are undefined")
    counts = collections.Counter(c.boundedness for c in channels)
    total = len(channels)
    return BoundsShares(shares={kind: counts.get(kind, 0) / total for kind in Boundedness})


def _format_float(x: float) -> str:
    return repr(float(x))


def write_reports(
    results: list[SourceResult],
    channels: Sequence[Channel],
    network: CommunicationNetwork,
    output_dir: str | Path,
    include_ecdf: bool = True,
) -> list[Path]:
    """Write the measurement CSVs: ranges, distances, boundedness shares.

    Files are UTF-8 with LF line endings and sorted rows, so reruns on the
    same inputs are byte-identical.
    """
    out = Path(output_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise DataError(f"cannot create output directory {out}: {exc}") from exc
    written: list[Path] = []

    vertex_count = len(network.vertices)
    abs_ranges = absolute_ranges(results)
    norm_ranges = normalized_ranges(results, vertex_count) if results else {}
    rows = [
        f"{pid},{abs_ranges[pid]},{_format_float(norm_ranges[pid])}"
        for pid in sorted(abs_ranges)
    ]
    written.append(_write_csv(out / "ranges.csv", "participant,absolute_range,normalized_range", rows))

    topo_rows: list[str] = []
    temp_rows: list[str] = []
    for r in sorted(results, key=lambda r: r.source):
        for target in sorted(r.reach):
            label = r.reach[target]
            topo_rows.append(f"{r.source},{target},{label.topological_hops}")
            hours = label.temporal_duration / SECONDS_PER_HOUR
            temp_rows.append(f"{r.source},{target},{hours:.3f}")
    written.append(_write_csv(out / "topological_distances.csv", "source,target,hops", topo_rows))
    written.append(_write_csv(out / "temporal_distances.csv", "source,target,hours", temp_rows))

    bounds_rows = []
    if channels:
        counts = collections.Counter(c.boundedness for c in channels)
        shares = bounds_shares(channels).shares
        bounds_rows = [
            f"{kind.value},{counts.get(kind, 0)},{_format_float(shares[kind])}"
            for kind in sorted(Boundedness, key=lambda k: k.value)
        ]
    written.append(_write_csv(out / "bounds.csv", "boundedness,count,share", bounds_rows))

    if include_ecdf:
        topo, temp = distance_distributions(results)
        for name, values in (
            ("normalized_range", list(norm_ranges.values())),
            ("topological_distance", topo),
            ("temporal_distance", temp),
        ):
            points = ecdf(values).points if values else ()
            ecdf_rows = [f"{_format_float(v)},{_format_float(f)}" for v, f in points]
            written.append(_write_csv(out / f"ecdf_{name}.csv", "value,fraction", ecdf_rows))
    return written


def _write_csv(path: Path, header: str, rows: list[str]) -> Path:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(header + "\n")
            for row in rows:
                fh.write(row + "\n")
    except OSError as exc:
        raise DataError(f"cannot write {path}: {exc}") from exc
    return path
