"""Information diffusion bounds in code review communication networks.

Review discussions become interval-stamped hyperedges over their human
participants; time-respecting walks through those channels bound who can
learn what, in how many reviews, and how fast.
"""

from .errors import DataError, ParseError
from .model import (
    BipartiteGraph,
    Boundedness,
    Channel,
    CommunicationNetwork,
    TimeWindow,
    build_network,
    is_active,
    latency,
    to_bipartite,
    to_epoch_seconds,
)
from .journeys import (
    Journey,
    ReachLabel,
    SourceResult,
    all_pairs,
    enumerate_journeys_oracle,
    horizon,
    oracle_labels,
    single_source,
)
from .ingest import (
    ActorKind,
    BotRuleSet,
    EventType,
    IngestReport,
    ReviewEvent,
    anonymize,
    build_channels,
    classify_boundedness,
    filter_humans,
    ingest_events,
    parse_events,
)
from .metrics import (
    BoundsShares,
    EcdfSeries,
    QuantileRangeTable,
    absolute_ranges,
    bounds_shares,
    distance_distributions,
    ecdf,
    normalized_ranges,
    quantile_ranges,
    quantile_table,
    write_reports,
)

__all__ = [
    "ActorKind",
    "BipartiteGraph",
    "BotRuleSet",
    "Boundedness",
    "BoundsShares",
    "Channel",
    "CommunicationNetwork",
    "DataError",
    "EcdfSeries",
    "EventType",
    "IngestReport",
    "Journey",
    "ParseError",
    "QuantileRangeTable",
    "ReachLabel",
    "ReviewEvent",
    "SourceResult",
    "TimeWindow",
    "absolute_ranges",
    "all_pairs",
    "anonymize",
    "bounds_shares",
    "build_channels",
    "build_network",
    "classify_boundedness",
    "distance_distributions",
    "ecdf",
    "enumerate_journeys_oracle",
    "filter_humans",
    "horizon",
    "ingest_events",
    "is_active",
    "latency",
    "normalized_ranges",
    "oracle_labels",
    "parse_events",
    "quantile_ranges",
    "quantile_table",
    "single_source",
    "to_bipartite",
    "to_epoch_seconds",
    "write_reports",
]

__version__ = "0.1.0"
