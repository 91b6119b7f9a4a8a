"""From raw review event logs to anonymized, bot-free channels.

The ingestion atom is one human interaction with a code review: creating,
commenting, editing, approving, closing, or merging. Events are filtered
against bot rules, actor ids are replaced by salted keyed hashes, and the
events of each review inside the observation window collapse into one
channel spanning the first to the last in-window interaction.
"""

from __future__ import annotations

import hashlib
import hmac
import json
import re
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable

from .errors import DataError, ParseError
from .model import Boundedness, Channel, TimeStamp, TimeWindow, to_epoch_seconds


class ActorKind(str, Enum):
    HUMAN = "human"
    BOT = "bot"
    UNKNOWN = "unknown"


class EventType(str, Enum):
    CREATE = "create"
    COMMENT = "comment"
    EDIT = "edit"
    APPROVE = "approve"
    CLOSE = "close"
    MERGE = "merge"


@dataclass(frozen=True)
class ReviewEvent:
    """One human interaction with a code review."""

    review_id: str
    actor_id: str
    event_type: EventType
    timestamp: TimeStamp
    actor_kind: ActorKind = ActorKind.UNKNOWN
    review_created_at: TimeStamp | None = None
    review_closed_at: TimeStamp | None = None

    def __post_init__(self) -> None:
        if not self.review_id:
            raise DataError("review_id must be non-empty")
        if not self.actor_id:
            raise DataError("actor_id must be non-empty")
        if self.review_created_at is not None and self.timestamp < self.review_created_at:
            raise DataError(
                f"event at {self.timestamp} predates review creation at {self.review_created_at}"
            )


class BotRuleSet:
    """Exact ids and wildcard patterns identifying non-human actors.

    Patterns support ``*`` (any run of characters) and ``?`` (one character);
    everything else, including brackets, matches literally. Matching is
    case-insensitive. A rules file holds one exact id or pattern per line,
    with ``#`` comments; lines containing a wildcard are patterns.
    """

    def __init__(self, exact_ids: Iterable[str] = (), name_patterns: Iterable[str] = ()) -> None:
        self.exact_ids = frozenset(exact_ids)
        self.name_patterns = tuple(name_patterns)
        self._compiled = [
            re.compile(_wildcard_to_regex(p), re.IGNORECASE) for p in self.name_patterns
        ]

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "BotRuleSet":
        exact, patterns = [], []
        for raw in lines:
            entry = raw.split("#", 1)[0].strip()
            if not entry:
                continue
            if "*" in entry or "?" in entry:
                patterns.append(entry)
            else:
                exact.append(entry)
        return cls(exact_ids=exact, name_patterns=patterns)

    def matches(self, actor_id: str) -> bool:
        if actor_id in self.exact_ids:
            return True
        return any(rx.fullmatch(actor_id) for rx in self._compiled)

    def __repr__(self) -> str:
        return f"BotRuleSet(exact={len(self.exact_ids)}, patterns={len(self.name_patterns)})"


def _wildcard_to_regex(pattern: str) -> str:
    parts = []
    for ch in pattern:
        if ch == "*":
            parts.append(".*")
        elif ch == "?":
            parts.append(".")
        else:
            parts.append(re.escape(ch))
    return "".join(parts)


@dataclass
class IngestReport:
    """Counters describing one ingestion run.

    Every event read is either kept (it contributes to an emitted channel) or
    accounted to exactly one dropped category.
    """

    events_read: int = 0
    events_kept: int = 0
    events_dropped_bot: int = 0
    events_dropped_unknown_type: int = 0
    events_dropped_outside_window: int = 0
    events_dropped_singleton: int = 0
    channels_emitted: int = 0
    singleton_channels: int = 0

    def consistent(self) -> bool:
        dropped = (
            self.events_dropped_bot
            + self.events_dropped_unknown_type
            + self.events_dropped_outside_window
            + self.events_dropped_singleton
        )
        return self.events_read == self.events_kept + dropped

    def to_text(self) -> str:
        lines = [
            f"events read:                   {self.events_read}",
            f"events kept:                   {self.events_kept}",
            f"events dropped (bot):          {self.events_dropped_bot}",
            f"events dropped (unknown type): {self.events_dropped_unknown_type}",
            f"events dropped (outside win):  {self.events_dropped_outside_window}",
            f"events dropped (singleton):    {self.events_dropped_singleton}",
            f"channels emitted:              {self.channels_emitted}",
            f"singleton channels:            {self.singleton_channels}",
        ]
        return "\n".join(lines) + "\n"


_EVENT_TYPES = {e.value for e in EventType}
_ACTOR_KINDS = {k.value for k in ActorKind}


def parse_events(lines: Iterable[str], report: IngestReport | None = None) -> list[ReviewEvent]:
    """Parse line-delimited JSON event records, in input order.

    Timestamps may be integer epoch seconds or ISO-8601 UTC strings. Records
    with an unknown event_type are tool-specific noise (reactions, emojis)
    and are dropped with a counted warning rather than rejected.
    """
    events: list[ReviewEvent] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
        if not isinstance(record, dict):
            raise ParseError(f"line {lineno}: expected an object")
        if report is not None:
            report.events_read += 1
        try:
            event = _record_to_event(record, report)
        except DataError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
        if event is not None:
            events.append(event)
    return events


def _record_to_event(record: dict, report: IngestReport | None) -> ReviewEvent | None:
    for key in ("review_id", "actor_id", "event_type", "timestamp"):
        if key not in record:
            raise DataError(f"missing field {key!r}")
    event_type = str(record["event_type"])
    if event_type not in _EVENT_TYPES:
        if report is not None:
            report.events_dropped_unknown_type += 1
        return None
    kind = str(record.get("actor_kind", ActorKind.UNKNOWN.value))
    if kind not in _ACTOR_KINDS:
        raise DataError(f"unknown actor_kind {kind!r}")
    created = record.get("review_created_at")
    closed = record.get("review_closed_at")
    return ReviewEvent(
        review_id=str(record["review_id"]),
        actor_id=str(record["actor_id"]),
        event_type=EventType(event_type),
        timestamp=to_epoch_seconds(record["timestamp"]),
        actor_kind=ActorKind(kind),
        review_created_at=None if created is None else to_epoch_seconds(created),
        review_closed_at=None if closed is None else to_epoch_seconds(closed),
    )


def filter_humans(
    events: list[ReviewEvent],
    rules: BotRuleSet,
    report: IngestReport | None = None,
) -> list[ReviewEvent]:
    """Drop events from bots: flagged actor_kind or a rule match on the id."""
    kept = []
    for e in events:
        if e.actor_kind is ActorKind.BOT or rules.matches(e.actor_id):
            if report is not None:
                report.events_dropped_bot += 1
        else:
            kept.append(e)
    return kept


def anonymize(events: list[ReviewEvent], salt: str) -> list[ReviewEvent]:
    """Replace actor ids with keyed digests; same input and salt, same output."""
    if not salt:
        raise DataError("anonymization salt must be non-empty")
    key = salt.encode("utf-8")
    cache: dict[str, str] = {}
    out = []
    for e in events:
        digest = cache.get(e.actor_id)
        if digest is None:
            digest = hmac.new(key, e.actor_id.encode("utf-8"), hashlib.sha256).hexdigest()
            cache[e.actor_id] = digest
        out.append(replace(e, actor_id=digest))
    return out


def classify_boundedness(
    review_created_at: TimeStamp | None,
    first_event: TimeStamp,
    last_event: TimeStamp,
    review_closed_at: TimeStamp | None,
    window: TimeWindow,
) -> Boundedness:
    """Classify a channel by whether the window cuts its true lifespan.

    A review created before the window is cut at its start (right-bounded); a
    review still open or closed after the window is cut at its end
    (left-bounded); both cuts make it unbounded.
    """
    if first_event > last_event:
        raise DataError(f"first_event {first_event} after last_event {last_event}")
    if not (window.contains(first_event) and window.contains(last_event)):
        raise DataError("observed events must lie within the window")
    started_before = review_created_at is not None and review_created_at < window.start
    ends_after = review_closed_at is None or review_closed_at > window.end
    if started_before and ends_after:
        return Boundedness.UNBOUNDED
    if started_before:
        return Boundedness.RIGHT_BOUNDED
    if ends_after:
        return Boundedness.LEFT_BOUNDED
    return Boundedness.BOUNDED


def build_channels(
    events: list[ReviewEvent],
    window: TimeWindow,
    drop_singletons: bool = False,
    report: IngestReport | None = None,
) -> tuple[list[Channel], IngestReport]:
    """Group events by review into channels spanning their in-window activity.

    Window membership is a closed interval, mirroring channel presence. A
    review with a single human participant still contributes a vertex to the
    network unless ``drop_singletons`` is set; either way it is counted.
    """
    if report is None:
        # standalone use: no parse stage counted the reads
        report = IngestReport(events_read=len(events))
    groups: dict[str, list[ReviewEvent]] = {}
    for e in events:
        if not window.contains(e.timestamp):
            report.events_dropped_outside_window += 1
            continue
        groups.setdefault(e.review_id, []).append(e)
    channels: list[Channel] = []
    for review_id in sorted(groups):
        in_window = groups[review_id]
        actors = frozenset(e.actor_id for e in in_window)
        singleton = len(actors) == 1
        if singleton:
            report.singleton_channels += 1
            if drop_singletons:
                report.events_dropped_singleton += len(in_window)
                continue
        first = min(e.timestamp for e in in_window)
        last = max(e.timestamp for e in in_window)
        created = [e.review_created_at for e in in_window if e.review_created_at is not None]
        closed = [e.review_closed_at for e in in_window if e.review_closed_at is not None]
        channels.append(
            Channel(
                id=review_id,
                participants=actors,
                opens_at=first,
                closes_at=last,
                boundedness=classify_boundedness(
                    min(created) if created else None,
                    first,
                    last,
                    max(closed) if closed else None,
                    window,
                ),
            )
        )
        report.events_kept += len(in_window)
    report.channels_emitted = len(channels)
    return channels, report


def ingest_events(
    lines: Iterable[str],
    rules: BotRuleSet,
    salt: str,
    window: TimeWindow,
    drop_singletons: bool = False,
) -> tuple[list[Channel], IngestReport]:
    """Full pipeline: parse, filter bots, anonymize, build channels."""
    report = IngestReport()
    events = parse_events(lines, report)
    events = filter_humans(events, rules, report)
    events = anonymize(events, salt)
    return build_channels(events, window, drop_singletons=drop_singletons, report=report)
