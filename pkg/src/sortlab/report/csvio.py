"""Summary CSV format: `#` metadata comments, then one row per grid cell.

Numbers are serialized with repr so a write→read round trip preserves
every float bit-for-bit.  The cv field is left empty when undefined
(zero mean count), never NaN.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable, Sequence

from ..montecarlo import TrialSummary

__all__ = [
    "CSV_HEADER",
    "CsvFormatError",
    "RunMetadata",
    "read_summaries_csv",
    "write_summaries_csv",
]

CSV_HEADER = "p,n,trials,mean_c,sd_c,cv_c"


class CsvFormatError(ValueError):
    """Malformed summary CSV; the message carries the offending line number."""


@dataclass(frozen=True)
class RunMetadata:
    """Provenance stamped into every emitted artifact."""

    tool_version: str
    algorithm_id: str
    config: str
    master_seed: int | None = None
    timestamp: str | None = None

    @classmethod
    def create(
        cls,
        config: str,
        *,
        master_seed: int | None = None,
        no_timestamp: bool = False,
    ) -> "RunMetadata":
        from .. import __version__
        from ..distributions import ALGORITHM_ID

        stamp = None if no_timestamp else datetime.now(timezone.utc).isoformat()
        return cls(
            tool_version=__version__,
            algorithm_id=ALGORITHM_ID,
            config=config,
            master_seed=master_seed,
            timestamp=stamp,
        )

    def comment_lines(self) -> list[str]:
        lines = [
            f"# tool_version: {self.tool_version}",
            f"# algorithm_id: {self.algorithm_id}",
            f"# config: {self.config}",
        ]
        if self.master_seed is not None:
            lines.append(f"# master_seed: {self.master_seed}")
        if self.timestamp is not None:
            lines.append(f"# timestamp: {self.timestamp}")
        return lines

    def as_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "algorithm_id": self.algorithm_id,
            "config": self.config,
            "master_seed": self.master_seed,
            "timestamp": self.timestamp,
        }


def _field(value: float | None) -> str:
    return "" if value is None else repr(value)


def format_summaries_csv(summaries: Iterable[TrialSummary], metadata: RunMetadata) -> str:
    lines = metadata.comment_lines()
    lines.append(CSV_HEADER)
    for s in summaries:
        lines.append(
            f"{s.p!r},{s.n},{s.trials},{s.mean_c!r},{s.sd_c!r},{_field(s.cv_c)}"
        )
    return "\n".join(lines) + "\n"


def write_summaries_csv(
    path: str | Path, summaries: Sequence[TrialSummary], metadata: RunMetadata
) -> None:
    Path(path).write_text(format_summaries_csv(summaries, metadata), encoding="utf-8")


def parse_summaries_csv(text: str) -> tuple[tuple[TrialSummary, ...], dict[str, str]]:
    """Parse CSV text; errors name the 1-based offending line."""
    metadata: dict[str, str] = {}
    summaries: list[TrialSummary] = []
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            key, sep, value = body.partition(":")
            if sep:
                metadata[key.strip()] = value.strip()
            continue
        if not header_seen:
            if line != CSV_HEADER:
                raise CsvFormatError(
                    f"line {lineno}: expected header '{CSV_HEADER}', got '{line}'"
                )
            header_seen = True
            continue
        fields = line.split(",")
        if len(fields) != 6:
            raise CsvFormatError(f"line {lineno}: expected 6 fields, got {len(fields)}")
        try:
            summaries.append(
                TrialSummary(
                    p=float(fields[0]),
                    n=int(fields[1]),
                    trials=int(fields[2]),
                    mean_c=float(fields[3]),
                    sd_c=float(fields[4]),
                    cv_c=None if fields[5] == "" else float(fields[5]),
                )
            )
        except ValueError as exc:
            raise CsvFormatError(f"line {lineno}: {exc}") from exc
    if not header_seen:
        raise CsvFormatError(f"missing header '{CSV_HEADER}'")
    return tuple(summaries), metadata


def read_summaries_csv(path: str | Path) -> tuple[tuple[TrialSummary, ...], dict[str, str]]:
    return parse_summaries_csv(Path(path).read_text(encoding="utf-8"))
