"""Empirical growth-order selection over polynomial degrees.

Scans degrees in ascending order and picks the smallest degree whose
highest-order term is itself significant while the next degree's new
term is not.  The resulting verdict carries an "O_emp(p^d)" label, a
decision trace, and the per-degree regression reports, so a selection
can be audited rather than taken on faith.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .polyfit import DataPoint, RegressionReport, diagnostics, fit

__all__ = [
    "EmpiricalOVerdict",
    "SelectionPolicy",
    "TraceEntry",
    "render_verdict",
    "select_degree",
]


@dataclass(frozen=True)
class SelectionPolicy:
    """Significance threshold and the degree range to scan."""

    alpha: float = 0.05
    d_min: int = 1
    d_max: int = 4

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must be in (0, 1), got {self.alpha}")
        if self.d_min < 1:
            raise ValueError(f"d_min must be >= 1, got {self.d_min}")
        if self.d_max < self.d_min:
            raise ValueError(f"d_max {self.d_max} must be >= d_min {self.d_min}")


@dataclass(frozen=True)
class TraceEntry:
    """One scanned degree: its own top-term sig, the extension's, the verdict."""

    degree: int
    top_term_sig: float | None
    extension_sig: float | None
    accepted: bool
    reason: str


@dataclass(frozen=True)
class EmpiricalOVerdict:
    """Outcome of a scan, auditable via the trace and per-degree reports.

    `cap_limited` marks a scan that exhausted its degree range without
    finding an adequate degree; `degenerate` marks constant-response
    data, which short-circuits to degree 0 without scanning.
    """

    selected_degree: int
    verdict_label: str
    cap_limited: bool
    degenerate: bool
    decision_trace: tuple[TraceEntry, ...]
    per_degree_reports: dict[int, RegressionReport] = field(repr=False)


def _report_for(
    points: Sequence[DataPoint], degree: int, cache: dict[int, RegressionReport]
) -> RegressionReport:
    if degree not in cache:
        cache[degree] = diagnostics(points, fit(points, degree))
    return cache[degree]


def select_degree(points: Sequence[DataPoint], policy: SelectionPolicy) -> EmpiricalOVerdict:
    """Scan degrees `policy.d_min`..`policy.d_max` and pick the first adequate one.

    A degree d is adequate when its own x^d term has sig < alpha
    (strictly) and the x^(d+1) term of the degree d+1 fit has
    sig >= alpha.  An exact fit is terminal: nothing is left for a
    higher term to explain.  If no scanned degree qualifies, the
    verdict is the degree cap itself, flagged cap-limited, never a
    silently extended search.  Constant-response data cannot rank
    degrees at all and comes back as a flagged degree-0 verdict.
    """
    m = len(points)
    if m < policy.d_max + 2:
        raise ValueError(
            f"scanning up to degree {policy.d_max} needs at least "
            f"{policy.d_max + 2} points, got {m}"
        )

    cache: dict[int, RegressionReport] = {}

    y_values = {pt.y for pt in points}
    if len(y_values) == 1:
        report = diagnostics(points, fit(points, 0, min_residual_df=1))
        return EmpiricalOVerdict(
            selected_degree=0,
            verdict_label="O_emp(p^0)",
            cap_limited=False,
            degenerate=True,
            decision_trace=(
                TraceEntry(
                    degree=0,
                    top_term_sig=None,
                    extension_sig=None,
                    accepted=True,
                    reason="constant response, nothing to rank",
                ),
            ),
            per_degree_reports={0: report},
        )

    trace: list[TraceEntry] = []
    selected: int | None = None

    for d in range(policy.d_min, policy.d_max + 1):
        report = _report_for(points, d, cache)
        if report.exact_fit:
            trace.append(
                TraceEntry(
                    degree=d,
                    top_term_sig=None,
                    extension_sig=None,
                    accepted=True,
                    reason="exact fit, no residual variation left",
                )
            )
            selected = d
            break

        own_sig = report.highest_order_row.sig
        if not (own_sig is not None and own_sig < policy.alpha):
            trace.append(
                TraceEntry(
                    degree=d,
                    top_term_sig=own_sig,
                    extension_sig=None,
                    accepted=False,
                    reason=f"own top term not significant at alpha={policy.alpha:g}",
                )
            )
            continue

        if d == policy.d_max:
            trace.append(
                TraceEntry(
                    degree=d,
                    top_term_sig=own_sig,
                    extension_sig=None,
                    accepted=False,
                    reason="degree cap reached, extension untestable",
                )
            )
            break

        ext_report = _report_for(points, d + 1, cache)
        ext_sig = None if ext_report.exact_fit else ext_report.highest_order_row.sig
        if ext_sig is not None and ext_sig >= policy.alpha:
            trace.append(
                TraceEntry(
                    degree=d,
                    top_term_sig=own_sig,
                    extension_sig=ext_sig,
                    accepted=True,
                    reason=f"top term significant, extension term not, at alpha={policy.alpha:g}",
                )
            )
            selected = d
            break
        trace.append(
            TraceEntry(
                degree=d,
                top_term_sig=own_sig,
                extension_sig=ext_sig,
                accepted=False,
                reason="extension term still significant"
                if ext_sig is not None
                else "extension fit is exact",
            )
        )

    if selected is None:
        cap_limited = True
        selected = policy.d_max
        _report_for(points, selected, cache)
    else:
        cap_limited = False

    return EmpiricalOVerdict(
        selected_degree=selected,
        verdict_label=f"O_emp(p^{selected})",
        cap_limited=cap_limited,
        degenerate=False,
        decision_trace=tuple(trace),
        per_degree_reports=dict(cache),
    )


def _fmt_sig(value: float | None) -> str:
    return "n/a" if value is None else f"{value:.4f}"


def render_verdict(verdict: EmpiricalOVerdict) -> str:
    """Human-readable verdict: label, scan trace, per-degree fit quality."""
    head = f"empirical order: {verdict.verdict_label}"
    if verdict.cap_limited:
        head += "  [cap-limited: no scanned degree was adequate]"
    if verdict.degenerate:
        head += "  [degenerate: constant response]"
    lines = [head]
    for entry in verdict.decision_trace:
        lines.append(
            f"  degree {entry.degree}: top-term sig {_fmt_sig(entry.top_term_sig)}, "
            f"extension sig {_fmt_sig(entry.extension_sig)} -> "
            f"{'selected' if entry.accepted else 'passed over'} ({entry.reason})"
        )
    lines.append("  fit quality by degree:")
    for d in sorted(verdict.per_degree_reports):
        rep = verdict.per_degree_reports[d]
        lines.append(
            f"    degree {d}: R^2 {rep.summary.r_squared:.6f}, "
            f"adjusted {rep.summary.adjusted_r_squared:.6f}"
        )
    return "\n".join(lines)
