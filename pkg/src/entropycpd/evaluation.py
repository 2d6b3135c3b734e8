"""Scoring detected events against known change points."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .detection import DetectionEvent
from .simulation import GroundTruth

__all__ = ["EvaluationReport", "ReportRow", "match_and_score", "mean_deviation_percent", "render_table"]


@dataclass(frozen=True)
class ReportRow:
    true_cp: int
    response_point: Optional[int] = None
    duration: Optional[int] = None
    error: Optional[int] = None

    @property
    def matched(self) -> bool:
        return self.response_point is not None


@dataclass
class EvaluationReport:
    rows: List[ReportRow]
    false_positives: int
    false_negatives: int
    mean_error: float
    mean_deviation_pct: float
    delta: int
    params: dict = field(default_factory=dict)

    @property
    def matched(self) -> int:
        return sum(r.matched for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "rows": [
                {
                    "true_cp": r.true_cp,
                    "response_point": r.response_point,
                    "duration": r.duration,
                    "error": r.error,
                }
                for r in self.rows
            ],
            "matched": self.matched,
            "false_positives": self.false_positives,
            "false_negatives": self.false_negatives,
            "mean_error": self.mean_error,
            "mean_deviation_pct": self.mean_deviation_pct,
            "delta": self.delta,
            "params": dict(self.params),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "EvaluationReport":
        return cls(
            rows=[ReportRow(**r) for r in d["rows"]],
            false_positives=int(d["false_positives"]),
            false_negatives=int(d["false_negatives"]),
            mean_error=float(d["mean_error"]),
            mean_deviation_pct=float(d["mean_deviation_pct"]),
            delta=int(d["delta"]),
            params=dict(d.get("params", {})),
        )


def match_and_score(
    truth: GroundTruth, events: Sequence[DetectionEvent], delta: int, params: Optional[dict] = None
) -> EvaluationReport:
    """Greedy nearest matching of events to true change points.

    True change points are taken in ascending order; each claims the nearest
    still-unclaimed event onset within ``delta`` samples (ties go to the
    earlier event).  Leftover events are false positives, unmatched truths
    false negatives.
    """
    if delta < 1:
        raise ValueError("delta must be >= 1")
    events = sorted(events, key=lambda e: e.onset)
    claimed = [False] * len(events)
    rows = []
    for cp in sorted(truth.change_points):
        best = None
        for j, ev in enumerate(events):
            if claimed[j]:
                continue
            dist = abs(ev.onset - cp)
            if dist <= delta and (best is None or dist < best[0]):
                best = (dist, j)
        if best is None:
            rows.append(ReportRow(cp))
        else:
            dist, j = best
            claimed[j] = True
            rows.append(ReportRow(cp, events[j].onset, events[j].duration, dist))

    errors = [r.error for r in rows if r.matched]
    mean_error = sum(errors) / len(errors) if errors else 0.0
    return EvaluationReport(
        rows=rows,
        false_positives=claimed.count(False),
        false_negatives=sum(not r.matched for r in rows),
        mean_error=mean_error,
        mean_deviation_pct=mean_error / delta * 100.0,
        delta=delta,
        params=dict(params or {}),
    )


def mean_deviation_percent(report: EvaluationReport) -> float:
    """Mean matching error as a percentage of the window size."""
    if report.delta < 1:
        raise ValueError("delta must be >= 1")
    if report.matched == 0:
        return 0.0
    return report.mean_error / report.delta * 100.0


def render_table(report: EvaluationReport) -> str:
    """Plain-text table: change point, response point, duration, error."""
    head = ("Change point", "Response point", "Response duration", "Error")
    body = [
        tuple("-" if v is None else str(v) for v in (r.true_cp, r.response_point, r.duration, r.error))
        for r in report.rows
    ]
    widths = [max(len(c) for c in col) for col in zip(head, *body)]
    fmt = "  ".join("{:>%d}" % w for w in widths)
    lines = [fmt.format(*head), fmt.format(*("-" * w for w in widths))]
    lines += [fmt.format(*row) for row in body]
    lines.append("")
    lines.append(
        f"matched {report.matched}/{len(report.rows)}  "
        f"false positives {report.false_positives}  false negatives {report.false_negatives}"
    )
    lines.append(
        f"mean error {report.mean_error:.4g}  ({report.mean_deviation_pct:.4g}% of window {report.delta})"
    )
    return "\n".join(lines) + "\n"
