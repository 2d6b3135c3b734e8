"""Change-point localisation from fluctuations of the entropy sequence.

Procedure
---------
1. The first ``baseline_span`` entropy values seed a trailing baseline.
2. Each later value is compared with the median of the baseline; it is
   flagged when ``|h - median| > lam * max(MAD, mad_floor)``.  Flagged values
   never enter the baseline.
3. A maximal run of at least ``min_run`` flagged steps is one event.  Its
   onset (first flagged time) is the change-point estimate.
4. A single change disturbs at most ``delta - 1`` windows, so a run that
   reaches ``delta`` steps is closed there; the baseline is then discarded
   and rebuilt from the next ``delta`` values before testing resumes.  This
   lets the detector adopt a new entropy level instead of flagging it forever.
5. Events separated by fewer than ``merge_gap`` steps are merged.
"""
from __future__ import annotations

from collections import deque
from dataclasses import asdict, dataclass
from typing import List, Optional

import numpy as np

from .sliding import EntropySequence

__all__ = [
    "DetectionEvent",
    "DetectorParams",
    "OutOfRange",
    "SequenceTooShort",
    "change_points",
    "detect_fluctuations",
    "local_extremum",
]

PEAK = "peak"
VALLEY = "valley"


class OutOfRange(IndexError):
    pass


class SequenceTooShort(ValueError):
    pass


@dataclass(frozen=True)
class DetectorParams:
    """Knobs of :func:`detect_fluctuations`.

    ``baseline_span`` defaults to ``2 * delta`` and ``merge_gap`` to ``delta``.
    ``mad_floor`` is in normalized-entropy units, which are the same for every
    series, so a fixed floor stays distribution-free.
    """

    delta: int
    lam: float = 3.0
    min_run: int = 3
    baseline_span: Optional[int] = None
    merge_gap: Optional[int] = None
    mad_floor: float = 0.1

    def __post_init__(self):
        if self.baseline_span is None:
            object.__setattr__(self, "baseline_span", 2 * self.delta)
        if self.merge_gap is None:
            object.__setattr__(self, "merge_gap", self.delta)
        if self.delta < 1:
            raise ValueError("delta must be positive")
        if not self.lam > 0:
            raise ValueError("lam must be positive")
        if self.min_run < 1:
            raise ValueError("min_run must be >= 1")
        if self.baseline_span < self.delta:
            raise ValueError("baseline_span must be >= delta")
        if self.merge_gap < 1:
            raise ValueError("merge_gap must be >= 1")
        if self.mad_floor < 0:
            raise ValueError("mad_floor must be nonnegative")

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class DetectionEvent:
    """One entropy fluctuation.

    ``onset`` and ``argmax`` are series times (1-based); ``duration`` counts
    entropy steps from onset to the end of the (possibly merged) run.
    """

    onset: int
    duration: int
    polarity: str
    magnitude: float
    extremum_value: float
    argmax: int

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "DetectionEvent":
        return cls(
            onset=int(d["onset"]),
            duration=int(d["duration"]),
            polarity=str(d["polarity"]),
            magnitude=float(d["magnitude"]),
            extremum_value=float(d["extremum_value"]),
            argmax=int(d.get("argmax", d["onset"])),
        )

    @property
    def end(self) -> int:
        """Time just past the last flagged step."""
        return self.onset + self.duration


def local_extremum(hseq: EntropySequence, t: int, delta: int) -> float:
    """Largest entropy value over times ``[t - delta, t + delta]``.

    The window is clipped to the times the sequence covers.
    """
    first = hseq.offset
    last = hseq.offset + len(hseq) - 1
    lo, hi = max(t - delta, first), min(t + delta, last)
    if lo > hi:
        raise OutOfRange(f"[{t - delta}, {t + delta}] does not meet [{first}, {last}]")
    return float(np.max(hseq.values[lo - first:hi - first + 1]))


def _flag(h: np.ndarray, p: DetectorParams):
    n = len(h)
    flagged = np.zeros(n, dtype=bool)
    dev = np.zeros(n)
    # forced run ends (index one past the last step), from the delta cap
    cut = np.zeros(n + 1, dtype=bool)
    buf = deque(h[:p.baseline_span], maxlen=p.baseline_span)
    run = 0
    rebuild = 0
    for i in range(p.baseline_span, n):
        if rebuild:
            buf.append(h[i])
            rebuild -= 1
            continue
        base = np.fromiter(buf, dtype=float, count=len(buf))
        med = np.median(base)
        mad = np.median(np.abs(base - med))
        d = h[i] - med
        if abs(d) > p.lam * max(mad, p.mad_floor):
            flagged[i] = True
            dev[i] = d
            run += 1
            if run >= p.delta:
                cut[i + 1] = True
                buf.clear()
                rebuild = p.delta
                run = 0
        else:
            buf.append(h[i])
            run = 0
    return flagged, dev, cut


def _runs(flagged: np.ndarray, cut: np.ndarray, min_run: int):
    out = []
    i, n = 0, len(flagged)
    while i < n:
        if not flagged[i]:
            i += 1
            continue
        j = i + 1
        while j < n and flagged[j] and not cut[j]:
            j += 1
        if j - i >= min_run:
            out.append((i, j))
        i = j
    return out


def detect_fluctuations(hseq: EntropySequence, params: DetectorParams) -> List[DetectionEvent]:
    """Detect entropy fluctuations; events come back in ascending onset order."""
    h = np.asarray(hseq.values, dtype=float)
    if len(h) < params.baseline_span + params.min_run:
        raise SequenceTooShort(
            f"need at least {params.baseline_span + params.min_run} entropy values, got {len(h)}"
        )
    flagged, dev, cut = _flag(h, params)
    raw = []
    for a, b in _runs(flagged, cut, params.min_run):
        k = a + int(np.argmax(np.abs(dev[a:b])))
        raw.append([a, b, k, abs(float(dev[k]))])

    merged = []
    for ev in raw:
        if merged and ev[0] - merged[-1][1] < params.merge_gap:
            prev = merged[-1]
            prev[1] = ev[1]
            if ev[3] > prev[3]:
                prev[2], prev[3] = ev[2], ev[3]
        else:
            merged.append(ev)

    off = hseq.offset
    events = []
    for a, b, k, mag in merged:
        events.append(
            DetectionEvent(
                onset=off + a,
                duration=b - a,
                polarity=PEAK if dev[k] > 0 else VALLEY,
                magnitude=mag,
                extremum_value=local_extremum(hseq, off + k, params.delta),
                argmax=off + k,
            )
        )
    return events


def change_points(events: List[DetectionEvent]) -> List[int]:
    """Change-point estimates: the onset of each event."""
    return [ev.onset for ev in events]
