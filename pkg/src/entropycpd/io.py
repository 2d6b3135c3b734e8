"""File formats: series/entropy/joined CSV and JSON documents."""
from __future__ import annotations

import csv
import json
import math
from pathlib import Path
from typing import List, Sequence, Tuple

import numpy as np

from .detection import DetectionEvent
from .simulation import SegmentSpec
from .sliding import EntropySequence

__all__ = [
    "FormatError",
    "read_entropy_csv",
    "read_events_json",
    "read_json",
    "read_segment_specs",
    "read_series_csv",
    "write_entropy_csv",
    "write_events_json",
    "write_joined_csv",
    "write_json",
    "write_series_csv",
]


class FormatError(ValueError):
    pass


def _fmt(v: float) -> str:
    return format(float(v), ".12g")


def _read_two_column(path, expected: Tuple[str, str]) -> Tuple[np.ndarray, np.ndarray]:
    ts, vs = [], []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise FormatError(f"{path}: empty file")
        if tuple(h.strip() for h in header) != expected:
            raise FormatError(f"{path}: line 1: expected header {','.join(expected)}, got {','.join(header)}")
        for row in reader:
            line = reader.line_num
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != 2:
                raise FormatError(f"{path}: line {line}: expected 2 fields, got {len(row)}")
            try:
                t, v = int(row[0]), float(row[1])
            except ValueError:
                raise FormatError(f"{path}: line {line}: malformed row {row!r}") from None
            if not math.isfinite(v):
                raise FormatError(f"{path}: line {line}: non-finite value")
            if ts and t != ts[-1] + 1:
                raise FormatError(f"{path}: line {line}: time {t} does not follow {ts[-1]}")
            ts.append(t)
            vs.append(v)
    return np.asarray(ts, dtype=int), np.asarray(vs, dtype=float)


def write_series_csv(path, values: Sequence[float]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("t", "value"))
        for t, v in enumerate(values, start=1):
            w.writerow((t, repr(float(v))))


def read_series_csv(path) -> np.ndarray:
    ts, vs = _read_two_column(path, ("t", "value"))
    if len(ts) and ts[0] != 1:
        raise FormatError(f"{path}: series must start at t=1, got {ts[0]}")
    return vs


def write_entropy_csv(path, hseq: EntropySequence) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("t", "h_norm"))
        for t, v in zip(hseq.times, hseq.values):
            w.writerow((int(t), _fmt(v)))


def read_entropy_csv(path) -> EntropySequence:
    ts, vs = _read_two_column(path, ("t", "h_norm"))
    if not len(ts):
        raise FormatError(f"{path}: no entropy rows")
    if np.any(vs < 0) or np.any(vs > 1):
        raise FormatError(f"{path}: h_norm outside [0, 1]")
    return EntropySequence(offset=int(ts[0]), values=vs)


def write_joined_csv(path, series: Sequence[float], hseq: EntropySequence) -> None:
    """Rows ``t,value,h_norm``; ``h_norm`` is blank before the first full window."""
    series = np.asarray(series, dtype=float)
    if hseq.offset + len(hseq) - 1 != len(series):
        raise FormatError(
            f"entropy covers t={hseq.offset}..{hseq.offset + len(hseq) - 1} "
            f"but series has {len(series)} samples"
        )
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("t", "value", "h_norm"))
        for t, v in enumerate(series, start=1):
            h = _fmt(hseq.values[t - hseq.offset]) if t >= hseq.offset else ""
            w.writerow((t, repr(float(v)), h))


def write_json(path, obj) -> None:
    Path(path).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: invalid JSON: {e}") from None


def read_segment_specs(path) -> List[SegmentSpec]:
    """Segment list from ``{"segments": [...]}`` or a bare JSON list."""
    text = Path(path).read_text()
    if not text.strip():
        return []
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: invalid JSON: {e}") from None
    segs = doc.get("segments", []) if isinstance(doc, dict) else doc
    if not isinstance(segs, list):
        raise FormatError(f"{path}: 'segments' must be a list")
    return [SegmentSpec.from_dict(s) for s in segs]


def write_events_json(path, events: Sequence[DetectionEvent], params: dict, offset: int) -> None:
    write_json(path, {"params": params, "offset": offset, "events": [e.to_dict() for e in events]})


def read_events_json(path) -> Tuple[List[DetectionEvent], dict]:
    """Events and detector parameters; a blank file means no events."""
    if not Path(path).read_text().strip():
        return [], {}
    doc = read_json(path)
    if not isinstance(doc, dict) or not isinstance(doc.get("events"), list):
        raise FormatError(f"{path}: expected an object with an 'events' list")
    try:
        events = [DetectionEvent.from_dict(e) for e in doc["events"]]
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"{path}: bad event record: {e}") from None
    return events, dict(doc.get("params", {}))
