"""Normalized-entropy sequence of a series under a step-1 sliding window."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .entropy import WindowParams, normalized_entropy

__all__ = ["EntropySequence", "SeriesTooShort", "entropy_sequence", "entropy_sequence_naive"]


_CHUNK = 4096


class SeriesTooShort(ValueError):
    pass


@dataclass(frozen=True)
class EntropySequence:
    """Entropy values indexed by the (1-based) time of each window's last sample.

    ``values[i]`` belongs to the window ending at ``offset + i``; ``offset``
    equals the window length, so no value exists before it.
    """

    offset: int
    values: np.ndarray

    def __len__(self) -> int:
        return len(self.values)

    @property
    def times(self) -> np.ndarray:
        return np.arange(self.offset, self.offset + len(self.values))

    def at(self, t: int) -> float:
        i = t - self.offset
        if not 0 <= i < len(self.values):
            raise IndexError(f"time {t} outside [{self.offset}, {self.offset + len(self) - 1}]")
        return float(self.values[i])


def _check_series(series: Sequence[float], delta: int) -> np.ndarray:
    x = np.asarray(series, dtype=float).ravel()
    if not np.all(np.isfinite(x)):
        raise ValueError("series contains non-finite values")
    if x.size < delta:
        raise SeriesTooShort(f"series shorter than window ({x.size} < {delta})")
    return x


def entropy_sequence_naive(series: Sequence[float], params: WindowParams) -> EntropySequence:
    """Reference path: call :func:`normalized_entropy` on every window."""
    delta, k = params.delta, params.k
    x = _check_series(series, delta)
    vals = np.array([normalized_entropy(x[t - delta:t], k) for t in range(delta, x.size + 1)])
    return EntropySequence(offset=delta, values=vals)


def entropy_sequence(series: Sequence[float], params: WindowParams) -> EntropySequence:
    """Normalized entropy of every length-``delta`` window, step 1.

    Each window is binned over its own min/max.  Vectorised over windows in
    chunks; the binning matches :func:`entropycpd.entropy.histogram` exactly.
    """
    delta, k = params.delta, params.k
    x = _check_series(series, delta)
    win = np.lib.stride_tricks.sliding_window_view(x, delta)
    h = np.empty(win.shape[0])
    for start in range(0, win.shape[0], _CHUNK):
        h[start:start + _CHUNK] = _chunk_entropy(win[start:start + _CHUNK], k)
    return EntropySequence(offset=delta, values=h)


def _chunk_entropy(win: np.ndarray, k: int) -> np.ndarray:
    lo = win.min(axis=1)
    hi = win.max(axis=1)
    flat = hi == lo
    width = (hi - lo) / k
    # interior edges built exactly as entropy.bin_edges builds them
    inner = lo[:, None] + width[:, None] * np.arange(1, k, dtype=float)
    idx = (win[:, :, None] >= inner[:, None, :]).sum(axis=2)
    counts = np.zeros((win.shape[0], k))
    for j in range(k):
        counts[:, j] = (idx == j).sum(axis=1)
    p = counts / win.shape[1]
    plogp = p * np.log(np.where(p > 0, p, 1.0))
    h = -plogp.sum(axis=1) / np.log(k)
    h[flat] = 0.0
    return np.clip(h, 0.0, 1.0)
