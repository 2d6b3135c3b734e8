"""Equal-width binning and normalized Shannon entropy of a sample window.

A window is discretised into ``k`` equal-width intervals spanning its own
``[min, max]``; the resulting frequencies give a probability vector whose
Shannon entropy is divided by ``log k``.  The ratio lies in ``[0, 1]`` and
does not depend on the logarithm base or on the scale of the data.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

__all__ = [
    "DegenerateRange",
    "Histogram",
    "WindowParams",
    "bin_edges",
    "default_bin_count",
    "histogram",
    "max_entropy",
    "normalized_entropy",
    "probabilities",
    "shannon_entropy",
]


class DegenerateRange(ValueError):
    """Raised when a window has zero value range (all samples equal)."""


@dataclass(frozen=True)
class Histogram:
    edges: np.ndarray
    counts: np.ndarray
    n: int

    @property
    def k(self) -> int:
        return len(self.counts)


def default_bin_count(delta: int) -> int:
    """Bin count from the logarithmic rule ``k = ln(delta)``.

    ``ln(delta)`` is rounded half away from zero and clamped below at 2.

    >>> default_bin_count(100), default_bin_count(70), default_bin_count(2)
    (5, 4, 2)
    """
    if int(delta) != delta or delta < 2:
        raise ValueError(f"window size must be an integer >= 2, got {delta!r}")
    # ln(delta) > 0, so floor(x + 0.5) is half-away-from-zero
    k = max(2, int(math.floor(math.log(delta) + 0.5)))
    return min(k, int(delta))


@dataclass(frozen=True)
class WindowParams:
    """Window length ``delta`` and bin count (an int, or ``None`` for the ln rule)."""

    delta: int
    bins: Optional[int] = None

    def __post_init__(self):
        if int(self.delta) != self.delta or self.delta < 2:
            raise ValueError(f"delta must be an integer >= 2, got {self.delta!r}")
        if self.bins is not None:
            if int(self.bins) != self.bins or not 2 <= self.bins <= self.delta:
                raise ValueError(
                    f"bins must be an integer in [2, delta={self.delta}], got {self.bins!r}"
                )

    @property
    def k(self) -> int:
        if self.bins is None:
            return default_bin_count(self.delta)
        return int(self.bins)

    @classmethod
    def from_bins(cls, delta: int, bins: Union[int, str, None]) -> "WindowParams":
        """Build from a CLI-style bins value: an integer or ``"auto"``."""
        if bins is None or (isinstance(bins, str) and bins.lower() == "auto"):
            return cls(delta, None)
        return cls(delta, int(bins))


def _check_k(k) -> int:
    if int(k) != k or k < 2:
        raise ValueError(f"bin count must be an integer >= 2, got {k!r}")
    return int(k)


def _check_base(base: float) -> None:
    if not base > 1:
        raise ValueError(f"logarithm base must be > 1, got {base!r}")


def bin_edges(x_min: float, x_max: float, k: int) -> np.ndarray:
    """Return the ``k + 1`` boundaries of ``k`` equal-width intervals.

    The last edge is set to ``x_max`` exactly rather than ``x_min + k * width``.

    Raises
    ------
    DegenerateRange
        If ``x_min >= x_max``.
    """
    k = _check_k(k)
    if not (math.isfinite(x_min) and math.isfinite(x_max)):
        raise ValueError("range bounds must be finite")
    if x_min >= x_max:
        raise DegenerateRange(f"empty value range [{x_min}, {x_max}]")
    width = (x_max - x_min) / k
    edges = x_min + width * np.arange(k + 1, dtype=float)
    edges[-1] = x_max
    return edges


def _as_window(window: Sequence[float]) -> np.ndarray:
    x = np.asarray(window, dtype=float).ravel()
    if x.size == 0:
        raise ValueError("window is empty")
    if not np.all(np.isfinite(x)):
        raise ValueError("window contains non-finite values")
    return x


def _bin_index(x: np.ndarray, edges: np.ndarray) -> np.ndarray:
    # number of interior edges <= x; same as floor((x - min) / width) clamped to
    # [0, k-1], but decided against the stored edges so ties cannot disagree
    return np.searchsorted(edges[1:-1], x, side="right")


def histogram(window: Sequence[float], k: int) -> Histogram:
    """Count samples per equal-width interval of the window's own range.

    Intervals are half-open ``[e_j, e_{j+1})`` except the last, which is closed
    so the window maximum is counted.  A sample lying exactly on an interior
    edge goes to the higher interval.
    """
    k = _check_k(k)
    x = _as_window(window)
    lo, hi = float(x.min()), float(x.max())
    edges = bin_edges(lo, hi, k)
    counts = np.bincount(_bin_index(x, edges), minlength=k)
    return Histogram(edges=edges, counts=counts, n=int(x.size))


def probabilities(hist: Histogram) -> np.ndarray:
    """Relative frequencies ``f_j / n``."""
    if hist.n < 1:
        raise ValueError("histogram holds no samples")
    return np.asarray(hist.counts, dtype=float) / hist.n


def shannon_entropy(p: Sequence[float], base: float = math.e) -> float:
    """Shannon entropy ``-sum p log_b p`` with ``0 log 0 = 0``."""
    _check_base(base)
    p = np.asarray(p, dtype=float)
    if np.any(p < 0) or np.any(p > 1) or abs(p.sum() - 1.0) > 1e-9:
        raise ValueError("not a probability vector")
    nz = p[p > 0]
    h = -float(np.sum(nz * np.log(nz)))
    if base != math.e:
        h /= math.log(base)
    return max(h, 0.0)


def max_entropy(k: int, base: float = math.e) -> float:
    """Entropy of the uniform distribution over ``k`` outcomes, ``log_b k``."""
    k = _check_k(k)
    _check_base(base)
    return math.log(k) / math.log(base)


def normalized_entropy(window: Sequence[float], k: int, base: float = math.e) -> float:
    """Shannon entropy of the binned window divided by ``log k``.

    A constant window has no uncertainty and yields 0.0.

    Parameters
    ----------
    window : array_like
        At least two finite samples.
    k : int
        Number of equal-width bins (>= 2).
    base : float, optional
        Logarithm base; it cancels in the ratio and only exists for checking.

    Returns
    -------
    float
        Value in ``[0, 1]``.
    """
    x = _as_window(window)
    if x.size < 2:
        raise ValueError("window must hold at least two samples")
    k = _check_k(k)
    if x.min() == x.max():
        return 0.0
    p = probabilities(histogram(x, k))
    h = shannon_entropy(p, base) / max_entropy(k, base)
    return min(max(h, 0.0), 1.0)
