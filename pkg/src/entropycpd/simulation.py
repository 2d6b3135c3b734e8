"""Seeded multi-segment series with known change points."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import numpy as np

__all__ = [
    "GroundTruth",
    "InvalidSpec",
    "RNG_NAME",
    "SegmentSpec",
    "TABLE1_SEGMENTS",
    "generate_series",
    "table1_fixture",
]

RNG_NAME = "numpy.random.Generator(PCG64)"

# distribution -> required parameter names
DISTRIBUTIONS: Dict[str, Tuple[str, ...]] = {
    "gaussian": ("mean", "stddev"),
    "uniform": ("lo", "hi"),
    "exponential": ("rate",),
    "lognormal": ("mu", "sigma"),
}


class InvalidSpec(ValueError):
    pass


@dataclass(frozen=True)
class SegmentSpec:
    """One stationary segment: a distribution, its parameters, and a length."""

    dist: str
    params: Dict[str, float]
    length: int

    def __post_init__(self):
        if self.dist not in DISTRIBUTIONS:
            raise InvalidSpec(f"unknown distribution {self.dist!r}")
        names = DISTRIBUTIONS[self.dist]
        missing = [n for n in names if n not in self.params]
        if missing:
            raise InvalidSpec(f"{self.dist} segment missing {', '.join(missing)}")
        extra = set(self.params) - set(names)
        if extra:
            raise InvalidSpec(f"{self.dist} segment has unknown parameters {sorted(extra)}")
        if not all(math.isfinite(float(v)) for v in self.params.values()):
            raise InvalidSpec("segment parameters must be finite")
        if isinstance(self.length, bool) or int(self.length) != self.length or self.length < 1:
            raise InvalidSpec(f"segment length must be a positive integer, got {self.length!r}")
        p = self.params
        if self.dist == "gaussian" and not p["stddev"] > 0:
            raise InvalidSpec("stddev must be > 0")
        if self.dist == "uniform" and not p["lo"] < p["hi"]:
            raise InvalidSpec("uniform needs lo < hi")
        if self.dist == "exponential" and not p["rate"] > 0:
            raise InvalidSpec("rate must be > 0")
        if self.dist == "lognormal" and not p["sigma"] > 0:
            raise InvalidSpec("sigma must be > 0")

    @classmethod
    def gaussian(cls, mean, stddev, length):
        return cls("gaussian", {"mean": mean, "stddev": stddev}, length)

    @classmethod
    def uniform(cls, lo, hi, length):
        return cls("uniform", {"lo": lo, "hi": hi}, length)

    @classmethod
    def exponential(cls, rate, length):
        return cls("exponential", {"rate": rate}, length)

    @classmethod
    def lognormal(cls, mu, sigma, length):
        return cls("lognormal", {"mu": mu, "sigma": sigma}, length)

    @classmethod
    def from_dict(cls, d: dict) -> "SegmentSpec":
        if not isinstance(d, dict):
            raise InvalidSpec(f"segment must be an object, got {type(d).__name__}")
        d = dict(d)
        try:
            dist = str(d.pop("dist")).lower()
            length = d.pop("length")
        except KeyError as e:
            raise InvalidSpec(f"segment missing field {e.args[0]!r}") from None
        try:
            params = {k: float(v) for k, v in d.items()}
        except (TypeError, ValueError):
            raise InvalidSpec(f"non-numeric parameter in {d}") from None
        return cls(dist, params, length)

    def to_dict(self) -> dict:
        return {"dist": self.dist, **self.params, "length": self.length}

    @property
    def mean(self) -> float:
        p = self.params
        if self.dist == "gaussian":
            return p["mean"]
        if self.dist == "uniform":
            return 0.5 * (p["lo"] + p["hi"])
        if self.dist == "exponential":
            return 1.0 / p["rate"]
        return math.exp(p["mu"] + 0.5 * p["sigma"] ** 2)

    @property
    def std(self) -> float:
        p = self.params
        if self.dist == "gaussian":
            return p["stddev"]
        if self.dist == "uniform":
            return (p["hi"] - p["lo"]) / math.sqrt(12.0)
        if self.dist == "exponential":
            return 1.0 / p["rate"]
        s2 = p["sigma"] ** 2
        return math.sqrt((math.exp(s2) - 1.0) * math.exp(2 * p["mu"] + s2))

    def draw(self, rng: np.random.Generator) -> np.ndarray:
        p, n = self.params, int(self.length)
        if self.dist == "gaussian":
            return rng.normal(p["mean"], p["stddev"], n)
        if self.dist == "uniform":
            return rng.uniform(p["lo"], p["hi"], n)
        if self.dist == "exponential":
            return rng.exponential(1.0 / p["rate"], n)
        return rng.lognormal(p["mu"], p["sigma"], n)


@dataclass(frozen=True)
class GroundTruth:
    """Change points as 1-based times of the first sample of each new segment."""

    change_points: List[int]
    total_length: int
    seed: int = None
    rng: str = RNG_NAME
    segments: List[dict] = field(default_factory=list)

    def __post_init__(self):
        cps = list(self.change_points)
        if any(b <= a for a, b in zip(cps, cps[1:])):
            raise ValueError("change points must be strictly increasing")
        if cps and not (cps[0] > 1 and cps[-1] <= self.total_length):
            raise ValueError("change points must lie in (1, total_length]")

    def to_dict(self) -> dict:
        return {
            "change_points": list(self.change_points),
            "total_length": self.total_length,
            "seed": self.seed,
            "rng": self.rng,
            "segments": list(self.segments),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GroundTruth":
        return cls(
            change_points=[int(c) for c in d["change_points"]],
            total_length=int(d["total_length"]),
            seed=d.get("seed"),
            rng=d.get("rng", RNG_NAME),
            segments=list(d.get("segments", [])),
        )


def generate_series(specs: Sequence[SegmentSpec], seed: int) -> Tuple[np.ndarray, GroundTruth]:
    """Concatenate seeded draws from each segment, in order, from one generator."""
    specs = list(specs)
    if not specs:
        raise InvalidSpec("no segments")
    rng = np.random.default_rng(seed)
    x = np.concatenate([s.draw(rng) for s in specs])
    ends = np.cumsum([s.length for s in specs])
    truth = GroundTruth(
        change_points=[int(e) + 1 for e in ends[:-1]],
        total_length=int(ends[-1]),
        seed=seed,
        segments=[s.to_dict() for s in specs],
    )
    return x, truth


# Six segments, lengths summing to 2000, with well separated value ranges so
# every change is a pronounced level shift.  Changes fall at 358, 913, 1313,
# 1618 and 1842.
TABLE1_SEGMENTS = (
    SegmentSpec.gaussian(10.0, 1.0, 357),
    SegmentSpec.uniform(40.0, 46.0, 555),
    SegmentSpec.lognormal(3.0, 0.05, 400),
    SegmentSpec.gaussian(60.0, 1.0, 305),
    SegmentSpec.gaussian(-10.0, 1.0, 224),
    SegmentSpec.uniform(20.0, 26.0, 159),
)


def table1_fixture(seed: int = 0) -> Tuple[np.ndarray, GroundTruth]:
    """The six-segment acceptance series (2000 samples, 5 change points)."""
    return generate_series(TABLE1_SEGMENTS, seed)
