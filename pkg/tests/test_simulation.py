import math

import numpy as np
import pytest

from entropycpd.entropy import WindowParams
from entropycpd.simulation import (
    RNG_NAME,
    GroundTruth,
    InvalidSpec,
    SegmentSpec,
    generate_series,
    table1_fixture,
)
from entropycpd.sliding import entropy_sequence


@pytest.mark.parametrize(
    "spec",
    [
        SegmentSpec.gaussian(0, 1, 100),
        SegmentSpec.uniform(0, 1, 100),
        SegmentSpec.exponential(2, 100),
        SegmentSpec.lognormal(0, 0.5, 100),
    ],
)
def test_single_segment(spec):
    x, truth = generate_series([spec], 0)
    assert len(x) == 100
    assert truth.change_points == [] and truth.total_length == 100


def test_two_segments():
    _, truth = generate_series([SegmentSpec.gaussian(0, 1, 357), SegmentSpec.gaussian(5, 1, 555)], 1)
    assert truth.change_points == [358]
    assert truth.total_length == 912


def test_six_segments():
    lengths = [357, 555, 400, 305, 224, 159]
    _, truth = generate_series([SegmentSpec.uniform(0, 1, n) for n in lengths], 0)
    assert truth.change_points == [358, 913, 1313, 1618, 1842]
    assert truth.total_length == 2000


def test_metadata_recorded():
    _, truth = generate_series([SegmentSpec.gaussian(0, 1, 10)], 42)
    assert truth.seed == 42 and truth.rng == RNG_NAME
    assert truth.segments == [{"dist": "gaussian", "mean": 0, "stddev": 1, "length": 10}]
    assert GroundTruth.from_dict(truth.to_dict()) == truth


@pytest.mark.parametrize(
    "build",
    [
        lambda: SegmentSpec.gaussian(0, 0, 10),
        lambda: SegmentSpec.uniform(1, 1, 10),
        lambda: SegmentSpec.exponential(-1, 10),
        lambda: SegmentSpec.lognormal(0, 0, 10),
        lambda: SegmentSpec.gaussian(0, 1, 0),
        lambda: SegmentSpec.gaussian(0, 1, 2.5),
        lambda: SegmentSpec("poisson", {"lam": 3}, 10),
        lambda: SegmentSpec("gaussian", {"mean": 0}, 10),
        lambda: SegmentSpec.from_dict({"dist": "gaussian", "mean": 0, "stddev": 1}),
    ],
)
def test_invalid_specs(build):
    with pytest.raises(InvalidSpec):
        build()


def test_empty_specs():
    with pytest.raises(InvalidSpec, match="no segments"):
        generate_series([], 0)


def test_fixture():
    x, truth = table1_fixture(7)
    assert len(x) == truth.total_length == 2000
    assert len(truth.change_points) == 5
    np.testing.assert_array_equal(x, table1_fixture(7)[0])
    assert not np.array_equal(x, table1_fixture(8)[0])
    assert len(entropy_sequence(x, WindowParams(100))) == 1901


def test_truth_consistency():
    specs = [SegmentSpec.gaussian(0, 1, n) for n in (5, 1, 17, 3)]
    _, truth = generate_series(specs, 0)
    cps = truth.change_points
    assert len(cps) == len(specs) - 1
    assert all(b > a for a, b in zip(cps, cps[1:]))
    assert cps[-1] <= truth.total_length
    with pytest.raises(ValueError):
        GroundTruth([5, 5], 10)
    with pytest.raises(ValueError):
        GroundTruth([1], 10)


@pytest.mark.parametrize(
    "spec",
    [
        SegmentSpec.gaussian(-3, 2, 400),
        SegmentSpec.uniform(10, 20, 400),
        SegmentSpec.exponential(0.5, 400),
        SegmentSpec.lognormal(1, 0.3, 400),
    ],
)
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_distribution_sanity(spec, seed):
    x, _ = generate_series([spec], seed)
    se = spec.std / math.sqrt(spec.length)
    assert abs(x.mean() - spec.mean) < 5 * se
