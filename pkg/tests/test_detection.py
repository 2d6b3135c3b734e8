import numpy as np
import pytest

from entropycpd.detection import (
    DetectionEvent,
    DetectorParams,
    OutOfRange,
    SequenceTooShort,
    change_points,
    detect_fluctuations,
    local_extremum,
)
from entropycpd.entropy import WindowParams
from entropycpd.simulation import table1_fixture
from entropycpd.sliding import EntropySequence, entropy_sequence


def seq(values, offset=100):
    return EntropySequence(offset=offset, values=np.asarray(values, dtype=float))


def test_local_extremum_constant():
    h = seq(np.zeros(300))
    assert local_extremum(h, 250, 100) == 0.0
    assert local_extremum(h, 100, 10) == 0.0


def test_local_extremum_spike():
    v = np.full(300, 0.1)
    v[150] = 0.9
    assert local_extremum(seq(v), 250, 100) == 0.9


def test_local_extremum_brute_force(rng):
    v = rng.random(200)
    h = seq(v, offset=50)
    t, d = 150, 10
    expect = max(v[i] for i in range(200) if t - d <= 50 + i <= t + d)
    assert local_extremum(h, t, d) == expect
    # clipped at the start of coverage
    assert local_extremum(h, 45, 10) == max(v[:6])


def test_local_extremum_out_of_range():
    with pytest.raises(OutOfRange):
        local_extremum(seq(np.zeros(10), offset=100), 50, 10)


def test_constant_sequence_no_events():
    assert detect_fluctuations(seq(np.full(1000, 0.7)), DetectorParams(100)) == []


def test_step_block_is_one_peak():
    v = np.full(1000, 0.5)
    h = seq(v)
    v[500 - 100:590 - 100 + 1] = 0.95
    events = detect_fluctuations(h, DetectorParams(100))
    assert len(events) == 1
    ev = events[0]
    assert (ev.onset, ev.duration, ev.polarity) == (500, 91, "peak")
    assert ev.magnitude == pytest.approx(0.45)
    assert ev.extremum_value == 0.95


def test_valley_polarity():
    v = np.full(1000, 0.8)
    v[500:540] = 0.2
    (ev,) = detect_fluctuations(seq(v), DetectorParams(100))
    assert ev.polarity == "valley" and ev.onset == 600 and ev.duration == 40


def test_short_runs_ignored():
    v = np.full(1000, 0.5)
    v[400:402] = 0.95
    assert detect_fluctuations(seq(v), DetectorParams(100, min_run=3)) == []
    assert len(detect_fluctuations(seq(v), DetectorParams(100, min_run=2))) == 1


def test_close_events_merge():
    v = np.full(1000, 0.5)
    v[400:420] = 0.95
    v[450:470] = 0.05
    (ev,) = detect_fluctuations(seq(v), DetectorParams(100))
    assert ev.onset == 500 and ev.duration == 70
    far = detect_fluctuations(seq(v), DetectorParams(100, merge_gap=10))
    assert [e.onset for e in far] == [500, 550]


def test_persistent_shift_is_capped_and_adopted():
    v = np.full(1200, 0.5)
    v[500:] = 0.95
    events = detect_fluctuations(seq(v), DetectorParams(100))
    assert len(events) == 1
    assert events[0].onset == 600 and events[0].duration == 100


def test_sequence_too_short():
    with pytest.raises(SequenceTooShort):
        detect_fluctuations(seq(np.zeros(202)), DetectorParams(100))
    detect_fluctuations(seq(np.zeros(203)), DetectorParams(100))


def test_params_validation():
    p = DetectorParams(50)
    assert p.baseline_span == 100 and p.merge_gap == 50
    for bad in (dict(lam=0), dict(min_run=0), dict(baseline_span=10), dict(merge_gap=0)):
        with pytest.raises(ValueError):
            DetectorParams(50, **bad)


def test_change_points():
    assert change_points([]) == []
    ev = DetectionEvent(onset=359, duration=98, polarity="valley", magnitude=0.5, extremum_value=0.9, argmax=380)
    assert change_points([ev]) == [359]
    evs = [ev.__class__(**{**ev.to_dict(), "onset": o}) for o in (359, 914, 1316, 1619, 1843)]
    assert change_points(evs) == [359, 914, 1316, 1619, 1843]


def _fixture_events(seed):
    x, truth = table1_fixture(seed)
    h = entropy_sequence(x, WindowParams(100))
    return h, detect_fluctuations(h, DetectorParams(100)), truth


def test_fixture_five_events_near_truth():
    h, events, truth = _fixture_events(0)
    assert len(events) == 5
    for ev, cp in zip(events, truth.change_points):
        assert abs(ev.onset - cp) <= 5


@pytest.mark.parametrize("seed", range(5))
def test_event_invariants(seed):
    h, events, _ = _fixture_events(seed)
    cps = change_points(events)
    assert all(b > a for a, b in zip(cps, cps[1:]))
    assert all(c >= 100 for c in cps)
    for ev in events:
        assert ev.duration >= 3
        assert 0.0 <= ev.extremum_value <= 1.0
        assert ev.extremum_value == local_extremum(h, ev.argmax, 100)
        # disjoint value ranges on both sides of every fixture change
        assert ev.duration <= 100 + 3


def test_determinism():
    h, a, _ = _fixture_events(3)
    assert detect_fluctuations(h, DetectorParams(100)) == a


def test_null_stability():
    spurious = 0
    for seed in range(20):
        x = np.random.default_rng(seed).standard_normal(2000)
        h = entropy_sequence(x, WindowParams(100))
        spurious += len(detect_fluctuations(h, DetectorParams(100)))
    assert spurious / 20 <= 1.0
