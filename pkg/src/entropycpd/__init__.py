"""Change-point detection from sliding-window normalized entropy."""
from .detection import (
    DetectionEvent,
    DetectorParams,
    OutOfRange,
    SequenceTooShort,
    change_points,
    detect_fluctuations,
    local_extremum,
)
from .entropy import (
    DegenerateRange,
    Histogram,
    WindowParams,
    bin_edges,
    default_bin_count,
    histogram,
    max_entropy,
    normalized_entropy,
    probabilities,
    shannon_entropy,
)
from .evaluation import EvaluationReport, ReportRow, match_and_score, mean_deviation_percent, render_table
from .simulation import GroundTruth, InvalidSpec, SegmentSpec, TABLE1_SEGMENTS, generate_series, table1_fixture
from .sliding import EntropySequence, SeriesTooShort, entropy_sequence, entropy_sequence_naive

__version__ = "0.1.0"
