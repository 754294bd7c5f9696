"""Distance and similarity functions over interest vectors.

The default reported score is the percent similarity 100 * (1 / (1 + d)),
where d is the Euclidean distance between the two vectors; the unit-interval
variant 1 / (1 + d) and Pearson correlation are also available. All math is
plain double precision, and ranking always compares unrounded values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .domain import InterestVector, LengthMismatch, MatchError


class BadMetric(MatchError):
    def __init__(self, metric_id: str):
        self.metric_id = metric_id
        known = ", ".join(m.value for m in Metric)
        super().__init__(f"unknown metric {metric_id!r} (choose from: {known})")


class ConstantVector(MatchError):
    """Pearson correlation is undefined for a zero-variance vector.

    ``which`` names the offending side: an argument position ("a"/"b") at the
    metric level, or a supervisor name / "query" once the recommender has
    attached context.
    """

    def __init__(self, which: str):
        self.which = which
        super().__init__(f"constant vector ({which}): correlation is undefined")


class Metric(str, Enum):
    EUCLIDEAN_PERCENT = "euclidean-percent"
    EUCLIDEAN_UNIT = "euclidean-unit"
    PEARSON = "pearson"

    @classmethod
    def from_id(cls, metric_id: str) -> "Metric":
        try:
            return cls(metric_id)
        except ValueError:
            raise BadMetric(metric_id) from None


DEFAULT_METRIC = Metric.EUCLIDEAN_PERCENT

_SCORE_BOUNDS = {
    Metric.EUCLIDEAN_PERCENT: (0.0, 100.0),
    Metric.EUCLIDEAN_UNIT: (0.0, 1.0),
    Metric.PEARSON: (-1.0, 1.0),
}


@dataclass(frozen=True)
class Score:
    """A similarity value tagged with the metric that produced it."""

    value: float
    metric: Metric

    def __post_init__(self) -> None:
        lo, hi = _SCORE_BOUNDS[self.metric]
        if not (lo <= self.value <= hi):
            raise ValueError(f"{self.metric.value} score {self.value!r} outside [{lo}, {hi}]")


def _ratings(vector: InterestVector | Sequence[float]) -> Sequence[float]:
    return vector.ratings if isinstance(vector, InterestVector) else vector


def euclidean_distance(a: InterestVector | Sequence[float], b: InterestVector | Sequence[float]) -> float:
    """Square root of the summed squared per-area differences.

    Symmetric in its arguments and zero exactly when the vectors are equal.
    """
    ra, rb = _ratings(a), _ratings(b)
    if len(ra) != len(rb):
        raise LengthMismatch(len(ra), len(rb))
    total = 0.0
    for x, y in zip(ra, rb):
        diff = x - y
        total += diff * diff
    return math.sqrt(total)


def similarity_unit(distance: float) -> Score:
    """Map a distance to (0, 1]: 1 at zero distance, decreasing toward 0."""
    if not (distance >= 0.0 and math.isfinite(distance)):
        raise ValueError(f"distance must be finite and non-negative, got {distance!r}")
    return Score(1.0 / (1.0 + distance), Metric.EUCLIDEAN_UNIT)


def similarity_percent(distance: float) -> Score:
    # Scaled with the identical operation sequence as the unit score so the
    # two reports never disagree beyond the factor of 100.
    return Score(100.0 * similarity_unit(distance).value, Metric.EUCLIDEAN_PERCENT)


def is_constant(vector: InterestVector | Sequence[float]) -> bool:
    r = _ratings(vector)
    return all(x == r[0] for x in r)


def pearson_similarity(a: InterestVector | Sequence[float], b: InterestVector | Sequence[float]) -> Score:
    """Sample correlation of the paired ratings, clamped to [-1, 1].

    The clamp only absorbs floating-point overshoot past the mathematical
    bounds. Zero-variance input is a hard error: mapping an undefined
    correlation to any number would fabricate an ordering.
    """
    ra, rb = _ratings(a), _ratings(b)
    if len(ra) != len(rb):
        raise LengthMismatch(len(ra), len(rb))
    if is_constant(ra):
        raise ConstantVector("a")
    if is_constant(rb):
        raise ConstantVector("b")
    n = len(ra)
    mean_a = sum(ra) / n
    mean_b = sum(rb) / n
    covariance = 0.0
    var_a = 0.0
    var_b = 0.0
    for x, y in zip(ra, rb):
        dx = x - mean_a
        dy = y - mean_b
        covariance += dx * dy
        var_a += dx * dx
        var_b += dy * dy
    r = covariance / math.sqrt(var_a * var_b)
    return Score(max(-1.0, min(1.0, r)), Metric.PEARSON)


def score_pair(
    a: InterestVector | Sequence[float],
    b: InterestVector | Sequence[float],
    metric: Metric = DEFAULT_METRIC,
) -> Score:
    """Score two vectors under the chosen metric."""
    if metric is Metric.EUCLIDEAN_PERCENT:
        return similarity_percent(euclidean_distance(a, b))
    if metric is Metric.EUCLIDEAN_UNIT:
        return similarity_unit(euclidean_distance(a, b))
    if metric is Metric.PEARSON:
        return pearson_similarity(a, b)
    raise BadMetric(str(metric))


def perfect_score(metric: Metric) -> float:
    """The score a vector earns against itself (Pearson: a non-constant one)."""
    return 100.0 if metric is Metric.EUCLIDEAN_PERCENT else 1.0
