"""Ranking: top-k supervisors for a student query, and supervisor-to-supervisor
peer rankings / all-pairs similarity.

Ordering is deterministic everywhere: higher score first, ties broken by name
ascending (byte-wise), so shuffling the roster never changes a result.
"""

from __future__ import annotations

from dataclasses import dataclass

from .domain import InterestVector, LengthMismatch, QueryProfile, Roster, SupervisorProfile
from .metrics import DEFAULT_METRIC, ConstantVector, Metric, Score, is_constant, perfect_score, score_pair

DEFAULT_K = 5


@dataclass(frozen=True)
class Recommendation:
    name: str
    score: Score
    rank: int


@dataclass(frozen=True)
class PeerMatrix:
    """All-pairs similarity; symmetric, with a perfect-score diagonal."""

    names: tuple[str, ...]
    cells: tuple[tuple[float, ...], ...]
    metric: Metric

    def score_between(self, name_a: str, name_b: str) -> float:
        return self.cells[self.names.index(name_a)][self.names.index(name_b)]


def _as_vector(query: QueryProfile | InterestVector) -> InterestVector:
    return query.vector if isinstance(query, QueryProfile) else query


def _require_rankable(roster: Roster, metric: Metric) -> None:
    # Pearson cannot rank a zero-variance profile; failing the whole request
    # beats silently dropping rows (the caller can pre-filter).
    if metric is Metric.PEARSON:
        for p in roster:
            if is_constant(p.vector):
                raise ConstantVector(p.name)


def _ranked(
    reference: InterestVector,
    candidates: list[SupervisorProfile],
    k: int,
    metric: Metric,
) -> list[Recommendation]:
    scored = [(p.name, score_pair(reference, p.vector, metric)) for p in candidates]
    scored.sort(key=lambda item: (-item[1].value, item[0]))
    top = scored[: min(k, len(scored))]
    return [Recommendation(name, score, rank) for rank, (name, score) in enumerate(top, start=1)]


def recommend(
    query: QueryProfile | InterestVector,
    roster: Roster,
    k: int = DEFAULT_K,
    metric: Metric = DEFAULT_METRIC,
) -> list[Recommendation]:
    """Rank every supervisor against the query and return the best min(k, n).

    Scores carry full double precision; display rounding is the caller's job.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    vector = _as_vector(query)
    if len(vector) != len(roster.schema):
        raise LengthMismatch(len(roster.schema), len(vector))
    if metric is Metric.PEARSON and is_constant(vector):
        raise ConstantVector("query")
    _require_rankable(roster, metric)
    return _ranked(vector, list(roster.profiles), k, metric)


def top_peers(
    roster: Roster,
    name: str,
    k: int = DEFAULT_K,
    metric: Metric = DEFAULT_METRIC,
) -> list[Recommendation]:
    """Rank all other supervisors against the named one (self excluded)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    target = roster.require(name)
    _require_rankable(roster, metric)
    others = [p for p in roster.profiles if p.name != name]
    return _ranked(target.vector, others, k, metric)


def peer_matrix(roster: Roster, metric: Metric = DEFAULT_METRIC) -> PeerMatrix:
    """Score every unordered pair once and mirror it, so symmetry is exact."""
    _require_rankable(roster, metric)
    profiles = roster.profiles
    n = len(profiles)
    diagonal = perfect_score(metric)
    cells = [[diagonal] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            value = score_pair(profiles[i].vector, profiles[j].vector, metric).value
            cells[i][j] = value
            cells[j][i] = value
    return PeerMatrix(
        names=roster.names,
        cells=tuple(tuple(row) for row in cells),
        metric=metric,
    )
