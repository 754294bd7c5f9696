"""Supervisor matching by interest-vector similarity.

Library layers: `domain` (validated value types), `metrics` (distance and
similarity functions), `recommender` (top-k and peer rankings), `ingest`
(strict CSV in/out). The CLI lives in `advisor_match.cli`, the HTTP service
in `advisor_match.service` (imported lazily so the core has no web deps).
"""

from .domain import (
    DEFAULT_AREAS,
    DEFAULT_SCHEMA,
    AreaSchema,
    DuplicateName,
    EmptyRoster,
    InterestVector,
    LengthMismatch,
    MatchError,
    NotFinite,
    OutOfRange,
    QueryProfile,
    Roster,
    SupervisorProfile,
    UnknownName,
    build_roster,
    validate_vector,
)
from .ingest import ParseError, ParseErrorKind, load_roster, parse_roster, serialize_roster
from .metrics import (
    DEFAULT_METRIC,
    BadMetric,
    ConstantVector,
    Metric,
    Score,
    euclidean_distance,
    pearson_similarity,
    score_pair,
    similarity_percent,
    similarity_unit,
)
from .recommender import (
    DEFAULT_K,
    PeerMatrix,
    Recommendation,
    peer_matrix,
    recommend,
    top_peers,
)

__version__ = "0.1.0"

__all__ = [
    "AreaSchema",
    "BadMetric",
    "ConstantVector",
    "DEFAULT_AREAS",
    "DEFAULT_K",
    "DEFAULT_METRIC",
    "DEFAULT_SCHEMA",
    "DuplicateName",
    "EmptyRoster",
    "InterestVector",
    "LengthMismatch",
    "MatchError",
    "Metric",
    "NotFinite",
    "OutOfRange",
    "ParseError",
    "ParseErrorKind",
    "PeerMatrix",
    "QueryProfile",
    "Recommendation",
    "Roster",
    "Score",
    "SupervisorProfile",
    "UnknownName",
    "build_roster",
    "euclidean_distance",
    "load_roster",
    "parse_roster",
    "pearson_similarity",
    "peer_matrix",
    "recommend",
    "score_pair",
    "serialize_roster",
    "similarity_percent",
    "similarity_unit",
    "top_peers",
    "validate_vector",
    "__version__",
]
