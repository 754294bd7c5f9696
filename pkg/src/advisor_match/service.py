"""JSON-over-HTTP facade: the same ranking the library gives, served to the
browser UI and programmatic clients.

Every request is answered from one immutable roster snapshot; POST /api/reload
re-reads the data file and swaps the snapshot atomically, so concurrent readers
see the old roster or the new one, never a mixture. Scores travel as
full-precision JSON numbers; rounding for display is the client's job.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .domain import AreaSchema, DEFAULT_SCHEMA, MatchError, QueryProfile, Roster, UnknownName
from .ingest import ParseError, load_roster, serialize_roster
from .metrics import DEFAULT_METRIC, Metric
from .recommender import DEFAULT_K, Recommendation, recommend, top_peers


@dataclass(frozen=True)
class RosterSnapshot:
    roster: Roster
    version: str


_snapshot_sequence = itertools.count(1)


def make_snapshot(roster: Roster) -> RosterSnapshot:
    """Version token = load sequence + content digest.

    The sequence makes every successful reload observable (fresh token even
    for identical content); the digest ties the token to the roster bytes.
    """
    digest = hashlib.sha256(serialize_roster(roster).encode("utf-8")).hexdigest()[:12]
    return RosterSnapshot(roster, f"{next(_snapshot_sequence)}-{digest}")


def _error(status: int, code: str, message: str, line_number: int | None = None) -> JSONResponse:
    body: dict = {"code": code, "message": message}
    if line_number is not None:
        body["line_number"] = line_number
    return JSONResponse(status_code=status, content=body)


def _results_body(results: list[Recommendation], metric: Metric, version: str) -> dict:
    return {
        "results": [{"name": r.name, "score": r.score.value, "rank": r.rank} for r in results],
        "metric": metric.value,
        "roster_version": version,
    }


def _parse_k(raw: object) -> int:
    # bool is an int subclass; reject it explicitly.
    if not isinstance(raw, int) or isinstance(raw, bool):
        raise ValueError("k must be an integer")
    if raw < 1:
        raise ValueError("k must be >= 1")
    return raw


def _parse_ratings(raw: object) -> list[float]:
    if not isinstance(raw, list):
        raise ValueError("ratings must be a list of numbers")
    values: list[float] = []
    for item in raw:
        if isinstance(item, bool) or not isinstance(item, (int, float)):
            raise ValueError("ratings must be a list of numbers")
        values.append(float(item))
    return values


def create_app(
    data_path: str | Path,
    schema: AreaSchema = DEFAULT_SCHEMA,
    cors_origins: Sequence[str] = ("*",),
) -> FastAPI:
    """Load the roster (parse failures abort startup) and build the app."""
    data_path = Path(data_path)
    app = FastAPI(title="advisor-match", docs_url=None, redoc_url=None)
    if cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(cors_origins),
            allow_methods=["GET", "POST"],
            allow_headers=["*"],
        )
    app.state.schema = schema
    app.state.data_path = data_path
    app.state.snapshot = make_snapshot(load_roster(data_path, schema))

    @app.exception_handler(RequestValidationError)
    async def handle_validation(request: Request, exc: RequestValidationError) -> JSONResponse:
        # The API speaks 400 for every client mistake; never 422.
        return _error(400, "BadRequest", str(exc))

    @app.get("/api/health")
    async def health() -> dict:
        return {"status": "ok", "roster_version": app.state.snapshot.version}

    @app.get("/api/areas")
    async def areas() -> dict:
        snapshot: RosterSnapshot = app.state.snapshot
        return {"areas": list(snapshot.roster.schema.areas), "roster_version": snapshot.version}

    @app.get("/api/supervisors")
    async def supervisors() -> dict:
        snapshot: RosterSnapshot = app.state.snapshot
        return {
            "supervisors": [
                {"name": p.name, "ratings": list(p.vector.ratings)} for p in snapshot.roster
            ],
            "roster_version": snapshot.version,
        }

    @app.post("/api/recommend")
    async def post_recommend(request: Request) -> JSONResponse:
        snapshot: RosterSnapshot = app.state.snapshot
        try:
            payload = await request.json()
        except Exception:
            return _error(400, "BadRequest", "body must be a JSON object")
        if not isinstance(payload, dict):
            return _error(400, "BadRequest", "body must be a JSON object")
        try:
            ratings = _parse_ratings(payload.get("ratings"))
            k = _parse_k(payload.get("k", DEFAULT_K))
        except ValueError as exc:
            return _error(400, "BadRequest", str(exc))
        try:
            metric = Metric.from_id(payload.get("metric", DEFAULT_METRIC.value))
            query = QueryProfile.from_ratings(snapshot.roster.schema, ratings)
            results = recommend(query, snapshot.roster, k=k, metric=metric)
        except MatchError as exc:
            return _error(400, exc.code, str(exc))
        return JSONResponse(_results_body(results, metric, snapshot.version))

    @app.get("/api/peers/{name}")
    async def get_peers(name: str, k: str | None = None, metric: str | None = None) -> JSONResponse:
        snapshot: RosterSnapshot = app.state.snapshot
        try:
            k_value = DEFAULT_K if k is None else _parse_k(int(k))
        except ValueError:
            return _error(400, "BadRequest", f"k must be a positive integer, got {k!r}")
        try:
            metric_value = DEFAULT_METRIC if metric is None else Metric.from_id(metric)
            results = top_peers(snapshot.roster, name, k=k_value, metric=metric_value)
        except UnknownName as exc:
            return _error(404, exc.code, str(exc))
        except MatchError as exc:
            return _error(400, exc.code, str(exc))
        return JSONResponse(_results_body(results, metric_value, snapshot.version))

    @app.post("/api/reload")
    async def post_reload() -> JSONResponse:
        try:
            roster = load_roster(app.state.data_path, app.state.schema)
        except ParseError as exc:
            # Old snapshot keeps serving.
            return _error(409, "ParseError", str(exc), line_number=exc.line_number)
        snapshot = make_snapshot(roster)
        app.state.snapshot = snapshot
        return JSONResponse({"roster_version": snapshot.version})

    return app
