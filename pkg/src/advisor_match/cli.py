"""Command-line front door.

    advisor-match validate  --data roster.csv
    advisor-match recommend --data roster.csv --ratings 5,4.5,1,2.5,3
    advisor-match peers     --data roster.csv --name "Arzami bin Othman"
    advisor-match serve     --data roster.csv --port 8080

--data falls back to the ADVISOR_MATCH_DATA environment variable. Exit status
is 0 only when the command fully succeeded (2 for bad arguments, 1 for data or
runtime failures).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path

from .domain import AreaSchema, DEFAULT_SCHEMA, MatchError, QueryProfile, Roster, UnknownName
from .ingest import load_roster
from .metrics import DEFAULT_METRIC, Metric
from .recommender import DEFAULT_K, Recommendation, recommend, top_peers

DATA_ENV_VAR = "ADVISOR_MATCH_DATA"


def format_score_2dp(value: float) -> str:
    """Round half-up to two decimals for display (44.94897... -> "44.95")."""
    return str(Decimal(repr(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def render_table(results: list[Recommendation]) -> str:
    lines = ["Potential Supervisor  Similarity"]
    lines += [f"{r.name}  {format_score_2dp(r.score.value)}" for r in results]
    return "\n".join(lines)


def render_raw(results: list[Recommendation]) -> str:
    return "\n".join(f"Name:{r.name} Similarity: {r.score.value!r}" for r in results)


def render_json(results: list[Recommendation], metric: Metric) -> str:
    body = {
        "metric": metric.value,
        "results": [{"name": r.name, "score": r.score.value, "rank": r.rank} for r in results],
    }
    return json.dumps(body, ensure_ascii=False, indent=2)


def render(results: list[Recommendation], metric: Metric, fmt: str) -> str:
    if fmt == "table":
        return render_table(results)
    if fmt == "raw":
        return render_raw(results)
    return render_json(results, metric)


def _fail(message: str, code: int = 1) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _resolve_data(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Path:
    data = args.data or os.environ.get(DATA_ENV_VAR)
    if not data:
        parser.error(f"--data is required (or set {DATA_ENV_VAR})")
    return Path(data)


def _schema_from_args(args: argparse.Namespace, parser: argparse.ArgumentParser) -> AreaSchema:
    if args.areas:
        try:
            return AreaSchema(tuple(name.strip() for name in args.areas.split(",")))
        except ValueError as exc:
            parser.error(f"bad --areas: {exc}")
    return DEFAULT_SCHEMA


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _load(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Roster:
    path = _resolve_data(args, parser)
    schema = _schema_from_args(args, parser)
    return load_roster(path, schema)


def _parse_ratings(text: str, schema: AreaSchema) -> QueryProfile:
    try:
        values = [float(field) for field in text.split(",")]
    except ValueError:
        raise MatchError(f"ratings must be comma-separated numbers, got {text!r}") from None
    return QueryProfile.from_ratings(schema, values)


def cmd_validate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        roster = _load(args, parser)
    except (MatchError, OSError) as exc:
        return _fail(str(exc))
    print(f"{len(roster)} profiles, {len(roster.schema)} areas")
    return 0


def cmd_recommend(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        roster = _load(args, parser)
    except (MatchError, OSError) as exc:
        return _fail(str(exc))
    try:
        query = _parse_ratings(args.ratings, roster.schema)
    except MatchError as exc:
        print("hint: pass one rating in [0, 5] per area, e.g. --ratings 5,4.5,1,2.5,3", file=sys.stderr)
        return _fail(str(exc), code=2)
    try:
        results = recommend(query, roster, k=args.k, metric=Metric(args.metric))
    except MatchError as exc:
        return _fail(str(exc))
    print(render(results, Metric(args.metric), args.format))
    return 0


def cmd_peers(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        roster = _load(args, parser)
    except (MatchError, OSError) as exc:
        return _fail(str(exc))
    try:
        results = top_peers(roster, args.name, k=args.k, metric=Metric(args.metric))
    except UnknownName as exc:
        candidates = [n for n in roster.names if n.startswith(args.name)]
        if candidates:
            print(f"hint: did you mean {', '.join(repr(c) for c in candidates)}?", file=sys.stderr)
        return _fail(str(exc))
    except MatchError as exc:
        return _fail(str(exc))
    print(render(results, Metric(args.metric), args.format))
    return 0


def cmd_serve(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    import uvicorn

    from .service import create_app

    try:
        # Validate before binding: a broken file must abort with nothing bound.
        app = create_app(_resolve_data(args, parser), _schema_from_args(args, parser),
                         cors_origins=tuple(o for o in args.cors_origins.split(",") if o))
    except (MatchError, OSError) as exc:
        return _fail(str(exc))
    uvicorn.run(app, host=args.bind, port=args.port, log_level="info")
    return 0


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--data", help=f"roster CSV path (default: ${DATA_ENV_VAR})")
    sub.add_argument("--areas", help="comma-separated area names overriding the default schema")


def _add_ranking_output(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--k", type=_positive_int, default=DEFAULT_K, help="how many results (default 5)")
    sub.add_argument("--metric", choices=[m.value for m in Metric], default=DEFAULT_METRIC.value)
    sub.add_argument("--format", choices=["table", "json", "raw"], default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="advisor-match", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    commands = parser.add_subparsers(dest="command", required=True)

    p_validate = commands.add_parser("validate", help="parse a roster file and report its shape")
    _add_common(p_validate)
    p_validate.set_defaults(func=cmd_validate)

    p_recommend = commands.add_parser("recommend", help="rank supervisors for a student's ratings")
    _add_common(p_recommend)
    p_recommend.add_argument("--ratings", required=True, help="comma-separated ratings, one per area")
    _add_ranking_output(p_recommend)
    p_recommend.set_defaults(func=cmd_recommend)

    p_peers = commands.add_parser("peers", help="rank the supervisors most similar to a named one")
    _add_common(p_peers)
    p_peers.add_argument("--name", required=True, help="supervisor name (exact, case-sensitive)")
    _add_ranking_output(p_peers)
    p_peers.set_defaults(func=cmd_peers)

    p_serve = commands.add_parser("serve", help="run the JSON API service")
    _add_common(p_serve)
    p_serve.add_argument("--bind", default="127.0.0.1", help="address to bind (default 127.0.0.1)")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--cors-origins", default="*",
                         help="comma-separated allowed origins; empty disables CORS")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
