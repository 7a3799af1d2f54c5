"""
Readers and writers for the JSON / JSONL artifacts exchanged by the CLI and the service
"""

from collections.abc import Iterable
from fractions import Fraction
from pathlib import Path
from typing import TypeVar

from loguru import logger as L
from pydantic import BaseModel, ValidationError

from dronesched.exceptions import MalformedRequest
from dronesched.models.intervals import Interval
from dronesched.models.routes import DeliveryRequest, Route
from dronesched.utils.rational import parse_rational

ModelT = TypeVar("ModelT", bound=BaseModel)


def read_jsonl(path: str | Path, model: type[ModelT]) -> list[ModelT]:
    """
    Parses one model per non-blank line.

    Raises:
        MalformedRequest: naming the first offending line
    """
    records: list[ModelT] = []
    with open(path, encoding="utf-8") as handle:
        for number, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                records.append(model.model_validate_json(line))
            except ValidationError as exc:
                raise MalformedRequest(
                    f"{path}:{number}: invalid {model.__name__} record",
                    details=exc.errors(include_url=False, include_context=False),
                ) from exc
    L.debug(f"read {len(records)} {model.__name__} records from {path}")
    return records


def write_jsonl(path: str | Path, records: Iterable[BaseModel]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for record in records:
            handle.write(record.model_dump_json(by_alias=True))
            handle.write("\n")


def read_intervals(path: str | Path) -> list[Interval]:
    return read_jsonl(path, Interval)


def read_requests(path: str | Path) -> list[DeliveryRequest]:
    return read_jsonl(path, DeliveryRequest)


def read_route(path: str | Path) -> Route:
    try:
        return Route.model_validate_json(Path(path).read_text(encoding="utf-8"))
    except ValidationError as exc:
        raise MalformedRequest(
            f"{path}: invalid route", details=exc.errors(include_url=False, include_context=False)
        ) from exc


def read_capacities(path: str | Path) -> list[Fraction]:
    """One capacity per line; blank lines and #-comments are ignored."""
    capacities: list[Fraction] = []
    with open(path, encoding="utf-8") as handle:
        for number, line in enumerate(handle, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            try:
                capacities.append(parse_rational(text))
            except ValueError as exc:
                raise MalformedRequest(f"{path}:{number}: {exc}") from exc
    return capacities


def write_model(path: str | Path, model: BaseModel) -> None:
    """Pretty JSON with a trailing newline; field order is fixed so reruns are byte-identical."""
    Path(path).write_text(model.model_dump_json(indent=2, by_alias=True) + "\n", encoding="utf-8")
