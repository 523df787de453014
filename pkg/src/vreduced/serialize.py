"""JSON interchange for graphs, divisors and results.

Integer maps serialize as ``{"v1": 2, ...}``; rational maps as strings in
lowest terms with the sign on the numerator (``"5/2"``, ``"-3"``). Keys
always follow the graph's vertex order, so output is byte-stable.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from fractions import Fraction
from pathlib import Path

from .divisor import Divisor, FiringScript, RDivisor, RFunction, VertexMap
from .errors import MalformedInput
from .graph import Graph, validate


def rational_str(x: Fraction | int) -> str:
    return str(Fraction(x))


def rational_map(f: VertexMap) -> dict[str, str]:
    return {v: rational_str(x) for v, x in f.items()}


def to_json(f: VertexMap) -> dict:
    return f.as_dict() if f.integral else rational_map(f)


def _parse_rational(x) -> Fraction:
    if isinstance(x, bool):
        raise MalformedInput(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError:
            pass
    raise MalformedInput(f"rational values are integers or strings like '5/2', got {x!r}")


def _mapping(raw) -> Mapping:
    if not isinstance(raw, Mapping):
        raise MalformedInput("expected a JSON object keyed by vertex id")
    return raw


def load_divisor(g: Graph, raw) -> Divisor:
    return Divisor(g, _mapping(raw))


def load_script(g: Graph, raw) -> FiringScript:
    return FiringScript(g, _mapping(raw))


def load_rdivisor(g: Graph, raw) -> RDivisor:
    raw = _mapping(raw)
    return RDivisor(g, {k: _parse_rational(v) for k, v in raw.items()})


def load_rfunction(g: Graph, raw) -> RFunction:
    raw = _mapping(raw)
    return RFunction(g, {k: _parse_rational(v) for k, v in raw.items()})


def read_json(path: str | Path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: invalid JSON ({exc})") from None


def read_graph(path: str | Path) -> Graph:
    return validate(read_json(path))


def dumps(obj, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2, ensure_ascii=False)
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)
