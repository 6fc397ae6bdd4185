"""Motion documents: one JSON object of expression strings.

::

    {"b": {"re": "0", "uni": "0"},
     "b_prime": {"re": "t", "uni": "0"},
     "phi": "t", "psi": "2*t",
     "t_range": [0, 1.2], "samples": 13,
     "points": [[0.5, -1.0]]}

``t_range``, ``samples`` and ``points`` are optional.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from . import timefun as tf
from .errors import DocumentError, ParseError
from .hypnum import HyperbolicNumber
from .motion import MotionSpec

DEFAULT_RANGE = (0.0, 1.0)
DEFAULT_SAMPLES = 11

_KNOWN_KEYS = {"b", "b_prime", "phi", "psi", "t_range", "samples", "points", "name"}


@dataclass(frozen=True)
class MotionDocument:
    spec: MotionSpec
    t_range: tuple[float, float] = DEFAULT_RANGE
    samples: int = DEFAULT_SAMPLES
    points: tuple[HyperbolicNumber, ...] = field(default_factory=tuple)


def _expr(value, where: str) -> tf.TimeExpr:
    if isinstance(value, bool) or not isinstance(value, (str, int, float)):
        raise DocumentError(f"{where}: expected an expression string")
    try:
        return tf.as_expr(value)
    except ParseError as exc:
        raise DocumentError(f"{where}: {exc}") from exc


def _vector(doc: dict, key: str) -> tuple[tf.TimeExpr, tf.TimeExpr]:
    value = doc.get(key, {"re": "0", "uni": "0"})
    if not isinstance(value, dict) or set(value) - {"re", "uni"}:
        raise DocumentError(f"{key}: expected an object with 're' and 'uni'")
    return _expr(value.get("re", "0"), f"{key}.re"), _expr(value.get("uni", "0"), f"{key}.uni")


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise DocumentError(f"{where}: expected a finite number")
    return float(value)


def from_dict(doc: dict, name: str = "") -> MotionDocument:
    if not isinstance(doc, dict):
        raise DocumentError("motion document must be a JSON object")
    unknown = set(doc) - _KNOWN_KEYS
    if unknown:
        raise DocumentError(f"unknown keys: {', '.join(sorted(unknown))}")
    for key in ("phi", "psi"):
        if key not in doc:
            raise DocumentError(f"missing required key {key!r}")
    b = _vector(doc, "b")
    bp = _vector(doc, "b_prime")
    spec = MotionSpec(*b, *bp, _expr(doc["phi"], "phi"), _expr(doc["psi"], "psi"),
                      name=str(doc.get("name", name)))

    t_range = DEFAULT_RANGE
    if "t_range" in doc:
        tr = doc["t_range"]
        if not isinstance(tr, list) or len(tr) != 2:
            raise DocumentError("t_range: expected [t0, t1]")
        t_range = (_number(tr[0], "t_range[0]"), _number(tr[1], "t_range[1]"))
        if not t_range[0] < t_range[1]:
            raise DocumentError("t_range: t0 must be less than t1")
    samples = doc.get("samples", DEFAULT_SAMPLES)
    if isinstance(samples, bool) or not isinstance(samples, int) or samples < 2:
        raise DocumentError("samples: expected an integer >= 2")
    points = []
    for i, p in enumerate(doc.get("points", [])):
        if not isinstance(p, list) or len(p) != 2:
            raise DocumentError(f"points[{i}]: expected [re, uni]")
        points.append(HyperbolicNumber(_number(p[0], f"points[{i}]"), _number(p[1], f"points[{i}]")))
    return MotionDocument(spec, t_range, samples, tuple(points))


def load(path: str | Path) -> MotionDocument:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON at offset {exc.pos}: {exc.msg}") from exc
    return from_dict(raw, name=path.stem)
