# reliefBezier/curvefile.py
"""
JSON curve files: one object per file,

    {"space": true, "control": [[x, y, z], ...], "weights": [w, ...]}

weights are optional (default all 1). Floats are written with repr(),
which re-parses to the identical double.
"""
from __future__ import annotations

import json
import math
import os
from typing import Any, Dict, Union

from .bezier import RationalCurve2D, RationalCurve3D
from .errors import CurveFileError, ReliefError

Curve = Union[RationalCurve2D, RationalCurve3D]


def _reject_constant(name):
    raise CurveFileError(f"non-finite number {name} in curve file")


def _number(v, where: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise CurveFileError(f"{where}: expected a number, got {v!r}")
    f = float(v)
    if not math.isfinite(f):
        raise CurveFileError(f"{where}: non-finite number {v!r}")
    return f


def parse_curve(obj: Any, source: str = "<curve>") -> Curve:
    if not isinstance(obj, dict):
        raise CurveFileError(f"{source}: top level must be a JSON object")
    space = obj.get("space")
    if not isinstance(space, bool):
        raise CurveFileError(f"{source}: 'space' must be true or false")
    dim = 3 if space else 2
    control = obj.get("control")
    if not isinstance(control, list) or len(control) < 2:
        raise CurveFileError(f"{source}: 'control' must list at least two points")
    pts = []
    for i, p in enumerate(control):
        if not isinstance(p, list) or len(p) != dim:
            raise CurveFileError(f"{source}: control[{i}] must have {dim} coordinates")
        pts.append([_number(c, f"{source}: control[{i}]") for c in p])
    weights = obj.get("weights")
    if weights is not None:
        if not isinstance(weights, list) or len(weights) != len(pts):
            raise CurveFileError(
                f"{source}: 'weights' must list {len(pts)} numbers to match 'control'")
        weights = [_number(w, f"{source}: weights[{i}]") for i, w in enumerate(weights)]
    cls = RationalCurve3D if space else RationalCurve2D
    try:
        return cls(pts, weights)
    except ReliefError as e:
        raise CurveFileError(f"{source}: {e}") from e


def loads_curve(text: str, source: str = "<curve>") -> Curve:
    try:
        obj = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise CurveFileError(f"{source}: invalid JSON ({e})") from e
    return parse_curve(obj, source)


def load_curve(path: str) -> Curve:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise CurveFileError(f"cannot read {path}: {e.strerror}") from e
    return loads_curve(text, path)


def dump_curve(curve: Curve) -> Dict[str, Any]:
    return {
        "space": isinstance(curve, RationalCurve3D),
        "control": curve.control.tolist(),
        "weights": curve.weights.tolist(),
    }


def dumps_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=False) + "\n"


def write_text(text: str, path: str) -> str:
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    return path


def load_report(path: str) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            obj = json.load(f, parse_constant=_reject_constant)
    except OSError as e:
        raise CurveFileError(f"cannot read {path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise CurveFileError(f"{path}: invalid JSON ({e})") from e
    if not isinstance(obj, dict) or not isinstance(obj.get("records"), list):
        raise CurveFileError(f"{path}: not an intersection report")
    return obj
