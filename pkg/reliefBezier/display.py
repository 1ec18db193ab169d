# reliefBezier/display.py
from __future__ import annotations
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from .clipping import IntersectionRecord2D
from .config import Colorizer
from .pipeline import IntersectionRecord3D
from .projective import Point3

def fmt(x: float) -> str:
    return format(float(x), ".17g")

def _point(p) -> Optional[List[float]]:
    if p is None:
        return None
    if isinstance(p, Point3):
        return [p.x, p.y, p.z]
    return [float(c) for c in p]

def _tuple(p) -> str:
    return "(" + ", ".join(fmt(c) for c in _point(p)) + ")"

def record3d_to_dict(rec: IntersectionRecord3D) -> Dict[str, Any]:
    return {
        "t": rec.t,
        "u": rec.u,
        "R_s": _point(rec.R_s),
        "R_r": _point(rec.R_r),
        "R": _point(rec.R),
        "residual3d": rec.residual3d,
        "residual_original": rec.residual_original,
        "status": rec.status.value,
    }

def record2d_to_dict(rec: IntersectionRecord2D) -> Dict[str, Any]:
    return {"t": rec.t, "u": rec.u, "point": _point(rec.point), "residual": rec.residual}

@dataclass
class RunReport:
    records: List[Dict[str, Any]] = field(default_factory=list)
    diagnostics: Dict[str, Dict[str, Any]] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        recs = sorted(self.records, key=lambda r: (r.get("t", 0.0), r.get("u", 0.0)))
        return {"records": recs, "diagnostics": self.diagnostics}

def format_record3d(rec: IntersectionRecord3D, colorizer: Optional[Colorizer] = None) -> str:
    role = "accepted" if rec.accepted else "rejected"
    status = rec.status.value.upper()
    if colorizer:
        status = colorizer.paint(status, role)
    line = f"{status:<26} t={fmt(rec.t)} u={fmt(rec.u)} R_s={_tuple(rec.R_s)}"
    if rec.accepted:
        line += f" R={_tuple(rec.R)} residual={rec.residual3d:.3g}"
    else:
        line += f" gap={rec.residual3d:.3g}"
    return line

def format_record2d(rec: IntersectionRecord2D, colorizer: Optional[Colorizer] = None) -> str:
    label = colorizer.paint("ROOT", "planar") if colorizer else "ROOT"
    return f"{label} t={fmt(rec.t)} u={fmt(rec.u)} point={_tuple(rec.point)} residual={rec.residual:.3g}"

def print_records(lines: Sequence[str], out=None):
    out = out or sys.stdout
    if not lines:
        print("(no intersections)", file=out); return
    for i, line in enumerate(lines, start=1):
        print(f"{i:>3}. {line}", file=out)

def print_diagnostics(diagnostics: Dict[str, Dict[str, Any]], colorizer: Optional[Colorizer] = None, out=None):
    out = out or sys.stdout
    for stage in sorted(diagnostics):
        counters = "  ".join(f"{k}={v}" for k, v in sorted(diagnostics[stage].items()))
        name = colorizer.paint(stage, "header") if colorizer else stage
        print(f"  {name}: {counters}", file=out)
