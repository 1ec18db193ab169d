# reliefBezier/svg.py
"""
SVG plots of curves, their reliefs and intersection markers.

Space curves are drawn in one of four parallel views; z is always the
vertical screen axis except in the ``xy`` view. With a span k the relief
of every space curve is overlaid together with the slab boundaries
z = 1 (image plane) and z = 1 + k (vanishing plane).
"""
from __future__ import annotations

import logging
import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from . import constants as K
from .bezier import RationalCurve, RationalCurve3D
from .errors import DomainError
from .projective import ReliefMap
from .relief_curves import apply_relief_to_curve

log = logging.getLogger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"
VIEWS = ("axo", "xz", "yz", "xy")

_AXO = 0.5 * math.cos(math.pi / 4.0)


def view_coords(points: np.ndarray, view: str) -> np.ndarray:
    """World (x, y[, z]) rows to 2D drawing coordinates, vertical axis up."""
    pts = np.asarray(points, dtype=float)
    if pts.shape[1] == 2:
        return pts
    x, y, z = pts[:, 0], pts[:, 1], pts[:, 2]
    if view == "axo":
        return np.column_stack([x + _AXO * y, z + _AXO * y])
    if view == "xz":
        return np.column_stack([x, z])
    if view == "yz":
        return np.column_stack([y, z])
    if view == "xy":
        return np.column_stack([x, y])
    raise DomainError(f"unknown view {view!r}; choose one of {', '.join(VIEWS)}")


@dataclass
class PlotOptions:
    width: int = K.SVG_WIDTH
    height: int = K.SVG_HEIGHT
    margin: float = K.SVG_MARGIN
    samples: int = K.SVG_SAMPLES
    view: str = "axo"
    k: Optional[float] = None
    colors: Dict[str, str] = field(default_factory=dict)

    @classmethod
    def from_config(cls, plot: Dict[str, Any], **overrides) -> "PlotOptions":
        colors = {role: plot[role] for role in ("curve", "relief", "control", "marker", "slab") if role in plot}
        opts = cls(width=int(plot.get("width", K.SVG_WIDTH)),
                   height=int(plot.get("height", K.SVG_HEIGHT)),
                   margin=float(plot.get("margin", K.SVG_MARGIN)),
                   samples=int(plot.get("samples", K.SVG_SAMPLES)),
                   view=str(plot.get("view", "axo")),
                   colors=colors)
        for name, value in overrides.items():
            if value is not None:
                setattr(opts, name, value)
        return opts

    def color(self, role: str) -> str:
        return self.colors.get(role, {
            "curve": "#1f4e9e", "relief": "#c0392b", "control": "#7f8c8d",
            "marker": "#27ae60", "slab": "#bdc3c7",
        }[role])


@dataclass
class _Layer:
    role: str
    name: str
    world: np.ndarray
    dashed: bool = False


def _samples_for(curve: RationalCurve, n: int) -> np.ndarray:
    # a degree-1 rational curve is a straight segment; its endpoints suffice
    if curve.degree == 1:
        return curve.control.copy()
    return curve.sample(np.linspace(0.0, 1.0, n))


def _marker_points(report: Dict[str, Any]) -> List[Sequence[float]]:
    out = []
    for rec in report.get("records", []):
        if rec.get("R") is not None:
            out.append(rec["R"])
        elif rec.get("point") is not None:
            out.append(rec["point"])
    return out


class _Frame:
    """Uniform world-to-screen scaling with a margin and y flipped."""

    def __init__(self, pts: np.ndarray, opts: PlotOptions):
        lo, hi = pts.min(axis=0), pts.max(axis=0)
        span = np.maximum(hi - lo, 0.0)
        inner_w = opts.width * (1.0 - 2.0 * opts.margin)
        inner_h = opts.height * (1.0 - 2.0 * opts.margin)
        scales = [s for s in (inner_w / span[0] if span[0] > 0 else None,
                              inner_h / span[1] if span[1] > 0 else None) if s is not None]
        self.scale = min(scales) if scales else 1.0
        self.center = 0.5 * (lo + hi)
        self.width, self.height = opts.width, opts.height

    def __call__(self, pts: np.ndarray) -> np.ndarray:
        d = (np.asarray(pts, dtype=float) - self.center) * self.scale
        return np.column_stack([0.5 * self.width + d[:, 0], 0.5 * self.height - d[:, 1]])


def _fmt_points(screen: np.ndarray) -> str:
    return " ".join(f"{x:.3f},{y:.3f}" for x, y in screen)


def render_svg(curves: Sequence[RationalCurve], opts: Optional[PlotOptions] = None,
               report: Optional[Dict[str, Any]] = None, names: Optional[Sequence[str]] = None) -> str:
    opts = opts or PlotOptions()
    if not curves:
        raise DomainError("nothing to plot")
    if opts.view not in VIEWS:
        raise DomainError(f"unknown view {opts.view!r}; choose one of {', '.join(VIEWS)}")
    if opts.samples < 2:
        raise DomainError(f"samples must be >= 2, got {opts.samples}")
    names = list(names) if names else [f"curve{i}" for i in range(len(curves))]
    relief = ReliefMap(opts.k) if opts.k is not None else None

    layers: List[_Layer] = []
    for name, curve in zip(names, curves):
        layers.append(_Layer("curve", name, _samples_for(curve, opts.samples)))
        layers.append(_Layer("control", name, curve.control, dashed=True))
        if relief is not None and isinstance(curve, RationalCurve3D):
            rel = apply_relief_to_curve(curve, relief, "forward")
            layers.append(_Layer("relief", name, _samples_for(rel, opts.samples)))
            layers.append(_Layer("control", f"{name}.relief", rel.control, dashed=True))
    markers = np.array([view_coords(np.array([p], dtype=float), opts.view)[0]
                        for p in _marker_points(report or {})]).reshape(-1, 2)

    projected = [view_coords(layer.world, opts.view) for layer in layers]
    everything = np.vstack(projected + [markers])

    space = any(isinstance(c, RationalCurve3D) for c in curves)
    slab_z: List[float] = []
    x_lo, x_hi = everything[:, 0].min(), everything[:, 0].max()
    if relief is not None and space and opts.view != "xy":
        slab_z = [relief.image_plane, relief.vanishing_plane]
        everything = np.vstack([everything, [[x_lo, z] for z in slab_z] + [[x_hi, z] for z in slab_z]])

    frame = _Frame(everything, opts)

    root = ET.Element("svg", {
        "xmlns": SVG_NS,
        "version": "1.1",
        "width": str(opts.width),
        "height": str(opts.height),
        "viewBox": f"0 0 {opts.width} {opts.height}",
        "data-view": opts.view,
    })
    ET.SubElement(root, "rect", {"width": str(opts.width), "height": str(opts.height), "fill": "white"})

    if slab_z:
        for label, z in zip(("image", "vanishing"), slab_z):
            (a, b) = frame(np.array([[x_lo, z], [x_hi, z]]))
            ET.SubElement(root, "line", {
                "x1": f"{a[0]:.3f}", "y1": f"{a[1]:.3f}", "x2": f"{b[0]:.3f}", "y2": f"{b[1]:.3f}",
                "stroke": opts.color("slab"), "stroke-width": "1",
                "data-role": "slab", "data-plane": label, "data-z": repr(float(z)),
            })

    for layer, pts in zip(layers, projected):
        attrs = {
            "points": _fmt_points(frame(pts)),
            "fill": "none",
            "stroke": opts.color(layer.role),
            "stroke-width": "1" if layer.dashed else "2",
            "data-role": layer.role,
            "data-curve": layer.name,
        }
        if layer.dashed:
            attrs["stroke-dasharray"] = "4 3"
        ET.SubElement(root, "polyline", attrs)

    if len(markers):
        for (x, y) in frame(markers):
            ET.SubElement(root, "circle", {
                "cx": f"{x:.3f}", "cy": f"{y:.3f}", "r": "4",
                "fill": opts.color("marker"), "data-role": "marker",
            })

    log.debug("svg: %d layer(s), %d marker(s), view=%s", len(layers), len(markers), opts.view)
    body = ET.tostring(root, encoding="unicode")
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + body + "\n"
