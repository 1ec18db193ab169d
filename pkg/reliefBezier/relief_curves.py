# reliefBezier/relief_curves.py
"""
Curves attached to a planar rational seed by the relief perspective:

    planar P   (x_i, y_i), w_i                    rational, in z = 1
    lifted P~  (x_i w_i, y_i w_i, w_i), 1         nonrational, in space
    spatial Q  W_i, 1 + k - w_i                   rational; phi(Q) = P~
    relief     phi(P~), weights w_i + k

plus whole-curve relief, central projection from O and the inverse
problem (recover k and the seed from a build_Q curve).
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import List, Literal

import numpy as np

from .bezier import RationalCurve2D, RationalCurve3D
from .constants import SPAN_TOL
from .errors import (ControlOnSingularPlane, ControlThroughCenter, DomainError,
                     NotFormEight, WeightOutOfRange)
from .projective import Point3, ReliefMap

log = logging.getLogger(__name__)

Direction = Literal["forward", "inverse"]


@dataclass(frozen=True, eq=False)
class PlanarSeed:
    points: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        w = np.array(self.weights, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 2:
            raise DomainError(f"seed needs at least two planar points, got shape {pts.shape}")
        if w.shape != (len(pts),):
            raise DomainError(f"{len(w)} weights for {len(pts)} seed points")
        if not (np.all(np.isfinite(pts)) and np.all(np.isfinite(w))):
            raise DomainError("seed values must be finite")
        if np.any(w <= 0.0):
            raise DomainError("seed weights must be strictly positive")
        pts.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "weights", w)

    @property
    def degree(self) -> int:
        return len(self.points) - 1


@dataclass(frozen=True)
class SpanDecomposition:
    k: float
    seed: PlanarSeed
    residual: float


@dataclass(frozen=True)
class CurveFamily:
    planar: RationalCurve2D
    lifted: RationalCurve3D
    spatial: RationalCurve3D
    relief: RationalCurve3D


def _relief(k) -> ReliefMap:
    return k if isinstance(k, ReliefMap) else ReliefMap(k)


def planar_curve(seed: PlanarSeed) -> RationalCurve2D:
    return RationalCurve2D(seed.points, seed.weights)


def lift_nonrational(seed: PlanarSeed) -> RationalCurve3D:
    w = seed.weights
    control = np.column_stack([seed.points * w[:, None], w])
    return RationalCurve3D(control, np.ones(len(w)))


def _check_span(seed: PlanarSeed, k: float) -> np.ndarray:
    bad = np.nonzero(seed.weights >= 1.0 + k)[0]
    if bad.size:
        i = int(bad[0])
        raise WeightOutOfRange(
            f"weight w_{i}={seed.weights[i]} must be below 1 + k = {1.0 + k}")
    return 1.0 + k - seed.weights


def build_W(seed: PlanarSeed, k) -> List[Point3]:
    k = _relief(k).k
    omega = _check_span(seed, k)
    w = seed.weights
    s = k * w / omega
    return [Point3(s[i] * x, s[i] * y, s[i]) for i, (x, y) in enumerate(seed.points)]


def build_Q(seed: PlanarSeed, k) -> RationalCurve3D:
    k = _relief(k).k
    omega = _check_span(seed, k)
    W = np.array([p.as_array() for p in build_W(seed, k)])
    return RationalCurve3D(W, omega)


def relief_of_lift(seed: PlanarSeed, k) -> RationalCurve3D:
    """Closed form of phi(lift_nonrational(seed)): weights w_i + k."""
    k = _relief(k).k
    w = seed.weights
    s = (1.0 + k) * w / (w + k)
    control = np.column_stack([seed.points * s[:, None], s])
    return RationalCurve3D(control, w + k)


def curve_family(seed: PlanarSeed, k) -> CurveFamily:
    r = _relief(k)
    return CurveFamily(
        planar=planar_curve(seed),
        lifted=lift_nonrational(seed),
        spatial=build_Q(seed, r),
        relief=relief_of_lift(seed, r),
    )


def apply_relief_to_curve(curve: RationalCurve3D, r, direction: Direction = "forward") -> RationalCurve3D:
    """Map every weighted homogeneous control row through M(k) or its inverse.

    Rows are not rescaled individually; the resulting last column is the
    new weight vector.
    """
    r = _relief(r)
    if direction == "forward":
        m, plane = r.matrix, f"neutral plane z = {r.neutral_plane}"
    elif direction == "inverse":
        m, plane = r.inverse_matrix, f"vanishing plane z = {r.vanishing_plane}"
    else:
        raise DomainError(f"direction must be 'forward' or 'inverse', got {direction!r}")
    rows = curve.homogeneous() @ m.matrix.T
    w = rows[:, 3]
    scale = float(np.max(np.abs(rows)))
    zero = np.nonzero(np.abs(w) <= 1e-15 * scale)[0]
    if zero.size:
        raise ControlOnSingularPlane(f"control point {int(zero[0])} lies on the {plane}")
    return RationalCurve3D(rows[:, :3] / w[:, None], w)


def central_project(curve: RationalCurve3D) -> RationalCurve2D:
    """Project from O onto z = 1: planar control (X/Z, Y/Z), weight Omega*Z."""
    ctrl = curve.control
    Z = ctrl[:, 2]
    zero = np.nonzero(Z == 0.0)[0]
    if zero.size:
        raise ControlThroughCenter(
            f"control point {int(zero[0])} lies in the plane z = 0 through the centre")
    return RationalCurve2D(ctrl[:, :2] / Z[:, None], curve.weights * Z)


def _positive_span_root(omega: float, zw: float) -> float:
    # positive root of k^2 + (1 - omega) k - zw = 0
    if zw <= 0.0:
        return math.nan
    b = 1.0 - omega
    disc = b * b + 4.0 * zw
    if disc < 0.0:
        return math.nan
    sq = math.sqrt(disc)
    if b > 0.0:
        return 2.0 * zw / (b + sq) if b + sq > 0.0 else math.nan
    return 0.5 * (sq - b)


def detect_span(curve: RationalCurve3D, tol: float = SPAN_TOL) -> SpanDecomposition:
    """Recover (k, seed) when curve equals build_Q(seed, k) for some seed.

    Membership is verbatim: a global weight rescale of such a curve
    generally is not one.
    """
    omega = curve.weights
    if np.any(omega <= 0.0):
        raise NotFormEight("build_Q curves have positive weights")
    hom = curve.homogeneous()
    roots = np.array([_positive_span_root(o, zw) for o, zw in zip(omega, hom[:, 2])])
    if not np.all(np.isfinite(roots)) or np.any(roots <= 0.0):
        raise NotFormEight("some control point admits no positive span")
    k = float(np.mean(roots))
    residual = float((roots.max() - roots.min()) / k)
    if residual > tol:
        raise NotFormEight(f"per-control spans disagree (relative spread {residual:.3g} > {tol:.3g})")
    w = 1.0 + k - omega
    if np.any(w <= 0.0) or np.any(w >= 1.0 + k):
        raise NotFormEight(f"recovered weights {w.tolist()} outside (0, 1 + k)")
    pts = hom[:, :2] / (k * w)[:, None]
    log.debug("detected span k=%.17g (spread %.3g)", k, residual)
    return SpanDecomposition(k=k, seed=PlanarSeed(pts, w), residual=residual)
