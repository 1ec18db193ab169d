# reliefBezier/bezier.py
"""
Rational Bezier curves in the plane and in space.

Control data is kept as weighted homogeneous rows (P_i * w_i, w_i); every
evaluation runs de Casteljau on those rows and divides once at the end.
"""
from __future__ import annotations

import logging
import math
from typing import Iterable, Tuple, Type, TypeVar

import numpy as np

from .constants import NONRATIONAL_RTOL
from .errors import (DegenerateSplit, DomainError, EmptyInterval,
                     EvaluationSingularity)

log = logging.getLogger(__name__)

# a curve parameter in [0, 1]
Param = float

C = TypeVar("C", bound="RationalCurve")


def check_param(t: float, name: str = "t") -> float:
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"parameter {name}={t} outside [0, 1]")
    return t


def bernstein(n: int, i: int, t: Param) -> float:
    if not 0 <= i <= n:
        raise IndexError(f"Bernstein index {i} outside 0..{n}")
    return math.comb(n, i) * t ** i * (1.0 - t) ** (n - i)


def bernstein_matrix(n: int, ts) -> np.ndarray:
    """Row j holds B_0^n(ts[j]) .. B_n^n(ts[j])."""
    ts = np.asarray(ts, dtype=float)[:, None]
    i = np.arange(n + 1)[None, :]
    binom = np.array([math.comb(n, k) for k in range(n + 1)], dtype=float)[None, :]
    return binom * ts ** i * (1.0 - ts) ** (n - i)


def _de_casteljau(h: np.ndarray, t: float):
    """Return (point, left rows, right rows) of homogeneous rows h at t."""
    pts = h.copy()
    left = [pts[0]]
    right = [pts[-1]]
    for _ in range(len(h) - 1):
        pts = (1.0 - t) * pts[:-1] + t * pts[1:]
        left.append(pts[0])
        right.append(pts[-1])
    return pts[0], np.array(left), np.array(right[::-1])


class RationalCurve:
    """Common machinery for RationalCurve2D / RationalCurve3D."""

    dim = 0

    __slots__ = ("_control", "_weights")

    def __init__(self, control, weights=None):
        ctrl = np.array(control, dtype=float)
        if ctrl.ndim != 2 or ctrl.shape[1] != self.dim:
            raise DomainError(
                f"{type(self).__name__} needs {self.dim}D control points, got shape {ctrl.shape}")
        if len(ctrl) < 2:
            raise DomainError("a curve needs at least two control points")
        w = np.ones(len(ctrl)) if weights is None else np.array(weights, dtype=float)
        if w.shape != (len(ctrl),):
            raise DomainError(f"{len(w)} weights for {len(ctrl)} control points")
        if not (np.all(np.isfinite(ctrl)) and np.all(np.isfinite(w))):
            raise DomainError("control points and weights must be finite")
        if np.any(w == 0.0):
            raise DomainError("weights must be nonzero")
        ctrl.setflags(write=False)
        w.setflags(write=False)
        self._control = ctrl
        self._weights = w

    @classmethod
    def from_homogeneous(cls: Type[C], rows) -> C:
        rows = np.asarray(rows, dtype=float)
        w = rows[:, cls.dim]
        if np.any(w == 0.0):
            raise EvaluationSingularity("homogeneous control row with zero weight")
        return cls(rows[:, :cls.dim] / w[:, None], w)

    @property
    def control(self) -> np.ndarray:
        return self._control

    @property
    def weights(self) -> np.ndarray:
        return self._weights

    @property
    def degree(self) -> int:
        return len(self._control) - 1

    @property
    def positive_weights(self) -> bool:
        return bool(np.all(self._weights > 0.0))

    def homogeneous(self) -> np.ndarray:
        return np.hstack([self._control * self._weights[:, None], self._weights[:, None]])

    def _divide(self, h: np.ndarray) -> np.ndarray:
        scale = float(np.max(np.abs(self._weights)))
        if abs(h[-1]) <= 1e-15 * scale:
            raise EvaluationSingularity(f"rational denominator vanishes ({h[-1]:.3g})")
        return h[:-1] / h[-1]

    def eval(self, t: Param) -> np.ndarray:
        point, _, _ = _de_casteljau(self.homogeneous(), check_param(t))
        return self._divide(point)

    def sample(self, ts) -> np.ndarray:
        """Vectorised evaluation at every parameter in ts."""
        B = bernstein_matrix(self.degree, ts)
        h = B @ self.homogeneous()
        den = h[:, -1]
        if np.any(np.abs(den) <= 1e-15 * float(np.max(np.abs(self._weights)))):
            raise EvaluationSingularity("rational denominator vanishes on the sample grid")
        return h[:, :-1] / den[:, None]

    def derivative(self, t: Param) -> np.ndarray:
        t = check_param(t)
        h = self.homogeneous()
        n = self.degree
        H, _, _ = _de_casteljau(h, t)
        dH, _, _ = _de_casteljau(n * np.diff(h, axis=0), t)
        w, dw = H[-1], dH[-1]
        if w == 0.0:
            raise EvaluationSingularity("rational denominator vanishes")
        return (dH[:-1] * w - H[:-1] * dw) / (w * w)

    def subdivide(self: C, t: Param) -> Tuple[C, C]:
        t = float(t)
        if not 0.0 < t < 1.0:
            raise DegenerateSplit(f"cannot split at t={t}; need 0 < t < 1")
        _, left, right = _de_casteljau(self.homogeneous(), t)
        cls = type(self)
        return cls.from_homogeneous(left), cls.from_homogeneous(right)

    def extract(self: C, t0: Param, t1: Param) -> C:
        t0, t1 = check_param(t0, "t0"), check_param(t1, "t1")
        if t0 >= t1:
            raise EmptyInterval(f"empty parameter interval [{t0}, {t1}]")
        piece = self
        if t1 < 1.0:
            piece = piece.subdivide(t1)[0]
        if t0 > 0.0:
            piece = piece.subdivide(t0 / t1)[1]
        return piece

    def weight_rescale(self: C, lam: float) -> C:
        if not lam > 0.0:
            raise DomainError(f"weight scale must be > 0, got {lam}")
        return type(self)(self._control, self._weights * lam)

    def reverse(self: C) -> C:
        return type(self)(self._control[::-1], self._weights[::-1])

    def __repr__(self):
        return (f"{type(self).__name__}(control={self._control.tolist()}, "
                f"weights={self._weights.tolist()})")


class RationalCurve2D(RationalCurve):
    dim = 2
    __slots__ = ()


class RationalCurve3D(RationalCurve):
    dim = 3
    __slots__ = ()

    @property
    def is_nonrational(self) -> bool:
        w = self._weights
        return bool(np.max(w) - np.min(w) <= NONRATIONAL_RTOL * np.max(np.abs(w)))


def evaluate(curve: RationalCurve, t: Param) -> np.ndarray:
    return curve.eval(t)


def subdivide(curve: C, t: Param) -> Tuple[C, C]:
    return curve.subdivide(t)


def extract(curve: C, t0: Param, t1: Param) -> C:
    return curve.extract(t0, t1)


def weight_rescale(curve: C, lam: float) -> C:
    return curve.weight_rescale(lam)


def bounding_diagonal(curves: Iterable[RationalCurve]) -> float:
    pts = np.vstack([c.control for c in curves])
    return float(np.linalg.norm(pts.max(axis=0) - pts.min(axis=0)))
