# reliefBezier/clipping.py
"""
Planar rational curve/curve intersection by Bezier clipping.

Each round clips the parameter range of one curve against the fat line of
the other, then swaps roles. A round that removes less than
min_reduction of both ranges splits the longer one in half instead.
A range already narrower than tol_param is left alone, and the slack
added around a clipped range is measured in global parameter units.

Rational curves are handled by clipping two polynomial explicit curves,
e-_i = (d_i - d_min) w_i and e+_i = (d_max - d_i) w_i, whose signs agree
with d(t) - d_min and d_max - d(t) because the denominator is positive.
"""
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field, replace
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import least_squares

from .bezier import RationalCurve2D, bounding_diagonal
from .constants import (BAND_EPS, CLIP_SLACK, MAX_DEPTH, MERGE_FACTOR, MIN_REDUCTION,
                        POLISH_NFEV, TANGENT_SINE, TOL_PARAM, TOL_POINT2D_REL)
from .errors import (DegenerateCurve, DegenerateSplit, DomainError, EmptyInterval,
                     UnresolvedRegion)

log = logging.getLogger(__name__)

Interval = Tuple[float, float]

# clip rounds spent on one box before it is split regardless of progress
_MAX_ROUNDS = 200


@dataclass(frozen=True, eq=False)
class FatLine:
    """Band {p : d_min <= normal . p - offset <= d_max}."""
    normal: np.ndarray
    offset: float
    d_min: float
    d_max: float

    def distance(self, points) -> np.ndarray:
        return np.asarray(points, dtype=float) @ self.normal - self.offset


@dataclass(frozen=True, eq=False)
class ExplicitBezier:
    """Graph of a polynomial Bezier function, control abscissae i/n."""
    coefficients: np.ndarray
    abscissae: np.ndarray = field(init=False)

    def __post_init__(self):
        c = np.array(self.coefficients, dtype=float)
        if c.ndim != 1 or len(c) < 2:
            raise DomainError("explicit Bezier needs at least two coefficients")
        n = len(c) - 1
        object.__setattr__(self, "coefficients", c)
        object.__setattr__(self, "abscissae", np.arange(n + 1) / n)


@dataclass(frozen=True)
class IntersectionRecord2D:
    t: float
    u: float
    point: Tuple[float, float]
    residual: float


@dataclass
class ClipOptions:
    tol_param: float = TOL_PARAM
    tol_point: Optional[float] = None      # default: TOL_POINT2D_REL * box diagonal
    max_depth: int = MAX_DEPTH
    min_reduction: float = MIN_REDUCTION

    def __post_init__(self):
        if not self.tol_param > 0.0:
            raise DomainError(f"tol_param must be > 0, got {self.tol_param}")
        if self.tol_point is not None and not self.tol_point > 0.0:
            raise DomainError(f"tol_point must be > 0, got {self.tol_point}")
        if self.max_depth < 0:
            raise DomainError(f"max_depth must be >= 0, got {self.max_depth}")
        if not 0.0 < self.min_reduction < 1.0:
            raise DomainError(f"min_reduction must lie in (0, 1), got {self.min_reduction}")


@dataclass
class ClipStats:
    clip_iterations: int = 0
    subdivisions: int = 0
    dropped: int = 0
    merged: int = 0

    def as_dict(self) -> Dict[str, int]:
        return asdict(self)


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _chain(points, keep) -> List:
    out: List = []
    for p in points:
        while len(out) >= 2 and not keep(_cross(out[-2], out[-1], p)):
            out.pop()
        out.append(p)
    return out


def upper_hull(points) -> List[Tuple[float, float]]:
    """Upper hull of points already sorted by x, left to right."""
    return _chain([(float(x), float(y)) for x, y in points], lambda c: c < 0)


def convex_hull(points) -> np.ndarray:
    """Counter-clockwise hull vertices (Andrew's monotone chain)."""
    pts = np.asarray(points, dtype=float)
    pts = pts[np.lexsort((pts[:, 1], pts[:, 0]))]
    pts = np.unique(pts, axis=0)
    if len(pts) < 3:
        return pts
    rows = [tuple(p) for p in pts]
    lower = _chain(rows, lambda c: c > 0)
    upper = upper_hull(rows)[::-1]
    return np.array(lower[:-1] + upper[:-1])


def fat_line(curve: RationalCurve2D) -> FatLine:
    ctrl = curve.control
    p0 = ctrl[0]
    chord = ctrl[-1] - p0
    length = float(np.hypot(*chord))
    scale = max(1.0, float(np.max(np.abs(ctrl))))
    if length <= 1e-15 * scale:
        # closed control polygon: aim at the farthest control point
        far = np.hypot(*(ctrl - p0).T)
        i = int(np.argmax(far))
        if far[i] <= 1e-15 * scale:
            raise DegenerateCurve("all control points coincide")
        chord, length = ctrl[i] - p0, float(far[i])
    normal = np.array([-chord[1], chord[0]]) / length
    offset = float(normal @ p0)
    d = ctrl @ normal - offset
    return FatLine(normal, offset, min(0.0, float(d.min())), max(0.0, float(d.max())))


def _point_line(point, direction) -> FatLine:
    # zero-width band through a collapsed curve, across the other curve's chord
    length = float(np.hypot(*direction))
    normal = np.array([1.0, 0.0]) if length == 0.0 else np.asarray(direction) / length
    return FatLine(normal, float(normal @ point), 0.0, 0.0)


def distance_coefficients(curve: RationalCurve2D, line: FatLine) -> Tuple[ExplicitBezier, ExplicitBezier]:
    d = line.distance(curve.control)
    w = curve.weights
    return ExplicitBezier((d - line.d_min) * w), ExplicitBezier((line.d_max - d) * w)


def clip_interval(e: ExplicitBezier) -> Optional[Interval]:
    """Range of t where the upper hull of (i/n, e_i) is >= 0, or None."""
    upper = upper_hull(zip(e.abscissae, e.coefficients))
    xs = [p[0] for p in upper]
    ys = [p[1] for p in upper]
    if max(ys) < 0.0:
        return None

    def crossing(j: int) -> float:
        return xs[j] + (xs[j + 1] - xs[j]) * (-ys[j]) / (ys[j + 1] - ys[j])

    lo, hi = xs[0], xs[-1]
    if ys[0] < 0.0:
        j = 0
        while ys[j + 1] < 0.0:
            j += 1
        lo = crossing(j)
    if ys[-1] < 0.0:
        j = len(ys) - 2
        while ys[j] < 0.0:
            j -= 1
        hi = crossing(j)
    return float(lo), float(hi)


def _coordinate_scale(*curves: RationalCurve2D) -> float:
    return max(float(np.max(np.abs(c.control))) for c in curves)


def _clip(curve: RationalCurve2D, line: FatLine) -> Optional[Interval]:
    # signed distances carry rounding of order eps * coordinates; a curve
    # touching the band must not fall out of it
    eps = BAND_EPS * max(_coordinate_scale(curve), abs(line.offset), 1e-300)
    lower, upper = distance_coefficients(curve, replace(line, d_min=line.d_min - eps, d_max=line.d_max + eps))
    a = clip_interval(lower)
    b = clip_interval(upper)
    if a is None or b is None:
        return None
    lo, hi = max(a[0], b[0]), min(a[1], b[1])
    if lo > hi:
        return None
    return lo, hi


def _fat_line_for(curve: RationalCurve2D, other: RationalCurve2D) -> FatLine:
    try:
        return fat_line(curve)
    except DegenerateCurve:
        return _point_line(curve.control[0], other.control[-1] - other.control[0])


def _apart(p: RationalCurve2D, q: RationalCurve2D) -> bool:
    """Control boxes are disjoint, so the curve pieces are."""
    eps = BAND_EPS * max(_coordinate_scale(p, q), 1e-300)
    cp, cq = p.control, q.control
    return bool(np.any(cp.min(axis=0) > cq.max(axis=0) + eps)
                or np.any(cq.min(axis=0) > cp.max(axis=0) + eps))


def _narrow(curve, a0: float, a1: float, ab: Interval):
    """Restrict a piece on [a0, a1] to its local range ab, padded in global units."""
    lo, hi = ab
    span = a1 - a0
    pad = max(CLIP_SLACK * span, 4.0 * float(np.spacing(max(abs(a0), abs(a1), 1.0))))
    b0 = max(a0, a0 + lo * span - pad)
    b1 = min(a1, a0 + hi * span + pad)
    if b0 <= a0 and b1 >= a1:
        return curve, a0, a1
    try:
        piece = curve.extract((b0 - a0) / span, min(1.0, (b1 - a0) / span))
    except (DegenerateSplit, EmptyInterval):
        return curve, a0, a1
    return piece, b0, b1


def crossing_sine(P: RationalCurve2D, Q: RationalCurve2D, t: float, u: float) -> float:
    """|sin| of the angle between the tangents P'(t) and Q'(u); 0 at a cusp."""
    dp, dq = P.derivative(t), Q.derivative(u)
    norm = float(np.linalg.norm(dp) * np.linalg.norm(dq))
    if norm == 0.0:
        return 0.0
    return abs(float(dp[0] * dq[1] - dp[1] * dq[0])) / norm


def _polish(P, Q, t: float, u: float, box) -> Tuple[float, float]:
    """Bounded least squares on P(t) - Q(u) inside the converged box."""
    (t0, t1), (u0, u1) = box
    if not (t0 < t1 and u0 < u1):
        return t, u

    def gap(x):
        return P.eval(x[0]) - Q.eval(x[1])

    def jac(x):
        return np.column_stack([P.derivative(x[0]), -Q.derivative(x[1])])

    start = float(np.linalg.norm(gap((t, u))))
    res = least_squares(gap, [t, u], jac=jac, bounds=([t0, u0], [t1, u1]),
                        xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=POLISH_NFEV)
    if float(np.linalg.norm(res.fun)) > start:
        return t, u
    return float(res.x[0]), float(res.x[1])


def _merge(records: List[IntersectionRecord2D], radius: float, stats: ClipStats) -> List[IntersectionRecord2D]:
    kept: List[IntersectionRecord2D] = []
    for rec in sorted(records, key=lambda r: (r.t, r.u)):
        for i, other in enumerate(kept):
            if abs(rec.t - other.t) < radius and abs(rec.u - other.u) < radius:
                stats.merged += 1
                if rec.residual < other.residual:
                    kept[i] = rec
                break
        else:
            kept.append(rec)
    return sorted(kept, key=lambda r: (r.t, r.u))


def intersect2d(P: RationalCurve2D, Q: RationalCurve2D,
                opts: Optional[ClipOptions] = None,
                stats: Optional[ClipStats] = None) -> List[IntersectionRecord2D]:
    """All transversal intersections of P and Q, sorted by (t, u).

    Raises UnresolvedRegion when some box is still open at max_depth or
    closes on a tangential crossing.
    """
    opts = opts or ClipOptions()
    stats = stats if stats is not None else ClipStats()
    if not (P.positive_weights and Q.positive_weights):
        raise DomainError("Bezier clipping needs positive weights on both curves")
    tol = opts.tol_param
    tol_point = opts.tol_point
    if tol_point is None:
        tol_point = TOL_POINT2D_REL * max(bounding_diagonal([P, Q]), 1e-300)
    keep = 1.0 - opts.min_reduction

    converged: List[Tuple[float, float, tuple]] = []
    unresolved = []
    stack = [(P, 0.0, 1.0, Q, 0.0, 1.0, 0)]
    while stack:
        p, pa, pb, q, qa, qb, depth = stack.pop()
        rounds = 0
        while True:
            if _apart(p, q):
                break
            if pb - pa <= tol and qb - qa <= tol:
                t, u = 0.5 * (pa + pb), 0.5 * (qa + qb)
                if crossing_sine(P, Q, t, u) < TANGENT_SINE:
                    log.debug("tangential box t=[%.17g, %.17g] u=[%.17g, %.17g]", pa, pb, qa, qb)
                    unresolved.append(((pa, pb), (qa, qb)))
                    stack.clear()
                else:
                    converged.append((t, u, ((pa, pb), (qa, qb))))
                break
            stats.clip_iterations += 1
            rounds += 1
            old_p, old_q = pb - pa, qb - qa
            # a curve already inside tol_param is not narrowed further
            if old_p > tol:
                ab = _clip(p, _fat_line_for(q, p))
                if ab is None:
                    break
                p, pa, pb = _narrow(p, pa, pb, ab)
            if old_q > tol:
                ab = _clip(q, _fat_line_for(p, q))
                if ab is None:
                    break
                q, qa, qb = _narrow(q, qa, qb, ab)
            stalled = (pb - pa) > keep * old_p and (qb - qa) > keep * old_q
            if not stalled and rounds < _MAX_ROUNDS:
                continue
            if depth >= opts.max_depth:
                # overlapping curves never shed boxes; stop at the first one
                log.debug("unresolved box t=[%.17g, %.17g] u=[%.17g, %.17g]", pa, pb, qa, qb)
                unresolved.append(((pa, pb), (qa, qb)))
                stack.clear()
                break
            stats.subdivisions += 1
            if pb - pa >= qb - qa:
                left, right = p.subdivide(0.5)
                pm = 0.5 * (pa + pb)
                stack.append((right, pm, pb, q, qa, qb, depth + 1))
                stack.append((left, pa, pm, q, qa, qb, depth + 1))
            else:
                left, right = q.subdivide(0.5)
                qm = 0.5 * (qa + qb)
                stack.append((p, pa, pb, right, qm, qb, depth + 1))
                stack.append((p, pa, pb, left, qa, qm, depth + 1))
            break

    records = []
    for t, u, box in converged:
        t, u = _polish(P, Q, t, u, box)
        point = P.eval(t)
        residual = float(np.linalg.norm(point - Q.eval(u)))
        if residual > tol_point:
            log.warning("dropping root t=%.17g u=%.17g: residual %.3g > %.3g", t, u, residual, tol_point)
            stats.dropped += 1
            continue
        records.append(IntersectionRecord2D(float(t), float(u), (float(point[0]), float(point[1])), residual))
    records = _merge(records, MERGE_FACTOR * tol, stats)
    log.debug("intersect2d: %d root(s), %d clip round(s), %d subdivision(s)",
              len(records), stats.clip_iterations, stats.subdivisions)
    if unresolved:
        raise UnresolvedRegion(unresolved, records)
    return records
