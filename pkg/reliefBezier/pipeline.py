# reliefBezier/pipeline.py
"""
Intersection of two space rational Bezier curves:

    P --phi--> P^r --psi--> P^s \
                                 > clipping -> R^s -> R^r -> R
    Q --phi--> Q^r --psi--> Q^s /

phi is the relief perspective of span k, psi the central projection from
O onto z = 1. A planar root is kept only when its two relief-space
preimages coincide; otherwise it is reported as a projection artifact.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np

from .bezier import RationalCurve3D, bounding_diagonal
from .clipping import ClipOptions, ClipStats, intersect2d
from .constants import (MAX_DEPTH, MIN_REDUCTION, SPAN_TOL, TOL_PARAM,
                        TOL_POINT2D_REL, TOL_POINT3D_REL)
from .errors import (ControlOnSingularPlane, DomainError,
                     NeutralPlaneSingularity, NonPositiveProjectedWeights,
                     NotFormEight)
from .projective import Point3, ReliefMap, relief_inverse
from .relief_curves import apply_relief_to_curve, central_project, detect_span

log = logging.getLogger(__name__)


class Status(str, Enum):
    ACCEPTED = "accepted"
    PROJECTION_ONLY_REJECTED = "projection_only_rejected"


@dataclass(frozen=True)
class IntersectionRecord3D:
    t: float
    u: float
    R_s: Tuple[float, float]
    R_r: Optional[Point3]
    R: Optional[Point3]
    residual3d: float
    residual_original: float
    status: Status

    @property
    def accepted(self) -> bool:
        return self.status is Status.ACCEPTED


@dataclass
class PipelineOptions:
    k: Optional[float] = None
    tol_param: float = TOL_PARAM
    tol_point2d: Optional[float] = None
    tol_point3d: Optional[float] = None
    max_depth: int = MAX_DEPTH
    min_reduction: float = MIN_REDUCTION
    strict_form8: bool = False
    span_tol: float = SPAN_TOL
    rel_point2d: float = TOL_POINT2D_REL
    rel_point3d: float = TOL_POINT3D_REL

    def __post_init__(self):
        if self.k is not None and not self.k > 0.0:
            raise DomainError(f"span k must be > 0, got {self.k}")
        for name in ("tol_param", "tol_point2d", "tol_point3d", "span_tol", "rel_point2d", "rel_point3d"):
            v = getattr(self, name)
            if v is not None and not v > 0.0:
                raise DomainError(f"{name} must be > 0, got {v}")


@dataclass
class PipelineStats:
    clip: ClipStats = field(default_factory=ClipStats)
    planar_roots: int = 0
    accepted: int = 0
    rejected: int = 0

    def as_dict(self) -> Dict[str, Dict[str, int]]:
        return {
            "clipping": self.clip.as_dict(),
            "preimage": {"planar_roots": self.planar_roots,
                         "accepted": self.accepted,
                         "rejected": self.rejected},
        }


def resolve_span(P3: RationalCurve3D, Q3: RationalCurve3D, opts: PipelineOptions) -> float:
    """k from the options, or the common span of two build_Q inputs."""
    if opts.strict_form8:
        spans = [detect_span(c, opts.span_tol).k for c in (P3, Q3)]
        k = opts.k if opts.k is not None else spans[0]
        for s in spans:
            if abs(s - k) > opts.span_tol * k:
                raise NotFormEight(f"curve has span {s:.17g}, expected {k:.17g}")
        return k
    if opts.k is not None:
        return opts.k
    try:
        kp, kq = detect_span(P3, opts.span_tol).k, detect_span(Q3, opts.span_tol).k
    except NotFormEight as e:
        raise DomainError(f"span k must be supplied: {e}") from e
    if abs(kp - kq) > opts.span_tol * max(kp, kq):
        raise DomainError(f"inputs carry different spans ({kp:.17g}, {kq:.17g}); supply k")
    log.debug("span taken from build_Q inputs: k=%.17g", kp)
    return 0.5 * (kp + kq)


def _to_relief(curve: RationalCurve3D, r: ReliefMap, name: str) -> RationalCurve3D:
    try:
        rel = apply_relief_to_curve(curve, r, "forward")
    except ControlOnSingularPlane as e:
        raise NeutralPlaneSingularity(f"{name}: {e}") from e
    w = rel.weights
    if not (np.all(w > 0.0) or np.all(w < 0.0)):
        raise NeutralPlaneSingularity(f"{name} may cross the neutral plane z = {r.neutral_plane}")
    return rel


def _to_plane(relief: RationalCurve3D, name: str):
    projected = relief.control[:, 2] * relief.weights
    if np.any(projected <= 0.0):
        raise NonPositiveProjectedWeights(
            f"{name} has non-positive projected weights {projected.tolist()}; "
            "subdivide the curve or choose a different k")
    return central_project(relief)


def intersect_space(P3: RationalCurve3D, Q3: RationalCurve3D,
                    opts: Optional[PipelineOptions] = None,
                    stats: Optional[PipelineStats] = None) -> List[IntersectionRecord3D]:
    opts = opts or PipelineOptions()
    stats = stats if stats is not None else PipelineStats()
    r = ReliefMap(resolve_span(P3, Q3, opts))

    Pr, Qr = _to_relief(P3, r, "P"), _to_relief(Q3, r, "Q")
    Ps, Qs = _to_plane(Pr, "P"), _to_plane(Qr, "Q")

    tol_relief = opts.tol_point3d or opts.rel_point3d * bounding_diagonal([Pr, Qr])
    # conservative bound on the original-space residual of an accepted root
    bound = 2.0 * tol_relief / r.k * (1.0 + r.k)
    tol2d = opts.tol_point2d or opts.rel_point2d * max(bounding_diagonal([Ps, Qs]), 1e-300)

    clip_opts = ClipOptions(tol_param=opts.tol_param, tol_point=tol2d,
                            max_depth=opts.max_depth, min_reduction=opts.min_reduction)
    planar = intersect2d(Ps, Qs, clip_opts, stats.clip)
    stats.planar_roots += len(planar)

    out: List[IntersectionRecord3D] = []
    for rec in planar:
        p_r, q_r = Pr.eval(rec.t), Qr.eval(rec.u)
        gap = float(np.linalg.norm(p_r - q_r))
        original = float(np.linalg.norm(P3.eval(rec.t) - Q3.eval(rec.u)))
        if gap <= tol_relief:
            R_r = Point3.of(0.5 * (p_r + q_r))
            R = relief_inverse(r, R_r)
            status = Status.ACCEPTED
            stats.accepted += 1
            if original > bound:
                log.warning("accepted root t=%.17g u=%.17g: original points are %.3g apart, "
                            "above %.3g", rec.t, rec.u, original, bound)
        else:
            R_r = R = None
            status = Status.PROJECTION_ONLY_REJECTED
            stats.rejected += 1
        log.debug("planar root t=%.17g u=%.17g: relief gap %.3g -> %s", rec.t, rec.u, gap, status.value)
        out.append(IntersectionRecord3D(rec.t, rec.u, rec.point, R_r, R, gap, original, status))
    return out
