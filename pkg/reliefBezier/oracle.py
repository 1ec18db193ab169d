# reliefBezier/oracle.py
"""
Brute-force intersection finder used to check the clipping pipeline.

Samples ||P(t) - Q(u)||^2 on a grid, keeps local minima below a coarse
threshold, refines each with alternating bounded line searches (golden
section with parabolic steps) and a bounded least-squares polish, and
keeps minima whose distance is below tol_point.
It shares no code with clipping.py beyond curve evaluation.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from scipy.optimize import least_squares, minimize_scalar

from .bezier import RationalCurve, bounding_diagonal
from .constants import ORACLE_GRID, ORACLE_TOL_PARAM, TOL_POINT2D_REL
from .errors import DomainError, EvaluationSingularity

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleHit:
    t: float
    u: float
    point: Tuple[float, ...]
    residual: float


def _line_search(f, centre: float, h: float, tol: float) -> float:
    res = minimize_scalar(f, bounds=(max(0.0, centre - h), min(1.0, centre + h)),
                          method="bounded", options={"xatol": tol})
    return float(res.x)


def _refine(P: RationalCurve, Q: RationalCurve, t: float, u: float, h: float, tol: float):
    def dist2(tt, uu):
        diff = P.eval(tt) - Q.eval(uu)
        return float(diff @ diff)

    for _ in range(20):
        t_old, u_old = t, u
        t = _line_search(lambda s: dist2(s, u), t, h, tol)
        u = _line_search(lambda s: dist2(t, s), u, h, tol)
        if abs(t - t_old) < tol and abs(u - u_old) < tol:
            break
        h = max(2.0 * max(abs(t - t_old), abs(u - u_old)), 4.0 * tol)

    # coordinate search is slow along shallow valleys; finish with least squares
    res = least_squares(lambda x: P.eval(x[0]) - Q.eval(x[1]), [t, u],
                        jac=lambda x: np.column_stack([P.derivative(x[0]), -Q.derivative(x[1])]),
                        bounds=([0.0, 0.0], [1.0, 1.0]), xtol=1e-15, ftol=1e-15, gtol=1e-15)
    if dist2(*res.x) > dist2(t, u):
        return t, u
    return float(res.x[0]), float(res.x[1])


def _oracle(P: RationalCurve, Q: RationalCurve, grid: int, tol_point: Optional[float]) -> List[OracleHit]:
    if grid < 64:
        raise DomainError(f"oracle grid must be >= 64, got {grid}")
    if tol_point is None:
        tol_point = TOL_POINT2D_REL * max(bounding_diagonal([P, Q]), 1e-300)
    ts = np.linspace(0.0, 1.0, grid)
    a, b = P.sample(ts), Q.sample(ts)
    D = ((a[:, None, :] - b[None, :, :]) ** 2).sum(axis=2)

    step = max(np.max(np.linalg.norm(np.diff(a, axis=0), axis=1)),
               np.max(np.linalg.norm(np.diff(b, axis=0), axis=1)))
    coarse = (2.0 * step) ** 2

    padded = np.pad(D, 1, constant_values=np.inf)
    is_min = D <= coarse
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di or dj:
                is_min &= D <= padded[1 + di:1 + di + grid, 1 + dj:1 + dj + grid]

    h = 1.0 / (grid - 1)
    hits: List[OracleHit] = []
    for i, j in zip(*np.nonzero(is_min)):
        try:
            t, u = _refine(P, Q, float(ts[i]), float(ts[j]), 2.0 * h, ORACLE_TOL_PARAM)
        except EvaluationSingularity:
            continue
        pt = P.eval(t)
        residual = float(np.linalg.norm(pt - Q.eval(u)))
        if residual > tol_point:
            continue
        if any(abs(t - o.t) < 1e-7 and abs(u - o.u) < 1e-7 for o in hits):
            continue
        hits.append(OracleHit(t, u, tuple(float(c) for c in pt), residual))
    log.debug("oracle: %d candidate minima, %d hit(s)", int(is_min.sum()), len(hits))
    return sorted(hits, key=lambda o: (o.t, o.u))


def oracle_intersect2d(P, Q, grid: int = ORACLE_GRID, tol_point: Optional[float] = None) -> List[OracleHit]:
    return _oracle(P, Q, grid, tol_point)


def oracle_intersect3d(P3, Q3, grid: int = ORACLE_GRID, tol_point: Optional[float] = None) -> List[OracleHit]:
    return _oracle(P3, Q3, grid, tol_point)
