# reliefBezier/projective.py
"""
Homogeneous points, projective maps of extended 3-space and the relief
perspective with centre O = (0, 0, 0) and image plane z = 1.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from .constants import DET_RTOL, HPOINT_RTOL, PLANE_ATOL
from .errors import (DomainError, InvalidMap, NeutralPlaneSingularity,
                     VanishingPlaneSingularity)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Point3:
    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise DomainError(f"Point3.{name} must be finite, got {v}")
            object.__setattr__(self, name, v)

    @classmethod
    def of(cls, xyz: Sequence[float]) -> "Point3":
        x, y, z = xyz
        return cls(x, y, z)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    def homogeneous(self) -> "HPoint3":
        return HPoint3(self.x, self.y, self.z, 1.0)


@dataclass(frozen=True, eq=False)
class HPoint3:
    """Homogeneous point (X, Y, Z, W). W = 0 is an ideal point.

    Equality is up to a nonzero scale factor; values are never normalised
    until to_affine() is called.
    """
    X: float
    Y: float
    Z: float
    W: float

    def __post_init__(self):
        vals = [float(getattr(self, n)) for n in ("X", "Y", "Z", "W")]
        if not all(math.isfinite(v) for v in vals):
            raise DomainError("homogeneous coordinates must be finite")
        if not any(vals):
            raise DomainError("(0, 0, 0, 0) is not a projective point")
        for n, v in zip(("X", "Y", "Z", "W"), vals):
            object.__setattr__(self, n, v)

    @classmethod
    def of(cls, xyzw: Sequence[float]) -> "HPoint3":
        X, Y, Z, W = xyzw
        return cls(X, Y, Z, W)

    def as_array(self) -> np.ndarray:
        return np.array([self.X, self.Y, self.Z, self.W], dtype=float)

    @property
    def is_ideal(self) -> bool:
        return self.W == 0.0

    def to_affine(self) -> Point3:
        if self.is_ideal:
            raise DomainError(f"ideal point {self} has no affine coordinates")
        return Point3(self.X / self.W, self.Y / self.W, self.Z / self.W)

    def equivalent(self, other: "HPoint3", rtol: float = HPOINT_RTOL) -> bool:
        # unit representatives agree up to sign
        a, b = _unit(self.as_array()), _unit(other.as_array())
        return bool(min(np.max(np.abs(a - b)), np.max(np.abs(a + b))) <= rtol)

    def __eq__(self, other):
        if not isinstance(other, HPoint3):
            return NotImplemented
        return self.equivalent(other)

    __hash__ = None


def _unit(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v)


class ProjectiveMap:
    """Collineation of extended 3-space given by an invertible 4x4 matrix."""

    __slots__ = ("_m",)

    def __init__(self, matrix):
        m = np.array(matrix, dtype=float)
        if m.shape != (4, 4):
            raise InvalidMap(f"projective map needs a 4x4 matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise InvalidMap("matrix entries must be finite")
        scale = np.linalg.norm(m)
        det = np.linalg.det(m)
        if scale == 0.0 or abs(det) <= DET_RTOL * scale ** 4:
            raise InvalidMap(f"singular matrix (det={det:.3g})")
        m.setflags(write=False)
        self._m = m

    @property
    def matrix(self) -> np.ndarray:
        return self._m

    @classmethod
    def identity(cls) -> "ProjectiveMap":
        return cls(np.eye(4))

    def __call__(self, h: HPoint3) -> HPoint3:
        return apply_map(self, h)

    def __repr__(self):
        return f"ProjectiveMap({self._m.tolist()})"


def apply_map(m: ProjectiveMap, h: HPoint3) -> HPoint3:
    return HPoint3.of(m.matrix @ h.as_array())


def compose(m1: ProjectiveMap, m2: ProjectiveMap) -> ProjectiveMap:
    """Matrix product m1 @ m2: m2 acts first."""
    return ProjectiveMap(m1.matrix @ m2.matrix)


def invert(m: ProjectiveMap) -> ProjectiveMap:
    try:
        inv = np.linalg.inv(m.matrix)
    except np.linalg.LinAlgError as e:
        raise InvalidMap(str(e)) from e
    return ProjectiveMap(inv)


def _near(value: float, *scales: float) -> bool:
    return abs(value) < PLANE_ATOL * max(1.0, *(abs(s) for s in scales))


@dataclass(frozen=True)
class ReliefMap:
    """Relief perspective of span k: centre O, image plane z = 1,
    vanishing plane z = 1 + k, neutral plane z = -k.

    k = 1 is accepted; the map is regular there.
    """
    k: float

    def __post_init__(self):
        k = float(self.k)
        if not math.isfinite(k) or k <= 0.0:
            raise DomainError(f"span k must be finite and > 0, got {self.k}")
        object.__setattr__(self, "k", k)

    @classmethod
    def from_point_pair(cls, a: Point3, a_r: Point3) -> "ReliefMap":
        """Span from a point A and its relief A^r on a common ray from O."""
        va, vr = a.as_array(), a_r.as_array()
        if not va.any() or not vr.any():
            raise DomainError("A and A^r must differ from the centre O")
        if a.z == 1.0 or a_r.z == 1.0:
            raise DomainError("A and A^r must lie off the image plane z = 1")
        cross = np.cross(va, vr)
        if np.linalg.norm(cross) > 1e-10 * np.linalg.norm(va) * np.linalg.norm(vr):
            raise DomainError("O, A, A^r are not collinear")
        c, zr = a.z, a_r.z
        if c == zr:
            raise DomainError("A and A^r must be distinct points")
        k = c * (1.0 - zr) / (zr - c)
        if not k > 0.0:
            raise DomainError(f"pair ({a}, {a_r}) implies non-positive span {k:.6g}")
        log.debug("span from point pair: k=%.17g", k)
        return cls(k)

    @property
    def center(self) -> Point3:
        return Point3(0.0, 0.0, 0.0)

    @property
    def image_plane(self) -> float:
        return 1.0

    @property
    def vanishing_plane(self) -> float:
        return 1.0 + self.k

    @property
    def neutral_plane(self) -> float:
        return -self.k

    @property
    def auxiliary_center(self) -> Point3:
        return Point3(0.0, 0.0, -self.k)

    @property
    def matrix(self) -> ProjectiveMap:
        k = self.k
        return ProjectiveMap([
            [1 + k, 0, 0, 0],
            [0, 1 + k, 0, 0],
            [0, 0, 1 + k, 0],
            [0, 0, 1, k],
        ])

    @property
    def inverse_matrix(self) -> ProjectiveMap:
        # k(1+k) * M(k)^-1, read off the inverse formula
        k = self.k
        return ProjectiveMap([
            [k, 0, 0, 0],
            [0, k, 0, 0],
            [0, 0, k, 0],
            [0, 0, -1, 1 + k],
        ])


def relief_forward(r: ReliefMap, p: Point3) -> Point3:
    d = p.z + r.k
    if _near(d, p.z, r.k):
        raise NeutralPlaneSingularity(f"{p} lies on the neutral plane z = {-r.k}")
    s = (1.0 + r.k) / d
    return Point3(s * p.x, s * p.y, s * p.z)


def relief_inverse(r: ReliefMap, p: Point3) -> Point3:
    d = 1.0 + r.k - p.z
    if _near(d, p.z, r.k):
        raise VanishingPlaneSingularity(f"{p} lies on the vanishing plane z = {1 + r.k}")
    s = r.k / d
    return Point3(s * p.x, s * p.y, s * p.z)


def plane_relief(r: ReliefMap, c: float) -> float:
    """Offset of the relief of the plane z = c."""
    if c == 0.0:
        raise DomainError("plane z = 0 passes through the centre")
    if _near(c + r.k, c, r.k):
        raise NeutralPlaneSingularity(f"plane z = {c} is the neutral plane")
    return (1.0 + r.k) * c / (c + r.k)


def auxiliary_projection(r: ReliefMap, p: Point3) -> Tuple[float, float]:
    """Central projection of p from S = (0, 0, -k) onto z = 1."""
    d = p.z + r.k
    if _near(d, p.z, r.k):
        raise NeutralPlaneSingularity(f"{p} is parallel to the image plane as seen from S")
    s = (1.0 + r.k) / d
    return s * p.x, s * p.y
