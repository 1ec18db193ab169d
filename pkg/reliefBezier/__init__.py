"""Relief perspective and Bezier clipping for space rational Bezier curves."""
from .bezier import RationalCurve2D, RationalCurve3D, bernstein, evaluate, extract, subdivide, weight_rescale
from .clipping import ClipOptions, IntersectionRecord2D, intersect2d
from .errors import ReliefError, UnresolvedRegion
from .oracle import oracle_intersect2d, oracle_intersect3d
from .pipeline import IntersectionRecord3D, PipelineOptions, Status, intersect_space
from .projective import HPoint3, Point3, ProjectiveMap, ReliefMap, relief_forward, relief_inverse
from .relief_curves import (PlanarSeed, apply_relief_to_curve, build_Q, build_W,
                            central_project, detect_span, lift_nonrational)

__version__ = "0.1.0"
