# reliefBezier/commands/_common.py
import logging
import sys

from ..bezier import RationalCurve2D, RationalCurve3D, bounding_diagonal
from ..clipping import ClipOptions
from ..curvefile import load_curve, write_text
from ..errors import CurveFileError
from ..pipeline import PipelineOptions
from ..svg import PlotOptions

log = logging.getLogger(__name__)


def space_curve(path) -> RationalCurve3D:
    c = load_curve(path)
    if not isinstance(c, RationalCurve3D):
        raise CurveFileError(f"{path}: expected a space curve (\"space\": true)")
    return c


def planar_curve(path) -> RationalCurve2D:
    c = load_curve(path)
    if not isinstance(c, RationalCurve2D):
        raise CurveFileError(f"{path}: expected a planar curve (\"space\": false)")
    return c


def _tol(ctx, name):
    return ctx.config.tolerances[name]


def pipeline_options(ctx, args) -> PipelineOptions:
    return PipelineOptions(
        k=args.k,
        tol_param=args.tol_param if args.tol_param is not None else _tol(ctx, "tol_param"),
        tol_point3d=args.tol_point,
        max_depth=args.max_depth if args.max_depth is not None else int(_tol(ctx, "max_depth")),
        min_reduction=_tol(ctx, "min_reduction"),
        strict_form8=args.strict_form8,
        span_tol=_tol(ctx, "span_tol"),
        rel_point2d=_tol(ctx, "tol_point2d_rel"),
        rel_point3d=_tol(ctx, "tol_point3d_rel"),
    )


def clip_options(ctx, args, P, Q) -> ClipOptions:
    tol_point = args.tol_point
    if tol_point is None:
        tol_point = _tol(ctx, "tol_point2d_rel") * max(bounding_diagonal([P, Q]), 1e-300)
    return ClipOptions(
        tol_param=args.tol_param if args.tol_param is not None else _tol(ctx, "tol_param"),
        tol_point=tol_point,
        max_depth=args.max_depth if args.max_depth is not None else int(_tol(ctx, "max_depth")),
        min_reduction=_tol(ctx, "min_reduction"),
    )


def plot_options(ctx, args, **overrides) -> PlotOptions:
    return PlotOptions.from_config(ctx.config.plot, samples=args.samples, k=getattr(args, "k", None), **overrides)


def emit(ctx, args, text: str):
    """Write command output to --out, or to the context's stream."""
    if args.out:
        path = write_text(text, args.out)
        log.info("wrote %s (%d bytes)", path, len(text))
        print(f"Saved: {path}", file=sys.stderr)
        return
    ctx.out.write(text)
