from . import command
from ._common import emit, space_curve
from ..bezier import RationalCurve2D
from ..curvefile import dump_curve, dumps_json
from ..display import fmt
from ..relief_curves import detect_span


def _setup(p):
    p.add_argument("curve", help="space curve file")


@command("detect_span", "detect_span <curve.json>  - recover k and the planar seed of a build_Q curve",
         setup=_setup, flags=("out",), formats=("text", "json"))
def handle(ctx, args):
    dec = detect_span(space_curve(args.curve), ctx.config.tolerances["span_tol"])
    seed = dump_curve(RationalCurve2D(dec.seed.points, dec.seed.weights))
    if args.format == "json":
        emit(ctx, args, dumps_json({"k": dec.k, "residual": dec.residual, "seed": seed}))
        return 0
    label = ctx.colorizer.paint("k", "header")
    lines = [f"{label} = {fmt(dec.k)}  (spread {dec.residual:.3g})",
             "seed weights: " + ", ".join(fmt(w) for w in seed["weights"])]
    emit(ctx, args, "\n".join(lines) + "\n")
    return 0
