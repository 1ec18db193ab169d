from . import command
from ._common import clip_options, emit, planar_curve, plot_options
from ..clipping import ClipStats, intersect2d
from ..curvefile import dumps_json
from ..display import (RunReport, format_record2d, print_diagnostics,
                       print_records, record2d_to_dict)
from ..svg import render_svg


def _setup(p):
    p.add_argument("P", help="first planar curve file")
    p.add_argument("Q", help="second planar curve file")


@command("intersect2d", "intersect2d <P.json> <Q.json>  - intersect two planar curves by Bezier clipping",
         setup=_setup, flags=("clip", "out"), formats=("text", "json", "svg"))
def handle(ctx, args):
    P, Q = planar_curve(args.P), planar_curve(args.Q)
    stats = ClipStats()
    records = intersect2d(P, Q, clip_options(ctx, args, P, Q), stats)
    report = RunReport([record2d_to_dict(r) for r in records], {"clipping": stats.as_dict()})

    if args.format == "json":
        emit(ctx, args, dumps_json(report.to_dict()))
    elif args.format == "svg":
        emit(ctx, args, render_svg([P, Q], plot_options(ctx, args, view="xy"), report.to_dict(),
                                   names=["P", "Q"]))
    else:
        print_records([format_record2d(r, ctx.colorizer) for r in records], ctx.out)
        if ctx.verbosity:
            print_diagnostics(report.diagnostics, ctx.colorizer, ctx.out)
    return 0
