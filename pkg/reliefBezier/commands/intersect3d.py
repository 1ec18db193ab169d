from . import command
from ._common import emit, pipeline_options, plot_options, space_curve
from ..curvefile import dumps_json
from ..display import (RunReport, format_record3d, print_diagnostics,
                       print_records, record3d_to_dict)
from ..pipeline import PipelineStats, intersect_space
from ..svg import render_svg


def _setup(p):
    p.add_argument("P", help="first space curve file")
    p.add_argument("Q", help="second space curve file")


@command("intersect3d", "intersect3d <P.json> <Q.json>  - intersect two space curves through relief + clipping",
         setup=_setup, flags=("span", "clip", "form8", "out"),
         formats=("text", "json", "svg"))
def handle(ctx, args):
    P3, Q3 = space_curve(args.P), space_curve(args.Q)
    stats = PipelineStats()
    records = intersect_space(P3, Q3, pipeline_options(ctx, args), stats)
    report = RunReport([record3d_to_dict(r) for r in records], stats.as_dict())

    if args.format == "json":
        emit(ctx, args, dumps_json(report.to_dict()))
    elif args.format == "svg":
        opts = plot_options(ctx, args)
        emit(ctx, args, render_svg([P3, Q3], opts, report.to_dict(), names=["P", "Q"]))
    else:
        records = sorted(records, key=lambda r: (r.t, r.u))
        print_records([format_record3d(r, ctx.colorizer) for r in records], ctx.out)
        if ctx.verbosity:
            print_diagnostics(report.diagnostics, ctx.colorizer, ctx.out)
    return 0
