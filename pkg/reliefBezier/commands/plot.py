import os

from . import command
from ._common import emit, plot_options
from ..bezier import RationalCurve3D
from ..curvefile import load_curve, load_report
from ..errors import DomainError
from ..svg import VIEWS, render_svg


def _setup(p):
    p.add_argument("curves", nargs="*", help="curve files to draw")
    p.add_argument("--view", choices=VIEWS, default=None,
                   help="drop direction for space curves (default from config; xy for planar input)")
    p.add_argument("--report", default=None, help="intersection report (JSON) to mark on the plot")


@command("plot", "plot <curve.json>... [--k K] [--view V] [--report R]  - SVG of curves, reliefs and markers",
         setup=_setup, flags=("span", "out", "samples"))
def handle(ctx, args):
    if not args.curves:
        raise DomainError("plot needs at least one curve file")
    curves = [load_curve(p) for p in args.curves]
    report = load_report(args.report) if args.report else None
    view = args.view
    if view is None and not any(isinstance(c, RationalCurve3D) for c in curves):
        view = "xy"
    names = [os.path.splitext(os.path.basename(p))[0] for p in args.curves]
    emit(ctx, args, render_svg(curves, plot_options(ctx, args, view=view), report, names))
    return 0
