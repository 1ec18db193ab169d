from . import command
from ._common import emit, space_curve
from ..curvefile import dump_curve, dumps_json
from ..relief_curves import central_project


def _setup(p):
    p.add_argument("curve", help="space curve file")


@command("project", "project <curve.json>  - central projection from O onto the image plane z = 1",
         setup=_setup, flags=("out",))
def handle(ctx, args):
    planar = central_project(space_curve(args.curve))
    emit(ctx, args, dumps_json(dump_curve(planar)))
    return 0
