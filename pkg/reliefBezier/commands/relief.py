import os
import sys

from . import command
from ._common import emit, planar_curve, space_curve
from ..curvefile import dump_curve, dumps_json, write_text
from ..errors import DomainError
from ..relief_curves import PlanarSeed, apply_relief_to_curve, curve_family

FAMILY_MEMBERS = ("planar", "lifted", "spatial", "relief")


def _setup(p):
    p.add_argument("curve", help="space curve file (planar seed with --family)")
    p.add_argument("--inverse", action="store_true", help="apply the inverse relief map")
    p.add_argument("--family", action="store_true",
                   help="treat the input as a planar seed and emit planar, lifted, spatial and relief curves")


def _family(ctx, args, k):
    seed_curve = planar_curve(args.curve)
    fam = curve_family(PlanarSeed(seed_curve.control, seed_curve.weights), k)
    members = {name: dump_curve(getattr(fam, name)) for name in FAMILY_MEMBERS}
    if args.out and (args.out.endswith(os.sep) or os.path.isdir(args.out)):
        for name, obj in members.items():
            path = write_text(dumps_json(obj), os.path.join(args.out, f"{name}.json"))
            print(f"Saved: {path}", file=sys.stderr)
        return 0
    emit(ctx, args, dumps_json(members))
    return 0


@command("relief", "relief <curve.json> --k K [--inverse|--family]  - relief of a space curve (or family of a seed)",
         setup=_setup, flags=("span", "out"))
def handle(ctx, args):
    if args.k is None:
        raise DomainError("relief needs the span: pass --k")
    if args.family:
        if args.inverse:
            raise DomainError("--family and --inverse cannot be combined")
        return _family(ctx, args, args.k)
    curve = space_curve(args.curve)
    out = apply_relief_to_curve(curve, args.k, "inverse" if args.inverse else "forward")
    emit(ctx, args, dumps_json(dump_curve(out)))
    return 0
