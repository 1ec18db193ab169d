# reliefBezier/commands/__init__.py
import importlib
import pkgutil

REGISTRY = {}


def command(name, helpline, setup=None, flags=(), formats=()):
    """Register ``fn(ctx, args) -> int`` as sub-command ``name``.

    ``helpline`` reads "usage  - description"; ``setup(parser)`` adds the
    command's own arguments to its subparser. ``flags`` names the shared
    option groups the command honours ("span", "clip", "form8", "out",
    "samples"); ``formats`` lists its --format choices, default first.
    """
    def deco(fn):
        if name in REGISTRY:
            raise RuntimeError(f"command {name!r} registered twice")
        REGISTRY[name] = {"fn": fn, "help": helpline, "setup": setup,
                          "flags": frozenset(flags), "formats": tuple(formats)}
        return fn
    return deco


def _load_all():
    # modules starting with "_" hold shared helpers, not commands
    for info in pkgutil.iter_modules(__path__):
        if not info.name.startswith("_"):
            importlib.import_module(f".{info.name}", __name__)


_load_all()
