# reliefBezier/cli.py
import argparse, logging, sys

from .commands import REGISTRY
from .commands.help import show_help
from .config import load_config
from .errors import ReliefError

log = logging.getLogger(__name__)


class Ctx:
    def __init__(self, config, verbosity=0, out=None):
        self.config = config
        self.colorizer = config.colorizer
        self.verbosity = verbosity
        self.out = out or sys.stdout


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors: exit 1, keep 2 for numerical failures
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"[!] {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_flags(p: argparse.ArgumentParser, flags, formats):
    """Attach only the shared options a command honours."""
    g = p.add_argument_group("numeric options")
    if "span" in flags:
        g.add_argument("--k", type=float, default=None, help="relief span k > 0")
    if "clip" in flags:
        g.add_argument("--tol-param", type=float, default=None, help="parameter tolerance (default 1e-10)")
        g.add_argument("--tol-point", type=float, default=None,
                       help="absolute point tolerance (default relative to the curves' box diagonal)")
        g.add_argument("--max-depth", type=int, default=None, help="clipping subdivision depth (default 60)")
    if "form8" in flags:
        g.add_argument("--strict-form8", action="store_true", help="require both inputs to be build_Q curves of span k")
    o = p.add_argument_group("output")
    if formats:
        o.add_argument("--format", choices=formats, default=formats[0])
    if "out" in flags:
        o.add_argument("--out", default=None, help="write output to this path instead of stdout")
    if "samples" in flags or "svg" in formats:
        o.add_argument("--samples", type=int, default=None, help="samples per curve in SVG output (default 256)")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="rB",
                 description="Relief perspective and Bezier clipping for rational Bezier curves")
    ap.add_argument("--config", default=None, help="config file (default ~/.config/rB/config.toml or $RB_CONFIG)")
    ap.add_argument("--no-color", action="store_true", help="Disable colored output")
    ap.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging")
    sub = ap.add_subparsers(dest="command", metavar="<command>", parser_class=_Parser)
    for name in sorted(REGISTRY):
        entry = REGISTRY[name]
        desc = entry["help"].partition(" - ")[2].strip()
        p = sub.add_parser(name, help=desc, description=desc)
        _add_flags(p, entry["flags"], entry["formats"])
        if entry["setup"]:
            entry["setup"](p)
    return ap


def _log_level(verbosity: int) -> int:
    if verbosity >= 2:
        return logging.DEBUG
    return logging.INFO if verbosity == 1 else logging.WARNING


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=_log_level(args.verbose), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")

    if not args.command:
        show_help(sys.stderr)
        return 1

    try:
        ctx = Ctx(load_config(args.config, disable_color=args.no_color), args.verbose)
        return REGISTRY[args.command]["fn"](ctx, args) or 0
    except ReliefError as e:
        log.debug("%s failed", args.command, exc_info=True)
        print(f"[!] {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        log.debug("%s failed", args.command, exc_info=True)
        print(f"[!] Error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
