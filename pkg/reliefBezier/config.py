# reliefBezier/config.py
"""
~/.config/rB/config.toml (or $RB_CONFIG, or --config): terminal colours,
default tolerances and plot settings. The library never reads it; the CLI
turns it into ClipOptions / PipelineOptions / PlotOptions.
"""
from __future__ import annotations
import os, sys, tomllib
from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Optional

from . import constants as K
from .errors import ConfigError

try:
    import colorama  # type: ignore
    colorama.just_fix_windows_console()
except Exception:
    pass

_BASE = ("black", "red", "green", "yellow", "blue", "magenta", "cyan", "white")
# 30-37 normal, 90-97 bright
SGR: Dict[str, int] = {name: 30 + i for i, name in enumerate(_BASE)}
SGR.update({f"bright_{name}": 90 + i for i, name in enumerate(_BASE)})

DEFAULT_STYLES = {
    "accepted": "bright_green",
    "rejected": "red",
    "planar": "bright_blue",
    "header": "bold_cyan",
    "error": "bright_red",
}

DEFAULT_TOLERANCES = {
    "tol_param": K.TOL_PARAM,
    "tol_point2d_rel": K.TOL_POINT2D_REL,
    "tol_point3d_rel": K.TOL_POINT3D_REL,
    "max_depth": K.MAX_DEPTH,
    "min_reduction": K.MIN_REDUCTION,
    "span_tol": K.SPAN_TOL,
}

DEFAULT_PLOT = {
    "width": K.SVG_WIDTH,
    "height": K.SVG_HEIGHT,
    "margin": K.SVG_MARGIN,
    "samples": K.SVG_SAMPLES,
    "view": "axo",
    "curve": "#1f4e9e",
    "relief": "#c0392b",
    "control": "#7f8c8d",
    "marker": "#27ae60",
    "slab": "#bdc3c7",
}


def _toml_value(v: Any) -> str:
    if isinstance(v, str):
        return f'"{v}"'
    return repr(v)


def _section(name: str, values: Mapping[str, Any]) -> str:
    return f"[{name}]\n" + "".join(f"{k} = {_toml_value(v)}\n" for k, v in values.items())


DEFAULT_CONFIG_TEXT = "\n".join([
    "# rB configuration (TOML); delete this file to restore the defaults",
    "[general]\nenabled = true          # terminal colours\n",
    "# colour names: black red green yellow blue magenta cyan white,",
    "# optionally bright_..., optionally prefixed with bold_",
    _section("colors", DEFAULT_STYLES),
    "# command-line flags override these",
    _section("tolerances", DEFAULT_TOLERANCES),
    "# view: axo | xz | yz | xy",
    _section("plot", DEFAULT_PLOT),
])


def config_path(override: Optional[str] = None) -> str:
    raw = override or os.environ.get("RB_CONFIG") or os.path.join("~", ".config", "rB", "config.toml")
    return os.path.expanduser(raw)


class Colorizer:
    """Wraps text in ANSI codes by role ('accepted', 'header', ...)."""

    def __init__(self, enabled: bool, styles: Dict[str, str]):
        self.enabled = enabled
        self.styles = styles

    @staticmethod
    def codes(style_name: str) -> Optional[str]:
        bold = style_name.startswith("bold_")
        sgr = SGR.get(style_name[5:] if bold else style_name)
        if sgr is None:
            return None
        return ("\x1b[1m" if bold else "") + f"\x1b[{sgr}m"

    def colorize(self, text: str, style_name: Optional[str]) -> str:
        prefix = self.codes(style_name) if self.enabled and style_name else None
        return f"{prefix}{text}\x1b[0m" if prefix else text

    def paint(self, text: str, role: str) -> str:
        return self.colorize(text, self.styles.get(role, DEFAULT_STYLES.get(role)))


def ensure_default_config(override: Optional[str] = None):
    path = config_path(override)
    if os.path.exists(path):
        return
    try:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(DEFAULT_CONFIG_TEXT)
    except OSError:
        # read-only home: run on built-in defaults
        pass


def _read(path: str) -> Dict[str, Any]:
    try:
        with open(path, "rb") as f:
            return tomllib.load(f)
    except FileNotFoundError:
        return {}
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"invalid config file {path}: {e}") from e


def _merged(defaults: Dict[str, Any], user: Any, accept) -> Dict[str, Any]:
    out = dict(defaults)
    if isinstance(user, dict):
        out.update({k: v for k, v in user.items() if k in defaults and accept(v, defaults[k])})
    return out


def _is_number(v: Any, _default: Any) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def _same_type(v: Any, default: Any) -> bool:
    return type(v) is type(default)


def color_enabled(disable_flag: bool, general: Any) -> bool:
    """--no-color and NO_COLOR switch off; non-TTY too unless FORCE_COLOR."""
    if disable_flag or os.environ.get("NO_COLOR"):
        return False
    tty = getattr(sys.stdout, "isatty", None)
    if not (tty and tty()) and not os.environ.get("FORCE_COLOR"):
        return False
    veto = general.get("enabled") if isinstance(general, dict) else None
    return veto if isinstance(veto, bool) else True


@dataclass
class Config:
    colorizer: Colorizer
    tolerances: Dict[str, float] = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    plot: Dict[str, Any] = field(default_factory=lambda: dict(DEFAULT_PLOT))
    path: Optional[str] = None


def load_config(override: Optional[str] = None, disable_color: bool = False) -> Config:
    ensure_default_config(override)
    path = config_path(override)
    cfg = _read(path)
    styles = dict(DEFAULT_STYLES)
    if isinstance(cfg.get("colors"), dict):
        styles.update({k: str(v) for k, v in cfg["colors"].items()})
    return Config(
        colorizer=Colorizer(color_enabled(disable_color, cfg.get("general")), styles),
        tolerances=_merged(DEFAULT_TOLERANCES, cfg.get("tolerances"), _is_number),
        plot=_merged(DEFAULT_PLOT, cfg.get("plot"), _same_type),
        path=path,
    )
