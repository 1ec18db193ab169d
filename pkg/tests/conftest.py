import json

import numpy as np
import pytest

from reliefBezier.bezier import RationalCurve2D, RationalCurve3D


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Every test gets its own config file and no colour."""
    path = tmp_path / "rB" / "config.toml"
    monkeypatch.setenv("RB_CONFIG", str(path))
    monkeypatch.setenv("NO_COLOR", "1")
    monkeypatch.delenv("FORCE_COLOR", raising=False)
    return path


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def write_curve(tmp_path):
    """Write a curve file and return its path."""
    def _write(name, control, weights=None, space=None):
        if space is None:
            space = len(control[0]) == 3
        obj = {"space": space, "control": control}
        if weights is not None:
            obj["weights"] = weights
        p = tmp_path / name
        p.write_text(json.dumps(obj), encoding="utf-8")
        return str(p)
    return _write


@pytest.fixture
def crossing_segments():
    P3 = RationalCurve3D([[-1.0, 0.0, 2.0], [1.0, 0.0, 2.0]])
    Q3 = RationalCurve3D([[0.0, -1.0, 2.0], [0.0, 1.0, 2.0]])
    return P3, Q3


@pytest.fixture
def skew_segments():
    P3 = RationalCurve3D([[-1.5, 0.0, 1.5], [1.5, 0.0, 1.5]])
    Q3 = RationalCurve3D([[0.0, -3.0, 3.0], [0.0, 3.0, 3.0]])
    return P3, Q3


@pytest.fixture
def parabola_and_line():
    P = RationalCurve2D([[0.0, 0.0], [1.0, 2.0], [2.0, 0.0]])
    Q = RationalCurve2D([[0.0, 0.75], [2.0, 0.75]])
    return P, Q
