import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from reliefBezier.bezier import RationalCurve2D, bounding_diagonal
from reliefBezier.clipping import (ClipOptions, ClipStats, ExplicitBezier,
                                   clip_interval, convex_hull, crossing_sine,
                                   distance_coefficients, fat_line, intersect2d,
                                   upper_hull)
from reliefBezier.errors import DegenerateCurve, DomainError, UnresolvedRegion
from reliefBezier.oracle import oracle_intersect2d


def crossing_angle(P, Q, t, u):
    return math.asin(min(1.0, crossing_sine(P, Q, t, u)))


class TestFatLine:
    def test_parabola(self, parabola_and_line):
        P, _ = parabola_and_line
        line = fat_line(P)
        assert np.allclose(line.distance(P.control), [0, 2, 0])
        assert (line.d_min, line.d_max) == (0.0, 2.0)

    def test_band_contains_zero(self):
        line = fat_line(RationalCurve2D([[0, 0], [1, 1], [2, 2.5], [3, 0]]))
        assert line.d_min <= 0.0 <= line.d_max

    def test_closed_polygon_uses_farthest_point(self):
        c = RationalCurve2D([[0, 0], [1, 1], [3, 0], [0, 0]])
        line = fat_line(c)
        d = line.distance(c.control)
        assert d[0] == pytest.approx(0.0) and d[2] == pytest.approx(0.0, abs=1e-15)
        assert line.d_min <= d.min() and d.max() <= line.d_max

    def test_all_points_coincide(self):
        with pytest.raises(DegenerateCurve):
            fat_line(RationalCurve2D([[1, 1], [1, 1], [1, 1]]))


class TestExplicitClip:
    def test_parabola_coefficients(self, parabola_and_line):
        P, _ = parabola_and_line
        lower, upper = distance_coefficients(P, fat_line(P))
        assert np.allclose(lower.coefficients, [0, 2, 0])
        assert np.allclose(upper.coefficients, [2, 0, 2])
        assert np.allclose(lower.abscissae, [0, 0.5, 1])

    def test_weights_scale_coefficients(self):
        P = RationalCurve2D([[0, 0], [1, 2], [2, 0]], [1.0, 3.0, 1.0])
        lower, _ = distance_coefficients(P, fat_line(P))
        assert np.allclose(lower.coefficients, [0, 6, 0])

    def test_inside_band_keeps_everything(self):
        assert clip_interval(ExplicitBezier([0.0, 2.0, 0.0])) == (0.0, 1.0)

    def test_all_negative_is_empty(self):
        assert clip_interval(ExplicitBezier([-1.0, -0.5, -2.0])) is None

    def test_linear_crossing(self):
        assert clip_interval(ExplicitBezier([-1.0, 1.0])) == pytest.approx((0.5, 1.0))
        assert clip_interval(ExplicitBezier([1.0, -3.0])) == pytest.approx((0.0, 0.25))

    def test_interior_bump(self):
        lo, hi = clip_interval(ExplicitBezier([-1.0, 1.0, 1.0, -1.0]))
        assert lo == pytest.approx(1.0 / 6.0)
        assert hi == pytest.approx(5.0 / 6.0)

    @settings(max_examples=60)
    @given(st.integers(min_value=0, max_value=10_000))
    def test_clip_is_safe(self, seed):
        """Every t whose point lies in the band survives the clip."""
        rng = np.random.default_rng(seed)
        n = int(rng.integers(1, 6))
        P = RationalCurve2D(rng.uniform(0, 1, (n + 1, 2)), rng.uniform(0.2, 5.0, n + 1))
        Q = RationalCurve2D(rng.uniform(0, 1, (4, 2)), rng.uniform(0.2, 5.0, 4))
        line = fat_line(Q)
        a = clip_interval(distance_coefficients(P, line)[0])
        b = clip_interval(distance_coefficients(P, line)[1])
        ts = np.linspace(0.0, 1.0, 2001)
        d = line.distance(P.sample(ts))
        inside = ts[(d >= line.d_min) & (d <= line.d_max)]
        if a is None or b is None or max(a[0], b[0]) > min(a[1], b[1]):
            assert inside.size == 0
            return
        lo, hi = max(a[0], b[0]), min(a[1], b[1])
        assert np.all(inside >= lo - 1e-12)
        assert np.all(inside <= hi + 1e-12)


class TestConvexHull:
    def test_square_with_interior_point(self):
        hull = convex_hull([[0, 0], [1, 0], [0.5, 0.5], [1, 1], [0, 1]])
        assert len(hull) == 4
        area = 0.5 * sum(a[0] * b[1] - b[0] * a[1] for a, b in zip(hull, np.roll(hull, -1, axis=0)))
        assert area == pytest.approx(1.0)

    def test_upper_hull_drops_points_below(self):
        pts = [(0.0, -1.0), (0.25, -3.0), (0.5, 1.0), (0.75, 0.0), (1.0, -1.0)]
        assert upper_hull(pts) == [(0.0, -1.0), (0.5, 1.0), (1.0, -1.0)]

    def test_upper_hull_is_part_of_convex_hull(self):
        pts = [(0.0, 0.0), (0.2, 0.7), (0.4, 0.1), (0.6, 0.9), (1.0, 0.3)]
        hull = {tuple(p) for p in convex_hull(pts).tolist()}
        assert set(upper_hull(pts)) <= hull

    def test_clip_uses_upper_hull(self):
        # the dip at x = 1/3 is under the hull edge and must not cut the range
        assert clip_interval(ExplicitBezier([1.0, -5.0, 1.0, 1.0])) == (0.0, 1.0)


class TestIntersect2D:
    def test_crossing_segments(self):
        P = RationalCurve2D([[0, 0], [1, 1]])
        Q = RationalCurve2D([[0, 1], [1, 0]])
        recs = intersect2d(P, Q)
        assert len(recs) == 1
        assert recs[0].t == pytest.approx(0.5, abs=1e-10)
        assert recs[0].u == pytest.approx(0.5, abs=1e-10)
        assert recs[0].point == pytest.approx((0.5, 0.5), abs=1e-10)

    def test_disjoint_segments(self):
        P = RationalCurve2D([[0, 0], [1, 0]])
        Q = RationalCurve2D([[0, 1], [1, 1]])
        assert intersect2d(P, Q) == []

    def test_parabola_and_line(self, parabola_and_line):
        P, Q = parabola_and_line
        stats = ClipStats()
        recs = intersect2d(P, Q, stats=stats)
        assert [r.t for r in recs] == pytest.approx([0.25, 0.75], abs=1e-9)
        assert [r.u for r in recs] == pytest.approx([0.25, 0.75], abs=1e-9)
        assert all(r.residual < 1e-9 * bounding_diagonal([P, Q]) for r in recs)
        assert stats.clip_iterations > 0
        assert stats.as_dict().keys() == {"clip_iterations", "subdivisions", "dropped", "merged"}

    def test_rescaling_weights_keeps_roots(self, parabola_and_line):
        P, Q = parabola_and_line
        base = intersect2d(P, Q)
        scaled = intersect2d(P.weight_rescale(3.0), Q.weight_rescale(0.25))
        assert len(base) == len(scaled)
        for a, b in zip(base, scaled):
            assert abs(a.t - b.t) < 1e-12 and abs(a.u - b.u) < 1e-12

    def test_swapping_curves_swaps_parameters(self, parabola_and_line):
        P, Q = parabola_and_line
        a = intersect2d(P, Q)
        b = sorted(intersect2d(Q, P), key=lambda r: (r.u, r.t))
        assert len(a) == len(b)
        for x, y in zip(a, b):
            assert x.t == pytest.approx(y.u, abs=1e-10)
            assert x.u == pytest.approx(y.t, abs=1e-10)

    def test_negative_weights_rejected(self):
        P = RationalCurve2D([[0, 0], [1, 1]], [1.0, -1.0])
        Q = RationalCurve2D([[0, 1], [1, 0]])
        with pytest.raises(DomainError):
            intersect2d(P, Q)

    def test_overlapping_segments_are_unresolved(self):
        P = RationalCurve2D([[0, 0], [1, 1]])
        Q = RationalCurve2D([[0.2, 0.2], [1.2, 1.2]])
        with pytest.raises(UnresolvedRegion) as exc:
            intersect2d(P, Q, ClipOptions(max_depth=20))
        assert exc.value.exit_code == 2
        assert exc.value.boxes

    def test_tangent_line_is_unresolved(self):
        P = RationalCurve2D([[0, 0], [1, 2], [2, 0]])
        Q = RationalCurve2D([[0, 1], [2, 1]])
        with pytest.raises(UnresolvedRegion) as exc:
            intersect2d(P, Q)
        (t0, t1), (u0, u1) = exc.value.boxes[0]
        assert abs(0.5 * (t0 + t1) - 0.5) < 1e-6
        assert abs(0.5 * (u0 + u1) - 0.5) < 1e-6

    def test_touching_weighted_curves_are_unresolved(self):
        P = RationalCurve2D([[0, 0], [1, 2], [2, 0]], [1.0, 3.0, 1.0])
        # mirror image of P in y = 1.5, touching it at (1, 1.5)
        Q = RationalCurve2D([[0, 3], [1, 1], [2, 3]], [1.0, 3.0, 1.0])
        with pytest.raises(UnresolvedRegion):
            intersect2d(P, Q)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(min_value=0, max_value=100_000))
    def test_segment_through_curve_point(self, seed):
        """A segment crossing P at P(t0) gives back (t0, u0)."""
        rng = np.random.default_rng(seed)
        P = RationalCurve2D(rng.uniform(0, 1, (4, 2)), rng.uniform(0.2, 5.0, 4))
        t0 = float(rng.uniform(0.05, 0.95))
        X, tangent = P.eval(t0), P.derivative(t0)
        angle = math.atan2(tangent[1], tangent[0]) + rng.uniform(0.3, math.pi - 0.3)
        d = np.array([math.cos(angle), math.sin(angle)])
        a, b = rng.uniform(0.1, 1.0, 2)
        Q = RationalCurve2D([X - a * d, X + b * d])
        u0 = a / (a + b)
        recs = intersect2d(P, Q)
        assert any(abs(r.t - t0) < 1e-8 and abs(r.u - u0) < 1e-8 for r in recs), (t0, u0, recs)

    @pytest.mark.parametrize("bad", [
        dict(tol_param=0.0), dict(tol_point=-1.0), dict(max_depth=-1), dict(min_reduction=1.0),
    ])
    def test_options_validated(self, bad):
        with pytest.raises(DomainError):
            ClipOptions(**bad)


def test_random_cubics_against_oracle():
    """Clipping finds every transversal root the brute-force search finds.

    An UnresolvedRegion on this population fails the test.
    """
    rng = np.random.default_rng(1234)
    checked = 0
    for _ in range(200):
        P = RationalCurve2D(rng.uniform(0, 1, (4, 2)), rng.uniform(0.2, 5.0, 4))
        Q = RationalCurve2D(rng.uniform(0, 1, (4, 2)), rng.uniform(0.2, 5.0, 4))
        hits = [h for h in oracle_intersect2d(P, Q) if crossing_angle(P, Q, h.t, h.u) > 1e-3]
        diag = bounding_diagonal([P, Q])
        recs = intersect2d(P, Q)
        for h in hits:
            assert any(abs(r.t - h.t) < 1e-6 and abs(r.u - h.u) < 1e-6 for r in recs), (P, Q, h)
        for r in recs:
            assert r.residual < 1e-9 * diag
        checked += len(hits)
    assert checked > 100
