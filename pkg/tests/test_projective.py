import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from reliefBezier.errors import (DomainError, InvalidMap, NeutralPlaneSingularity,
                                 VanishingPlaneSingularity)
from reliefBezier.projective import (HPoint3, Point3, ProjectiveMap, ReliefMap,
                                     apply_map, auxiliary_projection, compose,
                                     invert, plane_relief, relief_forward,
                                     relief_inverse)

coord = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)
span = st.sampled_from([0.5, 1.0, 2.0, 5.0])


def close(p: Point3, xyz, tol=1e-12):
    return np.allclose(p.as_array(), xyz, rtol=tol, atol=tol)


class TestPoints:
    def test_point_rejects_nan(self):
        with pytest.raises(DomainError):
            Point3(0.0, float("nan"), 1.0)

    def test_hpoint_rejects_all_zero(self):
        with pytest.raises(DomainError):
            HPoint3(0.0, 0.0, 0.0, 0.0)

    def test_equality_is_up_to_scale(self):
        assert HPoint3(1, 2, 3, 4) == HPoint3(-2, -4, -6, -8)
        assert HPoint3(1, 2, 3, 4) != HPoint3(1, 2, 3, 5)

    def test_equality_with_tied_largest_entries(self):
        assert HPoint3(1, -1, 0, 0) == HPoint3(1, -1 - 1e-12, 0, 0)
        assert HPoint3(1, -1, 0, 0) == HPoint3(-3, 3 + 3e-12, 0, 0)
        assert HPoint3(1, -1, 0, 0) != HPoint3(1, 1, 0, 0)

    def test_ideal_point_has_no_affine_reading(self):
        h = HPoint3(1.0, 0.0, 0.0, 0.0)
        assert h.is_ideal
        with pytest.raises(DomainError):
            h.to_affine()

    def test_affine_round_trip(self):
        p = Point3(1.5, -2.0, 3.25)
        assert p.homogeneous().to_affine() == p
        assert HPoint3(3.0, -4.0, 6.5, 2.0).to_affine() == p


class TestProjectiveMap:
    def test_identity_leaves_points(self):
        h = HPoint3(1.0, -2.0, 3.0, 0.5)
        assert apply_map(ProjectiveMap.identity(), h) == h

    def test_relief_matrix_on_homogeneous_point(self):
        out = apply_map(ReliefMap(2.0).matrix, HPoint3(2, 2, 2, 2))
        assert np.allclose(out.as_array(), [6, 6, 6, 6])

    def test_neutral_plane_goes_to_infinity(self):
        k = 3.0
        out = apply_map(ReliefMap(k).matrix, HPoint3(0, 0, -k, 1))
        assert out.is_ideal
        assert np.allclose(out.as_array(), [0, 0, -k * (1 + k), 0])

    def test_singular_matrix_rejected(self):
        with pytest.raises(InvalidMap):
            ProjectiveMap(np.diag([1.0, 1.0, 1.0, 0.0]))
        with pytest.raises(InvalidMap):
            ProjectiveMap(np.eye(3))

    def test_matrix_is_read_only(self):
        m = ProjectiveMap.identity()
        with pytest.raises(ValueError):
            m.matrix[0, 0] = 2.0

    def test_invert_identity(self):
        assert np.allclose(invert(ProjectiveMap.identity()).matrix, np.eye(4))

    def test_invert_relief_matrix(self):
        inv = invert(ReliefMap(2.0).matrix)
        assert inv(HPoint3(6, 6, 6, 6)) == HPoint3(2, 2, 2, 2)

    def test_compose_with_identity(self):
        m = ReliefMap(2.0).matrix
        assert np.array_equal(compose(m, ProjectiveMap.identity()).matrix, m.matrix)

    def test_compose_applies_right_operand_first(self):
        shift = ProjectiveMap([[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
        scale = ProjectiveMap(np.diag([2.0, 2.0, 2.0, 1.0]))
        h = HPoint3(1, 0, 0, 1)
        assert compose(shift, scale)(h) == HPoint3(3, 0, 0, 1)
        assert compose(scale, shift)(h) == HPoint3(4, 0, 0, 1)

    def test_scaled_inverse_matrix(self):
        r = ReliefMap(2.0)
        prod = r.inverse_matrix.matrix @ r.matrix.matrix
        assert np.allclose(prod, r.k * (1 + r.k) * np.eye(4))

    def test_relief_determinant(self):
        k = 2.5
        assert np.linalg.det(ReliefMap(k).matrix.matrix) == pytest.approx(k * (1 + k) ** 3)


class TestReliefMap:
    @pytest.mark.parametrize("k", [0.0, -1.0, float("inf"), float("nan")])
    def test_span_must_be_positive(self, k):
        with pytest.raises(DomainError):
            ReliefMap(k)

    def test_span_one_is_regular(self):
        assert close(relief_forward(ReliefMap(1.0), Point3(0, 0, 3)), [0, 0, 1.5])

    def test_derived_planes(self):
        r = ReliefMap(2.0)
        assert r.image_plane == 1.0
        assert r.vanishing_plane == 3.0
        assert r.neutral_plane == -2.0
        assert r.auxiliary_center == Point3(0, 0, -2)
        assert r.center == Point3(0, 0, 0)
        assert abs(r.neutral_plane - r.center.z) == r.k
        assert r.vanishing_plane - r.image_plane == r.k

    def test_forward_examples(self):
        r = ReliefMap(2.0)
        assert close(relief_forward(r, Point3(3.5, -1.0, 1.0)), [3.5, -1.0, 1.0])
        assert close(relief_forward(r, Point3(0, 0, 0)), [0, 0, 0])
        assert close(relief_forward(r, Point3(0, 0, 2)), [0, 0, 1.5])

    def test_inverse_examples(self):
        r = ReliefMap(2.0)
        assert close(relief_inverse(r, Point3(0, 0, 1.5)), [0, 0, 2])
        assert close(relief_inverse(r, Point3(-4.0, 7.0, 1.0)), [-4.0, 7.0, 1.0])

    def test_singular_planes(self):
        r = ReliefMap(2.0)
        with pytest.raises(NeutralPlaneSingularity):
            relief_forward(r, Point3(1, 1, -2))
        with pytest.raises(VanishingPlaneSingularity):
            relief_inverse(r, Point3(1, 1, 3))

    def test_plane_relief(self):
        r = ReliefMap(2.0)
        assert plane_relief(r, 1.0) == 1.0
        assert plane_relief(r, 2.0) == pytest.approx(1.5)
        assert plane_relief(r, 1e6) == pytest.approx(3.0, rel=1e-5)
        with pytest.raises(NeutralPlaneSingularity):
            plane_relief(r, -2.0)
        with pytest.raises(DomainError):
            plane_relief(r, 0.0)

    def test_from_point_pair(self):
        r = ReliefMap.from_point_pair(Point3(0, 0, 2), Point3(0, 0, 1.5))
        assert r.k == pytest.approx(2.0)
        a = Point3(1.0, -2.0, 4.0)
        r = ReliefMap.from_point_pair(a, relief_forward(ReliefMap(0.7), a))
        assert r.k == pytest.approx(0.7, rel=1e-12)

    @pytest.mark.parametrize("a,a_r", [
        (Point3(0, 0, 2), Point3(0, 1, 1.5)),      # not on one ray
        (Point3(0, 0, 1), Point3(0, 0, 1)),        # on the image plane
        (Point3(0, 0, 0), Point3(0, 0, 1.5)),      # centre
        (Point3(0, 0, 2), Point3(0, 0, 2.5)),      # moves away from sigma
    ])
    def test_from_point_pair_rejects(self, a, a_r):
        with pytest.raises(DomainError):
            ReliefMap.from_point_pair(a, a_r)


class TestReliefProperties:
    @given(coord, coord, coord, span)
    def test_round_trip(self, x, y, z, k):
        assume(abs(z + k) > 1e-3)
        r = ReliefMap(k)
        p = Point3(x, y, z)
        q = relief_forward(r, p)
        assume(abs(1 + k - q.z) > 1e-9 * max(1.0, abs(q.z)))
        back = relief_inverse(r, q)
        scale = max(1.0, float(np.max(np.abs(p.as_array()))))
        assert np.max(np.abs(back.as_array() - p.as_array())) < 1e-12 * scale * max(1.0, abs(q.z) / abs(1 + k - q.z))

    @given(coord, coord, coord, span)
    def test_collinear_with_centre(self, x, y, z, k):
        assume(abs(z + k) > 1e-3)
        p = Point3(x, y, z)
        q = relief_forward(ReliefMap(k), p)
        cross = np.cross(p.as_array(), q.as_array())
        assert np.linalg.norm(cross) <= 1e-10 * max(1.0, np.linalg.norm(p.as_array()) * np.linalg.norm(q.as_array()))

    @given(coord, coord, coord, span)
    def test_matches_matrix(self, x, y, z, k):
        assume(abs(z + k) > 1e-3)
        r = ReliefMap(k)
        p = Point3(x, y, z)
        via_matrix = apply_map(r.matrix, p.homogeneous()).to_affine()
        assert np.allclose(relief_forward(r, p).as_array(), via_matrix.as_array(), rtol=1e-14, atol=1e-14)

    @given(coord, coord, st.floats(min_value=1.0, max_value=1e6, exclude_min=True), span)
    def test_slab(self, x, y, z, k):
        assume(z > 1.0 + 1e-9)
        q = relief_forward(ReliefMap(k), Point3(x, y, z))
        assert 1.0 < q.z < 1.0 + k

    @given(coord, coord, coord, span)
    def test_auxiliary_projection_is_relief_xy(self, x, y, z, k):
        assume(abs(z + k) > 1e-3)
        r = ReliefMap(k)
        p = Point3(x, y, z)
        q = relief_forward(r, p)
        assert np.allclose(auxiliary_projection(r, p), (q.x, q.y), rtol=1e-14, atol=1e-14)

    @pytest.mark.parametrize("k", [0.5, 1.0, 2.0, 5.0])
    def test_round_trip_population(self, k):
        rng = np.random.default_rng(int(k * 10))
        r = ReliefMap(k)
        pts = rng.uniform(-10.0, 10.0, size=(2500, 3))
        pts = pts[np.abs(pts[:, 2] + k) >= 1e-3]
        for p in pts:
            back = relief_inverse(r, relief_forward(r, Point3.of(p))).as_array()
            assert np.max(np.abs(back - p)) <= 1e-12 * np.max(np.abs(p))
