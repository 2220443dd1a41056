"""Unit-square transformation reports and the SVG emitter."""

import math
import random

import pytest

from oracles import shoelace_area
from ringua.plane import PlaneTransform, classify_transform, emit_svg, transform_report


class TestClassification:
    def test_identity_is_scaling_one(self):
        rep = transform_report(PlaneTransform(1, 0, 0, 1))
        assert rep.kind == "scaling" and rep.parameter == 1
        assert rep.signed_area == 1 and not rep.flipped

    def test_quarter_turn_rotation(self):
        rep = transform_report(PlaneTransform(0, -1, 1, 0))
        assert rep.kind == "rotation"
        assert math.isclose(rep.parameter, math.pi / 2)
        assert rep.signed_area == 1 and not rep.flipped

    def test_rotation_by_angle(self):
        theta = 0.73
        rep = transform_report(
            PlaneTransform(math.cos(theta), -math.sin(theta), math.sin(theta), math.cos(theta))
        )
        assert rep.kind == "rotation"
        assert math.isclose(rep.parameter, theta, abs_tol=1e-12)

    def test_shears(self):
        assert classify_transform(PlaneTransform(1, 2.5, 0, 1)) == ("h-shear", 2.5)
        assert classify_transform(PlaneTransform(1, 0, -0.5, 1)) == ("v-shear", -0.5)

    def test_swap_is_flipped_general(self):
        rep = transform_report(PlaneTransform(0, 1, 1, 0))
        assert rep.signed_area == -1 and rep.flipped
        assert rep.kind == "general"

    def test_scaling_area_is_square_of_factor(self):
        for s in (0.5, 2.0, -3.0):
            rep = transform_report(PlaneTransform(s, 0, 0, s))
            assert rep.kind == "scaling"
            assert math.isclose(rep.signed_area, s * s)
            assert not rep.flipped

    def test_vertices_formula(self):
        rep = transform_report(PlaneTransform(1, 2, 3, 4))
        assert rep.vertices == ((0, 0), (1, 3), (2, 4), (3, 7))

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            transform_report(PlaneTransform(1, 0, 0, float("nan")))
        with pytest.raises(ValueError):
            emit_svg(PlaneTransform(float("inf"), 0, 0, 1))


class TestAreaProperty:
    def test_determinant_matches_shoelace_on_random_matrices(self):
        rng = random.Random(20250810)
        for _ in range(1000):
            a, b, c, d = (rng.uniform(-5, 5) for _ in range(4))
            rep = transform_report(PlaneTransform(a, b, c, d))
            # boundary order around the parallelogram
            polygon = [(0, 0), (a, c), (a + b, c + d), (b, d)]
            assert abs(abs(rep.signed_area) - shoelace_area(polygon)) <= 1e-9
            assert rep.flipped == (rep.signed_area < 0)

    def test_rotation_and_shear_preserve_area(self):
        rng = random.Random(7)
        for _ in range(100):
            theta = rng.uniform(-math.pi, math.pi)
            rot = transform_report(
                PlaneTransform(math.cos(theta), -math.sin(theta), math.sin(theta), math.cos(theta))
            )
            assert math.isclose(rot.signed_area, 1.0, abs_tol=1e-12)
            assert not rot.flipped
            m = rng.uniform(-4, 4)
            assert transform_report(PlaneTransform(1, m, 0, 1)).signed_area == 1
            assert transform_report(PlaneTransform(1, 0, m, 1)).signed_area == 1


class TestSvg:
    def test_identity_square_over_square(self):
        svg = emit_svg(PlaneTransform(1, 0, 0, 1))
        assert svg.count("<polygon") == 2
        assert 'points="0,0 1,0 1,-1 0,-1"' in svg  # y axis flipped for SVG

    def test_scaling_side_two(self):
        svg = emit_svg(PlaneTransform(2, 0, 0, 2))
        assert 'points="0,0 2,0 2,-2 0,-2"' in svg

    def test_shear_keeps_horizontal_base(self):
        svg = emit_svg(PlaneTransform(1, 1, 0, 1))
        # image parallelogram: (0,0) (1,0) (2,1) (1,1); base (0,0)-(1,0) horizontal
        assert 'points="0,0 1,0 2,-1 1,-1"' in svg

    def test_deterministic(self):
        t = PlaneTransform(0.25, -1.75, 3.5, 0.125)
        assert emit_svg(t) == emit_svg(t)
        assert emit_svg(t).startswith("<svg xmlns=")

    def test_report_json_uses_class_key(self):
        payload = transform_report(PlaneTransform(1, 0, 0, 1)).to_json()
        assert payload["class"] == "scaling"
        assert payload["flipped"] is False
