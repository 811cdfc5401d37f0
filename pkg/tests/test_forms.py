"""
Unit tests for the metric kernel in coxeterkit.forms.
"""

import unittest
import numpy as np

from coxeterkit.core.exceptions import GeometryError
from coxeterkit.forms import (BilinearForm, FormKind, Isometry, PointKind,
                              canonicalize, inner, intrinsic_distance,
                              klein_project, normalize_point, reflection)


class TestBilinearForm(unittest.TestCase):
    """Tests for the three model forms."""

    def test_ambient_dimensions(self):
        """Test ambient dimension per geometry."""
        self.assertEqual(BilinearForm.euclidean(3).ambient_dim, 3)
        self.assertEqual(BilinearForm.spherical(3).ambient_dim, 4)
        self.assertEqual(BilinearForm.lorentzian(3).ambient_dim, 4)

    def test_lorentzian_product(self):
        """Test the sign convention of the Lorentzian product."""
        form = BilinearForm.lorentzian(2)
        self.assertAlmostEqual(form([1, 0, 0], [1, 0, 0]), -1.0)
        self.assertAlmostEqual(form([1, 2, 3], [4, 5, 6]), -4 + 10 + 18)

    def test_batched_product(self):
        """Test evaluation of many points against one vector."""
        form = BilinearForm.lorentzian(1)
        values = inner(form, np.array([[1.0, 0.0], [2.0, 1.0]]), [1.0, 1.0])
        np.testing.assert_allclose(values, [-1.0, -1.0])

    def test_dimension_mismatch(self):
        """Test that mismatched vectors are rejected."""
        form = BilinearForm.euclidean(2)
        with self.assertRaises(GeometryError):
            form([1, 0], [1, 0, 0])

    def test_invalid_dimension(self):
        """Test that hyperbolic space needs a positive dimension."""
        with self.assertRaises(GeometryError):
            BilinearForm(FormKind.LORENTZIAN, 0)


class TestReflection(unittest.TestCase):
    """Tests for mirror reflections."""

    def setUp(self):
        """Set up a hyperbolic plane form."""
        self.form = BilinearForm.lorentzian(2)

    def test_hyperboloid_reflection(self):
        """Test reflection of a hyperboloid point in a coordinate mirror."""
        r = reflection(self.form, [0.0, 1.0, 0.0])
        image = r.apply([np.sqrt(2.0), 1.0, 0.0])
        np.testing.assert_allclose(image, [np.sqrt(2.0), -1.0, 0.0])

    def test_reflection_is_involutive_isometry(self):
        """Test that r∘r is the identity and r preserves the form."""
        v = np.array([0.5, 1.0, 0.5])
        v = v / np.sqrt(self.form(v, v))
        r = reflection(self.form, v)
        self.assertLess(r.compose(r).deviation(Isometry.identity(3)), 1e-12)
        self.assertLess(r.form_defect(self.form), 1e-12)

    def test_reflection_fixes_mirror(self):
        """Test that points on the mirror stay fixed."""
        r = reflection(self.form, [0.0, 0.0, 1.0])
        x = np.array([np.cosh(1.0), np.sinh(1.0), 0.0])
        np.testing.assert_allclose(r.apply(x), x)

    def test_non_unit_normal(self):
        """Test that a timelike normal is rejected."""
        with self.assertRaises(GeometryError):
            reflection(self.form, [1.0, 0.0, 0.0])

    def test_affine_euclidean_reflection(self):
        """Test reflection in the mirror x = 1 of the Euclidean plane."""
        form = BilinearForm.euclidean(2)
        r = reflection(form, [1.0, 0.0], offset=1.0)
        np.testing.assert_allclose(r.apply([0.0, 3.0]), [2.0, 3.0])
        np.testing.assert_allclose(r.apply([1.0, -1.0]), [1.0, -1.0])

    def test_offset_rejected_for_curved_forms(self):
        """Test that offsets are only allowed in Euclidean space."""
        with self.assertRaises(GeometryError):
            reflection(self.form, [0.0, 1.0, 0.0], offset=0.5)

    def test_compose_and_inverse(self):
        """Test composition with translations and its inverse."""
        form = BilinearForm.euclidean(1)
        r1 = reflection(form, [1.0], offset=0.0)
        r2 = reflection(form, [1.0], offset=1.0)
        t = r2.compose(r1)  # translation by 2
        np.testing.assert_allclose(t.apply([0.5]), [2.5])
        np.testing.assert_allclose(t.inverse().apply([2.5]), [0.5])
        np.testing.assert_allclose(t.power(3).apply([0.0]), [6.0])


class TestNormalization(unittest.TestCase):
    """Tests for normalize_point, canonicalize and klein_project."""

    def setUp(self):
        """Set up a hyperbolic plane form."""
        self.form = BilinearForm.lorentzian(2)

    def test_timelike_goes_to_upper_sheet(self):
        """Test that a negative timelike vector is flipped to the upper sheet."""
        p = normalize_point(self.form, [-2.0, 0.0, 0.0])
        self.assertIs(p.kind, PointKind.INTERIOR)
        np.testing.assert_allclose(p.coords, [1.0, 0.0, 0.0])

    def test_null_vector_becomes_ideal(self):
        """Test that (3, 3, 0) normalizes to the ideal point (1, 1, 0)."""
        p = normalize_point(self.form, [3.0, 3.0, 0.0])
        self.assertTrue(p.is_ideal)
        np.testing.assert_allclose(p.coords, [1.0, 1.0, 0.0])

    def test_spacelike_vector_is_rejected(self):
        """Test that spacelike vectors are not points."""
        with self.assertRaises(GeometryError):
            normalize_point(self.form, [0.0, 1.0, 0.0])

    def test_spherical_normalization(self):
        """Test unit normalization on the sphere."""
        p = normalize_point(BilinearForm.spherical(2), [0.0, 0.0, 5.0])
        np.testing.assert_allclose(p.coords, [0.0, 0.0, 1.0])

    def test_zero_vector(self):
        """Test that the zero vector is rejected on the sphere."""
        with self.assertRaises(GeometryError):
            normalize_point(BilinearForm.spherical(1), [0.0, 0.0])

    def test_canonicalize_mixed_batch(self):
        """Test vectorized normalization of interior and ideal rows."""
        rows = np.array([[2.0, 0.0, 0.0], [2.0, 0.0, 2.0]])
        out = canonicalize(self.form, rows)
        np.testing.assert_allclose(out, [[1.0, 0.0, 0.0], [1.0, 0.0, 1.0]])

    def test_klein_projection(self):
        """Test Klein coordinates of interior and ideal points."""
        p = normalize_point(self.form, [np.cosh(1.0), np.sinh(1.0), 0.0])
        np.testing.assert_allclose(klein_project(p), [np.tanh(1.0), 0.0])
        ideal = normalize_point(self.form, [1.0, 0.0, 1.0])
        self.assertAlmostEqual(np.linalg.norm(klein_project(ideal)), 1.0)

    def test_klein_projection_needs_hyperbolic_point(self):
        """Test that Klein projection refuses spherical points."""
        p = normalize_point(BilinearForm.spherical(2), [1.0, 0.0, 0.0])
        with self.assertRaises(GeometryError):
            klein_project(p)

    def test_distances(self):
        """Test hyperbolic distance and the ideal case."""
        x = np.array([1.0, 0.0, 0.0])
        y = np.array([np.cosh(2.0), np.sinh(2.0), 0.0])
        self.assertAlmostEqual(intrinsic_distance(self.form, x, y), 2.0)
        self.assertEqual(intrinsic_distance(self.form, x, [1.0, 1.0, 0.0]), float("inf"))


if __name__ == '__main__':
    unittest.main()
