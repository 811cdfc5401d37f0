"""
Unit tests for the explicit constructions: E8, quaternion groups, seed
vector families and diagonal slices.
"""

import itertools
import math
import unittest

import numpy as np
import pytest

from coxeterkit.core.config import override_settings
from coxeterkit.core.exceptions import GeometryError, ValidationError
from coxeterkit.forms import FormKind
from coxeterkit.gram import diagram_from_gram
from coxeterkit.wythoff import orbit_closure
from coxeterkit.zoo import (E8_GRAM, GOSSET_F_VECTOR, a_family, a_seed, b_family, b_seed,
                            binary_icosahedral, binary_tetrahedral, build_421, close_group,
                            demicube, diagonal_slice_tessellation, e8_gram, e8_mirrors,
                            e8_roots, hole_neighbors, hull_polytope, is_lattice_vector,
                            omnitruncated_cube, permutohedron, qmul, quaternion_polytopes,
                            seed_vector_families)
from coxeterkit.zoo.e8 import GOSSET_SEED


def as_set(points):
    return {tuple(np.round(p, 6) + 0.0) for p in points}


class TestE8Lattice(unittest.TestCase):
    """Tests for the E8 basis, roots and membership."""

    def test_gram_matrix(self):
        """Test that the simple roots give the E8 Cartan matrix."""
        np.testing.assert_array_equal(e8_gram(), E8_GRAM)

    def test_diagram(self):
        """Test the branch node 5 with arms of lengths 4, 2 and 1."""
        diagram = diagram_from_gram(e8_mirrors().gram())
        self.assertEqual(diagram.node_count, 8)
        self.assertEqual(sorted(diagram.neighbors(5)), [4, 6, 8])
        self.assertEqual(sum(1 for v in diagram.nodes if len(diagram.neighbors(v)) == 1), 3)

    def test_roots(self):
        """Test that there are 240 roots of norm 2, all in the lattice."""
        roots = e8_roots()
        self.assertEqual(len(roots), 240)
        np.testing.assert_allclose(np.sum(roots ** 2, axis=1), 2.0)
        self.assertTrue(all(is_lattice_vector(r) for r in roots))

    def test_roots_are_one_orbit(self):
        """Test that the seed e8 − e1 generates all roots under the reflections."""
        orbit = orbit_closure(GOSSET_SEED, e8_mirrors().reflections())
        self.assertEqual(as_set(orbit), as_set(e8_roots()))

    def test_membership(self):
        """Test the parity rules of the lattice."""
        cases = [
            (np.eye(8)[0], False),
            (np.eye(8)[0] + np.eye(8)[1], True),
            (np.full(8, 0.5), True),
            (np.r_[np.full(7, 0.5), -0.5], False),
            (np.r_[0.5, np.zeros(7)], False),
        ]
        for x, expected in cases:
            with self.subTest(x=x):
                self.assertEqual(is_lattice_vector(x), expected)


class TestHoles(unittest.TestCase):
    """Tests for hole_neighbors."""

    def test_lattice_point(self):
        """Test that a lattice point is its own unique nearest point."""
        result = hole_neighbors(np.zeros(8))
        self.assertEqual(result.count, 1)
        self.assertAlmostEqual(result.distance, 0.0)

    def test_deep_hole(self):
        """Test the hole e1 with 16 neighbours at distance 1."""
        result = hole_neighbors(np.eye(8)[0])
        self.assertEqual(result.count, 16)
        self.assertAlmostEqual(result.distance, 1.0)

    def test_shallow_hole(self):
        """Test the hole (5, 1, …, 1)/6 with 9 neighbours at distance 2√2/3."""
        result = hole_neighbors(np.r_[5.0, np.ones(7)] / 6.0)
        self.assertEqual(result.count, 9)
        self.assertAlmostEqual(result.distance, 2 * math.sqrt(2) / 3)

    def test_covering_radius(self):
        """Test that arbitrary points find lattice neighbours within distance 1."""
        rng = np.random.default_rng(8)
        for point in rng.uniform(-2.0, 2.0, size=(5, 8)):
            with self.subTest(point=tuple(np.round(point, 3))):
                result = hole_neighbors(point)
                self.assertGreaterEqual(result.count, 1)
                self.assertLessEqual(result.distance, 1.0 + 1e-9)
                for q in result.points:
                    self.assertTrue(is_lattice_vector(q))
                    self.assertAlmostEqual(float(np.linalg.norm(q - point)), result.distance)

    def test_wrong_shape(self):
        """Test that a point outside R^8 is refused."""
        with self.assertRaises(ValidationError):
            hole_neighbors(np.zeros(7))


class TestGosset(unittest.TestCase):
    """Tests for the Gosset polytope."""

    @pytest.mark.slow
    def test_vertices_and_facets(self):
        """Test 240 vertices of valence 56 and 19440 facets of two kinds."""
        polytope = build_421()
        self.assertEqual(polytope.vertex_count, 240)
        self.assertEqual(len(polytope.edges), 6720)
        self.assertTrue(np.all(polytope.valences() == 56))
        self.assertEqual(len(polytope.facets), 19440)
        kinds = {t.vertex_count: t.count for t in polytope.face_types[7]}
        self.assertEqual(kinds, {8: 17280, 14: 2160})
        self.assertAlmostEqual(polytope.edge_length, math.sqrt(2))

    @pytest.mark.large
    def test_f_vector(self):
        """Test the complete f-vector of 4_21."""
        polytope = build_421(ranks=range(8))
        self.assertEqual(tuple(polytope.f_vector()), GOSSET_F_VECTOR)
        self.assertEqual(polytope.euler_characteristic(), 0)


class TestQuaternions(unittest.TestCase):
    """Tests for the binary polyhedral groups."""

    def test_product(self):
        """Test ij = k and ji = −k."""
        i, j, k = np.eye(4)[1:]
        np.testing.assert_allclose(qmul(i, j), k)
        np.testing.assert_allclose(qmul(j, i), -k)

    def test_binary_tetrahedral(self):
        """Test the 24 Hurwitz units."""
        group = binary_tetrahedral()
        self.assertEqual(group.order, 24)
        np.testing.assert_allclose(np.linalg.norm(group.elements, axis=1), 1.0)

    def test_binary_icosahedral(self):
        """Test that I*120 contains T*24."""
        group = binary_icosahedral()
        self.assertEqual(group.order, 120)
        for q in binary_tetrahedral().elements:
            self.assertTrue(group.contains(q))

    def test_wrong_order(self):
        """Test that an unexpected closure order is reported."""
        with self.assertRaises(GeometryError):
            close_group([[0.0, 1.0, 0.0, 0.0]], 10)

    def test_24_cell(self):
        """Test the hull of T*24."""
        polytope = quaternion_polytopes(["24-cell"])["24-cell"]
        self.assertEqual(polytope.f_vector(), [24, 96, 96, 24])
        self.assertIs(polytope.geometry, FormKind.SPHERICAL)

    @pytest.mark.slow
    def test_600_cell(self):
        """Test 600 tetrahedral facets and 12 edges at every vertex."""
        polytope = quaternion_polytopes(["600-cell"])["600-cell"]
        self.assertEqual(polytope.f_vector(), [120, 720, 1200, 600])
        self.assertTrue(np.all(polytope.valences() == 12))
        self.assertTrue(all(len(f) == 4 for f in polytope.facets))

    @pytest.mark.slow
    def test_snub_24_cell(self):
        """Test the 96 vertices and 144 facets of I*120 without T*24."""
        polytope = quaternion_polytopes(["snub 24-cell"])["snub 24-cell"]
        self.assertEqual(polytope.vertex_count, 96)
        sizes = sorted(len(f) for f in polytope.facets)
        self.assertEqual(sizes.count(4), 120)
        self.assertEqual(sizes.count(12), 24)

    def test_unknown_name(self):
        """Test that an unknown polytope name is refused."""
        with self.assertRaises(GeometryError):
            quaternion_polytopes(["tesseract"])


class TestHull(unittest.TestCase):
    """Tests for hull_polytope."""

    def test_cube_merges_coplanar_simplices(self):
        """Test that the square facets of a cube are found whole."""
        cube = np.array(list(itertools.product((-1.0, 1.0), repeat=3)))
        polytope = hull_polytope(cube)
        self.assertEqual(polytope.f_vector(), [8, 12, 6])
        self.assertAlmostEqual(polytope.edge_length, 2.0)

    def test_interior_point(self):
        """Test that a point inside the hull is refused."""
        points = np.vstack([np.eye(3), -np.eye(3), np.zeros((1, 3))])
        with self.assertRaises(GeometryError):
            hull_polytope(points)

    def test_collinear(self):
        """Test that collinear points are refused."""
        with self.assertRaises(ValidationError):
            hull_polytope([[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]])


class TestSeedFamilies(unittest.TestCase):
    """Tests for the seed-vector constructions."""

    def test_seeds(self):
        """Test the A and B seed vectors."""
        np.testing.assert_allclose(a_seed(3, [1]), [0, 1, 1, 1])
        np.testing.assert_allclose(a_seed(3, [1, 3]), [0, 1, 1, 2])
        np.testing.assert_allclose(b_seed(2, [1, 2]), [1, 1 + math.sqrt(2)])
        np.testing.assert_allclose(b_seed(3, [3]), [0, 0, math.sqrt(2)])

    def test_octagon(self):
        """Test that the omnitruncated square is the octagon (±1, ±(1+√2))."""
        polytope = omnitruncated_cube(2)
        r = 1 + math.sqrt(2)
        expected = {(sa * a, sb * b) for a, b in ((1, r), (r, 1))
                    for sa in (1, -1) for sb in (1, -1)}
        self.assertEqual(as_set(polytope.vertices), as_set(expected))
        self.assertAlmostEqual(polytope.edge_length, 2.0)

    def test_permutohedron(self):
        """Test the truncated octahedron from the permutations of (0, 1, 2, 3)."""
        polytope = permutohedron(3)
        self.assertEqual(polytope.f_vector(), [24, 36, 14])
        self.assertEqual(as_set(polytope.vertices),
                         as_set(itertools.permutations(range(4))))
        self.assertAlmostEqual(polytope.edge_length, math.sqrt(2))

    def test_a_family(self):
        """Test that A3 ringed at the middle node is the octahedron."""
        polytope = a_family(3, [2])
        self.assertEqual(polytope.f_vector(), [6, 12, 8])

    def test_b_family(self):
        """Test the cube and octahedron of B3."""
        self.assertEqual(b_family(3, [1]).f_vector(), [8, 12, 6])
        self.assertEqual(b_family(3, [3]).f_vector(), [6, 12, 8])

    def test_demicube(self):
        """Test that the 4-demicube is the 16-cell on even 0/1 vectors."""
        polytope = demicube(4)
        self.assertEqual(polytope.f_vector(), [8, 24, 32, 16])
        expected = [p for p in itertools.product((0, 1), repeat=4) if sum(p) % 2 == 0]
        self.assertEqual(as_set(polytope.vertices), as_set(expected))

    def test_demicube_5(self):
        """Test the f-vector of the 5-demicube."""
        self.assertEqual(demicube(5).f_vector(), [16, 80, 160, 120, 26])

    def test_seed_vector_dispatch(self):
        """Test building the seed-vector polytopes by kind."""
        self.assertEqual(seed_vector_families("permutohedron", 3).f_vector(), [24, 36, 14])
        self.assertEqual(seed_vector_families("demicube", 4).f_vector(), [8, 24, 32, 16])
        self.assertEqual(seed_vector_families("b_seed", 3, rings=[1]).f_vector(), [8, 12, 6])
        self.assertEqual(seed_vector_families("a_seed", 3, rings=[2]).f_vector(), [6, 12, 8])
        with self.assertRaises(ValidationError):
            seed_vector_families("a_seed", 3)
        with self.assertRaises(ValidationError):
            seed_vector_families("snub", 3)

    def test_dimension_limit(self):
        """Test that n beyond the configured bound is refused."""
        with override_settings(max_seed_dimension=3):
            with self.assertRaises(ValidationError):
                permutohedron(4)
        with self.assertRaises(ValidationError):
            demicube(2)

    def test_rings_checked(self):
        """Test that empty or out-of-range rings are refused."""
        with self.assertRaises(ValidationError):
            a_seed(3, [])
        with self.assertRaises(ValidationError):
            b_family(3, [4])


class TestDiagonalSlice(unittest.TestCase):
    """Tests for diagonal_slice_tessellation."""

    def test_triangles(self):
        """Test that n = 2 gives a triangle with its three neighbours."""
        patch = diagonal_slice_tessellation(2, 1)
        self.assertEqual(len(patch), 4)
        self.assertEqual(patch.neighbours(0), [1, 2, 3])
        for c in range(len(patch)):
            cell = patch.cell_polytope(c)
            with self.subTest(cell=c):
                self.assertEqual(cell.vertex_count, 3)
                np.testing.assert_allclose(cell.edge_lengths(), math.sqrt(2), atol=1e-9)

    def test_tetrahedra_and_octahedra(self):
        """Test that n = 3 alternates tetrahedra and octahedra."""
        patch = diagonal_slice_tessellation(3, 2)
        shapes = {patch.cell_polytope(c).vertex_count for c in range(len(patch))}
        self.assertEqual(shapes, {4, 6})
        first = [c for c in patch.cells if c.depth == 1]
        self.assertEqual(len(first), 4)
        self.assertTrue(all(len(c.vertex_ids) == 6 for c in first))
        for c in range(len(patch)):
            with self.subTest(cell=c):
                np.testing.assert_allclose(patch.cell_polytope(c).edge_lengths(),
                                           math.sqrt(2), atol=1e-9)

    def test_rectified_simplices(self):
        """Test that n = 4 has simplex and rectified simplex cells."""
        patch = diagonal_slice_tessellation(4, 1)
        counts = [p.f_vector() for p in patch.prototypes]
        self.assertEqual(counts[0], [5, 10, 10, 5])
        self.assertEqual(counts[1], [10, 30, 30, 10])
        self.assertEqual(len(patch), 6)

    def test_errors(self):
        """Test that small n and negative depth are refused."""
        with self.assertRaises(ValidationError):
            diagonal_slice_tessellation(1, 1)
        with self.assertRaises(ValidationError):
            diagonal_slice_tessellation(3, -1)


if __name__ == '__main__':
    unittest.main()
