"""
Unit tests for polar duals and their hyperbolic realizations.
"""

import math
import unittest

import numpy as np
import pytest

from coxeterkit.core.exceptions import GeometryError, ValidationError
from coxeterkit.diagram import CoxeterDiagram, from_schlafli
from coxeterkit.dual import dual_polytope, hyperbolic_realization, radius_classes, ridge_angles
from coxeterkit.gram import gram_from_diagram, recover_normals
from coxeterkit.wythoff import WythoffBuilder, build, seed_point


def demicube_diagram(n):
    """D_n ringed at the fork leaf n."""
    edges = {(i, i + 1): 3 for i in range(1, n - 1)}
    edges[(n - 2, n)] = 3
    return CoxeterDiagram(n, edges, frozenset({n}))


class TestDualPolytope(unittest.TestCase):
    """Tests for dual_polytope."""

    def test_cube_dual_is_octahedron(self):
        """Test that the f-vector of the dual is reversed."""
        cube = build(from_schlafli([4, 3]))
        dual = dual_polytope(cube)
        self.assertEqual(cube.f_vector(), [8, 12, 6])
        self.assertEqual(dual.f_vector(), [6, 12, 8])
        self.assertEqual(len(dual.radius_classes), 1)

    def test_rhombic_dodecahedron(self):
        """Test the dual of the cuboctahedron: 14 vertices, 12 faces."""
        dual = dual_polytope(build(from_schlafli([3, 4], [2])))
        self.assertEqual(dual.f_vector(), [14, 24, 12])
        self.assertEqual(sorted(len(c.members) for c in dual.radius_classes), [6, 8])
        self.assertTrue(all(len(face) == 4 for face in dual.faces[2]))

    def test_double_dual(self):
        """Test that P** has the face lattice of P."""
        for diagram in (from_schlafli([3, 4], [2]), from_schlafli([3, 3, 3], "rectified"),
                        from_schlafli([5, 3], [1, 2])):
            with self.subTest(diagram=str(diagram)):
                primal = build(diagram)
                twice = dual_polytope(dual_polytope(primal).polytope).polytope
                self.assertEqual(twice.f_vector(), primal.f_vector())
                np.testing.assert_allclose(twice.vertices, primal.vertices, atol=1e-9)
                # Vertex i of P** is dual to facet i of P*, which is dual to vertex i of P.
                for rank in range(primal.rank):
                    self.assertEqual(sorted(tuple(sorted(f)) for f in twice.faces[rank]),
                                     sorted(tuple(sorted(f)) for f in primal.faces[rank]))

    def test_polygon(self):
        """Test the dual of a pentagon."""
        dual = dual_polytope(build(from_schlafli([5])))
        self.assertEqual(dual.f_vector(), [5, 5])
        self.assertEqual(len(dual.faces[2][0]), 5)

    def test_not_spherical(self):
        """Test that a Euclidean cell is refused."""
        with self.assertRaises(ValidationError):
            dual_polytope(build(from_schlafli([4, 4])))

    def test_radius_classes(self):
        """Test grouping of points by norm."""
        points = np.array([[1.0, 0.0], [0.0, 2.0], [0.0, -1.0], [2.0, 0.0]])
        classes = radius_classes(points)
        self.assertEqual([c.members for c in classes], [(1, 3), (0, 2)])
        self.assertAlmostEqual(classes[0].radius, 2.0)


class TestRidgeAngles(unittest.TestCase):
    """Tests for ridge_angles."""

    def test_cube(self):
        """Test that the dual of the octahedron has right ridge angles."""
        angles = ridge_angles(dual_polytope(build(from_schlafli([3, 4]))))
        np.testing.assert_allclose(angles, math.pi / 2, atol=1e-9)

    def test_catalan_solids(self):
        """Test equal ridge angles on duals of uniform polyhedra."""
        for symbols, rings in (([3, 4], [2]), ([4, 3], [1, 2]), ([5, 3], [2]),
                               ([5, 3], [1, 2, 3])):
            with self.subTest(symbols=symbols, rings=rings):
                angles = ridge_angles(dual_polytope(build(from_schlafli(symbols, rings))))
                self.assertLess(float(np.ptp(angles)), 1e-8)

    def test_non_uniform_primal(self):
        """Test that a primal with unequal edges gives unequal ridge angles."""
        diagram = from_schlafli([4, 3], [1, 2])
        mirrors = recover_normals(gram_from_diagram(diagram))
        seed = 0.8 * seed_point(mirrors, [1]).coords + 0.2 * seed_point(mirrors, [2]).coords
        primal = WythoffBuilder(mirrors, [1, 2], diagram, seed=seed).build()
        with self.assertRaises(GeometryError):
            ridge_angles(dual_polytope(primal))


class TestHyperbolicRealization(unittest.TestCase):
    """Tests for hyperbolic_realization."""

    def test_rectified_4_simplex_dual(self):
        """Test the right-angled dual with 5 ideal and 5 real vertices."""
        dual = dual_polytope(build(from_schlafli([3, 3, 3], "rectified")))
        realization = hyperbolic_realization(dual)
        self.assertEqual(len(realization.ideal), 5)
        self.assertEqual(len(realization.real), 5)
        self.assertEqual(len(realization.polytope.facets), 10)
        self.assertTrue(realization.is_right_angled())
        np.testing.assert_allclose(list(realization.angles.values()), math.pi / 2, atol=1e-6)

    def test_ideal_vertex_links_are_cubes(self):
        """Test that six facets meet at every ideal vertex."""
        realization = hyperbolic_realization(
            dual_polytope(build(from_schlafli([3, 3, 3], "rectified"))))
        incidence = realization.polytope.vertex_faces(3)
        for v in realization.ideal:
            self.assertEqual(len(incidence[v]), 6)

    def test_real_vertices_on_hyperboloid(self):
        """Test that real vertices are normalized onto the hyperboloid."""
        realization = hyperbolic_realization(
            dual_polytope(build(from_schlafli([3, 3, 3], "rectified"))))
        points = realization.polytope.vertices[realization.real]
        q = -points[:, 0] ** 2 + np.sum(points[:, 1:] ** 2, axis=1)
        np.testing.assert_allclose(q, -1.0, atol=1e-9)

    @pytest.mark.large
    def test_demicube_5_dual(self):
        """Test the dual of the 5-demicube: 10 ideal and 16 real vertices."""
        realization = hyperbolic_realization(dual_polytope(build(demicube_diagram(5))))
        self.assertEqual(len(realization.ideal), 10)
        self.assertEqual(len(realization.real), 16)
        self.assertEqual(len(realization.polytope.facets), 16)
        self.assertTrue(realization.is_right_angled())


if __name__ == '__main__':
    unittest.main()
