"""
Unit tests for Gram matrices, signatures and mirror recovery.
"""

import math
import os
import tempfile
import unittest

import numpy as np

from coxeterkit.core.exceptions import RealizationError, ValidationError
from coxeterkit.diagram import EdgeMark, from_schlafli, load_catalog, parse_diagram
from coxeterkit.forms import FormKind
from coxeterkit.gram import (RelationKind, decompose, diagram_from_gram, gram_from_diagram,
                             ideal_vertex_subsets, pair_relation, perron, read_gram,
                             recover_normals, signature, spherical_subsets,
                             vinberg_realizable, write_gram)

EUCLIDEAN_TRIANGLE = np.array([[1, -0.5, -0.5], [-0.5, 1, -0.5], [-0.5, -0.5, 1]])


def right_angled_pentagon_gram():
    """Gram matrix of the regular right-angled hyperbolic pentagon."""
    # Sides i and i+2 have side i+1 as common perpendicular, of length l with cosh l = φ.
    g = -(1 + math.sqrt(5)) / 2
    G = np.eye(5)
    for i in range(5):
        G[i, (i + 2) % 5] = G[(i + 2) % 5, i] = g
    return G


class TestGramConstruction(unittest.TestCase):
    """Tests for gram_from_diagram and diagram_from_gram."""

    def test_a2(self):
        """Test the A2 Gram matrix."""
        np.testing.assert_allclose(gram_from_diagram(from_schlafli([3])),
                                   [[1, -0.5], [-0.5, 1]])

    def test_parallel_and_right_angle(self):
        """Test thick edges and absent edges."""
        np.testing.assert_allclose(gram_from_diagram(parse_diagram("nodes 2; 1-2:inf")),
                                   [[1, -1], [-1, 1]])
        np.testing.assert_allclose(gram_from_diagram(parse_diagram("nodes 2")), np.eye(2))

    def test_diagram_round_trip(self):
        """Test reading a diagram back from its Gram matrix."""
        d = parse_diagram("nodes 4; 1-2:5; 2-3:inf; 3-4:d=0.75; 1-4:7")
        back = diagram_from_gram(gram_from_diagram(d))
        self.assertEqual(back.edges[(1, 2)], EdgeMark.finite(5))
        self.assertEqual(back.edges[(1, 4)], EdgeMark.finite(7))
        self.assertEqual(back.edges[(2, 3)], EdgeMark.parallel())
        self.assertAlmostEqual(back.edges[(3, 4)].value, 0.75)

    def test_non_coxeter_entry(self):
        """Test that an angle which is not π/m is rejected."""
        with self.assertRaises(ValidationError):
            diagram_from_gram([[1, -0.3], [-0.3, 1]])


class TestSignature(unittest.TestCase):
    """Tests for the signature and its invariance."""

    def test_examples(self):
        """Test identity, the Euclidean triangle and {4,3,5}."""
        self.assertEqual(signature(np.eye(3)).as_tuple(), (3, 0, 0))
        self.assertEqual(signature(EUCLIDEAN_TRIANGLE).as_tuple(), (2, 0, 1))
        G = gram_from_diagram(from_schlafli([4, 3, 5]))
        self.assertEqual(signature(G).as_tuple(), (3, 1, 0))

    def test_permutation_invariance(self):
        """Test that simultaneous row/column permutation keeps the signature."""
        rng = np.random.default_rng(7)
        matrices = [EUCLIDEAN_TRIANGLE, gram_from_diagram(from_schlafli([4, 3, 5])),
                    gram_from_diagram(from_schlafli([3, 4, 3, 3]))]
        for G in matrices:
            expected = signature(G)
            for _ in range(50):
                p = rng.permutation(G.shape[0])
                self.assertEqual(signature(G[np.ix_(p, p)]), expected)

    def test_catalog_signatures(self):
        """Test spherical (k,0,0) and Euclidean (k−1,0,1) catalog members."""
        for geometry, offset in (("spherical", (0, 0, 0)), ("euclidean", (-1, 0, 1))):
            for entry in load_catalog(geometry):
                for label, d in entry.members(max_nodes=8):
                    k = d.node_count
                    with self.subTest(label=str(label)):
                        self.assertEqual(signature(gram_from_diagram(d)).as_tuple(),
                                         (k + offset[0], offset[1], offset[2]))


class TestStructure(unittest.TestCase):
    """Tests for decompose, perron and pair_relation."""

    def test_decompose(self):
        """Test block detection."""
        self.assertEqual(decompose(np.eye(2)), [[0], [1]])
        self.assertEqual(decompose(gram_from_diagram(from_schlafli([3]))), [[0, 1]])
        G = gram_from_diagram(parse_diagram("nodes 4; 1-3; 2-4:5"))
        self.assertEqual(decompose(G), [[0, 2], [1, 3]])

    def test_perron(self):
        """Test the smallest eigenpair of A2 and the Euclidean triangle."""
        lam, v = perron(gram_from_diagram(from_schlafli([3])))
        self.assertAlmostEqual(lam, 0.5)
        np.testing.assert_allclose(v, [1 / math.sqrt(2)] * 2)
        lam, v = perron(EUCLIDEAN_TRIANGLE)
        self.assertAlmostEqual(lam, 0.0, places=12)
        np.testing.assert_allclose(v, [1 / math.sqrt(3)] * 3)

    def test_perron_positive_for_indecomposable(self):
        """Test strictly positive eigenvectors on catalog diagrams."""
        for symbols in ([5, 3, 3], [3, 3, 6], [4, 3, 5], [3, 4, 3, 3]):
            _, v = perron(gram_from_diagram(from_schlafli(symbols)))
            self.assertTrue(np.all(v > 1e-9))

    def test_perron_errors(self):
        """Test decomposable and positive inputs."""
        with self.assertRaises(ValidationError):
            perron(np.eye(2))
        with self.assertRaises(ValidationError):
            perron([[1, 0.5], [0.5, 1]])

    def test_pair_relation(self):
        """Test the incident/parallel/ultraparallel trichotomy."""
        r = pair_relation(-0.5)
        self.assertIs(r.kind, RelationKind.INCIDENT)
        self.assertAlmostEqual(r.value, math.pi / 3)
        self.assertIs(pair_relation(-1.0).kind, RelationKind.PARALLEL)
        r = pair_relation(-math.cosh(2.0))
        self.assertIs(r.kind, RelationKind.ULTRAPARALLEL)
        self.assertAlmostEqual(r.value, 2.0)
        with self.assertRaises(ValidationError):
            pair_relation(1.5)


class TestVinberg(unittest.TestCase):
    """Tests for the Vinberg realization test."""

    def test_compact_simplex(self):
        """Test that {4,3,5} is realizable and compact."""
        result = vinberg_realizable(gram_from_diagram(from_schlafli([4, 3, 5])), 3)
        self.assertTrue(result.realizable)
        self.assertEqual(result.volume, "compact")
        self.assertEqual(str(result), "Realizable(compact)")

    def test_finite_volume_simplex(self):
        """Test that {3,3,6} has one ideal vertex."""
        result = vinberg_realizable(gram_from_diagram(from_schlafli([3, 3, 6])), 3)
        self.assertEqual(result.volume, "finite_volume")
        self.assertEqual(result.ideal_vertices, [(1, 2, 3)])

    def test_signature_failure(self):
        """Test that the identity cannot be a hyperbolic Gram matrix."""
        result = vinberg_realizable(np.eye(3), 3)
        self.assertFalse(result.realizable)
        self.assertEqual(result.reason, "signature")

    def test_right_angled_pentagon(self):
        """Test a non-simplex compact polygon."""
        G = right_angled_pentagon_gram()
        self.assertEqual(signature(G).as_tuple(), (2, 1, 2))
        result = vinberg_realizable(G, 2)
        self.assertTrue(result.realizable)
        self.assertEqual(result.volume, "compact")
        self.assertEqual(len([s for s in spherical_subsets(G) if len(s) == 2]), 5)

    def test_positive_entry(self):
        """Test that obtuse Gram matrices are refused."""
        with self.assertRaises(ValidationError):
            vinberg_realizable([[1, 0.5], [0.5, 1]], 1)

    def test_ideal_vertices_of_ideal_triangle(self):
        """Test the three ideal vertices of the ideal triangle."""
        G = gram_from_diagram(parse_diagram("nodes 3; 1-2:inf; 2-3:inf; 1-3:inf"))
        self.assertEqual(ideal_vertex_subsets(G, 2), [(0, 1), (0, 2), (1, 2)])

    def test_all_vertices_ideal(self):
        """Test polyhedra without real vertices: the ideal triangle and (3,3,4,3,3,4)."""
        triangle = gram_from_diagram(parse_diagram("nodes 3; 1-2:inf; 2-3:inf; 1-3:inf"))
        hexagon = gram_from_diagram(parse_diagram(
            "nodes 6; 1-2; 2-3; 3-4:4; 4-5; 5-6; 1-6:4"))
        for G, n, ideal_count in ((triangle, 2, 3), (hexagon, 5, 6)):
            with self.subTest(n=n):
                self.assertFalse([s for s in spherical_subsets(G) if len(s) == n])
                result = vinberg_realizable(G, n)
                self.assertTrue(result.realizable)
                self.assertEqual(result.volume, "finite_volume")
                self.assertEqual(len(result.ideal_vertices), ideal_count)

    def test_condition_one_failure(self):
        """Test a Lorentzian matrix with neither a vertex nor an ideal vertex."""
        G = np.array([[1.0, -2.0, -2.0], [-2.0, 1.0, -2.0], [-2.0, -2.0, 1.0]])
        self.assertEqual(signature(G).as_tuple(), (2, 1, 0))
        result = vinberg_realizable(G, 2)
        self.assertFalse(result.realizable)
        self.assertEqual(result.reason, "condition 1")


class TestRecoverNormals(unittest.TestCase):
    """Tests for mirror recovery."""

    def test_spherical_identity(self):
        """Test orthonormal normals on the circle."""
        system = recover_normals(np.eye(2), 1)
        self.assertIs(system.form.kind, FormKind.SPHERICAL)
        self.assertAlmostEqual(float(system.normals[0] @ system.normals[1]), 0.0)

    def test_catalog_round_trip(self):
        """Test gram(recover_normals(G)) = G for catalog simplices."""
        diagrams = [d for geometry in ("spherical", "euclidean", "hyperbolic_compact",
                                       "hyperbolic_noncompact")
                    for entry in load_catalog(geometry)
                    for _, d in entry.members(max_nodes=6)]
        for d in diagrams:
            G = gram_from_diagram(d)
            with self.subTest(diagram=str(d)):
                system = recover_normals(G)
                np.testing.assert_allclose(system.gram(), G, atol=1e-8)

    def test_lorentzian_orientation(self):
        """Test that {4,3,5} normals admit an interior point on the upper sheet."""
        system = recover_normals(gram_from_diagram(from_schlafli([4, 3, 5])), 3)
        self.assertIs(system.form.kind, FormKind.LORENTZIAN)
        x = system.interior_point
        self.assertGreater(x[0], 0)
        self.assertAlmostEqual(system.form(x, x), -1.0)
        self.assertTrue(np.all(system.values(x) < 0))

    def test_euclidean_offsets(self):
        """Test offsets and interior point of a Euclidean simplex."""
        system = recover_normals(gram_from_diagram(from_schlafli([4, 4])))
        self.assertIs(system.form.kind, FormKind.EUCLIDEAN)
        np.testing.assert_allclose(system.offsets, 1.0)
        self.assertTrue(np.all(system.values(system.interior_point) < 0))

    def test_inconsistent_signature(self):
        """Test that two negative eigenvalues cannot be realized."""
        G = np.array([[1, -2, 0, 0], [-2, 1, 0, 0], [0, 0, 1, -2], [0, 0, -2, 1]])
        with self.assertRaises(RealizationError):
            recover_normals(G)


class TestGramIO(unittest.TestCase):
    """Tests for text and JSON import/export."""

    def setUp(self):
        """Create a temporary directory."""
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        """Remove the temporary directory."""
        self.tmp.cleanup()

    def test_text_and_json(self):
        """Test both formats preserve the matrix."""
        G = gram_from_diagram(from_schlafli([5, 3]))
        for name in ("g.txt", "g.json"):
            path = os.path.join(self.tmp.name, name)
            with self.subTest(name=name):
                write_gram(G, path)
                np.testing.assert_array_equal(read_gram(path), G)

    def test_bad_text(self):
        """Test that ragged rows are rejected."""
        path = os.path.join(self.tmp.name, "bad.txt")
        with open(path, "w", encoding="utf-8") as handle:
            handle.write("1 0\n0\n")
        with self.assertRaises(ValidationError):
            read_gram(path)


if __name__ == '__main__':
    unittest.main()
