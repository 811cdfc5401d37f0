"""
Unit tests for the Wythoff construction: seeds, orbits, built polytopes,
group orders and symmetry classes.
"""

import dataclasses
import itertools
import math
import unittest

import numpy as np
import pytest

from coxeterkit.core.exceptions import (GeometryError, OrbitCapExceeded, RealizationError,
                                        ValidationError)
from coxeterkit.diagram import CoxeterDiagram, from_schlafli, load_catalog
from coxeterkit.faces import enumerate_faces, simplex_vertices
from coxeterkit.forms import FormKind
from coxeterkit.gram import gram_from_diagram, recover_normals
from coxeterkit.wythoff import (SymmetryClass, WythoffBuilder, build, chain_count,
                                coxeter_relations, dihedral_angles, facet_pairs, group_order,
                                orbit_closure, predicted_face_counts, seed_point,
                                symmetry_class)


def demicube_diagram(n):
    """D_n ringed at the fork leaf n: the n-demicube."""
    edges = {(i, i + 1): 3 for i in range(1, n - 1)}
    edges[(n - 2, n)] = 3
    return CoxeterDiagram(n, edges, frozenset({n}))


def mirrors_of(diagram):
    return recover_normals(gram_from_diagram(diagram))


class TestSeedPoint(unittest.TestCase):
    """Tests for seed_point."""

    def test_single_ring_is_simplex_vertex(self):
        """Test that ringing node 1 gives the vertex opposite facet 1."""
        G = gram_from_diagram(from_schlafli([4, 3, 5]))
        system = recover_normals(G)
        vertices = simplex_vertices(system, enumerate_faces(G, 3))
        # Lexicographically last facet set (1, 2, 3) is the vertex opposite facet 0.
        np.testing.assert_allclose(seed_point(system, [1]).coords, vertices[-1].coords,
                                   atol=1e-9)

    def test_equidistant_in_euclidean_triangle(self):
        """Test equal distances to the sides of the (π/2, π/3, π/6) triangle."""
        system = mirrors_of(from_schlafli([6, 3]))
        values = system.values(seed_point(system, [1, 2, 3]).coords)
        np.testing.assert_allclose(values, values[0], atol=1e-12)
        self.assertLess(values[0], 0.0)

    def test_unringed_mirrors_contain_seed(self):
        """Test that the seed lies on every unringed mirror."""
        system = mirrors_of(from_schlafli([3, 3, 3]))
        values = system.values(seed_point(system, [2]).coords)
        np.testing.assert_allclose(values[[0, 2, 3]], 0.0, atol=1e-12)
        self.assertLess(values[1], 0.0)

    def test_ideal_seed(self):
        """Test the ideal seed of {3,3,6} ringed opposite its ideal vertex."""
        system = mirrors_of(from_schlafli([3, 3, 6]))
        seed = seed_point(system, [1])
        self.assertTrue(seed.is_ideal)
        self.assertAlmostEqual(seed.coords[0], 1.0)

    def test_errors(self):
        """Test empty and out-of-range rings."""
        system = mirrors_of(from_schlafli([4, 3]))
        with self.assertRaises(ValidationError):
            seed_point(system, [])
        with self.assertRaises(ValidationError):
            seed_point(system, [4])


class TestOrbitClosure(unittest.TestCase):
    """Tests for orbit_closure."""

    def test_octahedron_vertices(self):
        """Test the 6 vertices ±eᵢ of {3,4}."""
        system = mirrors_of(from_schlafli([3, 4]))
        orbit = orbit_closure(seed_point(system, [1]).coords, system.reflections())
        self.assertEqual(len(orbit), 6)
        distances = np.linalg.norm(orbit[:, None, :] - orbit[None, :, :], axis=2)
        off_diagonal = distances[~np.eye(6, dtype=bool)]
        self.assertTrue(np.all(np.isclose(off_diagonal, math.sqrt(2))
                               | np.isclose(off_diagonal, 2.0)))

    def test_24_cell(self):
        """Test the 24 vertices of {3,4,3}."""
        system = mirrors_of(from_schlafli([3, 4, 3]))
        orbit = orbit_closure(seed_point(system, [1]).coords, system.reflections())
        self.assertEqual(len(orbit), 24)

    def test_generator_order_independence(self):
        """Test that permuting the generators gives the same ordered orbit."""
        system = mirrors_of(from_schlafli([5, 3]))
        seed = seed_point(system, [1, 2]).coords
        gens = system.reflections()
        expected = orbit_closure(seed, gens)
        self.assertEqual(len(expected), 60)
        for perm in itertools.permutations(range(3)):
            with self.subTest(perm=perm):
                result = orbit_closure(seed, [gens[i] for i in perm])
                np.testing.assert_allclose(result, expected, atol=1e-12)

    def test_cap_exceeded(self):
        """Test that an infinite Euclidean orbit hits the cap."""
        system = mirrors_of(from_schlafli([4, 4]))
        seed = seed_point(system, [1]).coords
        with self.assertRaises(OrbitCapExceeded) as ctx:
            orbit_closure(seed, system.reflections(), cap=50)
        self.assertEqual(ctx.exception.cap, 50)
        self.assertGreater(ctx.exception.count, 50)

    @pytest.mark.slow
    def test_omnitruncated_h4_vertices(self):
        """Test the 14400 vertices of the omnitruncated 120-cell."""
        system = mirrors_of(from_schlafli([5, 3, 3]))
        orbit = orbit_closure(seed_point(system, [1, 2, 3, 4]).coords, system.reflections())
        self.assertEqual(len(orbit), 14400)


class TestBuild(unittest.TestCase):
    """Tests for build and WythoffBuilder."""

    def test_octahedron(self):
        """Test the f-vector (6, 12, 8) of {3,4}."""
        p = build(from_schlafli([3, 4]))
        self.assertEqual(p.f_vector(), [6, 12, 8])
        self.assertEqual(p.euler_characteristic(), 2)
        self.assertIs(p.geometry, FormKind.SPHERICAL)
        self.assertTrue(all(len(face) == 3 for face in p.facets))

    def test_24_cell(self):
        """Test 24 octahedral facets and cubic vertex links of {3,4,3}."""
        p = build(from_schlafli([3, 4, 3]))
        self.assertEqual(p.vertex_count, 24)
        self.assertEqual(len(p.facets), 24)
        self.assertTrue(all(len(facet) == 6 for facet in p.facets))
        # The cube as vertex figure has 8 vertices.
        self.assertTrue(np.all(p.valences() == 8))
        self.assertEqual(p.euler_characteristic(), 0)

    def test_rectified_4_simplex(self):
        """Test 10 vertices, 5 octahedra and 5 tetrahedra."""
        p = build(from_schlafli([3, 3, 3], "rectified"))
        self.assertEqual(p.vertex_count, 10)
        sizes = sorted(len(facet) for facet in p.facets)
        self.assertEqual(sizes, [4] * 5 + [6] * 5)
        self.assertEqual({t.vertex_count for t in p.face_types[3]}, {4, 6})

    def test_polygon(self):
        """Test that a polygon keeps its boundary cycle."""
        p = build(from_schlafli([5]))
        self.assertEqual(p.f_vector(), [5, 5])
        cycle = p.faces[2][0]
        edges = {frozenset(e) for e in p.edges}
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            self.assertIn(frozenset((a, b)), edges)

    def test_catalog_builds(self):
        """Test Euler characteristic, equal edges and predicted face counts."""
        for symbols in ([3, 3], [4, 3], [5, 3], [3, 3, 3], [4, 3, 3]):
            k = len(symbols) + 1
            for size in range(1, k + 1):
                for rings in itertools.combinations(range(1, k + 1), size):
                    diagram = from_schlafli(symbols, rings)
                    with self.subTest(symbols=symbols, rings=rings):
                        p = build(diagram)
                        self.assertEqual(p.euler_characteristic(), 1 - (-1) ** p.rank)
                        self.assertIsNotNone(p.edge_length)
                        np.testing.assert_allclose(p.edge_lengths(), p.edge_length, atol=1e-8)
                        predicted = predicted_face_counts(diagram)
                        self.assertEqual(p.f_vector(), [predicted[h] for h in range(p.rank)])

    def test_unringed_component(self):
        """Test that unringed components do not enlarge the polytope."""
        diagram = CoxeterDiagram(3, {(1, 2): 5}, frozenset({1}))
        p = build(diagram)
        self.assertEqual(p.rank, 2)
        self.assertEqual(p.vertex_count, 5)

    def test_face_ranks_subset(self):
        """Test that requesting facets only still yields vertices."""
        p = build(from_schlafli([4, 3, 3]), ranks=[3])
        self.assertEqual(p.vertex_count, 16)
        self.assertEqual(len(p.faces[3]), 8)

    def test_euclidean_base_cell(self):
        """Test the square cell of {4,4}."""
        p = build(from_schlafli([4, 4]))
        self.assertIs(p.geometry, FormKind.EUCLIDEAN)
        self.assertEqual(p.f_vector(), [4, 4])

    def test_hyperbolic_cell_with_ideal_vertices(self):
        """Test the ideal tetrahedron cell of {3,3,6}."""
        p = build(from_schlafli([3, 3, 6]))
        self.assertEqual(p.f_vector(), [4, 6, 4])
        self.assertTrue(np.all(p.ideal))
        self.assertFalse(p.is_compact)

    def test_infinite_cell_refused(self):
        """Test that two rings on a non-compact simplex are refused."""
        with self.assertRaises(RealizationError):
            build(from_schlafli([3, 3, 6], [1, 2]))

    def test_no_rings(self):
        """Test that a ringless diagram is refused."""
        with self.assertRaises(ValidationError):
            build(CoxeterDiagram(2, {(1, 2): 3}))

    def test_explicit_seed_keeps_scale(self):
        """Test that an explicit spherical seed is not rescaled."""
        diagram = from_schlafli([3, 4])
        mirrors = mirrors_of(diagram)
        seed = 3.0 * seed_point(mirrors, [1]).coords
        p = WythoffBuilder(mirrors, [1], diagram, seed=seed).build()
        np.testing.assert_allclose(np.linalg.norm(p.vertices, axis=1), 3.0)

    @pytest.mark.large
    def test_omnitruncated_h4_faces(self):
        """Test the face counts of the omnitruncated 120-cell."""
        diagram = from_schlafli([5, 3, 3], "omnitruncated")
        p = build(diagram)
        self.assertEqual(p.vertex_count, 14400)
        predicted = predicted_face_counts(diagram)
        self.assertEqual(p.f_vector(), [predicted[h] for h in range(4)])


class TestGroups(unittest.TestCase):
    """Tests for group orders and Coxeter relations."""

    def test_group_orders(self):
        """Test orders of finite reflection groups."""
        cases = {
            (3, 3): 24,
            (4, 3): 48,
            (5, 3): 120,
            (3, 4, 3): 1152,
            (5, 3, 3): 14400,
            (7,): 14,
        }
        for symbols, order in cases.items():
            with self.subTest(symbols=symbols):
                self.assertEqual(group_order(from_schlafli(list(symbols))), order)
        self.assertEqual(group_order(demicube_diagram(4)), 192)
        self.assertEqual(group_order(demicube_diagram(5)), 1920)

    def test_e6(self):
        """Test the order 51840 of E6."""
        edges = {(i, i + 1): 3 for i in range(1, 5)}
        edges[(3, 6)] = 3
        self.assertEqual(group_order(CoxeterDiagram(6, edges)), 51840)

    def test_reducible(self):
        """Test that orders of components multiply."""
        self.assertEqual(group_order(CoxeterDiagram(3, {(1, 2): 5})), 20)
        self.assertEqual(group_order(CoxeterDiagram(2)), 4)

    def test_infinite(self):
        """Test Euclidean and hyperbolic groups."""
        self.assertEqual(group_order(from_schlafli([4, 4])), math.inf)
        self.assertEqual(group_order(from_schlafli([4, 3, 5])), math.inf)

    def test_predicted_counts_need_finite_group(self):
        """Test that face prediction refuses infinite groups."""
        with self.assertRaises(GeometryError):
            predicted_face_counts(from_schlafli([4, 4]))

    def test_demicube_predictions(self):
        """Test the 5-demicube: 16 vertices, 80 edges, 10 + 16 facets."""
        counts = predicted_face_counts(demicube_diagram(5))
        self.assertEqual(counts[0], 16)
        self.assertEqual(counts[1], 80)
        self.assertEqual(counts[4], 26)

    def test_relations_on_catalogs(self):
        """Test (rᵢrⱼ)^mᵢⱼ = 1 on catalog diagrams of all geometries."""
        for geometry in ("spherical", "euclidean", "hyperbolic_compact",
                         "hyperbolic_noncompact"):
            for entry in load_catalog(geometry):
                for label, diagram in entry.members(max_nodes=5):
                    with self.subTest(label=str(label)):
                        residuals = coxeter_relations(mirrors_of(diagram), diagram)
                        for pair, residual in residuals.items():
                            self.assertLess(residual, 1e-8, pair)

    def test_relation_keys(self):
        """Test that every pair of nodes of finite order is checked."""
        diagram = from_schlafli([4, 3])
        residuals = coxeter_relations(mirrors_of(diagram), diagram)
        self.assertEqual(sorted(residuals), [(1, 2), (1, 3), (2, 3)])


class TestDihedralAngles(unittest.TestCase):
    """Tests for dihedral_angles."""

    def check_angles(self, polytope, expected):
        angles = list(dihedral_angles(polytope).values())
        self.assertTrue(angles)
        np.testing.assert_allclose(angles, expected, atol=1e-9)

    def test_regular_polytopes(self):
        """Test the cube, the 4-cross polytope and the 24-cell."""
        self.check_angles(build(from_schlafli([4, 3])), math.pi / 2)
        self.check_angles(build(from_schlafli([3, 3, 4])), 2 * math.pi / 3)
        self.check_angles(build(from_schlafli([3, 4, 3])), 2 * math.pi / 3)

    def test_rotated_and_scaled_24_cell(self):
        """Test that rounding noise in a turned, scaled 24-cell keeps every facet normal."""
        cell24 = build(from_schlafli([3, 4, 3]))
        q, _ = np.linalg.qr(np.random.default_rng(3).normal(size=(4, 4)))
        for scale in (1.0, 1e3):
            with self.subTest(scale=scale):
                turned = dataclasses.replace(cell24, vertices=scale * cell24.vertices @ q)
                self.assertEqual(len(facet_pairs(turned)), 96)
                self.check_angles(turned, 2 * math.pi / 3)

    def test_hyperbolic_cube(self):
        """Test the cube cell of {4,3,5} with dihedral angle 2π/5."""
        self.check_angles(build(from_schlafli([4, 3, 5])), 2 * math.pi / 5)

    def test_ideal_tetrahedron(self):
        """Test the regular ideal tetrahedron cell of {3,3,6}."""
        self.check_angles(build(from_schlafli([3, 3, 6])), math.pi / 3)

    def test_euclidean_cube_cell(self):
        """Test the cube cell of the cubic tessellation."""
        self.check_angles(build(from_schlafli([4, 3, 4])), math.pi / 2)

    def test_unringed_component(self):
        """Test a pentagon lying in a plane of the ambient space."""
        p = build(CoxeterDiagram(3, {(1, 2): 5}, frozenset({1})))
        self.check_angles(p, 3 * math.pi / 5)


class TestSymmetryClass(unittest.TestCase):
    """Tests for chain_count and symmetry_class."""

    def test_chain_count(self):
        """Test chain counts of linear diagrams."""
        self.assertEqual(chain_count(from_schlafli([4, 3])), 1)
        self.assertGreater(chain_count(from_schlafli([3, 3, 3], "rectified")), 1)

    def test_regular(self):
        """Test the cube."""
        p = build(from_schlafli([4, 3]))
        self.assertIs(symmetry_class(p), SymmetryClass.REGULAR)

    def test_sixteen_cell_from_branched_diagram(self):
        """Test that D4 ringed at a leaf is recognized as the regular 16-cell."""
        p = build(demicube_diagram(4))
        self.assertEqual(p.f_vector(), [8, 24, 32, 16])
        self.assertIs(symmetry_class(p), SymmetryClass.REGULAR)

    def test_semiregular(self):
        """Test the rectified 4-simplex, the cuboctahedron and the 5-demicube."""
        for diagram in (from_schlafli([3, 3, 3], "rectified"), from_schlafli([3, 4], [2]),
                        demicube_diagram(5)):
            with self.subTest(diagram=str(diagram)):
                self.assertIs(symmetry_class(build(diagram)), SymmetryClass.SEMIREGULAR)

    def test_uniform_demicube(self):
        """Test that the 6-demicube is uniform only."""
        p = build(demicube_diagram(6))
        self.assertEqual(p.vertex_count, 32)
        self.assertIs(symmetry_class(p), SymmetryClass.UNIFORM)

    def test_uniform_truncated(self):
        """Test the truncated tetrahedron: hexagons are regular, so semiregular."""
        p = build(from_schlafli([3, 3], "truncated"))
        self.assertIs(symmetry_class(p), SymmetryClass.SEMIREGULAR)
        p = build(from_schlafli([3, 3, 3], "truncated"))
        self.assertIs(symmetry_class(p), SymmetryClass.UNIFORM)

    def test_unequal_edges(self):
        """Test that a seed off the equidistant point gives no symmetry class."""
        diagram = from_schlafli([4, 3], [1, 2])
        mirrors = mirrors_of(diagram)
        seed = 0.8 * seed_point(mirrors, [1]).coords + 0.2 * seed_point(mirrors, [2]).coords
        p = WythoffBuilder(mirrors, [1, 2], diagram, seed=seed).build()
        self.assertIsNone(p.edge_length)
        self.assertIs(symmetry_class(p), SymmetryClass.NONE)


if __name__ == '__main__':
    unittest.main()
