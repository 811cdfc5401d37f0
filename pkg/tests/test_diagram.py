"""
Unit tests for the Coxeter diagram model, notation and Schläfli symbols.
"""

import math
import unittest

from coxeterkit.core.exceptions import DiagramSyntaxError, ValidationError
from coxeterkit.diagram import (CoxeterDiagram, EdgeMark, MarkKind, from_schlafli,
                                parse_diagram, parse_rings, parse_schlafli, render,
                                schlafli_of, subdiagrams)


class TestEdgeMark(unittest.TestCase):
    """Tests for edge decorations."""

    def test_finite_mark(self):
        """Test order and Gram entry of a finite mark."""
        mark = EdgeMark.finite(3)
        self.assertEqual(mark.order, 3)
        self.assertAlmostEqual(mark.gram_entry, -0.5)

    def test_parallel_and_ultraparallel(self):
        """Test thick and dashed edges."""
        self.assertEqual(EdgeMark.parallel().gram_entry, -1.0)
        self.assertEqual(EdgeMark.parallel().order, math.inf)
        self.assertAlmostEqual(EdgeMark.ultraparallel(2.0).gram_entry, -math.cosh(2.0))

    def test_invalid_marks(self):
        """Test that marks below 3 and non-positive distances are rejected."""
        for make in (lambda: EdgeMark.finite(2), lambda: EdgeMark.finite(math.inf),
                     lambda: EdgeMark.ultraparallel(0.0),
                     lambda: EdgeMark.ultraparallel(-1.0)):
            with self.subTest(make=make):
                with self.assertRaises(ValidationError):
                    make()

    def test_from_order(self):
        """Test that order 2 means no edge."""
        self.assertIsNone(EdgeMark.from_order(2))
        self.assertEqual(EdgeMark.from_order(math.inf), EdgeMark.parallel())
        self.assertEqual(EdgeMark.from_order(5), EdgeMark.finite(5))


class TestParseDiagram(unittest.TestCase):
    """Tests for the diagram text notation."""

    def test_marks_and_implicit_right_angles(self):
        """Test 'nodes 3; 1-2:5; 2-3'."""
        d = parse_diagram("nodes 3; 1-2:5; 2-3")
        self.assertEqual(d.node_count, 3)
        self.assertEqual(d.order(1, 2), 5)
        self.assertEqual(d.order(2, 3), 3)
        self.assertEqual(d.order(1, 3), 2)

    def test_parallel_edge(self):
        """Test the inf mark."""
        d = parse_diagram("nodes 2; 1-2:inf")
        self.assertIs(d.mark(1, 2).kind, MarkKind.PARALLEL)

    def test_ultraparallel_edge_and_ring(self):
        """Test a dashed edge with a ringed node."""
        d = parse_diagram("nodes 2; 1-2:d=0.5; ring 1")
        self.assertEqual(d.mark(1, 2), EdgeMark.ultraparallel(0.5))
        self.assertEqual(d.rings, frozenset({1}))

    def test_newlines_and_comments(self):
        """Test multi-line input with comments."""
        d = parse_diagram("nodes 4  # a path\n1-2\n2-3:4\n3-4\nring 1 4\n")
        self.assertEqual(d.rings, frozenset({1, 4}))
        self.assertEqual(d.order(2, 3), 4)

    def test_errors_carry_positions(self):
        """Test syntax errors with line and column."""
        cases = {
            "nodes 3; 1-2:2": (1, 14),
            "nodes 3\n1-4": (2, 3),
            "nodes 3; 1-2; 2-1": (1, 15),
            "nodes 3; nodes 4": (1, 10),
            "nodes 2; 1-2:d=0": (1, 16),
            "nodes 2; 1?2": (1, 11),
        }
        for text, (line, column) in cases.items():
            with self.subTest(text=text):
                with self.assertRaises(DiagramSyntaxError) as ctx:
                    parse_diagram(text)
                self.assertEqual((ctx.exception.line, ctx.exception.column), (line, column))

    def test_missing_nodes_statement(self):
        """Test that the node count is required."""
        with self.assertRaises(DiagramSyntaxError):
            parse_diagram("1-2")

    def test_render_round_trip(self):
        """Test that rendered text parses back to the same diagram."""
        diagrams = [
            parse_diagram("nodes 3; 1-2:5; 2-3"),
            parse_diagram("nodes 4; 1-2:inf; 2-3; 3-4:d=0.25; 1-4:7; ring 2 3"),
            from_schlafli([3, 4, 3], "omnitruncated"),
            CoxeterDiagram(1),
        ]
        for d in diagrams:
            with self.subTest(diagram=render(d)):
                self.assertEqual(parse_diagram(render(d)), d)

    def test_render_format(self):
        """Test the rendered text of a small diagram."""
        d = parse_diagram("nodes 3; 2-3:4; 1-2; ring 1")
        self.assertEqual(render(d), "nodes 3; 1-2; 2-3:4; ring 1")


class TestSchlafli(unittest.TestCase):
    """Tests for Schläfli symbols."""

    def test_cube(self):
        """Test that {4,3} is a 3-node path ringed at node 1."""
        d = from_schlafli([4, 3])
        self.assertEqual(d.node_count, 3)
        self.assertEqual((d.order(1, 2), d.order(2, 3)), (4, 3))
        self.assertEqual(d.rings, frozenset({1}))
        self.assertEqual(schlafli_of(d), (4, 3))

    def test_triangle_and_tessellation(self):
        """Test {3} and {4,3,4}."""
        self.assertEqual(from_schlafli([3]).node_count, 2)
        self.assertEqual(from_schlafli([4, 3, 4]).node_count, 4)

    def test_named_ring_specs(self):
        """Test the named ring specifications."""
        expected = {"regular": {1}, "rectified": {2}, "truncated": {1, 2},
                    "cantellated": {1, 3}, "omnitruncated": {1, 2, 3, 4}}
        for name, rings in expected.items():
            with self.subTest(name=name):
                self.assertEqual(from_schlafli([3, 3, 3], name).rings, frozenset(rings))

    def test_invalid_symbols(self):
        """Test entries below 3 and bad rings."""
        with self.assertRaises(ValidationError):
            from_schlafli([2, 3])
        with self.assertRaises(ValidationError):
            from_schlafli([4, 3], [5])
        with self.assertRaises(ValidationError):
            from_schlafli([4, 3], "snub")

    def test_parse_text(self):
        """Test textual symbols and ring lists."""
        self.assertEqual(parse_schlafli("{4,3,5}"), (4, 3, 5))
        self.assertEqual(parse_schlafli("3, inf"), (3, math.inf))
        self.assertEqual(parse_rings("1,3"), (1, 3))
        self.assertEqual(parse_rings("rectified"), "rectified")


class TestSubdiagrams(unittest.TestCase):
    """Tests for subdiagram enumeration."""

    def test_single_ring(self):
        """Test A3 ringed at node 1, size 1."""
        d = from_schlafli([3, 3])
        self.assertEqual(subdiagrams(d, 1, require_ring=True), [(1,)])

    def test_all_rings(self):
        """Test A3 with every node ringed, size 2."""
        d = from_schlafli([3, 3], "omnitruncated")
        self.assertEqual(subdiagrams(d, 2, require_ring=True), [(1, 2), (1, 3), (2, 3)])

    def test_24_cell_ring_rule(self):
        """Test {3,4,3} ringed at node 1, size 3: only {1,2,3} has a ring in every component."""
        d = from_schlafli([3, 4, 3])
        self.assertEqual(subdiagrams(d, 3, require_ring=True), [(1, 2, 3)])
        self.assertEqual(len(subdiagrams(d, 3)), 4)

    def test_invalid_size(self):
        """Test that size 0 is rejected."""
        with self.assertRaises(ValidationError):
            subdiagrams(from_schlafli([3]), 0)


class TestDiagramModel(unittest.TestCase):
    """Tests for diagram helpers."""

    def test_components_and_restrict(self):
        """Test connected components and induced subdiagrams."""
        d = parse_diagram("nodes 5; 1-2; 4-5:4; ring 4")
        self.assertEqual(d.components(), [(1, 2), (3,), (4, 5)])
        self.assertFalse(d.is_connected())
        self.assertTrue(d.restrict([1, 2]).is_connected())
        sub = d.restrict([4, 5])
        self.assertEqual(sub.node_count, 2)
        self.assertEqual(sub.order(1, 2), 4)
        self.assertEqual(sub.rings, frozenset({1}))

    def test_duplicate_edge_in_constructor(self):
        """Test that (i, j) and (j, i) count as the same edge."""
        with self.assertRaises(ValidationError):
            CoxeterDiagram(2, {(1, 2): EdgeMark.finite(3), (2, 1): EdgeMark.finite(4)})

    def test_hashable(self):
        """Test that equal diagrams hash equally."""
        self.assertEqual(hash(from_schlafli([4, 3])), hash(parse_diagram("nodes 3; 1-2:4; 2-3; ring 1")))


if __name__ == '__main__':
    unittest.main()
