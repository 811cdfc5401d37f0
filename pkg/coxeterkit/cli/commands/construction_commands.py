"""
Construction commands (build, tessellate, dual, zoo).
"""

import argparse

import numpy as np

from ...core.exceptions import ValidationError
from .base import BaseCommand, CommandResult


def _describe(polytope) -> None:
    """Print name, geometry, f-vector, symmetry class and edge length."""
    from ...writers.json_writer import polytope_summary  # pylint: disable=C0415
    summary = polytope_summary(polytope)
    if summary['name']:
        print(summary['name'])
    print(f"  geometry: {summary['geometry']}")
    print(f"  f-vector: {' '.join(map(str, summary['f_vector']))}")
    print(f"  symmetry: {summary['symmetry']}")
    if summary['edge_length'] is not None:
        print(f"  edge length: {summary['edge_length']:.12g}")
    if summary['ideal_vertices']:
        print(f"  ideal vertices: {summary['ideal_vertices']}")


def _describe_patch(patch) -> None:
    print(f"{len(patch)} cells within depth {patch.depth}, {len(patch.vertices)} vertices, "
          f"{len(patch.adjacency)} adjacent pairs ({patch.geometry.value})")
    for index, shape in enumerate(patch.prototypes):
        count = sum(1 for cell in patch.cells if cell.prototype == index)
        print(f"  {count} x f-vector {' '.join(map(str, shape.f_vector()))}")


class BuildCommand(BaseCommand):
    """Build the Wythoff polytope of a ringed diagram."""

    def execute(self, args: argparse.Namespace) -> CommandResult:
        wythoff = self.deps.get_construction_dependencies()['wythoff']
        polytope = wythoff.build(self._load_diagram(args))
        _describe(polytope)
        written = self._export(polytope, args)
        if written:
            print(written)
        return CommandResult(success=True, data=polytope)


class TessellateCommand(BaseCommand):
    """Build a patch of the tessellation of a Euclidean or hyperbolic simplex diagram."""

    def execute(self, args: argparse.Namespace) -> CommandResult:
        wythoff = self.deps.get_construction_dependencies()['wythoff']
        patch = wythoff.tessellation_patch(self._load_diagram(args), args.depth)
        _describe_patch(patch)
        written = self._export(patch, args)
        if written:
            print(written)
        return CommandResult(success=True, data=patch)


class DualCommand(BaseCommand):
    """Build the polar dual, optionally realized in hyperbolic space."""

    def execute(self, args: argparse.Namespace) -> CommandResult:
        construction = self.deps.get_construction_dependencies()
        dual_module = construction['dual']
        dual = dual_module.dual_polytope(construction['wythoff'].build(self._load_diagram(args)))
        result = dual.polytope
        _describe(result)
        radii = ", ".join(f"{len(c.members)} at {c.radius:.12g}" for c in dual.radius_classes)
        print(f"  radius classes: {radii}")
        if args.hyperbolic:
            realization = dual_module.hyperbolic_realization(dual)
            result = realization.polytope
            angles = np.array(list(realization.angles.values()))
            print(f"  hyperbolic: {len(realization.ideal)} ideal, {len(realization.real)} real "
                  f"vertices, dihedral angles in [{angles.min():.12g}, {angles.max():.12g}]")
            if realization.is_right_angled():
                print("  right-angled")
        written = self._export(result, args)
        if written:
            print(written)
        return CommandResult(success=True, data=result)


class ZooCommand(BaseCommand):
    """Build one of the special constructions (E8, quaternions, seed vectors, slices)."""

    def execute(self, args: argparse.Namespace) -> CommandResult:
        zoo = self.deps.get_construction_dependencies()['zoo']
        name = args.name

        if name == 'e8-roots':
            roots = zoo.e8_roots()
            norms = np.linalg.norm(roots, axis=1)
            print(f"{len(roots)} roots, norms in [{norms.min():.12g}, {norms.max():.12g}]")
            if args.out:
                np.savetxt(args.out, roots, fmt="%.12g")
                print(f"Wrote {args.out}")
            return CommandResult(success=True, data=roots)

        if name == 'holes':
            holes = {"deep hole e1": np.eye(8)[0],
                     "shallow hole (5,1,...,1)/6": np.array([5.0] + [1.0] * 7) / 6}
            found = {}
            for label, hole in holes.items():
                found[label] = zoo.hole_neighbors(hole)
                print(f"{label}: {found[label].count} nearest lattice vectors "
                      f"at distance {found[label].distance:.12g}")
            return CommandResult(success=True, data=found)

        if name == 'slice':
            patch = zoo.diagonal_slice_tessellation(args.n, args.depth)
            _describe_patch(patch)
            written = self._export(patch, args)
            if written:
                print(written)
            return CommandResult(success=True, data=patch)

        builders = {
            '421': zoo.build_421,
            '24-cell': lambda: zoo.quaternion_polytopes(("24-cell",))["24-cell"],
            '600-cell': lambda: zoo.quaternion_polytopes(("600-cell",))["600-cell"],
            'snub-24-cell': lambda: zoo.quaternion_polytopes(("snub 24-cell",))["snub 24-cell"],
            'demicube': lambda: zoo.seed_vector_families('demicube', args.n),
            'permutohedron': lambda: zoo.seed_vector_families('permutohedron', args.n),
            'omnitruncated-cube': lambda: zoo.seed_vector_families('omnitruncated_cube', args.n),
        }
        if name not in builders:
            raise ValidationError(f"Unknown construction '{name}'")
        polytope = builders[name]()
        _describe(polytope)
        written = self._export(polytope, args)
        if written:
            print(written)
        return CommandResult(success=True, data=polytope)
