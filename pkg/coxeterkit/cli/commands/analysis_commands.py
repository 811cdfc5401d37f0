"""
Analysis commands (classify, realize, faces).
"""

import argparse

import numpy as np

from .base import BaseCommand, CommandResult


class ClassifyCommand(BaseCommand):
    """Classify a diagram as spherical, Euclidean or hyperbolic simplex diagram."""

    def execute(self, args: argparse.Namespace) -> CommandResult:
        # pylint: disable=C0415
        from ...diagram import classify, classify_components
        diagram = self._load_diagram(args)
        if args.components:
            results = classify_components(diagram)
            for nodes, result in results:
                print(f"{','.join(map(str, nodes))}: {result}")
            return CommandResult(success=True, data=results)
        result = classify(diagram)
        print(result)
        if result.ideal_nodes:
            print(f"Facets opposite ideal vertices: {','.join(map(str, result.ideal_nodes))}")
        return CommandResult(success=True, data=result)


class RealizeCommand(BaseCommand):
    """Run the Vinberg test on a Gram matrix and recover its mirror normals."""

    def execute(self, args: argparse.Namespace) -> CommandResult:
        # pylint: disable=C0415
        from ...gram import recover_normals, signature, vinberg_realizable
        G = self._load_gram(args)
        n = args.dim if args.dim is not None else G.shape[0] - 1
        sig = signature(G)
        print(f"Signature {sig}")

        if sig.negative:
            result = vinberg_realizable(G, n)
            print(result)
            for warning in result.warnings:
                print(f"Warning: {warning}")
            if not result.realizable:
                witness = f", witness {list(result.witness)}" if result.witness else ""
                return CommandResult(success=False, data=result, exit_code=1,
                                     message=f"Not realizable in H^{n}: {result.reason}{witness}")
            mirrors = recover_normals(G, n)
        else:
            mirrors = recover_normals(G)

        print(f"Mirror normals ({mirrors.form.kind.value} form):")
        for normal, offset in zip(mirrors.normals, mirrors.offsets):
            row = " ".join(f"{x:.12g}" for x in normal)
            print(f"  {row}" + (f"  offset {offset:.12g}" if offset else ""))
        if args.out:
            np.savetxt(args.out, mirrors.normals, fmt="%.12g")
            print(f"Wrote {args.out}")
        return CommandResult(success=True, data=mirrors)


class FacesCommand(BaseCommand):
    """Enumerate the face lattice of a realized Gram matrix."""

    def execute(self, args: argparse.Namespace) -> CommandResult:
        from ...faces import enumerate_faces  # pylint: disable=C0415
        G = self._load_gram(args)
        n = args.dim if args.dim is not None else G.shape[0] - 1
        lattice = enumerate_faces(G, n)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(lattice.to_json())
                handle.write("\n")
            print(f"f-vector {lattice.f_vector()}, "
                  f"{len(lattice.ideal_vertices())} ideal vertices; wrote {args.out}")
        else:
            print(lattice.to_json())
        return CommandResult(success=True, data=lattice)
