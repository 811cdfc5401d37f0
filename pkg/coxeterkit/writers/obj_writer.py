"""
Module for writing polytopes and tessellation patches to Wavefront OBJ files.
"""

from typing import List

import numpy as np

from ..core.exceptions import WriterError
from .base import AbstractWriter


class ObjWriter(AbstractWriter):
    """ Writes a polytope or tessellation patch to an OBJ file.

    Vertices are padded to three coordinates; data living in more than three
    dimensions is refused. Polygons are written as ``f`` lines. A polytope of
    rank 2 also gets its boundary as ``l`` lines, and the cells of a patch
    become separate ``o`` groups sharing one vertex list.
    """

    def write(self, file_name: str, **kwargs) -> List[str]:
        """ Writes the OBJ file.

        Parameters:
        -----------
        file_name (str):
            The name of the output OBJ file.
        **kwargs:
            Additional keyword arguments (unused in this implementation).

        Raises:
        -------
        WriterError:
            If the export coordinates have more than three dimensions.
        """
        mesh = self.mesh()
        dim = mesh.vertices.shape[1]
        if dim > 3:
            raise WriterError(f"OBJ holds at most 3 coordinates, data has {dim}")
        coords = np.hstack([mesh.vertices, np.zeros((len(mesh.vertices), 3 - dim))])

        lines = ["# coxeterkit obj export"]
        name = getattr(self.data, "name", "") or "polytope"
        lines.extend(f"v {x:.6f} {y:.6f} {z:.6f}" for x, y, z in coords + 0.0)
        groups = mesh.cells if self.is_patch else [list(range(len(mesh.polygons)))]
        for g, members in enumerate(groups):
            label = f"cell_{g}" if self.is_patch else name.replace(" ", "_")
            lines.append(f"o {label}")
            lines.extend("f " + " ".join(str(v + 1) for v in mesh.polygons[p]) for p in members)
        if not self.is_patch and self.data.rank == 2:
            lines.extend(f"l {a + 1} {b + 1}" for a, b in mesh.edges)
        with open(file_name, "w", encoding="utf-8") as handle:
            handle.write("\n".join(lines) + "\n")
        return [file_name]

    @staticmethod
    def file_extension() -> str:
        """Get the default file extension for this writer.

        Returns:
        --------
        str
            The file extension for OBJ files, which is '.obj'.
        """
        return '.obj'
