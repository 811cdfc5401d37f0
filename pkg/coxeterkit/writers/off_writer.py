"""
Module for writing polytopes and tessellation patches to OFF files.

Layout written (ambient dimension 3)::

    OFF
    V F E
    x y z                 one line per vertex
    k i_1 ... i_k         one line per 2-face, vertices in boundary order

For any other dimension d the header is ``nOFF`` followed by a line holding
d, and vertex lines carry d coordinates. Coordinates use 12 significant digits.
"""

import os
from typing import List, Sequence

import numpy as np

from .base import AbstractWriter


def _off_lines(vertices: np.ndarray, polygons: Sequence[Sequence[int]], edge_count: int) -> List[str]:
    dim = vertices.shape[1]
    lines = ["OFF"] if dim == 3 else ["nOFF", str(dim)]
    lines.append(f"{len(vertices)} {len(polygons)} {edge_count}")
    lines.extend(" ".join(f"{x:.12g}" for x in row + 0.0) for row in vertices)
    lines.extend(" ".join(str(v) for v in (len(p), *p)) for p in polygons)
    return lines


class OffWriter(AbstractWriter):
    """ Writes a polytope or tessellation patch to an OFF file.

    Example usage:
        writer = OffWriter(polytope)
        writer.write("cell24.off")

    A patch is written as one mesh with shared vertices, or with
    ``per_cell=True`` as one file per cell named ``<stem>_<cell>.off``.
    """

    def write(self, file_name: str, per_cell: bool = False, **kwargs) -> List[str]:
        """ Writes the OFF file(s).

        Parameters:
        -----------
        file_name (str):
            The name of the output OFF file.
        per_cell (bool):
            For tessellation patches, write every cell to its own file.
        **kwargs:
            Additional keyword arguments (unused in this implementation).
        """
        mesh = self.mesh()
        if not (per_cell and self.is_patch):
            self._write_lines(file_name, _off_lines(mesh.vertices, mesh.polygons, len(mesh.edges)))
            return [file_name]

        stem, extension = os.path.splitext(file_name)
        width = len(str(len(mesh.cells) - 1))
        written = []
        for c in range(len(mesh.cells)):
            cell = self.data.cell_polytope(c)
            path = f"{stem}_{c:0{width}d}{extension or self.file_extension()}"
            coords = mesh.vertices[list(self.data.cells[c].vertex_ids)]
            self._write_lines(path, _off_lines(coords, cell.faces.get(2, []), len(cell.edges)))
            written.append(path)
        return written

    @staticmethod
    def _write_lines(path: str, lines: List[str]) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write("\n".join(lines) + "\n")

    @staticmethod
    def file_extension() -> str:
        """Get the default file extension for this writer.

        Returns:
        --------
        str
            The file extension for OFF files, which is '.off'.
        """
        return '.off'
