"""
Module for drawing 2-dimensional polytopes and tessellation patches as SVG.

Hyperbolic data is drawn in the Klein disc, whose geodesics are straight
chords, together with the unit circle.
"""

from typing import List

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt  # pylint: disable=C0413
from matplotlib.patches import Circle, Polygon  # pylint: disable=C0413

from ..core.exceptions import WriterError  # pylint: disable=C0413
from ..forms import FormKind  # pylint: disable=C0413
from .base import AbstractWriter  # pylint: disable=C0413


class SvgWriter(AbstractWriter):
    """ Draws the polygons of a 2-dimensional construction to an SVG file.

    Example usage:
        writer = SvgWriter(tessellation_patch(from_schlafli([7, 3]), 2))
        writer.write("heptagons.svg")
    """

    def write(self, file_name: str, title: str = "", edge_color: str = "black",
              face_color: str = "#c6dbef", **kwargs) -> List[str]:
        """ Writes the SVG drawing.

        Parameters:
        -----------
        file_name (str):
            The name of the output SVG file.
        title (str):
            Optional figure title.
        edge_color, face_color (str):
            Matplotlib colors of the polygon boundaries and interiors.

        Raises:
        -------
        WriterError:
            If the data is not 2-dimensional.
        """
        mesh = self.mesh()
        if mesh.vertices.shape[1] != 2 or not mesh.polygons:
            raise WriterError("SVG export needs 2-dimensional polygons, "
                              f"got {mesh.vertices.shape[1]}-dimensional coordinates")

        fig, ax = plt.subplots(figsize=(8, 8))
        try:
            hyperbolic = self.data.geometry is FormKind.LORENTZIAN
            if hyperbolic:
                ax.add_patch(Circle((0.0, 0.0), 1.0, fill=False, color="grey", linewidth=0.8))
            for polygon in mesh.polygons:
                ax.add_patch(Polygon(mesh.vertices[list(polygon)], closed=True,
                                     facecolor=face_color, edgecolor=edge_color, linewidth=0.6))
            if hyperbolic:
                ax.set_xlim(-1.05, 1.05)
                ax.set_ylim(-1.05, 1.05)
            else:
                lo, hi = mesh.vertices.min(axis=0), mesh.vertices.max(axis=0)
                pad = 0.05 * float((hi - lo).max())
                ax.set_xlim(lo[0] - pad, hi[0] + pad)
                ax.set_ylim(lo[1] - pad, hi[1] + pad)
            ax.set_aspect("equal")
            ax.axis("off")
            if title:
                ax.set_title(title)
            fig.savefig(file_name, format="svg", bbox_inches="tight")
        finally:
            plt.close(fig)
        return [file_name]

    @staticmethod
    def file_extension() -> str:
        """Get the default file extension for this writer.

        Returns:
        --------
        str
            The file extension for SVG files, which is '.svg'.
        """
        return '.svg'
