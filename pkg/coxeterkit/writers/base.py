"""
Module for abstract base class for exporting polytopes and tessellation patches.

This module defines the `AbstractWriter` class, which serves as a base class for
all writer implementations in the coxeterkit package. Concrete writer classes should
inherit from this class and implement the `write` method to handle the specifics of
writing a construction to a file format (e.g., OFF, OBJ, SVG, JSON).
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import List, Tuple, Union

import numpy as np

from ..forms import FormKind, klein_project
from ..wythoff.polytope import Face, Polytope, TessellationPatch

Exportable = Union[Polytope, TessellationPatch]


@dataclass
class Mesh:
    """Vertices in export coordinates with polygons and edges, grouped per cell."""
    vertices: np.ndarray
    polygons: List[Face]
    edges: List[Tuple[int, int]]
    cells: List[List[int]]


class AbstractWriter(ABC):
    """Abstract base class for exporting polytopes and tessellation patches.

    This class provides a common interface for all writer implementations.
    Hyperbolic constructions are exported in Klein-model coordinates.

    Attributes:
    -----------
    data : Polytope or TessellationPatch
        The construction to be written.

    Methods:
    --------
    __init__(data):
        Initializes the writer with the provided construction.
    file_extension: str
        The default file extension for this writer (to be implemented by subclasses).
    write(file_name: str, **kwargs):
        Writes the construction to a file (to be implemented by subclasses).

    Raises:
    -------
    TypeError:
        If the provided data is neither a Polytope nor a TessellationPatch.
    """

    def __init__(self, data: Exportable):
        self.data = data

    @staticmethod
    @abstractmethod
    def file_extension() -> str:
        """Get the default file extension for this writer.

        Returns:
        --------
        str
            The file extension (e.g., '.off', '.obj', '.svg').
        """
        raise NotImplementedError("Writer classes must define a file extension")

    @property
    def data(self) -> Exportable:
        return self._data

    @data.setter
    def data(self, value: Exportable) -> None:
        if not isinstance(value, (Polytope, TessellationPatch)):
            raise TypeError("Data must be a Polytope or a TessellationPatch.")
        self._data = value

    @property
    def is_patch(self) -> bool:
        return isinstance(self.data, TessellationPatch)

    def export_coordinates(self) -> np.ndarray:
        """Vertex rows as written: Klein coordinates for hyperbolic data."""
        if self.data.geometry is FormKind.LORENTZIAN:
            return klein_project(self.data.vertices)
        return np.asarray(self.data.vertices, dtype=float)

    def mesh(self) -> Mesh:
        """Polygons (2-faces) and edges of the data; one group per tessellation cell."""
        if not self.is_patch:
            polytope = self.data
            polygons = list(polytope.faces.get(2, []))
            return Mesh(self.export_coordinates(), polygons, list(polytope.edges),
                        [list(range(len(polygons)))])
        patch = self.data
        index = {}
        polygons: List[Face] = []
        edges = set()
        cells = []
        for c in range(len(patch)):
            members = []
            for polygon in patch.cell_faces(c, 2):
                key = frozenset(polygon)
                if key not in index:
                    index[key] = len(polygons)
                    polygons.append(polygon)
                members.append(index[key])
            for a, b in patch.cell_faces(c, 1):
                edges.add((min(a, b), max(a, b)))
            cells.append(members)
        return Mesh(self.export_coordinates(), polygons, sorted(edges), cells)

    @abstractmethod
    def write(self, file_name: str, **kwargs) -> List[str]:
        """Write the construction to a file.

        Parameters:
        -----------
        file_name : str
            The name of the output file.
        **kwargs
            Additional keyword arguments specific to the writer implementation.

        Returns:
        --------
        List[str]
            Paths of the files written.
        """
        raise NotImplementedError("Subclasses must implement the write method")
