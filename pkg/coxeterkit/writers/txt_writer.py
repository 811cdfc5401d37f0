"""
Module for writing vertex coordinates as a plain-text list.
"""

from typing import List

import numpy as np

from .base import AbstractWriter


class TxtWriter(AbstractWriter):
    """ Writes one line of whitespace-separated coordinates per vertex.

    Coordinates are the stored ones (hyperboloid rows for hyperbolic data),
    or the Klein-model coordinates with ``klein=True``.
    """

    def write(self, file_name: str, klein: bool = False, **kwargs) -> List[str]:
        """ Writes the coordinate list.

        Parameters:
        -----------
        file_name (str):
            The name of the output text file.
        klein (bool):
            Write Klein-model instead of stored coordinates.
        """
        coords = self.export_coordinates() if klein else np.asarray(self.data.vertices, float)
        np.savetxt(file_name, coords + 0.0, fmt="%.12g")
        return [file_name]

    @staticmethod
    def file_extension() -> str:
        """Get the default file extension for this writer.

        Returns:
        --------
        str
            The file extension for coordinate lists, which is '.txt'.
        """
        return '.txt'
