"""
Module for writing summaries of polytopes and tessellation patches as JSON.
"""

import json
from typing import Any, Dict, List

import numpy as np

from ..wythoff.groups import symmetry_class
from .base import AbstractWriter


def polytope_summary(polytope) -> Dict[str, Any]:
    """Name, geometry tag, f-vector, symmetry class and edge length of a polytope."""
    return {
        "name": polytope.name,
        "geometry": polytope.geometry.value,
        "rank": polytope.rank,
        "f_vector": polytope.f_vector(),
        "symmetry": symmetry_class(polytope).value,
        "edge_length": polytope.edge_length,
        "compact": polytope.is_compact,
        "ideal_vertices": int(np.count_nonzero(polytope.ideal)),
    }


class JsonWriter(AbstractWriter):
    """ Writes a JSON summary of a polytope or tessellation patch.

    Vertex coordinates are included with ``include_vertices=True``.
    """

    def summary(self, include_vertices: bool = False) -> Dict[str, Any]:
        if self.is_patch:
            patch = self.data
            result = {
                "geometry": patch.geometry.value,
                "depth": patch.depth,
                "cells": len(patch),
                "vertices": len(patch.vertices),
                "adjacent_pairs": len(patch.adjacency),
                "cell_types": [polytope_summary(p) for p in patch.prototypes],
            }
        else:
            result = polytope_summary(self.data)
        if include_vertices:
            result["coordinates"] = np.round(self.data.vertices, 12).tolist()
        return result

    def write(self, file_name: str, include_vertices: bool = False, **kwargs) -> List[str]:
        """ Writes the JSON file.

        Parameters:
        -----------
        file_name (str):
            The name of the output JSON file.
        include_vertices (bool):
            Also write the vertex coordinates.
        """
        with open(file_name, "w", encoding="utf-8") as handle:
            json.dump(self.summary(include_vertices), handle, indent=2)
            handle.write("\n")
        return [file_name]

    @staticmethod
    def file_extension() -> str:
        """Get the default file extension for this writer.

        Returns:
        --------
        str
            The file extension for JSON files, which is '.json'.
        """
        return '.json'
