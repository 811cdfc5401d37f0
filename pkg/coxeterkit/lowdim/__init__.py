"""
Existence criteria for low-dimensional non-obtuse polyhedra.
"""

from .andreev import (AndreevResult, AngleAssignment, PlanarPolyhedronGraph, andreev_check,
                      parse_angle, read_andreev_input)
from .criteria import (LowDimGeometry, PrismResult, TetrahedronResult, link_face_angles,
                       prism_realizable, tetrahedron_geometry, tetrahedron_gram,
                       triangle_geometry, triangle_gram)

__all__ = [
    'AndreevResult',
    'AngleAssignment',
    'LowDimGeometry',
    'PlanarPolyhedronGraph',
    'PrismResult',
    'TetrahedronResult',
    'andreev_check',
    'link_face_angles',
    'parse_angle',
    'prism_realizable',
    'read_andreev_input',
    'tetrahedron_geometry',
    'tetrahedron_gram',
    'triangle_geometry',
    'triangle_gram',
]
