"""
The Wythoff construction: seeds, orbits, polytopes, tessellation patches and
reflection group orders.
"""

from .orbit import PointIndex, canonical_order, generator_permutations, group_elements, orbit_closure
from .polytope import Face, FaceType, Polytope, TessellationCell, TessellationPatch
from .builder import WythoffBuilder, build, common_length, ideal_mask, seed_point, wythoff_subsets
from .groups import (SymmetryClass, chain_count, coxeter_relations, dihedral_angles,
                     facet_pairs, group_order, predicted_face_counts, symmetry_class)
from .tessellation import shared_facets, tessellation_patch

__all__ = [
    'Face',
    'FaceType',
    'PointIndex',
    'Polytope',
    'SymmetryClass',
    'TessellationCell',
    'TessellationPatch',
    'WythoffBuilder',
    'build',
    'canonical_order',
    'chain_count',
    'common_length',
    'coxeter_relations',
    'dihedral_angles',
    'facet_pairs',
    'generator_permutations',
    'group_elements',
    'group_order',
    'ideal_mask',
    'orbit_closure',
    'predicted_face_counts',
    'seed_point',
    'shared_facets',
    'symmetry_class',
    'tessellation_patch',
    'wythoff_subsets',
]
