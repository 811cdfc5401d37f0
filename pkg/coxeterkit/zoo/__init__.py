"""
Explicit constructions: the E8 lattice and 4_21, quaternion groups, seed
vector families and the diagonal slice of the cubic lattice.
"""

from .e8 import (E8_GRAM, GOSSET_F_VECTOR, HoleNeighbors, build_421, e8_basis, e8_gram,
                 e8_mirrors, e8_roots, hole_neighbors, is_lattice_vector)
from .families import (SEED_VECTOR_KINDS, a_family, a_seed, b_family, b_seed, demicube,
                       omnitruncated_cube, permutohedron, seed_vector_families)
from .hull import hull_polytope
from .quaternions import (QuaternionGroup, binary_icosahedral, binary_tetrahedral,
                          close_group, qmul, quaternion_polytopes)
from .slices import diagonal_slice_tessellation

__all__ = [
    'E8_GRAM',
    'GOSSET_F_VECTOR',
    'HoleNeighbors',
    'SEED_VECTOR_KINDS',
    'QuaternionGroup',
    'a_family',
    'a_seed',
    'b_family',
    'b_seed',
    'binary_icosahedral',
    'binary_tetrahedral',
    'build_421',
    'close_group',
    'demicube',
    'diagonal_slice_tessellation',
    'e8_basis',
    'e8_gram',
    'e8_mirrors',
    'e8_roots',
    'hole_neighbors',
    'hull_polytope',
    'is_lattice_vector',
    'omnitruncated_cube',
    'permutohedron',
    'qmul',
    'quaternion_polytopes',
    'seed_vector_families',
]
