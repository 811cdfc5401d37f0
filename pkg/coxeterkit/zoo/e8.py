"""
The E8 lattice, its 240 roots and the Gosset polytope 4_21.

Lattice vectors are kept as doubled integer coordinates so that membership
and Gram entries are decided exactly: x ∈ E8 iff 2x is integral with all
entries of one parity and the coordinate sum of x is even.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np

from ..core.exceptions import GeometryError, ValidationError
from ..forms import BilinearForm
from ..gram import MirrorSystem, diagram_from_gram
from ..wythoff.builder import WythoffBuilder
from ..wythoff.orbit import canonical_order
from ..wythoff.polytope import Polytope

logger = logging.getLogger(__name__)

# Simple roots e1−e2, e2−e3, e3−e4, e4−e5, e5−e6, e6+e7, −½Σeᵢ, e6−e7, doubled.
E8_BASIS_DOUBLED = np.array([
    [2, -2, 0, 0, 0, 0, 0, 0],
    [0, 2, -2, 0, 0, 0, 0, 0],
    [0, 0, 2, -2, 0, 0, 0, 0],
    [0, 0, 0, 2, -2, 0, 0, 0],
    [0, 0, 0, 0, 2, -2, 0, 0],
    [0, 0, 0, 0, 0, 2, 2, 0],
    [-1, -1, -1, -1, -1, -1, -1, -1],
    [0, 0, 0, 0, 0, 2, -2, 0],
])

E8_GRAM = np.array([
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, 0],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, -1],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, 0, 0, -1, 0, 0, 2],
])

# e8 − e1: on the mirrors of nodes 2..8, off the mirror of node 1.
GOSSET_SEED = np.array([-1.0, 0, 0, 0, 0, 0, 0, 1.0])

GOSSET_F_VECTOR = (240, 6720, 60480, 241920, 483840, 483840, 207360, 19440)


def e8_basis() -> np.ndarray:
    return E8_BASIS_DOUBLED / 2.0


def e8_gram() -> np.ndarray:
    """
    Gram matrix of the simple roots, checked exactly against the E8 Cartan
    matrix.

    Raises:
    -------
    GeometryError
        If the basis does not reproduce it.
    """
    products = E8_BASIS_DOUBLED @ E8_BASIS_DOUBLED.T
    if np.any(products % 4) or not np.array_equal(products // 4, E8_GRAM):
        raise GeometryError("Simple roots do not give the E8 Gram matrix")
    return products // 4


def is_lattice_vector(x) -> bool:
    """Exact membership test for E8 in the coordinates of the simple roots above."""
    doubled = 2.0 * np.asarray(x, dtype=float)
    rounded = np.rint(doubled)
    if rounded.shape != (8,) or np.max(np.abs(doubled - rounded)) > 1e-9:
        return False
    ints = rounded.astype(np.int64)
    parities = set(int(v) % 2 for v in ints)
    return len(parities) == 1 and int(ints.sum()) % 4 == 0


def e8_roots() -> np.ndarray:
    """The 240 vectors of norm 2: ±eᵢ ± eⱼ and ½(±1, …, ±1) with an even number of minus signs."""
    roots = []
    for i, j in itertools.combinations(range(8), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = np.zeros(8)
            v[i], v[j] = si, sj
            roots.append(v)
    for signs in itertools.product((0.5, -0.5), repeat=8):
        if sum(s < 0 for s in signs) % 2 == 0:
            roots.append(np.array(signs))
    roots = np.array(roots)
    return roots[canonical_order(roots)]


def e8_mirrors() -> MirrorSystem:
    """Unit normals v/√2 of the simple roots; reflections are x − ⟨x, v⟩v."""
    normals = e8_basis() / np.sqrt(2.0)
    return MirrorSystem(BilinearForm.spherical(7), normals, np.zeros(8))


def build_421(ranks: Iterable[int] = (1, 7)) -> Polytope:
    """
    The Gosset polytope 4_21: the E8 Wythoff orbit of the root e8 − e1.

    Parameters:
    -----------
    ranks : Iterable[int]
        Face ranks to enumerate. The middle ranks hold close to half a million
        faces each, so only edges and facets are built by default.
    """
    mirrors = e8_mirrors()
    diagram = diagram_from_gram(mirrors.gram()).with_rings({1})
    builder = WythoffBuilder(mirrors, {1}, diagram, seed=GOSSET_SEED, name="4_21")
    polytope = builder.build(ranks)
    logger.info("4_21: f-vector %s", polytope.f_vector())
    return polytope


@dataclass(frozen=True)
class HoleNeighbors:
    """Lattice points nearest to a point of space."""
    count: int
    distance: float
    points: np.ndarray


def _nearest_in_box(h: np.ndarray, radius: int) -> Tuple[np.ndarray, np.ndarray]:
    """Lattice points whose coordinates differ from h by at most ``radius``."""
    found = []
    for shift in (0.0, 0.5):
        axes = [np.arange(np.ceil(c - radius - shift), np.floor(c + radius - shift) + 1) + shift
                for c in h]
        grid = np.array(np.meshgrid(*axes, indexing="ij")).reshape(8, -1).T
        even = np.rint(grid.sum(axis=1)).astype(np.int64) % 2 == 0
        found.append(grid[even])
    points = np.vstack(found)
    return points, np.linalg.norm(points - h, axis=1)


def hole_neighbors(h, radius: int = 1, tol: float = 1e-9) -> HoleNeighbors:
    """
    Count the lattice points at minimal distance from h.

    The search covers all lattice points whose coordinates lie within
    ``radius`` of those of h and is repeated once with the box widened by one
    to confirm the minimum.

    Raises:
    -------
    ValidationError
        If h is not a point of ℝ⁸.
    GeometryError
        If the widened search finds a closer point.
    """
    h = np.asarray(h, dtype=float)
    if h.shape != (8,):
        raise ValidationError(f"Expected a point of R^8, got shape {h.shape}")
    points, dist = _nearest_in_box(h, radius)
    best = float(dist.min())
    wide_points, wide = _nearest_in_box(h, radius + 1)
    if float(wide.min()) < best - tol:
        raise GeometryError(f"Nearest lattice point lies outside a box of radius {radius}")
    best = float(wide.min())
    near = wide_points[wide <= best + tol * max(1.0, best)]
    logger.debug("Hole %s: %d neighbours at %.6f", h, len(near), best)
    return HoleNeighbors(len(near), best, near[canonical_order(near)])
