"""
Finite groups of unit quaternions and the 4-polytopes on their elements.

Quaternions are rows (a, b, c, d) = a + bi + cj + dk.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Sequence

import numpy as np

from ..core.exceptions import GeometryError
from ..wythoff.orbit import PointIndex, canonical_order
from ..wythoff.polytope import Polytope
from .hull import hull_polytope

logger = logging.getLogger(__name__)

PHI = (1.0 + np.sqrt(5.0)) / 2.0


def qmul(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Hamilton product, broadcasting over leading axes."""
    a1, b1, c1, d1 = np.moveaxis(np.asarray(p, dtype=float), -1, 0)
    a2, b2, c2, d2 = np.moveaxis(np.asarray(q, dtype=float), -1, 0)
    return np.stack([
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ], axis=-1)


@dataclass(eq=False)
class QuaternionGroup:
    """A finite group of unit quaternions, elements in canonical order."""
    name: str
    elements: np.ndarray

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, q) -> bool:
        index = PointIndex(4)
        index.add(self.elements)
        return bool(index.lookup(np.asarray(q, dtype=float)[None, :])[0] >= 0)


def close_group(generators, expected: int, name: str = "", cap: int = 10000) -> QuaternionGroup:
    """
    Closure of unit quaternions under multiplication.

    Raises:
    -------
    GeometryError
        If the closure does not have the expected order.
    """
    gens = np.asarray(generators, dtype=float)
    index = PointIndex(4)
    frontier, _ = index.add(np.vstack([[1.0, 0.0, 0.0, 0.0], gens]))
    while len(frontier) and len(index) <= cap:
        products = qmul(index.points[frontier][:, None, :], gens[None, :, :]).reshape(-1, 4)
        _, frontier = index.add(products)
    if len(index) != expected:
        raise GeometryError(f"Group {name or ''} closed at order {len(index)}, expected {expected}")
    elements = index.points
    return QuaternionGroup(name, elements[canonical_order(elements)])


def binary_tetrahedral() -> QuaternionGroup:
    """T*24, the Hurwitz units ±1, ±i, ±j, ±k and ½(±1 ± i ± j ± k)."""
    units = [s * e for e in np.eye(4) for s in (1.0, -1.0)]
    halves = [np.array(signs) for signs in itertools.product((0.5, -0.5), repeat=4)]
    elements = np.array(units + halves)
    return close_group(elements, 24, "T*24")


def binary_icosahedral() -> QuaternionGroup:
    """I*120, generated by T*24 and ½(φ + i + φ⁻¹j)."""
    extra = np.array([PHI, 1.0, 1.0 / PHI, 0.0]) / 2.0
    return close_group(np.vstack([binary_tetrahedral().elements, extra]), 120, "I*120")


def _difference(whole: np.ndarray, part: np.ndarray) -> np.ndarray:
    index = PointIndex(4)
    index.add(part)
    keep = index.lookup(whole) < 0
    return whole[keep]


def quaternion_polytopes(names: Sequence[str] = ("24-cell", "600-cell", "snub 24-cell")
                         ) -> Dict[str, Polytope]:
    """
    Convex hulls of T*24 (24-cell), I*120 (600-cell) and I*120 \\ T*24
    (snub 24-cell, 96 vertices).
    """
    tetrahedral = binary_tetrahedral().elements
    icosahedral = binary_icosahedral().elements
    sources = {
        "24-cell": lambda: tetrahedral,
        "600-cell": lambda: icosahedral,
        "snub 24-cell": lambda: _difference(icosahedral, tetrahedral),
    }
    unknown = [n for n in names if n not in sources]
    if unknown:
        raise GeometryError(f"Unknown quaternion polytopes {unknown}; known: {sorted(sources)}")
    return {n: hull_polytope(sources[n](), name=n) for n in names}
