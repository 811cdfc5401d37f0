"""
Orbits of points under finitely many isometries.

Points are rows of a float array. Deduplication uses a k-d tree over the
points found so far, rebuilt once per breadth-first layer, with a tolerance
relative to the size of the coordinates.
"""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.spatial import cKDTree

from ..core.config import get_settings
from ..core.exceptions import GeometryError, OrbitCapExceeded
from ..forms import BilinearForm, FormKind, Isometry, canonicalize

logger = logging.getLogger(__name__)

ROUND_DECIMALS = 6


class PointIndex:
    """
    Incremental set of points with tolerance-based lookup.

    Attributes:
    -----------
    tol : float
        Two points are equal when their distance is at most
        tol · max(1, ‖p‖).
    """

    def __init__(self, dim: int, tol: Optional[float] = None):
        self.dim = dim
        self.tol = get_settings().dedup_tol if tol is None else tol
        self._points = np.empty((0, dim))
        self._tree: Optional[cKDTree] = None

    def __len__(self) -> int:
        return self._points.shape[0]

    @property
    def points(self) -> np.ndarray:
        return self._points

    def _radius(self, points: np.ndarray) -> np.ndarray:
        return self.tol * np.maximum(1.0, np.linalg.norm(points, axis=1))

    def lookup(self, points) -> np.ndarray:
        """Index of each row among the stored points, −1 when absent."""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        result = np.full(points.shape[0], -1, dtype=int)
        if self._tree is None or len(self) == 0:
            return result
        distances, indices = self._tree.query(points, k=1)
        hit = distances <= self._radius(points)
        result[hit] = indices[hit]
        return result

    def add(self, points) -> Tuple[np.ndarray, np.ndarray]:
        """
        Insert a batch of points.

        Returns:
        --------
        indices : np.ndarray
            Index of every row after insertion.
        new : np.ndarray
            Indices of the points that were not present before.
        """
        points = np.atleast_2d(np.asarray(points, dtype=float))
        indices = self.lookup(points)
        missing = np.flatnonzero(indices < 0)
        start = len(self)
        if missing.size:
            candidates = points[missing]
            batch_tree = cKDTree(candidates)
            neighbours = batch_tree.query_ball_point(candidates, self._radius(candidates))
            representative = np.full(missing.size, -1, dtype=int)
            fresh = []
            for pos, close in enumerate(neighbours):
                if representative[pos] >= 0:
                    continue
                representative[pos] = start + len(fresh)
                for other in close:
                    if representative[other] < 0:
                        representative[other] = representative[pos]
                fresh.append(pos)
            indices[missing] = representative
            self._points = np.vstack([self._points, candidates[fresh]])
            self._tree = cKDTree(self._points)
        return indices, np.arange(start, len(self))


def canonical_order(points: np.ndarray) -> np.ndarray:
    """Permutation sorting rows lexicographically by coordinates rounded to 6 places."""
    rounded = np.round(points, ROUND_DECIMALS) + 0.0
    return np.lexsort(rounded.T[::-1])


def orbit_closure(points, generators: Sequence[Isometry], form: Optional[BilinearForm] = None,
                  cap: Optional[int] = None, tol: Optional[float] = None) -> np.ndarray:
    """
    Close a set of points under a list of isometries.

    Parameters:
    -----------
    points : array-like
        Starting points as rows (a single vector is accepted).
    generators : Sequence[Isometry]
        Generators of the group.
    form : BilinearForm, optional
        When spherical or Lorentzian, images are put back onto the model
        (ideal points to first coordinate 1) before deduplication.
    cap : int, optional
        Largest orbit allowed; defaults to the configured orbit cap.

    Returns:
    --------
    np.ndarray
        The orbit, rows in canonical coordinate order.

    Raises:
    -------
    OrbitCapExceeded
        When the orbit grows beyond ``cap``.
    """
    cap = get_settings().orbit_cap if cap is None else cap
    points = np.atleast_2d(np.asarray(points, dtype=float))

    def normalize(batch):
        if form is None or form.kind is FormKind.EUCLIDEAN:
            return batch
        return canonicalize(form, batch)

    index = PointIndex(points.shape[1], tol)
    _, frontier = index.add(normalize(points))
    layer = 0
    while frontier.size:
        current = index.points[frontier]
        images = np.vstack([g.apply(current) for g in generators]) if generators else current[:0]
        if images.size == 0:
            break
        _, frontier = index.add(normalize(images))
        layer += 1
        if len(index) > cap:
            raise OrbitCapExceeded(len(index), cap)
        logger.debug("Orbit layer %d: %d new, %d total", layer, frontier.size, len(index))
    result = index.points
    return result[canonical_order(result)]


def generator_permutations(points: np.ndarray, generators: Sequence[Isometry],
                           form: Optional[BilinearForm] = None,
                           tol: Optional[float] = None) -> List[np.ndarray]:
    """
    The permutation of the rows of a closed orbit induced by each generator.

    Raises:
    -------
    GeometryError
        If some image is not among the points.
    """
    index = PointIndex(points.shape[1], tol)
    index.add(points)
    perms = []
    for g in generators:
        images = g.apply(points)
        if form is not None and form.kind is not FormKind.EUCLIDEAN:
            images = canonicalize(form, images)
        perm = index.lookup(images)
        if np.any(perm < 0):
            raise GeometryError("Point set is not closed under the generators")
        perms.append(perm)
    return perms


def group_elements(generators: Sequence[Isometry], cap: Optional[int] = None,
                   tol: Optional[float] = None) -> List[Tuple[Tuple[int, ...], Isometry]]:
    """
    Enumerate a finite group generated by isometries, breadth first.

    Each element comes with a shortest word in the generator indices
    (0-based, applied right to left as written).

    Raises:
    -------
    OrbitCapExceeded
        When the group is larger than ``cap``.
    """
    cap = get_settings().orbit_cap if cap is None else cap
    if not generators:
        return []
    dim = generators[0].dim
    identity = Isometry.identity(dim)

    def flatten(g: Isometry) -> np.ndarray:
        return np.concatenate([g.matrix.ravel(), g.offset])

    index = PointIndex(dim * dim + dim, tol)
    index.add(flatten(identity))
    elements = [((), identity)]
    frontier = [0]
    while frontier:
        candidates = []
        for pos in frontier:
            word, h = elements[pos]
            for label, g in enumerate(generators):
                candidates.append(((label,) + word, g.compose(h)))
        indices, new = index.add(np.array([flatten(h) for _, h in candidates]))
        first_seen = {}
        for (word, h), idx in zip(candidates, indices):
            if idx >= len(elements) and idx not in first_seen:
                first_seen[idx] = (word, h)
        frontier = []
        for idx in new:
            elements.append(first_seen[idx])
            frontier.append(len(elements) - 1)
        if len(elements) > cap:
            raise OrbitCapExceeded(len(elements), cap)
    logger.debug("Group of order %d enumerated", len(elements))
    return elements
