"""
The cubic lattice of ℝⁿ⁺¹ cut by the hyperplane x₁ + … + xₙ₊₁ = 0.

A unit cube k + [0, 1]ⁿ⁺¹ meets the hyperplane in the hypersimplex of 0/1
vectors with m = −Σk ones, so for n = 2 the cells are triangles, for n = 3
tetrahedra and octahedra, and for n = 4 simplices and rectified simplices.
"""

import itertools
import logging
from collections import deque
from typing import Dict, List, Tuple

import numpy as np
from scipy import linalg

from ..core.exceptions import ValidationError
from ..forms import BilinearForm, FormKind
from ..wythoff.polytope import Polytope, TessellationCell, TessellationPatch
from ..wythoff.tessellation import shared_facets
from .hull import hull_polytope

logger = logging.getLogger(__name__)


def _hypersimplex_points(n: int, m: int) -> np.ndarray:
    points = []
    for ones in itertools.combinations(range(n + 1), m):
        t = np.zeros(n + 1, dtype=int)
        t[list(ones)] = 1
        points.append(t)
    return np.array(points)


def diagonal_slice_tessellation(n: int, depth: int) -> TessellationPatch:
    """
    Patch of the slice tessellation of ℝⁿ around a simplex cell.

    Cells are reached by crossing facets, so ``depth`` counts facet
    crossings from the base cell. Cell words are the cube corners k, and
    vertex coordinates are taken in an orthonormal basis of the hyperplane
    (edge length √2).

    Raises:
    -------
    ValidationError
        For n < 2 or a negative depth.
    """
    if n < 2:
        raise ValidationError(f"Slices need n >= 2, got {n}")
    if depth < 0:
        raise ValidationError(f"Depth must be non-negative, got {depth}")
    basis = linalg.null_space(np.ones((1, n + 1)))
    corners = {m: _hypersimplex_points(n, m) for m in range(1, n + 1)}
    prototypes: List[Polytope] = []
    for m in range(1, n + 1):
        shape = hull_polytope(corners[m] @ basis, name=f"hypersimplex({n + 1},{m})")
        shape.geometry, shape.form = FormKind.EUCLIDEAN, BilinearForm.euclidean(n)
        prototypes.append(shape)

    vertex_ids: Dict[Tuple[int, ...], int] = {}
    cells: List[TessellationCell] = []

    def cell_of(k: np.ndarray, level: int) -> TessellationCell:
        m = -int(k.sum())
        ids = []
        for p in corners[m] + k:
            ids.append(vertex_ids.setdefault(tuple(int(x) for x in p), len(vertex_ids)))
        return TessellationCell(tuple(int(x) for x in k), tuple(ids), level, m - 1)

    start = np.zeros(n + 1, dtype=int)
    start[0] = -1
    seen = {tuple(start)}
    queue = deque([(start, 0)])
    steps = [s * e for e in np.eye(n + 1, dtype=int) for s in (1, -1)]
    while queue:
        k, level = queue.popleft()
        cell = cell_of(k, level)
        cells.append(cell)
        if level == depth:
            continue
        here = set(cell.vertex_ids)
        for step in steps:
            other = k + step
            m = -int(other.sum())
            if not 1 <= m <= n or tuple(other) in seen:
                continue
            common = [p for p in (corners[m] + other)
                      if vertex_ids.get(tuple(int(x) for x in p)) in here]
            # One step crosses a facet; lower-dimensional contacts do not count.
            if len(common) < n or np.linalg.matrix_rank(np.array(common[1:]) - common[0]) < n - 1:
                continue
            seen.add(tuple(other))
            queue.append((other, level + 1))

    points = np.array(sorted(vertex_ids, key=vertex_ids.get), dtype=float)
    patch = TessellationPatch(
        geometry=FormKind.EUCLIDEAN, form=BilinearForm.euclidean(n),
        vertices=points @ basis, cells=cells, adjacency=[], depth=depth,
        base=prototypes[0], prototypes=prototypes)
    patch.adjacency = shared_facets(patch)
    logger.info("Diagonal slice of Z^%d at depth %d: %d cells, %d vertices",
                n + 1, depth, len(cells), len(points))
    return patch
