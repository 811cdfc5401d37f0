"""
Finite patches of the tessellation {g(C) : g ∈ Γ} of a Euclidean or hyperbolic
Coxeter simplex.

The base cell C is the Wythoff polytope of the first Coxeter-Wythoff
subdiagram N of n nodes. Its neighbours are h rⱼ h⁻¹ (C) for h in the
group of N and j outside N, so the patch grows cell by cell: a cell g(C)
leads to g h rⱼ h⁻¹ (C).
"""

import logging
from collections import deque
from typing import Dict, FrozenSet, List, Tuple

import numpy as np

from ..core.exceptions import ValidationError
from ..diagram.dsl import render
from ..diagram.model import CoxeterDiagram
from ..forms import FormKind, Isometry, canonicalize
from ..gram import gram_from_diagram, recover_normals, signature
from .builder import WythoffBuilder, ideal_mask
from .orbit import PointIndex, group_elements
from .polytope import TessellationCell, TessellationPatch

logger = logging.getLogger(__name__)


def _cell_moves(builder: WythoffBuilder, base: np.ndarray) -> List[Tuple[Tuple[int, ...], Isometry]]:
    """Distinct moves h rⱼ h⁻¹ with their words in 1-based node labels."""
    nodes = builder.nodes
    outside = [j for j in builder.diagram.nodes if j not in nodes]
    stabilizer = group_elements(builder.generators(nodes))
    reflections = builder.mirrors.reflections()
    form = builder.form
    seen = PointIndex(base.size)
    moves = []
    for j in outside:
        for word, h in stabilizer:
            move = h.compose(reflections[j - 1]).compose(h.inverse())
            image = move.apply(base)
            if form.kind is FormKind.LORENTZIAN:
                image = canonicalize(form, image)
            # Cells are compared through the sorted image of the base vertices.
            key = image[np.lexsort(np.round(image, 6).T[::-1])].ravel()
            _, new = seen.add(key)
            if new.size:
                labels = tuple(nodes[g] for g in word)
                moves.append((labels + (j,) + labels[::-1], move))
    logger.debug("Base cell has %d neighbour moves", len(moves))
    return moves


def tessellation_patch(diagram: CoxeterDiagram, depth: int) -> TessellationPatch:
    """
    Cells of the tessellation of a ringed simplex diagram within ``depth``
    moves of the base cell.

    Parameters:
    -----------
    diagram : CoxeterDiagram
        Euclidean or hyperbolic simplex diagram with at least one ring.
    depth : int
        Number of facet crossings, 0 for the base cell alone.

    Returns:
    --------
    TessellationPatch
        Cells in breadth-first order, deduplicated by vertex set, with the
        pairs of cells sharing a facet.

    Raises:
    -------
    ValidationError
        For a negative depth, a diagram without rings, or a spherical diagram.
    """
    if depth < 0:
        raise ValidationError(f"Depth must be non-negative, got {depth}")
    if not diagram.rings:
        raise ValidationError("A tessellation patch needs at least one ringed node")
    G = gram_from_diagram(diagram)
    k = diagram.node_count
    if signature(G).as_tuple() == (k, 0, 0):
        raise ValidationError("Spherical diagrams give polytopes; use build instead")

    builder = WythoffBuilder(recover_normals(G), diagram.rings, diagram, name=render(diagram))
    base = builder.build()
    form = base.form
    moves = _cell_moves(builder, base.vertices)

    index = PointIndex(base.vertices.shape[1])
    base_ids, _ = index.add(base.vertices)
    cells = [TessellationCell((), tuple(int(i) for i in base_ids), 0)]
    elements: List[Isometry] = [Isometry.identity(base.vertices.shape[1])]
    known: Dict[FrozenSet[int], int] = {frozenset(cells[0].vertex_ids): 0}
    queue = deque([0])
    while queue:
        current = queue.popleft()
        cell = cells[current]
        if cell.depth >= depth:
            continue
        for word, move in moves:
            g = elements[current].compose(move)
            image = g.apply(base.vertices)
            if form.kind is FormKind.LORENTZIAN:
                image = canonicalize(form, image)
            ids, _ = index.add(image)
            key = frozenset(int(i) for i in ids)
            if key in known:
                continue
            known[key] = len(cells)
            cells.append(TessellationCell(cell.word + word, tuple(int(i) for i in ids),
                                          cell.depth + 1))
            elements.append(g)
            queue.append(len(cells) - 1)
        logger.debug("Patch of %s: %d cells after cell %d", builder.name, len(cells), current)

    patch = TessellationPatch(
        geometry=base.geometry, form=form, vertices=index.points, cells=cells,
        adjacency=[], depth=depth, base=base,
        ideal=ideal_mask(form, index.points, 1e-7))
    patch.adjacency = shared_facets(patch)
    logger.info("Tessellation patch of %s at depth %d: %d cells, %d vertices",
                builder.name, depth, len(cells), len(index))
    return patch


def shared_facets(patch: TessellationPatch) -> List[Tuple[int, int]]:
    """Pairs of cells (i < j) with a common facet."""
    owners: Dict[FrozenSet[int], List[int]] = {}
    for c in range(len(patch)):
        for facet in patch.cell_faces(c, patch.base.rank - 1):
            owners.setdefault(frozenset(facet), []).append(c)
    pairs = set()
    for members in owners.values():
        for a in members:
            for b in members:
                if a < b:
                    pairs.add((a, b))
    return sorted(pairs)

