"""
The Wythoff construction.

A ringed diagram picks a seed point in the fundamental simplex at equal
distance from the ringed mirrors and on all other mirrors. The vertices are
the orbit of the seed; the h-faces are the images of the base faces, one per
Coxeter-Wythoff subdiagram T of h nodes (every component of T ringed), whose
vertices are the orbit of the seed under the reflections of T. Faces are
tracked as vertex-index sets moved by the permutations the generators induce
on the vertices.
"""

import logging
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np
from scipy import linalg

from ..core.config import get_settings
from ..core.exceptions import GeometryError, RealizationError, ValidationError
from ..diagram.dsl import render
from ..diagram.model import CoxeterDiagram
from ..forms import FormKind, Isometry, Point, PointKind, canonicalize, inner
from ..gram import MirrorSystem, diagram_from_gram, gram_from_diagram, recover_normals, signature
from .orbit import PointIndex, generator_permutations, orbit_closure
from .polytope import Face, FaceType, Polytope

logger = logging.getLogger(__name__)


def wythoff_subsets(diagram: CoxeterDiagram, nodes: Sequence[int], size: int) -> List[Tuple[int, ...]]:
    """Subsets of ``nodes`` of the given size with a ring in every component."""
    if size == 0:
        return [()]
    return [s for s in combinations(sorted(nodes), size)
            if all(diagram.rings.intersection(c) for c in diagram.components(s))]


def ideal_mask(form, points: np.ndarray, tol: float) -> np.ndarray:
    """Rows that are null vectors of a Lorentzian form, relative to their size."""
    if form.kind is not FormKind.LORENTZIAN:
        return np.zeros(len(points), dtype=bool)
    values = inner(form, points, points)
    return np.abs(values) <= tol * np.sum(points * points, axis=1)


def seed_point(mirrors: MirrorSystem, rings: Iterable[int], tol: Optional[float] = None) -> Point:
    """
    Point on every unringed mirror and at equal distance from the ringed ones.

    Solves form(p, vᵢ) − aᵢ = 0 for unringed i and = −c for ringed i. In the
    spherical and Lorentzian cases c = 1 and p is normalized afterwards; in
    the Euclidean case c is an unknown. A null solution is an ideal point,
    allowed only for a single ring.

    Parameters:
    -----------
    mirrors : MirrorSystem
        Mirrors of the fundamental simplex.
    rings : Iterable[int]
        Ringed nodes, 1-based.

    Raises:
    -------
    ValidationError
        For no rings or a ring index out of range.
    RealizationError
        If the seed falls outside the simplex, is ideal with several rings,
        or lies beyond the sphere at infinity.
    """
    tol = get_settings().algebraic_tol if tol is None else tol
    rings = sorted(set(rings))
    k = mirrors.size
    if not rings:
        raise ValidationError("The Wythoff construction needs at least one ringed node")
    if rings[0] < 1 or rings[-1] > k:
        raise ValidationError(f"Ring indices must lie in 1..{k}, got {rings}")
    form = mirrors.form
    ringed = np.zeros(k)
    ringed[[r - 1 for r in rings]] = 1.0
    rows = mirrors.normals * form.diagonal

    if form.kind is FormKind.EUCLIDEAN:
        system = np.hstack([rows, ringed[:, None]])
        solution, *_ = linalg.lstsq(system, mirrors.offsets)
        if np.max(np.abs(system @ solution - mirrors.offsets)) > 1e-8:
            raise RealizationError("No point is equidistant from the ringed mirrors")
        p, c = solution[:-1], solution[-1]
        if c <= tol:
            raise RealizationError("Seed does not lie inside the simplex")
        return Point(p, PointKind.INTERIOR, form)

    p, *_ = linalg.lstsq(rows, -ringed)
    if np.max(np.abs(rows @ p + ringed)) > 1e-8:
        raise RealizationError("No point is equidistant from the ringed mirrors")
    q = inner(form, p, p)
    if form.kind is FormKind.LORENTZIAN:
        if abs(q) <= 1e-7 * float(p @ p):
            if len(rings) > 1:
                raise RealizationError("An ideal seed allows a single ringed node only, "
                                       f"got {rings}")
            coords = canonicalize(form, p[None, :])[0]
            if np.any(mirrors.values(coords) > 1e-7):
                raise RealizationError("Seed does not lie inside the simplex")
            return Point(coords, PointKind.IDEAL, form)
        if q > 0:
            raise RealizationError("Seed lies beyond the sphere at infinity")
    coords = canonicalize(form, p[None, :])[0]
    if np.any(mirrors.values(coords) > 1e-7):
        raise RealizationError("Seed does not lie inside the simplex")
    return Point(coords, PointKind.INTERIOR, form)


def cyclic_order(face: Sequence[int], neighbours: Dict[int, Set[int]]) -> Tuple[int, ...]:
    """Vertices of a polygon in boundary order, starting from the smallest index."""
    members = set(face)
    start = min(members)
    order = [start]
    previous, current = None, start
    while True:
        options = sorted(v for v in neighbours[current] & members if v != previous)
        step = next((v for v in options if v not in order), None)
        if step is None:
            break
        order.append(step)
        previous, current = current, step
    if len(order) != len(members):
        raise GeometryError(f"2-face {sorted(members)} is not a polygon in the edge graph")
    return tuple(order)


class WythoffBuilder:
    """
    Builds the polytope of a ringed diagram from an explicit mirror system.

    For a finite reflection group the result is the whole polytope, embedded
    in the ambient Euclidean space. For Euclidean and hyperbolic simplices it
    is the base cell of the tessellation: the polytope of the first
    Coxeter-Wythoff subdiagram of n nodes.

    Parameters:
    -----------
    mirrors : MirrorSystem
        Unit normals (and offsets) of the mirrors.
    rings : Iterable[int]
        Ringed nodes, 1-based.
    diagram : CoxeterDiagram, optional
        Diagram of the mirrors; read off their Gram matrix when omitted.
    seed : array-like, optional
        Explicit seed instead of the equidistant one.
    name : str
        Label carried by the result.
    """

    def __init__(self, mirrors: MirrorSystem, rings: Iterable[int],
                 diagram: Optional[CoxeterDiagram] = None, seed=None, name: str = ""):
        self.mirrors = mirrors
        rings = frozenset(rings)
        if diagram is None:
            diagram = diagram_from_gram(mirrors.gram())
        self.diagram = diagram.with_rings(rings)
        if diagram.node_count != mirrors.size:
            raise ValidationError(f"Diagram has {diagram.node_count} nodes but there are "
                                  f"{mirrors.size} mirrors")
        if seed is None:
            self.seed = seed_point(mirrors, rings)
        else:
            coords = np.asarray(seed, dtype=float)
            ideal = bool(ideal_mask(mirrors.form, coords[None, :], 1e-9)[0])
            if mirrors.form.kind is FormKind.LORENTZIAN:
                coords = canonicalize(mirrors.form, coords[None, :])[0]
            self.seed = Point(coords, PointKind.IDEAL if ideal else PointKind.INTERIOR,
                              mirrors.form)
        self.name = name
        self._reflections = mirrors.reflections()
        self.nodes = self._group_nodes()

    @property
    def form(self):
        return self.mirrors.form

    @property
    def rank(self) -> int:
        return len(self.nodes)

    def _is_finite(self, nodes: Sequence[int]) -> bool:
        index = [n - 1 for n in nodes]
        G = self.mirrors.gram()[np.ix_(index, index)]
        return signature(G).as_tuple() == (len(index), 0, 0)

    def _group_nodes(self) -> Tuple[int, ...]:
        d = self.diagram
        if self.form.kind is FormKind.SPHERICAL:
            nodes = [n for c in d.components() if d.rings.intersection(c) for n in c]
            return tuple(sorted(nodes))
        n = self.form.dim
        cells = wythoff_subsets(d, d.nodes, n)
        infinite = [c for c in cells if not self._is_finite(c)]
        if infinite:
            raise RealizationError(f"Cells of type {list(infinite[0])} are infinite; for a "
                                   "non-compact simplex ring only a node opposite an ideal vertex")
        if not cells:
            raise RealizationError("No Coxeter-Wythoff subdiagram spans a cell")
        return cells[0]

    def generators(self, nodes: Optional[Sequence[int]] = None) -> List[Isometry]:
        """Reflections of the given nodes (default: those generating the polytope)."""
        nodes = self.nodes if nodes is None else nodes
        return [self._reflections[n - 1] for n in nodes]

    def build(self, ranks: Optional[Iterable[int]] = None) -> Polytope:
        """
        Assemble vertices and faces.

        Parameters:
        -----------
        ranks : Iterable[int], optional
            Face ranks to enumerate (all ranks below the polytope rank by
            default). Vertices are always computed.

        Raises:
        -------
        OrbitCapExceeded
            When the vertex orbit exceeds the configured cap.
        """
        form = self.form
        gens = self.generators()
        # Spherical orbits stay at the scale of the seed.
        orbit_form = None if form.kind is FormKind.SPHERICAL else form
        vertices = orbit_closure(self.seed.coords, gens, orbit_form)
        ideal = ideal_mask(form, vertices, 1e-7)
        logger.info("Wythoff %s: %d vertices from %d generators", self.name or self.diagram,
                    len(vertices), len(gens))
        perms = generator_permutations(vertices, gens, orbit_form)
        index = PointIndex(vertices.shape[1])
        index.add(vertices)
        seed_index = int(index.lookup(self.seed.coords)[0])
        if seed_index < 0:
            raise GeometryError("Seed is missing from its own orbit")

        wanted = set(range(self.rank)) if ranks is None else {r for r in ranks if 0 <= r < self.rank}
        if 2 in wanted and self.rank > 2:
            wanted.add(1)
        wanted.add(0)

        faces: Dict[int, List[Face]] = {}
        face_types: Dict[int, List[FaceType]] = {}
        position = {node: pos for pos, node in enumerate(self.nodes)}
        for rank in sorted(wanted):
            seen: Set[Tuple[int, ...]] = set()
            types = []
            for T in wythoff_subsets(self.diagram, self.nodes, rank):
                base = self._orbit_of_index(seed_index, [perms[position[t]] for t in T])
                found = self._face_orbit(base, perms)
                overlap = seen.intersection(found)
                if overlap:
                    logger.warning("Faces of type %s repeat faces of another type", T)
                seen.update(found)
                types.append(FaceType(T, len(found), len(base), base))
            faces[rank] = sorted(seen)
            face_types[rank] = types
            logger.debug("Rank %d: %d faces in %d orbits", rank, len(seen), len(types))

        if 1 in faces and self.rank >= 2:
            neighbours: Dict[int, Set[int]] = {v: set() for v in range(len(vertices))}
            for i, j in faces[1]:
                neighbours[i].add(j)
                neighbours[j].add(i)
            if self.rank == 2:
                # A polygon keeps its own boundary cycle as the single rank-2 face.
                faces[2] = [cyclic_order(range(len(vertices)), neighbours)]
            elif 2 in faces:
                faces[2] = [cyclic_order(f, neighbours) for f in faces[2]]

        polytope = Polytope(
            geometry=form.kind, vertices=vertices, faces=faces, rank=self.rank, form=form,
            ideal=ideal, diagram=self.diagram, face_types=face_types,
            center=self._center(vertices), name=self.name, nodes=self.nodes)
        if 1 in faces:
            polytope.edge_length = common_length(polytope.edge_lengths())
        return polytope

    def _center(self, vertices: np.ndarray) -> np.ndarray:
        mean = vertices.mean(axis=0)
        if self.form.kind is FormKind.LORENTZIAN:
            return canonicalize(self.form, mean[None, :])[0]
        return mean

    @staticmethod
    def _orbit_of_index(start: int, perms: Sequence[np.ndarray]) -> Tuple[int, ...]:
        found = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for perm in perms:
                    w = int(perm[v])
                    if w not in found:
                        found.add(w)
                        nxt.append(w)
            frontier = nxt
        return tuple(sorted(found))

    @staticmethod
    def _face_orbit(base: Tuple[int, ...], perms: Sequence[np.ndarray]) -> Set[Tuple[int, ...]]:
        found = {base}
        frontier = [np.array(base)]
        while frontier:
            nxt = []
            for face in frontier:
                for perm in perms:
                    image = tuple(sorted(perm[face].tolist()))
                    if image not in found:
                        found.add(image)
                        nxt.append(np.array(image))
            frontier = nxt
        return found


def common_length(lengths: np.ndarray) -> Optional[float]:
    """The common value of a set of edge lengths, None when they differ."""
    if lengths.size == 0:
        return None
    if np.all(np.isinf(lengths)):
        return float("inf")
    if np.any(np.isinf(lengths)):
        return None
    scale = max(1.0, float(np.mean(lengths)))
    if float(np.ptp(lengths)) <= 1e-8 * scale:
        return float(np.mean(lengths))
    return None


def build(diagram: CoxeterDiagram, ranks: Optional[Iterable[int]] = None,
          seed=None) -> Polytope:
    """
    Wythoff polytope (or base tessellation cell) of a ringed diagram.

    Raises:
    -------
    ValidationError
        For a diagram without rings.
    RealizationError
        If the Gram matrix cannot be realized or the seed is not admissible.
    """
    if not diagram.rings:
        raise ValidationError("The Wythoff construction needs at least one ringed node")
    mirrors = recover_normals(gram_from_diagram(diagram))
    builder = WythoffBuilder(mirrors, diagram.rings, diagram, seed=seed, name=render(diagram))
    return builder.build(ranks)
