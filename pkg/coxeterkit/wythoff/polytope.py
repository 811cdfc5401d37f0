"""
Result types of the Wythoff construction.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..diagram.model import CoxeterDiagram
from ..forms import BilinearForm, FormKind, Point, PointKind, intrinsic_distance

Face = Tuple[int, ...]


@dataclass(frozen=True)
class FaceType:
    """Faces of one orbit: the Coxeter-Wythoff subdiagram (1-based nodes), the count and
    the vertex set of the face through the seed."""
    nodes: Tuple[int, ...]
    count: int
    vertex_count: int
    base: Tuple[int, ...] = ()


@dataclass(eq=False)
class Polytope:
    """
    A polytope given by coordinates and its faces of every rank.

    Attributes:
    -----------
    geometry : FormKind
        SPHERICAL for polytopes embedded in the ambient Euclidean space of a
        finite reflection group, EUCLIDEAN or LORENTZIAN for cells of
        tessellations.
    vertices : np.ndarray
        One row per vertex, in canonical coordinate order.
    faces : Dict[int, List[Face]]
        Vertex-index tuples by rank 0..rank−1; rank-2 faces are cyclically
        ordered, other faces sorted.
    rank : int
        Dimension of the polytope.
    form : BilinearForm
        Ambient form used to build it.
    ideal : np.ndarray
        Boolean mask of the ideal vertices.
    edge_length : float, optional
        Common edge length when all edges are equal.
    nodes : Tuple[int, ...]
        Diagram nodes (1-based) whose reflections generate the polytope.
    """
    geometry: FormKind
    vertices: np.ndarray
    faces: Dict[int, List[Face]]
    rank: int
    form: BilinearForm
    ideal: Optional[np.ndarray] = None
    edge_length: Optional[float] = None
    diagram: Optional[CoxeterDiagram] = None
    face_types: Dict[int, List[FaceType]] = field(default_factory=dict)
    center: Optional[np.ndarray] = None
    name: str = ""
    nodes: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.ideal is None:
            self.ideal = np.zeros(len(self.vertices), dtype=bool)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"Polytope{label}(rank={self.rank}, f={self.f_vector()})"

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> List[Face]:
        return self.faces.get(1, [])

    @property
    def facets(self) -> List[Face]:
        return self.faces.get(self.rank - 1, [])

    @property
    def is_compact(self) -> bool:
        return not bool(np.any(self.ideal))

    def f_vector(self) -> List[int]:
        return [len(self.faces.get(r, [])) for r in range(self.rank)]

    def euler_characteristic(self) -> int:
        """Alternating sum of the f-vector; 1 − (−1)^rank for a compact boundary."""
        return sum((-1) ** r * count for r, count in enumerate(self.f_vector()))

    def points(self) -> List[Point]:
        kinds = [PointKind.IDEAL if flag else PointKind.INTERIOR for flag in self.ideal]
        return [Point(v, kind, self.form) for v, kind in zip(self.vertices, kinds)]

    def distance(self, i: int, j: int) -> float:
        """Distance between two vertices: chord length for embedded spherical polytopes."""
        if self.geometry is FormKind.LORENTZIAN:
            return intrinsic_distance(self.form, self.vertices[i], self.vertices[j])
        return float(np.linalg.norm(self.vertices[i] - self.vertices[j]))

    def edge_lengths(self) -> np.ndarray:
        return np.array([self.distance(i, j) for i, j in self.edges])

    def valences(self) -> np.ndarray:
        counts = np.zeros(self.vertex_count, dtype=int)
        for i, j in self.edges:
            counts[i] += 1
            counts[j] += 1
        return counts

    def face_polytope(self, rank: int, index: int) -> "Polytope":
        """The face faces[rank][index] as a polytope of its own, vertices renumbered."""
        members = self.faces[rank][index]
        keep = sorted(members)
        position = {v: p for p, v in enumerate(keep)}
        member_set = set(members)
        faces = {}
        for r in range(rank):
            faces[r] = [tuple(position[v] for v in face) for face in self.faces[r]
                        if member_set.issuperset(face)]
        edge = self.edge_length
        return Polytope(self.geometry, self.vertices[keep], faces, rank, self.form,
                        self.ideal[keep], edge, None, {}, self.vertices[keep].mean(axis=0))

    def vertex_faces(self, rank: int) -> Dict[int, List[int]]:
        """Indices of the rank-r faces at each vertex."""
        incidence: Dict[int, List[int]] = {v: [] for v in range(self.vertex_count)}
        for index, face in enumerate(self.faces.get(rank, [])):
            for v in face:
                incidence[v].append(index)
        return incidence


@dataclass(frozen=True)
class TessellationCell:
    """
    One cell of a patch.

    ``word`` is the group word g (1-based generator labels) of the copy g(C)
    of the base cell, or for lattice slices the corner of the cut cube.
    ``prototype`` indexes the patch prototype whose vertex order
    ``vertex_ids`` follows.
    """
    word: Tuple[int, ...]
    vertex_ids: Tuple[int, ...]
    depth: int
    prototype: int = 0

    @property
    def label(self) -> str:
        return "".join(f"r{g}" for g in self.word) or "e"


@dataclass(eq=False)
class TessellationPatch:
    """
    Cells of a tessellation reached from the base cell by at most ``depth``
    facet crossings.

    Attributes:
    -----------
    vertices : np.ndarray
        Shared vertex array of all cells.
    cells : List[TessellationCell]
        Cells in breadth-first order, the base cell first.
    adjacency : List[Tuple[int, int]]
        Index pairs (i < j) of cells sharing a facet.
    base : Polytope
        The base cell with its full face structure.
    prototypes : List[Polytope]
        Cell shapes of the patch; defaults to the base cell alone.
    """
    geometry: FormKind
    form: BilinearForm
    vertices: np.ndarray
    cells: List[TessellationCell]
    adjacency: List[Tuple[int, int]]
    depth: int
    base: Polytope
    ideal: Optional[np.ndarray] = None
    prototypes: List[Polytope] = field(default_factory=list)

    def __post_init__(self):
        if self.ideal is None:
            self.ideal = np.zeros(len(self.vertices), dtype=bool)
        if not self.prototypes:
            self.prototypes = [self.base]

    def __len__(self) -> int:
        return len(self.cells)

    def neighbours(self, cell: int) -> List[int]:
        return sorted({j for i, j in self.adjacency if i == cell}
                      | {i for i, j in self.adjacency if j == cell})

    def cell_faces(self, cell: int, rank: int) -> List[Tuple[int, ...]]:
        """Faces of a cell in patch vertex numbering, mapped from its prototype."""
        ids = self.cells[cell].vertex_ids
        shape = self.prototypes[self.cells[cell].prototype]
        return [tuple(ids[v] for v in face) for face in shape.faces[rank]]

    def cell_polytope(self, cell: int) -> Polytope:
        ids = list(self.cells[cell].vertex_ids)
        shape = self.prototypes[self.cells[cell].prototype]
        return Polytope(self.geometry, self.vertices[ids], shape.faces, shape.rank,
                        self.form, self.ideal[ids], shape.edge_length, shape.diagram,
                        shape.face_types, self.vertices[ids].mean(axis=0), shape.name)
