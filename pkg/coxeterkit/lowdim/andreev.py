"""
Andreev's conditions for compact or finite-volume non-obtuse hyperbolic
3-polyhedra with prescribed combinatorics.

Faces are numbered by their position in the face list; dihedral angles are
keyed by the unordered pair of faces sharing the edge.
"""

import itertools
import json
import logging
import math
import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, List, Optional, Sequence, Tuple

from ..core.exceptions import ValidationError

logger = logging.getLogger(__name__)

AngleAssignment = Dict[FrozenSet[int], float]

RIGHT = math.pi / 2

_PI_FRACTION = re.compile(r"^\s*pi\s*(?:/\s*(\d+(?:\.\d+)?))?\s*$")


def _edge(u: Hashable, v: Hashable) -> FrozenSet:
    return frozenset((u, v))


class PlanarPolyhedronGraph:
    """
    Combinatorial 3-polyhedron given by its faces as cyclic vertex sequences.

    Attributes:
    -----------
    faces : List[Tuple]
        Cyclic vertex sequences, one per face.
    edge_faces : Dict[FrozenSet, Tuple[int, int]]
        For each edge (pair of vertices) the two faces containing it.
    vertex_faces : Dict[Hashable, FrozenSet[int]]
        Faces incident to each vertex.
    """

    def __init__(self, faces: Sequence[Sequence[Hashable]]):
        self.faces: List[Tuple] = [tuple(face) for face in faces]
        if len(self.faces) < 4:
            raise ValidationError(f"A polyhedron needs at least 4 faces, got {len(self.faces)}")
        incidence: Dict[FrozenSet, List[int]] = {}
        vertex_faces: Dict[Hashable, set] = {}
        for index, face in enumerate(self.faces):
            if len(face) < 3 or len(set(face)) != len(face):
                raise ValidationError(f"Face {index} is not a simple cycle: {list(face)}")
            for position, vertex in enumerate(face):
                incidence.setdefault(_edge(vertex, face[(position + 1) % len(face)]),
                                     []).append(index)
                vertex_faces.setdefault(vertex, set()).add(index)
        for edge, owners in incidence.items():
            if len(owners) != 2:
                raise ValidationError(f"Edge {sorted(edge, key=str)} lies on {len(owners)} "
                                      "faces, expected 2")
        self.edge_faces: Dict[FrozenSet, Tuple[int, int]] = {
            edge: tuple(sorted(owners)) for edge, owners in incidence.items()}
        self.vertex_faces = {v: frozenset(fs) for v, fs in vertex_faces.items()}
        euler = len(self.vertex_faces) - len(self.edge_faces) + len(self.faces)
        if euler != 2:
            raise ValidationError(f"Euler characteristic {euler} != 2: not a sphere")
        self._face_edges: Dict[FrozenSet[int], FrozenSet] = {
            frozenset(owners): edge for edge, owners in self.edge_faces.items()}

    @classmethod
    def from_faces(cls, faces: Sequence[Sequence[Hashable]]) -> "PlanarPolyhedronGraph":
        return cls(faces)

    @classmethod
    def from_polytope(cls, polytope) -> "PlanarPolyhedronGraph":
        """Graph of a built 3-polytope; its 2-faces are cyclically ordered."""
        if polytope.rank != 3:
            raise ValidationError(f"Expected a 3-polytope, got rank {polytope.rank}")
        return cls(polytope.faces[2])

    @classmethod
    def from_json(cls, path: str) -> "PlanarPolyhedronGraph":
        return read_andreev_input(path)[0]

    def __repr__(self) -> str:
        return (f"PlanarPolyhedronGraph(V={len(self.vertex_faces)}, E={len(self.edge_faces)}, "
                f"F={len(self.faces)})")

    @property
    def vertices(self) -> List[Hashable]:
        return list(self.vertex_faces)

    def valence(self, vertex: Hashable) -> int:
        return len(self.vertex_faces[vertex])

    def adjacent(self, f: int, g: int) -> bool:
        """True when faces f and g share an edge."""
        return frozenset((f, g)) in self._face_edges

    def shared_edge(self, f: int, g: int) -> Optional[FrozenSet]:
        return self._face_edges.get(frozenset((f, g)))

    def face_pair(self, u: Hashable, v: Hashable) -> FrozenSet[int]:
        """Angle key of the edge uv."""
        try:
            return frozenset(self.edge_faces[_edge(u, v)])
        except KeyError as e:
            raise ValidationError(f"{u}-{v} is not an edge") from e

    def vertex_angle_keys(self, vertex: Hashable) -> List[FrozenSet[int]]:
        """Face pairs of the edges at a vertex."""
        faces = sorted(self.vertex_faces[vertex])
        return [frozenset(pair) for pair in itertools.combinations(faces, 2)
                if self.adjacent(*pair) and vertex in self.shared_edge(*pair)]

    def is_tetrahedron(self) -> bool:
        return len(self.faces) == 4 and all(len(f) == 3 for f in self.faces)

    def is_triangular_prism(self) -> bool:
        sizes = sorted(len(f) for f in self.faces)
        return sizes == [3, 3, 4, 4, 4] and len(self.vertex_faces) == 6

    def uniform_angles(self, angle: float) -> AngleAssignment:
        return {frozenset(owners): angle for owners in self.edge_faces.values()}


@dataclass(frozen=True)
class AndreevResult:
    """
    Outcome of andreev_check.

    ``witness`` holds the vertex (conditions 1 and 2) or the face indices of
    the offending configuration (conditions 3 to 5).
    """
    realizable: bool
    condition: Optional[int] = None
    witness: Optional[Tuple] = None

    def __str__(self) -> str:
        if self.realizable:
            return "Realizable"
        return f"Fails({self.condition}, witness={list(self.witness)})"


def _is_right(angle: float, tol: float) -> bool:
    return abs(angle - RIGHT) <= tol


def _check_assignment(graph: PlanarPolyhedronGraph, angles: AngleAssignment,
                      tol: float) -> AngleAssignment:
    normalized = {frozenset(k): float(v) for k, v in angles.items()}
    for owners in graph.edge_faces.values():
        key = frozenset(owners)
        if key not in normalized:
            raise ValidationError(f"No angle for the edge between faces {sorted(key)}")
        if not 0 < normalized[key] <= RIGHT + tol:
            raise ValidationError(f"Angle {normalized[key]} between faces {sorted(key)} "
                                  "is outside (0, π/2]")
    extra = set(normalized) - {frozenset(o) for o in graph.edge_faces.values()}
    if extra:
        raise ValidationError(f"Angles given for non-adjacent faces {sorted(map(sorted, extra))}")
    return normalized


def _endpoints(graph: PlanarPolyhedronGraph, pairs) -> set:
    points = set()
    for f, g in pairs:
        points |= graph.shared_edge(f, g)
    return points


def andreev_check(graph: PlanarPolyhedronGraph, angles: AngleAssignment,
                  tol: float = 1e-9) -> AndreevResult:
    """
    Check Andreev's five conditions and report the first one violated.

    (1) the three angles at a 3-valent vertex sum to at least π;
    (2) all four angles at a 4-valent vertex equal π/2;
    (3) three pairwise adjacent faces whose edges have six distinct endpoints
        have angle sum below π;
    (4) four cyclically adjacent faces whose edges have eight distinct
        endpoints do not all meet at π/2;
    (5) if faces A and C meet only at a vertex v, and B is adjacent to both
        without containing v, the angles AB and BC are not both π/2.

    Raises:
    -------
    ValidationError
        For a tetrahedron or triangular prism, a vertex of valence other than
        3 or 4, or an incomplete or out-of-range angle assignment.
    """
    if graph.is_tetrahedron() or graph.is_triangular_prism():
        raise ValidationError("Andreev's conditions do not apply to tetrahedra "
                              "and triangular prisms")
    for vertex in graph.vertices:
        if graph.valence(vertex) not in (3, 4):
            raise ValidationError(f"Vertex {vertex} has valence {graph.valence(vertex)}")
    alpha = _check_assignment(graph, angles, tol)
    n_faces = len(graph.faces)

    for vertex in graph.vertices:
        keys = graph.vertex_angle_keys(vertex)
        if len(keys) == 3 and sum(alpha[k] for k in keys) < math.pi - tol:
            return AndreevResult(False, 1, (vertex,))
    for vertex in graph.vertices:
        keys = graph.vertex_angle_keys(vertex)
        if len(keys) == 4 and not all(_is_right(alpha[k], tol) for k in keys):
            return AndreevResult(False, 2, (vertex,))

    for triple in itertools.combinations(range(n_faces), 3):
        pairs = list(itertools.combinations(triple, 2))
        if not all(graph.adjacent(*p) for p in pairs):
            continue
        if len(_endpoints(graph, pairs)) == 6 and \
                sum(alpha[frozenset(p)] for p in pairs) >= math.pi - tol:
            return AndreevResult(False, 3, triple)

    for quad in itertools.combinations(range(n_faces), 4):
        first, rest = quad[0], quad[1:]
        for middle in itertools.permutations(rest):
            # Each cyclic order is visited once: fix the first face and
            # require the second label below the last.
            if middle[0] > middle[2]:
                continue
            cycle = (first,) + middle
            pairs = [(cycle[i], cycle[(i + 1) % 4]) for i in range(4)]
            if not all(graph.adjacent(*p) for p in pairs):
                continue
            if len(_endpoints(graph, pairs)) == 8 and \
                    all(_is_right(alpha[frozenset(p)], tol) for p in pairs):
                return AndreevResult(False, 4, cycle)

    for a, c in itertools.combinations(range(n_faces), 2):
        if graph.adjacent(a, c):
            continue
        common = set(graph.faces[a]) & set(graph.faces[c])
        if not common:
            continue
        for b in range(n_faces):
            if b in (a, c) or not (graph.adjacent(a, b) and graph.adjacent(b, c)):
                continue
            if common & set(graph.faces[b]):
                continue
            if _is_right(alpha[frozenset((a, b))], tol) and _is_right(alpha[frozenset((b, c))], tol):
                return AndreevResult(False, 5, (a, b, c))

    logger.debug("Andreev conditions hold for %r", graph)
    return AndreevResult(True)


def parse_angle(value) -> float:
    """A number of radians or a string ``pi/m`` (``pi`` alone is π)."""
    if isinstance(value, (int, float)):
        return float(value)
    match = _PI_FRACTION.match(str(value))
    if not match:
        raise ValidationError(f"Cannot read angle {value!r}; use radians or 'pi/m'")
    return math.pi / float(match.group(1) or 1)


def read_andreev_input(path: str) -> Tuple[PlanarPolyhedronGraph, AngleAssignment]:
    """
    Read a graph and angle assignment from JSON::

        {"faces": [[0, 1, 2, 3, 4], ...],
         "default_angle": "pi/2",
         "angles": [[0, 1, "pi/3"], ...]}

    Listed angles override the default; face indices are 0-based.
    """
    with open(path, encoding="utf-8") as handle:
        try:
            payload = json.load(handle)
        except json.JSONDecodeError as e:
            raise ValidationError(f"{path}: invalid JSON ({e})") from e
    if "faces" not in payload:
        raise ValidationError(f"{path}: missing 'faces'")
    graph = PlanarPolyhedronGraph(payload["faces"])
    angles: AngleAssignment = {}
    if "default_angle" in payload:
        angles = graph.uniform_angles(parse_angle(payload["default_angle"]))
    for entry in payload.get("angles", []):
        if len(entry) != 3:
            raise ValidationError(f"{path}: angle entries are [face, face, angle], got {entry}")
        f, g, value = entry
        angles[frozenset((int(f), int(g)))] = parse_angle(value)
    logger.info("Read %r with %d angles from %s", graph, len(angles), path)
    return graph, angles
