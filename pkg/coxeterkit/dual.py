"""
Polar duals of polytopes centered at the origin and the hyperbolic
realization of duals in the Klein model.

The dual of P is P* = {x : ⟨x, y⟩ ≤ 1 for all y ∈ P}. Its vertices are the
points x_F with ⟨x_F, v⟩ = 1 on the vertices v of a facet F of P, and its
faces are the facet sets of the faces of P, so the face lattice is reversed.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Set, Tuple

import numpy as np
from scipy import linalg

from .core.exceptions import GeometryError, ValidationError
from .forms import BilinearForm, FormKind
from .wythoff.builder import cyclic_order
from .wythoff.groups import dihedral_angles
from .wythoff.polytope import Face, Polytope

logger = logging.getLogger(__name__)

RESIDUAL_TOL = 1e-9
RADIUS_TOL = 1e-8
ANGLE_SPREAD_TOL = 1e-8


@dataclass(frozen=True)
class RadiusClass:
    """Dual vertices at one distance from the center."""
    radius: float
    members: Tuple[int, ...]


@dataclass(eq=False)
class DualPolytope:
    """
    The polar dual together with its primal.

    Attributes:
    -----------
    polytope : Polytope
        The dual; vertex i is dual to facet i of the primal.
    source : Polytope
        The primal polytope.
    radius_classes : List[RadiusClass]
        Dual vertices grouped by norm, outermost first.
    """
    polytope: Polytope
    source: Polytope
    radius_classes: List[RadiusClass] = field(default_factory=list)

    @property
    def vertices(self) -> np.ndarray:
        return self.polytope.vertices

    @property
    def faces(self) -> Dict[int, List[Face]]:
        return self.polytope.faces

    def f_vector(self) -> List[int]:
        return self.polytope.f_vector()


def _linear_frame(vertices: np.ndarray) -> np.ndarray:
    """Orthonormal rows spanning the linear hull of the vertices."""
    _, singular, basis = linalg.svd(vertices, full_matrices=False)
    return basis[singular > 1e-9 * max(1.0, singular[0])]


def radius_classes(points: np.ndarray, tol: float = RADIUS_TOL) -> List[RadiusClass]:
    """Group rows by Euclidean norm, outermost class first."""
    norms = np.linalg.norm(points, axis=1)
    order = np.argsort(-norms, kind="stable")
    classes: List[List[int]] = []
    for i in order:
        if classes and abs(norms[classes[-1][0]] - norms[i]) <= tol * max(1.0, norms[i]):
            classes[-1].append(int(i))
        else:
            classes.append([int(i)])
    return [RadiusClass(float(np.mean(norms[c])), tuple(sorted(c))) for c in classes]


def _facets_containing(polytope: Polytope) -> Dict[Face, Tuple[int, ...]]:
    incidence = polytope.vertex_faces(polytope.rank - 1)
    facet_sets = [set(f) for f in polytope.facets]
    containing = {}
    for rank in range(polytope.rank - 1):
        for face in polytope.faces[rank]:
            containing[face] = tuple(sorted(f for f in incidence[face[0]]
                                            if facet_sets[f].issuperset(face)))
    return containing


def dual_polytope(polytope: Polytope) -> DualPolytope:
    """
    Polar dual of a polytope whose center is the origin.

    Raises:
    -------
    ValidationError
        If the polytope is not of spherical type or misses face ranks.
    GeometryError
        If the origin is not an interior point.
    """
    if polytope.geometry is not FormKind.SPHERICAL:
        raise ValidationError("Polar duals are taken of polytopes embedded around the origin")
    n = polytope.rank
    missing = [r for r in range(n) if r not in polytope.faces]
    if missing:
        raise ValidationError(f"Dual needs faces of every rank, missing ranks {missing}")

    frame = _linear_frame(polytope.vertices)
    if frame.shape[0] != n:
        raise GeometryError("Polytope is not full-dimensional around the origin")
    local = polytope.vertices @ frame.T
    dual_local = np.empty((len(polytope.facets), n))
    for index, facet in enumerate(polytope.facets):
        rows = local[list(facet)]
        x, *_ = linalg.lstsq(rows, np.ones(len(facet)))
        if np.max(np.abs(rows @ x - 1.0)) > RESIDUAL_TOL * max(1.0, float(np.abs(x).max())):
            raise GeometryError(f"Facet {index} passes through the origin")
        dual_local[index] = x
    if np.max(local @ dual_local.T) > 1.0 + 1e-9:
        raise GeometryError("Origin is not an interior point of the polytope")

    containing = _facets_containing(polytope)
    faces: Dict[int, List[Face]] = {0: [(i,) for i in range(len(polytope.facets))]}
    for rank in range(1, n - 1):
        faces[rank] = sorted(containing[face] for face in polytope.faces[n - 1 - rank])
    if n >= 2:
        # Facet j of the dual is the facet of primal vertex j.
        faces[n - 1] = [containing[(v,)] for v in range(polytope.vertex_count)]
        neighbours: Dict[int, Set[int]] = {v: set() for v in range(len(polytope.facets))}
        for i, j in faces[1]:
            neighbours[i].add(j)
            neighbours[j].add(i)
        if n == 2:
            faces[2] = [cyclic_order(range(len(polytope.facets)), neighbours)]
        else:
            faces[2] = [cyclic_order(f, neighbours) for f in faces[2]]

    vertices = dual_local @ frame
    dual = Polytope(FormKind.SPHERICAL, vertices, faces, n, polytope.form,
                    center=np.zeros(vertices.shape[1]),
                    name=f"dual of {polytope.name}" if polytope.name else "dual")
    lengths = dual.edge_lengths()
    if lengths.size and float(np.ptp(lengths)) <= 1e-8 * max(1.0, float(lengths.mean())):
        dual.edge_length = float(lengths.mean())
    classes = radius_classes(vertices)
    logger.info("Dual polytope: f-vector %s, %d radius classes", dual.f_vector(), len(classes))
    return DualPolytope(dual, polytope, classes)


def ridge_angles(dual: DualPolytope) -> np.ndarray:
    """
    Dihedral angles at the ridges of a dual, which agree for a uniform primal.

    Raises:
    -------
    GeometryError
        If the angles spread by more than 1e−8.
    """
    angles = np.array(list(dihedral_angles(dual.polytope).values()))
    if angles.size and float(np.ptp(angles)) >= ANGLE_SPREAD_TOL:
        raise GeometryError(f"Ridge angles of the dual differ: spread {float(np.ptp(angles)):.3e}")
    return angles


@dataclass(eq=False)
class HyperbolicRealization:
    """
    A dual read as a polyhedron of the Klein model.

    Attributes:
    -----------
    polytope : Polytope
        Lorentzian polytope with the dual's combinatorics.
    angles : Dict[Tuple[int, int], float]
        Dihedral angle per pair of adjacent facets.
    ideal : List[int]
        Vertices on the sphere at infinity.
    real : List[int]
        Vertices inside hyperbolic space.
    """
    polytope: Polytope
    angles: Dict[Tuple[int, int], float]
    ideal: List[int]
    real: List[int]

    def is_right_angled(self, tol: float = 1e-6) -> bool:
        return all(abs(a - math.pi / 2) <= tol for a in self.angles.values())


def hyperbolic_realization(dual: DualPolytope, tol: float = 1e-9) -> HyperbolicRealization:
    """
    Scale the dual so its outermost vertices lie on the unit sphere and read
    the unit ball as the Klein model of ℍⁿ.

    The dual facet of a primal vertex v is {⟨y, v⟩ ≤ s} after scaling by
    s = 1/R, with Lorentzian outward normal (s, v) normalized; the angle of
    two facets is arccos(−⟨N₁, N₂⟩).

    Raises:
    -------
    ValidationError
        If the dual has no radius classes.
    GeometryError
        If a facet misses the ball.
    """
    if not dual.radius_classes:
        raise ValidationError("Dual has no vertices")
    primal = dual.source
    n = dual.polytope.rank
    frame = _linear_frame(primal.vertices)
    scale = 1.0 / dual.radius_classes[0].radius
    y = (dual.vertices @ frame.T) * scale
    norms = np.linalg.norm(y, axis=1)

    ideal = np.abs(norms - 1.0) <= tol
    lifted = np.hstack([np.ones((len(y), 1)), y])
    real = ~ideal
    lifted[real] /= np.sqrt(1.0 - norms[real] ** 2)[:, None]
    if len(dual.radius_classes) > 2:
        logger.info("Dual has %d radius classes; inner classes are real vertices",
                    len(dual.radius_classes))

    form = BilinearForm.lorentzian(n)
    u = primal.vertices @ frame.T
    normals = np.hstack([np.full((len(u), 1), scale), u])
    norm2 = -normals[:, 0] ** 2 + np.sum(normals[:, 1:] ** 2, axis=1)
    if np.any(norm2 <= 0):
        raise GeometryError("A facet of the scaled dual misses the unit ball")
    normals /= np.sqrt(norm2)[:, None]

    angles = {}
    for i, j in primal.edges:
        c = -normals[i, 0] * normals[j, 0] + normals[i, 1:] @ normals[j, 1:]
        angles[(i, j)] = math.acos(float(np.clip(-c, -1.0, 1.0)))

    center = np.zeros(n + 1)
    center[0] = 1.0
    polytope = Polytope(FormKind.LORENTZIAN, lifted, dual.faces, n, form, ideal=ideal,
                        center=center, name=f"hyperbolic {dual.polytope.name}")
    result = HyperbolicRealization(polytope, angles, [int(i) for i in np.flatnonzero(ideal)],
                                   [int(i) for i in np.flatnonzero(real)])
    logger.info("Hyperbolic realization: %d ideal, %d real vertices, right-angled: %s",
                len(result.ideal), len(result.real), result.is_right_angled())
    return result
