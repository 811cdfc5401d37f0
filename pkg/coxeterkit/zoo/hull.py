"""
Face lattices of vertex sets in convex position.
"""

import logging
from typing import Dict, List, Set

import numpy as np
from scipy import linalg
from scipy.spatial import ConvexHull

from ..core.exceptions import GeometryError, ValidationError
from ..forms import BilinearForm, FormKind
from ..wythoff.builder import common_length, cyclic_order
from ..wythoff.polytope import Face, Polytope

logger = logging.getLogger(__name__)


def _affine_rank(points: np.ndarray, tol: float) -> int:
    if len(points) < 2:
        return 0
    return int(np.linalg.matrix_rank(points[1:] - points[0], tol=tol))


def _lower_faces(local: np.ndarray, upper: List[Face], rank: int, tol: float) -> List[Face]:
    """Faces of the given rank: intersections of two faces one rank up with that affine rank."""
    incidence: Dict[int, List[int]] = {}
    for index, face in enumerate(upper):
        for v in face:
            incidence.setdefault(v, []).append(index)
    found: Set[Face] = set()
    sets = [set(f) for f in upper]
    for a, face in enumerate(upper):
        partners = {b for v in face for b in incidence[v] if b > a}
        for b in partners:
            common = sets[a] & sets[b]
            if len(common) <= rank:
                continue
            members = tuple(sorted(common))
            if members not in found and _affine_rank(local[list(members)], tol) == rank:
                found.add(members)
    return sorted(found)


def hull_polytope(vertices, name: str = "", tol: float = 1e-7) -> Polytope:
    """
    Polytope spanned by points that are all vertices of their convex hull.

    Coplanar simplices of the hull are merged into facets by collecting all
    points on each distinct supporting hyperplane; lower faces are the
    intersections of pairs of faces one rank up. The input order of the
    points is kept as vertex order.

    Raises:
    -------
    ValidationError
        If the points span less than a polygon.
    GeometryError
        If a point lies inside the hull.
    """
    points = np.asarray(vertices, dtype=float)
    centroid = points.mean(axis=0)
    _, singular, basis = linalg.svd(points - centroid, full_matrices=False)
    scale = max(1.0, float(singular[0])) if singular.size else 1.0
    basis = basis[singular > 1e-9 * scale]
    rank = basis.shape[0]
    if rank < 2:
        raise ValidationError("A hull polytope needs points spanning at least a plane")
    local = (points - centroid) @ basis.T

    hull = ConvexHull(local)
    if len(hull.vertices) != len(points):
        raise GeometryError(f"{len(points) - len(hull.vertices)} points lie inside the hull")
    size = float(np.abs(local).max())
    facets: Set[Face] = set()
    for equation in hull.equations:
        values = local @ equation[:-1] + equation[-1]
        facets.add(tuple(int(i) for i in np.flatnonzero(np.abs(values) <= tol * size)))

    faces: Dict[int, List[Face]] = {rank - 1: sorted(facets)}
    for r in range(rank - 2, 0, -1):
        faces[r] = _lower_faces(local, faces[r + 1], r, tol * size)
    faces[0] = [(i,) for i in range(len(points))]
    neighbours: Dict[int, Set[int]] = {v: set() for v in range(len(points))}
    for i, j in faces[1]:
        neighbours[i].add(j)
        neighbours[j].add(i)
    if rank == 2:
        faces[2] = [cyclic_order(range(len(points)), neighbours)]
    else:
        faces[2] = [cyclic_order(f, neighbours) for f in faces[2]]

    centered = float(np.linalg.norm(centroid)) <= 1e-9 * scale
    ambient = points.shape[1]
    if centered:
        geometry, form = FormKind.SPHERICAL, BilinearForm.spherical(ambient - 1)
    else:
        geometry, form = FormKind.EUCLIDEAN, BilinearForm.euclidean(ambient)
    polytope = Polytope(geometry, points, faces, rank, form, center=centroid, name=name)
    polytope.edge_length = common_length(polytope.edge_lengths())
    logger.info("Hull polytope %s: f-vector %s", name or "", polytope.f_vector())
    return polytope
