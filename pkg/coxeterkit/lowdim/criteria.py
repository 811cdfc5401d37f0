"""
Closed-form existence criteria for triangles, tetrahedra and triangular prisms
with non-obtuse dihedral angles.

Tetrahedron angles follow the edge numbering below. Faces F1..F4 are the
rows of the Gram matrix, vertex vᵢ is opposite face Fᵢ::

    α1 = F1∩F2   α2 = F1∩F3   α3 = F2∩F3
    α4 = F3∩F4   α5 = F2∩F4   α6 = F1∩F4

Prism angles: α1..α3 on the lateral edges bᵢtᵢ, α4..α6 on the bottom edges
b1b2, b2b3, b3b1 and α7..α9 on the top edges t1t2, t2t3, t3t1.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np

from ..core.exceptions import ClassificationError, ValidationError
from ..gram import signature

logger = logging.getLogger(__name__)

ANGLE_TOL = 1e-9

TETRAHEDRON_VERTICES = {
    1: (3, 4, 5),
    2: (2, 6, 4),
    3: (1, 6, 5),
    4: (1, 2, 3),
}

PRISM_VERTICES = {
    "b1": (1, 4, 6),
    "b2": (2, 4, 5),
    "b3": (3, 5, 6),
    "t1": (1, 7, 9),
    "t2": (2, 7, 8),
    "t3": (3, 8, 9),
}


class LowDimGeometry(Enum):
    """Geometry hosting a triangle or tetrahedron."""
    SPHERICAL = "Spherical"
    EUCLIDEAN = "Euclidean"
    HYPERBOLIC = "Hyperbolic"


def _check_angles(angles: Sequence[float], allow_zero: bool = False) -> np.ndarray:
    angles = np.asarray(angles, dtype=float)
    low_ok = angles >= 0 if allow_zero else angles > 0
    if not np.all(low_ok & (angles <= math.pi / 2 + ANGLE_TOL)):
        bound = "[0, π/2]" if allow_zero else "(0, π/2]"
        raise ValidationError(f"Dihedral angles must lie in {bound}, got {angles.tolist()}")
    return angles


def _by_sum(total: float, tol: float) -> LowDimGeometry:
    if total > math.pi + tol:
        return LowDimGeometry.SPHERICAL
    if total < math.pi - tol:
        return LowDimGeometry.HYPERBOLIC
    return LowDimGeometry.EUCLIDEAN


def _by_signature(G) -> LowDimGeometry:
    sig = signature(G, 1e-9)
    k = G.shape[0]
    if sig.as_tuple() == (k, 0, 0):
        return LowDimGeometry.SPHERICAL
    if sig.negative == 0:
        return LowDimGeometry.EUCLIDEAN
    return LowDimGeometry.HYPERBOLIC


def triangle_gram(alpha: float, beta: float, gamma: float) -> np.ndarray:
    """Gram matrix of the sides opposite the vertices with angles α, β, γ."""
    ca, cb, cc = math.cos(alpha), math.cos(beta), math.cos(gamma)
    return np.array([[1.0, -cc, -cb], [-cc, 1.0, -ca], [-cb, -ca, 1.0]])


def triangle_geometry(alpha: float, beta: float, gamma: float,
                      tol: float = ANGLE_TOL) -> LowDimGeometry:
    """
    Geometry of the triangle with angles α, β, γ ∈ [0, π/2].

    The angle sum decides (larger than π: spherical, equal: Euclidean,
    smaller: hyperbolic); the signature of the Gram matrix must agree.

    Raises:
    -------
    ValidationError
        For an angle outside [0, π/2].
    ClassificationError
        If the angle sum and the Gram signature disagree.
    """
    angles = _check_angles([alpha, beta, gamma], allow_zero=True)
    by_sum = _by_sum(float(angles.sum()), tol)
    by_gram = _by_signature(triangle_gram(*angles))
    if by_sum is not by_gram:
        raise ClassificationError(f"Angle sum says {by_sum.value}, Gram signature says "
                                  f"{by_gram.value} for angles {angles.tolist()}")
    return by_sum


def link_face_angles(a1: float, a2: float, a3: float,
                     tol: float = ANGLE_TOL) -> Tuple[float, float, float]:
    """
    Face angles θ₁, θ₂, θ₃ at a vertex where three faces meet with dihedral
    angles α₁, α₂, α₃ (θᵢ lies opposite αᵢ in the vertex link).

    cos θᵢ = (cos αᵢ + cos αᵢ₊₁ cos αᵢ₊₂) / (sin αᵢ₊₁ sin αᵢ₊₂)

    Raises:
    -------
    ValidationError
        For angles outside (0, π/2] or an angle sum below π.
    """
    alphas = _check_angles([a1, a2, a3])
    if alphas.sum() < math.pi - tol:
        raise ValidationError(f"Angle sum {alphas.sum():.12g} < π: no such vertex")
    thetas = []
    for i in range(3):
        a, b, c = alphas[i], alphas[(i + 1) % 3], alphas[(i + 2) % 3]
        cos_theta = (math.cos(a) + math.cos(b) * math.cos(c)) / (math.sin(b) * math.sin(c))
        thetas.append(math.acos(min(1.0, max(-1.0, cos_theta))))
    return tuple(thetas)


def tetrahedron_gram(alphas: Sequence[float]) -> np.ndarray:
    """Gram matrix of faces F1..F4 for the edge numbering of this module."""
    c1, c2, c3, c4, c5, c6 = (math.cos(a) for a in alphas)
    return np.array([
        [1.0, -c1, -c2, -c6],
        [-c1, 1.0, -c3, -c5],
        [-c2, -c3, 1.0, -c4],
        [-c6, -c5, -c4, 1.0],
    ])


@dataclass(frozen=True)
class TetrahedronResult:
    """Geometry of a tetrahedron with the F4 face-angle sum and ideal vertices."""
    geometry: LowDimGeometry
    face_angle_sum: float
    ideal_vertices: Tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.geometry is LowDimGeometry.HYPERBOLIC:
            return f"Hyperbolic(ideal vertices {list(self.ideal_vertices)})"
        return self.geometry.value


def tetrahedron_geometry(alphas: Sequence[float], tol: float = ANGLE_TOL) -> TetrahedronResult:
    """
    Geometry of the tetrahedron with dihedral angles α₁..α₆.

    The face angles of F4 at v1, v2, v3 come from the vertex links; their sum
    compared with π gives the geometry. Vertices whose three angles sum to
    exactly π are ideal.

    Raises:
    -------
    ValidationError
        For wrong arity, angles outside (0, π/2], or a vertex sum below π.
    ClassificationError
        If the face-angle rule and the Gram signature disagree.
    """
    if len(alphas) != 6:
        raise ValidationError(f"A tetrahedron has 6 dihedral angles, got {len(alphas)}")
    a = dict(enumerate(_check_angles(alphas), start=1))
    for vertex, edges in TETRAHEDRON_VERTICES.items():
        total = sum(a[e] for e in edges)
        if total < math.pi - tol:
            raise ValidationError(f"Vertex v{vertex}: angle sum {total:.12g} < π")

    theta1 = link_face_angles(a[3], a[4], a[5], tol)[0]
    theta2 = link_face_angles(a[2], a[6], a[4], tol)[0]
    theta3 = link_face_angles(a[1], a[6], a[5], tol)[0]
    total = theta1 + theta2 + theta3
    geometry = _by_sum(total, tol)

    by_gram = _by_signature(tetrahedron_gram([a[i] for i in range(1, 7)]))
    if by_gram is not geometry:
        raise ClassificationError(f"Face-angle rule says {geometry.value}, Gram signature "
                                  f"says {by_gram.value}")
    ideal = ()
    if geometry is LowDimGeometry.HYPERBOLIC:
        ideal = tuple(v for v, edges in TETRAHEDRON_VERTICES.items()
                      if abs(sum(a[e] for e in edges) - math.pi) <= tol)
    return TetrahedronResult(geometry, total, ideal)


@dataclass(frozen=True)
class PrismResult:
    """Outcome of the prism criterion; condition names the failing clause."""
    realizable: bool
    condition: Optional[int] = None

    def __str__(self) -> str:
        return "Realizable" if self.realizable else f"Fails({self.condition})"


def prism_realizable(alphas: Sequence[float], tol: float = ANGLE_TOL) -> PrismResult:
    """
    Existence of a hyperbolic triangular prism with angles α₁..α₉.

    Clause (1): α₁ + α₂ + α₃ < π. Clause (2): the base and top angles
    α₄..α₉ are not all π/2.

    Raises:
    -------
    ValidationError
        For wrong arity, angles outside (0, π/2], or a vertex with angle sum
        below π (the vertex is named).
    """
    if len(alphas) != 9:
        raise ValidationError(f"A triangular prism has 9 dihedral angles, got {len(alphas)}")
    a = dict(enumerate(_check_angles(alphas), start=1))
    for vertex, edges in PRISM_VERTICES.items():
        total = sum(a[e] for e in edges)
        if total < math.pi - tol:
            raise ValidationError(f"Vertex {vertex}: angle sum {total:.12g} < π")
    if a[1] + a[2] + a[3] >= math.pi - tol:
        return PrismResult(False, 1)
    if all(abs(a[i] - math.pi / 2) <= tol for i in range(4, 10)):
        return PrismResult(False, 2)
    return PrismResult(True)
