"""
Faces and ideal vertices of a non-obtuse polyhedron read off its Gram matrix.

A face lies in the facets J exactly when the principal submatrix G_J is
positive definite; the face then has dimension n − |J|. Ideal vertices
correspond to maximal index sets whose blocks are all affine, of rank n − 1.
Facet indices are 0-based.
"""

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg

from .core.config import get_settings
from .core.exceptions import GeometryError, RealizationError, ValidationError
from .forms import FormKind, Point, PointKind, canonicalize, inner, normalize_point
from .gram import (MirrorSystem, check_gram, decompose, ideal_vertex_subsets, perron,
                   signature, spherical_subsets, subset_info, vinberg_realizable)

logger = logging.getLogger(__name__)


class FaceKind(Enum):
    """Real faces versus ideal vertices."""
    REAL = "real"
    IDEAL = "ideal"


@dataclass(frozen=True, eq=False)
class FaceRecord:
    """
    One face of the polyhedron.

    Attributes:
    -----------
    facet_set : Tuple[int, ...]
        Sorted indices of the facets containing the face.
    kind : FaceKind
        REAL, or IDEAL for a vertex at infinity.
    dimension : int
        Dimension of the face (0 for ideal vertices).
    gram_block : np.ndarray
        The principal submatrix G_J, the Gram matrix of the face's link.
    """
    facet_set: Tuple[int, ...]
    kind: FaceKind
    dimension: int
    gram_block: np.ndarray

    @property
    def is_ideal(self) -> bool:
        return self.kind is FaceKind.IDEAL

    def to_dict(self) -> Dict:
        return {"facets": list(self.facet_set), "kind": self.kind.value,
                "dimension": self.dimension}


@dataclass
class FaceLattice:
    """
    Faces of a polyhedron ordered by (dimension descending, facet set).

    Incidence is reverse inclusion of facet sets. ``verified`` is False for
    polyhedra with more than n + 1 facets, where the enumeration has not been
    cross-checked against a construction.
    """
    n: int
    geometry: FormKind
    records: List[FaceRecord] = field(default_factory=list)
    verified: bool = True

    def __len__(self) -> int:
        return len(self.records)

    def by_dimension(self, d: int) -> List[FaceRecord]:
        return [r for r in self.records if r.dimension == d]

    def vertices(self) -> List[FaceRecord]:
        """Real and ideal vertices in lexicographic order of their facet sets."""
        return sorted(self.by_dimension(0), key=lambda r: r.facet_set)

    def ideal_vertices(self) -> List[FaceRecord]:
        return [r for r in self.records if r.is_ideal]

    def find(self, facet_set: Sequence[int]) -> Optional[FaceRecord]:
        key = tuple(sorted(facet_set))
        return next((r for r in self.records if r.facet_set == key), None)

    def contains(self, larger: FaceRecord, smaller: FaceRecord) -> bool:
        """True when ``smaller`` is a face of ``larger``."""
        return larger is not smaller and set(larger.facet_set) < set(smaller.facet_set)

    def subfaces(self, record: FaceRecord) -> List[FaceRecord]:
        return [r for r in self.records if self.contains(record, r)]

    def f_vector(self) -> List[int]:
        """Face counts by dimension 0..n−1, ideal vertices counted as vertices."""
        return [len(self.by_dimension(d)) for d in range(self.n)]

    def is_simple(self) -> bool:
        """Every real d-face lies in exactly n − d facets."""
        return all(len(r.facet_set) == self.n - r.dimension
                   for r in self.records if not r.is_ideal)

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "geometry": self.geometry.value,
            "verified": self.verified,
            "f_vector": self.f_vector(),
            "faces": [r.to_dict() for r in self.records],
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _geometry_of(G: np.ndarray, n: int, tol: float) -> FormKind:
    k = G.shape[0]
    sig = signature(G, tol).as_tuple()
    if sig == (k, 0, 0):
        if k != n + 1:
            raise RealizationError(f"Positive definite {k}×{k} Gram matrix is not a "
                                   f"simplex of the {n}-sphere")
        return FormKind.SPHERICAL
    if sig == (k - 1, 0, 1):
        if k != n + 1:
            raise RealizationError(f"Degenerate {k}×{k} Gram matrix is not a Euclidean "
                                   f"{n}-simplex")
        if subset_info(G, tuple(range(k)), tol) is None or len(decompose(G, tol)) != 1:
            raise RealizationError("Euclidean Gram matrix must be a single affine block")
        return FormKind.EUCLIDEAN
    result = vinberg_realizable(G, n, tol)
    if not result.realizable:
        raise RealizationError(f"Gram matrix is not realizable in H^{n}: {result}")
    return FormKind.LORENTZIAN


def enumerate_faces(G, n: int, tol: Optional[float] = None) -> FaceLattice:
    """
    Enumerate all proper faces of the polyhedron with Gram matrix G.

    Parameters:
    -----------
    G : array-like
        Gram matrix of a spherical or Euclidean simplex, or of a polyhedron
        in ℍⁿ that passes the Vinberg test.
    n : int
        Dimension of the polyhedron.

    Returns:
    --------
    FaceLattice
        Records sorted by dimension (descending) and facet set.

    Raises:
    -------
    RealizationError
        If G is not realizable as such a polyhedron.
    """
    G = check_gram(G, tol)
    tol = get_settings().algebraic_tol if tol is None else tol
    geometry = _geometry_of(G, n, tol)
    k = G.shape[0]

    records = []
    for J in spherical_subsets(G, tol):
        if not J or len(J) > n:
            continue
        records.append(FaceRecord(J, FaceKind.REAL, n - len(J), G[np.ix_(J, J)]))
    if geometry is FormKind.LORENTZIAN:
        for J in ideal_vertex_subsets(G, n, tol):
            records.append(FaceRecord(J, FaceKind.IDEAL, 0, G[np.ix_(J, J)]))
    records.sort(key=lambda r: (-r.dimension, r.facet_set))

    lattice = FaceLattice(n, geometry, records, verified=k <= n + 1)
    if not lattice.verified:
        logger.warning("Face lattice of a %d-facet polyhedron in dimension %d is unverified",
                       k, n)
    logger.info("Enumerated faces of a %s polyhedron: f-vector %s", geometry.value,
                lattice.f_vector())
    return lattice


@dataclass(frozen=True, eq=False)
class Link:
    """Gram matrix of a face link, spherical or (for ideal vertices) Euclidean."""
    gram: np.ndarray
    kind: FormKind

    @property
    def is_euclidean(self) -> bool:
        return self.kind is FormKind.EUCLIDEAN


def link_of(G, J: Sequence[int], n: Optional[int] = None, tol: Optional[float] = None) -> Link:
    """
    Gram matrix of the link of the face (or ideal vertex) J.

    Raises:
    -------
    ValidationError
        If J indexes neither a face nor an ideal vertex.
    """
    G = check_gram(G, tol)
    J = tuple(sorted(J))
    if not J or len(set(J)) != len(J) or J[-1] >= G.shape[0] or J[0] < 0:
        raise ValidationError(f"{list(J)} is not a set of facet indices")
    info = subset_info(G, J, tol)
    if info is not None and info.spherical and (n is None or len(J) <= n):
        return Link(G[np.ix_(J, J)], FormKind.SPHERICAL)
    if info is not None and info.all_affine and (n is None or info.rank == n - 1):
        return Link(G[np.ix_(J, J)], FormKind.EUCLIDEAN)
    raise ValidationError(f"Facets {list(J)} do not meet in a face or ideal vertex")


def _orthogonal_direction(system: MirrorSystem, J: Tuple[int, ...]) -> np.ndarray:
    rows = system.normals[list(J)] * system.form.diagonal
    kernel = linalg.null_space(rows)
    if kernel.shape[1] != 1:
        raise GeometryError(f"Facets {list(J)} do not cut out a single direction "
                            f"(kernel dimension {kernel.shape[1]})")
    return kernel[:, 0]


def simplex_vertices(system: MirrorSystem, lattice: FaceLattice,
                     tol: Optional[float] = None) -> List[Point]:
    """
    Coordinates of the vertices of a simplex, in the order of
    ``lattice.vertices()``.

    Real vertices are the direction orthogonal to their n facets, oriented to
    lie on the inner side of the opposite facet; ideal vertices are the null
    vectors Σ wⱼvⱼ for the kernel vector w of their Gram block.

    Raises:
    -------
    ValidationError
        If the mirror system does not bound a simplex.
    GeometryError
        For a degenerate orthogonal complement.
    """
    form = system.form
    k = system.size
    if k != lattice.n + 1:
        raise ValidationError(f"A simplex in dimension {lattice.n} has {lattice.n + 1} "
                              f"facets, got {k}")
    points = []
    for record in lattice.vertices():
        J = record.facet_set
        others = [i for i in range(k) if i not in J]
        if record.is_ideal:
            block = record.gram_block
            component = decompose(block)[0]
            _, w = perron(block[np.ix_(component, component)])
            x = w @ system.normals[[J[c] for c in component]]
            coords = canonicalize(form, x[None, :], tol)[0]
            points.append(Point(coords, PointKind.IDEAL, form))
            continue
        if form.kind is FormKind.EUCLIDEAN:
            x = linalg.solve(system.normals[list(J)], system.offsets[list(J)])
            points.append(Point(x, PointKind.INTERIOR, form))
            continue
        x = _orthogonal_direction(system, J)
        if inner(form, x, system.normals[others[0]]) > 0:
            x = -x
        points.append(normalize_point(form, x, tol))
    logger.debug("Computed %d simplex vertices", len(points))
    return points


def project_onto_face(system: MirrorSystem, J: Sequence[int], x) -> Point:
    """
    Orthogonal projection onto the subspace spanned by the face J:
    π(x) = x − Σ (H⁻¹)ⱼₗ (⟨x, vⱼ⟩ − aⱼ) vₗ with H = G_J, renormalized onto the
    model.

    Raises:
    -------
    GeometryError
        If G_J is singular.
    """
    J = list(J)
    form = system.form
    coords = x.coords if isinstance(x, Point) else np.asarray(x, dtype=float)
    normals = system.normals[J]
    H = (normals * form.diagonal) @ normals.T
    if np.linalg.cond(H) > 1.0 / get_settings().algebraic_tol:
        raise GeometryError(f"Gram block of facets {J} is singular")
    residuals = inner(form, normals, coords) - system.offsets[J]
    y = coords - linalg.solve(H, residuals, assume_a="sym") @ normals
    return normalize_point(form, y)
