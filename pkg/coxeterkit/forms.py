"""
Metric kernel for the three constant-curvature geometries.

Points of the sphere Sⁿ live on the unit sphere of ℝⁿ⁺¹, points of
hyperbolic space ℍⁿ on the upper sheet of the hyperboloid
⟨x, x⟩ = −1 in ℝⁿ⁺¹ with the Lorentzian product

    ⟨x, y⟩ = −x₁y₁ + x₂y₂ + ... + xₙ₊₁yₙ₊₁,

and Euclidean points are plain vectors of ℝⁿ. Ideal points of ℍⁿ are light
rays, stored with first coordinate 1.

Example Usage:
--------------
from coxeterkit.forms import BilinearForm, reflection, normalize_point

form = BilinearForm.lorentzian(2)
r = reflection(form, [0.0, 1.0, 0.0])
r.apply([2 ** 0.5, 1.0, 0.0])      # -> [1.414..., -1.0, 0.0]
normalize_point(form, [3, 3, 0])   # ideal point (1, 1, 0)
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .core.config import get_settings
from .core.exceptions import GeometryError


class FormKind(Enum):
    """The three model geometries."""
    EUCLIDEAN = "euclidean"
    SPHERICAL = "spherical"
    LORENTZIAN = "lorentzian"


class PointKind(Enum):
    """Interior points versus points on the sphere at infinity."""
    INTERIOR = "interior"
    IDEAL = "ideal"


@dataclass(frozen=True)
class BilinearForm:
    """A diagonal bilinear form on the ambient space of a model geometry.

    Attributes:
    -----------
    kind : FormKind
        Euclidean (ambient dimension n), spherical or Lorentzian (ambient n+1).
    dim : int
        Dimension n of the geometry itself.
    """
    kind: FormKind
    dim: int

    def __post_init__(self):
        minimum = 0 if self.kind is FormKind.SPHERICAL else 1
        if self.dim < minimum:
            raise GeometryError(f"{self.kind.value} form needs dimension >= {minimum}")

    @classmethod
    def euclidean(cls, dim: int) -> "BilinearForm":
        return cls(FormKind.EUCLIDEAN, dim)

    @classmethod
    def spherical(cls, dim: int) -> "BilinearForm":
        return cls(FormKind.SPHERICAL, dim)

    @classmethod
    def lorentzian(cls, dim: int) -> "BilinearForm":
        return cls(FormKind.LORENTZIAN, dim)

    @property
    def ambient_dim(self) -> int:
        """Dimension of the vector space the form lives on."""
        return self.dim if self.kind is FormKind.EUCLIDEAN else self.dim + 1

    @property
    def diagonal(self) -> np.ndarray:
        diag = np.ones(self.ambient_dim)
        if self.kind is FormKind.LORENTZIAN:
            diag[0] = -1.0
        return diag

    @property
    def matrix(self) -> np.ndarray:
        """The form matrix J (identity, or diag(−1, 1, ..., 1))."""
        return np.diag(self.diagonal)

    def __call__(self, x, y):
        return inner(self, x, y)


def inner(form: BilinearForm, x, y):
    """
    Evaluate the bilinear form.

    Accepts single vectors or stacks of row vectors (broadcast along the last
    axis), so ``inner(form, points, v)`` evaluates every point against v.

    Raises:
    -------
    GeometryError
        If the last dimension of x or y differs from the ambient dimension.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    d = form.ambient_dim
    if x.shape[-1] != d or y.shape[-1] != d:
        raise GeometryError(f"Dimension mismatch: expected ambient dimension {d}, "
                            f"got {x.shape[-1]} and {y.shape[-1]}")
    result = np.sum(x * y * form.diagonal, axis=-1)
    return float(result) if np.ndim(result) == 0 else result


@dataclass(frozen=True, eq=False)
class Point:
    """A point of a model geometry together with its kind."""
    coords: np.ndarray
    kind: PointKind
    form: BilinearForm

    @property
    def is_ideal(self) -> bool:
        return self.kind is PointKind.IDEAL


@dataclass(frozen=True, eq=False)
class Isometry:
    """An isometry x ↦ Mx + t of the ambient space.

    The translation is only nonzero for Euclidean reflections in mirrors that
    do not pass through the origin.
    """
    matrix: np.ndarray
    translation: Optional[np.ndarray] = None

    @classmethod
    def identity(cls, dim: int) -> "Isometry":
        return cls(np.eye(dim))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def offset(self) -> np.ndarray:
        if self.translation is None:
            return np.zeros(self.dim)
        return self.translation

    def apply(self, points) -> np.ndarray:
        """Apply to one point or to a stack of row vectors."""
        points = np.asarray(points, dtype=float)
        result = points @ self.matrix.T
        if self.translation is not None:
            result = result + self.translation
        return result

    def compose(self, other: "Isometry") -> "Isometry":
        """Return self ∘ other (other is applied first)."""
        matrix = self.matrix @ other.matrix
        if self.translation is None and other.translation is None:
            return Isometry(matrix)
        return Isometry(matrix, self.matrix @ other.offset + self.offset)

    def inverse(self) -> "Isometry":
        inv = np.linalg.inv(self.matrix)
        if self.translation is None:
            return Isometry(inv)
        return Isometry(inv, -inv @ self.translation)

    def power(self, k: int) -> "Isometry":
        result = Isometry.identity(self.dim)
        for _ in range(k):
            result = self.compose(result)
        return result

    def deviation(self, other: "Isometry") -> float:
        """Largest entry difference between the two affine maps."""
        return float(max(np.max(np.abs(self.matrix - other.matrix)),
                         np.max(np.abs(self.offset - other.offset))))

    def form_defect(self, form: BilinearForm) -> float:
        """‖MᵀJM − J‖∞, zero for an isometry of the form."""
        J = form.matrix
        return float(np.max(np.abs(self.matrix.T @ J @ self.matrix - J)))


def reflection(form: BilinearForm, v, offset: float = 0.0,
               tol: Optional[float] = None) -> Isometry:
    """
    Reflection in the mirror orthogonal to the unit normal v.

    The linear part is x ↦ x − 2·form(x, v)·v. A nonzero offset a describes
    the Euclidean mirror {⟨x, v⟩ = a}; the reflection is then affine.

    Parameters:
    -----------
    form : BilinearForm
        Ambient form.
    v : array-like
        Normal with form(v, v) = 1.
    offset : float
        Mirror offset (Euclidean forms only).
    tol : float, optional
        Tolerance on the unit-norm check (defaults to the algebraic tolerance).

    Raises:
    -------
    GeometryError
        If v is not a unit spacelike vector, or an offset is given for a
        non-Euclidean form.
    """
    tol = get_settings().algebraic_tol * 100 if tol is None else tol
    v = np.asarray(v, dtype=float)
    norm = inner(form, v, v)
    if abs(norm - 1.0) > tol:
        raise GeometryError(f"Reflection normal must satisfy form(v, v) = 1, got {norm:.6g}")
    Jv = form.diagonal * v
    matrix = np.eye(form.ambient_dim) - 2.0 * np.outer(v, Jv)
    if offset:
        if form.kind is not FormKind.EUCLIDEAN:
            raise GeometryError("Only Euclidean mirrors may be offset from the origin")
        return Isometry(matrix, 2.0 * offset * v)
    return Isometry(matrix)


def canonicalize(form: BilinearForm, points, tol: Optional[float] = None) -> np.ndarray:
    """
    Vectorized normalization of a stack of points (rows) onto the model.

    Lorentzian rows are put on the upper hyperboloid sheet or, when null,
    scaled to first coordinate 1; spherical rows are unit-normalized;
    Euclidean rows pass through.
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    if form.kind is FormKind.EUCLIDEAN:
        return points.copy()
    if form.kind is FormKind.SPHERICAL:
        norms = np.linalg.norm(points, axis=1)
        if np.any(norms == 0):
            raise GeometryError("Cannot normalize the zero vector onto the sphere")
        return points / norms[:, None]

    tol = get_settings().algebraic_tol if tol is None else tol
    values = inner(form, points, points)
    scale = np.sum(points * points, axis=1)
    null = np.abs(values) <= tol * np.maximum(scale, 1e-300)
    if np.any(~null & (values > 0)):
        raise GeometryError("Spacelike vector passed as a hyperbolic point")
    out = np.empty_like(points)
    timelike = ~null
    out[timelike] = points[timelike] / np.sqrt(-values[timelike])[:, None]
    out[timelike] *= np.sign(out[timelike, :1])
    if np.any(null):
        first = points[null, :1]
        if np.any(np.abs(first) <= tol):
            raise GeometryError("Cannot normalize the zero vector")
        out[null] = points[null] / first
    return out


def is_null(form: BilinearForm, x, tol: Optional[float] = None) -> bool:
    """True for Lorentzian vectors on the light cone (relative tolerance)."""
    if form.kind is not FormKind.LORENTZIAN:
        return False
    tol = get_settings().algebraic_tol if tol is None else tol
    x = np.asarray(x, dtype=float)
    return abs(inner(form, x, x)) <= tol * max(float(x @ x), 1e-300)


def normalize_point(form: BilinearForm, x, tol: Optional[float] = None) -> Point:
    """
    Canonical representative of a vector as a point of the geometry.

    Timelike vectors go to the hyperboloid sheet with x₁ > 0, lightlike vectors
    become ideal points with x₁ = 1, spherical points are unit-normalized and
    Euclidean points pass through.

    Raises:
    -------
    GeometryError
        For a Lorentzian spacelike vector or the zero vector.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (form.ambient_dim,):
        raise GeometryError(f"Expected a vector of dimension {form.ambient_dim}")
    ideal = is_null(form, x, tol)
    coords = canonicalize(form, x[None, :], tol)[0]
    return Point(coords, PointKind.IDEAL if ideal else PointKind.INTERIOR, form)


def klein_project(p) -> np.ndarray:
    """
    Klein-model coordinates (x₂/x₁, ..., xₙ₊₁/x₁) of a hyperbolic point.

    Accepts a Point or, for batch use, a stack of hyperboloid rows.

    Raises:
    -------
    GeometryError
        If the point does not belong to a Lorentzian form.
    """
    if isinstance(p, Point):
        if p.form.kind is not FormKind.LORENTZIAN:
            raise GeometryError("Klein projection needs a hyperbolic point")
        coords = p.coords
    else:
        coords = np.asarray(p, dtype=float)
    if coords.ndim == 1:
        return coords[1:] / coords[0]
    return coords[:, 1:] / coords[:, :1]


def intrinsic_distance(form: BilinearForm, x, y) -> float:
    """Distance in the model geometry (infinite when an endpoint is ideal)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if form.kind is FormKind.EUCLIDEAN:
        return float(np.linalg.norm(x - y))
    if form.kind is FormKind.SPHERICAL:
        return float(np.arccos(np.clip(x @ y, -1.0, 1.0)))
    if is_null(form, x) or is_null(form, y):
        return float("inf")
    return float(np.arccosh(max(-inner(form, x, y), 1.0)))
