"""
Gram matrices of polyhedra and Coxeter diagrams.

The Gram matrix G of a polyhedron with outward unit normals v₁, ..., vₖ has
entries Gᵢⱼ = form(vᵢ, vⱼ): 1 on the diagonal, −cos α for facets meeting at
angle α, −1 for parallel facets and −cosh d for ultraparallel facets at
distance d. Its signature decides the geometry; its principal submatrices
describe faces and ideal vertices.

Example Usage:
--------------
from coxeterkit import from_schlafli
from coxeterkit.gram import gram_from_diagram, signature, vinberg_realizable

G = gram_from_diagram(from_schlafli([4, 3, 5]))
signature(G)                 # Signature(positive=3, negative=1, zero=0)
vinberg_realizable(G, 3)     # realizable, compact
"""

import json
import logging
import math
import os
import warnings
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from scipy import linalg

from .core.config import get_settings
from .core.exceptions import RealizationError, ValidationError
from .diagram.model import CoxeterDiagram, EdgeMark
from .forms import BilinearForm, FormKind, Isometry, inner, reflection

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Signature:
    """Counts of positive, negative and zero eigenvalues."""
    positive: int
    negative: int
    zero: int

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.positive, self.negative, self.zero)

    def __str__(self) -> str:
        return f"({self.positive},{self.negative},{self.zero})"


class RelationKind(Enum):
    """Relative position of two hyperplanes."""
    INCIDENT = "incident"
    PARALLEL = "parallel"
    ULTRAPARALLEL = "ultraparallel"


@dataclass(frozen=True)
class PairRelation:
    """Angle α for incident hyperplanes, distance d for ultraparallel ones."""
    kind: RelationKind
    value: Optional[float] = None

    def __str__(self) -> str:
        if self.kind is RelationKind.INCIDENT:
            return f"Incident({self.value:.12g})"
        if self.kind is RelationKind.PARALLEL:
            return "Parallel"
        return f"Ultraparallel({self.value:.12g})"


def _tol(tol: Optional[float]) -> float:
    return get_settings().algebraic_tol if tol is None else tol


def check_gram(G, tol: Optional[float] = None) -> np.ndarray:
    """Validate a square symmetric matrix with unit diagonal and return it as an array."""
    G = np.asarray(G, dtype=float)
    if G.ndim != 2 or G.shape[0] != G.shape[1] or G.shape[0] == 0:
        raise ValidationError(f"Gram matrix must be square, got shape {G.shape}")
    tol = _tol(tol)
    if np.max(np.abs(G - G.T)) > tol:
        raise ValidationError("Gram matrix must be symmetric")
    if np.max(np.abs(np.diag(G) - 1.0)) > tol:
        raise ValidationError("Gram matrix must have unit diagonal")
    return G


def gram_from_diagram(diagram: CoxeterDiagram) -> np.ndarray:
    """Gram matrix of a Coxeter diagram (node i is row i−1)."""
    k = diagram.node_count
    G = np.eye(k)
    for (i, j), mark in diagram.edges.items():
        G[i - 1, j - 1] = G[j - 1, i - 1] = mark.gram_entry
    return G


def signature(G, tol: Optional[float] = None) -> Signature:
    """
    Signature from a symmetric eigensolve.

    Eigenvalues within tol·max|λ| of zero count as zero.
    """
    G = np.asarray(G, dtype=float)
    eigenvalues = linalg.eigh(G, eigvals_only=True)
    threshold = _tol(tol) * max(float(np.max(np.abs(eigenvalues))), 1e-300)
    positive = int(np.sum(eigenvalues > threshold))
    negative = int(np.sum(eigenvalues < -threshold))
    return Signature(positive, negative, len(eigenvalues) - positive - negative)


def decompose(G, tol: Optional[float] = None) -> List[List[int]]:
    """Index blocks of the graph with an edge i-j whenever Gᵢⱼ ≠ 0, sorted."""
    G = np.asarray(G, dtype=float)
    tol = _tol(tol)
    graph = nx.Graph()
    graph.add_nodes_from(range(G.shape[0]))
    rows, cols = np.nonzero(np.abs(np.triu(G, 1)) > tol)
    graph.add_edges_from(zip(rows.tolist(), cols.tolist()))
    return sorted(sorted(c) for c in nx.connected_components(graph))


def perron(G, tol: Optional[float] = None) -> Tuple[float, np.ndarray]:
    """
    Smallest eigenvalue of G and its positive unit eigenvector.

    For G = I − B with B ≥ 0 irreducible, the Perron-Frobenius theorem gives a
    simple smallest eigenvalue with a strictly positive eigenvector.

    Raises:
    -------
    ValidationError
        If G has a positive off-diagonal entry or is decomposable.
    """
    G = np.asarray(G, dtype=float)
    tol = _tol(tol)
    off = G - np.diag(np.diag(G))
    if np.any(off > tol):
        raise ValidationError("perron needs non-positive off-diagonal entries")
    if len(decompose(G, tol)) != 1:
        raise ValidationError("perron needs an indecomposable matrix")
    eigenvalues, eigenvectors = linalg.eigh(G)
    vector = eigenvectors[:, 0]
    if vector.sum() < 0:
        vector = -vector
    vector = vector / np.linalg.norm(vector)
    return float(eigenvalues[0]), vector


def pair_relation(g: float, tol: Optional[float] = None) -> PairRelation:
    """
    Relation of two hyperplanes with Gram entry g.

    Raises:
    -------
    ValidationError
        If g > 1 (not a Gram entry of distinct hyperplanes).
    """
    tol = _tol(tol)
    if g > 1 + tol:
        raise ValidationError(f"Gram entry {g} exceeds 1")
    if abs(g + 1) <= tol:
        return PairRelation(RelationKind.PARALLEL)
    if g < -1:
        return PairRelation(RelationKind.ULTRAPARALLEL, float(np.arccosh(-g)))
    return PairRelation(RelationKind.INCIDENT, float(np.arccos(np.clip(-g, -1.0, 1.0))))


def diagram_from_gram(G, tol: Optional[float] = None) -> CoxeterDiagram:
    """
    Coxeter diagram of a Gram matrix with entries 0, −cos(π/m), −1 or −cosh d.

    Raises:
    -------
    ValidationError
        For an entry that is not of one of these forms.
    """
    G = check_gram(G, tol)
    tol = max(_tol(tol), 1e-9)
    edges: Dict[Tuple[int, int], EdgeMark] = {}
    k = G.shape[0]
    for i in range(k):
        for j in range(i + 1, k):
            g = G[i, j]
            if abs(g) <= tol:
                continue
            relation = pair_relation(g, tol)
            if relation.kind is RelationKind.PARALLEL:
                edges[(i + 1, j + 1)] = EdgeMark.parallel()
            elif relation.kind is RelationKind.ULTRAPARALLEL:
                edges[(i + 1, j + 1)] = EdgeMark.ultraparallel(relation.value)
            else:
                m = round(math.pi / relation.value)
                if m < 3 or abs(math.cos(math.pi / m) + g) > tol * 100:
                    raise ValidationError(f"Entry G[{i},{j}] = {g:.12g} is not −cos(π/m)")
                edges[(i + 1, j + 1)] = EdgeMark.finite(m)
    return CoxeterDiagram(k, edges)


# Principal submatrices --------------------------------------------------------

class BlockType(Enum):
    SPHERICAL = "spherical"
    AFFINE = "affine"
    OTHER = "other"


def block_type(G, indices: Sequence[int], tol: Optional[float] = None) -> BlockType:
    """Type of one connected principal submatrix."""
    sig = signature(np.asarray(G)[np.ix_(indices, indices)], tol)
    if sig.negative == 0 and sig.zero == 0:
        return BlockType.SPHERICAL
    if sig.negative == 0 and sig.zero == 1:
        return BlockType.AFFINE
    return BlockType.OTHER


@dataclass(frozen=True)
class SubmatrixInfo:
    """Component structure of a principal submatrix whose components are all
    spherical or irreducible affine."""
    indices: Tuple[int, ...]
    spherical: bool
    all_affine: bool
    rank: int


def subset_info(G, subset: Tuple[int, ...], tol: Optional[float] = None) -> Optional[SubmatrixInfo]:
    """Component structure of G restricted to subset, or None when some
    component is neither spherical nor affine."""
    G = np.asarray(G, dtype=float)
    tol = _tol(tol)
    subset = tuple(subset)
    sub = G[np.ix_(subset, subset)]
    types = []
    for block in decompose(sub, tol):
        t = block_type(sub, block, tol)
        if t is BlockType.OTHER:
            return None
        types.append(t)
    affine = sum(t is BlockType.AFFINE for t in types)
    return SubmatrixInfo(subset, spherical=affine == 0,
                         all_affine=affine == len(types) and affine > 0,
                         rank=len(subset) - affine)


def admissible_subsets(G, max_size: Optional[int] = None,
                       tol: Optional[float] = None) -> List[SubmatrixInfo]:
    """
    All principal submatrices whose components are spherical or affine.

    The family is closed under taking subsets, so it is grown one index at a
    time from the empty set. Results are in (size, lexicographic) order.
    """
    G = np.asarray(G, dtype=float)
    tol = _tol(tol)
    k = G.shape[0]
    max_size = k if max_size is None else max_size
    result = [SubmatrixInfo((), True, False, 0)]
    layer = [()]
    for size in range(1, max_size + 1):
        known = {info.indices for info in result if len(info.indices) == size - 1}
        next_layer = []
        for subset in layer:
            start = subset[-1] + 1 if subset else 0
            for i in range(start, k):
                candidate = subset + (i,)
                if any(candidate[:p] + candidate[p + 1:] not in known
                       for p in range(len(candidate) - 1)):
                    continue
                info = subset_info(G, candidate, tol)
                if info is not None:
                    result.append(info)
                    next_layer.append(candidate)
        if not next_layer:
            break
        layer = next_layer
        logger.debug("Admissible subsets of size %d: %d", size, len(layer))
    return result


def spherical_subsets(G, tol: Optional[float] = None) -> List[Tuple[int, ...]]:
    """Index sets of the positive definite principal submatrices (faces)."""
    return [info.indices for info in admissible_subsets(G, tol=tol) if info.spherical]


def ideal_vertex_subsets(G, n: int, tol: Optional[float] = None) -> List[Tuple[int, ...]]:
    """Maximal all-affine index sets of rank n−1 (ideal vertices)."""
    infos = admissible_subsets(G, tol=tol)
    index_sets = {info.indices for info in infos}
    result = []
    for info in infos:
        if not info.all_affine or info.rank != n - 1:
            continue
        extensions = [i for i in range(np.shape(G)[0]) if i not in info.indices
                      and tuple(sorted(info.indices + (i,))) in index_sets]
        if not extensions:
            result.append(info.indices)
    return result


# Realizability ----------------------------------------------------------------

@dataclass
class VinbergResult:
    """Outcome of the Vinberg realization test.

    Attributes:
    -----------
    realizable : bool
        Whether all conditions hold.
    volume : str, optional
        "compact" or "finite_volume" when realizable.
    reason : str, optional
        "signature", "condition 1" or "condition 2" when not realizable.
    witness : tuple, optional
        Offending index set for condition 2.
    ideal_vertices : list of tuple
        Euclidean index sets of rank n−1.
    warnings : list of str
        Rank n−1 faces with more than two extensions.
    """
    realizable: bool
    volume: Optional[str] = None
    reason: Optional[str] = None
    witness: Optional[Tuple[int, ...]] = None
    ideal_vertices: List[Tuple[int, ...]] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    def __str__(self) -> str:
        if self.realizable:
            return f"Realizable({self.volume})"
        return f"NotRealizable({self.reason})"


def vinberg_realizable(G, n: int, tol: Optional[float] = None) -> VinbergResult:
    """
    Check whether G is the Gram matrix of a finite-volume polyhedron in ℍⁿ.

    Conditions checked in order: signature (n, 1, k−n−1); (1) some spherical
    submatrix of rank n or Euclidean submatrix of rank n−1 exists, the latter
    covering polyhedra whose vertices are all ideal; (2) every spherical
    submatrix of rank n−1 lies in at least two spherical rank-n or Euclidean
    rank-(n−1) submatrices.
    More than two extensions only produce a warning.

    Raises:
    -------
    ValidationError
        If G has a positive off-diagonal entry.
    """
    G = check_gram(G, tol)
    tol = _tol(tol)
    k = G.shape[0]
    if np.any(G - np.diag(np.diag(G)) > tol):
        raise ValidationError("Vinberg test needs non-positive off-diagonal entries")

    sig = signature(G, tol)
    if sig.as_tuple() != (n, 1, k - n - 1):
        logger.info("Signature %s does not match (%d,1,%d)", sig, n, k - n - 1)
        return VinbergResult(False, reason="signature")

    infos = admissible_subsets(G, tol=tol)
    spherical = {info.indices for info in infos if info.spherical}
    ideal = ideal_vertex_subsets(G, n, tol)

    top = [s for s in spherical if len(s) == n]
    if not top and not ideal:
        return VinbergResult(False, reason="condition 1", ideal_vertices=ideal)

    notes = []
    for face in sorted(s for s in spherical if len(s) == n - 1):
        face_set = set(face)
        count = sum(face_set < set(s) for s in top)
        count += sum(face_set < set(v) for v in ideal)
        if count < 2:
            return VinbergResult(False, reason="condition 2", witness=face,
                                 ideal_vertices=ideal)
        if count > 2:
            message = f"face {face} has {count} extensions"
            notes.append(message)
            warnings.warn(f"Vinberg condition (2): {message}", RuntimeWarning)

    volume = "finite_volume" if ideal else "compact"
    return VinbergResult(True, volume=volume, ideal_vertices=ideal, warnings=notes)


# Mirror systems ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class MirrorSystem:
    """Unit normals of the facets of P = {x : form(x, vᵢ) ≤ aᵢ}.

    Attributes:
    -----------
    form : BilinearForm
        Ambient form.
    normals : np.ndarray
        k × d array, one unit normal per row.
    offsets : np.ndarray
        Mirror offsets aᵢ (zero except for Euclidean mirrors).
    interior_point : np.ndarray, optional
        A point strictly inside P.
    """
    form: BilinearForm
    normals: np.ndarray
    offsets: np.ndarray
    interior_point: Optional[np.ndarray] = None

    @property
    def size(self) -> int:
        return self.normals.shape[0]

    def gram(self) -> np.ndarray:
        J = self.form.diagonal
        return (self.normals * J) @ self.normals.T

    def reflections(self) -> List[Isometry]:
        return [reflection(self.form, v, a) for v, a in zip(self.normals, self.offsets)]

    def values(self, x) -> np.ndarray:
        """form(x, vᵢ) − aᵢ for every mirror (≤ 0 inside P)."""
        return inner(self.form, self.normals, x) - self.offsets

    def subsystem(self, indices: Sequence[int]) -> "MirrorSystem":
        indices = list(indices)
        return MirrorSystem(self.form, self.normals[indices], self.offsets[indices],
                            self.interior_point)


def recover_normals(G, n: Optional[int] = None, tol: Optional[float] = None) -> MirrorSystem:
    """
    Realize a Gram matrix by unit normals in the matching model space.

    Signature (r, 0, 0) gives a spherical system, (r, 0, z ≥ 1) a Euclidean
    one with all offsets 1, and (r, 1, z) a Lorentzian one oriented so that
    the Perron combination of the normals is a point on the upper sheet
    strictly inside P.

    Parameters:
    -----------
    G : array-like
        Gram matrix.
    n : int, optional
        Dimension of the geometry; defaults to the rank of the form part of G.

    Raises:
    -------
    RealizationError
        If the signature has more than one negative eigenvalue or does not fit
        dimension n.
    """
    G = check_gram(G, tol)
    tol = _tol(tol)
    sig = signature(G, tol)
    eigenvalues, eigenvectors = linalg.eigh(G)
    threshold = tol * max(float(np.max(np.abs(eigenvalues))), 1e-300)
    order = np.argsort(-eigenvalues, kind="stable")
    positive = [i for i in order if eigenvalues[i] > threshold]
    negative = [i for i in order if eigenvalues[i] < -threshold]

    if sig.negative > 1:
        raise RealizationError(f"Signature {sig} has more than one negative eigenvalue")

    if sig.negative == 1:
        kind = FormKind.LORENTZIAN
        dim = sig.positive if n is None else n
        if sig.positive > dim:
            raise RealizationError(f"Signature {sig} does not fit hyperbolic {dim}-space")
        columns = negative + positive
    elif sig.zero == 0:
        kind = FormKind.SPHERICAL
        dim = sig.positive - 1 if n is None else n
        if sig.positive > dim + 1:
            raise RealizationError(f"Signature {sig} does not fit the {dim}-sphere")
        columns = positive
    else:
        kind = FormKind.EUCLIDEAN
        dim = sig.positive if n is None else n
        if sig.positive > dim:
            raise RealizationError(f"Signature {sig} does not fit Euclidean {dim}-space")
        columns = positive

    form = BilinearForm(kind, dim)
    k = G.shape[0]
    normals = np.zeros((k, form.ambient_dim))
    scaled = eigenvectors[:, columns] * np.sqrt(np.abs(eigenvalues[columns]))
    normals[:, :scaled.shape[1]] = scaled
    offsets = np.ones(k) if kind is FormKind.EUCLIDEAN else np.zeros(k)

    interior = None
    if kind is FormKind.EUCLIDEAN:
        interior = np.zeros(form.ambient_dim)
    else:
        try:
            lam, w = perron(G, tol)
        except ValidationError:
            w = None
        if w is not None:
            x = w @ normals
            if kind is FormKind.LORENTZIAN:
                if x[0] < 0:
                    normals[:, 0] *= -1
                    x[0] *= -1
                q = inner(form, x, x)
                if q < 0:
                    interior = x / math.sqrt(-q)
            elif np.linalg.norm(x) > 0:
                interior = -x / np.linalg.norm(x)
        elif kind is FormKind.SPHERICAL:
            x = linalg.lstsq(normals, -np.ones(k))[0]
            if np.linalg.norm(x) > 0 and np.all(normals @ x < 0):
                interior = x / np.linalg.norm(x)

    system = MirrorSystem(form, normals, offsets, interior)
    residual = float(np.max(np.abs(system.gram() - G)))
    if residual > 1e-8:
        raise RealizationError(f"Recovered normals reproduce G only to {residual:.3g}")
    logger.debug("Recovered %d normals in %s %d-space", k, kind.value, dim)
    return system


# Text and JSON I/O ------------------------------------------------------------

def format_gram_text(G) -> str:
    """Plain-text rows of decimals."""
    return "\n".join(" ".join(f"{x:.17g}" for x in row) for row in np.asarray(G, dtype=float)) + "\n"


def parse_gram_text(text: str) -> np.ndarray:
    """Parse rows of decimals separated by whitespace or commas."""
    rows = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([float(x) for x in line.replace(",", " ").split()])
        except ValueError as e:
            raise ValidationError(f"line {number}: {e}") from e
    if not rows or any(len(r) != len(rows) for r in rows):
        raise ValidationError("Gram text must contain a square matrix")
    return np.array(rows)


def read_gram(path: str) -> np.ndarray:
    """Load a Gram matrix from a ``.json`` array of arrays or a text file."""
    if not os.path.exists(path):
        raise ValidationError(f"Gram file does not exist: {path}")
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    if path.lower().endswith(".json"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValidationError(f"Invalid JSON in {path}: {e}") from e
        G = np.asarray(data, dtype=float)
        if G.ndim != 2 or G.shape[0] != G.shape[1]:
            raise ValidationError("Gram JSON must be a square array of arrays")
        return G
    return parse_gram_text(text)


def write_gram(G, path: str) -> None:
    """Save a Gram matrix as JSON (``.json``) or plain text rows."""
    G = np.asarray(G, dtype=float)
    with open(path, "w", encoding="utf-8") as handle:
        if path.lower().endswith(".json"):
            json.dump(G.tolist(), handle)
        else:
            handle.write(format_gram_text(G))
