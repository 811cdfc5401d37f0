"""
Reflection groups of Coxeter diagrams and symmetry predicates of built polytopes.
"""

import logging
import math
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import linalg

from ..core.config import get_settings
from ..core.exceptions import GeometryError, OrbitCapExceeded
from ..diagram.model import CoxeterDiagram
from ..forms import FormKind, Isometry, inner
from ..gram import MirrorSystem, gram_from_diagram, recover_normals, signature
from .builder import build, seed_point, wythoff_subsets
from .orbit import orbit_closure
from .polytope import Polytope

logger = logging.getLogger(__name__)

# Singular values below this fraction of the largest one span a facet kernel.
KERNEL_RCOND = 1e-9

Order = Union[int, float]


class SymmetryClass(Enum):
    """Symmetry class of a polytope, strongest first."""
    REGULAR = "regular"
    SEMIREGULAR = "semiregular"
    UNIFORM = "uniform"
    NONE = "none"


def _is_spherical(diagram: CoxeterDiagram) -> bool:
    G = gram_from_diagram(diagram)
    k = diagram.node_count
    return signature(G).as_tuple() == (k, 0, 0)


def _orbit_size(mirrors: MirrorSystem, node: int) -> int:
    seed = seed_point(mirrors, [node]).coords
    gens = mirrors.reflections()
    limit = get_settings().orbit_cap
    cap = min(1000, limit)
    while True:
        try:
            return len(orbit_closure(seed, gens, cap=cap))
        except OrbitCapExceeded:
            if cap >= limit:
                raise
            cap = min(cap * 10, limit)


@lru_cache(maxsize=256)
def _connected_order(diagram: CoxeterDiagram) -> int:
    k = diagram.node_count
    if k == 1:
        return 2
    mirrors = recover_normals(gram_from_diagram(diagram))
    # A leaf keeps the stabilizer connected and the orbit small.
    node = min(diagram.nodes, key=lambda v: (len(diagram.neighbors(v)), -v))
    orbit = _orbit_size(mirrors, node)
    stabilizer = _finite_order(diagram.restrict([v for v in diagram.nodes if v != node]))
    logger.debug("Orbit of node %d in %s: %d, stabilizer %d", node, diagram, orbit, stabilizer)
    return orbit * stabilizer


def _finite_order(diagram: CoxeterDiagram) -> int:
    order = 1
    for component in diagram.components():
        order *= _connected_order(diagram.restrict(component))
    return order


def group_order(diagram: CoxeterDiagram) -> Order:
    """
    Order of the reflection group of a diagram.

    The order of a finite group is computed by orbit-stabilizer: the vertex
    orbit of the polytope ringed at one node times the order of the group of
    the remaining nodes. Products of components multiply.

    Returns:
    --------
    int or float
        The order, or ``math.inf`` when the Gram matrix is not positive
        definite.
    """
    diagram = diagram.with_rings(())
    if not _is_spherical(diagram):
        return math.inf
    return _finite_order(diagram)


def _subgroup_order(diagram: CoxeterDiagram, nodes: Sequence[int]) -> int:
    if not nodes:
        return 1
    return _finite_order(diagram.restrict(nodes).with_rings(()))


def predicted_face_counts(diagram: CoxeterDiagram) -> Dict[int, int]:
    """
    Face counts by rank predicted from group orders.

    A face of type T (a Coxeter-Wythoff subdiagram of h nodes) is stabilized
    by the reflections of T together with those of T′, the unringed nodes
    outside T not joined to any node of T. The number of h-faces is the sum
    of the indices |W| / |W_{T ∪ T′}|.

    Raises:
    -------
    GeometryError
        For a diagram whose group is infinite.
    """
    rings = diagram.rings
    nodes = sorted(n for c in diagram.components() if rings.intersection(c) for n in c)
    if not _is_spherical(diagram.restrict(nodes)):
        raise GeometryError("Face counts are predicted for finite reflection groups only")
    total = _subgroup_order(diagram, nodes)
    counts = {}
    for h in range(len(nodes)):
        count = 0
        for T in wythoff_subsets(diagram, nodes, h):
            joined = {m for t in T for m in diagram.neighbors(t)}
            extra = [s for s in nodes if s not in T and s not in rings and s not in joined]
            count += total // _subgroup_order(diagram, sorted(set(T) | set(extra)))
        counts[h] = count
    return counts


def coxeter_relations(mirrors: MirrorSystem,
                      diagram: CoxeterDiagram) -> Dict[Tuple[int, int], float]:
    """
    Residuals of the relations (rᵢrⱼ)^mᵢⱼ = 1 for every pair of nodes of finite order.

    Returns:
    --------
    Dict[Tuple[int, int], float]
        Largest entry deviation from the identity, keyed by 1-based node pairs.
    """
    reflections = mirrors.reflections()
    identity = Isometry.identity(reflections[0].dim)
    residuals = {}
    for i, j in combinations(diagram.nodes, 2):
        m = diagram.order(i, j)
        if math.isinf(m):
            continue
        product = reflections[i - 1].compose(reflections[j - 1])
        residuals[(i, j)] = product.power(int(m)).deviation(identity)
    return residuals


def _facet_normals(polytope: Polytope) -> List[Tuple[np.ndarray, float]]:
    """Outward unit normals (u, a) of the facets, with P on the side ⟨x, u⟩ ≤ a."""
    vertices = polytope.vertices
    normals = []
    if polytope.geometry is FormKind.LORENTZIAN:
        form = polytope.form
        center = polytope.center if polytope.center is not None else vertices.mean(axis=0)
        for facet in polytope.facets:
            kernel = linalg.null_space(vertices[list(facet)] * form.diagonal, rcond=KERNEL_RCOND)
            if kernel.shape[1] != 1:
                raise GeometryError(f"Facet {facet} does not span a hyperplane")
            u = kernel[:, 0]
            norm = inner(form, u, u)
            if norm <= 0:
                raise GeometryError(f"Facet {facet} is not a hyperbolic hyperplane")
            u = u / math.sqrt(norm)
            if inner(form, u, center) > 0:
                u = -u
            normals.append((u, 0.0))
        return normals

    # Work inside the affine hull, which is lower dimensional for polytopes
    # of reflection groups with unringed components.
    origin = vertices.mean(axis=0)
    _, singular, basis = linalg.svd(vertices - origin, full_matrices=False)
    basis = basis[singular > 1e-9 * max(1.0, singular[0])]
    local = (vertices - origin) @ basis.T
    for facet in polytope.facets:
        rows = local[list(facet)]
        kernel = linalg.null_space(np.hstack([rows, -np.ones((len(rows), 1))]),
                                   rcond=KERNEL_RCOND)
        if kernel.shape[1] != 1:
            raise GeometryError(f"Facet {facet} does not span a hyperplane")
        u, a = kernel[:-1, 0], kernel[-1, 0]
        scale = np.linalg.norm(u)
        u, a = u / scale, a / scale
        if a < 0:
            u, a = -u, -a
        normals.append((u, a))
    return normals


def facet_pairs(polytope: Polytope) -> List[Tuple[int, int]]:
    """Pairs of facet indices meeting in a ridge."""
    if polytope.rank < 2:
        return []
    incidence = polytope.vertex_faces(polytope.rank - 1)
    facet_sets = [set(f) for f in polytope.facets]
    pairs = set()
    for ridge in polytope.faces[polytope.rank - 2]:
        members = [f for f in incidence[ridge[0]] if facet_sets[f].issuperset(ridge)]
        if len(members) != 2:
            raise GeometryError(f"Ridge {ridge} lies on {len(members)} facets")
        pairs.add(tuple(sorted(members)))
    return sorted(pairs)


def dihedral_angles(polytope: Polytope) -> Dict[Tuple[int, int], float]:
    """
    Interior dihedral angles between facets sharing a ridge.

    Angles are measured in the ambient Euclidean space for polytopes of
    finite groups and Euclidean cells, and with the Lorentzian form for
    hyperbolic cells: θ = arccos(−⟨u₁, u₂⟩) for outward unit normals.

    Returns:
    --------
    Dict[Tuple[int, int], float]
        Angle per pair of facet indices.
    """
    normals = _facet_normals(polytope)
    lorentzian = polytope.geometry is FormKind.LORENTZIAN
    angles = {}
    for i, j in facet_pairs(polytope):
        u, v = normals[i][0], normals[j][0]
        c = inner(polytope.form, u, v) if lorentzian else float(u @ v)
        angles[(i, j)] = math.acos(float(np.clip(-c, -1.0, 1.0)))
    return angles


def chain_count(diagram: CoxeterDiagram, nodes: Optional[Sequence[int]] = None) -> int:
    """Number of chains D₁ ⊂ … ⊂ Dₙ of Coxeter-Wythoff subdiagrams ending in ``nodes``."""
    nodes = sorted(diagram.nodes if nodes is None else nodes)
    counts = {(): 1}
    for size in range(1, len(nodes) + 1):
        layer = {}
        for T in wythoff_subsets(diagram, nodes, size):
            total = sum(counts.get(T[:i] + T[i + 1:], 0) for i in range(size))
            if total:
                layer[T] = total
        counts = layer
    return counts.get(tuple(nodes), 0)


def facet_representatives(polytope: Polytope) -> List[Tuple[int, Optional[Tuple[int, ...]]]]:
    """
    One facet index per facet type, with the type's nodes when known.

    Polytopes without recorded face types are grouped by facet vertex count.
    """
    rank = polytope.rank - 1
    types = polytope.face_types.get(rank, [])
    if types and all(t.base for t in types):
        position = {frozenset(f): i for i, f in enumerate(polytope.facets)}
        return [(position[frozenset(t.base)], t.nodes) for t in types]
    first: Dict[int, int] = {}
    for index, facet in enumerate(polytope.facets):
        first.setdefault(len(facet), index)
    return [(index, None) for index in first.values()]


def _facet_is_regular(polytope: Polytope, index: int, nodes, diagram) -> bool:
    if nodes is not None and diagram is not None:
        if chain_count(diagram, nodes) == 1:
            return True
        if any(r not in polytope.faces for r in range(polytope.rank - 1)):
            # Faces below were not built; the facet is the Wythoff polytope of its subdiagram.
            return _geometrically_regular(build(diagram.restrict(nodes)))
    return _geometrically_regular(polytope.face_polytope(polytope.rank - 1, index))


def _geometrically_regular(polytope: Polytope) -> bool:
    """Equal edges, congruent regular facets and equal valence, checked recursively."""
    if polytope.rank <= 1:
        return True
    lengths = polytope.edge_lengths()
    if lengths.size and float(np.ptp(lengths)) > 1e-8 * max(1.0, float(np.mean(lengths))):
        return False
    if polytope.rank == 2:
        return True
    if np.unique(polytope.valences()).size != 1:
        return False
    if len({len(f) for f in polytope.facets}) != 1:
        return False
    facets = [polytope.face_polytope(polytope.rank - 1, index)
              for index, _ in facet_representatives(polytope)]
    if len({tuple(f.f_vector()) for f in facets}) != 1:
        return False
    return all(_geometrically_regular(f) for f in facets)


def symmetry_class(polytope: Polytope,
                   diagram: Optional[CoxeterDiagram] = None) -> SymmetryClass:
    """
    Classify a built polytope as regular, semiregular or uniform.

    Regular when the diagram has a single chain of Coxeter-Wythoff
    subdiagrams, or when the polytope is geometrically regular; uniform when
    all edges are equal; semiregular when uniform with regular facets.
    """
    diagram = polytope.diagram if diagram is None else diagram
    nodes = polytope.nodes or (tuple(diagram.nodes) if diagram is not None else ())
    if diagram is not None and nodes and chain_count(diagram, nodes) == 1:
        return SymmetryClass.REGULAR
    if polytope.edge_length is None:
        return SymmetryClass.NONE
    if _geometrically_regular(polytope):
        return SymmetryClass.REGULAR
    if polytope.rank <= 2:
        return SymmetryClass.UNIFORM
    regular_facets = all(_facet_is_regular(polytope, index, facet_nodes, diagram)
                         for index, facet_nodes in facet_representatives(polytope))
    return SymmetryClass.SEMIREGULAR if regular_facets else SymmetryClass.UNIFORM
