"""
Uniform polytopes of the A_n and B_n families, the demicubes and the
permutohedra, built from explicit integer-like seed vectors in the standard
coordinates of each reflection group.

A_n acts on ℝⁿ⁺¹ by permuting coordinates, node i mirroring xᵢ = xᵢ₊₁.
B_n acts on ℝⁿ by signed permutations, node 1 mirroring x₁ = 0 and node
i + 1 mirroring xᵢ = xᵢ₊₁. D_n acts by permutations and even sign changes,
node n mirroring xₙ₋₁ + xₙ = 0.
"""

import logging
from typing import Iterable, Optional

import numpy as np

from ..core.config import get_settings
from ..core.exceptions import ValidationError
from ..diagram.model import CoxeterDiagram
from ..forms import BilinearForm
from ..gram import MirrorSystem
from ..wythoff.builder import WythoffBuilder
from ..wythoff.polytope import Polytope

logger = logging.getLogger(__name__)

SQRT2 = np.sqrt(2.0)


def _check_dimension(n: int, minimum: int = 2) -> None:
    limit = get_settings().max_seed_dimension
    if not minimum <= n <= limit:
        raise ValidationError(f"Seed-vector constructions take {minimum} <= n <= {limit}, got {n}")


def _check_rings(rings: Iterable[int], n: int) -> frozenset:
    rings = frozenset(rings)
    if not rings:
        raise ValidationError("At least one node must be ringed")
    bad = sorted(r for r in rings if not 1 <= r <= n)
    if bad:
        raise ValidationError(f"Ringed nodes {bad} outside 1..{n}")
    return rings


def a_seed(n: int, rings: Iterable[int]) -> np.ndarray:
    """a₁ = 0 and aᵢ₊₁ = aᵢ + 1 when node i is ringed, aᵢ otherwise."""
    rings = _check_rings(rings, n)
    a = [0.0]
    for i in range(1, n + 1):
        a.append(a[-1] + (1.0 if i in rings else 0.0))
    return np.array(a)


def b_seed(n: int, rings: Iterable[int]) -> np.ndarray:
    """c₁ = 1 when node 1 is ringed (else 0) and cᵢ₊₁ = cᵢ + √2 when node i + 1 is ringed."""
    rings = _check_rings(rings, n)
    c = [1.0 if 1 in rings else 0.0]
    for i in range(2, n + 1):
        c.append(c[-1] + (SQRT2 if i in rings else 0.0))
    return np.array(c)


def _a_mirrors(n: int) -> MirrorSystem:
    normals = np.zeros((n, n + 1))
    for i in range(n):
        normals[i, i], normals[i, i + 1] = 1.0, -1.0
    return MirrorSystem(BilinearForm.spherical(n), normals / SQRT2, np.zeros(n))


def _b_mirrors(n: int) -> MirrorSystem:
    normals = np.zeros((n, n))
    normals[0, 0] = -1.0
    for i in range(1, n):
        normals[i, i - 1], normals[i, i] = 1.0 / SQRT2, -1.0 / SQRT2
    return MirrorSystem(BilinearForm.spherical(n - 1), normals, np.zeros(n))


def _d_mirrors(n: int) -> MirrorSystem:
    normals = np.zeros((n, n))
    for i in range(n - 1):
        normals[i, i], normals[i, i + 1] = 1.0, -1.0
    normals[n - 1, n - 2] = normals[n - 1, n - 1] = 1.0
    return MirrorSystem(BilinearForm.spherical(n - 1), normals / SQRT2, np.zeros(n))


def _linear(n: int, rings, first: int = 3) -> CoxeterDiagram:
    edges = {(i, i + 1): 3 for i in range(1, n)}
    if n >= 2:
        edges[(1, 2)] = first
    return CoxeterDiagram(n, edges, frozenset(rings))


def a_family(n: int, rings: Iterable[int], ranks=None) -> Polytope:
    """
    Uniform polytope of A_n: all permutations of the A seed vector, lying in
    the hyperplane of constant coordinate sum.
    """
    _check_dimension(n)
    rings = _check_rings(rings, n)
    diagram = _linear(n, rings)
    name = f"A{n} rings {sorted(rings)}"
    builder = WythoffBuilder(_a_mirrors(n), rings, diagram, seed=a_seed(n, rings), name=name)
    return builder.build(ranks)


def b_family(n: int, rings: Iterable[int], ranks=None) -> Polytope:
    """Uniform polytope of B_n: all signed permutations of the B seed vector."""
    _check_dimension(n)
    rings = _check_rings(rings, n)
    diagram = _linear(n, rings, first=4)
    name = f"B{n} rings {sorted(rings)}"
    builder = WythoffBuilder(_b_mirrors(n), rings, diagram, seed=b_seed(n, rings), name=name)
    return builder.build(ranks)


def permutohedron(n: int, ranks=None) -> Polytope:
    """The omnitruncated A_n: permutations of (0, 1, …, n)."""
    polytope = a_family(n, range(1, n + 1), ranks)
    polytope.name = f"permutohedron {n}"
    return polytope


def omnitruncated_cube(n: int, ranks=None) -> Polytope:
    """The omnitruncated B_n: signed permutations of (1, 1 + √2, 1 + 2√2, …)."""
    polytope = b_family(n, range(1, n + 1), ranks)
    polytope.name = f"omnitruncated {n}-cube"
    return polytope


def demicube(n: int, ranks=None) -> Polytope:
    """
    The n-demicube: vertices of [0, 1]ⁿ with even coordinate sum.

    Built as the D_n orbit of (−½, …, −½), ringed at the fork node n, and
    translated by (½, …, ½).
    """
    _check_dimension(n, minimum=3)
    edges = {(i, i + 1): 3 for i in range(1, n - 1)}
    edges[(n - 2, n)] = 3
    diagram = CoxeterDiagram(n, edges, frozenset({n}))
    builder = WythoffBuilder(_d_mirrors(n), {n}, diagram, seed=np.full(n, -0.5),
                             name=f"{n}-demicube")
    polytope = builder.build(ranks)
    polytope.vertices = polytope.vertices + 0.5
    polytope.center = polytope.center + 0.5
    logger.debug("%d-demicube with %d vertices", n, polytope.vertex_count)
    return polytope


SEED_VECTOR_KINDS = ("demicube", "permutohedron", "omnitruncated_cube", "a_seed", "b_seed")


def seed_vector_families(kind: str, n: int, rings: Optional[Iterable[int]] = None,
                         ranks=None) -> Polytope:
    """
    Build one seed-vector polytope by kind.

    Parameters:
    -----------
    kind : str
        One of ``SEED_VECTOR_KINDS``. The ``a_seed`` and ``b_seed`` kinds
        need ``rings``; the others ignore them.
    n : int
        Rank of the reflection group.
    rings : iterable of int, optional
        1-based ringed nodes.
    ranks : iterable of int, optional
        Face ranks to build, all by default.

    Raises:
    -------
    ValidationError
        For an unknown kind, missing rings or n out of range.
    """
    if kind in ("a_seed", "b_seed"):
        if rings is None:
            raise ValidationError(f"{kind} needs ringed nodes")
        family = a_family if kind == "a_seed" else b_family
        return family(n, rings, ranks)
    constructions = {
        "demicube": demicube,
        "permutohedron": permutohedron,
        "omnitruncated_cube": omnitruncated_cube,
    }
    if kind not in constructions:
        raise ValidationError(f"Unknown seed-vector kind '{kind}'. "
                              f"Choose one of: {', '.join(SEED_VECTOR_KINDS)}")
    return constructions[kind](n, ranks)
