"""
Geometry of Coxeter simplex diagrams.

The Gram signature decides the geometry; the bundled catalogs name the family.
A spherical or Euclidean diagram that the signature accepts but no catalog
family matches is an internal inconsistency, reported as an error.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Optional, Tuple

from ..core.exceptions import ClassificationError
from .catalog import FamilyLabel, identify
from .model import CoxeterDiagram

logger = logging.getLogger(__name__)


class SimplexType(Enum):
    """Possible outcomes of classify."""
    SPHERICAL = "Spherical"
    EUCLIDEAN = "Euclidean"
    HYPERBOLIC_COMPACT = "HyperbolicCompact"
    HYPERBOLIC_NONCOMPACT = "HyperbolicNoncompact"
    NOT_A_SIMPLEX = "NotASimplexDiagram"


@dataclass(frozen=True)
class Classification:
    """Result of classify.

    Attributes:
    -----------
    kind : SimplexType
        Geometry of the simplex.
    label : FamilyLabel, optional
        Catalog family (always set for spherical and Euclidean results).
    signature : Signature
        Gram signature.
    ideal_nodes : tuple of int
        For non-compact hyperbolic simplices, the nodes whose facets are
        opposite an ideal vertex.
    """
    kind: SimplexType
    label: Optional[FamilyLabel]
    signature: object
    ideal_nodes: Tuple[int, ...] = ()

    @property
    def is_hyperbolic(self) -> bool:
        return self.kind in (SimplexType.HYPERBOLIC_COMPACT, SimplexType.HYPERBOLIC_NONCOMPACT)

    def __str__(self) -> str:
        if self.kind in (SimplexType.SPHERICAL, SimplexType.EUCLIDEAN):
            return f"{self.kind.value}({self.label})"
        return self.kind.value


def _is_spherical(sig) -> bool:
    return sig.negative == 0 and sig.zero == 0


def _is_euclidean(sig) -> bool:
    return sig.negative == 0 and sig.zero > 0


def classify(diagram: CoxeterDiagram, tol: Optional[float] = None,
             catalog_dir: Optional[str] = None) -> Classification:
    """
    Classify a connected Coxeter diagram as a simplex diagram.

    Parameters:
    -----------
    diagram : CoxeterDiagram
        Connected diagram on k nodes.
    tol : float, optional
        Relative eigenvalue tolerance (defaults to the configured one).
    catalog_dir : str, optional
        Catalog directory override.

    Returns:
    --------
    Classification
        Spherical for signature (k,0,0), Euclidean for (k−1,0,1), hyperbolic
        compact or non-compact for (k−1,1,0) depending on the (k−1)-node
        subdiagrams, NotASimplexDiagram otherwise and for dashed edges.

    Raises:
    -------
    ClassificationError
        If the diagram is disconnected, or a spherical/Euclidean signature has
        no catalog family.
    """
    from ..gram import gram_from_diagram, signature

    if not diagram.is_connected():
        raise ClassificationError(
            f"Diagram is disconnected (components {diagram.components()}); "
            "classify each component separately")

    G = gram_from_diagram(diagram)
    sig = signature(G, tol)
    k = diagram.node_count
    if diagram.has_ultraparallel:
        return Classification(SimplexType.NOT_A_SIMPLEX, None, sig)

    if sig.as_tuple() == (k, 0, 0):
        return Classification(SimplexType.SPHERICAL,
                              _required_label(diagram, "spherical", sig, catalog_dir), sig)
    if sig.as_tuple() == (k - 1, 0, 1):
        return Classification(SimplexType.EUCLIDEAN,
                              _required_label(diagram, "euclidean", sig, catalog_dir), sig)
    if sig.as_tuple() != (k - 1, 1, 0):
        return Classification(SimplexType.NOT_A_SIMPLEX, None, sig)

    ideal_nodes = []
    for subset in combinations(range(k), k - 1):
        sub_sig = signature(G[list(subset)][:, list(subset)], tol)
        if _is_spherical(sub_sig):
            continue
        if _is_euclidean(sub_sig):
            missing = (set(range(k)) - set(subset)).pop()
            ideal_nodes.append(missing + 1)
            continue
        return Classification(SimplexType.NOT_A_SIMPLEX, None, sig)

    kind = SimplexType.HYPERBOLIC_NONCOMPACT if ideal_nodes else SimplexType.HYPERBOLIC_COMPACT
    catalog = "hyperbolic_noncompact" if ideal_nodes else "hyperbolic_compact"
    label = identify(diagram, [catalog], catalog_dir)
    if label is None:
        logger.info("Hyperbolic diagram with no catalog family: %s", diagram)
    return Classification(kind, label, sig, tuple(sorted(ideal_nodes)))


def _required_label(diagram, catalog, sig, catalog_dir) -> FamilyLabel:
    label = identify(diagram, [catalog], catalog_dir)
    if label is None:
        raise ClassificationError(
            f"internal consistency: signature {sig} says {catalog} but no catalog "
            f"family matches {diagram}")
    return label


def classify_components(diagram: CoxeterDiagram, tol: Optional[float] = None,
                        catalog_dir: Optional[str] = None):
    """Classify every connected component; returns (nodes, Classification) pairs."""
    return [(nodes, classify(diagram.restrict(nodes), tol, catalog_dir))
            for nodes in diagram.components()]
