"""
Coxeter(-Wythoff) diagram data model.

Nodes are numbered 1..k. An absent edge stands for a right dihedral angle
(mark 2); a plain edge is mark 3; higher marks m stand for angle π/m. Thick
edges (parallel mirrors) and dashed edges (ultraparallel mirrors at distance
d) complete the notation. Ringed nodes select the Wythoff seed.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import networkx as nx

from ..core.exceptions import ValidationError


class MarkKind(Enum):
    """Kinds of diagram edges."""
    FINITE = "finite"
    PARALLEL = "parallel"
    ULTRAPARALLEL = "ultraparallel"


@dataclass(frozen=True)
class EdgeMark:
    """Decoration of one diagram edge.

    Use the constructors :meth:`finite`, :meth:`parallel` and
    :meth:`ultraparallel` rather than the raw fields.
    """
    kind: MarkKind
    value: Optional[float] = None

    def __post_init__(self):
        if self.kind is MarkKind.FINITE:
            if (self.value is None or not math.isfinite(self.value)
                    or int(self.value) != self.value or self.value < 3):
                raise ValidationError(f"Edge mark must be an integer >= 3, got {self.value}")
            object.__setattr__(self, "value", int(self.value))
        elif self.kind is MarkKind.ULTRAPARALLEL:
            if self.value is None or not self.value > 0 or math.isinf(self.value):
                raise ValidationError(f"Ultraparallel distance must be positive, got {self.value}")
            object.__setattr__(self, "value", float(self.value))
        else:
            object.__setattr__(self, "value", None)

    @classmethod
    def finite(cls, m: int) -> "EdgeMark":
        return cls(MarkKind.FINITE, m)

    @classmethod
    def parallel(cls) -> "EdgeMark":
        return cls(MarkKind.PARALLEL)

    @classmethod
    def ultraparallel(cls, d: float) -> "EdgeMark":
        return cls(MarkKind.ULTRAPARALLEL, d)

    @classmethod
    def from_order(cls, order) -> Optional["EdgeMark"]:
        """Mark for a group-relation order; None for 2 (no edge), parallel for ∞."""
        if order == 2:
            return None
        if order == math.inf:
            return cls.parallel()
        return cls.finite(order)

    @property
    def order(self) -> float:
        """Order m of rᵢrⱼ: the mark, ∞ for parallel, NaN for ultraparallel."""
        if self.kind is MarkKind.FINITE:
            return self.value
        if self.kind is MarkKind.PARALLEL:
            return math.inf
        return math.nan

    @property
    def gram_entry(self) -> float:
        """Off-diagonal Gram entry: −cos(π/m), −1 or −cosh d."""
        if self.kind is MarkKind.FINITE:
            return -math.cos(math.pi / self.value)
        if self.kind is MarkKind.PARALLEL:
            return -1.0
        return -math.cosh(self.value)

    def __str__(self) -> str:
        if self.kind is MarkKind.FINITE:
            return str(self.value)
        if self.kind is MarkKind.PARALLEL:
            return "inf"
        return f"d={self.value!r}"


def _edge_key(i: int, j: int) -> Tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class CoxeterDiagram:
    """A Coxeter diagram with optional ringed nodes.

    Attributes:
    -----------
    node_count : int
        Number of nodes k; nodes are numbered 1..k.
    edges : Mapping[(int, int), EdgeMark]
        Marks of the drawn edges, keyed by ordered pairs (i, j) with i < j.
    rings : frozenset of int
        Ringed nodes.
    """
    node_count: int
    edges: Mapping[Tuple[int, int], EdgeMark] = field(default_factory=dict)
    rings: frozenset = frozenset()

    def __post_init__(self):
        if self.node_count < 1:
            raise ValidationError("A diagram needs at least one node")
        normalized: Dict[Tuple[int, int], EdgeMark] = {}
        for (i, j), mark in self.edges.items():
            if i == j:
                raise ValidationError(f"Edge {i}-{j} joins a node to itself")
            for node in (i, j):
                self._check_node(node)
            key = _edge_key(i, j)
            if key in normalized:
                raise ValidationError(f"Duplicate edge {key[0]}-{key[1]}")
            if not isinstance(mark, EdgeMark):
                mark = EdgeMark.from_order(mark)
            if mark is not None:
                normalized[key] = mark
        object.__setattr__(self, "edges", dict(sorted(normalized.items())))
        rings = frozenset(int(r) for r in self.rings)
        for node in rings:
            self._check_node(node)
        object.__setattr__(self, "rings", rings)

    def _check_node(self, node: int):
        if not 1 <= node <= self.node_count:
            raise ValidationError(f"Node index {node} out of range 1..{self.node_count}")

    def __hash__(self):
        return hash((self.node_count, tuple(self.edges.items()), self.rings))

    @property
    def nodes(self) -> range:
        return range(1, self.node_count + 1)

    def mark(self, i: int, j: int) -> Optional[EdgeMark]:
        """Mark of the pair, None when no edge is drawn."""
        return self.edges.get(_edge_key(i, j))

    def order(self, i: int, j: int) -> float:
        """Order of rᵢrⱼ (2 for undrawn edges)."""
        if i == j:
            return 1
        mark = self.mark(i, j)
        return 2 if mark is None else mark.order

    def neighbors(self, i: int) -> List[int]:
        return sorted(j for j in self.nodes if j != i and self.mark(i, j) is not None)

    @property
    def has_ultraparallel(self) -> bool:
        return any(m.kind is MarkKind.ULTRAPARALLEL for m in self.edges.values())

    def graph(self, nodes: Optional[Iterable[int]] = None) -> nx.Graph:
        """The diagram as a networkx graph; edge attribute ``mark``."""
        keep = set(self.nodes if nodes is None else nodes)
        g = nx.Graph()
        g.add_nodes_from(sorted(keep))
        for (i, j), mark in self.edges.items():
            if i in keep and j in keep:
                g.add_edge(i, j, mark=mark)
        return g

    def components(self, nodes: Optional[Iterable[int]] = None) -> List[Tuple[int, ...]]:
        """Connected components of the induced subdiagram, sorted."""
        return sorted(tuple(sorted(c)) for c in nx.connected_components(self.graph(nodes)))

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def is_linear(self) -> bool:
        """True for a path diagram numbered 1-2-...-k without dashed edges."""
        expected = {(i, i + 1) for i in range(1, self.node_count)}
        return (set(self.edges) == expected
                and all(m.kind is not MarkKind.ULTRAPARALLEL for m in self.edges.values()))

    def restrict(self, nodes: Iterable[int]) -> "CoxeterDiagram":
        """Induced subdiagram, renumbered 1..len(nodes) in increasing order."""
        nodes = sorted(set(nodes))
        index = {node: pos for pos, node in enumerate(nodes, start=1)}
        edges = {(index[i], index[j]): mark for (i, j), mark in self.edges.items()
                 if i in index and j in index}
        rings = {index[r] for r in self.rings if r in index}
        return CoxeterDiagram(len(nodes), edges, frozenset(rings))

    def with_rings(self, rings: Iterable[int]) -> "CoxeterDiagram":
        return CoxeterDiagram(self.node_count, dict(self.edges), frozenset(rings))

    def __str__(self) -> str:
        from .dsl import render
        return render(self)


def subdiagrams(diagram: CoxeterDiagram, size: int,
                require_ring: bool = False) -> List[Tuple[int, ...]]:
    """
    Node subsets of a given size, in lexicographic order.

    With ``require_ring`` only Coxeter-Wythoff subdiagrams are kept: subsets
    whose every connected component contains a ringed node.

    Raises:
    -------
    ValidationError
        If size is outside 1..k.
    """
    if not 1 <= size <= diagram.node_count:
        raise ValidationError(f"Subdiagram size must be in 1..{diagram.node_count}, got {size}")
    subsets = list(combinations(diagram.nodes, size))
    if not require_ring:
        return subsets
    return [s for s in subsets
            if all(diagram.rings.intersection(c) for c in diagram.components(s))]
