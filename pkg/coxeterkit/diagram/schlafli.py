"""
Schläfli symbols and their linear Coxeter diagrams.
"""

import math
import re
from typing import Iterable, Optional, Sequence, Tuple, Union

from ..core.exceptions import ValidationError
from .model import CoxeterDiagram, EdgeMark

RingSpec = Union[None, str, Iterable[int]]

NAMED_RING_SPECS = ("regular", "rectified", "truncated", "cantellated", "omnitruncated")


def parse_schlafli(text: str) -> Tuple[float, ...]:
    """Read ``"4,3,5"``, ``"{4,3,5}"`` or ``"4 3 5"``; ``inf`` (or ``∞``) is allowed."""
    body = text.strip().strip("{}[]")
    if not body:
        raise ValidationError("Empty Schläfli symbol")
    symbols = []
    for part in re.split(r"[,\s]+", body.strip()):
        if part in ("inf", "∞"):
            symbols.append(math.inf)
            continue
        try:
            symbols.append(int(part))
        except ValueError as e:
            raise ValidationError(f"Invalid Schläfli entry '{part}'") from e
    return tuple(symbols)


def parse_rings(text: Optional[str]) -> RingSpec:
    """Read a ``--ring`` value: a named spec or a comma list of 1-based nodes."""
    if text is None:
        return None
    text = text.strip()
    if text in NAMED_RING_SPECS:
        return text
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise ValidationError(f"Invalid ring specification '{text}'") from e


def _resolve_rings(ring_spec: RingSpec, node_count: int) -> frozenset:
    if ring_spec is None or ring_spec == "regular":
        return frozenset({1})
    if isinstance(ring_spec, str):
        named = {
            "rectified": {2},
            "truncated": {1, 2},
            "cantellated": {1, 3},
            "omnitruncated": set(range(1, node_count + 1)),
        }
        if ring_spec not in named:
            raise ValidationError(f"Unknown ring specification '{ring_spec}'. "
                                  f"Choose one of: {', '.join(NAMED_RING_SPECS)}")
        rings = named[ring_spec]
    else:
        rings = set(ring_spec)
    if not rings:
        raise ValidationError("At least one node must be ringed")
    bad = [r for r in rings if not 1 <= r <= node_count]
    if bad:
        raise ValidationError(f"Ring index {bad[0]} out of range 1..{node_count}")
    return frozenset(rings)


def from_schlafli(symbols: Sequence, ring_spec: RingSpec = None) -> CoxeterDiagram:
    """
    Linear diagram of a Schläfli symbol {k₁, ..., kₙ}.

    Parameters:
    -----------
    symbols : sequence of int or inf
        Entries kᵢ ≥ 3, or ∞; edge i-(i+1) gets mark kᵢ.
    ring_spec : None, str or iterable of int
        Ringed nodes (1-based). None or "regular" rings the first node; the
        names "rectified", "truncated", "cantellated" and "omnitruncated"
        ring nodes {2}, {1,2}, {1,3} and all nodes.

    Returns:
    --------
    CoxeterDiagram
        Path diagram on n+1 nodes.

    Raises:
    -------
    ValidationError
        For an empty symbol, an entry below 3, or bad ring indices.
    """
    if isinstance(symbols, str):
        symbols = parse_schlafli(symbols)
    symbols = list(symbols)
    if not symbols:
        raise ValidationError("A Schläfli symbol needs at least one entry")
    edges = {}
    for i, k in enumerate(symbols, start=1):
        if k != math.inf and (int(k) != k or k < 3):
            raise ValidationError(f"Schläfli entries must be integers >= 3 or inf, got {k}")
        edges[(i, i + 1)] = EdgeMark.parallel() if k == math.inf else EdgeMark.finite(int(k))
    node_count = len(symbols) + 1
    return CoxeterDiagram(node_count, edges, _resolve_rings(ring_spec, node_count))


def schlafli_of(diagram: CoxeterDiagram) -> Optional[Tuple[float, ...]]:
    """Schläfli symbol of a linear diagram, None for any other shape."""
    if not diagram.is_linear():
        return None
    return tuple(diagram.order(i, i + 1) for i in range(1, diagram.node_count))


def format_schlafli(symbols: Sequence) -> str:
    return "{" + ",".join("inf" if s == math.inf else str(int(s)) for s in symbols) + "}"
