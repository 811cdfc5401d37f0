"""
Bundled classification catalogs of irreducible Coxeter simplex diagrams.

Each catalog file holds one family per line as whitespace-separated
``key=value`` fields::

    name=B geometry=spherical size=n nodes=n edges=chain:1..n;edge:1,2:4 where=n>=2 label=B{n}

Fields:
    name       family name, unique within the file
    geometry   spherical, euclidean, hyperbolic_compact or hyperbolic_noncompact
    size       integer parameter solved from the node count (optional)
    marks      comma list of mark parameters taking values in 2..∞ (optional)
    nodes      node-count expression
    edges      ``;``-separated statements, later ones override earlier ones:
               ``chain:A..B[:m]`` (path A-(A+1)-...-B), ``cycle:A..B[:m]``
               (path closed by B-A), ``edge:I,J[:m]``; the default mark is 3,
               mark 2 removes the edge, ``inf`` is a thick edge
    where      constraint on the parameters, may contain spaces (optional)
    label      display template, parameters in braces

Expressions use integers, ``inf``, parameter names, ``+ - * /``, comparisons
and ``and``/``or``/``not``; they are evaluated with exact fractions.
"""

import ast
import itertools
import logging
import math
import operator
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from ..core.config import get_settings
from ..core.exceptions import CatalogError, ValidationError
from .model import CoxeterDiagram, EdgeMark

logger = logging.getLogger(__name__)

CATALOG_FILES = {
    "spherical": "spherical.txt",
    "euclidean": "euclidean.txt",
    "hyperbolic_compact": "hyperbolic_compact.txt",
    "hyperbolic_noncompact": "hyperbolic_noncompact.txt",
}

MARK_VALUES = (2, 3, 4, 5, 6, 7, math.inf)

# A value runs up to the next " key=" so that constraints may contain spaces.
_FIELD = re.compile(r"\s*(\w+)=(?!=)(.*?)\s*(?=\s\w+=(?!=)|$)")

_BINARY = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul}
_COMPARE = {ast.Lt: operator.lt, ast.LtE: operator.le, ast.Gt: operator.gt,
            ast.GtE: operator.ge, ast.Eq: operator.eq, ast.NotEq: operator.ne}


def _divide(a, b):
    if b == math.inf:
        return Fraction(0) if a != math.inf else math.nan
    if b == 0:
        raise CatalogError("division by zero in catalog expression")
    if a == math.inf:
        return math.inf
    return Fraction(a) / Fraction(b)


def evaluate(expression: str, variables: Dict[str, object]):
    """
    Evaluate a catalog expression with exact fractions.

    Raises:
    -------
    CatalogError
        For syntax outside the whitelisted subset or unknown names.
    """
    try:
        tree = ast.parse(expression, mode="eval")
    except SyntaxError as e:
        raise CatalogError(f"Invalid catalog expression '{expression}': {e.msg}") from e

    def visit(node):
        if isinstance(node, ast.Expression):
            return visit(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) \
                and not isinstance(node.value, bool):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            if node.id == "inf":
                return math.inf
            if node.id not in variables:
                raise CatalogError(f"Unknown name '{node.id}' in '{expression}'")
            value = variables[node.id]
            return value if value == math.inf else Fraction(value)
        if isinstance(node, ast.BinOp):
            left, right = visit(node.left), visit(node.right)
            if isinstance(node.op, ast.Div):
                return _divide(left, right)
            if type(node.op) in _BINARY:
                return _BINARY[type(node.op)](left, right)
        if isinstance(node, ast.UnaryOp):
            operand = visit(node.operand)
            if isinstance(node.op, ast.USub):
                return -operand
            if isinstance(node.op, ast.Not):
                return not operand
        if isinstance(node, ast.BoolOp):
            values = [visit(v) for v in node.values]
            return all(values) if isinstance(node.op, ast.And) else any(values)
        if isinstance(node, ast.Compare):
            left = visit(node.left)
            for op, comparator in zip(node.ops, node.comparators):
                right = visit(comparator)
                if type(op) not in _COMPARE or not _COMPARE[type(op)](left, right):
                    return False
                left = right
            return True
        raise CatalogError(f"Unsupported syntax in catalog expression '{expression}'")

    return visit(tree)


def _as_int(value, context: str) -> int:
    if value == math.inf or Fraction(value).denominator != 1:
        raise CatalogError(f"{context} must evaluate to an integer, got {value}")
    return int(value)


@dataclass(frozen=True)
class FamilyLabel:
    """A named catalog family with its parameter values."""
    family: str
    geometry: str
    params: Tuple[Tuple[str, object], ...]
    text: str

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class CatalogEntry:
    """One family record of a catalog file."""
    name: str
    geometry: str
    size_param: Optional[str]
    mark_params: Tuple[str, ...]
    nodes: str
    edges: str
    where: Optional[str]
    label: str
    source: str
    line: int

    @property
    def parameters(self) -> Tuple[str, ...]:
        return ((self.size_param,) if self.size_param else ()) + self.mark_params

    def admits(self, values: Dict[str, object]) -> bool:
        return self.where is None or bool(evaluate(self.where, values))

    def instantiate(self, values: Dict[str, object]) -> CoxeterDiagram:
        """Diagram of the family member with the given parameter values."""
        k = _as_int(evaluate(self.nodes, values), f"{self.source}:{self.line} nodes")
        if k < 1:
            raise CatalogError(f"{self.source}:{self.line}: node count {k} < 1")
        orders: Dict[Tuple[int, int], object] = {}

        def node(expr):
            return _as_int(evaluate(expr, values), f"{self.source}:{self.line} node")

        for statement in filter(None, self.edges.split(";")):
            kind, _, rest = statement.partition(":")
            spec, _, mark_expr = rest.partition(":")
            mark = evaluate(mark_expr, values) if mark_expr else 3
            if kind in ("chain", "cycle"):
                start, _, stop = spec.partition("..")
                a, b = node(start), node(stop)
                pairs = [(i, i + 1) for i in range(a, b)]
                if kind == "cycle" and b - a >= 2:
                    pairs.append((a, b))
            elif kind == "edge":
                i, _, j = spec.partition(",")
                pairs = [(node(i), node(j))]
            else:
                raise CatalogError(f"{self.source}:{self.line}: unknown edge statement '{kind}'")
            for i, j in pairs:
                orders[(min(i, j), max(i, j))] = mark

        edges = {}
        for key, order in orders.items():
            if order != math.inf:
                order = _as_int(order, f"{self.source}:{self.line} mark")
            mark = EdgeMark.from_order(order)
            if mark is not None:
                edges[key] = mark
        return CoxeterDiagram(k, edges)

    def format_label(self, values: Dict[str, object]) -> FamilyLabel:
        shown = {name: ("inf" if v == math.inf else str(int(v))) for name, v in values.items()}
        params = tuple((name, values[name]) for name in self.parameters)
        return FamilyLabel(self.name, self.geometry, params, self.label.format(**shown))

    def candidate_values(self, diagram: CoxeterDiagram) -> Iterator[Dict[str, object]]:
        """Parameter assignments that could produce a diagram of this size."""
        k = diagram.node_count
        sizes = [None]
        if self.size_param:
            sizes = [n for n in range(0, k + 2)
                     if evaluate(self.nodes, {self.size_param: n}) == k]
        orders = sorted({m.order for m in diagram.edges.values()} | {2})
        for n in sizes:
            base = {} if n is None else {self.size_param: n}
            for combo in itertools.product(orders, repeat=len(self.mark_params)):
                values = dict(base, **dict(zip(self.mark_params, combo)))
                try:
                    if evaluate(self.nodes, values) != k or not self.admits(values):
                        continue
                except CatalogError:
                    continue
                yield values

    def match(self, diagram: CoxeterDiagram) -> Optional[FamilyLabel]:
        """Label of the member isomorphic to the diagram, or None."""
        target = diagram.graph()
        for values in self.candidate_values(diagram):
            member = self.instantiate(values)
            if len(member.edges) != len(diagram.edges):
                continue
            if nx.is_isomorphic(member.graph(), target,
                                edge_match=lambda a, b: a["mark"] == b["mark"]):
                return self.format_label(values)
        return None

    def members(self, max_nodes: int = 9) -> Iterator[Tuple[FamilyLabel, CoxeterDiagram]]:
        """Family members with at most ``max_nodes`` nodes, marks drawn from 2..7 and ∞."""
        sizes = [None] if not self.size_param else range(0, max_nodes + 1)
        for n in sizes:
            base = {} if n is None else {self.size_param: n}
            for combo in itertools.product(MARK_VALUES, repeat=len(self.mark_params)):
                values = dict(base, **dict(zip(self.mark_params, combo)))
                if not self.admits(values):
                    continue
                k = evaluate(self.nodes, values)
                if k < 1 or k > max_nodes:
                    continue
                yield self.format_label(values), self.instantiate(values)


_REQUIRED = ("name", "geometry", "nodes", "edges", "label")


def parse_catalog(text: str, source: str = "<string>") -> List[CatalogEntry]:
    """Parse catalog text into entries."""
    entries = []
    names = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = {}
        pos = 0
        while pos < len(line):
            found = _FIELD.match(line, pos)
            if found is None:
                item = line[pos:].split()[0]
                raise CatalogError(f"{source}:{number}: expected key=value, got '{item}'")
            fields[found.group(1)] = found.group(2)
            pos = found.end()
        missing = [key for key in _REQUIRED if key not in fields]
        if missing:
            raise CatalogError(f"{source}:{number}: missing field(s) {', '.join(missing)}")
        if fields["geometry"] not in CATALOG_FILES:
            raise CatalogError(f"{source}:{number}: unknown geometry '{fields['geometry']}'")
        if fields["name"] in names:
            raise CatalogError(f"{source}:{number}: duplicate family '{fields['name']}'")
        names.add(fields["name"])
        marks = tuple(p for p in fields.get("marks", "").split(",") if p)
        entries.append(CatalogEntry(
            name=fields["name"], geometry=fields["geometry"],
            size_param=fields.get("size"), mark_params=marks,
            nodes=fields["nodes"], edges=fields["edges"], where=fields.get("where"),
            label=fields["label"], source=source, line=number))
    return entries


def default_catalog_dir() -> str:
    return os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "catalogs")


@lru_cache(maxsize=None)
def _load(directory: str, geometry: str) -> Tuple[CatalogEntry, ...]:
    path = os.path.join(directory, CATALOG_FILES[geometry])
    if not os.path.exists(path):
        raise CatalogError(f"Catalog file not found: {path}")
    with open(path, "r", encoding="utf-8") as handle:
        entries = parse_catalog(handle.read(), source=path)
    logger.debug("Loaded %d %s families from %s", len(entries), geometry, path)
    return tuple(entries)


def load_catalog(geometry: str, directory: Optional[str] = None) -> Tuple[CatalogEntry, ...]:
    """
    Entries of one catalog file.

    Parameters:
    -----------
    geometry : str
        One of the keys of CATALOG_FILES.
    directory : str, optional
        Catalog directory; defaults to the configured or bundled one.
    """
    if geometry not in CATALOG_FILES:
        raise ValidationError(f"Unknown catalog '{geometry}'. "
                              f"Choose one of: {', '.join(CATALOG_FILES)}")
    directory = directory or get_settings().catalog_dir or default_catalog_dir()
    return _load(os.path.abspath(directory), geometry)


def identify(diagram: CoxeterDiagram, geometries: Sequence[str],
             directory: Optional[str] = None) -> Optional[FamilyLabel]:
    """First catalog family (in the given catalogs) the diagram belongs to."""
    for geometry in geometries:
        for entry in load_catalog(geometry, directory):
            label = entry.match(diagram)
            if label is not None:
                return label
    return None


def catalog_rows(directory: Optional[str] = None) -> List[Dict[str, str]]:
    """One summary row per family of every catalog, for listings."""
    rows = []
    for geometry in CATALOG_FILES:
        for entry in load_catalog(geometry, directory):
            rows.append({
                "geometry": geometry,
                "family": entry.name,
                "parameters": ",".join(entry.parameters) or "-",
                "constraint": entry.where or "-",
                "label": entry.label,
            })
    return rows
