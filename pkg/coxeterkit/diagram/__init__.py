"""
Coxeter diagrams: data model, text notation, Schläfli symbols, catalogs
and classification.
"""

from .model import CoxeterDiagram, EdgeMark, MarkKind, subdiagrams
from .dsl import parse_diagram, read_diagram_file, render
from .schlafli import (NAMED_RING_SPECS, format_schlafli, from_schlafli, parse_rings,
                       parse_schlafli, schlafli_of)
from .catalog import (CATALOG_FILES, CatalogEntry, FamilyLabel, catalog_rows, identify,
                      load_catalog)
from .classification import Classification, SimplexType, classify, classify_components

__all__ = [
    'CATALOG_FILES',
    'CatalogEntry',
    'Classification',
    'CoxeterDiagram',
    'EdgeMark',
    'FamilyLabel',
    'MarkKind',
    'NAMED_RING_SPECS',
    'SimplexType',
    'catalog_rows',
    'classify',
    'classify_components',
    'format_schlafli',
    'from_schlafli',
    'identify',
    'load_catalog',
    'parse_diagram',
    'parse_rings',
    'parse_schlafli',
    'read_diagram_file',
    'render',
    'schlafli_of',
    'subdiagrams',
]
