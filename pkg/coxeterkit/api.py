"""
Public API functions for coxeterkit.

This module provides simple programmatic access to coxeterkit functionality
without requiring knowledge of the internal CLI structure. The CLI reads
diagrams through `load_diagram` and lists families through `catalog`; the
construction commands call the sub-packages directly.
"""

import logging
from typing import Dict, List, Optional, Sequence, Union

from .core import DependencyManager, PolytopeIOManager
from .core.exceptions import ValidationError
from .diagram import (CoxeterDiagram, catalog_rows, from_schlafli, parse_rings,
                      parse_schlafli, read_diagram_file)
from .writers.registry import WRITER_REGISTRY

logger = logging.getLogger(__name__)


def load_diagram(schlafli: Optional[Union[str, Sequence]] = None,
                 diagram_file: Optional[str] = None,
                 rings: Optional[Union[str, Sequence[int]]] = None) -> CoxeterDiagram:
    """
    Build a Coxeter diagram from a Schläfli symbol or a diagram file.

    Parameters
    ----------
    schlafli : str or sequence, optional
        Symbol such as ``"4,3,5"`` or ``(4, 3, 5)``.
    diagram_file : str, optional
        Path of a file in the diagram notation.
    rings : str or sequence of int, optional
        Ring specification, either a named spec (``"rectified"``) or 1-based
        node indices. For Schläfli symbols the default rings node 1; for
        diagram files the rings of the file are kept unless given here.

    Returns
    -------
    CoxeterDiagram
        The (ringed) diagram.

    Raises
    ------
    ValidationError
        If neither or both sources are given, or the rings are invalid.

    Examples
    --------
    ```python
    import coxeterkit as ck
    d = ck.load_diagram("3,4,3", rings="1")
    print(ck.build(d).f_vector())
    ```
    """
    if (schlafli is None) == (diagram_file is None):
        raise ValidationError("Give exactly one of a Schläfli symbol or a diagram file")
    ring_spec = parse_rings(rings) if isinstance(rings, str) else rings
    if schlafli is not None:
        symbols = parse_schlafli(schlafli) if isinstance(schlafli, str) else tuple(schlafli)
        return from_schlafli(symbols, ring_spec)

    diagram = read_diagram_file(diagram_file)
    if ring_spec is None:
        return diagram
    if isinstance(ring_spec, str):
        raise ValidationError("Named ring specs apply to Schläfli symbols only; "
                              "give node indices for diagram files")
    return diagram.with_rings(ring_spec)


def write(data, filename: str, file_format: Optional[str] = None, **kwargs) -> List[str]:
    """
    Export a polytope or tessellation patch.

    Parameters
    ----------
    data : Polytope or TessellationPatch
        The construction to export.
    filename : str
        Path of the output file.
    file_format : str, optional
        Format key (``off``, ``obj``, ``svg``, ``json``, ``txt``); detected
        from the extension when None.
    **kwargs
        Passed to the writer, e.g. ``per_cell=True`` for OFF patches.

    Returns
    -------
    List[str]
        Paths of the written files.

    Raises
    ------
    FormatDetectionError
        If the format cannot be determined.
    WriterError
        If the construction cannot be written in that format.
    """
    io_manager = PolytopeIOManager(DependencyManager())
    return io_manager.write_data(data, filename, file_format, **kwargs)


def formats() -> List[Dict[str, str]]:
    """
    List all supported export formats.

    Returns
    -------
    List[Dict[str, str]]
        Dictionaries with keys 'name', 'key', 'extension' and 'class_name'.
    """
    return [
        {
            'name': w.format_name,
            'key': w.format_key,
            'extension': w.file_extension,
            'class_name': w.class_name
        }
        for w in WRITER_REGISTRY
    ]


def catalog(geometry: Optional[str] = None,
            directory: Optional[str] = None) -> List[Dict[str, str]]:
    """
    List the bundled simplex diagram families.

    Parameters
    ----------
    geometry : str, optional
        Keep only rows of this geometry (e.g. ``"spherical"``).
    directory : str, optional
        Catalog directory; the configured one when None.
    """
    rows = catalog_rows(directory)
    if geometry is not None:
        rows = [row for row in rows if row['geometry'] == geometry]
    return rows
