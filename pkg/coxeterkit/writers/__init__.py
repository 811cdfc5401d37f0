"""
coxeterkit Writers Module

This module provides writer classes for exporting polytopes and tessellation
patches to different file formats. Writer classes are imported on first
access, so resolving formats through the registry stays cheap.

Available Writers:
-----------------
- OffWriter: Export to OFF / nOFF
- ObjWriter: Export to Wavefront OBJ
- SvgWriter: Draw 2D constructions (Klein disc for hyperbolic ones)
- JsonWriter: Export a JSON summary
- TxtWriter: Export a plain coordinate list

Example Usage:
--------------
from coxeterkit.writers import OffWriter

writer = OffWriter(polytope)
writer.write("cell24.off")
"""

from .registry import get_writer_modules

_WRITER_MODULES = get_writer_modules()
_WRITER_MODULES['AbstractWriter'] = '.base'

_loaded_writers = {}


def __getattr__(name):
    """Lazy loading of writer classes."""
    if name in _WRITER_MODULES:
        if name not in _loaded_writers:
            # pylint: disable=C0415
            from importlib import import_module
            module = import_module(_WRITER_MODULES[name], package=__name__)
            _loaded_writers[name] = getattr(module, name)
        return _loaded_writers[name]

    raise AttributeError(f"module '{__name__}' has no attribute '{name}'")


__all__ = [
    'AbstractWriter',
    'JsonWriter',
    'ObjWriter',
    'OffWriter',
    'SvgWriter',
    'TxtWriter'
]
