"""
coxeterkit - Coxeter polyhedra, reflection groups and uniform polytopes

Classify Coxeter diagrams, test and realize Gram matrices, enumerate faces,
and build uniform polytopes and tessellation patches with the Wythoff
construction.

Basic Usage:
-----------
```python
import coxeterkit as ck
d = ck.load_diagram("3,4,3", rings="1")
print(ck.classify(d))
cell24 = ck.build(d)
ck.write(cell24, 'cell24.off')
```

API Structure:
-------------
- ck.load_diagram()  : Diagrams from Schläfli symbols or diagram files
- ck.classify()      : Simplex diagram classification
- ck.build()         : Wythoff polytopes
- ck.write()         : Export to OFF, OBJ, SVG, JSON and coordinate lists
- ck.formats()       : Export format discovery
- ck.catalog()       : Bundled diagram families
- ck.wythoff, ck.dual, ck.zoo, ck.writers : loaded on first access
"""

# Core API imports - always available
from .api import catalog, formats, load_diagram, write
from .diagram import classify, from_schlafli, parse_diagram
from .gram import gram_from_diagram, recover_normals, vinberg_realizable

# Lazy loading for heavy modules
from importlib import import_module
from typing import Any

# Module cache for lazy loading
_loaded_modules = {}

# Version info
__version__ = "0.2.0"


def __getattr__(name: str) -> Any:
    """
    Lazy loading of package modules.

    The construction sub-packages and the writers are only imported when
    first accessed; ``build`` and ``tessellation_patch`` resolve through
    the wythoff sub-package.
    """
    _module_map = {
        'wythoff': '.wythoff',
        'dual': '.dual',
        'zoo': '.zoo',
        'faces': '.faces',
        'lowdim': '.lowdim',
        'writers': '.writers',
        'verification': '.verification',
    }
    _function_map = {
        'build': '.wythoff',
        'tessellation_patch': '.wythoff',
    }

    if name in _module_map:
        if name not in _loaded_modules:
            _loaded_modules[name] = import_module(f'coxeterkit{_module_map[name]}')
        return _loaded_modules[name]
    if name in _function_map:
        return getattr(import_module(f'coxeterkit{_function_map[name]}'), name)
    raise AttributeError(f"module '{__name__}' has no attribute '{name}'")


# Define what's available at top level
__all__ = [
    'build',
    'catalog',
    'classify',
    'formats',
    'from_schlafli',
    'gram_from_diagram',
    'load_diagram',
    'parse_diagram',
    'recover_normals',
    'tessellation_patch',
    'vinberg_realizable',
    'write',
    '__version__'
]
