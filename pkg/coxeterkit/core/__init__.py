"""
coxeterkit Core Module

Core functionality including configuration, dependency management, exceptions
and export management.
"""

from .config import Settings, get_settings, load_settings, override_settings
from .dependencies import DependencyManager
from .io_manager import PolytopeIOManager
from .format_detection import FormatDetector
from .exceptions import (CatalogError, ClassificationError, CoxeterKitError, DependencyError,
                         DiagramSyntaxError, FormatDetectionError, GeometryError,
                         OrbitCapExceeded, RealizationError, ValidationError, WriterError)

__all__ = [
    'CatalogError',
    'ClassificationError',
    'CoxeterKitError',
    'DependencyError',
    'DiagramSyntaxError',
    'FormatDetectionError',
    'FormatDetector',
    'GeometryError',
    'OrbitCapExceeded',
    'PolytopeIOManager',
    'RealizationError',
    'Settings',
    'ValidationError',
    'WriterError',
    'get_settings',
    'load_settings',
    'override_settings',
]
