"""
Command handlers for the coxeterkit CLI.
"""

from .base import BaseCommand, CommandResult, settings_scope
from .factory import CommandFactory
from .analysis_commands import ClassifyCommand, FacesCommand, RealizeCommand
from .construction_commands import BuildCommand, DualCommand, TessellateCommand, ZooCommand
from .info_commands import CatalogCommand, VerifyCommand

__all__ = [
    'BaseCommand',
    'CommandResult',
    'CommandFactory',
    'ClassifyCommand',
    'RealizeCommand',
    'FacesCommand',
    'BuildCommand',
    'TessellateCommand',
    'DualCommand',
    'ZooCommand',
    'VerifyCommand',
    'CatalogCommand',
    'settings_scope',
]
