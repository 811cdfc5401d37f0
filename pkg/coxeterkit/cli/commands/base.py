"""
Base classes for command handling.
"""

import argparse
from abc import ABC, abstractmethod
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Any, Iterator

import numpy as np

from ...core import DependencyManager, PolytopeIOManager
from ...core.config import Settings, get_settings, load_settings, override_settings, set_settings
from ...core.exceptions import ValidationError


@dataclass
class CommandResult:
    """Result of command execution."""
    success: bool
    message: str = ""
    data: Any = None
    exit_code: int = 0


@contextmanager
def settings_scope(args: argparse.Namespace) -> Iterator[Settings]:
    """Apply ``--config``, ``--tol`` and ``--cap`` for the duration of a command."""
    previous = get_settings()
    config = getattr(args, 'config', None)
    if config:
        set_settings(load_settings(config))
    try:
        with override_settings(algebraic_tol=getattr(args, 'tol', None),
                               orbit_cap=getattr(args, 'cap', None)) as active:
            yield active
    finally:
        set_settings(previous)


class BaseCommand(ABC):
    """Abstract base class for all commands."""

    def __init__(self, dependency_manager: DependencyManager, io_manager: PolytopeIOManager):
        self.deps = dependency_manager
        self.io = io_manager

    @abstractmethod
    def execute(self, args: argparse.Namespace) -> CommandResult:
        """Execute the command with given arguments."""

    def _load_diagram(self, args: argparse.Namespace):
        """The ringed diagram named by --schlafli or --diagram and --ring."""
        # pylint: disable=C0415
        from ...api import load_diagram
        if not args.schlafli and not args.diagram:
            raise ValidationError("Give a diagram with --schlafli or --diagram")
        return load_diagram(schlafli=args.schlafli, diagram_file=args.diagram, rings=args.ring)

    def _load_gram(self, args: argparse.Namespace) -> np.ndarray:
        """The Gram matrix of --gram, or of the diagram options."""
        # pylint: disable=C0415
        from ...gram import gram_from_diagram, read_gram
        if args.gram:
            if args.schlafli or args.diagram:
                raise ValidationError("Give either --gram or a diagram, not both")
            return read_gram(args.gram)
        return gram_from_diagram(self._load_diagram(args))

    def _export(self, data, args: argparse.Namespace) -> str:
        """Write data when --out is given; returns a line naming the written files."""
        if not args.out:
            return ""
        kwargs = {'per_cell': True} if args.per_cell else {}
        paths = self.io.write_data(data, args.out, args.format, **kwargs)
        return f"Wrote {', '.join(paths)}"
