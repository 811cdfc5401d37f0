"""
Command factory for creating command instances.
"""

from ...core import DependencyManager, PolytopeIOManager
from ...core.exceptions import ValidationError
from .base import BaseCommand
from .analysis_commands import ClassifyCommand, FacesCommand, RealizeCommand
from .construction_commands import BuildCommand, DualCommand, TessellateCommand, ZooCommand
from .info_commands import CatalogCommand, VerifyCommand


class CommandFactory:
    """Factory for creating command instances."""

    COMMANDS = {
        'classify': ClassifyCommand,
        'realize': RealizeCommand,
        'faces': FacesCommand,
        'build': BuildCommand,
        'tessellate': TessellateCommand,
        'dual': DualCommand,
        'zoo': ZooCommand,
        'verify': VerifyCommand,
        'catalog': CatalogCommand,
    }

    def create_command(self, command_name: str, dependency_manager: DependencyManager,
                       io_manager: PolytopeIOManager) -> BaseCommand:
        """
        Create a command instance based on command name.

        Parameters:
        -----------
        command_name : str
            Name of the command to create
        dependency_manager : DependencyManager
            Dependency manager instance
        io_manager : PolytopeIOManager
            Export manager instance

        Returns:
        --------
        BaseCommand
            Command instance

        Raises:
        -------
        ValidationError
            If command is unknown
        """
        if command_name not in self.COMMANDS:
            raise ValidationError(f"Unknown command: {command_name}")
        return self.COMMANDS[command_name](dependency_manager, io_manager)
