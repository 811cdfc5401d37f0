"""
CLI router.

This module handles command routing with lazy dependency loading.
"""

import logging
import sys
from typing import List

from ..core import DependencyManager, PolytopeIOManager
from ..core.exceptions import CoxeterKitError
from .parser import ArgumentParser
from .commands import CommandFactory, settings_scope

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def configure_logging(verbosity: int) -> None:
    """Warnings only by default, INFO for -v, DEBUG for -vv."""
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


class CLIRouter:
    """Dispatches a coxeterkit command line to its command object.

    The router owns the shared dependency and export managers, applies the
    ``--tol``/``--cap``/``--config`` settings around each command and turns
    library errors into exit codes.

    Attributes:
    ----------
    dependency_manager : DependencyManager
        Lazy loader for pandas and the construction sub-packages.
    io_manager : PolytopeIOManager
        Writes polytopes and patches for ``--out``.
    argument_parser : ArgumentParser
        Builds the argparse tree.
    command_factory : CommandFactory
        Maps verbs to command classes.

    Methods:
    -------
    route_and_execute(args: List[str]) -> int:
        Runs one command line and returns 0, 1 (error or failed check)
        or 2 (usage error, raised by argparse).
    """

    def __init__(self):
        self.dependency_manager = DependencyManager()
        self.io_manager = PolytopeIOManager(self.dependency_manager)
        self.argument_parser = ArgumentParser()
        self.command_factory = CommandFactory()

    def route_and_execute(self, args: List[str]) -> int:
        """Route command and execute with lazy loading.

        Usage errors are left to argparse, which exits with status 2.

        Parameters:
        -----------
        args : List[str]
            Command line arguments

        Returns:
        --------
        int
            Exit code (0 for success, 1 for failed commands and errors)
        """
        try:
            command_name = self.argument_parser.parse_command_quickly(args)

            if not command_name:
                parser = self.argument_parser.create_full_parser()
                parser.print_help()
                return 0

            parser = self.argument_parser.create_full_parser()
            parsed_args = parser.parse_args(args)
            configure_logging(parsed_args.verbose)

            command = self.command_factory.create_command(
                command_name, self.dependency_manager, self.io_manager
            )

            with settings_scope(parsed_args):
                result = command.execute(parsed_args)
            if result.success:
                return 0
            if result.message:
                print(f"Error: {result.message}", file=sys.stderr)
            return result.exit_code or 1

        except KeyboardInterrupt:
            print("\nOperation cancelled by user.", file=sys.stderr)
            return 1
        except CoxeterKitError as e:
            print(f"Error: {type(e).__name__}: {e}", file=sys.stderr)
            return 1
        except Exception as e:  # pylint: disable=broad-except
            print(f"Unexpected error: {e}", file=sys.stderr)
            return 1
