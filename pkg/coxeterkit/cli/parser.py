"""
Command-line argument parsing with lazy loading capabilities.
"""

import argparse
from typing import List, Optional

from ..writers.registry import get_output_formats

ZOO_OBJECTS = ("421", "e8-roots", "holes", "24-cell", "600-cell", "snub-24-cell",
               "demicube", "permutohedron", "omnitruncated-cube", "slice")


class ArgumentParser:
    """
    Argument parser with lazy loading support.

    This class provides methods to quickly parse command names and create
    a full argument parser with all subcommands. Only the writer registry is
    imported here, so ``coxeterkit --help`` does not load any construction.

    Attributes:
    ----------
    base_parser : argparse.ArgumentParser
        The base argument parser used for quick command detection and full parsing.

    Methods:
    -------
    parse_command_quickly(args: List[str]) -> Optional[str]:
        Quickly parse the command name from the provided arguments.
    create_full_parser() -> argparse.ArgumentParser:
        Create the full argument parser with all subcommands and options.
    """

    def __init__(self):
        self.base_parser = None

    def parse_command_quickly(self, args: List[str]) -> Optional[str]:
        """
        Quick parse to extract just the command name without full parsing.

        This allows us to determine what dependencies to load before doing
        the full argument parsing.
        """
        if not args:
            return None

        parser = argparse.ArgumentParser(add_help=False)
        parser.add_argument('command', nargs='?', help='Command to execute')

        try:
            parsed_args, _ = parser.parse_known_args(args)
            return parsed_args.command
        except SystemExit:
            return None

    def create_full_parser(self) -> argparse.ArgumentParser:
        """Create the full argument parser with all subcommands."""
        parser = argparse.ArgumentParser(
            prog='coxeterkit',
            description='coxeterkit - Coxeter diagrams, reflection groups and uniform polytopes',
            formatter_class=argparse.RawTextHelpFormatter
        )

        subparsers = parser.add_subparsers(dest='command', help='Available commands')
        common = self._common_parent()
        diagram = self._diagram_parent()
        output = self._output_parent()

        self._add_classify_parser(subparsers, [common, diagram])
        self._add_realize_parser(subparsers, [common, diagram])
        self._add_faces_parser(subparsers, [common, diagram])
        self._add_build_parser(subparsers, [common, diagram, output])
        self._add_tessellate_parser(subparsers, [common, diagram, output])
        self._add_dual_parser(subparsers, [common, diagram, output])
        self._add_zoo_parser(subparsers, [common, output])
        self._add_verify_parser(subparsers, [common])
        self._add_catalog_parser(subparsers, [common])

        return parser

    @staticmethod
    def _common_parent() -> argparse.ArgumentParser:
        """Options every command accepts: verbosity and settings overrides."""
        parent = argparse.ArgumentParser(add_help=False)
        parent.add_argument('-v', '--verbose', action='count', default=0,
                    help='Log progress (repeat for debug output)')
        parent.add_argument('--tol', type=float, default=None,
                    help='Relative tolerance for algebraic identities (default 1e-9)')
        parent.add_argument('--cap', type=int, default=None,
                    help='Largest orbit any closure may produce (default 1000000)')
        parent.add_argument('--config', type=str, default=None,
                    help='Settings file with key = value lines')
        return parent

    @staticmethod
    def _diagram_parent() -> argparse.ArgumentParser:
        """Diagram input options."""
        parent = argparse.ArgumentParser(add_help=False)
        source = parent.add_mutually_exclusive_group()
        source.add_argument('--schlafli', '-s', type=str,
                    help='Schläfli symbol, e.g. 4,3,5')
        source.add_argument('--diagram', '-d', type=str,
                    help='Path of a diagram file')
        parent.add_argument('--ring', '-r', type=str, default=None,
                    help='Ringed nodes, e.g. 1,2, or one of regular, rectified, truncated,\n'
                         'cantellated, omnitruncated')
        return parent

    @staticmethod
    def _output_parent() -> argparse.ArgumentParser:
        """Export options."""
        parent = argparse.ArgumentParser(add_help=False)
        parent.add_argument('--out', '-o', type=str, default=None,
                    help='Path of output file')
        parent.add_argument('--format', '-F', type=str, default=None,
                    choices=list(get_output_formats()),
                    help='Output format; detected from the extension when omitted')
        parent.add_argument('--per-cell', action='store_true',
                    help='Write one OFF file per tessellation cell')
        return parent

    def _add_classify_parser(self, subparsers, parents):
        """Add classify command parser."""
        classify_parser = subparsers.add_parser('classify', parents=parents,
                    help='Classify a Coxeter diagram as a simplex diagram.')
        classify_parser.add_argument('--components', action='store_true',
                    help='Classify every connected component separately')

    def _add_realize_parser(self, subparsers, parents):
        """Add realize command parser."""
        realize_parser = subparsers.add_parser('realize', parents=parents,
                    help='Check a Gram matrix and realize it by mirror normals.')
        realize_parser.add_argument('--gram', '-g', type=str, default=None,
                    help='Path of a Gram matrix (text rows or JSON array)')
        realize_parser.add_argument('--dim', '-n', type=int, default=None,
                    help='Dimension of the hyperbolic space (default: matrix size - 1)')
        realize_parser.add_argument('--out', '-o', type=str, default=None,
                    help='Write the mirror normals to this text file')

    def _add_faces_parser(self, subparsers, parents):
        """Add faces command parser."""
        faces_parser = subparsers.add_parser('faces', parents=parents,
                    help='Enumerate faces and ideal vertices from a Gram matrix.')
        faces_parser.add_argument('--gram', '-g', type=str, default=None,
                    help='Path of a Gram matrix (text rows or JSON array)')
        faces_parser.add_argument('--dim', '-n', type=int, default=None,
                    help='Dimension of the polyhedron (default: matrix size - 1)')
        faces_parser.add_argument('--out', '-o', type=str, default=None,
                    help='Write the face lattice as JSON to this file')

    def _add_build_parser(self, subparsers, parents):
        """Add build command parser."""
        subparsers.add_parser('build', parents=parents,
                    help='Build the Wythoff polytope of a ringed diagram.')

    def _add_tessellate_parser(self, subparsers, parents):
        """Add tessellate command parser."""
        tessellate_parser = subparsers.add_parser('tessellate', parents=parents,
                    help='Build a patch of a Euclidean or hyperbolic tessellation.')
        tessellate_parser.add_argument('--depth', '-k', type=int, default=1,
                    help='Number of facet crossings from the base cell (default: 1)')

    def _add_dual_parser(self, subparsers, parents):
        """Add dual command parser."""
        dual_parser = subparsers.add_parser('dual', parents=parents,
                    help='Build the polar dual of a Wythoff polytope.')
        dual_parser.add_argument('--hyperbolic', action='store_true',
                    help='Realize the dual in the Klein model of hyperbolic space')

    def _add_zoo_parser(self, subparsers, parents):
        """Add zoo command parser."""
        zoo_parser = subparsers.add_parser('zoo', parents=parents,
                    help='Build one of the special constructions.')
        zoo_parser.add_argument('name', type=str, choices=ZOO_OBJECTS,
                    help='Construction to build')
        zoo_parser.add_argument('--n', type=int, default=4,
                    help='Dimension for demicube, permutohedron, omnitruncated-cube\n'
                         'and slice (default: 4)')
        zoo_parser.add_argument('--depth', '-k', type=int, default=1,
                    help='Depth of the slice tessellation (default: 1)')

    def _add_verify_parser(self, subparsers, parents):
        """Add verify command parser."""
        verify_parser = subparsers.add_parser('verify', parents=parents,
                    help='Run an acceptance suite.')
        verify_parser.add_argument('--suite', type=str, default='fast',
                    choices=['fast', 'large', 'acceptance'],
                    help='Suite to run (default: fast)')
        verify_parser.add_argument('--output', type=str, default='table',
                    choices=['table', 'json', 'csv'],
                    help='Report format (default: table)')

    def _add_catalog_parser(self, subparsers, parents):
        """Add catalog command parser."""
        catalog_parser = subparsers.add_parser('catalog', parents=parents,
                    help='List the bundled simplex diagram families.')
        catalog_parser.add_argument('--output', type=str, default='table',
                    choices=['table', 'json', 'csv'],
                    help='Output format (default: table)')
        catalog_parser.add_argument('--filter', '-f', type=str,
                    help='Filter families by name, geometry or label (case-insensitive)')
        catalog_parser.add_argument('--sort', type=str,
                    choices=['geometry', 'family', 'label'], default='geometry',
                    help='Sort by field (default: geometry)')
        catalog_parser.add_argument('--reverse', action='store_true',
                    help='Reverse sort order')
        catalog_parser.add_argument('--no-header', action='store_true',
                    help='Omit header row (useful for scripts)')
