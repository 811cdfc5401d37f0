"""
Export management.

This module provides centralized writing of polytopes and tessellation
patches with lazy loading of the writer classes.
"""

import logging
import os
from typing import Any, List, Optional

from .dependencies import DependencyManager
from .exceptions import CoxeterKitError, WriterError
from .format_detection import FormatDetector

logger = logging.getLogger(__name__)


class PolytopeIOManager:
    """Manages export operations.

    The writer for a file is chosen from an explicit format hint or from the
    file extension, and the writers package is imported only when something
    is written.

    Attributes:
    ----------
    deps : DependencyManager
        Manages the loading of the writers package.
    format_detector : FormatDetector
        Resolves the export format.

    Methods:
    -------
    write_data(data: Any, output_file: str, format_hint: Optional[str] = None,
               **kwargs) -> List[str]:
        Writes a polytope or tessellation patch and returns the written paths.
    """

    def __init__(self, dependency_manager: DependencyManager):
        """Initializes the PolytopeIOManager with the given dependency manager."""
        self.deps = dependency_manager
        self.format_detector = FormatDetector()

    def write_data(self, data: Any, output_file: str, format_hint: Optional[str] = None,
                   **kwargs) -> List[str]:
        """
        Write data to output file with lazy loading of the appropriate writer.

        Parameters:
        -----------
        data : Polytope or TessellationPatch
            The construction to write
        output_file : str
            Path to the output file
        format_hint : str, optional
            Format key overriding the extension
        **kwargs
            Passed on to the writer (e.g. ``per_cell`` for OFF)

        Raises:
        -------
        WriterError
            If writing fails
        """
        try:
            output_format = self.format_detector.validate_output_format(output_file, format_hint)
            self._ensure_output_directory(output_file)
            writers = self.deps.get_export_dependencies()['writers']
            writer = self._create_writer(output_format, data, writers)
            written = writer.write(output_file, **kwargs)
        except WriterError:
            raise
        except (CoxeterKitError, OSError, TypeError) as e:
            raise WriterError(f"Failed to write data to {output_file}: {e}") from e
        logger.info("Wrote %s", ", ".join(written))
        return written

    def _create_writer(self, output_format: str, data: Any, writers_module: Any) -> Any:
        """Create the writer for a format key using the registry."""
        # pylint: disable=C0415
        from ..writers.registry import get_writer_by_format_key

        metadata = get_writer_by_format_key(output_format)
        if metadata is None:
            raise WriterError(f"Unknown output format: {output_format}")
        return getattr(writers_module, metadata.class_name)(data)

    def _ensure_output_directory(self, output_file: str) -> None:
        """Create output directory if it doesn't exist."""
        output_dir = os.path.dirname(output_file)
        if output_dir:
            os.makedirs(output_dir, exist_ok=True)
