"""
Export format detection utilities.

This module resolves output formats from explicit hints or file extensions
without importing the writers.
"""

from pathlib import Path
from typing import Optional

from .exceptions import FormatDetectionError
from ..writers.registry import get_extension_map, get_output_formats

EXTENSION_MAP = get_extension_map()
OUTPUT_FORMATS = list(get_output_formats().keys())


class FormatDetector:
    """Lightweight export format detection."""

    @staticmethod
    def validate_output_format(output_file: str, format_hint: Optional[str] = None) -> str:
        """
        Validate and determine output format.

        Parameters:
        -----------
        output_file : str
            Path to the output file
        format_hint : str, optional
            Explicit format hint

        Returns:
        --------
        str
            The validated output format key

        Raises:
        -------
        FormatDetectionError
            If the hint is unknown or the extension is not recognized
        """
        if format_hint:
            if format_hint in OUTPUT_FORMATS:
                return format_hint
            raise FormatDetectionError(f"Unknown output format: {format_hint}")

        extension = Path(output_file).suffix.lower()
        if extension in EXTENSION_MAP:
            return EXTENSION_MAP[extension]
        known = ", ".join(f"{key} ({ext})" for ext, key in sorted(EXTENSION_MAP.items()))
        raise FormatDetectionError(
            f"Cannot determine export format of {output_file}: extension '{extension}' "
            f"is not one of {known}"
        )
