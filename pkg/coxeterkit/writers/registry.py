"""
Writer Registry - Single Source of Truth for All Export Formats

This module contains all metadata about available writers in one place.
When adding a new writer, only this file and the writer implementation need to be updated.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional


@dataclass
class WriterMetadata:
    """Metadata for an export format.

    Attributes:
    -----------
    class_name: str
        The name of the writer class (e.g., "OffWriter").
    module_name: str
        The module where the writer class is defined (e.g., ".off_writer").
    format_name: str
        The human-readable name of the format (e.g., "Object File Format").
    format_key: str
        A unique key for the format used on the command line (e.g., "off").
    file_extension: str
        The file extension associated with the format (e.g., ".off").
    """
    class_name: str
    module_name: str
    format_name: str
    format_key: str
    file_extension: str


WRITER_REGISTRY: List[WriterMetadata] = [
    WriterMetadata(
        class_name="OffWriter",
        module_name=".off_writer",
        format_name="Object File Format",
        format_key="off",
        file_extension=".off"
    ),
    WriterMetadata(
        class_name="ObjWriter",
        module_name=".obj_writer",
        format_name="Wavefront OBJ",
        format_key="obj",
        file_extension=".obj"
    ),
    WriterMetadata(
        class_name="SvgWriter",
        module_name=".svg_writer",
        format_name="SVG drawing (2D, Klein disc)",
        format_key="svg",
        file_extension=".svg"
    ),
    WriterMetadata(
        class_name="JsonWriter",
        module_name=".json_writer",
        format_name="JSON summary",
        format_key="json",
        file_extension=".json"
    ),
    WriterMetadata(
        class_name="TxtWriter",
        module_name=".txt_writer",
        format_name="Coordinate list",
        format_key="txt",
        file_extension=".txt"
    ),
]


def get_writer_by_format_key(format_key: str) -> Optional[WriterMetadata]:
    """Get writer metadata by format key."""
    for writer in WRITER_REGISTRY:
        if writer.format_key == format_key:
            return writer
    return None


def get_extension_map() -> Dict[str, str]:
    """Map file extensions to format keys."""
    return {w.file_extension: w.format_key for w in WRITER_REGISTRY}


def get_output_formats() -> Dict[str, str]:
    """Map format keys to human-readable format names."""
    return {w.format_key: w.format_name for w in WRITER_REGISTRY}


def get_writer_modules() -> Dict[str, str]:
    """Map writer class names to their modules, for lazy loading."""
    return {w.class_name: w.module_name for w in WRITER_REGISTRY}
