"""
Custom exceptions for coxeterkit.
"""


class CoxeterKitError(Exception):
    """Base exception for coxeterkit."""
    pass


class FormatDetectionError(CoxeterKitError):
    """Raised when an export format cannot be detected."""
    pass


class DependencyError(CoxeterKitError):
    """Raised when required dependencies are not available."""
    pass


class ValidationError(CoxeterKitError):
    """Raised when input validation fails."""
    pass


class DiagramSyntaxError(ValidationError):
    """Raised when diagram text does not follow the DSL grammar."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class CatalogError(CoxeterKitError):
    """Raised when a family catalog file is missing or malformed."""
    pass


class GeometryError(CoxeterKitError):
    """Raised when a metric computation receives inconsistent input."""
    pass


class OrbitCapExceeded(GeometryError):
    """Raised when an orbit closure grows past the configured cap."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"orbit closure exceeded cap of {cap} points "
                         f"(partial count {count})")
        self.count = count
        self.cap = cap


class RealizationError(CoxeterKitError):
    """Raised when a Gram matrix or seed cannot be realized geometrically."""
    pass


class ClassificationError(CoxeterKitError):
    """Raised when a diagram cannot be classified consistently."""
    pass


class WriterError(CoxeterKitError):
    """Raised when exporting fails."""
    pass
