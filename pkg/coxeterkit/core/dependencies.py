"""
Lazy dependency management for coxeterkit.

The CLI imports pandas, matplotlib and the construction sub-packages only
when a command needs them, which keeps ``coxeterkit --help`` fast.
"""

import importlib
from typing import Any, Dict, Optional

from .exceptions import DependencyError


class DependencyManager:
    """
    Manages lazy loading of heavy dependencies.

    Attributes:
    ----------
    _loaded_modules : Dict[str, Any]
        Cache for already loaded modules.
    _dependency_groups : Dict[str, Dict[str, Any]]
        Cache for groups of related modules.

    Methods:
    -------
    get_table_dependencies() -> Dict[str, Any]:
        pandas, for the verify and catalog tables.
    get_export_dependencies() -> Dict[str, Any]:
        The writers package (matplotlib is loaded by the SVG writer itself).
    get_construction_dependencies() -> Dict[str, Any]:
        The wythoff, dual and zoo sub-packages.
    has_dependency_group(group_name: str) -> bool:
        Checks if a group has been loaded.
    clear_cache():
        Clears the caches.
    """

    def __init__(self):
        self._loaded_modules: Dict[str, Any] = {}
        self._dependency_groups: Dict[str, Dict[str, Any]] = {}

    def _safe_import(self, module_name: str, feature_name: Optional[str] = None) -> Any:
        """Import a module, turning ImportError into DependencyError."""
        if module_name in self._loaded_modules:
            return self._loaded_modules[module_name]
        try:
            module = importlib.import_module(module_name)
        except ImportError as e:
            feature = feature_name or module_name
            raise DependencyError(
                f"Optional dependency '{module_name}' not found. "
                f"Install it to use {feature} functionality: "
                f"pip install {module_name.split('.')[0]}"
            ) from e
        self._loaded_modules[module_name] = module
        return module

    def _create_lazy_loader(self, module_name: str, feature_name: str):
        """Create a proxy that imports the module on first attribute access."""

        class LazyModule:
            """Lazy loader for a module that loads it only when accessed."""

            def __init__(self, module_name, feature_name, dep_manager):
                self.module_name = module_name
                self.feature_name = feature_name
                self.dep_manager = dep_manager
                self._module = None

            def _ensure_loaded(self):
                if self._module is None:
                    # pylint: disable=W0212
                    self._module = self.dep_manager. \
                        _safe_import(self.module_name, self.feature_name)
                return self._module

            def __getattr__(self, name):
                return getattr(self._ensure_loaded(), name)

        return LazyModule(module_name, feature_name, self)

    def get_table_dependencies(self) -> Dict[str, Any]:
        """Load tabular report dependencies (pandas)."""
        if 'tables' not in self._dependency_groups:
            self._dependency_groups['tables'] = {
                'pd': self._create_lazy_loader('pandas', 'tabular reports'),
            }
        return self._dependency_groups['tables']

    def get_export_dependencies(self) -> Dict[str, Any]:
        """Load export dependencies (writers)."""
        if 'export' not in self._dependency_groups:
            self._dependency_groups['export'] = {
                'writers': self._create_lazy_loader('coxeterkit.writers', 'export'),
            }
        return self._dependency_groups['export']

    def get_construction_dependencies(self) -> Dict[str, Any]:
        """Load the construction sub-packages (wythoff, dual, zoo)."""
        if 'construction' not in self._dependency_groups:
            self._dependency_groups['construction'] = {
                'wythoff': self._create_lazy_loader('coxeterkit.wythoff', 'construction'),
                'dual': self._create_lazy_loader('coxeterkit.dual', 'duality'),
                'zoo': self._create_lazy_loader('coxeterkit.zoo', 'catalog constructions'),
            }
        return self._dependency_groups['construction']

    def has_dependency_group(self, group_name: str) -> bool:
        """Check if a dependency group has been loaded."""
        return group_name in self._dependency_groups

    def clear_cache(self):
        """Clear the dependency cache (useful for testing)."""
        self._loaded_modules.clear()
        self._dependency_groups.clear()
