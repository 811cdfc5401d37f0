"""
Unit tests to verify completeness of the writers module and its registry.

This test ensures that:
1. Every class in __all__ is importable through the lazy loader
2. Every *_writer.py file is registered and exported
3. All writer classes inherit from AbstractWriter and end with 'Writer'
4. Registry extensions match the classes and are unique
"""

import glob
import importlib
import inspect
import unittest
from pathlib import Path

from coxeterkit import writers
from coxeterkit.writers.base import AbstractWriter
from coxeterkit.writers.registry import WRITER_REGISTRY, get_writer_by_format_key


class TestWritersCompleteness(unittest.TestCase):
    """Test suite to verify the completeness of the writers module."""

    def setUp(self):
        """Set up test fixtures."""
        self.writers_dir = Path(writers.__file__).parent
        self.all_list = writers.__all__
        self.writer_files = sorted(glob.glob(str(self.writers_dir / "*_writer.py")))

    def test_all_items_are_importable(self):
        """Test that all items in __all__ resolve to classes."""
        for class_name in self.all_list:
            with self.subTest(class_name=class_name):
                self.assertTrue(inspect.isclass(getattr(writers, class_name)))

    def test_unknown_attribute(self):
        """Test that the lazy loader refuses unknown names."""
        with self.assertRaises(AttributeError):
            getattr(writers, 'PlyWriter')

    def test_every_writer_file_is_registered(self):
        """Test that each *_writer.py module appears in the registry and in __all__."""
        registered = {entry.module_name for entry in WRITER_REGISTRY}
        for file_path in self.writer_files:
            stem = Path(file_path).stem
            with self.subTest(module=stem):
                self.assertIn(f".{stem}", registered)
                module = importlib.import_module(f"coxeterkit.writers.{stem}")
                defined = [name for name, attr in vars(module).items()
                           if inspect.isclass(attr) and attr.__module__ == module.__name__]
                for name in defined:
                    self.assertTrue(name.endswith('Writer'), f"{name} should end with 'Writer'")
                    self.assertTrue(issubclass(getattr(module, name), AbstractWriter))
                    self.assertIn(name, self.all_list)

    def test_registry_matches_classes(self):
        """Test that each registry entry names a class with the registered extension."""
        for entry in WRITER_REGISTRY:
            with self.subTest(format_key=entry.format_key):
                writer_class = getattr(writers, entry.class_name)
                self.assertEqual(writer_class.__module__, f"coxeterkit.writers{entry.module_name}")
                self.assertEqual(writer_class.file_extension(), entry.file_extension)
                self.assertIs(get_writer_by_format_key(entry.format_key), entry)

    def test_file_extensions_are_unique(self):
        """Test that file extensions and format keys are unique."""
        extensions = [entry.file_extension for entry in WRITER_REGISTRY]
        keys = [entry.format_key for entry in WRITER_REGISTRY]
        self.assertEqual(len(extensions), len(set(extensions)))
        self.assertEqual(len(keys), len(set(keys)))

    def test_all_list_sorted_alphabetically(self):
        """Test that __all__ list is sorted alphabetically and has no duplicates."""
        self.assertEqual(self.all_list, sorted(self.all_list, key=str.lower))
        self.assertEqual(len(self.all_list), len(set(self.all_list)))

    def test_abstract_writer_rejects_other_data(self):
        """Test that writers only accept polytopes and tessellation patches."""
        with self.assertRaises(TypeError):
            writers.OffWriter({"vertices": []})


if __name__ == '__main__':
    unittest.main()
