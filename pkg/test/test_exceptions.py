"""
Tests for Custom Exceptions

Test suite for the MorseLab exception hierarchy and exception mapping.
"""

import json
import sys
import unittest
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from morselab.exceptions import (  # noqa: E402
    EXCEPTION_MAP,
    BadRangeError,
    BlowUpError,
    BoundExceededError,
    CLIError,
    CLIUsageError,
    ComplexError,
    ComplexFormatError,
    ConfigFileNotFoundError,
    ConfigurationError,
    ConfigValidationError,
    EmptyForestError,
    GraphError,
    GraphFormatError,
    HarnessError,
    HomologyError,
    IncompatiblePartitionsError,
    InvalidGraphError,
    InvalidPartitionError,
    MorseLabError,
    NotAForestError,
    NotASizeMVertexError,
    PartitionError,
    PosetError,
    SamePartitionError,
    SimplexAbsentError,
    SpecFormatError,
    TopologyError,
    TrivialBlowUpError,
    UnknownLemmaError,
    VerificationError,
    WrongArityError,
    map_exception,
)


class TestMorseLabError(unittest.TestCase):
    """Test suite for base MorseLabError"""

    def test_exception_with_message_only(self):
        """Test exception with message only"""
        exc = MorseLabError("Test error")
        self.assertEqual(exc.message, "Test error")
        self.assertEqual(exc.details, {})
        self.assertEqual(str(exc), "Test error")

    def test_exception_with_message_and_details(self):
        """Test exception with message and details"""
        exc = MorseLabError("Bad graph", {"vertex": 2, "degree": 2})
        self.assertEqual(exc.details, {"vertex": 2, "degree": 2})
        self.assertEqual(str(exc), "Bad graph (vertex=2, degree=2)")

    def test_exception_can_be_raised_and_caught(self):
        with self.assertRaises(MorseLabError) as context:
            raise InvalidGraphError("vertex 1 has degree 2")
        self.assertEqual(str(context.exception), "vertex 1 has degree 2")


class TestHierarchy(unittest.TestCase):
    """Test suite for the exception hierarchy"""

    def test_parents(self):
        """Every error sits under its domain family"""
        families = {
            ConfigurationError: (ConfigFileNotFoundError, ConfigValidationError),
            GraphError: (
                InvalidGraphError,
                GraphFormatError,
                NotAForestError,
                EmptyForestError,
                BlowUpError,
            ),
            BlowUpError: (IncompatiblePartitionsError, WrongArityError, TrivialBlowUpError),
            PartitionError: (
                InvalidPartitionError,
                SamePartitionError,
                BadRangeError,
                NotASizeMVertexError,
                SpecFormatError,
            ),
            TopologyError: (ComplexError, SimplexAbsentError, PosetError, HomologyError),
            ComplexError: (ComplexFormatError,),
            HarnessError: (UnknownLemmaError, BoundExceededError, VerificationError),
            CLIError: (CLIUsageError,),
        }
        for parent, children in families.items():
            self.assertTrue(issubclass(parent, MorseLabError))
            for child in children:
                with self.subTest(child=child.__name__):
                    self.assertTrue(issubclass(child, parent))

    def test_families_are_disjoint(self):
        self.assertFalse(issubclass(PartitionError, GraphError))
        self.assertFalse(issubclass(HarnessError, TopologyError))


class TestExceptionMapping(unittest.TestCase):
    """Test suite for map_exception"""

    def test_map_file_not_found(self):
        mapped = map_exception(FileNotFoundError("missing.yaml"))
        self.assertIsInstance(mapped, ConfigFileNotFoundError)
        self.assertEqual(mapped.details["original_error"], "missing.yaml")

    def test_map_json_decode_error(self):
        try:
            json.loads("{not json")
        except json.JSONDecodeError as e:
            mapped = map_exception(e, "graph file is not JSON")
        self.assertIsInstance(mapped, GraphFormatError)
        self.assertEqual(mapped.message, "graph file is not JSON")

    def test_map_value_error(self):
        self.assertIsInstance(map_exception(ValueError("x")), ConfigValidationError)

    def test_map_unknown_type(self):
        mapped = map_exception(RuntimeError("boom"))
        self.assertIs(type(mapped), MorseLabError)
        self.assertEqual(str(mapped), "boom (original_error=boom)")

    def test_map_passes_through_own_errors(self):
        original = BoundExceededError("too many blow-ups")
        self.assertIs(map_exception(original), original)

    def test_exception_map_keys(self):
        self.assertEqual(EXCEPTION_MAP["KeyError"], ConfigurationError)


if __name__ == "__main__":
    unittest.main()
