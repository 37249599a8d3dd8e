"""
Custom Exceptions for MorseLab

Provides a hierarchy of custom exceptions for better error handling and debugging.
All exceptions inherit from a base MorseLabError class.
"""


class MorseLabError(Exception):
    """
    Base exception class for all MorseLab errors.

    @brief Base exception for MorseLab.
    """

    def __init__(self, message: str, details: dict | None = None):
        """
        Initialize the exception.

        @brief Initialize exception with message and optional details.
        @param message Error message
        @param details Optional dictionary with additional error context
        """
        self.message = message
        self.details = details or {}
        super().__init__(self.message)

    def __str__(self) -> str:
        """String representation of the exception."""
        if self.details:
            details_str = ", ".join(f"{k}={v}" for k, v in self.details.items())
            return f"{self.message} ({details_str})"
        return self.message


# Configuration Exceptions


class ConfigurationError(MorseLabError):
    """
    Exception raised for configuration-related errors.

    @brief Configuration errors (invalid config, missing keys, etc.)
    """

    pass


class ConfigFileNotFoundError(ConfigurationError):
    """
    Exception raised when configuration file is not found.

    @brief Configuration file not found error.
    """

    pass


class ConfigValidationError(ConfigurationError):
    """
    Exception raised when configuration validation fails.

    @brief Bounds out of range or mode outside its enumerated set.
    """

    pass


# Graph Exceptions


class GraphError(MorseLabError):
    """
    Base exception for basepointed graph errors.

    @brief Base graph error.
    """

    pass


class InvalidGraphError(GraphError):
    """
    Exception raised when a graph violates a construction invariant.

    @brief Disconnected graph, low-degree vertex, bad basepoint or wrong rank.
    """

    pass


class GraphFormatError(GraphError):
    """
    Exception raised when a graph file cannot be parsed.

    @brief Malformed graph JSON.
    """

    pass


class NotAForestError(GraphError):
    """
    Exception raised when an edge set contains a cycle or a loop.

    @brief Edge set is not a forest.
    """

    pass


class EmptyForestError(GraphError):
    """
    Exception raised when an operation needs a nonempty forest.

    @brief Empty forest where a nonempty one is required.
    """

    pass


class BlowUpError(GraphError):
    """
    Base exception for vertex blow-up errors.

    @brief Base blow-up error.
    """

    pass


class IncompatiblePartitionsError(BlowUpError):
    """
    Exception raised when partitions at one vertex are not pairwise compatible.

    @brief Incompatible partitions in a blow-up.
    """

    pass


class WrongArityError(BlowUpError):
    """
    Exception raised when a partition's ground set differs from the vertex degree.

    @brief Partition ground set does not match degree.
    """

    pass


class TrivialBlowUpError(BlowUpError):
    """
    Exception raised when a blow-up has no nontrivial component.

    @brief Blow-up with every component trivial.
    """

    pass


# Partition Exceptions


class PartitionError(MorseLabError):
    """
    Base exception for two-block partition errors.

    @brief Base partition error.
    """

    pass


class InvalidPartitionError(PartitionError):
    """
    Exception raised when a partition has a block smaller than two.

    @brief Invalid two-block partition.
    """

    pass


class SamePartitionError(PartitionError):
    """
    Exception raised when compatibility is asked of a partition and itself.

    @brief Compatibility is only defined for distinct partitions.
    """

    pass


class BadRangeError(PartitionError):
    """
    Exception raised when n, k or m is out of range.

    @brief Partition complex parameters out of range.
    """

    pass


class NotASizeMVertexError(PartitionError):
    """
    Exception raised when a relative-link vertex is not a new size-m vertex.

    @brief Vertex is not in Sigma(n,k) minus Sigma(n,k)_{<m} with size m.
    """

    pass


class SpecFormatError(PartitionError):
    """
    Exception raised when a complex spec string cannot be parsed.

    @brief Malformed "sigma:n=..,k=..,m=.." string.
    """

    pass


# Topology Exceptions


class TopologyError(MorseLabError):
    """
    Base exception for simplicial complex and poset errors.

    @brief Base topology error.
    """

    pass


class ComplexError(TopologyError):
    """
    Exception raised for malformed simplicial complexes.

    @brief Not face-closed or vertex index out of range.
    """

    pass


class ComplexFormatError(ComplexError):
    """
    Exception raised when a simplicial JSON document cannot be read.

    @brief Unreadable file, invalid JSON or missing keys.
    """

    pass


class SimplexAbsentError(TopologyError):
    """
    Exception raised when a link or star is taken of a missing simplex.

    @brief Simplex not in complex.
    """

    pass


class PosetError(TopologyError):
    """
    Exception raised when an order relation is not a strict partial order.

    @brief Reflexive or cyclic order relation.
    """

    pass


class HomologyError(TopologyError):
    """
    Exception raised when computed homology contradicts the f-vector.

    @brief Euler characteristic inconsistency.
    """

    pass


# Harness Exceptions


class HarnessError(MorseLabError):
    """
    Base exception for verification harness errors.

    @brief Base harness error.
    """

    pass


class UnknownLemmaError(HarnessError):
    """
    Exception raised when a lemma id is not registered.

    @brief Lemma id not in registry.
    """

    pass


class BoundExceededError(HarnessError):
    """
    Exception raised when an enumeration request exceeds configured bounds.

    @brief Enumeration bound exceeded.
    """

    pass


class VerificationError(HarnessError):
    """
    Exception raised when a lemma check itself fails to execute.

    @brief Lemma check execution error.
    """

    pass


# CLI Exceptions


class CLIError(MorseLabError):
    """
    Exception raised for CLI-related errors.

    @brief CLI execution or argument parsing error.
    """

    pass


class CLIUsageError(CLIError):
    """
    Exception raised for invalid command-line usage.

    @brief Usage error, mapped to exit code 2.
    """

    pass


# Exception Mapping


EXCEPTION_MAP = {
    "FileNotFoundError": ConfigFileNotFoundError,
    "KeyError": ConfigurationError,
    "ValueError": ConfigValidationError,
    "JSONDecodeError": GraphFormatError,
}


def map_exception(original_exception: Exception, message: str | None = None) -> MorseLabError:
    """
    Map standard Python exceptions to MorseLab custom exceptions.

    @brief Convert standard exceptions to custom exceptions.
    @param original_exception Original exception instance
    @param message Optional custom message
    @return Mapped MorseLab exception

    Example:
        >>> try:
        ...     open('missing.yaml')
        ... except FileNotFoundError as e:
        ...     raise map_exception(e, "Configuration file not found")
    """
    if isinstance(original_exception, MorseLabError):
        return original_exception
    exc_type = type(original_exception).__name__
    custom_exc_class = EXCEPTION_MAP.get(exc_type, MorseLabError)

    error_message = message or str(original_exception)
    return custom_exc_class(error_message, details={"original_error": str(original_exception)})
