"""
MorseLab

A computational laboratory for the Morse function on basepointed graphs:
heights, forest collapses and vertex blow-ups, down-links and up-links,
partition complexes, exact integral homology and a lemma verification harness.

@brief Main package for MorseLab
@author MorseLab Team
@version 1.0.0
@since 1.0.0
"""

__version__ = "1.0.0"
__author__ = "MorseLab Team"
__description__ = "Morse theory on basepointed graphs with exact homology checks"

# Import main components for easy access
from .cli import CLI
from .config import ConfigManager, RunConfig

# Import exception classes
from .exceptions import (
    ConfigurationError,
    GraphError,
    HarnessError,
    MorseLabError,
    PartitionError,
    TopologyError,
)
from .graph import BasepointedGraph, height
from .harness import VerificationRunner, verify_lemma
from .logging import LoggerManager
from .topology import SimplicialComplex, reduced_homology

__all__ = [
    "ConfigManager",
    "RunConfig",
    "LoggerManager",
    "CLI",
    "BasepointedGraph",
    "height",
    "SimplicialComplex",
    "reduced_homology",
    "VerificationRunner",
    "verify_lemma",
    "MorseLabError",
    "ConfigurationError",
    "GraphError",
    "PartitionError",
    "TopologyError",
    "HarnessError",
]
