"""
Command Line Interface Module

Provides the morselab command: graph heights, forest collapses and blow-ups,
link complexes, partition complexes, homology of complex files, graph
enumeration and lemma verification.

@brief CLI functionality for MorseLab
@author MorseLab Team
@version 1.0.0
@since 1.0.0
"""

from .cli import CLI, create_parser, main

__all__ = ["CLI", "create_parser", "main"]
