"""
Test package for MorseLab

This package contains the unittest suites for every MorseLab package.
"""
