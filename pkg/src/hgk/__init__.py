"""Exact algorithms and a verification harness for H-graphs."""

__version__ = "0.1.0"
