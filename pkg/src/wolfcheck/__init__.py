"""Exact Lie-theoretic verification of totally complex submanifolds of Wolf spaces."""

__version__ = "0.1.0"
