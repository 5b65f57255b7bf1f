"""Exact intersection-theory and certificate engine for lines on cubic fourfolds."""

__version__ = "0.1.0"
