"""Exact toolkit for degenerations and levels of finite-dimensional algebras."""

__version__ = "0.1.0"
