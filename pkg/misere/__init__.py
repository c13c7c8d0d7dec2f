"""Misère quotients of impartial games."""

__version__ = "0.1.0"
