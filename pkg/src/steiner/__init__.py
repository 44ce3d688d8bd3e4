"""Exact tools for Steiner t-designs and their automorphism groups."""

__version__ = "0.1.0"
