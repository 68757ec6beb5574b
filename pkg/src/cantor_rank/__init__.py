"""Cantor-Bendixson analysis of closed families in Cantor space."""

__version__ = "0.1.0"
