"""Bollobas-Riordan-Tutte polynomial of oriented ribbon graphs."""

from ._core import (
    RibbonGraph,
    RibbonGraphError,
    duality,
    genus_counts,
    polynomial,
    quasi_trees,
    verify,
)

__all__ = [
    "RibbonGraph",
    "RibbonGraphError",
    "duality",
    "genus_counts",
    "polynomial",
    "quasi_trees",
    "verify",
]
