"""Intersection products of weighted tropical psi-classes on heavy/light
tropical Hassett spaces, computed in exact arithmetic."""

from tropsi._core import (
    WeightVector,
    degree,
    enumerate_types,
    intersect_product,
    intersect_recursive,
    k_constant,
    psi_class,
    psi_class_pushforward,
    tlm,
    verify,
)

__all__ = [
    "WeightVector",
    "degree",
    "enumerate_types",
    "intersect_product",
    "intersect_recursive",
    "k_constant",
    "psi_class",
    "psi_class_pushforward",
    "tlm",
    "verify",
]
