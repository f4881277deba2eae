"""Kernels, singular integrals and function-space seminorms on Carnot groups."""

__version__ = "0.1.0"

from .groups import (
    GroupElement,
    GroupSpec,
    dilate,
    euclidean,
    group_inverse,
    group_product,
    heisenberg,
    homogeneous_norm,
    horizontal_vector_coeffs,
    sphere_sample,
)

__all__ = [
    "GroupSpec",
    "GroupElement",
    "euclidean",
    "heisenberg",
    "group_product",
    "group_inverse",
    "dilate",
    "homogeneous_norm",
    "horizontal_vector_coeffs",
    "sphere_sample",
    "__version__",
]
