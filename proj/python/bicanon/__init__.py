"""Canonical binary matrices under row and column permutations."""

from ._core import (
    BinaryMatrix,
    DomainError,
    ResourceError,
    brute_force_canonical,
    canonical_key,
    canonicalize,
    canonicity_report,
    count_canonical,
    count_semi_canonical,
    enumerate_canonical,
    enumerate_semi_canonical,
    equivalent,
    is_canonical,
    is_semi_canonical,
    isomorphic,
)

__all__ = [
    "BinaryMatrix",
    "DomainError",
    "ResourceError",
    "brute_force_canonical",
    "canonical_key",
    "canonicalize",
    "canonicity_report",
    "count_canonical",
    "count_semi_canonical",
    "enumerate_canonical",
    "enumerate_semi_canonical",
    "equivalent",
    "is_canonical",
    "is_semi_canonical",
    "isomorphic",
]
