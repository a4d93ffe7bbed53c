from paracyclic.linalg.elimination import (
    determinant,
    invert,
    is_invertible,
    kernel,
    kernel_matrix,
    left_inverse,
    rank,
)
from paracyclic.linalg.matrix import Matrix, vector
from paracyclic.linalg.ring import CoefficientRing, RingKind, Scalar
from paracyclic.linalg.smith import SmithDecomposition, smith_normal_form

__all__ = [
    "CoefficientRing",
    "Matrix",
    "RingKind",
    "Scalar",
    "SmithDecomposition",
    "determinant",
    "invert",
    "is_invertible",
    "kernel",
    "kernel_matrix",
    "left_inverse",
    "rank",
    "smith_normal_form",
    "vector",
]
