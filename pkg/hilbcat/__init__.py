"""Exact Gram-matrix models of pre-Hilbert categories."""
from .dagcat import cokernel, compose, dagger, factor, kernel, tensor, tensor_mor
from .hilbmod import HMorphism, HObject, make_morphism, make_object
from .scalars import ring_from_name

__version__ = "0.1.0"

__all__ = [
    "HMorphism",
    "HObject",
    "cokernel",
    "compose",
    "dagger",
    "factor",
    "kernel",
    "make_morphism",
    "make_object",
    "ring_from_name",
    "tensor",
    "tensor_mor",
]
