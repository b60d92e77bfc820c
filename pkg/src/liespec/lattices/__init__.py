from .congruence import congruent
from .enumeration import (
    enumerate_gram,
    force_pure,
    kernel_name,
    short_vectors,
    systole,
)
from .lattice import HERMITE_POWER, Lattice, dual, hermite_bound_ok
from .reduction import lll_gram, reduce_basis, reduce_with_transform
from .spectra import torus_lambda1, torus_spectrum

__all__ = [
    "HERMITE_POWER",
    "Lattice",
    "congruent",
    "dual",
    "enumerate_gram",
    "force_pure",
    "hermite_bound_ok",
    "kernel_name",
    "lll_gram",
    "reduce_basis",
    "reduce_with_transform",
    "short_vectors",
    "systole",
    "torus_lambda1",
    "torus_spectrum",
]
