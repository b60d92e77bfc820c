"""Flat torus spectra.

The Laplace eigenvalues of the torus R^m / L are 4*pi^2*|v|^2 over the
dual lattice of L, so in the "four-pi-squared" unit the truncated spectrum
is a finite exact-rational object: entry q means eigenvalue 4*pi^2*q.  The
cutoff argument is expressed in the same unit.
"""

from fractions import Fraction

from ..errors import DomainError
from ..spectrum import SpectrumTable, table_from_pairs
from .enumeration import enumerate_gram, systole
from .lattice import Lattice, dual


def torus_spectrum(lat: Lattice, cutoff) -> SpectrumTable:
    """Truncated spectrum of the flat torus with period lattice ``lat``."""
    cutoff = Fraction(cutoff)
    if cutoff < 0:
        raise DomainError("cutoff must be >= 0")
    dual_gram = dual(lat).gram
    pairs = [(Fraction(0), 1)]
    for _, value in enumerate_gram(dual_gram, cutoff):
        pairs.append((value, 2))  # each canonical vector stands for +-v
    return table_from_pairs(
        pairs, unit="four-pi-squared", cutoff=cutoff, complete=True
    )


def torus_lambda1(lat: Lattice) -> Fraction:
    """First nonzero eigenvalue in the four-pi-squared unit.

    Equals the squared systole of the dual lattice.
    """
    return systole(dual(lat))
