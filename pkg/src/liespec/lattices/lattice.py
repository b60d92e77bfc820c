"""Full-rank rational lattices.

A lattice is presented either by a basis matrix (columns are generators)
or directly by its Gram matrix.  All downstream computations -- dual,
enumeration, spectra, reduction, congruence -- operate on the Gram matrix
in integer coordinates, so a Gram-only lattice supports everything except
recovering an explicit embedding in R^m.  This matters because classical
Gram matrices such as [[2,1],[1,2]] admit no rational basis realization.

Exact invariants:

* ``det_gram`` equals the squared covolume, always rational;
* ``volume`` (|det basis|) is only available when a basis was given;
* dual(dual(L)) has the same Gram matrix as L, and the covolumes of a
  lattice and its dual multiply to 1.
"""

from dataclasses import dataclass
from fractions import Fraction

from .. import linalg
from ..errors import DomainError
from ..rational import fmt_matrix, rat_matrix

# m-th powers of the Hermite constants gamma_m for m <= 8, which are the
# rational quantities (gamma_m itself is irrational for most m).  Values as
# tabulated in Conway & Sloane, "Sphere Packings, Lattices and Groups".
HERMITE_POWER = {
    1: Fraction(1),
    2: Fraction(4, 3),
    3: Fraction(2),
    4: Fraction(4),
    5: Fraction(8),
    6: Fraction(64, 3),
    7: Fraction(64),
    8: Fraction(256),
}


@dataclass(frozen=True)
class Lattice:
    dim: int
    gram: tuple        # m x m symmetric positive-definite, exact rationals
    basis: tuple = None  # optional m x m, columns are generators

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError("lattice dimension must be >= 1")
        if len(self.gram) != self.dim or any(len(r) != self.dim for r in self.gram):
            raise DomainError("gram matrix shape mismatch")
        if not linalg.is_symmetric(self.gram):
            raise DomainError("gram matrix must be symmetric")
        if not all(d > 0 for d in linalg.leading_minors(self.gram)):
            raise DomainError("gram matrix must be positive definite")
        if self.basis is not None:
            if linalg.det(self.basis) == 0:
                raise DomainError("basis must have nonzero determinant")
            derived = linalg.matmul(linalg.transpose(self.basis), self.basis)
            if derived != self.gram:
                raise DomainError("gram must equal basis^T basis")

    @staticmethod
    def from_basis(rows) -> "Lattice":
        basis = rat_matrix(rows)
        gram = linalg.matmul(linalg.transpose(basis), basis)
        return Lattice(dim=len(basis), gram=gram, basis=basis)

    @staticmethod
    def from_gram(rows) -> "Lattice":
        gram = rat_matrix(rows)
        return Lattice(dim=len(gram), gram=gram, basis=None)

    @property
    def det_gram(self) -> Fraction:
        return linalg.det(self.gram)

    @property
    def volume(self) -> Fraction:
        """|det basis|; requires an explicit basis."""
        if self.basis is None:
            raise DomainError("volume needs an explicit basis; use det_gram")
        return abs(linalg.det(self.basis))

    def norm(self, coords) -> Fraction:
        """Squared length of the lattice vector with the given coordinates."""
        v = tuple(Fraction(c) for c in coords)
        return linalg.form_value(self.gram, v, v)

    def to_json_dict(self) -> dict:
        obj = {"dim": self.dim, "gram": fmt_matrix(self.gram)}
        if self.basis is not None:
            obj["basis"] = fmt_matrix(self.basis)
        return obj

    @staticmethod
    def from_json_dict(obj: dict) -> "Lattice":
        if "basis" in obj:
            lat = Lattice.from_basis(obj["basis"])
        elif "gram" in obj:
            lat = Lattice.from_gram(obj["gram"])
        else:
            raise DomainError("lattice JSON needs 'basis' or 'gram'")
        if "dim" in obj and int(obj["dim"]) != lat.dim:
            raise DomainError("declared dim does not match matrix size")
        return lat


def dual(lat: Lattice) -> Lattice:
    """The dual lattice: Gram matrix is the exact inverse Gram.

    When a basis B is available the dual basis is (B^T)^{-1}.
    """
    gram = linalg.inverse(lat.gram)
    basis = None
    if lat.basis is not None:
        basis = linalg.inverse(linalg.transpose(lat.basis))
    return Lattice(dim=lat.dim, gram=gram, basis=basis)


def hermite_bound_ok(lat: Lattice, systole_sq: Fraction) -> bool:
    """Check systole^m * det(gram) <= gamma_m^m (m <= 8).

    This is the Hermite inequality with everything raised to the m-th power
    so that only rational quantities appear.
    """
    m = lat.dim
    if m not in HERMITE_POWER:
        raise DomainError("Hermite constants tabulated only for dim <= 8")
    return systole_sq**m * lat.det_gram <= HERMITE_POWER[m]
