"""Weights and characters of irreducible representations.

The three workhorses:

* ``weyl_dim`` -- the Weyl dimension formula as a product of exact
  rationals (the result is asserted to be an integer);
* ``weight_diagram`` -- the full character of V_lambda: dominant weights
  are enumerated inside an exact norm box and their multiplicities are
  computed by the Freudenthal recursion, then Weyl orbits fill in the rest;
* ``dominant_weights_up_to`` -- all dominant weights with Casimir at most
  a given budget, enumerable because the Casimir is strictly increasing in
  every fundamental coordinate.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from . import linalg
from .errors import DomainError
from .rootdata import (
    RootSystemData,
    casimir,
    check_weight,
    contragredient_weight,
    dominant_rep,
    ip_norm,
    is_dominant,
    weyl_orbit,
)


def _root_ip_vectors(rs: RootSystemData):
    """For each positive root beta, the vector v with (mu, beta) = v . mu."""
    vectors = []
    for rc in rs.pos_roots_rootc:
        vectors.append(
            tuple(rc[k] * rs.symmetrizer[k] for k in range(rs.rank))
        )
    return vectors


def _pairing(vec, weight) -> Fraction:
    return sum(v * w for v, w in zip(vec, weight))


def weyl_dim(rs: RootSystemData, weight) -> int:
    """dim V_lambda by the Weyl dimension formula."""
    lam = check_weight(rs, weight)
    if not is_dominant(lam):
        raise DomainError("weyl_dim expects a dominant weight")
    shifted = tuple(x + 1 for x in lam)
    num = Fraction(1)
    den = Fraction(1)
    for vec in _root_ip_vectors(rs):
        num *= _pairing(vec, shifted)
        den *= _pairing(vec, rs.rho)
    value = num / den
    if value.denominator != 1 or value <= 0:
        raise DomainError("Weyl dimension did not come out a positive integer")
    return int(value)


def _floor_sqrt(value: Fraction) -> int:
    if value < 0:
        return -1
    return isqrt(value.numerator // value.denominator)


def _dominant_candidates(rs: RootSystemData, lam):
    """Dominant mu with lam - mu in the nonnegative root cone."""
    n = rs.rank
    lam_sq = ip_norm(rs, lam, lam)
    box = []
    for j in range(n):
        box.append(range(_floor_sqrt(lam_sq / rs.fund_form[j][j]) + 1))
    cinv_t = linalg.transpose(linalg.inverse(linalg.mat(rs.cartan)))
    out = []
    for mu in itertools.product(*box):
        diff = tuple(Fraction(a - b) for a, b in zip(lam, mu))
        coeffs = linalg.matvec(cinv_t, diff)
        if all(c.denominator == 1 and c >= 0 for c in coeffs):
            out.append((mu, sum(int(c) for c in coeffs)))
    out.sort(key=lambda t: (t[1], t[0]))  # by height of lam - mu
    return out


@lru_cache(maxsize=None)
def dominant_character(rs: RootSystemData, weight) -> tuple:
    """((mu, mult), ...) over dominant weights of V_weight, Freudenthal."""
    lam = check_weight(rs, weight)
    if not is_dominant(lam):
        raise DomainError("character expects a dominant highest weight")
    root_vecs = _root_ip_vectors(rs)
    lam_shift_sq = ip_norm(
        rs, tuple(x + 1 for x in lam), tuple(x + 1 for x in lam)
    )
    cinv_t = linalg.transpose(linalg.inverse(linalg.mat(rs.cartan)))

    def in_cone(nu):
        diff = tuple(Fraction(a - b) for a, b in zip(lam, nu))
        coeffs = linalg.matvec(cinv_t, diff)
        return all(c.denominator == 1 and c >= 0 for c in coeffs)

    mults = {}
    for mu, height in _dominant_candidates(rs, lam):
        if height == 0:
            mults[mu] = 1
            continue
        mu_shift = tuple(x + 1 for x in mu)
        denom = lam_shift_sq - ip_norm(rs, mu_shift, mu_shift)
        total = Fraction(0)
        for beta_fund, vec in zip(rs.pos_roots_fund, root_vecs):
            k = 1
            while True:
                nu = tuple(m + k * b for m, b in zip(mu, beta_fund))
                if not in_cone(nu):
                    break
                mult_nu = mults.get(dominant_rep(rs, nu), 0)
                if mult_nu:
                    total += mult_nu * _pairing(vec, nu)
                k += 1
        if total == 0:
            continue  # mu is not a weight of V_lambda
        value = 2 * total / denom
        if value.denominator != 1 or value < 0:
            raise DomainError("Freudenthal recursion produced a non-integer")
        if value:
            mults[mu] = int(value)
    return tuple(sorted(mults.items()))


@dataclass(frozen=True)
class WeightDiagram:
    """Full character of one irreducible: weight -> multiplicity."""

    highest: tuple
    mults: tuple  # ((weight, mult), ...) over every weight, sorted
    dim: int

    def as_dict(self) -> dict:
        return dict(self.mults)


def weight_diagram(rs: RootSystemData, weight) -> WeightDiagram:
    """Expand the dominant character over Weyl orbits; checks the total."""
    lam = check_weight(rs, weight)
    full = {}
    for mu, mult in dominant_character(rs, lam):
        for nu in weyl_orbit(rs, mu):
            full[nu] = mult
    total = sum(full.values())
    dim = weyl_dim(rs, lam)
    if total != dim:
        raise DomainError("character total does not match the Weyl dimension")
    return WeightDiagram(
        highest=lam, mults=tuple(sorted(full.items())), dim=dim
    )


def dominant_weights_up_to(rs: RootSystemData, cas_max) -> list:
    """All dominant weights with casimir <= cas_max, in graded-lex order.

    Correct because the Casimir is strictly increasing in every coordinate
    on the dominant cone.
    """
    cas_max = Fraction(cas_max)
    out = []
    if cas_max < 0:
        return out
    n = rs.rank
    current = [0] * n

    def extend(j):
        if j == n:
            out.append(tuple(current))
            return
        value = 0
        while True:
            current[j] = value
            if casimir(rs, tuple(current[: j + 1] + [0] * (n - j - 1))) > cas_max:
                break
            extend(j + 1)
            value += 1
        current[j] = 0

    extend(0)
    final = [w for w in out if casimir(rs, w) <= cas_max]
    final.sort(key=lambda w: (sum(w), w))
    return final


def contragredient(rs: RootSystemData, weight) -> tuple:
    """Highest weight of the contragredient representation."""
    return contragredient_weight(rs, weight)
