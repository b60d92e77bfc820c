"""Bi-invariant spectra of compact semisimple groups and normal quotients.

A group is described by its simply-connected simple factors, a finite list
of central elements cutting out K = K-tilde / Gamma, and per-factor metric
scales t_i (the metric is t_i times the negative Killing form on factor i).
Central elements are rational coweights in simple-coroot coordinates, so a
weight in fundamental coordinates pairs with one by a plain dot product and
admissibility of a representation is an exact integrality test.

Laplace eigenvalues are sums of per-factor Casimirs divided by the scales;
each admissible tuple contributes multiplicity (product of dimensions)
squared.  Casimir summands are nonnegative, so the per-factor enumeration
budget makes every truncated table complete.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .branching import EmbeddingSpec, spherical_mult
from .errors import DomainError
from .rational import fmt, rat
from .rootdata import RootSystemData, build, casimir, check_weight
from .spectrum import SpectrumTable, table_from_pairs
from .weights import dominant_weights_up_to, weyl_dim


@dataclass(frozen=True, eq=False)
class GroupSpec:
    """Compact group K-tilde/Gamma with a bi-invariant metric.

    gamma holds central elements, one rational coweight vector per factor;
    scales holds the per-factor Killing multiples t_i > 0.
    """

    factors: tuple
    gamma: tuple = ()
    scales: tuple = None

    def __post_init__(self):
        if not self.factors:
            raise DomainError("GroupSpec needs at least one simple factor")
        if self.scales is None:
            object.__setattr__(
                self, "scales", tuple(Fraction(1) for _ in self.factors)
            )
        if len(self.scales) != len(self.factors):
            raise DomainError("one scale per factor required")
        if any(t <= 0 for t in self.scales):
            raise DomainError("metric scales must be positive")
        for z in self.gamma:
            if len(z) != len(self.factors):
                raise DomainError("central element needs one part per factor")
            for f, part in zip(self.factors, z):
                if len(part) != f.rank:
                    raise DomainError("coweight length != factor rank")
                # Ad(z) = id forces integral pairing with every root.
                for root in f.pos_roots_fund:
                    val = sum(
                        Fraction(a) * Fraction(b)
                        for a, b in zip(root, part)
                    )
                    if val.denominator != 1:
                        raise DomainError(
                            "gamma element pairs non-integrally with a root"
                        )

    @property
    def num_factors(self) -> int:
        return len(self.factors)

    def to_json_dict(self) -> dict:
        return {
            "factors": [f.name for f in self.factors],
            "scales": [fmt(t) for t in self.scales],
            "gamma": [
                [[fmt(x) for x in part] for part in z] for z in self.gamma
            ],
        }

    @staticmethod
    def from_json_dict(obj: dict) -> "GroupSpec":
        factors = tuple(build(name) for name in obj["factors"])
        scales = obj.get("scales")
        if scales is not None:
            scales = tuple(rat(s) for s in scales)
        gamma = tuple(
            tuple(tuple(rat(x) for x in part) for part in z)
            for z in obj.get("gamma", ())
        )
        return GroupSpec(factors=factors, gamma=gamma, scales=scales)


def center_admissible(gs: GroupSpec, lam_tuple) -> bool:
    """True iff every listed central element acts trivially on the
    irreducible with the given per-factor highest weights."""
    if len(lam_tuple) != gs.num_factors:
        raise DomainError("weight tuple length != number of factors")
    parts = tuple(
        check_weight(f, w) for f, w in zip(gs.factors, lam_tuple)
    )
    for z in gs.gamma:
        total = Fraction(0)
        for lam, part in zip(parts, z):
            total += sum(
                Fraction(a) * Fraction(b) for a, b in zip(lam, part)
            )
        if total.denominator != 1:
            return False
    return True


def admissible_tuples(gs: GroupSpec, cutoff: Fraction):
    """Gamma-admissible dominant tuples with Sum c_i(lambda_i)/t_i <= cutoff,
    each paired with that eigenvalue.  Exhaustive: summands are >= 0."""
    cutoff = rat(cutoff)
    per_factor = []
    for f, t in zip(gs.factors, gs.scales):
        budget = cutoff * t
        lams = dominant_weights_up_to(f, budget)
        per_factor.append(
            tuple((lam, casimir(f, lam) / t) for lam in lams)
        )
    out = []
    for combo in product(*per_factor):
        eig = sum((c for _, c in combo), Fraction(0))
        if eig > cutoff:
            continue
        tup = tuple(lam for lam, _ in combo)
        if not center_admissible(gs, tup):
            continue
        out.append((tup, eig))
    return out


def biinvariant_spectrum(gs: GroupSpec, cutoff) -> SpectrumTable:
    """Truncated Laplace spectrum of the bi-invariant metric on K."""
    cutoff = rat(cutoff)
    if cutoff < 0:
        raise DomainError("cutoff must be nonnegative")
    pairs = []
    for tup, eig in admissible_tuples(gs, cutoff):
        dim = 1
        for f, lam in zip(gs.factors, tup):
            dim *= weyl_dim(f, lam)
        pairs.append((eig, dim * dim))
    return table_from_pairs(
        unit="raw", cutoff=cutoff, pairs=pairs, complete=True
    )


def factor_lambda1(rs: RootSystemData, scale):
    """Smallest nonzero bi-invariant eigenvalue of one simple factor and a
    witnessing highest weight.  Casimir grows in each dominant coordinate,
    so the minimum over nonzero dominants sits at a fundamental weight."""
    scale = rat(scale)
    if scale <= 0:
        raise DomainError("metric scale must be positive")
    best = None
    for k in range(rs.rank):
        w = tuple(1 if i == k else 0 for i in range(rs.rank))
        val = casimir(rs, w) / scale
        if best is None or val < best[0]:
            best = (val, w)
    table = biinvariant_spectrum(
        GroupSpec(factors=(rs,), scales=(scale,)), best[0]
    )
    nonzero = [e for e, _ in table.entries if e > 0]
    assert nonzero and nonzero[0] == best[0]
    return best


def normal_quotient_spectrum(
    ambient: RootSystemData, emb: EmbeddingSpec, t, cutoff
) -> SpectrumTable:
    """Spectrum of the normal metric t*(-B) on G/K, G simply connected.

    Eigenvalues are c(lambda)/t over spherical representations, each with
    multiplicity dim(lambda) times the dimension of its K-fixed subspace.
    """
    if emb.ambient is not ambient:
        raise DomainError("embedding does not target the given ambient type")
    t = rat(t)
    if t <= 0:
        raise DomainError("metric scale must be positive")
    cutoff = rat(cutoff)
    if cutoff < 0:
        raise DomainError("cutoff must be nonnegative")
    pairs = []
    for lam in dominant_weights_up_to(ambient, cutoff * t):
        fixed = spherical_mult(emb, lam)
        if fixed == 0:
            continue
        pairs.append((casimir(ambient, lam) / t, weyl_dim(ambient, lam) * fixed))
    return table_from_pairs(
        unit="raw", cutoff=cutoff, pairs=pairs, complete=True
    )
