"""Spectra of semisimply naturally reductive metrics on a simple group.

The metric is a submersion metric for G -> G/K: a base scale t multiplying
the negative ambient Killing form on the horizontal space, and per-factor
fiber scales t_i multiplying its restriction to the simple ideals of the
subalgebra.  Fiber scales equal to the base scale are excluded; all fibers
smaller than the base is the riemannian-fibers mode, anything larger makes
the associated canonical-variation metric semi-riemannian.

Eigenvalues are indexed by pairs (sigma, tau): a dominant weight of G and a
per-factor dominant tuple whose contragredient occurs in the restriction of
sigma.  The value is

    (1/t) * ( c(sigma) + sum_i (t/t_i - 1) * c_i(tau_i) / j_i )

with c Casimirs in each algebra's own Killing-dual units and j_i the Killing
ratio of the embedding, which converts factor Casimirs to ambient units
(the fiber metric scales the restricted ambient form, not the factor's own).
Multiplicities follow the two-sided Peter-Weyl block structure:
dim(sigma) * [sigma : tau-bar] * dim(tau).

Truncation is certified by horizontal positivity: the ambient Casimir
dominates the summed ambient-unit fiber Casimirs on every branch component,
so every eigenvalue is at least c(sigma) * min(1, t/max t_i) / t.  The code
asserts the domination term by term, which makes every truncated table
complete in both modes.
"""

from dataclasses import dataclass
from fractions import Fraction

from .branching import (
    EmbeddingSpec,
    branch,
    contragredient_tuple,
    killing_ratio,
)
from .errors import DomainError, InadmissibleMetricError
from .groups import factor_lambda1
from .rational import fmt, rat
from .rootdata import RootSystemData, casimir, check_weight
from .spectrum import SpectrumTable, table_from_pairs
from .weights import dominant_weights_up_to, weyl_dim


@dataclass(frozen=True, eq=False)
class NatRedMetric:
    """Naturally reductive metric data (G simply connected, K semisimple)."""

    group: RootSystemData
    emb: EmbeddingSpec
    base_scale: Fraction
    fiber_scales: tuple

    def __post_init__(self):
        if self.emb.ambient is not self.group:
            raise DomainError("embedding ambient type != metric group type")
        object.__setattr__(self, "base_scale", rat(self.base_scale))
        object.__setattr__(
            self, "fiber_scales", tuple(rat(x) for x in self.fiber_scales)
        )
        if len(self.fiber_scales) != self.emb.num_factors:
            raise DomainError("one fiber scale per subgroup factor required")
        if self.base_scale <= 0 or any(x <= 0 for x in self.fiber_scales):
            raise DomainError("metric scales must be positive")
        # equal base and fiber scale degenerates the canonical variation
        if any(x == self.base_scale for x in self.fiber_scales):
            raise InadmissibleMetricError(
                "fiber scale equal to base scale is excluded"
            )

    @property
    def mode(self) -> str:
        if all(x < self.base_scale for x in self.fiber_scales):
            return "riemannian-fibers"
        return "semi-riemannian"

    def to_json_dict(self) -> dict:
        return {
            "group": self.group.name,
            "embedding": self.emb.to_json_dict(),
            "t": fmt(self.base_scale),
            "t_i": [fmt(x) for x in self.fiber_scales],
        }

    @staticmethod
    def from_json_dict(obj: dict) -> "NatRedMetric":
        from .rootdata import build

        emb_field = obj["embedding"]
        if isinstance(emb_field, dict):
            emb = EmbeddingSpec.from_json_dict(emb_field)
        else:
            from .catalog import resolve_embedding

            emb = resolve_embedding(str(emb_field))
        group = build(obj["group"])
        return NatRedMetric(
            group=group,
            emb=emb,
            base_scale=rat(obj["t"]),
            fiber_scales=tuple(rat(x) for x in obj.get("t_i", ())),
        )


@dataclass(frozen=True)
class BiInvariantOperator:
    """Positive scalars a_i: the operator acting as a_i on fiber factor i."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", tuple(rat(x) for x in self.coeffs)
        )
        if any(x <= 0 for x in self.coeffs):
            raise DomainError("fiber operator coefficients must be positive")


def beta_factors(m: NatRedMetric):
    """Per-factor beta_i = t_i*t/(t - t_i); negative on oversized fibers."""
    out = []
    for x in m.fiber_scales:
        if x == m.base_scale:
            raise InadmissibleMetricError("beta undefined at equal scales")
        out.append(x * m.base_scale / (m.base_scale - x))
    return tuple(out)


def f_map(op: BiInvariantOperator, shift) -> BiInvariantOperator:
    """a_i -> a_i*b/(b - a_i), defined only when b exceeds every a_i."""
    b = rat(shift)
    if any(b <= a for a in op.coeffs):
        raise InadmissibleMetricError(
            "shift must exceed every fiber coefficient"
        )
    return BiInvariantOperator(
        coeffs=tuple(a * b / (b - a) for a in op.coeffs)
    )


def f_map_inverse(op: BiInvariantOperator, shift) -> BiInvariantOperator:
    """Exact inverse of f_map at the same shift: a_i = v_i*b/(b + v_i)."""
    b = rat(shift)
    if b <= 0:
        raise InadmissibleMetricError("shift must be positive")
    return BiInvariantOperator(
        coeffs=tuple(v * b / (b + v) for v in op.coeffs)
    )


def natred_eigenvalue(m: NatRedMetric, sigma, tau_tuple) -> Fraction:
    """Closed-form eigenvalue for one (sigma, tau) pair, evaluated directly."""
    lam = check_weight(m.group, sigma)
    ratios = killing_ratio(m.emb)
    total = casimir(m.group, lam)
    for f, tau, t_i, j in zip(
        m.emb.factors, tau_tuple, m.fiber_scales, ratios
    ):
        total += (m.base_scale / t_i - 1) * casimir(f, tau) / j
    return total / m.base_scale


def natred_terms(m: NatRedMetric, cutoff):
    """All (sigma, tau, multiplicity, eigenvalue) with eigenvalue <= cutoff.

    tau is the per-factor contragredient of the branch label, matching the
    restriction-contains-dual indexing; Casimirs are blind to the flip and
    the containment below certifies the truncation budget.
    """
    cutoff = rat(cutoff)
    if cutoff < 0:
        raise DomainError("cutoff must be nonnegative")
    ratios = killing_ratio(m.emb)
    # eigenvalue >= c(sigma) * min(1, t/max t_i) / t
    shrink = min(
        [Fraction(1)] + [m.base_scale / x for x in m.fiber_scales]
    )
    budget = cutoff * m.base_scale / shrink
    out = []
    for lam in dominant_weights_up_to(m.group, budget):
        c_lam = casimir(m.group, lam)
        dim_lam = weyl_dim(m.group, lam)
        for tup, mult in branch(m.emb, lam).terms:
            tau = contragredient_tuple(m.emb, tup)
            fiber_amb = Fraction(0)
            correction = Fraction(0)
            dim_tau = 1
            for f, part, t_i, j in zip(
                m.emb.factors, tau, m.fiber_scales, ratios
            ):
                c_part = casimir(f, part)
                fiber_amb += c_part / j
                correction += (m.base_scale / t_i - 1) * c_part / j
                dim_tau *= weyl_dim(f, part)
            # horizontal Laplacian positivity; certifies the budget
            assert fiber_amb <= c_lam
            eig = (c_lam + correction) / m.base_scale
            if eig > cutoff:
                continue
            out.append((lam, tau, dim_lam * mult * dim_tau, eig))
    return out


def natred_spectrum(m: NatRedMetric, cutoff) -> SpectrumTable:
    """Truncated spectrum of the naturally reductive metric; always complete."""
    cutoff = rat(cutoff)
    pairs = [
        (eig, mult) for _, _, mult, eig in natred_terms(m, cutoff)
    ]
    return table_from_pairs(
        unit="raw", cutoff=cutoff, pairs=pairs, complete=True
    )


def containment_check(m: NatRedMetric, factor_index: int, cutoff) -> dict:
    """Witness one fiber-plus-base eigenvalue sum inside the full spectrum.

    Shifts the fiber operator by the base scale (the admissible choice that
    turns the fiber coefficients into the beta factors), takes gamma = the
    smallest nonzero eigenvalue of the shifted metric on the chosen factor,
    and looks for a class sigma whose restriction contains the contragredient
    of the gamma witness; then zeta + gamma must occur in the full table.
    """
    cutoff = rat(cutoff)
    if m.emb.num_factors == 0:
        return {"status": "vacuous", "factor": factor_index}
    if not 0 <= factor_index < m.emb.num_factors:
        raise DomainError("factor index out of range")
    if m.mode != "riemannian-fibers":
        raise InadmissibleMetricError(
            "base-scale shift needs every fiber scale below the base scale"
        )
    ops = BiInvariantOperator(coeffs=m.fiber_scales)
    shifted = f_map(ops, m.base_scale)
    betas = beta_factors(m)
    assert shifted.coeffs == betas
    factor = m.emb.factors[factor_index]
    j = killing_ratio(m.emb)[factor_index]
    gamma, tau_p = factor_lambda1(
        factor, shifted.coeffs[factor_index] * j
    )
    if gamma > cutoff:
        return {
            "status": "inconclusive",
            "factor": factor_index,
            "gamma": gamma,
            "detail": "fiber eigenvalue already exceeds the cutoff",
        }

    from .rootdata import contragredient_weight

    tau_bar = tuple(
        contragredient_weight(factor, tau_p) if i == factor_index
        else tuple(0 for _ in range(f.rank))
        for i, f in enumerate(m.emb.factors)
    )
    tau = tuple(
        tau_p if i == factor_index else tuple(0 for _ in range(f.rank))
        for i, f in enumerate(m.emb.factors)
    )
    budget = (cutoff - gamma) * m.base_scale
    witness = None
    for lam in dominant_weights_up_to(m.group, budget):
        if branch(m.emb, lam).multiplicity(tau_bar) > 0:
            zeta = casimir(m.group, lam) / m.base_scale
            if witness is None or zeta < witness[0]:
                witness = (zeta, lam)
    if witness is None:
        return {
            "status": "inconclusive",
            "factor": factor_index,
            "gamma": gamma,
            "detail": "no restriction witness below the cutoff",
        }
    zeta, lam = witness
    value = zeta + gamma
    table = natred_spectrum(m, cutoff)
    found = table.multiplicity(value)
    return {
        "status": "witnessed" if found > 0 else "failed",
        "factor": factor_index,
        "sigma": lam,
        "tau": tau,
        "zeta": zeta,
        "gamma": gamma,
        "value": value,
        "multiplicity": found,
    }
