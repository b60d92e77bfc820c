"""Branching of irreducibles to an embedded product subgroup.

An embedding of K = K_1 x ... x K_r into a simple G is given by a rational
restriction matrix carrying G-weight coordinates to concatenated K-weight
coordinates (the transpose of the Cartan-subalgebra inclusion).  Branching
pushes the full weight diagram of a G-irreducible through that matrix and
peels highest weights: repeatedly take the surviving dominant tuple that is
maximal by (total Casimir, then graded-lex) -- such a tuple is a maximal
weight of the residual character, so subtracting its product diagram keeps
the residue a genuine character -- and record its multiplicity.  Everything
is exact, and malformed restriction data surfaces as a non-integer image or
a negative residue, never as a wrong answer.

The Dynkin index of the embedding is computed by branching the adjoint
representation: with I(lambda) = dim * <lambda, lambda+2rho>_norm / (2 dim_g)
and I_G(adjoint) = h_vee, the per-factor index is

    ind_i = sum_terms mult * (prod_{j != i} dim_j) * I_{K_i}(lambda_i) / h_vee_G

and the Killing forms of G and K_i restrict against each other with ratio
j_i = ind_i * h_vee_G / h_vee_{K_i}, the number that converts factor
Casimirs to ambient-Killing units.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .errors import DomainError, MalformedEmbeddingError
from .rootdata import (
    RootSystemData,
    casimir,
    check_weight,
    contragredient_weight,
    ip_norm,
    is_dominant,
)
from .weights import weight_diagram, weyl_dim


@dataclass(frozen=True, eq=False)
class EmbeddingSpec:
    """Restriction data for K_1 x ... x K_r inside a simple G.

    ``restriction`` has one row per concatenated K-weight coordinate and one
    column per G-weight coordinate.  Instances are identity-hashed so
    branching results can be cached per embedding object.
    """

    ambient: RootSystemData
    factors: tuple
    restriction: tuple
    name: str = None

    def __post_init__(self):
        rows = sum(f.rank for f in self.factors)
        if len(self.restriction) != rows:
            raise DomainError("restriction row count != total factor rank")
        if any(len(r) != self.ambient.rank for r in self.restriction):
            raise DomainError("restriction column count != ambient rank")

    @property
    def num_factors(self) -> int:
        return len(self.factors)

    def restrict_weight(self, weight):
        """Image of a G-weight as per-factor coordinate tuples.

        Raises MalformedEmbeddingError if any image coordinate is not an
        integer.
        """
        image = linalg.matvec(
            self.restriction, tuple(Fraction(x) for x in weight)
        )
        if any(x.denominator != 1 for x in image):
            raise MalformedEmbeddingError(
                f"weight {tuple(weight)} restricts to non-integer coordinates"
            )
        parts = []
        at = 0
        for f in self.factors:
            parts.append(tuple(int(x) for x in image[at : at + f.rank]))
            at += f.rank
        return tuple(parts)

    def to_json_dict(self) -> dict:
        from .rational import fmt

        obj = {
            "ambient": self.ambient.name,
            "factors": [f.name for f in self.factors],
            "restriction": [[fmt(x) for x in row] for row in self.restriction],
        }
        if self.name is not None:
            obj["name"] = self.name
        return obj

    @staticmethod
    def from_json_dict(obj: dict) -> "EmbeddingSpec":
        from .rational import rat_matrix
        from .rootdata import build

        factors = tuple(build(f) for f in obj.get("factors", []))
        rows = obj.get("restriction", [])
        total = sum(f.rank for f in factors)
        ambient = build(obj["ambient"])
        restriction = (
            rat_matrix(rows) if total else tuple()
        )
        return EmbeddingSpec(
            ambient=ambient,
            factors=factors,
            restriction=restriction,
            name=obj.get("name"),
        )


@dataclass(frozen=True)
class BranchingResult:
    source: tuple
    terms: tuple  # ((tuple_of_factor_weights, multiplicity), ...)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def multiplicity(self, factor_weights) -> int:
        return self.as_dict().get(tuple(factor_weights), 0)


def _tuple_casimir(emb: EmbeddingSpec, tup) -> Fraction:
    return sum(
        (casimir(f, w) for f, w in zip(emb.factors, tup)), Fraction(0)
    )


def _peel_key(emb: EmbeddingSpec, tup):
    concat = tuple(x for part in tup for x in part)
    return (_tuple_casimir(emb, tup), sum(concat), concat)


@lru_cache(maxsize=None)
def branch(emb: EmbeddingSpec, sigma) -> BranchingResult:
    """Decompose the restriction of the G-irreducible V_sigma to K."""
    lam = check_weight(emb.ambient, sigma)
    if not is_dominant(lam):
        raise DomainError("branch expects a dominant weight")
    if emb.num_factors == 0:
        return BranchingResult(
            source=lam, terms=(((), weyl_dim(emb.ambient, lam)),)
        )

    residue = {}
    for nu, mult in weight_diagram(emb.ambient, lam).mults:
        key = emb.restrict_weight(nu)
        residue[key] = residue.get(key, 0) + mult

    terms = {}
    while residue:
        candidates = [
            t for t in residue if all(is_dominant(part) for part in t)
        ]
        if not candidates:
            raise MalformedEmbeddingError(
                "residual character has no dominant weight tuple"
            )
        top = max(candidates, key=lambda t: _peel_key(emb, t))
        mult = residue[top]
        if mult < 0:
            raise MalformedEmbeddingError("negative residue while peeling")
        diagrams = [
            weight_diagram(f, part).mults
            for f, part in zip(emb.factors, top)
        ]
        for combo in itertools.product(*diagrams):
            key = tuple(w for w, _ in combo)
            count = mult
            for _, m in combo:
                count *= m
            value = residue.get(key, 0) - count
            if value < 0:
                raise MalformedEmbeddingError("negative residue while peeling")
            if value:
                residue[key] = value
            else:
                residue.pop(key, None)
        terms[top] = mult

    dim_total = sum(
        m * _product_dim(emb, t) for t, m in terms.items()
    )
    if dim_total != weyl_dim(emb.ambient, lam):
        raise MalformedEmbeddingError("branching lost dimensions")
    return BranchingResult(source=lam, terms=tuple(sorted(terms.items())))


def _product_dim(emb: EmbeddingSpec, tup) -> int:
    out = 1
    for f, part in zip(emb.factors, tup):
        out *= weyl_dim(f, part)
    return out


def spherical_mult(emb: EmbeddingSpec, sigma) -> int:
    """Multiplicity of the trivial K-type in V_sigma restricted to K."""
    if emb.num_factors == 0:
        return weyl_dim(emb.ambient, check_weight(emb.ambient, sigma))
    trivial = tuple(tuple(0 for _ in range(f.rank)) for f in emb.factors)
    return branch(emb, tuple(sigma)).multiplicity(trivial)


def _rep_index(rs: RootSystemData, weight) -> Fraction:
    """Dynkin index I(lambda) = dim * <lambda, lambda+2rho>_norm / (2 dim_g)."""
    lam = tuple(weight)
    shifted = tuple(x + 2 for x in lam)
    return (
        Fraction(weyl_dim(rs, lam))
        * ip_norm(rs, lam, shifted)
        / (2 * rs.dim_g)
    )


@lru_cache(maxsize=None)
def embedding_index(emb: EmbeddingSpec) -> tuple:
    """Per-factor Dynkin indices, from branching the adjoint of G.

    I_G(adjoint) equals the dual Coxeter number, so each index is the
    K_i-index of the restricted adjoint divided by h_vee of G.
    """
    result = branch(emb, emb.ambient.highest_root)
    indices = []
    for i, factor in enumerate(emb.factors):
        total = Fraction(0)
        for tup, mult in result.terms:
            other_dims = 1
            for j, (f, part) in enumerate(zip(emb.factors, tup)):
                if j != i:
                    other_dims *= weyl_dim(f, part)
            total += mult * other_dims * _rep_index(factor, tup[i])
        indices.append(total / emb.ambient.dual_coxeter)
    if any(ind <= 0 for ind in indices):
        raise MalformedEmbeddingError("embedding index must be positive")
    return tuple(indices)


def killing_ratio(emb: EmbeddingSpec) -> tuple:
    """Per-factor ratio j_i between the restricted ambient Killing form
    and the factor's own Killing form: j_i = ind_i * h_vee_G / h_vee_i."""
    return tuple(
        ind * emb.ambient.dual_coxeter / f.dual_coxeter
        for ind, f in zip(embedding_index(emb), emb.factors)
    )


@lru_cache(maxsize=None)
def restriction_norm_bound_sq(emb: EmbeddingSpec) -> Fraction:
    """Rational upper bound for the squared operator norm of the restriction.

    The norm is taken between the <theta,theta>=2 forms on G- and K-weight
    space.  The squared norm is the largest eigenvalue of
    F_G^{-1} R^T F_K R, which the Gershgorin row bound dominates.
    """
    if emb.num_factors == 0:
        return Fraction(0)
    n = emb.ambient.rank
    blocks = []
    for f in emb.factors:
        blocks.append(f.fund_form)
    total = sum(f.rank for f in emb.factors)
    fk = [[Fraction(0)] * total for _ in range(total)]
    at = 0
    for f, block in zip(emb.factors, blocks):
        for i in range(f.rank):
            for j in range(f.rank):
                fk[at + i][at + j] = block[i][j]
        at += f.rank
    fk = tuple(tuple(row) for row in fk)
    r = emb.restriction
    rt_fk_r = linalg.matmul(linalg.transpose(r), linalg.matmul(fk, r))
    fg_inv = linalg.inverse(emb.ambient.fund_form)
    mat = linalg.matmul(fg_inv, rt_fk_r)
    return max(sum(abs(x) for x in row) for row in mat)


def contragredient_tuple(emb: EmbeddingSpec, tup) -> tuple:
    """Apply per-factor contragredient to a branching term label."""
    return tuple(
        contragredient_weight(f, part) for f, part in zip(emb.factors, tup)
    )


def validate_embedding(emb: EmbeddingSpec) -> dict:
    """Run structural checks; returns a report instead of raising.

    Checks: integer restriction of all adjoint weights, full row rank of
    the restriction matrix, successful peeling of the adjoint, positive
    indices.
    """
    checks = []

    def record(name, ok, detail=""):
        checks.append({"name": name, "ok": bool(ok), "detail": detail})

    try:
        for nu, _ in weight_diagram(
            emb.ambient, emb.ambient.highest_root
        ).mults:
            emb.restrict_weight(nu)
        record("integer-adjoint-weights", True)
    except MalformedEmbeddingError as exc:
        record("integer-adjoint-weights", False, str(exc))

    total = sum(f.rank for f in emb.factors)
    if total:
        # R has full row rank iff the row Gram matrix R R^T is nonsingular.
        full = linalg.det(
            linalg.matmul(emb.restriction, linalg.transpose(emb.restriction))
        ) != 0
        record("full-row-rank", full)
    else:
        record("full-row-rank", True, "trivial subgroup")

    try:
        branch(emb, emb.ambient.highest_root)
        record("adjoint-peeling", True)
    except (MalformedEmbeddingError, DomainError) as exc:
        record("adjoint-peeling", False, str(exc))

    try:
        indices = embedding_index(emb)
        record(
            "positive-indices",
            all(ind > 0 for ind in indices),
            ",".join(str(i) for i in indices),
        )
    except (MalformedEmbeddingError, DomainError) as exc:
        record("positive-indices", False, str(exc))

    return {"ok": all(c["ok"] for c in checks), "checks": checks}
