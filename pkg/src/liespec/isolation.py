"""Finite-cutoff isolation and finiteness experiments.

Four instruments: the low-eigenvalue invariant vector that classifies
bi-invariant metrics (per-factor first eigenvalues for groups; the dual
quadratic form sampled on standard basis vectors and their pairwise sums
for tori), a grid scan that hunts for isospectral neighbors of a naturally
reductive metric, the scale-window quantity C/(lambda^n vol^2), homothety
invariants, and a constructive search that reconstructs all torus candidates
whose invariants are drawn from a given finite value set.

Everything compares exact rational tables; "isospectral at cutoff" means
equality of truncated tables with zero tolerance.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import DomainError, UnsupportedDimensionError
from .groups import GroupSpec, factor_lambda1
from .lattices import Lattice, congruent, systole
from .linalg import det, inverse, is_positive_definite
from .natred import NatRedMetric, natred_spectrum
from .rational import fmt, rat
from .spectrum import SpectrumTable, table_distance


@dataclass(frozen=True)
class GammaVector:
    """Low-eigenvalue invariants with the identification marking fixed.

    kind "group": one first-eigenvalue per simple factor (dim = r).
    kind "torus": dual form on basis vectors then pairwise sums
    (dim = m, entries length m + C(m,2)), in four-pi-squared units.
    """

    kind: str
    dim: int
    entries: tuple

    def __post_init__(self):
        if self.kind not in ("group", "torus"):
            raise DomainError("kind must be 'group' or 'torus'")
        expect = (
            self.dim
            if self.kind == "group"
            else self.dim + self.dim * (self.dim - 1) // 2
        )
        if len(self.entries) != expect:
            raise DomainError("invariant vector has wrong length")
        if any(x <= 0 for x in self.entries):
            raise DomainError("invariants must be positive")

    def value_set(self) -> tuple:
        return tuple(sorted(set(self.entries)))


def gamma_invariants(subject) -> GammaVector:
    """Invariant vector of a GroupSpec or of a torus given by its Lattice.

    Group entries are per-factor first nonzero eigenvalues at that factor's
    scale, computed on the simply connected factor (the marking fixes the
    cover).  Torus entries are b_j = Q*(delta_j) and c_jk = Q*(delta_j +
    delta_k) for the dual quadratic form Q* in the standard coordinates.
    """
    if isinstance(subject, GroupSpec):
        vals = tuple(
            factor_lambda1(f, t)[0]
            for f, t in zip(subject.factors, subject.scales)
        )
        return GammaVector(
            kind="group", dim=len(subject.factors), entries=vals
        )
    if isinstance(subject, Lattice):
        q = inverse(subject.gram)
        m = subject.dim
        b = [q[j][j] for j in range(m)]
        c = [
            q[j][j] + 2 * q[j][k] + q[k][k]
            for j, k in combinations(range(m), 2)
        ]
        return GammaVector(
            kind="torus", dim=m, entries=tuple(b) + tuple(c)
        )
    raise DomainError("subject must be a GroupSpec or a Lattice")


def _grid_multipliers(radius: Fraction, steps: int):
    if steps == 1:
        return (Fraction(1),)
    lo = 1 - radius
    return tuple(
        lo + Fraction(2 * k, steps - 1) * radius for k in range(steps)
    )


def isolation_scan(
    m: NatRedMetric, radius, steps: int, cutoff
) -> dict:
    """Compare the metric's truncated spectrum against a multiplicative grid.

    The grid runs over base and fiber scales independently; the center, any
    point with a fiber scale colliding with its base scale, and any point
    defining the same metric as the center (vacuous base directions when
    the subgroup fills the group) are skipped and counted.  Remaining
    points are compared exactly; the report lists isospectral neighbors
    (expected none) and the minimum table distance seen.
    """
    radius = rat(radius)
    if not 0 <= radius < 1:
        raise DomainError("radius must lie in [0, 1)")
    steps = int(steps)
    if steps < 1:
        raise DomainError("steps must be at least 1")
    cutoff = rat(cutoff)
    mult = _grid_multipliers(radius, steps)
    center_scales = (m.base_scale,) + m.fiber_scales
    fiber_fills_group = (
        sum(f.dim_g for f in m.emb.factors) == m.group.dim_g
    )
    center_table = natred_spectrum(m, cutoff)

    neighbors = []
    skipped_inadmissible = []
    skipped_equivalent = 0
    compared = 0
    min_distance = None
    for combo in product(mult, repeat=len(center_scales)):
        scales = tuple(u * s for u, s in zip(combo, center_scales))
        if scales == center_scales:
            continue
        base, fibers = scales[0], scales[1:]
        if any(x == base for x in fibers):
            skipped_inadmissible.append(
                {"t": fmt(base), "t_i": [fmt(x) for x in fibers]}
            )
            continue
        if fiber_fills_group and fibers == m.fiber_scales:
            skipped_equivalent += 1
            continue
        point = NatRedMetric(
            group=m.group,
            emb=m.emb,
            base_scale=base,
            fiber_scales=fibers,
        )
        table = natred_spectrum(point, cutoff)
        compared += 1
        if table.entries == center_table.entries:
            neighbors.append(
                {"t": fmt(base), "t_i": [fmt(x) for x in fibers]}
            )
        else:
            d = table_distance(table, center_table)
            if min_distance is None or d < min_distance:
                min_distance = d
    return {
        "center": m.to_json_dict(),
        "grid": {
            "radius": fmt(radius),
            "steps": steps,
            "axes": len(center_scales),
            "points": len(mult) ** len(center_scales),
            "compared": compared,
            "skipped_inadmissible": skipped_inadmissible,
            "skipped_equivalent": skipped_equivalent,
        },
        "cutoff": fmt(cutoff),
        "isospectral_neighbors": neighbors,
        "min_table_distance": min_distance,
    }


def finiteness_window(lam, vol, n: int, const) -> Fraction:
    """Scale window C / (lambda^n vol^2)."""
    lam, vol, const = rat(lam), rat(vol), rat(const)
    n = int(n)
    if lam <= 0 or vol <= 0 or const <= 0:
        raise DomainError("window inputs must be positive")
    return const / (lam**n * vol**2)


def homothety_invariant(table: SpectrumTable, n: int, vol):
    """lambda_1^{n/2} * vol, exact for even n; for odd n the squared pair
    (lambda_1^n * vol^2, n) keeps everything rational."""
    vol = rat(vol)
    n = int(n)
    if vol <= 0:
        raise DomainError("volume must be positive")
    if n < 1:
        raise DomainError("dimension must be positive")
    nonzero = [e for e, _ in table.entries if e > 0]
    if not nonzero:
        raise DomainError(
            "cutoff below the first nonzero eigenvalue; inconclusive"
        )
    lam1 = nonzero[0]
    if n % 2 == 0:
        return lam1 ** (n // 2) * vol
    return (lam1**n * vol**2, n)


def torus_search(values, n: int, lam_min, vol_min) -> list:
    """Reconstruct all n-tori whose invariant entries lie in a finite set.

    Every assignment of diagonal values b_j and pair values c_jk from the
    set determines one symmetric candidate for the dual Gram matrix via
    q_jj = b_j, q_jk = (c_jk - b_j - b_k)/2.  Positive-definite candidates
    are filtered by first eigenvalue >= lam_min (the dual systole) and
    volume >= vol_min (det q <= 1/vol_min^2), inverted back to torus Gram
    matrices, and deduped up to congruence.
    """
    n = int(n)
    if n < 1:
        raise DomainError("dimension must be positive")
    if n > 4:
        raise UnsupportedDimensionError(
            "torus search is guaranteed finite only up to dimension 4"
        )
    lam_min, vol_min = rat(lam_min), rat(vol_min)
    if lam_min <= 0 or vol_min <= 0:
        raise DomainError("lower bounds must be positive")
    vals = sorted({rat(v) for v in values})
    if not vals:
        return []
    pairs = list(combinations(range(n), 2))
    kept = []
    for diag in product(vals, repeat=n):
        for off in product(vals, repeat=len(pairs)):
            q = [[Fraction(0)] * n for _ in range(n)]
            for j in range(n):
                q[j][j] = diag[j]
            for (j, k), c in zip(pairs, off):
                q[j][k] = q[k][j] = (c - diag[j] - diag[k]) / 2
            qt = tuple(tuple(row) for row in q)
            if not is_positive_definite(qt):
                continue
            if det(qt) * vol_min**2 > 1:
                continue
            dual = Lattice.from_gram(qt)
            if systole(dual) < lam_min:
                continue
            torus = Lattice.from_gram(inverse(qt))
            if any(congruent(torus, seen) for seen in kept):
                continue
            kept.append(torus)
    return kept
