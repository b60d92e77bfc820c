"""Exact congruence testing for rational lattices (dim <= 8).

Two lattices are congruent iff their Gram matrices are related by a
unimodular change of basis.  We reduce the first lattice, then try to map
its basis vectors onto short vectors of the second with exactly matching
pairwise inner products.  A complete assignment V satisfies
V^T G2 V = G1, and equal determinants force V unimodular, so backtracking
over short-vector images decides the question exactly.
"""

from ..errors import DomainError, UnsupportedDimensionError
from .enumeration import enumerate_gram
from .lattice import Lattice
from .reduction import lll_gram, _minima_transform

MAX_DIM = 8


def _reduced_gram(g, m):
    g1, _ = lll_gram(g)
    if m <= 4:
        g1, _ = _minima_transform(g1)
    return g1


def _norm_buckets(gram, bound):
    buckets = {}
    for coords, value in enumerate_gram(gram, bound):
        for vec in (coords, tuple(-c for c in coords)):
            buckets.setdefault(value, []).append(vec)
    return buckets


def congruent(a: Lattice, b: Lattice) -> bool:
    """Decide whether two lattices are isometric, exactly."""
    if a.dim != b.dim:
        raise DomainError("congruence needs equal dimensions")
    m = a.dim
    if m > MAX_DIM:
        raise UnsupportedDimensionError(
            f"congruence implemented for dim <= {MAX_DIM}"
        )
    if a.det_gram != b.det_gram:
        return False

    g1 = _reduced_gram(a.gram, m)
    g2 = b.gram
    bound = max(g1[i][i] for i in range(m))

    buckets1 = _norm_buckets(g1, bound)
    buckets2 = _norm_buckets(g2, bound)
    counts1 = sorted((v, len(vs)) for v, vs in buckets1.items())
    counts2 = sorted((v, len(vs)) for v, vs in buckets2.items())
    if counts1 != counts2:
        return False

    g2_rows = g2

    def inner(u, v):
        total = 0
        for i, ui in enumerate(u):
            if ui:
                row = g2_rows[i]
                total += ui * sum(row[j] * v[j] for j in range(m) if v[j])
        return total

    images = [None] * m

    def assign(i):
        if i == m:
            return True
        for w in buckets2.get(g1[i][i], ()):
            ok = True
            for j in range(i):
                if inner(images[j], w) != g1[i][j]:
                    ok = False
                    break
            if ok:
                images[i] = w
                if assign(i + 1):
                    return True
        images[i] = None
        return False

    return assign(0)
