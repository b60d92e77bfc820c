"""Shared test utilities: random lattice generators and the independent
box-enumeration oracle used to cross-check torus spectra."""

import math
from fractions import Fraction

import numpy as np

from liespec.lattices import Lattice
from liespec.linalg import inverse


def random_integer_basis(rng, m, lo=-2, hi=2):
    """Integer basis matrix with nonzero determinant (columns generate)."""
    while True:
        rows = tuple(
            tuple(Fraction(rng.randint(lo, hi)) for _ in range(m))
            for _ in range(m)
        )
        det = _det_int(rows)
        if det != 0:
            return rows


def random_rational_basis(rng, m, denoms=(1, 2, 3)):
    while True:
        rows = tuple(
            tuple(
                Fraction(rng.randint(-2, 2), rng.choice(denoms))
                for _ in range(m)
            )
            for _ in range(m)
        )
        if _det_int(rows) != 0:
            return rows


def _det_int(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = tuple(r[:j] + r[j + 1 :] for r in rows[1:])
        sign = -1 if j % 2 else 1
        total += sign * rows[0][j] * _det_int(minor)
    return total


def box_oracle_spectrum(lat: Lattice, cutoff: Fraction) -> dict:
    """Exact truncated torus spectrum by brute-force box enumeration.

    Clears denominators to an integer quadratic form and counts lattice
    points with int64 numpy arithmetic, chunked along the first axis so the
    candidate box never materializes at once.  Completely independent of
    the library's recursive enumeration.
    """
    q = inverse(lat.gram)
    m = lat.dim
    scale = math.lcm(*[x.denominator for row in q for x in row])
    a = np.array(
        [[int(x * scale) for x in row] for row in q], dtype=np.int64
    )
    bound_frac = cutoff * scale
    assert bound_frac.denominator == 1
    bound = int(bound_frac)
    # |x_i|^2 <= cutoff * (q^{-1})_ii = cutoff * gram_ii
    radius = []
    for i in range(m):
        cap = cutoff * lat.gram[i][i]
        radius.append(math.isqrt(cap.numerator // cap.denominator) + 1)
    counts = {}
    if m == 1:
        axis = np.arange(-radius[0], radius[0] + 1, dtype=np.int64)
        vals = a[0][0] * axis * axis
        keep = vals <= bound
        uniq, cnt = np.unique(vals[keep], return_counts=True)
        for v, c in zip(uniq.tolist(), cnt.tolist()):
            counts[Fraction(v, scale)] = counts.get(Fraction(v, scale), 0) + c
        return counts
    tail_axes = [
        np.arange(-radius[i], radius[i] + 1, dtype=np.int64)
        for i in range(1, m)
    ]
    grids = np.meshgrid(*tail_axes, indexing="ij")
    tail = np.stack([g.ravel() for g in grids], axis=1)
    a_tail = a[1:, 1:]
    tail_sq = np.einsum("ni,ij,nj->n", tail, a_tail, tail)
    cross = tail @ a[0, 1:]
    for x0 in range(-radius[0], radius[0] + 1):
        vals = a[0, 0] * x0 * x0 + 2 * x0 * cross + tail_sq
        keep = vals <= bound
        uniq, cnt = np.unique(vals[keep], return_counts=True)
        for v, c in zip(uniq.tolist(), cnt.tolist()):
            key = Fraction(int(v), scale)
            counts[key] = counts.get(key, 0) + int(c)
    return counts
