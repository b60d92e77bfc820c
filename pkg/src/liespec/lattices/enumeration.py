"""Short-vector enumeration with kernel dispatch.

The problem is first cleared of denominators: for a rational Gram matrix G
and rational bound b, a vector satisfies x^T G x <= b iff x^T A x <= B for
the integer matrix A = q*G (q the common denominator) and B = floor(q*b),
because x^T A x is an integer.  The integer problem is solved either by the
compiled kernel (when present and when the integer sizes fit its overflow
envelope) or by the exact pure-Python kernel; both return identical output,
which the test suite checks differentially.

Set LIESPEC_PURE=1 (or call force_pure) to disable the compiled kernel.
"""

import os
from fractions import Fraction
from math import isqrt, lcm

from .. import linalg
from ..errors import DomainError
from . import _enum_py
from .lattice import Lattice

try:
    from . import _enum_core
except ImportError:  # extension not built; pure path covers everything
    _enum_core = None

_force_pure = os.environ.get("LIESPEC_PURE", "") not in ("", "0")

_MAX_ENTRY = 1 << 40
_MAX_BOUND = 1 << 46
_MAX_ACCUM = 1 << 62


def kernel_name() -> str:
    """Which kernel answers enumeration calls right now."""
    if _enum_core is None or _force_pure:
        return "pure"
    return "compiled"


def force_pure(flag: bool) -> None:
    """Force the pure kernel on or off (benchmarks and differential tests)."""
    global _force_pure
    _force_pure = bool(flag)


def _integer_problem(gram, bound: Fraction):
    scale = lcm(*[x.denominator for row in gram for x in row])
    a = [[int(x * scale) for x in row] for row in gram]
    scaled = bound * scale
    b = scaled.numerator // scaled.denominator
    return a, b, scale


def _compiled_fits(a, bound: int) -> bool:
    """Overflow envelope for the compiled kernel, checked exactly."""
    m = len(a)
    if m > 12 or bound > _MAX_BOUND:
        return False
    if max(abs(x) for row in a for x in row) > _MAX_ENTRY:
        return False
    inv = linalg.inverse(linalg.mat(a))
    xmax = []
    for i in range(m):
        s = bound * inv[i][i]
        xmax.append(isqrt(s.numerator // s.denominator) + 2)
    accum = sum(
        abs(a[i][j]) * xmax[i] * xmax[j] for i in range(m) for j in range(m)
    )
    return accum <= _MAX_ACCUM


def enumerate_gram(gram, bound: Fraction):
    """Canonical-sign vectors (coords, squared length) for x^T gram x <= bound."""
    a, b, scale = _integer_problem(gram, bound)
    if b < 0:
        return []
    raw = None
    if _enum_core is not None and not _force_pure and _compiled_fits(a, b):
        try:
            raw = _enum_core.short_vectors_int(a, b)
        except RuntimeError:
            raw = None  # numerical breakdown; the exact kernel takes over
    if raw is None:
        raw = _enum_py.short_vectors_int(a, b)
    return [(coords, Fraction(value, scale)) for coords, value in raw]


def short_vectors(lat: Lattice, bound):
    """All nonzero lattice vectors of squared length <= bound.

    Returns a list of (coords, norm_sq) with integer coordinates relative
    to the lattice basis, both signs included, sorted by (norm_sq, coords).
    """
    bound = Fraction(bound)
    if bound < 0:
        raise DomainError("enumeration bound must be >= 0")
    half = enumerate_gram(lat.gram, bound)
    full = []
    for coords, value in half:
        full.append((coords, value))
        full.append((tuple(-c for c in coords), value))
    full.sort(key=lambda item: (item[1], item[0]))
    return full


def systole(lat: Lattice) -> Fraction:
    """Smallest squared length of a nonzero lattice vector."""
    from .reduction import lll_gram

    g, _ = lll_gram(lat.gram)
    bound = min(g[i][i] for i in range(len(g)))
    half = enumerate_gram(g, bound)
    return min(value for _, value in half)
