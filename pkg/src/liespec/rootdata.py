"""Root system data for the simple types A through G.

Weights live in fundamental-weight coordinates: an integer tuple
(lambda_1, ..., lambda_n) means lambda = sum_i lambda_i * omega_i, so the
j-th coordinate is the pairing with the j-th simple coroot.  Rows of the
Cartan matrix are then exactly the simple roots in these coordinates.

Two exact inner products are carried:

* the normalized form ``ip_norm`` with <theta, theta> = 2 for the highest
  root theta (the ``fund_form`` matrix equals the inverse Cartan matrix
  times the symmetrizer, rescaled to this normalization);
* the Killing-dual form ``killing_dual_ip`` = ip_norm / (2 h^vee), which is
  the form induced on weights by the negative Killing form and the one the
  Casimir eigenvalue is measured against:

      casimir(lambda) = <lambda, lambda + 2 rho> / (2 h^vee).

Everything is derived from the Cartan matrix at build time; the dual
Coxeter number is recomputed as 1 + <rho, theta> and the stated diagram
involution for -w0 is verified to permute the positive roots.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .errors import DomainError

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


def _cartan_matrix(family: str, n: int):
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2

    def edge(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if family == "A":
        for i in range(n - 1):
            edge(i, i + 1)
    elif family == "B":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 2, n - 1, -2, -1)  # last simple root is short
    elif family == "C":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 2, n - 1, -1, -2)  # last simple root is long
    elif family == "D":
        for i in range(n - 3):
            edge(i, i + 1)
        edge(n - 3, n - 2)
        edge(n - 3, n - 1)
    elif family == "E":
        chain = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)][: n - 2]
        for i, j in chain:
            edge(i, j)
        edge(1, 3)
    elif family == "F":
        edge(0, 1)
        edge(1, 2, -2, -1)
        edge(2, 3)
    elif family == "G":
        edge(0, 1, -1, -3)
    return tuple(tuple(row) for row in c)


def _minus_w0_perm(family: str, n: int):
    perm = list(range(n))
    if family == "A":
        perm = list(reversed(perm))
    elif family == "D" and n % 2 == 1:
        perm[n - 2], perm[n - 1] = perm[n - 1], perm[n - 2]
    elif family == "E" and n == 6:
        perm[0], perm[5] = perm[5], perm[0]
        perm[2], perm[4] = perm[4], perm[2]
    return tuple(perm)


def _symmetrizer(cartan):
    """d_i = <alpha_i, alpha_i>/2 up to overall scale, via graph traversal."""
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(cartan[j][i], cartan[i][j])
                stack.append(j)
    if any(x is None for x in d):
        raise DomainError("Dynkin diagram is not connected")
    return d


def _positive_roots(cartan):
    """All positive roots as (fund_coords, root_coords) pairs, by height."""
    n = len(cartan)
    roots = {}
    layer = []
    for i in range(n):
        rc = tuple(1 if k == i else 0 for k in range(n))
        roots[rc] = cartan[i]
        layer.append(rc)
    while layer:
        nxt = []
        for rc in layer:
            fund = roots[rc]
            for j in range(n):
                # length p of the backward alpha_j-string through this root
                p = 0
                back = list(rc)
                while True:
                    back[j] -= 1
                    if back[j] < 0 or tuple(back) not in roots:
                        break
                    p += 1
                if p - fund[j] >= 1:
                    up = list(rc)
                    up[j] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots[up] = tuple(
                            f + c for f, c in zip(fund, cartan[j])
                        )
                        nxt.append(up)
        layer = nxt
    return [(roots[rc], rc) for rc in roots]


@dataclass(frozen=True, eq=False)
class RootSystemData:
    """Immutable root-system tables for one simple type.

    Instances are cached singletons per (family, rank); identity equality
    is intentional.
    """

    family: str
    rank: int
    cartan: tuple
    pos_roots_fund: tuple
    pos_roots_rootc: tuple
    highest_root: tuple
    rho: tuple
    fund_form: tuple
    symmetrizer: tuple
    dual_coxeter: int
    dim_g: int
    minus_w0: tuple

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def __repr__(self):
        return f"RootSystemData({self.name})"


def build(name: str) -> RootSystemData:
    """Construct the root system ``name`` (e.g. "A2", "G2", "E8").

    The result is a cached singleton: equal names (case-insensitively)
    return the identical object, so identity equality is safe downstream.
    """
    return _build(str(name).strip().upper())


@lru_cache(maxsize=None)
def _build(name: str) -> RootSystemData:
    if len(name) < 2 or name[0] not in _RANK_RANGE or not name[1:].isdigit():
        raise DomainError(f"unknown simple type {name!r}")
    family, n = name[0], int(name[1:])
    low, high = _RANK_RANGE[family]
    if n < low or (high is not None and n > high):
        raise DomainError(f"rank {n} out of range for family {family}")

    cartan = _cartan_matrix(family, n)
    d = _symmetrizer(cartan)
    pos = _positive_roots(cartan)
    pos.sort(key=lambda fr: (sum(fr[1]), fr[1]))
    fund_list = tuple(f for f, _ in pos)
    rootc_list = tuple(r for _, r in pos)

    heights = [sum(rc) for rc in rootc_list]
    top = max(heights)
    candidates = [i for i, h in enumerate(heights) if h == top]
    if len(candidates) != 1:
        raise DomainError("highest root is not unique; bad Cartan data")
    theta_fund = fund_list[candidates[0]]
    theta_rootc = rootc_list[candidates[0]]

    # rescale the symmetrizer so that <theta, theta> = 2
    theta_sq = sum(
        theta_rootc[i] * theta_rootc[j] * cartan[i][j] * d[j]
        for i in range(n)
        for j in range(n)
    )
    factor = Fraction(2) / theta_sq
    d = [x * factor for x in d]

    cinv = linalg.inverse(linalg.mat(cartan))
    fund_form = tuple(
        tuple(cinv[i][j] * d[j] for j in range(n)) for i in range(n)
    )
    if not linalg.is_symmetric(fund_form):
        raise DomainError("fundamental form failed symmetry; bad Cartan data")

    rho = tuple(1 for _ in range(n))
    rho_theta = sum(theta_rootc[k] * d[k] for k in range(n))
    if rho_theta.denominator != 1:
        raise DomainError("dual Coxeter number is not integral")
    hvee = int(rho_theta) + 1

    perm = _minus_w0_perm(family, n)
    pos_set = set(fund_list)
    for v in fund_list:
        image = tuple(v[perm[i]] for i in range(n))
        if image not in pos_set:
            raise DomainError("-w0 involution does not preserve roots")

    return RootSystemData(
        family=family,
        rank=n,
        cartan=cartan,
        pos_roots_fund=fund_list,
        pos_roots_rootc=rootc_list,
        highest_root=theta_fund,
        rho=rho,
        fund_form=fund_form,
        symmetrizer=tuple(d),
        dual_coxeter=hvee,
        dim_g=2 * len(fund_list) + n,
        minus_w0=perm,
    )


def check_weight(rs: RootSystemData, weight) -> tuple:
    w = tuple(weight)
    if len(w) != rs.rank:
        raise DomainError(
            f"weight has {len(w)} coordinates, expected {rs.rank}"
        )
    if not all(isinstance(x, int) or Fraction(x).denominator == 1 for x in w):
        raise DomainError("weight coordinates must be integers")
    return tuple(int(x) for x in w)


def is_dominant(weight) -> bool:
    return all(x >= 0 for x in weight)


def ip_norm(rs: RootSystemData, u, v) -> Fraction:
    """Inner product in the normalization <theta, theta> = 2."""
    total = Fraction(0)
    form = rs.fund_form
    for i, ui in enumerate(u):
        if ui:
            row = form[i]
            total += ui * sum(row[j] * vj for j, vj in enumerate(v) if vj)
    return total


def killing_dual_ip(rs: RootSystemData, u, v) -> Fraction:
    """Inner product induced by the negative Killing form on weights."""
    return ip_norm(rs, u, v) / (2 * rs.dual_coxeter)


def casimir(rs: RootSystemData, weight) -> Fraction:
    """Casimir eigenvalue <lambda, lambda + 2 rho> in Killing-dual units."""
    lam = check_weight(rs, weight)
    if not is_dominant(lam):
        raise DomainError("casimir expects a dominant weight")
    shifted = tuple(x + 2 for x in lam)
    return killing_dual_ip(rs, lam, shifted)


def simple_reflection(rs: RootSystemData, j: int, weight):
    """s_j(weight) in fundamental coordinates."""
    coeff = weight[j]
    return tuple(w - coeff * c for w, c in zip(weight, rs.cartan[j]))


def dominant_rep(rs: RootSystemData, weight):
    """The dominant representative of the Weyl orbit of ``weight``."""
    v = tuple(weight)
    while True:
        j = next((i for i, x in enumerate(v) if x < 0), None)
        if j is None:
            return v
        v = simple_reflection(rs, j, v)


def weyl_orbit(rs: RootSystemData, dominant_weight):
    """The full Weyl orbit of a dominant weight, as a sorted tuple."""
    seen = {tuple(dominant_weight)}
    stack = [tuple(dominant_weight)]
    while stack:
        v = stack.pop()
        for j in range(rs.rank):
            w = simple_reflection(rs, j, v)
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return tuple(sorted(seen))


def contragredient_weight(rs: RootSystemData, weight):
    """Highest weight of the dual representation: -w0 applied to weight."""
    w = check_weight(rs, weight)
    return tuple(w[rs.minus_w0[i]] for i in range(rs.rank))
