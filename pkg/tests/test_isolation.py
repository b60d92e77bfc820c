import random
from fractions import Fraction as F

import pytest

from liespec.catalog import (
    BUILTIN_EMBEDDINGS,
    BUILTIN_GROUPS,
    BUILTIN_LATTICES,
)
from liespec.errors import DomainError, UnsupportedDimensionError
from liespec.groups import GroupSpec
from liespec.isolation import (
    GammaVector,
    finiteness_window,
    gamma_invariants,
    homothety_invariant,
    isolation_scan,
    torus_search,
)
from liespec.lattices import (
    Lattice,
    congruent,
    dual,
    systole,
    torus_spectrum,
)
from liespec.linalg import inverse
from liespec.natred import NatRedMetric
from liespec.rootdata import build

from helpers import random_rational_basis

A1 = build("A1")
A2 = build("A2")
Z2 = BUILTIN_LATTICES["identity2"]
HEX = BUILTIN_LATTICES["hexagonal"]
STD = BUILTIN_EMBEDDINGS["a1-in-a2-standard"]
IDA2 = BUILTIN_EMBEDDINGS["identity-a2"]


def test_gamma_vector_validation():
    GammaVector(kind="group", dim=2, entries=(F(1), F(2)))
    GammaVector(kind="torus", dim=2, entries=(F(1), F(1), F(2)))
    with pytest.raises(DomainError):
        GammaVector(kind="flat", dim=1, entries=(F(1),))
    with pytest.raises(DomainError):
        GammaVector(kind="torus", dim=2, entries=(F(1), F(2)))
    with pytest.raises(DomainError):
        GammaVector(kind="group", dim=1, entries=(F(0),))
    v = GammaVector(kind="torus", dim=2, entries=(F(2), F(1), F(2)))
    assert v.value_set() == (F(1), F(2))


def test_group_invariants():
    g = gamma_invariants(BUILTIN_GROUPS["su2"])
    assert g.kind == "group" and g.entries == (F(3, 8),)
    assert gamma_invariants(BUILTIN_GROUPS["su3"]).entries == (F(4, 9),)
    # the marking computes on the simply connected cover, so the central
    # quotient reports the same vector as its cover
    assert gamma_invariants(BUILTIN_GROUPS["so3"]).entries == (F(3, 8),)
    two = GroupSpec(factors=(A1, A2), scales=(F(1, 2), F(1)))
    assert gamma_invariants(two).entries == (F(3, 4), F(4, 9))


def test_torus_invariants():
    g = gamma_invariants(Z2)
    assert g.kind == "torus" and g.dim == 2
    assert g.entries == (F(1), F(1), F(2))
    assert gamma_invariants(HEX).entries == (F(2, 3), F(2, 3), F(2, 3))


def test_torus_invariants_determine_dual_form():
    rng = random.Random(77)
    for _ in range(10):
        m = rng.randint(2, 4)
        lat = Lattice.from_basis(random_rational_basis(rng, m))
        g = gamma_invariants(lat)
        q = inverse(lat.gram)
        at = m
        # diagonal entries first, then pair sums in index order
        for j in range(m):
            assert g.entries[j] == q[j][j]
        for j in range(m):
            for k in range(j + 1, m):
                assert g.entries[at] == q[j][j] + 2 * q[j][k] + q[k][k]
                at += 1


def test_torus_invariants_are_eigenvalues():
    rng = random.Random(13)
    for _ in range(8):
        m = rng.randint(1, 3)
        lat = Lattice.from_basis(random_rational_basis(rng, m))
        g = gamma_invariants(lat)
        table = torus_spectrum(lat, max(g.entries))
        for val in g.entries:
            assert table.multiplicity(val) > 0


def test_scan_reports_no_neighbors():
    m = NatRedMetric(group=A2, emb=STD, base_scale=1, fiber_scales=(F(1, 2),))
    report = isolation_scan(m, F(1, 10), 3, 4)
    assert report["grid"]["axes"] == 2
    assert report["grid"]["points"] == 9
    assert report["grid"]["compared"] == 8
    assert report["grid"]["skipped_inadmissible"] == []
    assert report["grid"]["skipped_equivalent"] == 0
    assert report["isospectral_neighbors"] == []
    assert report["min_table_distance"] >= 1


def test_scan_steps_one_only_center():
    m = NatRedMetric(group=A2, emb=STD, base_scale=1, fiber_scales=(F(1, 2),))
    report = isolation_scan(m, F(1, 10), 1, 2)
    assert report["grid"]["points"] == 1
    assert report["grid"]["compared"] == 0
    assert report["isospectral_neighbors"] == []
    assert report["min_table_distance"] is None


def test_scan_skips_equivalent_when_subgroup_fills_group():
    # K = G: the base direction is vacuous, so points differing only in t
    # define the center's metric and are skipped rather than reported as
    # isospectral neighbors
    m = NatRedMetric(group=A2, emb=IDA2, base_scale=1, fiber_scales=(F(1, 2),))
    report = isolation_scan(m, F(1, 10), 3, 3)
    assert report["grid"]["skipped_equivalent"] == 2
    assert report["isospectral_neighbors"] == []


def test_scan_validation():
    m = NatRedMetric(group=A2, emb=STD, base_scale=1, fiber_scales=(F(1, 2),))
    with pytest.raises(DomainError):
        isolation_scan(m, 1, 3, 2)
    with pytest.raises(DomainError):
        isolation_scan(m, F(1, 2), 0, 2)


def test_finiteness_window():
    assert finiteness_window(2, 3, 2, 1) == F(1, 36)
    assert finiteness_window(F(1, 2), 1, 3, 2) == 16
    with pytest.raises(DomainError):
        finiteness_window(0, 1, 2, 1)
    with pytest.raises(DomainError):
        finiteness_window(1, 1, 2, 0)


def test_homothety_invariant_even():
    table = torus_spectrum(Z2, 4)
    assert homothety_invariant(table, 2, 1) == 1
    # rescale the lattice: eigenvalues divide by r^2, volume gains r^n
    for r in (2, 3, F(1, 2)):
        scaled = Lattice.from_basis(
            tuple(tuple(r * x for x in row) for row in ((1, 0), (0, 1)))
        )
        t = torus_spectrum(scaled, 4)
        assert homothety_invariant(t, 2, r**2) == 1


def test_homothety_invariant_odd():
    eye3 = Lattice.from_basis(
        ((F(1), 0, 0), (0, F(1), 0), (0, 0, F(1)))
    )
    t = torus_spectrum(eye3, 2)
    assert homothety_invariant(t, 3, 1) == (F(1), 3)
    doubled = Lattice.from_basis(
        ((F(2), 0, 0), (0, F(2), 0), (0, 0, F(2)))
    )
    td = torus_spectrum(doubled, 2)
    assert homothety_invariant(td, 3, 8) == (F(1), 3)


def test_homothety_invariant_errors():
    table = torus_spectrum(Z2, 4)
    with pytest.raises(DomainError):
        homothety_invariant(table, 2, 0)
    with pytest.raises(DomainError):
        homothety_invariant(table, 0, 1)
    empty = torus_spectrum(Z2, F(1, 2))  # only the constant function
    with pytest.raises(DomainError):
        homothety_invariant(empty, 2, 1)


def test_torus_search_small():
    found = torus_search([1, 2], 2, F(1, 2), F(1, 2))
    assert any(congruent(lat, Z2) for lat in found)
    for i, a in enumerate(found):
        # reconstruction respects the requested bounds and value set
        assert systole(dual(a)) >= F(1, 2)
        assert a.det_gram >= F(1, 4)  # volume at least 1/2
        vals = gamma_invariants(a).value_set()
        assert set(vals) <= {F(1), F(2)}
        for b in found[i + 1 :]:
            assert not congruent(a, b)


def test_torus_search_recovers_hexagonal():
    found = torus_search([F(2, 3)], 2, F(1, 2), 1)
    assert len(found) == 1
    assert congruent(found[0], HEX)


def test_torus_search_edges():
    assert torus_search([], 2, 1, 1) == []
    assert torus_search([F(1, 2)], 2, 1, 1) == []  # not PD after filling
    one = torus_search([1], 1, F(1, 2), F(1, 2))
    assert len(one) == 1 and one[0].gram == ((F(1),),)
    with pytest.raises(UnsupportedDimensionError):
        torus_search([1], 5, 1, 1)
    with pytest.raises(DomainError):
        torus_search([1], 2, 0, 1)
