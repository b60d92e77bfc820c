import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liespec.catalog import BUILTIN_EMBEDDINGS
from liespec.errors import DomainError, InadmissibleMetricError
from liespec.groups import GroupSpec, biinvariant_spectrum
from liespec.natred import (
    BiInvariantOperator,
    NatRedMetric,
    beta_factors,
    containment_check,
    f_map,
    f_map_inverse,
    natred_eigenvalue,
    natred_spectrum,
    natred_terms,
)
from liespec.rootdata import build

A1 = build("A1")
A2 = build("A2")
B2 = build("B2")
STD = BUILTIN_EMBEDDINGS["a1-in-a2-standard"]
SO4 = BUILTIN_EMBEDDINGS["a1xa1-in-b2"]
IDA2 = BUILTIN_EMBEDDINGS["identity-a2"]


def metric(t, t1, emb=STD, group=A2):
    return NatRedMetric(
        group=group, emb=emb, base_scale=t, fiber_scales=(t1,)
    )


def test_eigenvalue_closed_form():
    m = metric(1, F(1, 2))
    # c(sigma) + (t/t1 - 1) * c(tau)/j = 4/9 + 1 * (3/8)/(3/2)
    assert natred_eigenvalue(m, (1, 0), ((1,),)) == F(25, 36)
    assert natred_eigenvalue(m, (1, 0), ((0,),)) == F(4, 9)
    assert natred_eigenvalue(m, (1, 1), ((2,),)) == F(5, 3)
    m3 = metric(1, F(1, 3))
    assert natred_eigenvalue(m3, (1, 0), ((1,),)) == F(4, 9) + F(1, 2)


def test_terms_small_table():
    m = metric(1, F(1, 2))
    t = natred_spectrum(m, F(25, 36))
    # both 3-dimensional classes contribute at 4/9 (trivial fiber part)
    # and at 25/36 (doublet fiber part, dim 3 * mult 1 * dim 2 each)
    assert dict(t.entries) == {F(0): 1, F(4, 9): 6, F(25, 36): 12}
    assert t.unit == "raw" and t.complete


def test_terms_agree_with_evaluator():
    rng = random.Random(3)
    for _ in range(6):
        t = F(rng.randint(2, 9), rng.randint(1, 4))
        t1 = t * F(rng.choice([1, 2, 3]), rng.choice([4, 5, 7]))
        m = metric(t, t1)
        for sigma, tau, mult, eig in natred_terms(m, 3):
            assert mult > 0
            assert natred_eigenvalue(m, sigma, tau) == eig


def test_full_group_fiber_collapses_to_biinvariant():
    rng = random.Random(41)
    for _ in range(5):
        s = F(rng.randint(1, 8), rng.randint(1, 5))
        t = s + F(rng.randint(1, 4), rng.randint(1, 3))
        m = NatRedMetric(
            group=A2, emb=IDA2, base_scale=t, fiber_scales=(s,)
        )
        ref = biinvariant_spectrum(
            GroupSpec(factors=(A2,), scales=(s,)), 5
        )
        assert natred_spectrum(m, 5).entries == ref.entries


def test_trivial_subgroup_collapses_to_biinvariant():
    from liespec.branching import EmbeddingSpec

    emb = EmbeddingSpec(ambient=A2, factors=(), restriction=())
    m = NatRedMetric(group=A2, emb=emb, base_scale=F(1, 2), fiber_scales=())
    ref = biinvariant_spectrum(
        GroupSpec(factors=(A2,), scales=(F(1, 2),)), 5
    )
    assert natred_spectrum(m, 5).entries == ref.entries


def test_beta_factors():
    assert beta_factors(metric(1, F(1, 2))) == (F(1),)
    assert beta_factors(metric(1, F(1, 3))) == (F(1, 2),)
    assert beta_factors(metric(1, 2)) == (F(-2),)
    m = NatRedMetric(
        group=B2, emb=SO4, base_scale=1, fiber_scales=(F(1, 2), F(1, 3))
    )
    assert beta_factors(m) == (F(1), F(1, 2))


def test_f_map_frozen_and_errors():
    op = BiInvariantOperator(coeffs=(F(1, 2), F(1, 3)))
    out = f_map(op, 1)
    assert out.coeffs == (F(1), F(1, 2))
    back = f_map_inverse(out, 1)
    assert back.coeffs == op.coeffs
    with pytest.raises(InadmissibleMetricError):
        f_map(op, F(1, 2))  # shift not above every coefficient
    with pytest.raises(InadmissibleMetricError):
        f_map_inverse(op, 0)
    with pytest.raises(DomainError):
        BiInvariantOperator(coeffs=(F(0),))


@settings(max_examples=80, deadline=None)
@given(
    st.integers(1, 30),
    st.integers(1, 12),
    st.integers(1, 30),
    st.integers(1, 12),
)
def test_f_map_round_trip(an, ad, bn, bd):
    a = F(an, ad)
    b = F(bn, bd)
    op = BiInvariantOperator(coeffs=(a,))
    if b <= a:
        with pytest.raises(InadmissibleMetricError):
            f_map(op, b)
        return
    assert f_map_inverse(f_map(op, b), b).coeffs == (a,)
    assert f_map(f_map_inverse(op, b), b).coeffs == (a,)


def test_mode_classification():
    assert metric(1, F(1, 2)).mode == "riemannian-fibers"
    assert metric(1, 3).mode == "semi-riemannian"
    mixed = NatRedMetric(
        group=B2, emb=SO4, base_scale=1, fiber_scales=(F(1, 2), 3)
    )
    assert mixed.mode == "semi-riemannian"


def test_semi_riemannian_tables_complete_and_nonnegative():
    m = metric(1, 2)
    small = natred_spectrum(m, 2)
    assert small.complete
    assert all(e >= 0 for e, _ in small.entries)
    # re-enumerating with a larger cutoff finds nothing new below 2
    big = natred_spectrum(m, 6)
    assert big.restrict(2).entries == small.entries


def test_riemannian_fibers_tables_complete():
    m = metric(1, F(1, 3))
    small = natred_spectrum(m, F(3, 2))
    big = natred_spectrum(m, 5)
    assert big.restrict(F(3, 2)).entries == small.entries


def test_equal_scales_rejected():
    with pytest.raises(InadmissibleMetricError):
        metric(1, 1)
    with pytest.raises(InadmissibleMetricError):
        NatRedMetric(
            group=B2, emb=SO4, base_scale=2, fiber_scales=(F(1, 2), 2)
        )


def test_metric_validation():
    with pytest.raises(DomainError):
        metric(0, F(1, 2))
    with pytest.raises(DomainError):
        metric(1, -1)
    with pytest.raises(DomainError):
        NatRedMetric(group=A2, emb=STD, base_scale=1, fiber_scales=())
    with pytest.raises(DomainError):
        NatRedMetric(group=B2, emb=STD, base_scale=1, fiber_scales=(F(1, 2),))


def test_containment_witnessed():
    report = containment_check(metric(1, F(1, 2)), 0, 8)
    assert report["status"] == "witnessed"
    assert report["zeta"] == F(4, 9)
    assert report["gamma"] == F(1, 4)
    assert report["value"] == F(25, 36)
    assert report["multiplicity"] == 12
    report = containment_check(metric(1, F(1, 3)), 0, 8)
    assert report["status"] == "witnessed"
    assert report["gamma"] == F(1, 2)
    assert report["value"] == F(17, 18)


def test_containment_edge_cases():
    from liespec.branching import EmbeddingSpec

    emb = EmbeddingSpec(ambient=A2, factors=(), restriction=())
    m0 = NatRedMetric(group=A2, emb=emb, base_scale=1, fiber_scales=())
    assert containment_check(m0, 0, 4)["status"] == "vacuous"
    with pytest.raises(InadmissibleMetricError):
        containment_check(metric(1, 2), 0, 4)
    with pytest.raises(DomainError):
        containment_check(metric(1, F(1, 2)), 5, 4)
    tiny = containment_check(metric(1, F(1, 2)), 0, F(1, 8))
    assert tiny["status"] == "inconclusive"


def test_json_round_trip():
    m = NatRedMetric(
        group=B2, emb=SO4, base_scale=F(3, 2), fiber_scales=(F(1, 2), F(1, 3))
    )
    back = NatRedMetric.from_json_dict(m.to_json_dict())
    assert back.group is m.group
    assert back.base_scale == m.base_scale
    assert back.fiber_scales == m.fiber_scales
    named = NatRedMetric.from_json_dict(
        {"group": "A2", "embedding": "a1-in-a2-standard", "t": "1",
         "t_i": ["1/2"]}
    )
    assert named.emb is STD


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([F(1, 4), F(1, 2), F(2, 3), F(3, 2), F(3), F(5)]))
def test_spectrum_nonnegative_all_modes(t1):
    m = metric(1, t1)
    table = natred_spectrum(m, 2)
    assert all(e >= 0 for e, _ in table.entries)
    assert table.multiplicity(F(0)) == 1
