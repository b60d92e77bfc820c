from fractions import Fraction as F

import pytest

from liespec.catalog import (
    BUILTIN_EMBEDDINGS,
    BUILTIN_GROUPS,
    resolve_group,
)
from liespec.errors import DomainError
from liespec.groups import (
    GroupSpec,
    admissible_tuples,
    biinvariant_spectrum,
    center_admissible,
    factor_lambda1,
    normal_quotient_spectrum,
)
from liespec.rootdata import build
from liespec.weights import weyl_dim

SU2 = BUILTIN_GROUPS["su2"]
SU3 = BUILTIN_GROUPS["su3"]
SO3 = BUILTIN_GROUPS["so3"]


def test_su2_biinvariant_table():
    t = biinvariant_spectrum(SU2, 10)
    assert t.unit == "raw" and t.complete
    expect = {F(n * (n + 2), 8): (n + 1) ** 2 for n in range(9)}
    assert dict(t.entries) == expect


def test_so3_even_classes_only():
    t = biinvariant_spectrum(SO3, 10)
    expect = {F(n * (n + 2), 8): (n + 1) ** 2 for n in range(0, 9, 2)}
    assert dict(t.entries) == expect
    assert t.lambda1() == 1 and t.multiplicity(F(1)) == 9


def test_su3_lambda1():
    t = biinvariant_spectrum(SU3, F(4, 9))
    assert t.entries == ((F(0), 1), (F(4, 9), 18))


def test_center_admissibility():
    assert center_admissible(SO3, ((2,),))
    assert not center_admissible(SO3, ((1,),))
    assert center_admissible(SU2, ((1,),))
    with pytest.raises(DomainError):
        center_admissible(SU2, ((1,), (1,)))


def test_bad_gamma_rejected():
    # pairing 1/3 with the root alpha = 2*omega of su(2) is not integral
    with pytest.raises(DomainError):
        GroupSpec(factors=(build("A1"),), gamma=(((F(1, 3),),),))
    GroupSpec(factors=(build("A1"),), gamma=(((F(1, 2),),),))


def test_scaling_covariance():
    plain = biinvariant_spectrum(SU2, 3)
    scaled = biinvariant_spectrum(
        GroupSpec(factors=(build("A1"),), scales=(F(1, 2),)), 6
    )
    assert [(2 * e, m) for e, m in plain.entries] == list(scaled.entries)


def test_product_group_spectrum():
    g = GroupSpec(factors=(build("A1"), build("A1")))
    t = biinvariant_spectrum(g, 2)
    # eigenvalue n(n+2)/8 + m(m+2)/8 with multiplicity ((n+1)(m+1))^2
    expect = {}
    for n in range(5):
        for m in range(5):
            e = F(n * (n + 2) + m * (m + 2), 8)
            if e <= 2:
                expect[e] = expect.get(e, 0) + ((n + 1) * (m + 1)) ** 2
    assert dict(t.entries) == expect


def test_admissible_tuples_budget():
    tups = admissible_tuples(SU3, F(4, 9))
    assert sorted(tups) == [
        (((0, 0),), F(0)),
        (((0, 1),), F(4, 9)),
        (((1, 0),), F(4, 9)),
    ]


def test_factor_lambda1():
    val, wit = factor_lambda1(build("A1"), 1)
    assert val == F(3, 8) and wit == (1,)
    val, wit = factor_lambda1(build("A2"), 1)
    assert val == F(4, 9)
    val, _ = factor_lambda1(build("A2"), F(1, 3))
    assert val == F(4, 3)
    with pytest.raises(DomainError):
        factor_lambda1(build("A1"), 0)


def test_normal_quotient_identity_is_point():
    emb = BUILTIN_EMBEDDINGS["identity-a2"]
    t = normal_quotient_spectrum(build("A2"), emb, 1, 10)
    assert t.entries == ((F(0), 1),)


def test_normal_quotient_sphere():
    # SU(3)/SU(2) with the normal metric: spherical reps (a, b) both
    # contribute; smallest nonzero eigenvalue comes from the two
    # 3-dimensional representations
    emb = BUILTIN_EMBEDDINGS["a1-in-a2-standard"]
    t = normal_quotient_spectrum(build("A2"), emb, 1, F(4, 9))
    assert t.entries == ((F(0), 1), (F(4, 9), 6))
    # total multiplicity of eigenvalue c should be dim * fixed-dim
    full = normal_quotient_spectrum(build("A2"), emb, 1, 2)
    assert full.multiplicity(F(1)) == weyl_dim(build("A2"), (1, 1)) * 1


def test_normal_quotient_requires_matching_ambient():
    emb = BUILTIN_EMBEDDINGS["a1-in-a2-standard"]
    with pytest.raises(DomainError):
        normal_quotient_spectrum(build("A3"), emb, 1, 1)
    with pytest.raises(DomainError):
        normal_quotient_spectrum(build("A2"), emb, 0, 1)


def test_group_json_round_trip():
    for name, gs in BUILTIN_GROUPS.items():
        back = GroupSpec.from_json_dict(gs.to_json_dict())
        assert tuple(f.name for f in back.factors) == tuple(
            f.name for f in gs.factors
        )
        assert back.gamma == gs.gamma
        assert back.scales == gs.scales
    assert resolve_group("su3").factors[0] is build("A2")


def test_group_validation():
    with pytest.raises(DomainError):
        GroupSpec(factors=())
    with pytest.raises(DomainError):
        GroupSpec(factors=(build("A1"),), scales=(0,))
    with pytest.raises(DomainError):
        GroupSpec(factors=(build("A1"),), scales=(1, 1))
    with pytest.raises(DomainError):
        GroupSpec(factors=(build("A1"),), gamma=(((1,), (1,)),))
