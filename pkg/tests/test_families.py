"""Exception-family generation, recognition, and census."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from arcconn import (
    Digraph,
    Family,
    FamilyParams,
    InvalidParams,
    family_census,
    generate,
    girth,
    lambda_prime_exists,
    match_family,
)
from arcconn.families import ORIENT_CHOICES, SIZE_NAMES, _params_for_order

from .conftest import stratum_digraphs


def all_params_up_to(n_max: int) -> list[FamilyParams]:
    out = []
    for n in range(4, n_max + 1):
        out.extend(_params_for_order(n))
    return out


def test_parse_family_names():
    assert Family.parse("H3") is Family.H3
    assert Family.parse("h3") is Family.H3
    with pytest.raises(InvalidParams):
        Family.parse("H9")


def test_param_validation_arity():
    with pytest.raises(InvalidParams):
        FamilyParams(Family.H1, (1, 2))
    with pytest.raises(InvalidParams):
        FamilyParams(Family.H2, (1, 1), ("xz",))


def test_param_validation_negative_and_h5_lower_bound():
    with pytest.raises(InvalidParams):
        FamilyParams(Family.H2, (-1, 0))
    with pytest.raises(InvalidParams):
        FamilyParams(Family.H5, (0,), ("xz",))
    FamilyParams(Family.H5, (1,), ("xz",))  # minimal legal


def test_param_validation_orientation_tokens():
    with pytest.raises(InvalidParams):
        FamilyParams(Family.H6, (0, 0), ("yv",))
    FamilyParams(Family.H6, (0, 0), ("zx",))
    FamilyParams(Family.H7, (), ("xz", "vy"))


def test_generate_bare_four_cycle(four_cycle):
    D = generate(FamilyParams(Family.H1, (0, 0, 0, 0)))
    assert D == four_cycle


def test_generated_members_are_strong_girth_four():
    for params in all_params_up_to(7):
        D = generate(params)
        assert D.n == params.n
        assert D.is_strong()
        assert girth(D) == 4


def test_generated_members_are_never_lambda_prime_connected():
    for params in all_params_up_to(7):
        assert not lambda_prime_exists(generate(params))


def test_match_bare_four_cycle(four_cycle):
    match = match_family(four_cycle)
    assert match is not None and match.family is Family.H1
    assert match.params.sizes == (0, 0, 0, 0)


def test_match_l8_is_none(l8):
    assert match_family(l8) is None


def test_match_assigns_consistent_roles():
    params = FamilyParams(Family.H4, (2,), ("yv",))
    D = generate(params)
    match = match_family(D)
    assert match is not None and match.family is Family.H4
    roles = match.roles
    u, v, w = roles["u"], roles["v"], roles["w"]
    assert D.has_arc(u, v) and D.has_arc(v, w)
    assert D.has_arc(roles["y"], v)


@given(st.sampled_from(all_params_up_to(7)), st.randoms(use_true_random=False))
def test_match_survives_relabeling(params, rnd):
    D = generate(params)
    perm = list(range(D.n))
    rnd.shuffle(perm)
    match = match_family(D.relabel(perm))
    assert match is not None
    regenerated = generate(match.params)
    assert regenerated.canonical_form() == D.canonical_form()


@given(stratum_digraphs(5))
def test_every_stratum_graph_at_n5_is_a_family_member(D):
    assert match_family(D) is not None


def test_census_n4():
    members = family_census(4)
    assert len(members) == 1
    params, D = members[0]
    assert params.family is Family.H1 and D.m == 4


def test_census_n5():
    members = family_census(5)
    families = sorted(p.family.value for p, _ in members)
    assert families == ["H1", "H2", "H6"]


def test_census_rejects_tiny_orders():
    with pytest.raises(InvalidParams):
        family_census(3)


def test_census_has_no_isomorphic_duplicates():
    for n in (4, 5, 6, 7):
        members = family_census(n)
        forms = {D.canonical_form() for _, D in members}
        assert len(forms) == len(members)
        for params, D in members:
            assert params.n == n == D.n


def test_match_labels_respect_first_family_precedence():
    """Distinct parameterizations can describe the same graph; the matcher
    answers with the first family, in H1..H7 order, containing it."""
    overlap = generate(FamilyParams(Family.H3, (0, 0, 2)))
    match = match_family(overlap)
    assert match is not None and match.family is Family.H2
    assert match.params.sizes == (2, 0)

    h5 = generate(FamilyParams(Family.H5, (1,), ("xz",)))
    match = match_family(h5)
    assert match is not None and match.family is Family.H4
