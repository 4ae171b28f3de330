import json
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from hodge_degrees import new_datum
from hodge_degrees.degrees import UnsupportedCaseError, lambda1_degree, lambda1e_degree
from hodge_degrees.localization import (
    Contribution,
    DegenerateRelationError,
    LocalizationRelation,
    fixed_locus_data,
    nonorbifold_relation,
    orbifold_relation,
    relation_report,
    solve,
)


def test_orbifold_relation_example():
    rel = orbifold_relation(new_datum(5, [3, 4, 4, 4]), 3)
    assert rel.alpha == 1
    assert rel.beta == Fraction(-1, 25)
    assert solve(rel) == Fraction(1, 25)


def test_orbifold_relation_outside_its_case():
    with pytest.raises(UnsupportedCaseError):
        orbifold_relation(new_datum(7, [5, 5, 5, 6]), 1)
    with pytest.raises(UnsupportedCaseError):
        orbifold_relation(new_datum(5, [1, 4, 2, 3]), 1)


def test_orbifold_relation_sends_largest_age_to_infinity():
    # ages for e=3: 4/5 at point 2, so Gamma_{1,3,4} carries the constant
    rel = orbifold_relation(new_datum(5, [4, 3, 4, 4]), 3)
    top = [c for c in rel.contributions if len(c.label) == 3]
    assert top[0].label == (1, 3, 4)
    assert solve(rel) == Fraction(1, 25)


@pytest.mark.parametrize(
    "d, m, expected",
    [(2, [1, 1, 1, 1], Fraction(1, 4)), (3, [1, 1, 2, 2], Fraction(2, 9)), (5, [1, 4, 2, 3], Fraction(4, 25))],
)
def test_nonorbifold_examples(d, m, expected):
    rel = nonorbifold_relation(new_datum(d, m))
    assert solve(rel) == expected
    assert rel.alpha == 1
    assert sum(c.alpha_part for c in rel.contributions) == rel.alpha
    assert sum(c.beta_part for c in rel.contributions) == rel.beta


def test_fixed_locus_invariants_hyperelliptic():
    loci = {l.label: l for l in fixed_locus_data(new_datum(2, [1, 1, 1, 1]))}
    assert loci[(1, 2, 3)].genus == 1
    assert all(loci[(j,)].q == 1 for j in (1, 2, 3))
    for pair in ((1, 2), (1, 3), (2, 3)):
        assert loci[pair].q == 2 and loci[pair].genus == 0


def test_arithmetic_genus_may_be_negative_on_disconnected_loci():
    # over infinity sit two copies of P^1 (gcd(0, 0, 2) = 2 components)
    loci = {l.label: l for l in fixed_locus_data(new_datum(2, [0, 0, 1, 1]))}
    assert loci[(1, 2)].genus == -1 and loci[(1, 2)].components == 2
    assert solve(nonorbifold_relation(new_datum(2, [0, 0, 1, 1]))) == 0


def test_solve_degenerate():
    rel = LocalizationRelation.from_contributions([Contribution((), Fraction(0), Fraction(0))])
    with pytest.raises(DegenerateRelationError):
        solve(rel)
    assert solve(LocalizationRelation(Fraction(1), Fraction(-1, 25), ())) == Fraction(1, 25)


def test_report_is_json():
    x = new_datum(6, [2, 4, 3, 3])
    report = relation_report(x, nonorbifold_relation(x))
    text = json.dumps(report)
    assert json.loads(text)["agree"] is True
    assert len(report["contributions"]) == 8


@st.composite
def connected_four(draw, d_max=40):
    d = draw(st.integers(1, d_max))
    m = draw(st.lists(st.integers(0, d - 1), min_size=3, max_size=3))
    x = new_datum(d, m + [-sum(m)])
    assume(x.is_connected())
    return x


@given(connected_four())
def test_nonorbifold_matches_closed_form_for_every_infinity_point(x):
    values = {solve(nonorbifold_relation(x, infinity_point=p)) for p in range(1, 5)}
    assert values == {lambda1_degree(x)}


@given(connected_four())
def test_orbifold_matches_closed_form(x):
    for e in range(1, x.d):
        try:
            rel = orbifold_relation(x, e)
        except UnsupportedCaseError:
            continue
        assert solve(rel) == lambda1e_degree(x, e)
