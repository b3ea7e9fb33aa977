"""Dimension formulas, Kodaira scaling, genus bounds, and growth fits."""

from itertools import combinations_with_replacement

import pytest

from symquot import (
    InsufficientDataError,
    KodairaDim,
    genus_bound,
    growth_exponent_check,
    invariant_dim_burnside,
    kodaira_scale,
    plurigenus_table,
    sym_dim,
)
from symquot.plurigenera import REGIME_GENERAL_TYPE, REGIME_NONNEGATIVE


def monomial_count(p, d):
    """Independent count of degree-d monomials in p variables."""
    return sum(1 for _ in combinations_with_replacement(range(p), d))


def test_sym_dim_frozen_values():
    assert sym_dim(0, 3) == 0
    assert all(sym_dim(1, d) == 1 for d in range(1, 10))
    assert sym_dim(3, 2) == 6


@pytest.mark.parametrize("p", range(0, 7))
@pytest.mark.parametrize("d", range(1, 6))
def test_sym_dim_matches_monomial_enumeration(p, d):
    assert sym_dim(p, d) == monomial_count(p, d)


def test_sym_dim_rejects_bad_input():
    with pytest.raises(ValueError):
        sym_dim(-1, 2)
    with pytest.raises(ValueError):
        sym_dim(2, 0)


def test_burnside_frozen_values():
    assert invariant_dim_burnside(1, 5) == 1
    assert invariant_dim_burnside(3, 2) == 6
    assert invariant_dim_burnside(2, 3) == 4


@pytest.mark.parametrize("p", range(0, 11))
@pytest.mark.parametrize("d", range(1, 11))
def test_burnside_equals_binomial_route(p, d):
    assert invariant_dim_burnside(p, d) == sym_dim(p, d)


@pytest.mark.parametrize("p", range(1, 11))
@pytest.mark.parametrize("d", range(2, 11))
def test_sym_dim_pascal_recurrence(p, d):
    assert sym_dim(p, d) == sym_dim(p - 1, d) + sym_dim(p, d - 1)
    assert sym_dim(p, 1) == p


@pytest.mark.parametrize("d", range(1, 10))
def test_sym_dim_monotonicity(d):
    for p in range(2, 8):
        assert sym_dim(p, d + 1) > sym_dim(p, d)
    for p in (0, 1):
        assert sym_dim(p, d + 1) == sym_dim(p, d)


def test_plurigenus_table_values_and_parity():
    table = plurigenus_table(2, 3, [(1, 2)])
    assert table.rows[0].p_m_sigma == 4
    assert table.rows[0].valid

    table = plurigenus_table(3, 2, [(1, 5)])
    assert table.rows[0].p_m_sigma == 15
    assert not table.rows[0].valid  # m * n = 3 is odd

    table = plurigenus_table(2, 4, [(2, 0)])
    assert table.rows[0].p_m_sigma == 0
    assert table.rows[0].valid


def test_plurigenus_table_validation():
    with pytest.raises(ValueError):
        plurigenus_table(1, 2, [(1, 1)])
    with pytest.raises(ValueError):
        plurigenus_table(2, 0, [(1, 1)])
    with pytest.raises(ValueError):
        plurigenus_table(2, 2, [(0, 1)])
    with pytest.raises(ValueError):
        plurigenus_table(2, 2, [(1, -1)])


def test_kodaira_scale():
    assert kodaira_scale(KodairaDim.minus_infinity(), 7).is_minus_infinity
    assert kodaira_scale(KodairaDim(0), 5) == KodairaDim(0)
    assert kodaira_scale(KodairaDim(2), 3) == KodairaDim(6)


def test_kodaira_dim_validation():
    with pytest.raises(ValueError):
        KodairaDim(-1)
    with pytest.raises(ValueError):
        KodairaDim.finite(3, ambient_dim=2)
    assert str(KodairaDim.minus_infinity()) == "-inf"
    assert str(KodairaDim(4)) == "4"


def test_genus_bound_values():
    assert genus_bound(REGIME_NONNEGATIVE, 5) == 5
    assert genus_bound(REGIME_GENERAL_TYPE, 5) == 6
    assert genus_bound(REGIME_NONNEGATIVE, 1) == 1


def test_genus_bound_rejects_unknown_regime():
    with pytest.raises(ValueError):
        genus_bound("ruled", 3)
    with pytest.raises(ValueError):
        genus_bound(REGIME_NONNEGATIVE, 0)


def test_growth_quadratic_input_degree_two_power():
    rows = [(m, m * m) for m in range(2, 41, 2)]
    slope = growth_exponent_check(rows, 2)
    assert abs(slope - 4) < 0.2


def test_growth_constant_input_is_flat():
    rows = [(m, 1) for m in range(2, 61, 2)]
    slope = growth_exponent_check(rows, 5)
    assert abs(slope) < 0.05


def test_growth_linear_input_degree_three_power():
    rows = [(m, m) for m in range(2, 61, 2)]
    slope = growth_exponent_check(rows, 3)
    assert abs(slope - 3) < 0.2


def test_growth_requires_three_rows():
    with pytest.raises(InsufficientDataError):
        growth_exponent_check([(2, 4), (4, 16)], 2)


def test_growth_parity_filter():
    # with odd n, odd-m rows are not asserted by the parity condition
    rows = [(m, m) for m in range(1, 8, 2)]  # only odd m
    with pytest.raises(InsufficientDataError):
        growth_exponent_check(rows, 2, n=3)
    even_rows = [(m, m) for m in range(2, 61, 2)]
    assert growth_exponent_check(even_rows, 2, n=3) == growth_exponent_check(
        even_rows, 2
    )


def test_growth_requires_distinct_m():
    with pytest.raises(InsufficientDataError):
        growth_exponent_check([(4, 5), (4, 5), (4, 5)], 2)
