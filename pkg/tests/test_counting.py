import math

import pytest

from partgen import counting
from partgen.counting import (ApproxKind, MAX_CAPACITY, approx_ratio,
                              build_tables, pentagonal_pn)
from partgen.errors import CapacityError, DomainError, NotTabulated

from oracles import (asc_compositions, brute_ones_total, brute_p,
                     brute_terminal, desc_compositions, desc_first_exact)


def test_p_against_brute_force(tables):
    for n in range(1, 21):
        assert tables.p(n) == brute_p(n)


def test_p_against_pentagonal_oracle(tables):
    oracle = pentagonal_pn(250)
    for n in range(251):
        assert tables.p(n) == oracle[n]


def test_p_conventions(tables):
    assert tables.p(0) == 1
    assert tables.p(-1) == 0
    assert tables.p(-7) == 0


def test_nac_against_brute_force(tables):
    for n in range(1, 17):
        for m in range(1, n + 1):
            assert tables.nac(n, m) == len(asc_compositions(n, m))


def test_ndcf_against_brute_force(tables):
    for n in range(1, 17):
        for m in range(1, n + 1):
            assert tables.ndcf(n, m) == len(desc_first_exact(n, m))


def test_ndcf_sums_to_p(tables):
    for n in range(1, 60):
        assert sum(tables.ndcf(n, m) for m in range(1, n + 1)) == tables.p(n)


def test_ntac_against_brute_force(tables):
    for n in range(1, 17):
        for m in range(1, n + 1):
            want = sum(1 for c in asc_compositions(n, m) if brute_terminal(c))
            assert tables.ntac(n, m) == want


def test_terminal_split(tables):
    for n in range(1, 80):
        t = counting.terminal_count(tables, n)
        nt = counting.nonterminal_count(tables, n)
        assert t + nt == tables.p(n)
        assert nt == tables.p(n - 2)


def test_p_sum(tables):
    assert tables.p_sum(12) == sum(tables.p(x) for x in range(1, 13))
    assert tables.p_sum(1) == 1


def test_ones_total_against_brute_force(tables):
    for n in range(1, 26):
        assert counting.ones_total(tables, n) == brute_ones_total(n)


def test_pn_via_largest_parts(tables):
    for n in range(1, 41):
        assert counting.pn_via_largest_parts(n) == tables.p(n)


def test_table_domain_errors(tables):
    with pytest.raises(DomainError):
        build_tables(0)
    with pytest.raises(CapacityError):
        build_tables(MAX_CAPACITY + 1)
    with pytest.raises(NotTabulated):
        tables.p(251)
    with pytest.raises(DomainError):
        tables.nac(5, 0)
    with pytest.raises(DomainError):
        tables.ndcf(5, 6)
    with pytest.raises(DomainError):
        counting.ones_total(tables, 0)


def test_sum_over_p_approximation_quality(tables):
    # The sqrt-growth estimate is crude; a 25% band is all it earns.
    for n in range(50, 201):
        exact = tables.p_sum(n) / tables.p(n)
        approx = approx_ratio(ApproxKind.SUM_OVER_P, n)
        assert abs(exact - approx) / exact < 0.25


def test_decay_approximations_direction(tables):
    # Both exponential estimates overshoot slightly at desk scale but
    # track the exact quotients closely.
    for n in range(50, 201, 10):
        exact2 = tables.p(n - 2) / tables.p(n)
        exact1 = tables.p(n - 1) / tables.p(n)
        a2 = approx_ratio(ApproxKind.PN_MINUS_2_OVER_PN, n)
        a1 = approx_ratio(ApproxKind.PN_MINUS_1_OVER_PN, n)
        assert abs(exact2 - a2) < 0.05
        assert abs(exact1 - a1) < 0.03
        assert 0 < exact2 < exact1 < 1


def test_approx_ratio_domain():
    with pytest.raises(DomainError):
        approx_ratio(ApproxKind.SUM_OVER_P, 0)
