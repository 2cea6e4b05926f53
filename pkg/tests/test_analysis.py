import math

import pytest

from partgen.analysis import (Basis, Pair, avg_cost_table, closed_form,
                              predicted_ratio)
from partgen.errors import GuardViolation
from partgen.generators import Algorithm


def test_closed_form_spot_values(tables):
    assert closed_form(tables, Algorithm.REC_ASC, 12).invocations == 77
    assert closed_form(tables, Algorithm.REC_DESC, 12).invocations == 133
    ra = closed_form(tables, Algorithm.RULE_ASC, 12)
    assert (ra.reads, ra.writes) == (154, 153)
    rd = closed_form(tables, Algorithm.RULE_DESC, 12)
    assert (rd.reads, rd.writes) == (259, 270)
    aa = closed_form(tables, Algorithm.ACCEL_ASC, 12)
    assert (aa.reads, aa.writes) == (35, 153)
    ad = closed_form(tables, Algorithm.ACCEL_DESC, 12)
    assert (ad.reads, ad.writes) == (110, 117)


def test_closed_form_formula_shapes(tables):
    p = tables.p
    for n in range(2, 60):
        assert closed_form(tables, Algorithm.REC_ASC, n).invocations == p(n)
        assert closed_form(tables, Algorithm.REC_DESC, n).invocations == p(n) + p(n - 1)
        ra = closed_form(tables, Algorithm.RULE_ASC, n)
        assert (ra.reads, ra.writes) == (2 * p(n), 2 * p(n) - 1)
        rd = closed_form(tables, Algorithm.RULE_DESC, n)
        s = tables.p_sum(n)
        assert (rd.reads, rd.writes) == (s - n, s - 1)
        aa = closed_form(tables, Algorithm.ACCEL_ASC, n)
        assert (aa.reads, aa.writes) == (p(n) - p(n - 2), 2 * p(n) - 1)
        ad = closed_form(tables, Algorithm.ACCEL_DESC, n)
        assert (ad.reads, ad.writes) == (2 * p(n) - p(n - 2) - 2, p(n) + p(n - 2) - 2)


def test_closed_form_guards(tables):
    with pytest.raises(GuardViolation):
        closed_form(tables, Algorithm.REC_DESC, 1)
    with pytest.raises(GuardViolation):
        closed_form(tables, Algorithm.ACCEL_DESC, 1)
    # the others are stated from n = 1
    assert closed_form(tables, Algorithm.RULE_ASC, 1).reads == 2


def test_predicted_ratio_formulas(tables):
    p = tables.p
    for n in (10, 61, 100):
        rec = predicted_ratio(tables, Pair.RECURSIVE_ASC_VS_DESC, n)
        assert rec == p(n) / (p(n) + p(n - 1))
        acc = predicted_ratio(tables, Pair.ACCEL_ASC_VS_DESC, n)
        assert acc == (3 * p(n) - p(n - 2)) / (3 * p(n))


def test_predicted_ratio_bounds(tables):
    for n in range(2, 201):
        rec = predicted_ratio(tables, Pair.RECURSIVE_ASC_VS_DESC, n)
        assert 0.5 < rec < 1.0
        acc = predicted_ratio(tables, Pair.ACCEL_ASC_VS_DESC, n)
        assert 0.0 < acc <= 1.0
    with pytest.raises(GuardViolation):
        predicted_ratio(tables, Pair.RECURSIVE_ASC_VS_DESC, 1)


def test_avg_cost_table_values():
    rows = dict((name, (r, w)) for name, r, w in avg_cost_table(1000))
    assert rows["rule-asc"] == (2.0, 2.0)
    r, w = rows["rule-desc"]
    assert r == w
    assert abs(r - (1 + math.sqrt(6000) / math.pi)) < 1e-12
    reads, writes = rows["accel-asc"]
    assert abs(reads - 0.08) < 0.005
    assert writes == 2.0
    reads, writes = rows["accel-desc"]
    assert reads == 1.0
    assert abs(writes - 1.92) < 0.005
    with pytest.raises(GuardViolation):
        avg_cost_table(0)


def test_rule_desc_avg_cost_tracks_exact_quotient(tables):
    for n in range(50, 201):
        approx = dict((name, r) for name, r, _ in avg_cost_table(n))["rule-desc"]
        exact = tables.p_sum(n) / tables.p(n)
        assert abs(exact - approx) / exact < 0.25
