"""Closed forms and named bounds checked against brute-force enumeration."""

import itertools
from fractions import Fraction

import pytest

import oracles
from setfam import (
    BOUND_NAMES,
    BoundReport,
    KSet,
    Params,
    RangeError,
    binom,
    derive_r,
    evaluate_all,
    lex_disj_formula,
    lex_segment,
    lower_order_eq2,
    prop21_floor,
    q_matchings,
    qmatch_lower_eq4_core,
    qmatch_upper_eq3,
    t_intersecting_with,
    t_star_union,
    thresholds,
    tstar_heuristic_eq5,
    upper_bound_eq1,
    value_str,
)


def lex_prefix(n, k, s):
    return sorted(oracles.ksets(n, k), key=oracles.lex_key)[:s]


def test_lex_disj_formula_full_sweep():
    for n in range(2, 9):
        for k in range(1, min(n, 5)):
            total = binom(n, k)
            for s in range(total + 1):
                want = oracles.disjoint_pairs(lex_prefix(n, k, s))
                assert lex_disj_formula(n, k, s) == want, (n, k, s)


def test_lex_disj_formula_validation():
    assert lex_disj_formula(6, 3, 0) == 0
    assert lex_disj_formula(6, 3, 1) == 0
    with pytest.raises(RangeError):
        lex_disj_formula(6, 3, -1)
    with pytest.raises(RangeError):
        lex_disj_formula(6, 3, binom(6, 3) + 1)


def test_upper_eq1_dominates_lex():
    # quadratic cap for families filling r slices; lex never exceeds it
    for n in range(5, 9):
        for k in (2, 3):
            for s in range(binom(n, k) + 1):
                r = derive_r(n, k, s)
                if not r:
                    continue
                bound = upper_bound_eq1(s, r)
                assert Fraction(lex_disj_formula(n, k, s)) <= bound, (n, k, s, r)


def test_upper_eq1_values():
    assert upper_bound_eq1(10, 2) == Fraction(25)
    assert upper_bound_eq1(7, 1) == 0
    assert upper_bound_eq1(9, 3) == Fraction(27)
    with pytest.raises(RangeError):
        upper_bound_eq1(7, 0)


def test_qmatch_eq3_dominates_lex():
    for n in (6, 7, 8):
        for k in (2, 3):
            for q in (2, 3):
                for s in range(binom(n, k) + 1):
                    r = derive_r(n, k, s)
                    if not r:
                        continue
                    actual = oracles.q_matchings(lex_prefix(n, k, s), q)
                    assert Fraction(actual) <= qmatch_upper_eq3(s, r, q), (n, k, s, q)


def test_qmatch_eq3_values():
    assert qmatch_upper_eq3(9, 3, 3) == Fraction(27)
    assert qmatch_upper_eq3(10, 2, 2) == Fraction(25)
    assert qmatch_upper_eq3(5, 4, 5) == 0  # C(4,5) = 0


def test_qmatch_eq4_below_lex():
    # the pre-asymptotic core term never exceeds the true lex count
    checked = 0
    for n in (8, 9, 10):
        k = 2
        for q in (2, 3):
            for s in range(binom(n, k) + 1):
                r = derive_r(n, k, s)
                if not r or n <= k * q + r:
                    continue
                alpha = thresholds(Params(n, k, s, q=q)).alpha
                bound = qmatch_lower_eq4_core(n, k, r, q, alpha)
                actual = oracles.q_matchings(lex_prefix(n, k, s), q)
                assert bound <= Fraction(actual), (n, k, s, q, r)
                if bound > 0:
                    checked += 1
    assert checked > 20  # the sweep must exercise nontrivial bounds


def test_qmatch_eq4_range():
    with pytest.raises(RangeError):
        qmatch_lower_eq4_core(8, 2, 4, 2, Fraction(1))  # n = k*q + r


def test_eq2_values():
    # exact second-moment count plus its simplified comparison form
    assert lower_order_eq2(8, 3, 3) == (36, Fraction(16))
    assert lower_order_eq2(6, 3, 2) == (10, Fraction(16, 3))
    assert lower_order_eq2(10, 2, 4) == (24, Fraction(20, 3))
    for n, k, r in [(8, 3, 3), (10, 2, 4), (9, 4, 2)]:
        _, simplified = lower_order_eq2(n, k, r)
        assert simplified == Fraction(r * n, 3 * k) * binom(n - 2, k - 2)


def test_tstar_heuristic_eq5():
    assert tstar_heuristic_eq5(8, 3, 2) == 2
    assert tstar_heuristic_eq5(8, 3, 1) == 18
    with pytest.raises(RangeError):
        tstar_heuristic_eq5(8, 3, 3)
    with pytest.raises(RangeError):
        tstar_heuristic_eq5(3, 3, 1)


def test_eq5_caps_star_intersections():
    # every set meeting the center in t-1 elements t-intersects at most
    # eq5 members of the full t-star; tight whenever k-t = 1
    for n, k, t in [(5, 2, 1), (6, 3, 2), (7, 3, 2), (7, 3, 1), (8, 4, 3)]:
        center = tuple(range(1, t + 1))
        star = t_star_union(n, k, [center])
        cap = tstar_heuristic_eq5(n, k, t)
        tight = k - t == 1
        for comb in itertools.combinations(range(1, n + 1), k):
            if len(set(comb) & set(center)) != t - 1:
                continue
            fset = KSet.from_elements(n, comb)
            hits = t_intersecting_with(star, fset, t)
            assert hits <= cap, (n, k, t, comb)
            if tight:
                assert hits == cap, (n, k, t, comb)


def test_prop21_floor():
    assert prop21_floor(5, 2) == 2
    assert prop21_floor(6, 3) == 1
    assert prop21_floor(8, 2) == 5
    for n in range(4, 10):
        for k in range(2, n // 2 + 1):
            assert prop21_floor(n, k) == binom(n - k - 1, k - 1)
    with pytest.raises(RangeError):
        prop21_floor(5, 3)


def test_thresholds_report():
    th = thresholds(Params(6, 3, 11))
    assert (th.r, th.alpha, th.alpha_slice) == (2, Fraction(1, 10), Fraction(1, 6))
    assert th.range_ok
    assert thresholds(Params(6, 3, 0)).alpha == 0
    # s beyond every slice leaves the fill ratio undefined
    th2 = thresholds(Params(6, 3, 11, t=2))
    assert th2.r is None and th2.alpha is None
    th3 = thresholds(Params(6, 3, 10, t=2))
    assert (th3.r, th3.alpha, th3.alpha_slice) == (4, Fraction(1, 4), Fraction(1))
    assert not thresholds(Params(8, 3, 20)).n_ok_thm14


def test_thresholds_alpha_in_range():
    for n in (6, 7, 8):
        for k in (2, 3):
            for s in range(binom(n, k) + 1):
                th = thresholds(Params(n, k, s))
                assert th.r == derive_r(n, k, s)
                if th.r:
                    assert 0 < th.alpha <= 1
                    assert 0 < th.alpha_slice <= 1


def test_evaluate_all_reports():
    reports = evaluate_all(Params(6, 3, 11))
    assert len(reports) == len(BOUND_NAMES)
    assert {r.name for r in reports} == set(BOUND_NAMES)
    by_name = {r.name: r for r in reports}
    assert by_name["lex_formula"].value == 1
    assert by_name["upper_eq1"].value == Fraction(121, 4)
    assert by_name["bonferroni_eq2"].value == 10
    assert by_name["prop21_floor"].value == 1
    assert by_name["spectral_kneser"].value == Fraction(11, 20)
    eq4 = by_name["qmatch_lower_eq4_core"]
    assert not eq4.applicable and eq4.value is None and eq4.reason
    for r in reports:
        if not r.applicable:
            assert r.value is None and r.reason


def test_bound_report_name_checked():
    with pytest.raises(RangeError):
        BoundReport("bogus", 0, True)
    obj = BoundReport("upper_eq1", Fraction(16, 3), True).to_json_obj()
    assert obj == {"name": "upper_eq1", "value": "16/3", "applicable": True, "reason": None}


def test_value_str():
    assert value_str(None) is None
    assert value_str(5) == "5"
    assert value_str(Fraction(16, 3)) == "16/3"
