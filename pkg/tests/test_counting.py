"""Exact counting against independent frozenset oracles, plus identities."""

import itertools
import random

import pytest

import oracles
from setfam import (
    DISJOINT_PAIRS,
    Q_MATCHINGS,
    T_DISJOINT_PAIRS,
    ContextError,
    CountReport,
    KSet,
    NotACoverError,
    Params,
    RangeError,
    SetFamily,
    ShapeError,
    binom,
    complement_family,
    cross_disjoint_pairs,
    degree_profile,
    disjoint_pairs,
    disjoint_pairs_by_first,
    ell_ball,
    find_min_cover,
    is_intersecting,
    lex_segment,
    matchings_meeting,
    partition_by_min_in_cover,
    q_matchings,
    q_matchings_by_first,
    structure_check,
    t_disjoint_pairs,
    t_disjoint_pairs_by_first,
    t_intersecting_pairs,
    t_intersecting_with,
    t_star_union,
)


def random_cases(seed, count, max_n=8):
    rng = random.Random(seed)
    cases = []
    for _ in range(count):
        n = rng.randint(4, max_n)
        k = rng.randint(2, min(4, n - 1))
        s = rng.randint(0, min(binom(n, k), 14))
        sets = oracles.random_sets(rng, n, k, s)
        cases.append((n, k, sets))
    return cases


def test_disjoint_pairs_vs_oracle():
    for n, k, sets in random_cases(101, 120):
        fam = SetFamily.from_sets(n, k, [sorted(x) for x in sets])
        rep = disjoint_pairs(fam)
        assert rep.value == oracles.disjoint_pairs(sets)
        assert rep.statistic == DISJOINT_PAIRS
        assert sum(disjoint_pairs_by_first(fam)) == rep.value


def test_t_statistics_vs_oracle():
    for n, k, sets in random_cases(202, 120):
        fam = SetFamily.from_sets(n, k, [sorted(x) for x in sets])
        for t in range(1, k):
            td = t_disjoint_pairs(fam, t)
            ti = t_intersecting_pairs(fam, t)
            assert td.value == oracles.t_disjoint_pairs(sets, t)
            assert ti.value == oracles.t_intersecting_pairs(sets, t)
            # the two statistics partition all pairs
            assert td.value + ti.value == binom(len(fam), 2)
            assert sum(t_disjoint_pairs_by_first(fam, t)) == td.value


def test_t_bounds_checked():
    fam = lex_segment(6, 3, 5)
    for bad in (0, 3, 4):
        with pytest.raises(RangeError):
            t_disjoint_pairs(fam, bad)
        with pytest.raises(RangeError):
            t_intersecting_pairs(fam, bad)


def test_cross_disjoint_vs_oracle():
    rng = random.Random(303)
    for _ in range(40):
        n, k = 7, rng.choice([2, 3])
        a = oracles.random_sets(rng, n, k, rng.randint(0, 10))
        b = oracles.random_sets(rng, n, k, rng.randint(0, 10))
        fa = SetFamily.from_sets(n, k, [sorted(x) for x in a])
        fb = SetFamily.from_sets(n, k, [sorted(x) for x in b])
        assert cross_disjoint_pairs(fa, fb) == oracles.cross_disjoint_pairs(a, b)
    # ordered self-count doubles the unordered one
    fam = lex_segment(6, 3, 12)
    assert cross_disjoint_pairs(fam, fam) == 2 * disjoint_pairs(fam).value
    with pytest.raises(ContextError):
        cross_disjoint_pairs(fam, lex_segment(7, 3, 4))


def test_q_matchings_vs_oracle():
    for n, k, sets in random_cases(404, 80, max_n=7):
        fam = SetFamily.from_sets(n, k, [sorted(x) for x in sets])
        for q in (1, 2, 3):
            assert q_matchings(fam, q).value == oracles.q_matchings(sets, q), (n, k, q, sets)
            assert sum(q_matchings_by_first(fam, q)) == q_matchings(fam, q).value
    with pytest.raises(RangeError):
        q_matchings(lex_segment(6, 3, 4), 0)


def test_q_matchings_known_values():
    # perfect matchings of the complete graph K6 / all triples of [9]
    assert q_matchings(SetFamily.full(6, 2), 3).value == 15
    assert q_matchings(SetFamily.full(6, 2), 2).value == 45
    assert q_matchings(SetFamily.full(9, 3), 3).value == 280
    # q exceeding the packing capacity gives zero
    assert q_matchings(SetFamily.full(6, 2), 4).value == 0
    # q = 1 counts the members
    assert q_matchings(lex_segment(7, 3, 11), 1).value == 11


def test_q2_equals_disjoint_pairs():
    for n, k, sets in random_cases(505, 60):
        fam = SetFamily.from_sets(n, k, [sorted(x) for x in sets])
        assert q_matchings(fam, 2).value == disjoint_pairs(fam).value


def test_t1_equals_disjoint_pairs():
    for n, k, sets in random_cases(606, 60):
        fam = SetFamily.from_sets(n, k, [sorted(x) for x in sets])
        assert t_disjoint_pairs(fam, 1).value == disjoint_pairs(fam).value


def test_t_intersecting_with_conventions():
    for n, k, sets in random_cases(707, 50):
        fam = SetFamily.from_sets(n, k, [sorted(x) for x in sets])
        for t in range(1, k):
            incl = sum(t_intersecting_with(fam, m, t, include_self=True) for m in fam)
            excl = sum(t_intersecting_with(fam, m, t, include_self=False) for m in fam)
            pairs = t_intersecting_pairs(fam, t).value
            assert incl == 2 * pairs + len(fam)
            assert excl == 2 * pairs
    fam = lex_segment(6, 3, 6)
    outside = KSet.from_elements(6, [4, 5, 6])
    assert t_intersecting_with(fam, outside, 1, include_self=True) == t_intersecting_with(
        fam, outside, 1, include_self=False
    )
    with pytest.raises(RangeError):
        t_intersecting_with(fam, KSet.from_elements(7, [1, 2, 3]), 1)


def test_matchings_meeting_vs_oracle():
    rng = random.Random(808)
    for _ in range(30):
        n, k = 7, rng.choice([2, 3])
        sets = oracles.random_sets(rng, n, k, rng.randint(1, 10))
        fam = SetFamily.from_sets(n, k, [sorted(x) for x in sets])
        target = fam.members[rng.randrange(len(fam))]
        tset = frozenset(target.elements)
        for j in (1, 2, 3):
            for incl in (False, True):
                got = matchings_meeting(fam, target, j, include_target=incl)
                want = oracles.matchings_meeting(sets, tset, j, incl)
                assert got == want, (n, k, j, incl, sets)


def test_matchings_meeting_counts_containment():
    # meetings with the target split into matchings containing it and
    # matchings meeting it from outside; summing the difference over all
    # members counts each q-matching q times
    rng = random.Random(909)
    for _ in range(25):
        n, k, q = 7, 2, rng.choice([2, 3])
        sets = oracles.random_sets(rng, n, k, rng.randint(q, 12))
        fam = SetFamily.from_sets(n, k, [sorted(x) for x in sets])
        total = q_matchings(fam, q).value
        contain_sum = sum(
            matchings_meeting(fam, m, q, include_target=True)
            - matchings_meeting(fam, m, q, include_target=False)
            for m in fam
        )
        assert contain_sum == q * total


def test_degree_profile():
    fam = lex_segment(6, 3, 11)
    prof = degree_profile(fam, t=2)
    assert sum(prof.element_degrees) == 11 * 3
    assert prof.degree(1) == binom(5, 2)
    assert prof.full_star_centers() == (1,)
    # t-degrees: dense map over all C(6,2) centers, zeros included
    assert len(prof.t_degrees) == binom(6, 2)
    assert prof.t_degree((1, 2)) == sum(1 for m in fam if {1, 2} <= set(m.elements))
    assert prof.t_degree([2, 1]) == prof.t_degree((1, 2))
    with pytest.raises(RangeError):
        prof.degree(7)
    with pytest.raises(RangeError):
        degree_profile(fam, t=4)
    assert degree_profile(fam).t_degrees is None


def test_find_min_cover_elements():
    fam = lex_segment(6, 3, 16)
    w = find_min_cover(fam)
    assert w.is_cover and w.cover == (1, 2)
    # a star is covered by its center
    star = t_star_union(7, 3, [(3,)])
    assert find_min_cover(star).cover == (3,)
    # spread family: no element cover within the limit
    spread = SetFamily.from_sets(6, 2, [[1, 2], [3, 4], [5, 6]])
    assert find_min_cover(spread, limit=2).is_cover is False
    assert find_min_cover(spread, limit=3).cover == (1, 3, 5)
    assert find_min_cover(SetFamily.empty(6, 3)).cover == ()


def test_find_min_cover_tsets():
    fam = t_star_union(7, 3, [(1, 2), (1, 3)])
    w = find_min_cover(fam, t=2)
    assert w.is_cover and w.size == 2
    assert w.cover == ((1, 2), (1, 3))
    with pytest.raises(RangeError):
        find_min_cover(fam, t=4)


def test_partition_by_min_in_cover():
    fam = lex_segment(6, 3, 16)
    blocks = partition_by_min_in_cover(fam, [1, 2])
    assert len(blocks) == 2
    assert sum(len(b) for b in blocks) == 16
    assert all(1 in set(m.elements) for m in blocks[0])
    assert all(2 in set(m.elements) and 1 not in set(m.elements) for m in blocks[1])
    with pytest.raises(NotACoverError) as err:
        partition_by_min_in_cover(fam, [2])
    assert err.value.witness.elements == (1, 3, 4)  # lex-least member avoiding 2
    with pytest.raises(ShapeError):
        partition_by_min_in_cover(fam, [1, 1])
    with pytest.raises(ShapeError):
        partition_by_min_in_cover(fam, [0])


def test_is_intersecting():
    assert is_intersecting(t_star_union(7, 3, [(2,)]))
    assert is_intersecting(SetFamily.empty(6, 3))
    assert not is_intersecting(SetFamily.from_sets(6, 3, [[1, 2, 3], [4, 5, 6]]))


def test_structure_check_classes():
    # lex segment at r=2: one full star plus an intersecting remainder
    rep = structure_check(lex_segment(6, 3, 11))
    assert rep.r == 2
    assert rep.class_i and rep.star_centers == (1,)
    # ball over [2]: both a starred family and a covered one
    rep = structure_check(ell_ball(6, 3, 2, 1))
    assert rep.r == 2
    assert rep.classification == "both"
    assert rep.cover == (1, 2)
    # two disjoint sets: nothing structured about it
    rep = structure_check(SetFamily.from_sets(6, 3, [[1, 2, 3], [4, 5, 6]]))
    assert rep.classification == "neither"
    # empty family
    rep = structure_check(SetFamily.empty(6, 3))
    assert rep.r == 0 and rep.classification == "i"
    # explicit r overrides the derived one
    rep = structure_check(lex_segment(6, 3, 11), r=1)
    assert rep.r == 1


def test_count_report_validation():
    with pytest.raises(RangeError):
        CountReport(DISJOINT_PAIRS, -1, "direct", Params(6, 3, 5))
    with pytest.raises(RangeError):
        CountReport(DISJOINT_PAIRS, 11, "direct", Params(6, 3, 5))  # exceeds C(5,2)
    with pytest.raises(RangeError):
        CountReport(Q_MATCHINGS, 11, "direct", Params(6, 3, 5, q=2))
    rep = q_matchings(lex_segment(6, 3, 5), 2)
    obj = rep.to_json_obj()
    assert obj["value"] == str(rep.value)
    assert obj["n"] == 6 and obj["s"] == 5 and obj["q"] == 2
