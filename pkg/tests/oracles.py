"""Slow reference implementations used to pin expected values.

Everything here works on plain frozensets of 1-based elements via itertools,
independent of the package's bitmask code paths, so agreement between the
two is meaningful evidence rather than a tautology.
"""

import itertools


def ksets(n, k):
    """All k-subsets of {1..n} as frozensets, in lex order of sorted tuples."""
    return [frozenset(c) for c in itertools.combinations(range(1, n + 1), k)]


def lex_key(s):
    return tuple(sorted(s))


def disjoint_pairs(sets):
    return sum(1 for a, b in itertools.combinations(sets, 2) if not a & b)


def t_disjoint_pairs(sets, t):
    return sum(1 for a, b in itertools.combinations(sets, 2) if len(a & b) < t)


def t_intersecting_pairs(sets, t):
    return sum(1 for a, b in itertools.combinations(sets, 2) if len(a & b) >= t)


def cross_disjoint_pairs(f_sets, g_sets):
    return sum(1 for a in f_sets for b in g_sets if not a & b)


def q_matchings(sets, q):
    return sum(
        1
        for combo in itertools.combinations(sets, q)
        if all(not a & b for a, b in itertools.combinations(combo, 2))
    )


def matchings_meeting(sets, target, j, include_target):
    pool = list(sets) if include_target else [s for s in sets if s != target]
    count = 0
    for combo in itertools.combinations(pool, j):
        if any(a & b for a, b in itertools.combinations(combo, 2)):
            continue
        if any(s & target for s in combo):
            count += 1
    return count


def min_statistic(n, k, s, value):
    """Exact minimum of value() over every size-s family, full enumeration."""
    best = None
    for combo in itertools.combinations(ksets(n, k), s):
        v = value(list(combo))
        if best is None or v < best:
            best = v
    return best


def random_sets(rng, n, k, s):
    return rng.sample(ksets(n, k), s)


def to_family(sf_module, n, k, sets):
    """Build a package SetFamily from oracle frozensets."""
    return sf_module.SetFamily.from_sets(n, k, [sorted(s) for s in sets])
