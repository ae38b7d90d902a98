#!/usr/bin/env python3
"""Counting statistics on a random family, with the identities that tie them together."""

import random

from setfam import (
    SetFamily,
    binom,
    complement_family,
    disjoint_pairs,
    lex_segment,
    q_matchings,
    t_disjoint_pairs,
    t_intersecting_pairs,
    t_intersecting_with,
)

rng = random.Random(7)
n, k, s = 8, 3, 14
pool = lex_segment(n, k, binom(n, k)).masks
fam = SetFamily(n, k, rng.sample(pool, s))

print(f"random family: n={n} k={k} s={s}")
d = disjoint_pairs(fam).value
print("disjoint pairs:", d)
print("2-matchings:  ", q_matchings(fam, 2).value, "(same thing, by definition)")
print("3-matchings:  ", q_matchings(fam, 3).value)
print()

for t in (1, 2):
    td = t_disjoint_pairs(fam, t).value
    ti = t_intersecting_pairs(fam, t).value
    print(f"t={t}: {td} pairs meet in < {t} elements, {ti} in >= {t};"
          f" sum {td+ti} == C({s},2) = {binom(s,2)}")
print()

# per-member partner sums double count the pairs
t = 2
inc = sum(t_intersecting_with(fam, m, t, include_self=True) for m in fam)
print(f"sum of per-member {t}-intersecting counts (self included): {inc}")
print(f"2 * pairs + s = {2 * t_intersecting_pairs(fam, t).value + s}")
print()

comp = complement_family(fam)
diff = d - disjoint_pairs(comp).value
rhs = (2 * s - binom(n, k)) * binom(n - k, k) // 2
print(f"complement duality: disj(F) - disj(~F) = {diff}, closed form gives {rhs}")
