#!/usr/bin/env python3
"""Tour of the three named constructions and the family file format."""

from setfam import SetFamily, binom, ell_ball, lex_segment, t_star_union

n, k = 6, 3

print(f"ground set [n] = [{n}], member size k = {k}, total {binom(n, k)} sets")
print()

seg = lex_segment(n, k, 11)
print("lex segment of size 11:")
for m in seg:
    print("  ", m)
print("first element degrees:", [sum(1 for m in seg if e in set(m.elements)) for e in range(1, 7)])
print()

# every set here meets {1,2} in at least 1 element
ball = ell_ball(n, k, r=2, ell=1)
print(f"ball over [2] with ell=1: {len(ball)} sets = C(6,3) - C(4,3) = {binom(6,3)-binom(4,3)}")

strict = ell_ball(n, k, r=4, ell=2)
print(f"ball over [4] with ell=2: {len(strict)} sets")
print()

stars = t_star_union(7, 3, [(1, 2), (1, 3)])
print(f"union of the 2-stars at (1,2) and (1,3) inside [7]: {len(stars)} sets")
print()

text = seg.to_text()
print("text form round-trips:", SetFamily.from_text(text) == seg)
print(text[: text.index("\n", text.index("\n") + 1)])
print("...")
