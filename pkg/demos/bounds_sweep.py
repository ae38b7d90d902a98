#!/usr/bin/env python3
"""Sweep the named bounds across every family size at (8,3) and print a table.

The exact closed form sits between the lower estimates and the quadratic
upper cap wherever those apply; cells print as exact rationals.
"""

from setfam import BOUND_NAMES, Params, binom, evaluate_all, value_str

n, k = 8, 3
names = ("lex_formula", "upper_eq1", "prop21_floor", "spectral_kneser")

header = f"{'s':>3} {'r':>2}" + "".join(f" {name:>16}" for name in names)
print(header)
print("-" * len(header))
for s in range(0, binom(n, k) + 1, 4):
    params = Params(n, k, s)
    by_name = {b.name: b for b in evaluate_all(params)}
    cells = []
    for name in names:
        b = by_name[name]
        cells.append(value_str(b.value) if b.applicable else "-")
    print(f"{s:>3} {params.r if params.r is not None else '-':>2}"
          + "".join(f" {c:>16}" for c in cells))

print()
print("all bound names:", ", ".join(BOUND_NAMES))
