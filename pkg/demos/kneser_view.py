#!/usr/bin/env python3
"""The disjointness graph: spectrum, induced edges, and the eigenvalue bound."""

import numpy as np

from setfam import (
    DISJOINT_PAIRS,
    KneserGraph,
    Params,
    certify_minimum,
    induced_edges,
    lex_segment,
    numeric_eigenvalues,
    spectral_lower_bound,
    spectrum,
)

g = KneserGraph(5, 2)
print(f"K(5,2): {g.vertex_count} vertices, degree {g.degree}, {g.edge_count} edges")

sp = spectrum(5, 2)
print("closed-form spectrum:", ", ".join(f"{lam} (x{m})" for lam, m in sp.pairs))
numeric = np.sort(numeric_eigenvalues(5, 2))
closed = np.sort([float(lam) for lam, m in sp.pairs for _ in range(m)])
print("max deviation from numeric diagonalization:", float(abs(numeric - closed).max()))
print()

# disjoint pairs in a family are exactly the edges its vertices induce
fam = lex_segment(5, 2, 7)
print(f"lex segment of 7 vertices induces {induced_edges(g, fam)} edges")
print()

print("eigenvalue lower bound vs certified minimum, s = 0..10:")
for s in range(11):
    bound = spectral_lower_bound(5, 2, s)
    cert = certify_minimum(Params(5, 2, s), DISJOINT_PAIRS)
    gap = cert.minimum - bound
    print(f"  s={s:>2}  bound {str(bound):>6}  minimum {cert.minimum:>2}  slack {str(gap):>6}")
