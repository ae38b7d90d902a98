#!/usr/bin/env python3
"""Certified minimization, including a size where the lex segment loses.

Runs the branch and bound search on a few instances and prints the
certificates.  The (7,3,18) instance is the interesting one: the witness
below beats the lex segment, so initial segments are not always extremal
at small n.
"""

import time

from setfam import DISJOINT_PAIRS, Params, SearchConfig, certify_minimum

CASES = [
    (5, 2, 5),
    (6, 3, 11),
    (7, 3, 12),
    (7, 3, 18),
]


def show(n, k, s):
    cfg = SearchConfig(mode="branch_and_bound", node_budget=5 * 10**6)
    start = time.monotonic()
    cert = certify_minimum(Params(n, k, s), DISJOINT_PAIRS, cfg)
    elapsed = time.monotonic() - start
    status = "certified" if cert.complete else "budget exhausted, best so far"
    print(f"(n,k,s) = ({n},{k},{s})  [{status}]")
    print(f"  minimum {cert.minimum}   lex segment {cert.lex_value}   "
          f"lex optimal: {cert.lex_optimal}")
    print(f"  nodes {cert.nodes_visited}, {elapsed:.2f}s")
    if not cert.lex_optimal:
        print("  witness:", " ".join(str(m) for m in cert.witness))
    print()


if __name__ == "__main__":
    for case in CASES:
        show(*case)
