"""Disjointness graph: closed-form spectrum vs numeric, edge identities."""

import io
from fractions import Fraction

import numpy as np
import pytest

import oracles
from setfam import (
    DISJOINT_PAIRS,
    KneserGraph,
    Params,
    RangeError,
    SearchConfig,
    SetFamily,
    adjacency_matrix,
    binom,
    bipartite_part_value,
    certify_minimum,
    complement_family,
    disjoint_pairs,
    export_edge_list,
    induced_edges,
    lex_rank,
    lex_segment,
    numeric_eigenvalues,
    spectral_lower_bound,
    spectrum,
)


def test_graph_basics():
    g = KneserGraph(5, 2)
    assert g.vertex_count == 10
    assert g.degree == 3
    assert g.edge_count == 15
    a = lex_segment(5, 2, 10).members
    assert g.adjacent(a[0], a[9])  # {1,2} vs {4,5}
    assert not g.adjacent(a[0], a[1])
    edges = list(g.edges())
    assert len(edges) == 15
    assert all(u < v for u, v in edges)
    assert g.edge_list() == edges


def test_edges_match_oracle():
    for n, k in [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3)]:
        g = KneserGraph(n, k)
        sets = sorted(oracles.ksets(n, k), key=oracles.lex_key)
        want = {
            (i, j)
            for i in range(len(sets))
            for j in range(i + 1, len(sets))
            if not sets[i] & sets[j]
        }
        assert set(g.edges()) == want, (n, k)
        assert g.edge_count == len(want)
        assert g.degree == binom(n - k, k)


def test_spectrum_closed_form_vs_numeric():
    for n, k in [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3), (8, 4)]:
        sp = spectrum(n, k)
        want = []
        for lam, mult in sp.pairs:
            want.extend([float(lam)] * mult)
        got = numeric_eigenvalues(n, k)
        assert np.allclose(sorted(want), np.sort(got), atol=1e-8), (n, k)
        # multiplicities cover the whole vertex set, trace is zero
        assert sum(m for _, m in sp.pairs) == binom(n, k)
        assert sum(lam * m for lam, m in sp.pairs) == 0


def test_spectrum_known_petersen():
    sp = spectrum(5, 2)
    assert dict(sp.pairs) == {3: 1, -2: 4, 1: 5}
    obj = sp.to_json_obj()
    assert obj["pairs"][0] == {"eigenvalue": "3", "multiplicity": "1"}


def test_spectrum_range_checks():
    with pytest.raises(RangeError):
        spectrum(4, 3)  # the closed form needs n >= 2k
    # the graph itself is fine below 2k, just edgeless
    g = KneserGraph(3, 2)
    assert g.vertex_count == 3 and g.degree == 0 and g.edge_count == 0
    assert list(g.edges()) == []
    with pytest.raises(RangeError):
        KneserGraph(2, 3)


def test_adjacency_matrix():
    m = adjacency_matrix(5, 2)
    assert m.shape == (10, 10)
    assert np.array_equal(m, m.T)
    assert m.sum() == 2 * 15
    g = KneserGraph(5, 2)
    for u, v in g.edges():
        assert m[u, v] == 1


def test_induced_edges_is_disjoint_pairs():
    import random

    rng = random.Random(11)
    for _ in range(25):
        n, k = rng.choice([(5, 2), (6, 2), (6, 3), (7, 3)])
        sets = oracles.random_sets(rng, n, k, rng.randint(0, 10))
        fam = SetFamily.from_sets(n, k, [sorted(x) for x in sets])
        g = KneserGraph(n, k)
        assert induced_edges(g, fam) == disjoint_pairs(fam).value


def test_bipartite_part_value():
    # edges leaving the family: s*degree minus twice the inside edges
    import random

    rng = random.Random(22)
    for _ in range(25):
        n, k = rng.choice([(5, 2), (6, 3)])
        s = rng.randint(0, binom(n, k))
        sets = oracles.random_sets(rng, n, k, s)
        fam = SetFamily.from_sets(n, k, [sorted(x) for x in sets])
        want = s * binom(n - k, k) - 2 * disjoint_pairs(fam).value
        assert bipartite_part_value(n, k, fam) == want
        # cross-check against the complement identity
        comp = complement_family(fam)
        assert bipartite_part_value(n, k, fam) == bipartite_part_value(n, k, comp)


def test_spectral_bound_below_certified_minimum():
    assert spectral_lower_bound(5, 2, 5) == Fraction(5, 4)
    for n, k, smax in [(5, 2, 10), (6, 3, 12)]:
        for s in range(smax + 1):
            bound = spectral_lower_bound(n, k, s)
            cert = certify_minimum(
                Params(n, k, s), DISJOINT_PAIRS, SearchConfig(mode="branch_and_bound")
            )
            assert bound <= cert.minimum, (n, k, s)
    # no edges at all when n < 2k
    assert spectral_lower_bound(4, 3, 3) == 0


def test_export_edge_list():
    g = KneserGraph(5, 2)
    buf = io.StringIO()
    count = export_edge_list(g, buf)
    lines = buf.getvalue().strip().splitlines()
    assert count == 15 and len(lines) == 15
    assert lines[0] == "0 7"
    parsed = [tuple(map(int, ln.split())) for ln in lines]
    assert parsed == g.edge_list()
    # ranks round-trip through the lex order
    members = lex_segment(5, 2, 10).members
    u, v = parsed[0]
    assert not set(members[u].elements) & set(members[v].elements)
    assert lex_rank(members[u]) == u
