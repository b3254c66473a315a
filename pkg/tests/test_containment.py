import pytest
from hypothesis import given, settings, strategies as st

import _oracles as O
from clustercol import generators as G
from clustercol.containment import (MinorModel, OddCertificate, has_kst_subgraph, has_minor, has_odd_minor,
                                    validate_minor_model, validate_odd_certificate)
from clustercol.graph_core import Graph, SizeError

PATTERNS = [G.complete(1), G.complete(2), G.complete(3), G.path(3), G.complete(4), G.cycle(4), G.k_star(1, 3),
            G.k_star(2, 2)]


@st.composite
def hosts(draw, lo=1, hi=7):
    n = draw(st.integers(lo, hi))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


# --------------------------------------------------------------------------- K_{s,t}

def test_kst_examples():
    assert has_kst_subgraph(G.triangular_grid(4), 1, 7) is None
    assert has_kst_subgraph(G.standard_minor_example(2, 2), 2, 8) is None
    s, t = has_kst_subgraph(G.complete_bipartite(2, 3), 2, 3)
    assert len(s) == 2 and len(t) == 3
    assert has_kst_subgraph(G.path(3), 2, 2) is None
    assert has_kst_subgraph(G.path(2), 2, 2) is None


@settings(max_examples=100, deadline=None)
@given(hosts(hi=8), st.integers(1, 3), st.integers(1, 4))
def test_kst_matches_brute_force(g, s, t):
    from itertools import combinations
    found = has_kst_subgraph(g, s, t)
    expect = any(all(g.has_edge(a, b) for a in S for b in T)
                 for S in combinations(g.vertices, s)
                 for T in combinations([v for v in g.vertices if v not in S], t))
    assert (found is not None) == expect
    if found:
        S, T = found
        assert len(S) == s and len(T) == t and not S & T
        assert all(g.has_edge(a, b) for a in S for b in T)


# --------------------------------------------------------------------------- minors

def test_minor_examples():
    assert has_minor(G.triangular_grid(3), G.complete(5)) is None
    m = has_minor(G.complete_bipartite(3, 3), G.complete(4))
    assert m is not None and validate_minor_model(G.complete_bipartite(3, 3), G.complete(4), m)
    m1 = has_minor(G.path(4), G.complete(1))
    assert len(m1.branch_sets[0]) == 1


def test_standard_example_excludes_k6():
    assert has_minor(G.standard_minor_example(2, 2), G.complete(6)) is None


def test_minor_caps():
    with pytest.raises(SizeError):
        has_minor(G.path(13), G.complete(2))
    with pytest.raises(SizeError):
        has_minor(G.complete(8), G.complete(7))


@settings(max_examples=60, deadline=None)
@given(hosts(), st.sampled_from(PATTERNS))
def test_minor_agrees_with_oracle(g, h):
    m = has_minor(g, h)
    assert (m is not None) == O.has_minor(g, h)
    if m is not None:
        assert validate_minor_model(g, h, m)


@pytest.mark.parametrize("seed", range(6))
def test_minor_agrees_with_oracle_on_eight_vertices(seed):
    g = G.gnp_random(8, 0.3 + 0.05 * seed, seed)
    for h in (G.complete(4), G.cycle(4), G.k_star(2, 2)):
        assert (has_minor(g, h) is not None) == O.has_minor(g, h)


@settings(max_examples=40, deadline=None)
@given(hosts(lo=2), st.sampled_from(PATTERNS), st.data())
def test_minor_monotone_under_edge_addition(g, h, data):
    if has_minor(g, h) is None:
        return
    missing = [(u, v) for u in g.vertices for v in g.vertices if u < v and not g.has_edge(u, v)]
    extra = data.draw(st.lists(st.sampled_from(missing), unique=True)) if missing else []
    assert has_minor(Graph.from_edges(g.n, set(g.edges) | set(extra)), h) is not None


def test_validator_rejects_overlap_and_disconnection():
    g = G.path(4)
    h = G.complete(2)
    good = has_minor(g, h)
    assert validate_minor_model(g, h, good)
    overlap = MinorModel({0: frozenset({0, 1}), 1: frozenset({1, 2})}, {(0, 1): (1, 2)})
    assert not validate_minor_model(g, h, overlap)
    split = MinorModel({0: frozenset({0, 2}), 1: frozenset({1})}, {(0, 1): (0, 1)})
    assert not validate_minor_model(g, h, split)
    wrong_image = MinorModel({0: frozenset({0}), 1: frozenset({1})}, {(0, 1): (2, 3)})
    assert not validate_minor_model(g, h, wrong_image)


# --------------------------------------------------------------------------- odd minors

@pytest.mark.parametrize("n", [2, 3, 4])
def test_knn_has_no_odd_triangle(n):
    g = G.complete_bipartite(n, n)
    assert has_odd_minor(g, G.complete(3)) is None
    assert has_odd_minor(g, G.complete(3), parity_shortcut=False) is None


def test_triangle_is_an_odd_triangle():
    found = has_odd_minor(G.complete(3), G.complete(3))
    assert found is not None
    model, cert = found
    assert all(len(b) == 1 for b in model.branch_sets.values())
    assert len(set(cert.two_coloring.values())) == 1
    assert validate_odd_certificate(G.complete(3), G.complete(3), model, cert)


def test_k1_odd_minor_trivial():
    assert has_odd_minor(G.path(1), G.complete(1)) is not None


def test_mutated_certificate_rejected():
    g = G.complete(3)
    model, cert = has_odd_minor(g, G.complete(3))
    flipped = dict(cert.two_coloring)
    v = next(iter(flipped))
    flipped[v] ^= 1
    assert not validate_odd_certificate(g, G.complete(3), model, OddCertificate(flipped))


def test_odd_branch_set_uses_a_spanning_subgraph():
    # the branch subgraph may drop edges: path 0-2-1 inside the triangle is properly coloured
    g = G.complete(3)
    h = G.complete(1)
    model = MinorModel({0: frozenset({0, 1, 2})}, {})
    assert validate_minor_model(g, h, model)
    assert validate_odd_certificate(g, h, model, OddCertificate({0: 0, 1: 0, 2: 1}))
    assert not validate_odd_certificate(g, h, model, OddCertificate({0: 0, 1: 0, 2: 0}))


@settings(max_examples=40, deadline=None)
@given(hosts(hi=6), st.sampled_from([G.complete(2), G.complete(3), G.path(3), G.cycle(4)]))
def test_odd_minor_agrees_with_oracle(g, h):
    found = has_odd_minor(g, h, parity_shortcut=False)
    assert (found is not None) == O.has_odd_minor(g, h)
    if found:
        assert validate_odd_certificate(g, h, *found)
        assert has_minor(g, h) is not None
    assert (has_odd_minor(g, h) is not None) == (found is not None)
