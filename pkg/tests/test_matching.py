import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from matchkit.graph import Graph, delete_edge, delete_vertices, subdivide
from matchkit.matching import (
    MatchVector, Order, backward_recurrence, brute_force_match_vector, insert_recurrence,
    match_vector, matching_polynomial, mvector_from_polynomial, parse_mvector, quasi_compare,
)
from matchkit.search import CorpusSpec, enumerate_graphs

K4 = Graph.from_edges(4, itertools.combinations(range(4), 2))
C5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])


def mv(*counts, n):
    return MatchVector(counts, n)


def random_graph(rng, n, p):
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def test_match_vector_examples():
    assert match_vector(K4).counts == (1, 6, 3)
    assert match_vector(C5).counts == (1, 5, 5)
    assert match_vector(Graph.empty(3)).counts == (1, 0)
    assert match_vector(Graph.empty(0)).counts == (1,)


def test_match_vector_agrees_with_brute_force():
    rng = random.Random(11)
    for _ in range(500):
        g = random_graph(rng, rng.randint(0, 8), rng.random())
        assert match_vector(g) == brute_force_match_vector(g)


def test_match_vector_large_sparse():
    # Paths obey m(P_n, k) = C(n - k, k).
    from math import comb
    p = Graph.from_edges(40, [(i, i + 1) for i in range(39)])
    assert match_vector(p).counts == tuple(comb(40 - k, k) for k in range(21))


def test_deletion_identity():
    rng = random.Random(5)
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 9), 0.5)
        for u, v in g.edges():
            whole = match_vector(g)
            minus_e = match_vector(delete_edge(g, u, v))
            minus_uv = match_vector(delete_vertices(g, {u, v}))
            assert all(whole[k] == minus_e[k] + minus_uv[k - 1] for k in range(1, len(whole)))
            break


def test_recurrence_on_subdivisions():
    rng = random.Random(9)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 8), 0.5)
        edges = list(g.edges())
        if not edges:
            continue
        u, v = rng.choice(edges)
        j = rng.randint(0, 4)
        counts = [match_vector(subdivide(g, u, v, j + i)) for i in range(3)]
        assert insert_recurrence(counts[1], counts[0]) == counts[2]
        assert backward_recurrence(counts[2], counts[1]) == counts[0]


def test_matchvector_normalisation():
    assert mv(1, 4, n=6).counts == (1, 4, 0, 0)
    assert MatchVector((1, 1, 0, 0, 0), 2).counts == (1, 1)
    with pytest.raises(ValueError):
        MatchVector((1, 1, 1), 3)
    with pytest.raises(ValueError):
        MatchVector((2, 1), 2)
    with pytest.raises(ValueError):
        MatchVector((1, -1), 2)
    assert parse_mvector("1, 6,3", 4) == match_vector(K4)
    assert str(match_vector(K4)) == "1,6,3"


def test_matching_polynomial_examples():
    assert matching_polynomial(mv(1, 1, n=2)).coeffs == (-1, 0, 1)
    assert str(matching_polynomial(mv(1, 1, n=2))) == "x^2-1"
    p = matching_polynomial(mv(1, 13, 59, 112, 84, 20, n=11))
    assert str(p) == "x^11-13x^9+59x^7-112x^5+84x^3-20x"
    q = matching_polynomial(mv(1, 14, 71, 162, 165, 63, 5, n=12))
    assert str(q) == "x^12-14x^10+71x^8-162x^6+165x^4-63x^2+5"
    assert p(1.0) == 1 - 13 + 59 - 112 + 84 - 20


@given(st.lists(st.integers(0, 10**30), max_size=6), st.integers(0, 3))
def test_polynomial_roundtrip(tail, extra):
    n = 2 * len(tail) + extra
    vec = MatchVector([1, *tail], n)
    desc = list(reversed(matching_polynomial(vec).coeffs))
    assert mvector_from_polynomial(desc) == vec


def test_insert_recurrence_examples():
    assert insert_recurrence(mv(1, 14, 71, 161, 164, 68, 8, n=12),
                             mv(1, 13, 59, 112, 84, 20, n=11)).counts == (1, 15, 84, 220, 276, 152, 28)
    assert insert_recurrence(mv(1, 10, 29, 26, 5, n=8), mv(1, 9, 21, 11, n=7)).counts == (1, 11, 38, 47, 16)
    assert insert_recurrence(mv(1, 1, n=2), mv(1, n=1)).counts == (1, 2)
    with pytest.raises(ValueError):
        insert_recurrence(mv(1, 1, n=2), mv(1, 1, n=2))


def test_quasi_compare_examples():
    a = mv(1, 12, 48, 76, 42, 5, n=10)
    b = mv(1, 12, 48, 75, 42, 6, n=10)
    r = quasi_compare(a, b)
    assert r.order is Order.INCOMPARABLE and r.above == (3,) and r.below == (5,)
    assert quasi_compare(mv(1, 4, 2, n=5), mv(1, 4, 2, n=5)).order is Order.EQUIVALENT
    assert quasi_compare(mv(1, 13, 59, 114, 89, 21, n=11),
                         mv(1, 13, 59, 112, 84, 20, n=11)).order is Order.GREATER
    assert quasi_compare(b, b).order is Order.EQUIVALENT
    with pytest.raises(ValueError):
        quasi_compare(mv(1, 1, n=2), mv(1, 1, n=3))


@settings(max_examples=200)
@given(st.lists(st.integers(0, 5), min_size=3, max_size=3), st.lists(st.integers(0, 5), min_size=3, max_size=3))
def test_quasi_compare_antisymmetric(x, y):
    a, b = MatchVector([1, *x], 6), MatchVector([1, *y], 6)
    flip = {Order.GREATER: Order.LESS, Order.LESS: Order.GREATER,
            Order.EQUIVALENT: Order.EQUIVALENT, Order.INCOMPARABLE: Order.INCOMPARABLE}
    assert quasi_compare(b, a).order is flip[quasi_compare(a, b).order]
    assert (quasi_compare(a, b).order is Order.EQUIVALENT) == (a == b)


def test_quasi_order_transitive_on_corpus():
    vecs = sorted({match_vector(g) for g in enumerate_graphs(CorpusSpec(7, 9))}, key=lambda v: v.counts)
    geq = {(i, j) for i, a in enumerate(vecs) for j, b in enumerate(vecs)
           if quasi_compare(a, b).order in (Order.GREATER, Order.EQUIVALENT)}
    for i, j in geq:
        for k in range(len(vecs)):
            if (j, k) in geq:
                assert (i, k) in geq
