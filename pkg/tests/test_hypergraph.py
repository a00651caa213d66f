import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperbounds.combinatorics import binom
from hyperbounds.hypergraph import (
    Hypergraph,
    HypergraphError,
    complete,
    components,
    degree_sequence,
    from_edges,
    generate,
    parse,
    random_m,
    serialize,
    single_edge,
    unrank_subset,
)

from conftest import hypergraphs


def test_parse_path(p3):
    assert (p3.n, p3.k, p3.m) == (3, 2, 2)
    assert p3.edges == ((1, 2), (2, 3))


def test_parse_single_edge():
    h = parse("3 3 1\n1 2 3")
    assert degree_sequence(h).degrees == (1, 1, 1)


def test_parse_normalizes_order():
    h = parse("# comment\n4 3 2\n\n2 3 4\n1 2 3\n")
    assert h.edges == ((1, 2, 3), (2, 3, 4))
    assert parse("4 3 2\n4 3 2\n3 1 2\n").edges == h.edges


@pytest.mark.parametrize("text, match", [
    ("3 2 2\n1 2\n2 1", "duplicate edge"),
    ("3 2\n1 2", "header"),
    ("a b c\n", "integers"),
    ("3 2 1\n1 2 3", "expected 2"),
    ("3 2 1\n1 4", "out of range"),
    ("3 2 1\n0 1", "out of range"),
    ("3 3 1\n1 1 2", "duplicate vertex"),
    ("3 1 1\n1", "k must be"),
    ("3 2 2\n1 2", "declares 2"),
    ("", "empty"),
])
def test_parse_errors(text, match):
    with pytest.raises(HypergraphError, match=match):
        parse(text)


def test_constructor_rejects_bad_edges():
    with pytest.raises(HypergraphError):
        Hypergraph(3, 2, ((1, 2), (2, 1)))
    with pytest.raises(HypergraphError):
        Hypergraph(3, 2, ((1, 2, 3),))


def test_degree_sequences(p3, tri, c43):
    assert degree_sequence(p3).degrees == (2, 1, 1)
    assert degree_sequence(tri).degrees == (1, 1, 1)
    # each vertex of K_4^(3) lies in C(3,2) = 3 triples
    assert degree_sequence(c43).degrees == (3, 3, 3, 3)


def test_rank_of_vertex_is_a_permutation():
    h = from_edges(5, 2, [(4, 5), (3, 5), (2, 5), (3, 4)])
    d = degree_sequence(h)
    assert d.degrees == (3, 2, 2, 1, 0)
    assert d.rank_of_vertex == (5, 4, 2, 3, 1)
    raw = h.degrees()
    for v in range(1, 6):
        assert d.degrees[d.rank_of_vertex[v - 1] - 1] == raw[v - 1]


def test_components_examples(p3):
    assert components(p3).count == 1
    two = from_edges(6, 3, [(1, 2, 3), (4, 5, 6)])
    assert components(two).component_id == (1, 1, 1, 4, 4, 4)
    lone = from_edges(4, 3, [(1, 2, 3)])
    assert components(lone).groups() == [[1, 2, 3], [4]]


def test_components_ids_use_smallest_vertex():
    h = from_edges(6, 2, [(5, 6), (2, 6), (1, 3)])
    assert components(h).component_id == (1, 2, 1, 4, 2, 2)


def test_generate_examples():
    h = generate("complete", 4, 3)
    assert h.m == 4 and degree_sequence(h).degrees == (3, 3, 3, 3)
    h = generate("single-edge", 5, 3)
    assert h.edges == ((1, 2, 3),)
    assert degree_sequence(h).degrees == (1, 1, 1, 0, 0)
    for seed in range(5):
        assert generate("random-m", 6, 3, 20, seed=seed) == complete(6, 3)


def test_generate_errors():
    with pytest.raises(HypergraphError):
        generate("random-m", 6, 3, 21)
    with pytest.raises(HypergraphError):
        generate("complete", 2, 3)
    with pytest.raises(HypergraphError):
        generate("single-edge", 4, 2, connected=True)


def test_random_m_deterministic():
    a = random_m(9, 3, 12, seed=7)
    assert a == random_m(9, 3, 12, seed=7)
    assert a.m == 12
    assert random_m(9, 3, 12, seed=8) != a


def test_random_m_rejection_path():
    # C(60, 5) > 2^20, so this goes through the rejection sampler
    h = random_m(60, 5, 40, seed=1)
    assert h.m == 40
    assert h == random_m(60, 5, 40, seed=1)


def test_random_m_connected():
    for seed in range(20):
        assert components(random_m(10, 2, 9, seed=seed, connected=True)).count == 1


def test_random_m_is_uniform_over_edges():
    # every one of the C(5,2) pairs should show up at a similar rate
    counts = {}
    for seed in range(2000):
        for e in random_m(5, 2, 3, seed=seed).edges:
            counts[e] = counts.get(e, 0) + 1
    expected = 2000 * 3 / 10
    assert len(counts) == 10
    assert all(abs(c - expected) < 0.15 * expected for c in counts.values())


@pytest.mark.parametrize("n,k", [(5, 2), (6, 3), (7, 4), (4, 4)])
def test_unrank_is_lexicographic(n, k):
    import itertools
    expected = list(itertools.combinations(range(1, n + 1), k))
    assert [unrank_subset(r, n, k) for r in range(binom(n, k))] == expected


@given(hypergraphs())
def test_round_trip(h):
    text = serialize(h)
    assert parse(text) == h
    assert serialize(parse(text)) == text


@given(hypergraphs())
def test_degree_sum(h):
    d = degree_sequence(h)
    assert sum(d.degrees) == h.k * h.m
    assert list(d.degrees) == sorted(d.degrees, reverse=True)


@given(hypergraphs(), st.randoms(use_true_random=False))
def test_components_ignore_edge_order(h, rnd):
    lines = serialize(h).splitlines()
    body = lines[1:]
    rnd.shuffle(body)
    shuffled = parse("\n".join([lines[0], *body]))
    assert components(shuffled) == components(h)


@given(hypergraphs())
def test_components_match_reachability(h):
    # breadth-first search over edges as an independent check
    adj = {v: set() for v in range(1, h.n + 1)}
    for e in h.edges:
        for v in e:
            adj[v].update(e)
    ids = components(h).component_id
    for start in range(1, h.n + 1):
        seen, todo = {start}, [start]
        while todo:
            for w in adj[todo.pop()]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        assert {v for v in range(1, h.n + 1) if ids[v - 1] == ids[start - 1]} == seen
        assert ids[start - 1] == min(seen)


@settings(max_examples=30)
@given(st.integers(2, 5), st.integers(0, 3), st.integers(0, 10**6))
def test_random_m_full_is_complete(k, extra, seed):
    n = k + extra
    assert random_m(n, k, binom(n, k), seed=seed) == complete(n, k)


def test_relabel_and_induced():
    h = from_edges(5, 2, [(1, 2), (4, 5)])
    perm = [5, 4, 3, 2, 1]
    assert h.relabel(perm).edges == ((1, 2), (4, 5))
    sub = h.induced([4, 5])
    assert (sub.n, sub.edges) == (2, ((1, 2),))
    rng = random.Random(3)
    perm = list(range(1, 6))
    rng.shuffle(perm)
    assert degree_sequence(h.relabel(perm)).degrees == degree_sequence(h).degrees


def test_single_edge_and_complete_counts():
    assert complete(7, 3).m == 35
    assert single_edge(7, 7).edges == ((1, 2, 3, 4, 5, 6, 7),)
