import random
from itertools import combinations
from math import comb

import pytest

from linkless import (ResourceLimitError, build_web, complete_bipartite, complete_graph, enumerate_kuratowski_subgraphs,
                      is_1_adjacent, is_2_adjacent, is_connected_web, is_planar, petersen_graph, vertex_connectivity)
from linkless.graph import Graph, simplify
from linkless.subdivision import K5, K33, subdivision_from_edges, suppress_degree_two, verify_subdivision
from linkless.web import ONE, TWO, KuratowskiWeb, one_adjacency_path, two_adjacency_system

from _oracles import (atlas, brute_is_1_adjacent, brute_is_2_adjacent, brute_kuratowski_edge_sets, random_graph,
                      to_nx)


def model(g, pairs):
    m = subdivision_from_edges(g, [g.edge_between(a, b) for a, b in pairs])
    assert m is not None and verify_subdivision(g, m)
    return m


def k5_on(vs):
    return list(combinations(vs, 2))


def k33_on(a, b):
    return [(x, y) for x in a for y in b]


# -- enumeration ------------------------------------------------------------------------

def test_enumeration_counts():
    assert enumerate_kuratowski_subgraphs(complete_graph(4)) == []
    assert len(enumerate_kuratowski_subgraphs(complete_graph(5))) == 1
    nodes = enumerate_kuratowski_subgraphs(complete_graph(6))
    k5 = sum(n.kind == K5 for n in nodes)
    k33 = sum(n.kind == K33 for n in nodes)
    # six choices of the spare vertex; it either sits idle or subdivides one of ten edges
    assert k5 == 6 * (1 + 10) == 66
    # ordered 3+3 splits of six vertices, halved for the swap
    assert k33 == comb(6, 3) // 2 == 10
    assert len(nodes) == len(brute_kuratowski_edge_sets(complete_graph(6))) == 76


def test_enumerated_models_validate():
    for g in (complete_graph(6), petersen_graph(), complete_bipartite(3, 4)):
        nodes = enumerate_kuratowski_subgraphs(g)
        assert len({n.edge_set for n in nodes}) == len(nodes)
        for n in nodes:
            assert verify_subdivision(g, n)
            sub = g.subgraph_edges(n.edge_set)
            degs = sorted(sub.degrees().values())
            assert degs.count(4 if n.kind == K5 else 3) == (5 if n.kind == K5 else 6)
            assert set(degs) <= {2, 4} if n.kind == K5 else set(degs) <= {2, 3}
            s = to_nx(suppress_degree_two(sub))
            assert s.number_of_edges() == (10 if n.kind == K5 else 9)


@pytest.mark.slow
def test_enumeration_complete_on_small_nonplanar_graphs():
    count = 0
    for g in atlas(7, connected=False):
        if g.n < 5 or is_planar(g).planar:
            continue
        nodes = enumerate_kuratowski_subgraphs(g)
        assert {n.edge_set for n in nodes} == set(brute_kuratowski_edge_sets(g))
        count += 1
    assert count == 237


def test_enumeration_cap():
    with pytest.raises(ResourceLimitError):
        enumerate_kuratowski_subgraphs(complete_graph(11))


# -- 1-adjacency -------------------------------------------------------------------------------

def test_one_adjacency_examples():
    k6 = complete_graph(6)
    h1 = model(k6, k5_on(range(1, 6)))
    h2 = model(k6, [p for p in k5_on(range(1, 6)) if p != (1, 2)] + [(0, 1), (0, 2)])
    assert is_1_adjacent(k6, h1, h2) and is_1_adjacent(k6, h2, h1)
    assert one_adjacency_path(k6, h2, h1) == (1, 2)
    assert one_adjacency_path(k6, h1, h2) == (1, 0, 2)
    k7 = complete_graph(7)
    a = model(k7, k33_on((1, 2, 3), (4, 5, 6)))
    b = model(k7, k5_on(range(1, 6)))
    assert not is_1_adjacent(k7, a, b)
    assert not brute_is_1_adjacent(k7, a, b)


def test_one_adjacency_matches_path_search():
    rng = random.Random(16)
    for g, samples in ((complete_graph(6), 250), (petersen_graph(), None)):
        nodes = enumerate_kuratowski_subgraphs(g)
        pairs = list(combinations(nodes, 2))
        if samples:
            pairs = rng.sample(pairs, samples)
        for h1, h2 in pairs:
            got = is_1_adjacent(g, h1, h2)
            assert got == brute_is_1_adjacent(g, h1, h2)
            assert got == is_1_adjacent(g, h2, h1)
            for base, other in ((h1, h2), (h2, h1)):
                p = one_adjacency_path(g, base, other)
                if p is not None:
                    extra = {g.edge_between(x, y) for x, y in zip(p, p[1:])}
                    assert extra == other.edge_set - base.edge_set


# -- 2-adjacency ----------------------------------------------------------------------------------

def test_two_adjacency_example():
    k7 = complete_graph(7)
    h1 = model(k7, k33_on((1, 2, 3), (4, 5, 6)))
    h2 = model(k7, k33_on((0, 2, 3), (4, 5, 6)))
    u, L = two_adjacency_system(k7, h1, h2)
    assert u == {1: 0, 2: 1, 3: 2, 4: 3, 5: 4, 6: 5, 7: 6}
    assert len(L) == 13 and all(len(p) == 2 for p in L.values())
    assert L[(3, 4)] == (2, 3)
    assert is_2_adjacent(k7, h2, h1)
    assert brute_is_2_adjacent(k7, h1, h2)


def test_two_adjacency_needs_k33_and_distinct():
    k7 = complete_graph(7)
    h1 = model(k7, k33_on((1, 2, 3), (4, 5, 6)))
    k5 = model(k7, k5_on(range(1, 6)))
    assert not is_2_adjacent(k7, h1, k5) and not is_2_adjacent(k7, k5, h1)
    assert not is_2_adjacent(k7, h1, h1)
    # K6 has only six vertices; seven distinct u_i never fit
    k6 = complete_graph(6)
    nodes = [n for n in enumerate_kuratowski_subgraphs(k6) if n.kind == K33]
    assert not any(is_2_adjacent(k6, a, b) for a, b in combinations(nodes, 2))


def test_two_adjacency_system_satisfies_definition():
    g = complete_graph(7)
    h1 = model(g, k33_on((1, 2, 3), (4, 5, 6)))
    h2 = model(g, k33_on((0, 2, 3), (4, 5, 6)))
    u, L = two_adjacency_system(g, h1, h2)
    for (i, j), p in L.items():
        assert (p[0], p[-1]) == (u[i], u[j])
    for p, q in combinations(L.values(), 2):
        assert not (set(p) & set(q)) - ({p[0], p[-1]} & {q[0], q[-1]})

    def edges(rows):
        return {g.edge_between(x, y) for i in rows for j in (5, 6, 7) for x, y in zip(L[(i, j)], L[(i, j)][1:])}

    assert edges((2, 3, 4)) == h1.edge_set and edges((1, 3, 4)) == h2.edge_set


def test_two_adjacency_matches_definition_search():
    rng = random.Random(1)
    positives = 0
    graphs = 0
    while graphs < 3:
        g = random_graph(rng, 7, 0.55)
        if is_planar(g).planar:
            continue
        graphs += 1
        nodes = [n for n in enumerate_kuratowski_subgraphs(g) if n.kind == K33]
        for a, b in combinations(nodes, 2):
            got = is_2_adjacent(g, a, b)
            assert got == brute_is_2_adjacent(g, a, b) == is_2_adjacent(g, b, a)
            positives += got
    assert positives > 0


# -- the web ---------------------------------------------------------------------------------------

def test_web_examples():
    assert build_web(complete_graph(4)).nodes == ()
    w5 = build_web(complete_graph(5))
    assert len(w5.nodes) == 1 and w5.adjacency == {} and is_connected_web(w5)
    w6 = build_web(complete_graph(6))
    assert len(w6.nodes) == 76 and is_connected_web(w6)
    assert set(w6.adjacency.values()) == {ONE}
    assert is_connected_web(KuratowskiWeb((), {}))
    two = KuratowskiWeb(w6.nodes[:2], {})
    assert not is_connected_web(two)


def test_web_labels_are_consistent():
    g = complete_graph(6)
    g = Graph(g.vertices, tuple(t for t in g.edges if t[:2] != (0, 1)))
    w = build_web(g)
    for (i, j), rel in w.adjacency.items():
        assert i < j
        one = is_1_adjacent(g, w.nodes[i], w.nodes[j])
        two = is_2_adjacent(g, w.nodes[i], w.nodes[j])
        assert rel == {(True, False): ONE, (False, True): TWO, (True, True): "both"}[(one, two)]
    assert w.to_dot().startswith("graph K {")


def test_four_connected_graphs_have_connected_webs():
    octahedron = complete_graph(6)
    octahedron = Graph(octahedron.vertices,
                       tuple(t for t in octahedron.edges if t[:2] not in {(0, 1), (2, 3), (4, 5)}))
    assert vertex_connectivity(octahedron) == 4 and is_planar(octahedron).planar
    assert is_connected_web(build_web(octahedron))
    checked = 0
    for g in atlas(7):
        if g.m > 19 or vertex_connectivity(g) < 4 or is_planar(g).planar:
            continue
        assert is_connected_web(build_web(simplify(g)))
        checked += 1
    assert checked >= 20
