import random
from itertools import combinations, permutations

import pytest

from linkless import (GraphInputError, Mod2, complete_graph, conway_gordon_sum, convex_diagram, crossing_change,
                      disjoint_cycle_pairs, linking_number)
from linkless.diagram import Crossing, diagram_from_dict, inter_crossings, validate_diagram
from linkless.graph import Graph, cycle_edges, cycle_graph, disjoint_union, path_graph, simplify

from _oracles import circle_points, random_graph, segments_cross


def test_mod2_arithmetic():
    assert Mod2(3) == 1 and Mod2(2) == Mod2(0)
    assert Mod2(1) + 1 == 0 and 1 + Mod2(1) == Mod2(0)
    assert int(Mod2(5)) == 1


def test_crossing_counts():
    assert convex_diagram(complete_graph(3)).crossings == ()
    d = convex_diagram(complete_graph(4), (0, 1, 2, 3))
    g = d.graph
    assert [(g.endpoints(c.a), g.endpoints(c.b)) for c in d.crossings] == [((0, 2), (1, 3))]
    rng = random.Random(0)
    for _ in range(10):
        order = list(range(6))
        rng.shuffle(order)
        assert len(convex_diagram(complete_graph(6), order).crossings) == 15


def test_crossings_match_geometry():
    rng = random.Random(12)
    for _ in range(50):
        g = random_graph(rng, rng.randint(4, 9), rng.uniform(0.3, 0.9))
        order = list(g.vertices)
        rng.shuffle(order)
        pts = circle_points(order)
        want = [(e1, e2) for (u1, v1, e1), (u2, v2, e2) in combinations(g.edges, 2)
                if segments_cross(pts[u1], pts[v1], pts[u2], pts[v2])]
        d = convex_diagram(g, order)
        assert [(c.a, c.b) for c in d.crossings] == want
        assert validate_diagram(d)


def test_over_rules():
    g = complete_graph(4)
    lex = convex_diagram(g, rule="lex").crossings[0]
    rev = convex_diagram(g, rule="reverse-lex").crossings[0]
    assert g.endpoints(lex.over_edge) == (0, 2) and g.endpoints(rev.over_edge) == (1, 3)
    k6 = complete_graph(6)
    assert convex_diagram(k6, rule="random", seed=5) == convex_diagram(k6, rule="random", seed=5)
    with pytest.raises(GraphInputError):
        convex_diagram(g, rule="sideways")
    with pytest.raises(GraphInputError):
        convex_diagram(g, assignment=["a", "a"])


def test_rejects_loops_and_bad_orders():
    with pytest.raises(GraphInputError):
        convex_diagram(Graph.from_edges([(0, 0), (0, 1)]))
    with pytest.raises(GraphInputError):
        convex_diagram(complete_graph(4), (0, 1, 2))


def test_dict_round_trip_and_validation():
    d = convex_diagram(complete_graph(5), (4, 2, 0, 1, 3), rule="random", seed=2)
    assert diagram_from_dict(d.graph, d.to_dict()) == d
    data = d.to_dict()
    data["crossings"] = data["crossings"][1:]
    with pytest.raises(GraphInputError):
        diagram_from_dict(d.graph, data)


def test_crossing_change_involution_and_bounds():
    d = convex_diagram(complete_graph(6))
    for i in range(len(d.crossings)):
        assert crossing_change(crossing_change(d, i), i) == d
    with pytest.raises(GraphInputError):
        crossing_change(d, 15)


def test_linking_number_examples():
    d = convex_diagram(complete_graph(6), (0, 1, 2, 3, 4, 5))
    c1, c2 = (0, 2, 4), (1, 3, 5)
    assert inter_crossings(d, c1, c2) == 6
    # hand count: under the lex rule every chord of (0,2,4) beats every chord of (1,3,5)
    # it crosses except (2,4) vs (1,3), where (1,3) < (2,4); five over-crossings
    assert linking_number(d, c1, c2) == 1
    assert linking_number(d, c2, c1) == 1
    e1 = {d.graph.edge_between(a, b) for a, b in ((0, 2), (2, 4), (0, 4))}
    e2 = {d.graph.edge_between(a, b) for a, b in ((1, 3), (3, 5), (1, 5))}
    i = next(k for k, c in enumerate(d.crossings) if {c.a, c.b} <= e1 | e2 and (c.a in e1) != (c.b in e1))
    assert linking_number(crossing_change(d, i), c1, c2) == 0
    far = convex_diagram(disjoint_union(cycle_graph(3), cycle_graph(3)))
    assert linking_number(far, (0, 1, 2), (3, 4, 5)) == 0
    with pytest.raises(GraphInputError):
        linking_number(d, (0, 1, 2), (2, 3, 4))


def test_disjoint_cycle_pairs_examples():
    assert len(disjoint_cycle_pairs(complete_graph(6))) == 10
    assert disjoint_cycle_pairs(complete_graph(4)) == []
    assert len(disjoint_cycle_pairs(disjoint_union(cycle_graph(3), cycle_graph(3)))) == 1
    assert conway_gordon_sum(convex_diagram(path_graph(5))) == 0


def test_even_intersection_and_symmetry():
    rng = random.Random(13)
    for seed in range(100):
        g = random_graph(rng, rng.randint(6, 9), rng.uniform(0.3, 0.7))
        order = list(g.vertices)
        rng.shuffle(order)
        d = convex_diagram(g, order, rule="random", seed=seed)
        for c1, c2 in disjoint_cycle_pairs(g):
            assert inter_crossings(d, c1, c2) % 2 == 0
            assert linking_number(d, c1, c2) == linking_number(d, c2, c1)


def _lk_table(d):
    return {(c1, c2): linking_number(d, c1, c2) for c1, c2 in disjoint_cycle_pairs(d.graph)}


def test_crossing_change_parity_on_k6():
    d = convex_diagram(complete_graph(6))
    base = _lk_table(d)
    g = d.graph
    for i, c in enumerate(d.crossings):
        flipped = _lk_table(crossing_change(d, i))
        changed = {p for p in base if base[p] != flipped[p]}
        expected = set()
        for c1, c2 in base:
            e1, e2 = set(cycle_edges(g, c1)), set(cycle_edges(g, c2))
            if (c.a in e1 and c.b in e2) or (c.a in e2 and c.b in e1):
                expected.add((c1, c2))
        assert changed == expected
        assert len(changed) == 2


def test_k6_invariance_over_orders_and_assignments():
    k6 = complete_graph(6)
    orders = {min(tuple(p[i:] + p[:i]) for i in range(6)) for p in permutations(range(6))}
    orders = {min(o, (o[0],) + tuple(reversed(o[1:]))) for o in orders}
    assert len(orders) == 60
    for o in orders:
        assert conway_gordon_sum(convex_diagram(k6, o)) == 1
    rng = random.Random(14)
    for _ in range(200):
        overs = [rng.choice("ab") for _ in range(15)]
        assert conway_gordon_sum(convex_diagram(k6, assignment=overs)) == 1


def test_deterministic_construction():
    g = simplify(random_graph(random.Random(15), 8, 0.6))
    a, b = convex_diagram(g, rule="lex"), convex_diagram(g, rule="lex")
    assert a == b and all(isinstance(c, Crossing) for c in a.crossings)
