# Linkless or not: look for a Petersen-family minor and print the certificate.
import random
from itertools import combinations

from linkless import Graph, complete_graph, is_linklessly_embeddable, petersen_family, petersen_graph

def show(name, g):
    v = is_linklessly_embeddable(g)
    if v.embeddable:
        print(name, "-> linklessly embeddable")
        return
    print(name, "-> contains member", v.family_member)
    for p, B in sorted(v.model.branch_sets.items()):
        print("   ", p, "<-", sorted(B))

show("K6", complete_graph(6))
show("Petersen", petersen_graph())
show("K5", complete_graph(5))

# K7 minus a triangle: no K6 subgraph any more, but still intrinsically linked
k7 = complete_graph(7)
g = Graph(k7.vertices, tuple(t for t in k7.edges if t[:2] not in {(0, 1), (1, 2), (0, 2)}))
show("K7 minus a triangle", g)

# a random sparse graph on 11 vertices
rng = random.Random(3)
pairs = [p for p in combinations(range(11), 2) if rng.random() < 0.35]
show("G(11, 0.35)", Graph.from_edges(pairs, n=11))

print(len(petersen_family()), "family members checked each time")
