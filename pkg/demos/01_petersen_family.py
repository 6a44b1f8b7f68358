# The seven graphs reachable from K6 by Y-Delta and Delta-Y exchanges.
import networkx as nx

from linkless import petersen_family, to_graph6
from linkless.exchange import legal_moves

family = petersen_family()

for i, g in enumerate(family, 1):
    degs = sorted(g.degrees().values(), reverse=True)
    print(i, to_graph6(g), g.n, "vertices", g.m, "edges", degs)

# the last one is the Petersen graph itself
P = nx.Graph(family[-1].edge_pairs())
print("girth", nx.girth(P), "regular", set(d for _, d in P.degree()))

# how many exchanges each member admits
for i, g in enumerate(family, 1):
    moves = legal_moves(g)
    print(i, sum(m.kind == "YDelta" for m in moves), "Y-Delta,", sum(m.kind == "DeltaY" for m in moves), "Delta-Y")
