# The web K(G) of Kuratowski subgraphs, for a few small graphs.
from collections import Counter

import numpy as np

from linkless import build_web, complete_bipartite, complete_graph, is_connected_web, petersen_graph, vertex_connectivity

for name, g in [("K5", complete_graph(5)), ("K3,3", complete_bipartite(3, 3)),
                ("K6", complete_graph(6)), ("Petersen", petersen_graph())]:
    w = build_web(g)
    kinds = Counter(n.kind for n in w.nodes)
    rel = Counter(w.adjacency.values())
    print(name, "kappa =", vertex_connectivity(g), dict(kinds), dict(rel), "connected:", is_connected_web(w))

# degree spread in K(K6): the bare K5s versus the ones with a subdivided edge
w = build_web(complete_graph(6))
deg = np.array([len(w.neighbors(i)) for i in range(len(w.nodes))])
sizes = np.array([len(n.edge_set) for n in w.nodes])
for s in np.unique(sizes):
    print("nodes with", s, "edges: web degrees", sorted(set(deg[sizes == s].tolist())))

open("k6_web.dot", "w").write(w.to_dot())
