"""Subdivisions of K5 and K3,3 inside a host graph.

A :class:`SubdivisionModel` records the branch vertices and the host
path realising each pattern edge.  Pattern edges are index pairs into
``branch_vertices``: all pairs for K5, and ``(i, 3 + j)`` for K3,3 where
the first three branch vertices form one side.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph

K5 = "K5"
K33 = "K33"

PATTERN_EDGES = {
    K5: tuple(combinations(range(5), 2)),
    K33: tuple((i, j) for i in range(3) for j in range(3, 6)),
}


@dataclass(frozen=True)
class SubdivisionModel:
    kind: str
    branch_vertices: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]  # aligned with PATTERN_EDGES[kind]
    edge_set: frozenset[int]

    @property
    def pattern_edges(self) -> tuple[tuple[int, int], ...]:
        return PATTERN_EDGES[self.kind]

    def path_map(self) -> dict[tuple[int, int], tuple[int, ...]]:
        return dict(zip(self.pattern_edges, self.paths))

    def vertex_set(self) -> frozenset[int]:
        return frozenset(v for p in self.paths for v in p)

    def sides(self) -> tuple[frozenset[int], frozenset[int]]:
        b = self.branch_vertices
        return frozenset(b[:3]), frozenset(b[3:])

    def branch_path(self, a: int, b: int) -> tuple[int, ...]:
        """Host path between branch vertices ``a`` and ``b``, oriented a -> b."""
        for p in self.paths:
            if p[0] == a and p[-1] == b:
                return p
            if p[0] == b and p[-1] == a:
                return p[::-1]
        raise KeyError((a, b))

    def to_dict(self, labels=None):
        lab = (lambda v: v) if labels is None else (lambda v: labels[v])
        return {
            "kind": self.kind,
            "branch_vertices": [lab(v) for v in self.branch_vertices],
            "paths": [[lab(v) for v in p] for p in self.paths],
            "edges": sorted(self.edge_set),
        }


def _path_edges(g: Graph, path, allowed=None):
    out = []
    for a, b in zip(path, path[1:]):
        e = None
        if allowed is None:
            e = g.edge_between(a, b)
        else:
            for u, v, f in g.edges:
                if f in allowed and {u, v} == {a, b} and u != v:
                    e = f
                    break
        if e is None:
            return None
        out.append(e)
    return out


def subdivision_from_edges(g: Graph, eids) -> SubdivisionModel | None:
    """Read an edge set of ``g`` as a K5/K3,3 subdivision, or return None."""
    eids = frozenset(eids)
    if not eids:
        return None
    h = g.subgraph_edges(eids)
    if not h.is_simple():
        return None
    deg = h.degrees()
    high = sorted(v for v, d in deg.items() if d != 2)
    if len(high) == 5 and all(deg[v] == 4 for v in high):
        kind = K5
    elif len(high) == 6 and all(deg[v] == 3 for v in high):
        kind = K33
    else:
        return None
    branch = set(high)
    adj = h.adjacency()
    traced: dict[frozenset[int], tuple[int, ...]] = {}
    used_inner: set[int] = set()
    for s in high:
        for first in sorted(adj[s]):
            path = [s, first]
            while path[-1] not in branch:
                nxt = [w for w in adj[path[-1]] if w != path[-2]]
                path.append(nxt[0])
            if path[-1] == s:
                return None
            key = frozenset((s, path[-1]))
            if key in traced:
                if set(traced[key]) != set(path):
                    return None  # two branch paths between the same pair
                continue
            traced[key] = tuple(path)
            used_inner.update(path[1:-1])
    # internal vertices on a cycle disjoint from the branch vertices are never reached
    if used_inner | branch != set(h.vertices):
        return None
    if kind == K5:
        order = high
        if len(traced) != 10:
            return None
    else:
        if len(traced) != 9:
            return None
        side_a = {high[0]} | {v for v in high if frozenset((high[0], v)) not in traced and v != high[0]}
        side_b = branch - side_a
        if len(side_a) != 3 or any(frozenset((a, b)) not in traced for a in side_a for b in side_b):
            return None
        order = sorted(side_a) + sorted(side_b)
    paths = []
    for i, j in PATTERN_EDGES[kind]:
        p = traced[frozenset((order[i], order[j]))]
        paths.append(p if p[0] == order[i] else p[::-1])
    return SubdivisionModel(kind, tuple(order), tuple(paths), eids)


def verify_subdivision(g: Graph, model: SubdivisionModel) -> bool:
    """Check every SubdivisionModel invariant against host ``g``."""
    if model.kind not in PATTERN_EDGES:
        return False
    bv = model.branch_vertices
    want = 5 if model.kind == K5 else 6
    if len(bv) != want or len(set(bv)) != want:
        return False
    if len(model.paths) != len(PATTERN_EDGES[model.kind]):
        return False
    if not all(g.has_edge_id(e) for e in model.edge_set):
        return False
    seen_inner: set[int] = set()
    covered: set[int] = set()
    for (i, j), p in zip(PATTERN_EDGES[model.kind], model.paths):
        if len(p) < 2 or p[0] != bv[i] or p[-1] != bv[j]:
            return False
        inner = p[1:-1]
        if len(set(inner)) != len(inner) or set(inner) & set(bv) or set(inner) & seen_inner:
            return False
        seen_inner.update(inner)
        es = _path_edges(g, p, model.edge_set)
        if es is None or set(es) & covered:
            return False
        covered.update(es)
    return covered == set(model.edge_set)


def suppress_degree_two(g: Graph) -> Graph:
    """Replace every maximal chain through degree-2 vertices by one edge.

    Isolated cycles survive as a loop on one of their vertices.
    """
    vs = list(g.vertices)
    es = [(u, v) for u, v, _ in g.edges]
    while True:
        deg = {v: 0 for v in vs}
        for u, v in es:
            deg[u] += 1
            deg[v] += 1
        pick = next((v for v in vs if deg[v] == 2 and all(v in e and e[0] != e[1] for e in es if v in e)), None)
        if pick is None:
            break
        inc = [e for e in es if pick in e]
        a = inc[0][0] if inc[0][1] == pick else inc[0][1]
        b = inc[1][0] if inc[1][1] == pick else inc[1][1]
        for e in inc:
            es.remove(e)
        es.append((min(a, b), max(a, b)))
        vs.remove(pick)
    return Graph.from_edges(es, vertices=vs)
