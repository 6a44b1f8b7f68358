"""Finite undirected multigraphs and the elementary operations on them.

A :class:`Graph` is an immutable value.  Vertices are small nonnegative
integers, edges are ``(u, v, eid)`` triples with ``u <= v``; loops have
``u == v``.  Edge ids are assigned once and survive deletion and
contraction, which keeps certificates stable.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

from .errors import GraphInputError, ResourceLimitError

DEFAULT_CYCLE_CAP = 12


@dataclass(frozen=True)
class Graph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise GraphInputError("duplicate vertex identifiers")
        ids = set()
        for u, v, e in self.edges:
            if u not in vs or v not in vs:
                raise GraphInputError(f"edge {e} has an endpoint outside the vertex set")
            if u > v:
                raise GraphInputError(f"edge {e} is not normalised (u <= v)")
            if e in ids:
                raise GraphInputError(f"duplicate edge id {e}")
            ids.add(e)

    # -- construction -------------------------------------------------

    @classmethod
    def from_edges(cls, pairs: Iterable[tuple[int, int]], n: int | None = None,
                   vertices: Iterable[int] | None = None) -> "Graph":
        """Build a graph from endpoint pairs; edge ids follow input order.

        With neither ``n`` nor ``vertices`` the vertex set is the set of
        endpoints, sorted.
        """
        pairs = [(min(a, b), max(a, b)) for a, b in pairs]
        if vertices is not None:
            vs = tuple(vertices)
        elif n is not None:
            vs = tuple(range(n))
        else:
            vs = tuple(sorted({x for p in pairs for x in p}))
        return cls(vs, tuple((a, b, i) for i, (a, b) in enumerate(pairs)))

    # -- queries --------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _edge_index(self) -> dict[int, tuple[int, int]]:
        return {e: (u, v) for u, v, e in self.edges}

    @cached_property
    def _adj(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v, _ in self.edges:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    @cached_property
    def _pair_index(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for u, v, e in self.edges:
            out.setdefault((u, v), e)
        return out

    def endpoints(self, e: int) -> tuple[int, int]:
        try:
            return self._edge_index[e]
        except KeyError:
            raise GraphInputError(f"unknown edge id {e}") from None

    def has_edge_id(self, e: int) -> bool:
        return e in self._edge_index

    def neighbors(self, v: int) -> frozenset[int]:
        """Distinct neighbours of ``v`` other than ``v`` itself."""
        return self._adj[v]

    def adjacency(self) -> dict[int, frozenset[int]]:
        return dict(self._adj)

    def edge_between(self, u: int, v: int) -> int | None:
        """Least edge id joining ``u`` and ``v``, or None."""
        return self._pair_index.get((min(u, v), max(u, v)))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._pair_index

    def degree(self, v: int) -> int:
        """Valency of ``v``; a loop counts twice."""
        return sum((u == v) + (w == v) for u, w, _ in self.edges)

    def degrees(self) -> dict[int, int]:
        deg = {v: 0 for v in self.vertices}
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_simple(self) -> bool:
        pairs = [(u, v) for u, v, _ in self.edges]
        return all(u != v for u, v in pairs) and len(set(pairs)) == len(pairs)

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, _ in self.edges]

    def next_vertex(self) -> int:
        return max(self.vertices, default=-1) + 1

    def next_edge_id(self) -> int:
        return max((e for _, _, e in self.edges), default=-1) + 1

    # -- structural helpers --------------------------------------------

    def relabel(self, mapping: dict[int, int]) -> "Graph":
        """Rename vertices; edges keep their ids."""
        vs = tuple(mapping[v] for v in self.vertices)
        es = []
        for u, v, e in self.edges:
            a, b = mapping[u], mapping[v]
            es.append((min(a, b), max(a, b), e))
        return Graph(vs, tuple(es))

    def dense(self) -> "Graph":
        """Relabel to ``0..n-1`` in vertex order and renumber edges ``0..m-1``."""
        index = {v: i for i, v in enumerate(self.vertices)}
        return Graph.from_edges(((index[u], index[v]) for u, v, _ in self.edges), n=self.n)

    def subgraph_edges(self, eids: Iterable[int]) -> "Graph":
        """Edge-induced subgraph (no isolated vertices)."""
        keep = set(eids)
        es = tuple(t for t in self.edges if t[2] in keep)
        vs = tuple(v for v in self.vertices if any(v in t[:2] for t in es))
        return Graph(vs, es)

    def induced(self, vs: Iterable[int]) -> "Graph":
        keep = set(vs)
        return Graph(tuple(v for v in self.vertices if v in keep),
                     tuple(t for t in self.edges if t[0] in keep and t[1] in keep))

    def remove_vertices(self, vs: Iterable[int]) -> "Graph":
        drop = set(vs)
        return self.induced(v for v in self.vertices if v not in drop)

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def to_networkx(self) -> nx.MultiGraph:
        G = nx.MultiGraph()
        G.add_nodes_from(self.vertices)
        for u, v, e in self.edges:
            G.add_edge(u, v, key=e)
        return G

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, edges={self.edge_pairs()})"


# -- standard graphs ----------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(combinations(range(n), 2), n=n)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(((i, a + j) for i in range(a) for j in range(b)), n=a + b)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(((i, (i + 1) % n) for i in range(n)), n=n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(((i, i + 1) for i in range(n - 1)), n=n)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(outer + spokes + inner, n=10)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.next_vertex()
    eshift = g.next_edge_id()
    vs = g.vertices + tuple(v + shift for v in h.vertices)
    es = g.edges + tuple((u + shift, v + shift, e + eshift) for u, v, e in h.edges)
    return Graph(vs, es)


# -- elementary operations ---------------------------------------------

def delete_edge(g: Graph, e: int) -> Graph:
    g.endpoints(e)
    return Graph(g.vertices, tuple(t for t in g.edges if t[2] != e))


def contract_edge(g: Graph, e: int) -> Graph:
    """Identify the ends of non-loop edge ``e``; the smaller id survives.

    Every other edge is kept, so loops and parallel edges can appear.
    """
    a, b = g.endpoints(e)
    if a == b:
        raise GraphInputError(f"edge {e} is a loop; delete it instead")
    keep, gone = a, b
    es = []
    for u, v, f in g.edges:
        if f == e:
            continue
        u = keep if u == gone else u
        v = keep if v == gone else v
        es.append((min(u, v), max(u, v), f))
    return Graph(tuple(v for v in g.vertices if v != gone), tuple(es))


def simplify(g: Graph) -> Graph:
    """Drop loops and keep the least-id edge of each parallel class."""
    seen = set()
    es = []
    for u, v, e in sorted(g.edges, key=lambda t: t[2]):
        if u == v or (u, v) in seen:
            continue
        seen.add((u, v))
        es.append((u, v, e))
    order = {e: i for i, (_, _, e) in enumerate(g.edges)}
    es.sort(key=lambda t: order[t[2]])
    return Graph(g.vertices, tuple(es))


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex cut size; ``n - 1`` for complete graphs."""
    if g.n <= 1:
        return 0
    return nx.node_connectivity(nx.Graph(simplify(g).to_networkx()))


# -- planarity -------------------------------------------------------------

@dataclass(frozen=True)
class PlanarityVerdict:
    planar: bool
    witness: "KuratowskiWitness | None" = None

    def __bool__(self):
        return self.planar


@dataclass(frozen=True)
class KuratowskiWitness:
    kind: str
    model: "SubdivisionModel"


def is_planar(g: Graph) -> PlanarityVerdict:
    """Planarity test; a nonplanar verdict carries a verified Kuratowski subgraph."""
    from .subdivision import subdivision_from_edges, verify_subdivision

    s = simplify(g)
    G = nx.Graph()
    G.add_nodes_from(s.vertices)
    G.add_edges_from(s.edge_pairs())
    planar, cert = nx.check_planarity(G, counterexample=True)
    if planar:
        return PlanarityVerdict(True)
    eids = [s.edge_between(u, v) for u, v in cert.edges()]
    model = subdivision_from_edges(s, eids)
    if model is None or not verify_subdivision(g, model):
        raise AssertionError("planarity counterexample is not a Kuratowski subgraph")
    return PlanarityVerdict(False, KuratowskiWitness(model.kind, model))


# -- canonical labelling ------------------------------------------------------

def _refine(adj, cells):
    """Equitable refinement of an ordered partition (list of lists)."""
    while True:
        color = {}
        for i, cell in enumerate(cells):
            for v in cell:
                color[v] = i
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {v: tuple(sorted(color[w] for w in adj[v])) for v in cell}
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            if len(groups) > 1:
                changed = True
            for key in sorted(groups):
                new_cells.append(groups[key])
        cells = new_cells
        if not changed:
            return cells


def _certificate(adj, order):
    n = len(order)
    bits = 0
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if order[j] in adj[order[i]]:
                bits |= 1 << k
            k += 1
    return bits


def canonical_order(g: Graph) -> list[int]:
    """Vertex order under which the adjacency matrix is canonical."""
    if not g.is_simple():
        raise GraphInputError("canonical_order expects a simple graph")
    adj = g.adjacency()
    if g.n == 0:
        return []
    deg_cells: dict[int, list[int]] = {}
    for v in g.vertices:
        deg_cells.setdefault(len(adj[v]), []).append(v)
    start = _refine(adj, [deg_cells[d] for d in sorted(deg_cells)])
    best: list = [None, None]

    def search(cells):
        if all(len(c) == 1 for c in cells):
            order = [c[0] for c in cells]
            cert = _certificate(adj, order)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, order
            return
        i = min((k for k, c in enumerate(cells) if len(c) > 1), key=lambda k: (len(cells[k]), k))
        cell = cells[i]
        tried: list[int] = []
        for v in cell:
            # twins within a cell are swapped by an automorphism fixing the partition
            if any(adj[v] - {u} == adj[u] - {v} for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(_refine(adj, cells[:i] + [[v], rest] + cells[i + 1:]))

    search(start)
    return best[1]


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte label of a simple graph."""
    order = canonical_order(g)
    n = len(order)
    bits = _certificate(g.adjacency(), order) if n else 0
    nbytes = (n * (n - 1) // 2 + 7) // 8
    return n.to_bytes(2, "big") + bits.to_bytes(nbytes, "big")


def canonical_relabel(g: Graph) -> Graph:
    """Isomorphic copy on ``0..n-1`` laid out in canonical order, edges sorted."""
    order = canonical_order(g)
    pos = {v: i for i, v in enumerate(order)}
    pairs = sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v, _ in g.edges)
    return Graph.from_edges(pairs, n=g.n)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


# -- cycles --------------------------------------------------------------------

def enumerate_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> list[tuple[int, ...]]:
    """All simple cycles of a simple graph, each once.

    A cycle is reported starting at its least vertex, then its smaller
    neighbour on the cycle.
    """
    if g.n > cap:
        raise ResourceLimitError(f"cycle enumeration capped at {cap} vertices, graph has {g.n}")
    if not g.is_simple():
        raise GraphInputError("enumerate_cycles expects a simple graph")
    adj = {v: sorted(ns) for v, ns in g.adjacency().items()}
    out: list[tuple[int, ...]] = []
    for s in sorted(g.vertices):
        path = [s]
        on_path = {s}

        def extend(x):
            for y in adj[x]:
                if y == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif y > s and y not in on_path:
                    path.append(y)
                    on_path.add(y)
                    extend(y)
                    path.pop()
                    on_path.discard(y)

        extend(s)
    return out


def cycle_edges(g: Graph, cycle: Sequence[int]) -> list[int]:
    """Edge ids traversed by a cycle given as a vertex sequence."""
    k = len(cycle)
    if k < 3:
        raise GraphInputError("a cycle needs at least three vertices")
    if len(set(cycle)) != k:
        raise GraphInputError("cycle repeats a vertex")
    out = []
    for i in range(k):
        e = g.edge_between(cycle[i], cycle[(i + 1) % k])
        if e is None:
            raise GraphInputError(f"{cycle[i]}-{cycle[(i + 1) % k]} is not an edge")
        out.append(e)
    return out
