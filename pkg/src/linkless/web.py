"""Kuratowski subgraphs of a graph and the web K(G) they span.

The nodes of K(G) are the subgraphs isomorphic to a subdivision of K5 or
K3,3, identified by edge set.  Two nodes are joined when they are
1-adjacent (one becomes a supergraph of the other after adding a single
path) or 2-adjacent (two K3,3 subdivisions that share two full rows of
branch paths, see :func:`is_2_adjacent`).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .errors import GraphInputError, ResourceLimitError
from .graph import Graph
from .subdivision import K5, K33, PATTERN_EDGES, SubdivisionModel

DEFAULT_WEB_CAP = 10

ONE = "1-adjacent"
TWO = "2-adjacent"
BOTH = "both"


def _paths_between(adj, a, b, blocked):
    """Simple a-b paths whose interior avoids ``blocked``, in DFS order."""
    path = [a]
    seen = {a}

    def walk(x):
        for y in adj[x]:
            if y == b:
                yield tuple(path) + (b,)
            elif y not in seen and y not in blocked:
                seen.add(y)
                path.append(y)
                yield from walk(y)
                path.pop()
                seen.discard(y)

    yield from walk(a)


def _path_systems(adj, branch, pairs):
    """Every choice of internally disjoint paths realising ``pairs``."""
    chosen: list[tuple[int, ...]] = []
    used = set(branch)

    def rec(k):
        if k == len(pairs):
            yield tuple(chosen)
            return
        a, b = pairs[k]
        for p in _paths_between(adj, a, b, used):
            inner = p[1:-1]
            chosen.append(p)
            used.update(inner)
            yield from rec(k + 1)
            used.difference_update(inner)
            chosen.pop()

    yield from rec(0)


def enumerate_kuratowski_subgraphs(g: Graph, cap: int = DEFAULT_WEB_CAP) -> list[SubdivisionModel]:
    """All subgraphs of ``g`` that subdivide K5 or K3,3, each once.

    K5 subdivisions come first, ordered by branch set; then K3,3
    subdivisions by side pair.  Within one branch choice, path systems are
    produced in depth-first order over sorted neighbours.
    """
    if g.n > cap:
        raise ResourceLimitError(f"Kuratowski enumeration capped at {cap} vertices, graph has {g.n}")
    if not g.is_simple():
        raise GraphInputError("enumerate_kuratowski_subgraphs expects a simple graph")
    adj = {v: sorted(ns) for v, ns in g.adjacency().items()}
    out: list[SubdivisionModel] = []
    seen: set[frozenset[int]] = set()

    def emit(kind, order, paths):
        eids = frozenset(g.edge_between(x, y) for p in paths for x, y in zip(p, p[1:]))
        if eids not in seen:
            seen.add(eids)
            out.append(SubdivisionModel(kind, tuple(order), tuple(paths), eids))

    verts = sorted(g.vertices)
    rich4 = [v for v in verts if len(adj[v]) >= 4]
    for S in combinations(rich4, 5):
        pairs = [(S[i], S[j]) for i, j in PATTERN_EDGES[K5]]
        for paths in _path_systems(adj, S, pairs):
            emit(K5, S, paths)
    rich3 = [v for v in verts if len(adj[v]) >= 3]
    for six in combinations(rich3, 6):
        first, others = six[0], six[1:]
        for mates in combinations(others, 2):
            A = (first,) + mates
            B = tuple(v for v in others if v not in mates)
            order = A + B
            pairs = [(order[i], order[j]) for i, j in PATTERN_EDGES[K33]]
            for paths in _path_systems(adj, order, pairs):
                emit(K33, order, paths)
    return out


def _vertices_of(g: Graph, eids) -> set[int]:
    out = set()
    for e in eids:
        out.update(g.endpoints(e))
    return out


def _as_single_path(g: Graph, eids):
    """Vertex sequence if the edge set is exactly one simple path, else None."""
    if not eids:
        return None
    adj: dict[int, list[int]] = {}
    for e in eids:
        u, v = g.endpoints(e)
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    ends = [v for v, ns in adj.items() if len(ns) == 1]
    if len(ends) != 2 or any(len(ns) > 2 for ns in adj.values()):
        return None
    path = [min(ends)]
    prev = None
    while True:
        nxt = [w for w in adj[path[-1]] if w != prev]
        if not nxt:
            break
        prev = path[-1]
        path.append(nxt[0])
    return tuple(path) if len(path) == len(adj) else None


def one_adjacency_path(g: Graph, base: SubdivisionModel, other: SubdivisionModel):
    """A path P meeting ``base`` only at its ends with ``other`` inside base + P, or None.

    Every edge of such a P must belong to ``other`` (otherwise the part of
    P beyond that edge dangles and ``other``, having no vertices of degree
    below 2, cannot use it), so P is forced to be exactly the edges of
    ``other`` missing from ``base``.
    """
    extra = other.edge_set - base.edge_set
    path = _as_single_path(g, extra)
    if path is None:
        return None
    hv = _vertices_of(g, base.edge_set)
    if path[0] not in hv or path[-1] not in hv or hv.intersection(path[1:-1]):
        return None
    return path


def is_1_adjacent(g: Graph, h1: SubdivisionModel, h2: SubdivisionModel) -> bool:
    return (one_adjacency_path(g, h1, h2) is not None
            or one_adjacency_path(g, h2, h1) is not None)


def _l34_path(g: Graph, u3: int, u4: int, blocked: set[int]):
    """Shortest u3-u4 path whose interior avoids ``blocked`` (BFS, least labels first)."""
    parent = {u3: None}
    queue = deque([u3])
    while queue:
        x = queue.popleft()
        for y in sorted(g.neighbors(x)):
            if y in parent:
                continue
            if y == u4:
                path = [u4, x]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return tuple(reversed(path))
            if y not in blocked:
                parent[y] = x
                queue.append(y)
    return None


def _meet_only_at_common_ends(paths) -> bool:
    for p, q in combinations(paths, 2):
        common = set(p) & set(q)
        if common - ({p[0], p[-1]} & {q[0], q[-1]}):
            return False
    return True


def two_adjacency_system(g: Graph, h1: SubdivisionModel, h2: SubdivisionModel):
    """Labels u1..u7 and the thirteen paths L_ij witnessing 2-adjacency, or None.

    H1 must be the K3,3 subdivision on rows u2,u3,u4 against u5,u6,u7 and
    H2 the one on rows u1,u3,u4; rows u3 and u4 are therefore branch-path
    triples common to both.  The extra path L_34 is searched in ``g``
    avoiding every other path.  Returns ``(u, L)`` with ``u`` a dict
    ``{1..7: vertex}`` and ``L`` a dict ``{(i, j): path}``.
    """
    if h1.kind != K33 or h2.kind != K33 or h1.edge_set == h2.edge_set:
        return None
    s1, s2 = h1.sides(), h2.sides()
    for A1, B1 in (s1, s1[::-1]):
        for A2, B2 in (s2, s2[::-1]):
            if B1 != B2 or len(A1 & A2) != 2:
                continue
            (u2,), (u1,) = A1 - A2, A2 - A1
            u3, u4 = sorted(A1 & A2)
            u5, u6, u7 = sorted(B1)
            u = {1: u1, 2: u2, 3: u3, 4: u4, 5: u5, 6: u6, 7: u7}
            L = {}
            ok = True
            for i in (3, 4):
                for j in (5, 6, 7):
                    p = h1.branch_path(u[i], u[j])
                    if p != h2.branch_path(u[i], u[j]):
                        ok = False
                    L[(i, j)] = p
            if not ok:
                continue
            for j in (5, 6, 7):
                L[(2, j)] = h1.branch_path(u2, u[j])
                L[(1, j)] = h2.branch_path(u1, u[j])
            if not _meet_only_at_common_ends(list(L.values())):
                continue
            used = set().union(*L.values())
            l34 = _l34_path(g, u3, u4, used - {u3, u4})
            if l34 is None:
                continue
            L[(3, 4)] = l34
            return u, L
    return None


def is_2_adjacent(g: Graph, h1: SubdivisionModel, h2: SubdivisionModel) -> bool:
    return two_adjacency_system(g, h1, h2) is not None


@dataclass(frozen=True)
class KuratowskiWeb:
    nodes: tuple[SubdivisionModel, ...]
    adjacency: dict[tuple[int, int], str] = field(hash=False)

    def neighbors(self, i: int) -> list[int]:
        return sorted({b if a == i else a for a, b in self.adjacency if i in (a, b)})

    def to_dict(self, labels=None) -> dict:
        return {
            "nodes": [n.to_dict(labels) for n in self.nodes],
            "adjacency": [{"pair": [a, b], "relation": rel} for (a, b), rel in sorted(self.adjacency.items())],
        }

    def to_dot(self) -> str:
        lines = ["graph K {"]
        for i, n in enumerate(self.nodes):
            lines.append(f'  {i} [label="{n.kind} {" ".join(map(str, n.branch_vertices))}"];')
        for (a, b), rel in sorted(self.adjacency.items()):
            lines.append(f'  {a} -- {b} [label="{rel}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_web(g: Graph, cap: int = DEFAULT_WEB_CAP) -> KuratowskiWeb:
    nodes = enumerate_kuratowski_subgraphs(g, cap=cap)
    adjacency: dict[tuple[int, int], str] = {}
    for i, j in combinations(range(len(nodes)), 2):
        one = is_1_adjacent(g, nodes[i], nodes[j])
        two = is_2_adjacent(g, nodes[i], nodes[j])
        if one or two:
            adjacency[(i, j)] = BOTH if one and two else (ONE if one else TWO)
    return KuratowskiWeb(tuple(nodes), adjacency)


def is_connected_web(w: KuratowskiWeb) -> bool:
    n = len(w.nodes)
    if n <= 1:
        return True
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    for a, b in w.adjacency:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n
