"""Y-Delta and Delta-Y exchanges, and exchange closures of a seed graph."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import GraphInputError
from .graph import Graph, canonical_form, canonical_relabel, complete_graph

YDELTA = "YDelta"
DELTAY = "DeltaY"


@dataclass(frozen=True)
class ExchangeMove:
    kind: str
    site: int | tuple[int, int, int]


def y_delta(g: Graph, v: int, multigraph: bool = False) -> Graph:
    """Delete a valency-3 vertex and join its neighbours pairwise.

    In the default simple mode a neighbour pair that is already adjacent
    gets no second edge; with ``multigraph=True`` all three edges are added.
    """
    if v not in g.vertices:
        raise GraphInputError(f"unknown vertex {v}")
    inc = [t for t in g.edges if v in t[:2]]
    if len(inc) != 3 or any(a == b for a, b, _ in inc):
        raise GraphInputError(f"vertex {v} does not have valency 3")
    nbrs = sorted(a if b == v else b for a, b, _ in inc)
    if len(set(nbrs)) != 3:
        raise GraphInputError(f"vertex {v} has repeated neighbours")
    h = g.remove_vertices([v])
    eid = g.next_edge_id()
    new = []
    for a, b in combinations(nbrs, 2):
        if multigraph or not h.has_edge(a, b):
            new.append((a, b, eid))
            eid += 1
    return Graph(h.vertices, h.edges + tuple(new))


def delta_y(g: Graph, t) -> Graph:
    """Remove the edges of triangle ``t`` and attach a new vertex to its corners."""
    a, b, c = sorted(t)
    if len({a, b, c}) != 3 or not all(x in g.vertices for x in (a, b, c)):
        raise GraphInputError(f"{t} is not a vertex triple of the graph")
    tri = {(a, b), (a, c), (b, c)}
    if not all(g.has_edge(*p) for p in tri):
        raise GraphInputError(f"{t} does not span a triangle")
    drop = {g.edge_between(*p) for p in tri}
    w = g.next_vertex()
    eid = g.next_edge_id()
    es = tuple(e for e in g.edges if e[2] not in drop)
    es += tuple((x, w, eid + i) for i, x in enumerate((a, b, c)))
    return Graph(g.vertices + (w,), es)


def legal_moves(g: Graph) -> list[ExchangeMove]:
    """Every exchange applicable to simple ``g``, in deterministic site order."""
    adj = g.adjacency()
    moves = [ExchangeMove(YDELTA, v) for v in sorted(g.vertices) if len(adj[v]) == 3 and g.degree(v) == 3]
    for a, b, c in combinations(sorted(g.vertices), 3):
        if b in adj[a] and c in adj[a] and c in adj[b]:
            moves.append(ExchangeMove(DELTAY, (a, b, c)))
    return moves


def apply_move(g: Graph, move: ExchangeMove, multigraph: bool = False) -> Graph:
    if move.kind == YDELTA:
        return y_delta(g, move.site, multigraph=multigraph)
    if move.kind == DELTAY:
        return delta_y(g, move.site)
    raise GraphInputError(f"unknown move kind {move.kind!r}")


def _y_delta_hits_edge(g: Graph, v: int) -> bool:
    nbrs = sorted(g.neighbors(v))
    return any(g.has_edge(a, b) for a, b in combinations(nbrs, 2))


def exchange_closure(seed: Graph, max_vertices: int | None = None) -> list[Graph]:
    """All graphs reachable from ``seed`` by exchanges, one per isomorphism class.

    Breadth-first over canonical forms.  Members come back canonically
    relabelled, sorted by ``(|V|, canonical_form)``.  ``max_vertices``
    aborts with an error if the closure grows past it.
    """
    start = canonical_relabel(seed)
    seen = {canonical_form(start): start}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for move in legal_moves(g):
            h = canonical_relabel(apply_move(g, move))
            if max_vertices is not None and h.n > max_vertices:
                raise AssertionError(f"exchange closure exceeded {max_vertices} vertices")
            key = canonical_form(h)
            if key not in seen:
                seen[key] = h
                queue.append(h)
    return [seen[k] for k in sorted(seen, key=lambda k: (seen[k].n, k))]


_FAMILY: list[Graph] | None = None


def petersen_family() -> list[Graph]:
    """The seven graphs reachable from K6; index ``i`` is family member ``i + 1``.

    Also checks that no Y-Delta move inside the closure meets an existing
    neighbour edge, so simple and multigraph exchange semantics agree here.
    """
    global _FAMILY
    if _FAMILY is None:
        members = exchange_closure(complete_graph(6), max_vertices=10)
        for g in members:
            for move in legal_moves(g):
                if move.kind == YDELTA and _y_delta_hits_edge(g, move.site):
                    raise AssertionError("Y-Delta move in the K6 closure would create a parallel edge")
        _FAMILY = members
    return list(_FAMILY)
