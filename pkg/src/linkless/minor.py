"""Exact minor containment with certificates, and the linkless-embedding decision.

``has_minor`` is a backtracking search over branch sets.  Pattern vertices
are placed one at a time; each is given a connected set of free host
vertices touching the branch sets of its already-placed neighbours.
Candidates are tried smallest first, then lexicographically, so the
returned model is the first one in that order.

Two sound shortcuts run first: a pattern that is not apex (no vertex
whose deletion leaves it planar) is never a minor of an apex host, since
apex graphs are closed under minors.  Before searching, the host is reduced in ways that cannot destroy a model
of the pattern: vertices of degree below 2 are deleted when the pattern
has minimum degree 2, and degree-2 vertices are suppressed when it has
minimum degree 3.  Models found in the reduced host are lifted back.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import GraphInputError, ResourceLimitError
from .exchange import petersen_family
from .graph import Graph, is_planar, simplify

DEFAULT_MINOR_CAP = 16


@dataclass(frozen=True)
class MinorModel:
    """``branch_sets[p]`` realises pattern vertex p; ``edge_map[f]`` is the host edge for pattern edge f."""

    branch_sets: dict[int, frozenset[int]] = field(hash=False)
    edge_map: dict[int, int] = field(hash=False)


@dataclass(frozen=True)
class LinklessVerdict:
    embeddable: bool
    family_member: int | None = None
    model: MinorModel | None = None


def verify_minor_model(g: Graph, h: Graph, m: MinorModel) -> bool:
    try:
        return _verify(g, h, m)
    except (TypeError, KeyError, ValueError, AttributeError):
        return False


def _verify(g, h, m):
    bs = m.branch_sets
    if set(bs) != set(h.vertices):
        return False
    owner = {}
    gv = set(g.vertices)
    for p, B in bs.items():
        B = set(B)
        if not B or not B <= gv:
            return False
        for v in B:
            if v in owner:
                return False
            owner[v] = p
        if not _connected_within(g, B):
            return False
    if set(m.edge_map) != {e for _, _, e in h.edges}:
        return False
    if len(set(m.edge_map.values())) != len(m.edge_map):
        return False
    for u, v, f in h.edges:
        x, y = g.endpoints(m.edge_map[f])
        if not ((x in bs[u] and y in bs[v]) or (x in bs[v] and y in bs[u])):
            return False
    return True


def _connected_within(g, B):
    start = next(iter(B))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y in B and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == B


# -- host reduction ----------------------------------------------------------

def _reduce(adj: dict[int, set[int]], min_pattern_degree: int):
    """Shrink the host in place; return the undo log of suppressed vertices."""
    log = []
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            d = len(adj[v])
            if min_pattern_degree >= 2 and d <= 1:
                for w in adj.pop(v):
                    adj[w].discard(v)
                changed = True
            elif min_pattern_degree >= 3 and d == 2:
                a, b = sorted(adj.pop(v))
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                log.append((v, a, b))
                changed = True
    return log


def _lift(branch: dict[int, set[int]], log):
    owner = {v: p for p, B in branch.items() for v in B}
    for v, a, b in reversed(log):
        p = owner.get(a, owner.get(b))
        if p is not None:
            branch[p].add(v)
            owner[v] = p


# -- search ------------------------------------------------------------------

def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _popcount(x: int) -> int:
    return bin(x).count("1")


@lru_cache(maxsize=32)
def _connected_set_table(nbr: tuple[int, ...]):
    """Every connected vertex subset of a bitmask graph.

    Returns parallel arrays (mask, neighbourhood, size, least vertex),
    sorted by size and then by the sorted vertex tuple.
    """
    sets = []

    def grow(S, frontier, banned):
        sets.append(S)
        f = frontier
        while f:
            low = f & -f
            v = low.bit_length() - 1
            f ^= low
            b = banned | (frontier & (low - 1))
            grow(S | low, (frontier | nbr[v]) & ~(S | low) & ~b, b)

    for r in range(len(nbr)):
        banned = (1 << r) - 1
        grow(1 << r, nbr[r] & ~banned, banned)
    sets.sort(key=lambda m: (_popcount(m), tuple(_bits(m))))
    nbs = []
    for m in sets:
        out = 0
        for i in _bits(m):
            out |= nbr[i]
        nbs.append(out & ~m)
    mask = np.array(sets, dtype=np.int64)
    return (mask, np.array(nbs, dtype=np.int64), np.bitwise_count(mask).astype(np.int64),
            np.array([(m & -m).bit_length() - 1 for m in sets], dtype=np.int64))


def _twin_classes(h: Graph) -> dict[int, int]:
    """Map each pattern vertex to a twin-class id; twins are permuted by automorphisms."""
    adj = h.adjacency()
    cls: dict[int, int] = {}
    keys: dict[tuple, int] = {}
    for v in sorted(h.vertices):
        for key in (("open", adj[v]), ("closed", adj[v] | {v})):
            if key in keys:
                cls[v] = keys[key]
                break
        else:
            cls[v] = len(keys)
            keys[("open", adj[v])] = cls[v]
            keys[("closed", adj[v] | {v})] = cls[v]
    return cls


class _Search:
    def __init__(self, verts: list[int], adj: dict[int, set[int]], h: Graph):
        self.verts = verts
        idx = {v: i for i, v in enumerate(verts)}
        nbr = [0] * len(verts)
        for v in verts:
            for w in adj[v]:
                nbr[idx[v]] |= 1 << idx[w]
        self.nbr = nbr
        self.host_edges = sum(_popcount(x) for x in nbr) // 2
        self.table = _connected_set_table(tuple(nbr))
        self.h = h
        self.hadj = hadj = h.adjacency()
        self.order = order = self._pattern_order()
        self.twin = twin = _twin_classes(h)
        pos = {p: i for i, p in enumerate(order)}
        k = len(order)
        # per step: pattern vertices already placed, with how many neighbours they still need
        self.pending = [[(q, sum(1 for r in hadj[q] if pos[r] >= t)) for q in order[:t]] for t in range(k + 1)]
        self.pending = [[(q, n) for q, n in row if n] for row in self.pending]
        # per step: for each unplaced vertex, its placed neighbours
        self.waiting = [[[q for q in hadj[r] if pos[q] < t] for r in order[t:]] for t in range(k + 1)]
        self.waiting = [[row for row in rows if row] for rows in self.waiting]
        self.back = [[q for q in order[:t] if q in hadj[order[t]]] for t in range(k)]
        self.twins_before = [[q for q in order[:t] if twin[q] == twin[order[t]]] for t in range(k)]

    def _pattern_order(self):
        hadj = self.hadj
        placed: list[int] = []
        rest = set(self.h.vertices)
        while rest:
            best = min(rest, key=lambda p: (-len(hadj[p] & set(placed)), -len(hadj[p]), p))
            placed.append(best)
            rest.discard(best)
        return placed

    def _neighborhood(self, mask):
        out = 0
        for i in _bits(mask):
            out |= self.nbr[i]
        return out & ~mask

    def run(self):
        k = len(self.order)
        n = len(self.verts)
        if k > n or self.h.m > self.host_edges:
            return None
        self.assign: dict[int, int] = {}
        self.nbs: dict[int, int] = {}
        if self._place(0, (1 << n) - 1, self.host_edges - self.h.m):
            return {p: [self.verts[i] for i in _bits(mask)] for p, mask in self.assign.items()}
        return None

    def _feasible(self, step, free):
        nbs = self.nbs
        for q, need in self.pending[step]:
            if (nbs[q] & free).bit_count() < need:
                return False
        if free.bit_count() < len(self.order) - step:
            return False
        waiting = self.waiting[step]
        if not waiting:
            return True
        # each unplaced vertex needs one free component touching all its placed neighbours
        comps = []
        rem = free
        nbr = self.nbr
        while rem:
            comp = grow = rem & -rem
            while grow:
                nxt = 0
                for i in _bits(grow):
                    nxt |= nbr[i]
                grow = nxt & rem & ~comp
                comp |= grow
            comps.append(comp)
            rem &= ~comp
        if len(comps) == 1:
            c = comps[0]
            return all(all(c & nbs[q] for q in row) for row in waiting)
        for row in waiting:
            if not any(all(c & nbs[q] for q in row) for c in comps):
                return False
        return True

    def _place(self, step, free, budget):
        if step == len(self.order):
            return True
        p = self.order[step]
        back = self.back[step]
        maxsize = min(free.bit_count() - (len(self.order) - step - 1), budget + 1)
        if maxsize < 1:
            return False
        mask, nb, size, least = self.table
        sel = ((mask & ~free) == 0) & (size <= maxsize)
        for q in back:
            sel &= (nb & self.assign[q]) != 0
        need_out = len(self.hadj[p]) - len(back)
        if need_out:
            sel &= np.bitwise_count(nb & (free & ~mask)) >= need_out
        twins = self.twins_before[step]
        if twins:
            floor = max((self.assign[q] & -self.assign[q]).bit_length() - 1 for q in twins)
            sel &= least > floor
        for i in np.flatnonzero(sel).tolist():
            B = int(mask[i])
            rest = free & ~B
            self.assign[p] = B
            self.nbs[p] = int(nb[i])
            if self._feasible(step + 1, rest) and self._place(step + 1, rest, budget - int(size[i]) + 1):
                return True
        self.assign.pop(p, None)
        self.nbs.pop(p, None)
        return False


def is_apex(g: Graph) -> bool:
    """True if deleting at most one vertex leaves a planar graph."""
    return _is_apex(simplify(g))


@lru_cache(maxsize=256)
def _is_apex(g: Graph) -> bool:
    return bool(is_planar(g)) or any(is_planar(g.remove_vertices([v])) for v in g.vertices)


def has_minor(g: Graph, h: Graph, cap: int = DEFAULT_MINOR_CAP) -> MinorModel | None:
    """A verified model of simple connected ``h`` in ``g``, or None."""
    if not h.is_simple():
        raise GraphInputError("pattern must be simple")
    if not h.is_connected():
        raise GraphInputError("pattern must be connected")
    if g.n > cap:
        raise ResourceLimitError(f"minor search capped at {cap} host vertices, graph has {g.n}")
    s = simplify(g)
    if h.n == 0:
        return MinorModel({}, {})
    if h.n > s.n or h.m > s.m:
        return None
    if not is_apex(h) and is_apex(s):
        return None  # apex graphs form a minor-closed class
    hdeg = min(len(ns) for ns in h.adjacency().values())
    for comp in s.components():
        if len(comp) < h.n:
            continue
        adj = {v: set(s.neighbors(v)) for v in comp}
        log = _reduce(adj, hdeg) if h.n > 1 else []
        if len(adj) < h.n:
            continue
        found = _Search(sorted(adj), adj, h).run()
        if found is None:
            continue
        branch = {p: set(B) for p, B in found.items()}
        _lift(branch, log)
        model = _finish_model(g, h, branch)
        if not verify_minor_model(g, h, model):
            raise AssertionError("minor search produced an invalid model")
        return model
    return None


def _finish_model(g: Graph, h: Graph, branch) -> MinorModel:
    owner = {v: p for p, B in branch.items() for v in B}
    between: dict[frozenset, int] = {}
    for u, v, e in sorted(g.edges, key=lambda t: t[2]):
        pu, pv = owner.get(u), owner.get(v)
        if pu is None or pv is None or pu == pv:
            continue
        between.setdefault(frozenset((pu, pv)), e)
    edge_map = {f: between[frozenset((a, b))] for a, b, f in h.edges}
    return MinorModel({p: frozenset(B) for p, B in branch.items()}, edge_map)


def is_linklessly_embeddable(g: Graph, cap: int = DEFAULT_MINOR_CAP) -> LinklessVerdict:
    """Decide linkless embeddability by excluding every Petersen-family minor."""
    if g.n > cap:
        raise ResourceLimitError(f"decision capped at {cap} vertices, graph has {g.n}")
    for index, member in enumerate(petersen_family(), 1):
        model = has_minor(g, member, cap=cap)
        if model is not None:
            return LinklessVerdict(False, index, model)
    return LinklessVerdict(True)
