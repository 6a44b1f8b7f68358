"""Spatial graph diagrams in convex position and mod-2 linking numbers.

Vertices sit on a circle in a chosen cyclic order and every edge is a
straight chord.  Two chords cross exactly when their endpoints interleave
around the circle, so a diagram is fully described by the vertex order
plus an over/under choice at each crossing.  Every such choice is realised
by a piecewise-linear embedding in 3-space, and every embedding has a
diagram of this kind up to crossing changes.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import GraphInputError
from .graph import DEFAULT_CYCLE_CAP, Graph, cycle_edges, enumerate_cycles

OVER_RULES = ("lex", "reverse-lex", "random")


@dataclass(frozen=True)
class Mod2:
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", int(self.value) % 2)

    def __add__(self, other):
        return Mod2(self.value + int(other))

    __radd__ = __add__

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, Mod2):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other % 2
        return NotImplemented

    def __hash__(self):
        return hash(self.value)


@dataclass(frozen=True)
class Crossing:
    a: int
    b: int
    over: str  # "a" or "b"

    @property
    def over_edge(self) -> int:
        return self.a if self.over == "a" else self.b

    @property
    def under_edge(self) -> int:
        return self.b if self.over == "a" else self.a

    def flipped(self) -> "Crossing":
        return replace(self, over="b" if self.over == "a" else "a")


@dataclass(frozen=True)
class Diagram:
    graph: Graph
    order: tuple[int, ...]
    crossings: tuple[Crossing, ...]

    def to_dict(self) -> dict:
        return {
            "order": list(self.order),
            "crossings": [{"a": c.a, "b": c.b, "over": c.over} for c in self.crossings],
        }


def chords_cross(pos: dict[int, int], n: int, e: tuple[int, int], f: tuple[int, int]) -> bool:
    """True if chords ``e`` and ``f`` (no shared endpoint) interleave on the circle."""
    a, b = pos[e[0]], pos[e[1]]
    span = (b - a) % n

    def inside(x):
        return 0 < (pos[x] - a) % n < span

    return inside(f[0]) != inside(f[1])


def interleaving_pairs(g: Graph, order: Sequence[int]) -> list[tuple[int, int]]:
    """Edge-id pairs ``(a, b)`` whose chords cross, ``a`` earlier in edge order."""
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    out = []
    for (u1, v1, e1), (u2, v2, e2) in combinations(g.edges, 2):
        if {u1, v1} & {u2, v2}:
            continue
        if chords_cross(pos, n, (u1, v1), (u2, v2)):
            out.append((e1, e2))
    return out


def _check_graph(g: Graph, order):
    if any(u == v for u, v, _ in g.edges):
        raise GraphInputError("diagrams cannot contain loops")
    if not g.is_simple():
        raise GraphInputError("diagrams need a simple graph; simplify first")
    if sorted(order) != sorted(g.vertices):
        raise GraphInputError("order must be a permutation of the vertices")


def convex_diagram(g: Graph, order: Sequence[int] | None = None, rule: str = "lex",
                   seed: int = 0, assignment: Sequence[str] | None = None) -> Diagram:
    """Convex-position diagram of ``g``.

    ``rule`` picks the over-strand at each crossing: ``lex`` puts the chord
    with the smaller (min endpoint, max endpoint) pair on top, ``reverse-lex``
    the larger, ``random`` flips a coin from ``seed``.  An explicit
    ``assignment`` of ``"a"``/``"b"`` per crossing overrides the rule.
    """
    order = tuple(g.vertices if order is None else order)
    _check_graph(g, order)
    pairs = interleaving_pairs(g, order)
    if assignment is not None:
        if len(assignment) != len(pairs) or any(x not in ("a", "b") for x in assignment):
            raise GraphInputError(f"assignment needs {len(pairs)} entries of 'a'/'b'")
        overs = list(assignment)
    elif rule in ("lex", "reverse-lex"):
        overs = []
        for a, b in pairs:
            a_first = g.endpoints(a) < g.endpoints(b)
            overs.append("a" if a_first == (rule == "lex") else "b")
    elif rule == "random":
        rng = random.Random(seed)
        overs = [rng.choice("ab") for _ in pairs]
    else:
        raise GraphInputError(f"unknown over-rule {rule!r}; expected one of {OVER_RULES}")
    return Diagram(g, order, tuple(Crossing(a, b, o) for (a, b), o in zip(pairs, overs)))


def validate_diagram(d: Diagram) -> bool:
    """True iff the crossing list is exactly the interleaving chord pairs, once each."""
    try:
        _check_graph(d.graph, d.order)
    except GraphInputError:
        return False
    want = interleaving_pairs(d.graph, d.order)
    have = [(c.a, c.b) for c in d.crossings]
    return have == want and all(c.over in ("a", "b") for c in d.crossings)


def diagram_from_dict(g: Graph, data: dict) -> Diagram:
    d = Diagram(g, tuple(data["order"]),
                tuple(Crossing(int(c["a"]), int(c["b"]), c["over"]) for c in data["crossings"]))
    if not validate_diagram(d):
        raise GraphInputError("crossing records do not match the chord diagram of this order")
    return d


def crossing_change(d: Diagram, index: int) -> Diagram:
    if not 0 <= index < len(d.crossings):
        raise GraphInputError(f"crossing index {index} out of range")
    cs = list(d.crossings)
    cs[index] = cs[index].flipped()
    return replace(d, crossings=tuple(cs))


def _disjoint_cycle_edges(d: Diagram, c1, c2):
    if set(c1) & set(c2):
        raise GraphInputError("cycles are not vertex-disjoint")
    return set(cycle_edges(d.graph, c1)), set(cycle_edges(d.graph, c2))


def linking_number(d: Diagram, c1: Sequence[int], c2: Sequence[int]) -> Mod2:
    """Parity of crossings where a chord of ``c1`` passes over a chord of ``c2``."""
    e1, e2 = _disjoint_cycle_edges(d, c1, c2)
    return Mod2(sum(1 for c in d.crossings if c.over_edge in e1 and c.under_edge in e2))


def inter_crossings(d: Diagram, c1: Sequence[int], c2: Sequence[int]) -> int:
    """Number of crossings between a chord of ``c1`` and a chord of ``c2``."""
    e1, e2 = _disjoint_cycle_edges(d, c1, c2)
    return sum(1 for c in d.crossings
               if (c.a in e1 and c.b in e2) or (c.a in e2 and c.b in e1))


def disjoint_cycle_pairs(g: Graph, cap: int = DEFAULT_CYCLE_CAP):
    """Unordered pairs of vertex-disjoint simple cycles, in cycle-enumeration order."""
    cycles = enumerate_cycles(g, cap=cap)
    sets = [frozenset(c) for c in cycles]
    return [(cycles[i], cycles[j])
            for i, j in combinations(range(len(cycles)), 2) if not sets[i] & sets[j]]


@lru_cache(maxsize=64)
def _pair_edge_sets(g: Graph, cap: int):
    return tuple((frozenset(cycle_edges(g, c1)), frozenset(cycle_edges(g, c2)))
                 for c1, c2 in disjoint_cycle_pairs(g, cap=cap))


def conway_gordon_sum(d: Diagram, cap: int = DEFAULT_CYCLE_CAP) -> Mod2:
    """Sum of linking numbers over all unordered disjoint cycle pairs, mod 2."""
    total = 0
    for e1, e2 in _pair_edge_sets(d.graph, cap):
        total += sum(1 for c in d.crossings if c.over_edge in e1 and c.under_edge in e2)
    return Mod2(total)
