"""Oriented graphs, their (out-)straight / (out-)round enumerations and scopes."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator

from .arc_model import CircularArcModel, Extreme, is_proper
from .graph import Graph

KINDS = ("OutStraight", "OutRound", "Straight", "Round", "LocallyOutStraight", "LocallyStraight")
SEARCH_LIMIT = 7


@dataclass(frozen=True)
class OrientedGraph:
    """Vertices 0..n-1; out[v] is the set of w with v -> w."""

    n: int
    out: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.out) != self.n:
            raise ValueError("need one out-set per vertex")
        for v, ws in enumerate(self.out):
            for w in ws:
                if not 0 <= w < self.n or w == v:
                    raise ValueError(f"bad arc {v}->{w}")
                if v in self.out[w]:
                    raise ValueError(f"both {v}->{w} and {w}->{v}")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "OrientedGraph":
        out = [set() for _ in range(n)]
        for v, w in arcs:
            out[v].add(w)
        return cls(n, tuple(frozenset(x) for x in out))

    @property
    def inn(self) -> tuple[frozenset[int], ...]:
        inn = [set() for _ in range(self.n)]
        for v, ws in enumerate(self.out):
            for w in ws:
                inn[w].add(v)
        return tuple(frozenset(x) for x in inn)

    def arcs(self) -> list[tuple[int, int]]:
        return sorted((v, w) for v in range(self.n) for w in self.out[v])

    def underlying(self) -> Graph:
        return Graph.from_edges(self.n, self.arcs())

    def induced(self, vertices: Iterable[int]) -> tuple["OrientedGraph", tuple[int, ...]]:
        keep = tuple(vertices)
        idx = {v: i for i, v in enumerate(keep)}
        return OrientedGraph(len(keep), tuple(frozenset(idx[w] for w in self.out[v] if w in idx) for v in keep)), keep


@dataclass(frozen=True)
class Enumeration:
    order: tuple[int, ...]
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown enumeration kind {self.kind!r}")


def _is_permutation(d: OrientedGraph, order) -> bool:
    return sorted(order) == list(range(d.n))


def _ranges_ok(d: OrientedGraph, order, linear: bool, both: bool) -> bool:
    """Closed out-sets (and in-sets when `both`) are ranges starting (ending)
    at the vertex itself, circular unless `linear`."""
    n = len(order)
    inn = d.inn
    for i, v in enumerate(order):
        r = len(d.out[v])
        if linear and i + r >= n:
            return False
        if {order[(i + k) % n] for k in range(1, r + 1)} != d.out[v]:
            return False
        if both:
            l = len(inn[v])
            if linear and i - l < 0:
                return False
            if {order[(i - k) % n] for k in range(1, l + 1)} != inn[v]:
                return False
    return True


def scope(d: OrientedGraph, e: Enumeration, v: int) -> tuple[int, int] | None:
    """Scope of v as (leftmost, rightmost) vertices; None when v itself
    falls outside the range they span (the scope is then undefined)."""
    order = e.order
    n = len(order)
    pos = {w: i for i, w in enumerate(order)}
    i = pos[v]
    back = max([(i - pos[w]) % n for w in d.inn[v]], default=0)
    fwd = max([(pos[w] - i) % n for w in d.out[v]], default=0)
    if back + fwd >= n:
        return None
    return order[(i - back) % n], order[(i + fwd) % n]


def scope_range(d: OrientedGraph, e: Enumeration, v: int) -> list[int] | None:
    """Vertices of the scope of v in enumeration order."""
    ends = scope(d, e, v)
    if ends is None:
        return None
    order = e.order
    n = len(order)
    start = order.index(ends[0])
    length = (order.index(ends[1]) - start) % n + 1
    return [order[(start + k) % n] for k in range(length)]


def verify_enumeration(d: OrientedGraph, e: Enumeration) -> bool:
    """Does e.order satisfy the definition of e.kind for d?"""
    if not _is_permutation(d, e.order):
        return False
    kind = e.kind
    if kind == "OutStraight":
        return _ranges_ok(d, e.order, True, False)
    if kind == "OutRound":
        return _ranges_ok(d, e.order, False, False)
    if kind == "Straight":
        return _ranges_ok(d, e.order, True, True)
    if kind == "Round":
        return _ranges_ok(d, e.order, False, True)
    local = "OutStraight" if kind == "LocallyOutStraight" else "Straight"
    if not _ranges_ok(d, e.order, False, local == "Straight"):
        return False
    for v in range(d.n):
        part = scope_range(d, e, v)
        if part is None:
            return False
        sub, keep = d.induced(part)
        # the scope in its own order is 0..len-1 of the induced graph
        if not verify_enumeration(sub, Enumeration(tuple(range(len(keep))), local)):
            return False
    return True


def orient_from_model(model: CircularArcModel, flavor: str = "OutRound") -> tuple[OrientedGraph, Enumeration]:
    """v -> w iff arc v crosses the beginning of arc w; vertices listed in
    the order of their beginnings."""
    if flavor not in ("OutRound", "Round"):
        raise ValueError(f"flavor must be OutRound or Round, got {flavor!r}")
    if flavor == "Round" and not is_proper(model):
        raise ValueError("a round orientation needs a proper model")
    out = [set() for _ in range(model.n)]
    for v in range(model.n):
        for w in range(model.n):
            if v != w and model.crosses_begin(v, w):
                if model.crosses_begin(w, v):
                    raise ValueError(f"arcs {v} and {w} cover the circle")
                out[v].add(w)
    order = tuple(x.arc for x in model.order if x.begin)
    return OrientedGraph(model.n, tuple(frozenset(x) for x in out)), Enumeration(order, flavor)


def model_from_enumeration(d: OrientedGraph, e: Enumeration) -> CircularArcModel:
    """Beginnings in enumeration order; each arc ends right after the
    beginning of its last out-neighbor."""
    if not _ranges_ok(d, e.order, False, False) or not _is_permutation(d, e.order):
        raise ValueError("model_from_enumeration needs an out-round enumeration")
    order = e.order
    n = len(order)
    ends = [[] for _ in range(n)]
    for i, v in enumerate(order):
        r = len(d.out[v])
        ends[(i + r) % n].append((-r, v))
    out = []
    for i, v in enumerate(order):
        out.append(Extreme(v, True))
        # arcs that began earlier end first
        out += [Extreme(w, False) for _, w in sorted(ends[i])]
    return CircularArcModel(tuple(out))


# --- exhaustive search -----------------------------------------------------------------

def _out_round_orientations(graph: Graph, order) -> Iterator[OrientedGraph]:
    """Every orientation of graph for which order is out-round.

    Choosing r_i (the out-degree of the i-th vertex) fixes its out-set to
    the next r_i vertices; every edge must be claimed by exactly one end.
    """
    n = len(order)
    pos = {v: i for i, v in enumerate(order)}
    reach = []
    for i, v in enumerate(order):
        r = 0
        while r + 1 < n and graph.adjacent(v, order[(i + r + 1) % n]):
            r += 1
        reach.append(r)
    dist = lambda a, b: (pos[b] - pos[a]) % n
    edges = graph.edges()
    chosen = [0] * n

    def consistent(upto: int) -> bool:
        # edges with both ends decided must be claimed exactly once
        for a, b in edges:
            ia, ib = pos[a], pos[b]
            if ia < upto and ib < upto:
                if (dist(a, b) <= chosen[ia]) == (dist(b, a) <= chosen[ib]):
                    return False
        return True

    def search(i: int):
        if i == n:
            yield OrientedGraph(n, tuple(frozenset(order[(pos[v] + k) % n] for k in range(1, chosen[pos[v]] + 1))
                                         for v in range(n)))
            return
        for r in range(reach[i] + 1):
            chosen[i] = r
            if consistent(i + 1):
                yield from search(i + 1)

    yield from search(0)


def find_enumeration(graph: Graph, kind: str) -> tuple[OrientedGraph, Enumeration] | None:
    """An orientation of graph with an enumeration of the given kind, by
    trying every vertex order and every compatible orientation."""
    if kind not in KINDS:
        raise ValueError(f"unknown enumeration kind {kind!r}")
    if graph.n > SEARCH_LIMIT:
        raise ValueError(f"exhaustive search is limited to {SEARCH_LIMIT} vertices, got {graph.n}")
    if graph.n == 0:
        return OrientedGraph(0, ()), Enumeration((), kind)
    circular = kind not in ("OutStraight", "Straight")
    # rotating a circular enumeration keeps its kind, so fix the first vertex
    firsts = [0] if circular else range(graph.n)
    for first in firsts:
        rest = [v for v in range(graph.n) if v != first]
        for tail in permutations(rest):
            order = (first,) + tail
            for d in _out_round_orientations(graph, order):
                e = Enumeration(order, kind)
                if verify_enumeration(d, e):
                    return d, e
    return None
