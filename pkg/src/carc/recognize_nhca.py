"""NEXT sweep, NHCA authentication and recognition, interval recognition."""
from __future__ import annotations

from collections import deque

from .arc_model import EMPTY, CircularArcModel, intersection_graph
from .certificates import Forbidden, NonNHCA, Positive, ThreeCover, TwoCover
from .cliques import consecutive_order
from .graph import Graph


def compute_next(model: CircularArcModel) -> tuple[int | None, ...]:
    """For every arc A, the arc crossing t(A) whose ending comes last
    going clockwise from t(A), or None if no arc crosses t(A).

    Sweeps the circle twice from s(arc 0) keeping the farthest-reaching
    open arc; only the second lap, when every open arc has been seen,
    records values.
    """
    n, m = model.n, model.size
    if n == 0:
        return ()
    order, pos_t = model.order, model.pos_t
    nxt: list[int | None] = [None] * n
    best: int | None = None
    start = model.pos_s[0]
    for step in range(2 * m):
        p = (start + step) % m
        a, begin = order[p]
        if begin:
            if best is None or (pos_t[a] - p) % m > (pos_t[best] - p) % m:
                best = a
        elif best == a:
            # a reached farthest, so nothing else is open any more
            best = None
            if step >= m:
                nxt[a] = None
        elif step >= m:
            nxt[a] = best
    return tuple(nxt)


def _reaches_past(model: CircularArcModel, frm: int, b: int, target: int) -> bool:
    """Going clockwise from position frm, does t(b) come after position target?"""
    m = model.size
    return (model.pos_t[b] - frm) % m > (target - frm) % m


def authenticate_nhca(model: CircularArcModel):
    """None when no two and no three arcs cover the circle; otherwise a
    TwoCover or ThreeCover built from A, NEXT(A) and NEXT(NEXT(A))."""
    nxt = compute_next(model)
    pos_s, pos_t = model.pos_s, model.pos_t
    for a in range(model.n):
        x = nxt[a]
        if x is not None and _reaches_past(model, pos_t[a], x, pos_s[a]):
            return TwoCover((a, x))
    for a in range(model.n):
        x = nxt[a]
        if x is None:
            continue
        y = nxt[x]
        if y is None or y == a:
            continue
        if _reaches_past(model, pos_t[x], y, pos_s[a]):
            return ThreeCover((a, x, y))
    return None


def check_local_interval(model: CircularArcModel) -> bool:
    """True iff every closed neighborhood N[A] leaves part of the circle
    uncovered (open arcs meet exactly when they share a segment)."""
    masks, full = model.segment_masks, model.full_mask
    for ma in masks:
        acc = 0
        for mb in masks:
            if ma & mb:
                acc |= mb
        if acc == full:
            return False
    return True


# --- interval graphs ---------------------------------------------------------------

def _mcs(graph: Graph) -> list[int]:
    """Maximum cardinality search visit order (ties to the smallest id)."""
    weight = [0] * graph.n
    done = [False] * graph.n
    order = []
    for _ in range(graph.n):
        v = max((u for u in range(graph.n) if not done[u]), key=lambda u: (weight[u], -u))
        done[v] = True
        order.append(v)
        for w in graph.adj[v]:
            if not done[w]:
                weight[w] += 1
    return order


def chordal_cliques(graph: Graph) -> list[frozenset[int]] | None:
    """Maximal cliques of a chordal graph, or None if it is not chordal."""
    order = _mcs(graph)
    rank = {v: i for i, v in enumerate(order)}
    cands = []
    for v in order:
        earlier = {w for w in graph.adj[v] if rank[w] < rank[v]}
        if earlier:
            parent = max(earlier, key=rank.__getitem__)
            if not earlier - {parent} <= graph.adj[parent]:
                return None
        cands.append(frozenset(earlier | {v}))
    cands = set(cands)
    return sorted((c for c in cands if not any(c < d for d in cands)), key=sorted)


def _hole(graph: Graph) -> list[int]:
    """A chordless cycle on at least four vertices (graph must have one).

    For v with non-adjacent neighbors a, b, a shortest a-b path avoiding
    the rest of N[v] closes a chordless cycle through v.
    """
    for v in range(graph.n):
        nb = sorted(graph.adj[v])
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                if graph.adjacent(a, b):
                    continue
                blocked = graph.closed(v) - {a, b}
                prev = {a: a}
                queue = deque([a])
                while queue:
                    x = queue.popleft()
                    if x == b:
                        break
                    for y in sorted(graph.adj[x]):
                        if y not in prev and y not in blocked:
                            prev[y] = x
                            queue.append(y)
                if b in prev:
                    path = [b]
                    while path[-1] != a:
                        path.append(prev[path[-1]])
                    return [v] + path[::-1]
    raise ValueError("graph is chordal")


def _clique_order(graph: Graph) -> tuple[list[frozenset[int]], list[int]] | None:
    cliques = chordal_cliques(graph)
    if cliques is None:
        return None
    where = [[i for i, c in enumerate(cliques) if v in c] for v in range(graph.n)]
    order = consecutive_order(range(len(cliques)), where)
    if order is None:
        return None
    return cliques, order


def _is_interval(graph: Graph) -> bool:
    return _clique_order(graph) is not None


def _name_obstruction(sub: Graph) -> str:
    from . import generators as gen
    from .oracles import isomorphic

    known = {6: [("Sun3", gen.sun3_graph()), ("Tent", gen.tent_graph())],
             7: [("Umbrella", gen.umbrella_graph())]}
    for name, pattern in known.get(sub.n, []):
        if isomorphic(sub, pattern):
            return name
    if sub.n >= 7 and isomorphic(sub, gen.rising_sun_graph(sub.n - 3)):
        return "RisingSun"
    return "AT"


def recognize_interval(graph: Graph):
    """Positive(interval model with the graph's labels) or Forbidden.

    Chordality comes from a maximum cardinality search; the maximal
    cliques are then ordered so each vertex's cliques are consecutive and
    laid out on a line.  Without such an order the graph is shrunk vertex
    by vertex to a minimal non-interval induced subgraph.
    """
    from .generators import model_from_clique_ranges

    if graph.n == 0:
        return Positive(EMPTY, route="interval")
    found = _clique_order(graph)
    if found is not None:
        cliques, order = found
        place = {c: i for i, c in enumerate(order)}
        ranges = []
        for v in range(graph.n):
            spots = sorted(place[i] for i, c in enumerate(cliques) if v in c)
            ranges.append((spots[0], len(spots)))
        return Positive(model_from_clique_ranges(ranges, len(cliques) + 1), route="interval")
    if chordal_cliques(graph) is None:
        return Forbidden("Hole", tuple(_hole(graph)))
    keep = list(range(graph.n))
    for v in range(graph.n):
        trial = [u for u in keep if u != v]
        if not _is_interval(graph.induced(trial)[0]):
            keep = trial
    sub, _ = graph.induced(keep)
    if chordal_cliques(sub) is None:
        return Forbidden("Hole", tuple(keep[i] for i in _hole(sub)))
    return Forbidden(_name_obstruction(sub), tuple(keep))


def recognize_nhca(model: CircularArcModel):
    """Positive(model) when no two or three arcs cover the circle; else the
    graph is NHCA only if it is interval, in which case an interval model
    is returned; otherwise the cover and an interval obstruction."""
    cover = authenticate_nhca(model)
    if cover is None:
        return Positive(model, route="authenticated")
    found = recognize_interval(intersection_graph(model))
    if isinstance(found, Positive):
        return found
    return NonNHCA(cover, found)
