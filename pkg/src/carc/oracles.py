"""Brute-force reference checkers.

Everything here is written for clarity over speed and shares no code with
the recognition algorithms, so the two can be checked against each other.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator

from .arc_model import CircularArcModel, canonical_form, intersection_graph
from .graph import Graph


@dataclass(frozen=True)
class ClassReport:
    proper: bool
    normal: bool
    helly: bool
    interval_point: bool
    two_cover: tuple[int, int] | None = None
    three_cover: tuple[int, int, int] | None = None

    @property
    def nhca(self) -> bool:
        return self.two_cover is None and self.three_cover is None


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def find_two_cover(model: CircularArcModel) -> tuple[int, int] | None:
    masks, full = model.segment_masks, model.full_mask
    for a, b in combinations(range(model.n), 2):
        if masks[a] | masks[b] == full:
            return a, b
    return None


def find_three_cover(model: CircularArcModel) -> tuple[int, int, int] | None:
    """A covering triple in which no two arcs already cover the circle."""
    masks, full = model.segment_masks, model.full_mask
    widest = max(model.span(a) for a in range(model.n)) if model.n else 0
    for a, b in combinations(range(model.n), 2):
        rest = full & ~(masks[a] | masks[b])
        if rest == 0 or rest.bit_count() > widest:
            continue
        for c in range(b + 1, model.n):
            if masks[c] & rest == rest:
                if (masks[a] | masks[c]) != full and (masks[b] | masks[c]) != full:
                    return a, b, c
    return None


def cover_verdict(model: CircularArcModel) -> str:
    """'two', 'three' or 'ok', by exhaustive search."""
    if find_two_cover(model) is not None:
        return "two"
    if find_three_cover(model) is not None:
        return "three"
    return "ok"


def maximal_cliques(graph: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques (Bron-Kerbosch with pivoting), sorted."""
    if graph.n == 0:
        return []
    masks = graph.masks
    out: list[tuple[int, ...]] = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(tuple(_bits(r)))
            return
        pivot = max(_bits(p | x), key=lambda u: (p & masks[u]).bit_count())
        for v in list(_bits(p & ~masks[pivot])):
            expand(r | 1 << v, p & masks[v], x & masks[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, (1 << graph.n) - 1, 0)
    return sorted(out)


def classify(model: CircularArcModel) -> ClassReport:
    n = model.n
    masks, full = model.segment_masks, model.full_mask
    proper = not any(masks[b] & ~masks[a] == 0 for a in range(n) for b in range(n) if a != b)
    helly = True
    for clique in maximal_cliques(intersection_graph(model)):
        common = full
        for a in clique:
            common &= masks[a]
        if not common:
            helly = False
            break
    union = 0
    for m in masks:
        union |= m
    two = find_two_cover(model)
    return ClassReport(
        proper=proper,
        normal=two is None,
        helly=helly,
        interval_point=n == 0 or union != full,
        two_cover=two,
        three_cover=find_three_cover(model),
    )


CLASS_FILTERS: dict[str, Callable[[ClassReport], bool]] = {
    "any": lambda r: True,
    "pca": lambda r: r.proper,
    "nca": lambda r: r.normal,
    "hca": lambda r: r.helly,
    "nhca": lambda r: r.normal and r.helly,
    "phca": lambda r: r.proper and r.helly,
    "nphca": lambda r: r.proper and r.normal and r.helly,
    "interval": lambda r: r.interval_point,
    "pig": lambda r: r.proper and r.interval_point,
}


# --- induced subgraphs --------------------------------------------------------

def find_induced(host: Graph, pattern: Graph) -> dict[int, int] | None:
    """An injective map from pattern vertices to host vertices realizing
    the pattern as an induced subgraph, or None."""
    k = pattern.n
    if k > host.n:
        return None
    if k == 0:
        return {}
    hm, pm = host.masks, pattern.masks
    # place vertices so that each one has as many placed neighbors as possible
    order = [max(range(k), key=pattern.degree)]
    while len(order) < k:
        placed = set(order)
        order.append(max((v for v in range(k) if v not in placed),
                         key=lambda v: (sum(w in placed for w in pattern.adj[v]), pattern.degree(v))))
    everyone = (1 << host.n) - 1
    by_degree = [0] * k
    for i, v in enumerate(order):
        d = pattern.degree(v)
        by_degree[i] = sum(1 << h for h in range(host.n) if host.degree(h) >= d)
    image = [0] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = by_degree[i] & ~used
        v = order[i]
        for j in range(i):
            if pm[v] >> order[j] & 1:
                cand &= hm[image[j]]
            else:
                cand &= everyone & ~hm[image[j]]
            if not cand:
                return False
        for h in _bits(cand):
            image[i] = h
            if extend(i + 1, used | 1 << h):
                return True
        return False

    if not extend(0, 0):
        return None
    return {order[i]: image[i] for i in range(k)}


def isomorphism(g1: Graph, g2: Graph) -> dict[int, int] | None:
    """A map from g2's vertices onto g1's preserving adjacency, or None."""
    if g1.n != g2.n or g1.m != g2.m:
        return None
    if sorted(map(len, g1.adj)) != sorted(map(len, g2.adj)):
        return None
    return find_induced(g1, g2)


def isomorphic(g1: Graph, g2: Graph) -> bool:
    return isomorphism(g1, g2) is not None


def find_hole(graph: Graph) -> list[int] | None:
    """A chordless cycle of length at least four, or None."""
    for v in range(graph.n):
        for a, b in combinations(sorted(graph.adj[v]), 2):
            if graph.adjacent(a, b):
                continue
            blocked = graph.closed(v) - {a, b}
            prev = {a: None}
            queue = deque([a])
            while queue and b not in prev:
                x = queue.popleft()
                for y in graph.adj[x]:
                    if y not in prev and y not in blocked:
                        prev[y] = x
                        queue.append(y)
            if b in prev:
                path = [b]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return [v] + path
    return None


def _reachable_avoiding(graph: Graph, a: int, b: int, banned: set[int]) -> bool:
    seen = {a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            return True
        for y in graph.adj[x]:
            if y not in seen and y not in banned:
                seen.add(y)
                queue.append(y)
    return False


def find_asteroidal_triple(graph: Graph) -> tuple[int, int, int] | None:
    for a, b, c in combinations(range(graph.n), 3):
        if graph.adjacent(a, b) or graph.adjacent(a, c) or graph.adjacent(b, c):
            continue
        if (_reachable_avoiding(graph, a, b, set(graph.closed(c)))
                and _reachable_avoiding(graph, a, c, set(graph.closed(b)))
                and _reachable_avoiding(graph, b, c, set(graph.closed(a)))):
            return a, b, c
    return None


def is_interval_graph(graph: Graph) -> bool:
    """Chordal and free of asteroidal triples."""
    return find_hole(graph) is None and find_asteroidal_triple(graph) is None


# --- model enumeration ----------------------------------------------------------

def all_models(n: int) -> Iterator[CircularArcModel]:
    """Every model on n arcs up to rotation and relabeling.

    Arcs are labeled by the order of their beginnings and the cut is placed
    just before s0; some models appear more than once.
    """
    from itertools import permutations
    from .arc_model import Extreme

    if n == 0:
        yield CircularArcModel(())
        return
    m = 2 * n
    for s_slots in combinations(range(1, m), n - 1):
        slots = (0,) + s_slots
        free = [p for p in range(m) if p not in slots]
        for perm in permutations(range(n)):
            order = [None] * m
            for a, p in enumerate(slots):
                order[p] = Extreme(a, True)
            for a, p in zip(perm, free):
                order[p] = Extreme(a, False)
            yield CircularArcModel(tuple(order))


def enumerate_models(graph: Graph, predicate: Callable[[ClassReport], bool] | None = None,
                     limit: int = 5) -> list[CircularArcModel]:
    """All models of `graph` (labels as in the graph) passing `predicate`,
    one per class of rotation-and-relabeling equality."""
    if graph.n > limit:
        raise ValueError(f"enumerate_models is limited to {limit} vertices, got {graph.n}")
    found: dict[tuple[int, ...], CircularArcModel] = {}
    for model in all_models(graph.n):
        iso = isomorphism(graph, intersection_graph(model))
        if iso is None:
            continue
        labeled = model.relabel([iso[a] for a in range(graph.n)])
        if predicate is not None and not predicate(classify(labeled)):
            continue
        found.setdefault(canonical_form(labeled), labeled)
    return [found[key] for key in sorted(found)]


# --- unit realizability ----------------------------------------------------------

@dataclass(frozen=True)
class UnitWitness:
    """Exact positions for every extreme, in model order, on a circle of
    length `circumference` where every arc has length `arc_length`."""

    positions: tuple[Fraction, ...]
    circumference: Fraction
    arc_length: Fraction


def verify_unit_witness(model: CircularArcModel, witness: UnitWitness) -> bool:
    x, big_l, u = witness.positions, witness.circumference, witness.arc_length
    if len(x) != model.size or not 0 < u < big_l:
        return False
    if model.n and not (0 <= x[0] and x[-1] < big_l):
        return False
    if any(p >= q for p, q in zip(x, x[1:])):
        return False
    return all((x[model.pos_t[a]] - x[model.pos_s[a]]) % big_l == u for a in range(model.n))


def _constraint_edges(model: CircularArcModel):
    """Difference constraints x_j <= x_i + (c + l*L + e*eps) with unit arcs."""
    m = model.size
    edges = []
    for i in range(m - 1):
        edges.append((i + 1, i, 0, 0, -1))
    edges.append((0, m - 1, 0, 1, -1))
    for a in range(model.n):
        ps, pt = model.pos_s[a], model.pos_t[a]
        w = 1 if pt < ps else 0
        edges.append((ps, pt, 1, -w, 0))
        edges.append((pt, ps, -1, w, 0))
    return edges


def _shortest_paths(m: int, edges, big_l: Fraction):
    """Bellman-Ford with lexicographic (value, eps) weights.

    Returns ('ok', distances) or ('cycle', (c, l, e) summed over a
    negative cycle).
    """
    p, q = big_l.numerator, big_l.denominator
    weight = [(q * c + l * p, e) for (_, _, c, l, e) in edges]
    dist = [(0, 0)] * m
    pred = [-1] * m
    last = -1
    for _ in range(m + 1):
        last = -1
        for k, (i, j, *_rest) in enumerate(edges):
            wv, we = weight[k]
            cand = (dist[i][0] + wv, dist[i][1] + we)
            if cand < dist[j]:
                dist[j] = cand
                pred[j] = k
                last = j
        if last < 0:
            return "ok", [(Fraction(v, q), e) for v, e in dist]
    v = last
    for _ in range(m):
        v = edges[pred[v]][0]
    cycle, u = [], v
    while True:
        k = pred[u]
        cycle.append(k)
        u = edges[k][0]
        if u == v:
            break
    return "cycle", tuple(sum(edges[k][idx] for k in cycle) for idx in (2, 3, 4))


def _simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The fraction with the smallest denominator strictly inside (lo, hi)."""
    fl = lo.numerator // lo.denominator
    if fl + 1 < hi:
        return Fraction(fl + 1)
    # lo and hi share an integer part: recurse on the reciprocals
    if lo == fl:
        return fl + 1 / _simplest_above(1 / (hi - fl))
    return fl + 1 / _simplest_between(1 / (hi - fl), 1 / (lo - fl))


def _simplest_above(x: Fraction) -> Fraction:
    return Fraction(x.numerator // x.denominator + 1)


def unit_realizable(model: CircularArcModel) -> UnitWitness | None:
    """Positions realizing the model's order with all arcs of equal length.

    Arc length is fixed to 1 and the circumference L is searched.  For a
    fixed L the order and length conditions form a system of difference
    constraints; an infeasible system has a negative cycle whose weight is
    linear in L, which tells the search which way to move.  The feasible
    values of L form an interval whose ends are fractions with denominator
    at most m + 1 (m = number of extremes), which bounds the search.
    """
    if model.n == 0:
        return None
    m = model.size
    edges = _constraint_edges(model)
    lo, hi = Fraction(1), Fraction(m + 1)
    gap = Fraction(1, 2 * (m + 1) ** 2)
    probe = (lo + hi) / 2
    while True:
        status, info = _shortest_paths(m, edges, probe)
        if status == "ok":
            return _concrete_witness(model, edges, probe, info)
        c, l, e = info
        if l == 0:
            return None
        if l > 0:
            lo = probe
        else:
            hi = probe
        if hi - lo <= gap:
            if hi - lo <= 0:
                return None
            last = _simplest_between(lo, hi)
            if last.denominator > m + 1:
                return None
            status, info = _shortest_paths(m, edges, last)
            return _concrete_witness(model, edges, last, info) if status == "ok" else None
        probe = (lo + hi) / 2


def _concrete_witness(model, edges, big_l, dist) -> UnitWitness:
    eps = Fraction(1)
    for i, j, c, l, e in edges:
        slack = dist[i][0] + c + l * big_l - dist[j][0]
        de = dist[j][1] - dist[i][1] - e
        if de > 0 and slack > 0:
            eps = min(eps, slack / de / 2)
    xs = [r + eps * k for r, k in dist]
    base = xs[0]
    witness = UnitWitness(tuple(x - base for x in xs), big_l, Fraction(1))
    assert verify_unit_witness(model, witness), "constructed unit witness does not verify"
    return witness


def all_graphs(n: int) -> list[Graph]:
    """One graph per isomorphism class on n vertices, grown vertex by
    vertex from the classes on n - 1 vertices."""
    if n == 0:
        return [Graph(0, [])]
    buckets: dict[tuple, list[Graph]] = {}
    for base in all_graphs(n - 1):
        for nb in range(1 << (n - 1)):
            edges = base.edges() + [(v, n - 1) for v in range(n - 1) if nb >> v & 1]
            g = Graph.from_edges(n, edges)
            key = (g.m, tuple(sorted(map(len, g.adj))),
                   tuple(sorted(tuple(sorted(len(g.adj[w]) for w in g.adj[v])) for v in range(n))))
            same = buckets.setdefault(key, [])
            if not any(isomorphic(g, h) for h in same):
                same.append(g)
    return [g for key in sorted(buckets) for g in buckets[key]]
