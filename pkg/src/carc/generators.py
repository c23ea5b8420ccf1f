"""Named graph families, their fixture models, and random models."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .arc_model import CircularArcModel, Extreme, intersection_graph, model_from_intervals
from .graph import Graph

FAMILIES = ("CI", "Wheel", "RisingSun", "Sun3", "Umbrella", "Tent", "K13", "Hole", "Path", "CompleteGraph")
_ALIASES = {"Complete": "CompleteGraph"}
_PARAM_COUNT = {"CI": 2, "Wheel": 1, "RisingSun": 1, "Hole": 1, "Path": 1, "CompleteGraph": 1}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "family", _ALIASES.get(self.family, self.family))
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        want = _PARAM_COUNT.get(self.family, 0)
        if len(self.params) != want:
            raise ValueError(f"{self.family} takes {want} parameter(s), got {len(self.params)}")
        p = self.params
        if self.family == "CI":
            check_ci_params(*p)
        elif self.family in ("Wheel", "RisingSun", "Hole") and p[0] < 4:
            raise ValueError(f"{self.family} needs n >= 4, got {p[0]}")
        elif self.family in ("Path", "CompleteGraph") and p[0] < 1:
            raise ValueError(f"{self.family} needs n >= 1, got {p[0]}")

    def __str__(self):
        if not self.params:
            return self.family
        return f"{self.family}({', '.join(map(str, self.params))})"


def check_ci_params(n: int, k: int):
    if k < 1 or n <= 2 * k or gcd(n, k) != 1:
        raise ValueError(f"CI(n, k) needs k >= 1, n > 2k and gcd(n, k) = 1; got ({n}, {k})")


def ci_model(n: int, k: int) -> CircularArcModel:
    """Tucker's model on a circle of length 4n.

    Arc i (the i-th long arc) runs from 4ki to 4k(i+1)+1 and arc n+i from
    4ki+2k+1 to 4k(i+1)+2k.  For even k that second family would sit
    inside the long arcs (the model is not proper), so it is shifted back
    by two: 4ki+2k-1 to 4k(i+1)+2k-2.  Coinciding endings and beginnings
    put the ending first so the open arcs stay apart.
    """
    check_ci_params(n, k)
    c = 4 * n
    off = 2 * k + 1 if k % 2 else 2 * k - 1
    arcs = [((4 * k * i) % c, (4 * k * (i + 1) + 1) % c) for i in range(n)]
    arcs += [((4 * k * i + off) % c, (4 * k * (i + 1) + off - 1) % c) for i in range(n)]
    return model_from_intervals(arcs, c)


# --- graphs -----------------------------------------------------------------------

def _graph(n: int, edges) -> Graph:
    return Graph.from_edges(n, edges)


def hole_graph(n: int) -> Graph:
    return _graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return _graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return _graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def wheel_graph(k: int) -> Graph:
    """Rim 0..k-1, hub k."""
    return _graph(k + 1, [(i, (i + 1) % k) for i in range(k)] + [(i, k) for i in range(k)])


def sun3_graph() -> Graph:
    """Triangle 0, 1, 2; vertex 3+i adjacent to i and i+1."""
    edges = [(0, 1), (1, 2), (0, 2)]
    edges += [(3 + i, i) for i in range(3)] + [(3 + i, (i + 1) % 3) for i in range(3)]
    return _graph(6, edges)


def tent_graph() -> Graph:
    return sun3_graph().complement()


def rising_sun_graph(n: int) -> Graph:
    """Vertices v_1..v_n are 0..n-1; w_1, w_{n-1}, w_n are n, n+1, n+2."""
    v = lambda i: i - 1
    edges = [(v(i), v(i + 1)) for i in range(2, n - 1)]
    for end in (1, n):
        edges += [(v(end), v(i)) for i in range(1, n + 1) if i != end]
    edges += [(n, v(1)), (n, v(2)), (n + 1, v(n - 1)), (n + 1, v(n)), (n + 2, v(n)), (n + 2, v(1))]
    return _graph(n + 3, {tuple(sorted(e)) for e in edges})


def umbrella_graph() -> Graph:
    """Hub 0 over the path 1-2-3-4-5, and vertex 6 hanging from 3."""
    edges = [(i, i + 1) for i in range(1, 5)] + [(0, i) for i in range(1, 6)] + [(3, 6)]
    return _graph(7, edges)


def k13_graph() -> Graph:
    return _graph(4, [(0, 1), (0, 2), (0, 3)])


def named_graph(spec: FamilySpec) -> Graph:
    f, p = spec.family, spec.params
    if f == "CI":
        return intersection_graph(ci_model(*p))
    if f == "Wheel":
        return wheel_graph(p[0])
    if f == "RisingSun":
        return rising_sun_graph(p[0])
    if f == "Sun3":
        return sun3_graph()
    if f == "Umbrella":
        return umbrella_graph()
    if f == "Tent":
        return tent_graph()
    if f == "K13":
        return k13_graph()
    if f == "Hole":
        return hole_graph(p[0])
    if f == "Path":
        return path_graph(p[0])
    return complete_graph(p[0])


# --- fixture models ---------------------------------------------------------------

def model_from_clique_ranges(ranges: Sequence[tuple[int, int]], count: int) -> CircularArcModel:
    """Model from a circular sequence of `count` clique points.

    ranges[v] = (first, length): vertex v covers clique points first,
    first+1, ..., first+length-1 (mod count).  Clique point c sits at 10c;
    arcs end just after their last point and begin just before their
    first, staggered by a tiny per-arc amount so no extremes coincide.
    """
    n = len(ranges)
    arcs = []
    for v, (first, length) in enumerate(ranges):
        if not 1 <= length <= count:
            raise ValueError(f"vertex {v} has range length {length} outside [1, {count}]")
        eps = Fraction(v + 1, 10 * (n + 1))
        arcs.append((10 * first - 3 - eps, 10 * (first + length - 1) + 3 + eps))
    return model_from_intervals(arcs, 10 * count)


def _wheel_ranges(k: int, hub: bool):
    ranges = [((i - 1) % k, 2) for i in range(k)]
    return ranges + [(0, k)] if hub else ranges


def _linear(ranges, count):
    # one more clique point that nobody covers leaves a gap
    return model_from_clique_ranges(ranges, count + 1)


def named_model(spec: FamilySpec) -> CircularArcModel:
    """A fixed model of named_graph(spec), labels included."""
    f, p = spec.family, spec.params
    if f == "CI":
        return ci_model(*p)
    if f == "Wheel":
        return model_from_clique_ranges(_wheel_ranges(p[0], True), p[0])
    if f == "Hole":
        return model_from_clique_ranges(_wheel_ranges(p[0], False), p[0])
    if f == "Sun3":
        # clique points W0, W1, W2, T with Wi = {3+i, i, i+1} and T the triangle
        return model_from_clique_ranges([(2, 3), (3, 3), (1, 3), (0, 1), (1, 1), (2, 1)], 4)
    if f == "RisingSun":
        n = p[0]
        # clique points: W1, C(2,3), ..., C(n-2,n-1), W(n-1), Wn
        ranges = [(n - 1, n - 1), (0, 2)] + [(i - 2, 2) for i in range(3, n)] + [(1, n - 1)]
        ranges += [(0, 1), (n - 2, 1), (n - 1, 1)]
        return model_from_clique_ranges(ranges, n)
    if f == "Umbrella":
        # clique points: C34, C45, C12, C23, C36
        return model_from_clique_ranges([(0, 4), (2, 1), (2, 2), (3, 3), (0, 2), (1, 1), (4, 1)], 5)
    if f == "Tent":
        # three arcs covering the circle pairwise, one private arc inside each;
        # the labels follow tent_graph()
        g = tent_graph()
        arcs = {}
        tri = [v for v in range(6) if g.degree(v) == 3]
        big = [(0, 5), (4, 9), (8, 1)]
        small = [(2, 3), (6, 7), (10, 11)]
        for v, arc in zip(tri, big):
            arcs[v] = arc
        for v in range(6):
            if v not in arcs:
                (hub,) = g.adj[v]
                arcs[v] = small[tri.index(hub)]
        return model_from_intervals([arcs[v] for v in range(6)], 12)
    if f == "K13":
        return model_from_intervals([(0, 10), (1, 2), (4, 5), (7, 8)], 12)
    if f == "Path":
        n = p[0]
        if n == 1:
            return _linear([(0, 1)], 1)
        ranges = [(max(i - 1, 0), 1 if i in (0, n - 1) else 2) for i in range(n)]
        return _linear(ranges, n - 1)
    if f == "CompleteGraph":
        n = p[0]
        return CircularArcModel(tuple(Extreme(a, True) for a in range(n)) + tuple(Extreme(a, False) for a in range(n)))
    raise ValueError(f"no fixture model for {spec}")


# --- random models -----------------------------------------------------------------

def random_model(n: int, seed: int, constraint: str = "Any") -> CircularArcModel:
    """A random model on n arcs; reproducible from the seed.

    Any: uniform random order of the 2n extremes.
    Proper: a random word of n beginnings and n endings; endings are matched
    to open arcs first-in first-out, so no arc can contain another and the
    endings follow the beginnings' circular order.
    """
    if n < 1:
        raise ValueError("random_model needs n >= 1")
    rng = random.Random(seed)
    if constraint == "Any":
        order = [Extreme(a, b) for a in range(n) for b in (True, False)]
        rng.shuffle(order)
        return CircularArcModel(tuple(order))
    if constraint != "Proper":
        raise ValueError(f"unknown constraint {constraint!r}")
    # a random walk on the number of open arcs, drifting towards a random
    # density; `wrap` arcs are open across the cut
    density = rng.randint(1, n)
    wrap = rng.randint(0, n - 1)
    kinds = []
    depth, left_s, left_t = wrap, n, n
    while left_s or left_t:
        if depth == 0 or not left_t:
            begin = True
        elif depth == n or not left_s:
            begin = False
        else:
            lean = 0.5 + 0.35 * (density - depth) / density
            begin = rng.random() < min(0.95, max(0.05, lean))
        kinds.append(begin)
        depth += 1 if begin else -1
        left_s -= begin
        left_t -= not begin
    labels = list(range(n))
    rng.shuffle(labels)
    begins = [i for i, k in enumerate(kinds) if k]
    owner = {p: labels[j] for j, p in enumerate(begins)}
    queue = [owner[p] for p in begins[n - wrap:]]
    head = 0
    order = []
    for i, k in enumerate(kinds):
        if k:
            queue.append(owner[i])
            order.append(Extreme(owner[i], True))
        else:
            order.append(Extreme(queue[head], False))
            head += 1
    return CircularArcModel(tuple(order))
