"""Circular-arc models as circular sequences of arc extremes.

A model on n arcs is a circular order of 2n extremes.  Arc a is the open
range that starts at its beginning s(a) and runs clockwise to its ending
t(a).  Segment k is the stretch of circle between position k and
position k+1, so there are 2n segments and arc a covers segment k iff k
lies in [pos(s(a)), pos(t(a))) circularly.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .graph import Graph


class Extreme(NamedTuple):
    arc: int
    begin: bool

    def __str__(self):
        return f"{'s' if self.begin else 't'}{self.arc}"


def s(a: int) -> Extreme:
    return Extreme(a, True)


def t(a: int) -> Extreme:
    return Extreme(a, False)


@dataclass(frozen=True)
class CircularArcModel:
    """An immutable circular order of extremes.

    Two instances compare equal only when their orders agree position by
    position; use `equal_models` for equality up to rotation and relabeling.
    """

    order: tuple[Extreme, ...]

    def __post_init__(self):
        order = tuple(Extreme(int(a), bool(b)) for a, b in self.order)
        object.__setattr__(self, "order", order)
        if len(order) % 2:
            raise ValueError(f"odd number of extremes ({len(order)})")
        n = len(order) // 2
        pos_s: list[int | None] = [None] * n
        pos_t: list[int | None] = [None] * n
        for i, (a, begin) in enumerate(order):
            if not 0 <= a < n:
                raise ValueError(f"arc id {a} out of range at position {i}")
            slots = pos_s if begin else pos_t
            if slots[a] is not None:
                raise ValueError(f"duplicate extreme {Extreme(a, begin)} at position {i}")
            slots[a] = i
        object.__setattr__(self, "pos_s", tuple(pos_s))
        object.__setattr__(self, "pos_t", tuple(pos_t))

    @classmethod
    def parse(cls, text: str) -> "CircularArcModel":
        """Build from tokens like ``"s0 s1 t0 t1"``."""
        order = []
        for tok in text.split():
            if tok[0] not in "st" or not tok[1:].isdigit():
                raise ValueError(f"bad extreme token {tok!r}")
            order.append(Extreme(int(tok[1:]), tok[0] == "s"))
        return cls(tuple(order))

    def __str__(self):
        return " ".join(map(str, self.order))

    @property
    def n(self) -> int:
        return len(self.order) // 2

    @property
    def size(self) -> int:
        return len(self.order)

    def span(self, a: int) -> int:
        """Number of segments covered by arc a."""
        return (self.pos_t[a] - self.pos_s[a]) % len(self.order)

    def contains_position(self, a: int, p: int) -> bool:
        """True iff the extreme at position p lies strictly inside arc a."""
        m = len(self.order)
        ps = self.pos_s[a]
        return 0 < (p - ps) % m < (self.pos_t[a] - ps) % m

    def covers_segment(self, a: int, k: int) -> bool:
        m = len(self.order)
        ps = self.pos_s[a]
        return (k - ps) % m < (self.pos_t[a] - ps) % m

    def crosses_begin(self, a: int, b: int) -> bool:
        """True iff arc a contains the beginning of arc b."""
        return self.contains_position(a, self.pos_s[b])

    def intersects(self, a: int, b: int) -> bool:
        return a != b and (self.crosses_begin(a, b) or self.crosses_begin(b, a))

    def contains_arc(self, a: int, b: int) -> bool:
        """True iff arc b lies inside arc a (a != b)."""
        m = len(self.order)
        ps = self.pos_s[a]
        db = (self.pos_s[b] - ps) % m
        dt = (self.pos_t[b] - ps) % m
        return a != b and 0 < db < dt < (self.pos_t[a] - ps) % m

    @cached_property
    def segment_masks(self) -> tuple[int, ...]:
        """Per arc, the bitmask of covered segments."""
        m = len(self.order)
        full = (1 << m) - 1
        out = []
        for a in range(self.n):
            ps, length = self.pos_s[a], self.span(a)
            block = (1 << length) - 1
            out.append(((block << ps) | (block >> (m - ps))) & full)
        return tuple(out)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.order)) - 1

    def rotate(self, k: int) -> "CircularArcModel":
        """Same circular order, cut so that position k comes first."""
        if not self.order:
            return self
        k %= len(self.order)
        return CircularArcModel(self.order[k:] + self.order[:k])

    def relabel(self, perm: Sequence[int]) -> "CircularArcModel":
        """Arc a renamed perm[a]."""
        return CircularArcModel(tuple(Extreme(perm[a], b) for a, b in self.order))


EMPTY = CircularArcModel(())


def model_from_intervals(arcs: Sequence[tuple], circumference) -> CircularArcModel:
    """Model from numeric (begin, end) pairs on a circle.

    Arc i runs clockwise from begin to end.  Coordinates are reduced modulo
    the circumference.  When an ending and a beginning share a point the
    ending is placed first, which keeps open arcs that merely touch apart.
    Two beginnings or two endings at the same point are rejected.
    """
    keyed = []
    for i, (b, e) in enumerate(arcs):
        b, e = Fraction(b) % circumference, Fraction(e) % circumference
        if b == e:
            raise ValueError(f"arc {i} has zero or full length")
        keyed.append((b, 1, i))
        keyed.append((e, 0, i))
    keyed.sort()
    for (x, k, i), (y, l, j) in zip(keyed, keyed[1:]):
        if x == y and k == l:
            raise ValueError(f"arcs {i} and {j} share an extreme at {x}")
    return CircularArcModel(tuple(Extreme(i, bool(k)) for _, k, i in keyed))


def intersection_graph(model: CircularArcModel) -> Graph:
    n, m = model.n, model.size
    adj: list[set[int]] = [set() for _ in range(n)]
    for a in range(n):
        # every beginning strictly inside arc a gives an edge
        p = model.pos_s[a]
        for step in range(1, model.span(a)):
            b, begin = model.order[(p + step) % m]
            if begin:
                adj[a].add(b)
                adj[b].add(a)
    return Graph(n, adj)


def induced_submodel(model: CircularArcModel, arcs: Iterable[int]) -> tuple[CircularArcModel, tuple[int, ...]]:
    """Submodel on the given arcs, renumbered in increasing id order.

    Returns the submodel and the map from new ids to old ids.
    """
    keep = tuple(sorted(set(arcs)))
    for a in keep:
        if not 0 <= a < model.n:
            raise ValueError(f"arc id {a} out of range")
    index = {a: i for i, a in enumerate(keep)}
    order = tuple(Extreme(index[a], b) for a, b in model.order if a in index)
    return CircularArcModel(order), keep


def complement_model(model: CircularArcModel) -> CircularArcModel:
    return CircularArcModel(tuple(Extreme(a, not b) for a, b in model.order))


def complement_arc(model: CircularArcModel, a: int) -> CircularArcModel:
    """Replace arc a by its complement, keeping everything else."""
    return CircularArcModel(tuple(Extreme(x, b != (x == a)) for x, b in model.order))


def duplicate_arc(model: CircularArcModel, a: int, new_id: int | None = None) -> CircularArcModel:
    """Insert a twin of arc a just after each of its extremes.

    The twin gets id n unless `new_id` says otherwise, in which case ids
    at or above new_id shift up by one.
    """
    if not 0 <= a < model.n:
        raise ValueError(f"arc id {a} out of range")
    n = model.n
    if new_id is None:
        new_id = n
    shift = lambda x: x + 1 if x >= new_id else x
    order = []
    for x, b in model.order:
        order.append(Extreme(shift(x), b))
        if x == a:
            order.append(Extreme(new_id, b))
    return CircularArcModel(tuple(order))


def reverse_model(model: CircularArcModel) -> CircularArcModel:
    return CircularArcModel(tuple(Extreme(a, not b) for a, b in reversed(model.order)))


def canonical_form(model: CircularArcModel) -> tuple[int, ...]:
    """Smallest rotation code, with arcs relabeled by first appearance."""
    best = None
    m = model.size
    for r in range(m):
        label: dict[int, int] = {}
        code = []
        for i in range(m):
            a, b = model.order[(r + i) % m]
            if a not in label:
                label[a] = len(label)
            code.append(2 * label[a] + (0 if b else 1))
        code = tuple(code)
        if best is None or code < best:
            best = code
    return best or ()


def equal_models(m1: CircularArcModel, m2: CircularArcModel) -> bool:
    """Equal up to rotation and a bijection of arc ids (not reflection)."""
    return m1.n == m2.n and canonical_form(m1) == canonical_form(m2)


def is_proper(model: CircularArcModel) -> bool:
    """No arc contains another.

    Two laps around the circle with the open arcs queued by age: an arc
    that ends while an older one is still open lies inside it.
    """
    m = model.size
    queue: deque[tuple[int, int]] = deque()
    opened: dict[int, int] = {}
    for step in range(2 * m):
        a, begin = model.order[step % m]
        if begin:
            queue.append((a, step))
            opened[a] = step
        elif a in opened:
            while opened.get(queue[0][0]) != queue[0][1]:
                queue.popleft()
            if step >= m and queue[0][0] != a:
                return False
            del opened[a]
    return True


def universal_arcs(model: CircularArcModel) -> set[int]:
    """Arcs containing at least n-1 extremes; for proper models these are
    exactly the universal vertices of the intersection graph."""
    n = model.n
    return {a for a in range(n) if model.span(a) - 1 >= n - 1}


class ExtremeRun(NamedTuple):
    begin: bool
    start: int
    extremes: tuple[Extreme, ...]


def extreme_sequences(model: CircularArcModel) -> list[ExtremeRun]:
    """Maximal runs of same-kind extremes.

    The first run starts at the first position whose kind differs from its
    predecessor, so the runs concatenate to a rotation of the order.
    """
    order, m = model.order, model.size
    if not m:
        return []
    start = next(i for i in range(m) if order[i].begin != order[i - 1].begin)
    runs: list[ExtremeRun] = []
    cur: list[Extreme] = []
    cur_start = start
    for step in range(m):
        i = (start + step) % m
        if cur and order[i].begin != cur[-1].begin:
            runs.append(ExtremeRun(cur[-1].begin, cur_start, tuple(cur)))
            cur, cur_start = [], i
        cur.append(order[i])
    runs.append(ExtremeRun(cur[-1].begin, cur_start, tuple(cur)))
    return runs


def _is_block(positions: Sequence[int], m: int) -> bool:
    """True iff the positions occupy consecutive places circularly."""
    held = set(positions)
    if len(held) >= m:
        return True
    return sum((p + 1) % m in held for p in held) == len(held) - 1


def is_twin_consecutive(model: CircularArcModel) -> bool:
    g = intersection_graph(model)
    for family in g.twin_classes():
        if len(family) < 2:
            continue
        if not _is_block([model.pos_s[a] for a in family], model.size):
            return False
        if not _is_block([model.pos_t[a] for a in family], model.size):
            return False
    return True
