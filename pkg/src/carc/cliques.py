"""Clique segments, clique matrices and consecutive/circular-ones testing."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable

from .arc_model import CircularArcModel
from .graph import Graph
from .oracles import maximal_cliques


@dataclass(frozen=True)
class CliqueMatrix:
    """Rows are maximal cliques (sorted vertex tuples), columns vertices."""

    cliques: tuple[tuple[int, ...], ...]
    n: int

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(v in set(c)) for v in range(self.n)) for c in self.cliques)

    def __str__(self):
        return "\n".join("".join(map(str, r)) for r in self.rows)


def clique_matrix(graph: Graph) -> CliqueMatrix:
    return CliqueMatrix(tuple(maximal_cliques(graph)), graph.n)


def clique_segments(model: CircularArcModel) -> list[tuple[int, frozenset[int]]]:
    """Segments that open at a beginning and close at an ending, with the
    arcs covering each; in an NHCA model these are the maximal cliques."""
    from .recognize_nhca import authenticate_nhca

    if authenticate_nhca(model) is not None:
        raise ValueError("clique_segments needs a model with no two or three arcs covering the circle")
    m, order, masks = model.size, model.order, model.segment_masks
    out = []
    for k in range(m):
        if order[k].begin and not order[(k + 1) % m].begin:
            out.append((k, frozenset(a for a in range(model.n) if masks[a] >> k & 1)))
    return out


# --- consecutive ones ----------------------------------------------------------------

def _arrange_component(rows: list[frozenset]) -> list[set] | None:
    """Order the atoms of one connected overlap component, or None.

    Rows are added so each overlaps one already placed; its place in the
    current block sequence is then forced up to reversal.
    """
    blocks: list[set] = [set(rows[0])]
    for row in rows[1:]:
        hit = [i for i, b in enumerate(blocks) if b & row]
        a, b = hit[0], hit[-1]
        if hit != list(range(a, b + 1)):
            return None
        if any(not blocks[i] <= row for i in range(a + 1, b)):
            return None
        placed = set().union(*blocks)
        new = row - placed
        last = len(blocks) - 1
        if new:
            if b == last and (a == b or blocks[b] <= row):
                head, tail = blocks[a] - row, blocks[a] & row
                blocks[a:a + 1] = [x for x in (head, tail) if x]
                blocks.append(set(new))
            elif a == 0 and (a == b or blocks[a] <= row):
                head, tail = blocks[b] & row, blocks[b] - row
                blocks[b:b + 1] = [x for x in (head, tail) if x]
                blocks.insert(0, set(new))
            else:
                return None
        else:
            if a == b:
                return None
            lb, rb = blocks[b] & row, blocks[b] - row
            blocks[b:b + 1] = [x for x in (lb, rb) if x]
            la, ra = blocks[a] - row, blocks[a] & row
            blocks[a:a + 1] = [x for x in (la, ra) if x]
    return blocks


def _overlap_components(rows: list[frozenset]) -> list[list[frozenset]]:
    """Rows grouped by overlap, each group listed in breadth-first order."""
    seen = [False] * len(rows)
    groups = []
    for root in range(len(rows)):
        if seen[root]:
            continue
        seen[root] = True
        group, queue = [], deque([root])
        while queue:
            i = queue.popleft()
            group.append(rows[i])
            for j in range(len(rows)):
                if not seen[j]:
                    x, y = rows[i], rows[j]
                    if x & y and not x <= y and not y <= x:
                        seen[j] = True
                        queue.append(j)
        groups.append(group)
    return groups


def consecutive_order(universe: Iterable[Hashable], rows: Iterable[Iterable[Hashable]]) -> list | None:
    """An ordering of `universe` in which every row is contiguous, or None."""
    universe = sorted(set(universe))
    clean = sorted({frozenset(r) for r in rows if len(set(r)) >= 2}, key=lambda r: (-len(r), sorted(r)))
    for r in clean:
        if not r <= set(universe):
            raise ValueError("row mentions an element outside the universe")
    order = _order(universe, clean)
    if order is not None:
        where = {x: i for i, x in enumerate(order)}
        for r in clean:
            spots = sorted(where[x] for x in r)
            assert spots[-1] - spots[0] == len(spots) - 1, "consecutive arrangement failed self-check"
    return order


def _order(universe: list, rows: list[frozenset]) -> list | None:
    full = frozenset(universe)
    rows = [r for r in rows if r != full]
    if not rows:
        return list(universe)
    comps = []
    for group in _overlap_components(rows):
        blocks = _arrange_component(group)
        if blocks is None:
            return None
        comps.append((frozenset().union(*group), blocks))
    # component unions are nested or disjoint, and a nested one lies inside
    # a single atom of its host; lay out the outermost ones side by side
    tops = [c for c in comps
            if not any(o is not c and any(c[0] <= b for b in o[1]) for o in comps)]
    taken: set = set()
    out = []
    for union, blocks in sorted(tops, key=lambda c: min(c[0])):
        assert not union & taken, "overlap components are not laminar"
        taken |= union
        for block in blocks:
            part = _order(sorted(block), [r for r in rows if r <= block])
            if part is None:
                return None
            out += part
    return out + [x for x in universe if x not in taken]


def _lines(matrix, axis: str) -> tuple[list[int], list[set[int]]]:
    """Universe to order and the sets that must be contiguous."""
    rows = [tuple(r) for r in matrix]
    width = len(rows[0]) if rows else 0
    if axis == "rows":
        return list(range(width)), [{j for j, x in enumerate(r) if x} for r in rows]
    if axis == "columns":
        return list(range(len(rows))), [{i for i, r in enumerate(rows) if r[j]} for j in range(width)]
    raise ValueError(f"axis must be 'rows' or 'columns', got {axis!r}")


def ones_property(matrix, axis: str = "rows", mode: str = "consecutive") -> list[int] | None:
    """Order of the columns (axis='rows') or of the rows (axis='columns')
    making every line's ones consecutive, or circularly consecutive.

    Circular mode complements each line holding the first element and
    runs the consecutive test on the result.
    """
    if isinstance(matrix, CliqueMatrix):
        matrix = matrix.rows
    universe, sets = _lines(matrix, axis)
    if mode == "circular" and universe:
        pivot = universe[0]
        sets = [set(universe) - s if pivot in s else s for s in sets]
    elif mode not in ("consecutive", "circular"):
        raise ValueError(f"mode must be 'consecutive' or 'circular', got {mode!r}")
    return consecutive_order(universe, sets)


def ones_property_exhaustive(matrix, axis: str = "rows", mode: str = "consecutive") -> list[int] | None:
    """Same contract as ones_property, by depth-first search over orders.

    A line is acceptable when its 0/1 pattern along the order changes
    value at most once from 0 to 1 and once back (consecutive) or at most
    twice in total (circular).
    """
    if isinstance(matrix, CliqueMatrix):
        matrix = matrix.rows
    universe, sets = _lines(matrix, axis)
    k = len(universe)
    limit = 2
    order: list[int] = []
    # per line: last value seen and number of value changes so far
    state = [(None, 0, 0) for _ in sets]  # (last, changes, ups)

    def ok(last, changes, ups, bit):
        if last is None:
            return (bit, 0, bit)
        if bit == last:
            return (last, changes, ups)
        changes += 1
        ups += bit
        if mode == "consecutive":
            if ups > 1 or (changes > 1 and bit == 1):
                return None
        elif changes > limit:
            return None
        return (bit, changes, ups)

    def search(used: int) -> bool:
        nonlocal state
        if len(order) == k:
            return True
        for x in range(k):
            if used >> x & 1:
                continue
            if mode == "circular" and not order and x != 0:
                break
            saved = state
            nxt = []
            for line, st in zip(sets, state):
                r = ok(*st, int(universe[x] in line))
                if r is None:
                    break
                nxt.append(r)
            else:
                state = nxt
                order.append(universe[x])
                if search(used | 1 << x):
                    return True
                order.pop()
            state = saved
        return False

    return list(order) if search(0) else None


def phca_via_matrix(graph: Graph) -> bool:
    """Circular ones for both rows and columns of the clique matrix."""
    q = clique_matrix(graph)
    return (ones_property(q, "rows", "circular") is not None
            and ones_property(q, "columns", "circular") is not None)
