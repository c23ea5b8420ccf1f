"""Text formats: models (.cam), graphs (.g) and unit witnesses (JSON)."""
from __future__ import annotations

import json
from fractions import Fraction

from .arc_model import CircularArcModel, Extreme
from .graph import Graph
from .oracles import UnitWitness


class FormatError(ValueError):
    """Malformed input, tagged with the source and position of the problem."""

    def __init__(self, source: str, line: int, message: str, column: int | None = None):
        where = f"{source}:{line}" if column is None else f"{source}:{line}:{column}"
        super().__init__(f"{where}: {message}")
        self.source, self.line, self.column = source, line, column


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def parse_model(text: str, source: str = "<input>") -> CircularArcModel:
    lines = _content_lines(text)
    if not lines:
        raise FormatError(source, 1, "empty input, expected arc count")
    no, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise FormatError(source, no, f"arc count must be an integer, got {head!r}") from None
    if n < 0:
        raise FormatError(source, no, f"arc count must be non-negative, got {n}")
    tokens: list[tuple[int, int, str]] = []
    for no, line in lines[1:]:
        for col, tok in enumerate(line.split(), 1):
            tokens.append((no, col, tok))
    if len(tokens) != 2 * n:
        last = lines[-1][0]
        raise FormatError(source, last, f"expected {2 * n} extremes, found {len(tokens)}")
    seen: dict[Extreme, tuple[int, int]] = {}
    order = []
    for no, col, tok in tokens:
        if len(tok) < 2 or tok[0] not in "st" or not tok[1:].isdigit():
            raise FormatError(source, no, f"bad extreme token {tok!r}", col)
        e = Extreme(int(tok[1:]), tok[0] == "s")
        if e.arc >= n:
            raise FormatError(source, no, f"arc id {e.arc} out of range [0, {n})", col)
        if e in seen:
            first = seen[e]
            raise FormatError(source, no, f"duplicate extreme {tok} (first at {first[0]}:{first[1]})", col)
        seen[e] = (no, col)
        order.append(e)
    for a in range(n):
        for kind in (True, False):
            if Extreme(a, kind) not in seen:
                partner = seen[Extreme(a, not kind)]
                raise FormatError(source, partner[0], f"extreme {Extreme(a, not kind)} has no partner", partner[1])
    return CircularArcModel(tuple(order))


def format_model(model: CircularArcModel) -> str:
    return f"{model.n}\n{model}\n"


def parse_graph(text: str, source: str = "<input>") -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise FormatError(source, 1, "empty input, expected 'n m'")
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FormatError(source, no, f"header must be 'n m', got {head!r}")
    n, m = map(int, parts)
    if len(lines) - 1 != m:
        raise FormatError(source, lines[-1][0], f"expected {m} edge lines, found {len(lines) - 1}")
    edges = set()
    for no, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormatError(source, no, f"edge must be 'u v', got {line!r}")
        u, v = map(int, parts)
        for col, x in ((1, u), (2, v)):
            if x >= n:
                raise FormatError(source, no, f"vertex {x} out of range [0, {n})", col)
        if u == v:
            raise FormatError(source, no, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in edges:
            raise FormatError(source, no, f"duplicate edge {u} {v}")
        edges.add(key)
    return Graph.from_edges(n, edges)


def format_graph(graph: Graph) -> str:
    edges = graph.edges()
    return "".join([f"{graph.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def parse_witness(text: str, source: str = "<input>") -> UnitWitness:
    try:
        data = json.loads(text)
        return UnitWitness(
            positions=tuple(Fraction(p) for p in data["positions"]),
            circumference=Fraction(data["L"]),
            arc_length=Fraction(data["u"]),
        )
    except json.JSONDecodeError as exc:
        raise FormatError(source, exc.lineno, f"invalid JSON: {exc.msg}", exc.colno) from None
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(source, 1, f"invalid witness: {exc!r}") from None


def format_witness(witness: UnitWitness) -> str:
    return json.dumps({
        "L": str(witness.circumference),
        "u": str(witness.arc_length),
        "positions": [str(p) for p in witness.positions],
    })
