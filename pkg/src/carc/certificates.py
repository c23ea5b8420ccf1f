"""Recognition outcomes and their independent re-verification."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .arc_model import CircularArcModel, intersection_graph
from .graph import Graph
from .oracles import UnitWitness, find_asteroidal_triple, find_hole, isomorphic


@dataclass(frozen=True)
class Positive:
    """A model of the requested class; its graph equals the input's."""

    model: CircularArcModel
    witness: UnitWitness | None = None
    route: str = ""


@dataclass(frozen=True)
class Cover:
    arcs: tuple[int, ...]


@dataclass(frozen=True)
class TwoCover(Cover):
    kind = "TwoCover"


@dataclass(frozen=True)
class ThreeCover(Cover):
    kind = "ThreeCover"


@dataclass(frozen=True)
class Forbidden:
    """An induced subgraph of a named kind, given by host vertex/arc ids.

    `kind` is one of K13, W4, S3, Wheel, Sun3, RisingSun, Umbrella, Tent,
    Hole, AT (a chordal graph with an asteroidal triple), or CI (with n, k
    recorded in `params`).
    """

    kind: str
    arcs: tuple[int, ...]
    params: tuple[int, ...] = field(default=())


@dataclass(frozen=True)
class NonNHCA:
    """The model has a small cover and its graph is not interval."""

    cover: Cover
    obstruction: Forbidden


@dataclass(frozen=True)
class NonUnit:
    reason: str
    ci: Forbidden | None = None


Certificate = Union[Positive, TwoCover, ThreeCover, Forbidden, NonNHCA, NonUnit]


def is_positive(cert) -> bool:
    return isinstance(cert, Positive)


def verify_cover(model: CircularArcModel, cover: Cover) -> bool:
    want = 2 if isinstance(cover, TwoCover) else 3
    arcs = set(cover.arcs)
    if len(arcs) != want or not all(0 <= a < model.n for a in arcs):
        return False
    union = 0
    for a in arcs:
        union |= model.segment_masks[a]
    return union == model.full_mask


def pattern_graph(kind: str, size: int, params: tuple[int, ...] = ()) -> Graph | None:
    """The named graph a certificate of this kind and size must induce;
    None for kinds checked structurally (Hole, AT)."""
    from . import generators as gen

    if kind == "K13":
        return gen.k13_graph()
    if kind in ("W4", "Wheel"):
        return gen.wheel_graph(size - 1)
    if kind in ("S3", "Sun3"):
        return gen.sun3_graph()
    if kind == "RisingSun":
        return gen.rising_sun_graph(size - 3)
    if kind == "Umbrella":
        return gen.umbrella_graph()
    if kind == "Tent":
        return gen.tent_graph()
    if kind == "CI":
        return gen.named_graph(gen.FamilySpec("CI", params))
    if kind in ("Hole", "AT"):
        return None
    raise ValueError(f"unknown certificate kind {kind!r}")


def verify_forbidden_graph(graph: Graph, cert: Forbidden) -> bool:
    verts = set(cert.arcs)
    if len(verts) != len(cert.arcs) or not all(0 <= v < graph.n for v in verts):
        return False
    sub, _ = graph.induced(verts)
    if cert.kind == "Hole":
        return sub.n >= 4 and sub.is_cycle()
    if cert.kind == "AT":
        return find_hole(sub) is None and find_asteroidal_triple(sub) is not None
    if cert.kind == "W4" and sub.n != 5 or cert.kind == "S3" and sub.n != 6:
        return False
    return isomorphic(sub, pattern_graph(cert.kind, sub.n, cert.params))


def verify_forbidden(model: CircularArcModel, cert: Forbidden) -> bool:
    return verify_forbidden_graph(intersection_graph(model), cert)


def describe(cert) -> list[str]:
    """Stable key=value lines for reports."""
    if isinstance(cert, Positive):
        lines = ["verdict=positive"]
        if cert.route:
            lines.append(f"route={cert.route}")
        lines.append(f"model={cert.model}")
        if cert.witness is not None:
            lines.append(f"L={cert.witness.circumference} u={cert.witness.arc_length}")
        return lines
    ids = lambda xs: ",".join(map(str, xs))
    if isinstance(cert, Cover):
        return ["verdict=negative", f"certificate={cert.kind} arcs={ids(cert.arcs)}"]
    if isinstance(cert, Forbidden):
        extra = f" params={ids(cert.params)}" if cert.params else ""
        return ["verdict=negative", f"certificate={cert.kind} arcs={ids(cert.arcs)}{extra}"]
    if isinstance(cert, NonNHCA):
        return ["verdict=negative",
                f"certificate={cert.cover.kind} arcs={ids(cert.cover.arcs)}",
                f"obstruction={cert.obstruction.kind} vertices={ids(cert.obstruction.arcs)}"]
    if isinstance(cert, NonUnit):
        lines = ["verdict=negative", f"reason={cert.reason}"]
        if cert.ci is not None:
            lines.append(f"certificate=CI params={ids(cert.ci.params)} arcs={ids(cert.ci.arcs)}")
        return lines
    raise TypeError(f"not a certificate: {cert!r}")
