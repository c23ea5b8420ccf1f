"""UHCA recognition from PHCA or unit models, and CI(n, k) detection."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .arc_model import CircularArcModel, Extreme, intersection_graph, is_proper
from .certificates import Forbidden, NonUnit, Positive, TwoCover
from .generators import ci_model
from .graph import Graph
from .oracles import UnitWitness, find_induced, unit_realizable, verify_unit_witness
from .recognize_nhca import authenticate_nhca
from .recognize_phca import _three_cover, normalize_pca, phca_from_pca, u_k

CI_SEARCH_BOUND = 12


def find_ci(graph: Graph, max_vertices: int, regime: str = "n>2k") -> tuple[int, int, dict[int, int]] | None:
    """Smallest induced CI(n, k) with 2n <= max_vertices, ordered by size
    then k.  regime is 'n>2k' or 'n>3k'.  The mapping sends vertices of
    the CI graph to graph vertices."""
    if regime not in ("n>2k", "n>3k"):
        raise ValueError(f"regime must be 'n>2k' or 'n>3k', got {regime!r}")
    factor = 2 if regime == "n>2k" else 3
    limit = min(max_vertices, graph.n)
    cands = [(n, k) for n in range(3, limit // 2 + 1) for k in range(1, n)
             if n > factor * k and gcd(n, k) == 1]
    for n, k in sorted(cands, key=lambda c: (2 * c[0], c[1])):
        hit = find_induced(graph, intersection_graph(ci_model(n, k)))
        if hit is not None:
            return n, k, hit
    return None


def _is_helly_proper(model: CircularArcModel) -> bool:
    return is_proper(model) and _three_cover(u_k(model, 1).reduced) is None


def uhca_from_phca(model: CircularArcModel, bound: int = CI_SEARCH_BOUND):
    """Positive(normalized model, unit witness) or NonUnit.

    The model is normalized first; normalization only moves duplicated
    universal arcs, so the graph and the Helly property are kept, and the
    unit solver is asked to realize exactly that extreme order.
    """
    if not _is_helly_proper(model):
        raise ValueError("uhca_from_phca needs a proper Helly model")
    if model.n == 0:
        return Positive(model, UnitWitness((), Fraction(2), Fraction(1)), route="unit")
    normal = normalize_pca(model)
    witness = unit_realizable(normal)
    if witness is not None:
        return Positive(normal, witness, route="unit")
    graph = intersection_graph(model)
    bound = min(bound, graph.n)
    found = find_ci(graph, bound, "n>3k")
    if found is None:
        return NonUnit(f"infeasible (witness search exhausted at bound {bound})")
    n, k, hit = found
    return NonUnit("not unit realizable", Forbidden("CI", tuple(hit[v] for v in range(2 * n)), (n, k)))


def complete_unit_model(n: int) -> tuple[CircularArcModel, UnitWitness]:
    """All beginnings then all endings, each arc of length n on a circle of 2n."""
    model = CircularArcModel(tuple(Extreme(a, True) for a in range(n)) + tuple(Extreme(a, False) for a in range(n)))
    return model, UnitWitness(tuple(Fraction(p) for p in range(2 * n)), Fraction(2 * n), Fraction(n))


def uhca_from_uca(model: CircularArcModel, witness: UnitWitness):
    """Positive(UHCA model with witness) or a W4 / S3 certificate."""
    if not verify_unit_witness(model, witness):
        raise ValueError("witness does not realize the model with equal arc lengths")
    cover = authenticate_nhca(model)
    if cover is None:
        return Positive(model, witness, route="helly")
    if isinstance(cover, TwoCover):
        # two arcs covering the circle make every pair of arcs intersect
        unit, w = complete_unit_model(model.n)
        return Positive(unit, w, route="complete")
    found = phca_from_pca(model)
    if not isinstance(found, Positive):
        return found
    w = unit_realizable(found.model)
    if w is None:
        raise RuntimeError(f"PHCA model of a unit graph is not unit realizable: {found.model}")
    return Positive(found.model, w, route=found.route)
