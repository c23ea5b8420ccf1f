"""PCA normalization, extreme-sequence sorting and PHCA recognition."""
from __future__ import annotations

from dataclasses import dataclass

from .arc_model import (CircularArcModel, Extreme, extreme_sequences, induced_submodel,
                        is_proper, reverse_model, universal_arcs)
from .certificates import Forbidden, Positive, verify_forbidden
from .recognize_nhca import authenticate_nhca


@dataclass(frozen=True)
class UkView:
    """A proper model with all but k universal arcs removed.

    `ids[i]` is the original id of arc i of `reduced`.
    """

    reduced: CircularArcModel
    removed_universal: tuple[int, ...]
    kept_universal: tuple[int, ...]
    ids: tuple[int, ...]

    def kept_reduced_id(self) -> int | None:
        if not self.kept_universal:
            return None
        return self.ids.index(self.kept_universal[0])


def u_k(model: CircularArcModel, k: int) -> UkView:
    """Keep the k lowest-id universal arcs and drop the rest."""
    univ = sorted(universal_arcs(model))
    removed = tuple(univ[k:])
    reduced, ids = induced_submodel(model, set(range(model.n)) - set(removed))
    return UkView(reduced, removed, tuple(univ[:k]), ids)


def _restore(view: UkView, reduced: CircularArcModel, twin_of: int | None) -> CircularArcModel:
    """Back to original ids, re-inserting the removed universal arcs as
    twins of reduced arc `twin_of` right after each of its extremes."""
    out = []
    for a, begin in reduced.order:
        out.append(Extreme(view.ids[a], begin))
        if a == twin_of:
            out += [Extreme(r, begin) for r in view.removed_universal]
    return CircularArcModel(tuple(out))


def normalize_pca(model: CircularArcModel) -> CircularArcModel:
    """Equivalent proper model in which no two arcs cover the circle.

    Only universal arcs can cover the circle in pairs, so all but one are
    dropped and the survivor is duplicated back in their place.
    """
    if not is_proper(model):
        raise ValueError("normalize_pca needs a proper model")
    view = u_k(model, 1)
    if not view.removed_universal:
        return model
    return _restore(view, view.reduced, view.kept_reduced_id())


def _sort_endings(model: CircularArcModel) -> CircularArcModel:
    """Reorder every run of consecutive endings by the order of the
    beginnings, arcs crossing s(arc 0) first."""
    m = model.size
    order = model.order
    start = model.pos_s[0]
    marked = set()
    for step in range(m):
        a, begin = order[(start + step) % m]
        if begin:
            marked.add(a)
        else:
            marked.discard(a)
    runs = extreme_sequences(model)
    run_of = {}
    for i, run in enumerate(runs):
        if not run.begin:
            for e in run.extremes:
                run_of[e.arc] = i
    first = {i: [] for i in run_of.values()}
    second = {i: [] for i in run_of.values()}
    for step in range(m):
        a, begin = order[(start + step) % m]
        if begin:
            (first if a in marked else second)[run_of[a]].append(Extreme(a, False))
    out = list(order)
    for i, run in enumerate(runs):
        if not run.begin:
            for k, e in enumerate(first[i] + second[i]):
                out[(run.start + k) % m] = e
    return CircularArcModel(tuple(out))


def sort_extreme_sequences(model: CircularArcModel) -> CircularArcModel:
    """Sort the ending runs, then (mirrored) the beginning runs.

    The model must have no two or three arcs covering the circle.  The
    result only rearranges extremes inside their runs, so the intersection
    graph is unchanged.
    """
    if authenticate_nhca(model) is not None:
        raise ValueError("sort_extreme_sequences needs a model with no two or three arcs covering the circle")
    if model.n == 0:
        return model
    out = _sort_endings(model)
    return reverse_model(_sort_endings(reverse_model(out)))


def phca_from_nhca(model: CircularArcModel):
    """Positive(proper model) or a K13 certificate (center first)."""
    if authenticate_nhca(model) is not None:
        raise ValueError("phca_from_nhca needs a model with no two or three arcs covering the circle")
    sorted_model = sort_extreme_sequences(model)
    m, order = sorted_model.size, sorted_model.order
    begins = [p for p in range(m) if order[p].begin]
    for i, p in enumerate(begins):
        a = order[p].arc
        b = order[begins[(i + 1) % len(begins)]].arc
        if a != b and sorted_model.contains_arc(a, b):
            ps, pt = sorted_model.pos_s[a], sorted_model.pos_t[a]
            left = next(order[(ps + k) % m].arc for k in range(1, m) if not order[(ps + k) % m].begin)
            right = next(order[(pt - k) % m].arc for k in range(1, m) if order[(pt - k) % m].begin)
            cert = Forbidden("K13", (a, b, left, right))
            if left == right or not verify_forbidden(model, cert):
                raise RuntimeError(f"K13 extraction failed on {model}")
            return cert
    if not is_proper(sorted_model):
        raise RuntimeError(f"sorted model is not proper: {sorted_model}")
    return Positive(sorted_model, route="sorted")


# --- from proper models --------------------------------------------------------------

def _pca_next(model: CircularArcModel) -> list[int | None]:
    """In a proper model, NEXT(A) is the arc of the last beginning before
    t(A); None when that beginning is s(A) itself."""
    m, order = model.size, model.order
    nxt: list[int | None] = [None] * model.n
    last = None
    for step in range(2 * m):
        a, begin = order[step % m]
        if begin:
            last = a
        elif step >= m:
            nxt[a] = None if last == a else last
    return nxt


def _three_cover(model: CircularArcModel) -> tuple[int, int, int] | None:
    nxt = _pca_next(model)
    m = model.size
    for a in range(model.n):
        x = nxt[a]
        y = None if x is None else nxt[x]
        if y is None or y == a:
            continue
        tx = model.pos_t[x]
        if (model.pos_t[y] - tx) % m > (model.pos_s[a] - tx) % m:
            return a, x, y
    return None


def _first_begin_after(model: CircularArcModel, p: int) -> int:
    m = model.size
    return next(model.order[(p + k) % m].arc for k in range(1, m) if model.order[(p + k) % m].begin)


def phca_from_pca(model: CircularArcModel):
    """Positive(PHCA model, possibly interval) or a W4 / S3 certificate.

    Works on U_1: with a single universal arc left, no two arcs cover the
    circle, so only a covering triple can break the Helly property.
    """
    if not is_proper(model):
        raise ValueError("phca_from_pca needs a proper model")
    view = u_k(model, 1)
    u = view.reduced
    kept = view.kept_reduced_id()
    triple = _three_cover(u)
    if triple is None:
        return Positive(_restore(view, u, kept), route="helly")
    lift = lambda arcs: tuple(view.ids[a] for a in arcs)

    def certify(kind: str, arcs) -> Forbidden:
        cert = Forbidden(kind, lift(arcs))
        if not verify_forbidden(model, cert):
            raise RuntimeError(f"{kind} extraction failed on {model}")
        return cert

    for _ in range(3):
        if kept not in triple:
            a = list(triple)
            b = [_first_begin_after(u, u.pos_t[x]) for x in a]
            pairs = [(i, j) for i in range(3) for j in range(i + 1, 3) if u.intersects(b[i], b[j])]
            if not pairs:
                return certify("S3", a + b)
            i, j = pairs[0]
            return certify("W4", a + [b[i], b[j]])
        # rotate so the universal arc comes first; the cyclic order of the
        # triple keeps s(A2) inside A1
        k = triple.index(kept)
        a1, a2, a3 = triple[k:] + triple[:k]
        m, order = u.size, u.order
        ps, span = u.pos_s[a1], u.span(a1)
        inside = [order[(ps + k) % m] for k in range(1, span)]
        firsts = [i for i, e in enumerate(inside) if e.begin]
        lasts = [i for i, e in enumerate(inside) if not e.begin]
        if not (firsts and lasts and firsts[0] < lasts[-1]):
            # U_0 is an interval model: swap the universal arc for its complement
            flipped = CircularArcModel(tuple(Extreme(x, b != (x == a1)) for x, b in u.order))
            return Positive(_restore(view, flipped, a1), route="pig")
        r, l = inside[firsts[0]].arc, inside[lasts[-1]].arc
        end3 = next(i for i, e in enumerate(inside) if e.arc == a3)
        start2 = next(i for i, e in enumerate(inside) if e.arc == a2)
        # s(R) before t(A3): the pair R, A3 already works, and likewise A2, L
        if firsts[0] < end3:
            triple = (r, a2, a3)
        elif lasts[-1] > start2:
            triple = (l, a2, a3)
        else:
            cert = Forbidden("W4", lift((a1, a2, a3, l, r)))
            if verify_forbidden(model, cert):
                return cert
            if u.intersects(l, a2):
                triple = (a2, l, r)
            else:
                triple = (a3, l, r)
    raise RuntimeError(f"certificate search did not settle on {model}")
