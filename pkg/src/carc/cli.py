"""carc: command-line front end.

Exit status: 0 positive / success, 1 negative verdict, 2 usage or input error.
Reports are key=value lines.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import TextIO

from . import generators as gen
from .arc_model import CircularArcModel, intersection_graph, is_proper
from .certificates import Positive, describe
from .cliques import clique_matrix, clique_segments, ones_property
from .formats import (FormatError, format_graph, format_model, format_witness, parse_graph,
                      parse_model, parse_witness)
from .oracles import CLASS_FILTERS, classify, enumerate_models
from .orientations import Enumeration, orient_from_model, verify_enumeration
from .recognize_nhca import authenticate_nhca, recognize_interval, recognize_nhca
from .recognize_phca import _three_cover, phca_from_nhca, phca_from_pca, u_k
from .recognize_uhca import uhca_from_phca, uhca_from_uca

OK, NEGATIVE, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_model(path: str) -> CircularArcModel:
    return parse_model(_read(path), path)


def _write(text: str, dest: str | None, out: TextIO):
    if dest is None or dest == "-":
        out.write(text)
    else:
        Path(dest).write_text(text)


def _family(name: str) -> str:
    lookup = {f.lower(): f for f in gen.FAMILIES} | {"complete": "CompleteGraph"}
    try:
        return lookup[name.lower()]
    except KeyError:
        raise UsageError(f"unknown family {name!r}; expected one of {', '.join(gen.FAMILIES)} or random") from None


def _default_seed() -> int:
    raw = os.environ.get("CARC_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"CARC_SEED must be an integer, got {raw!r}") from None


# --- verbs ---------------------------------------------------------------------------

def cmd_generate(args, out: TextIO, err: TextIO) -> int:
    if args.family.lower() == "random":
        if len(args.params) != 1:
            raise UsageError("generate random takes exactly one parameter n")
        seed = args.seed if args.seed is not None else _default_seed()
        try:
            model = gen.random_model(args.params[0], seed, args.constraint)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        graph = intersection_graph(model)
    else:
        try:
            spec = gen.FamilySpec(_family(args.family), tuple(args.params))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        graph = gen.named_graph(spec)
        model = None
        if args.as_ == "model":
            try:
                model = gen.named_model(spec)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
    _write(format_model(model) if args.as_ == "model" else format_graph(graph), args.output, out)
    return OK


def cmd_check(args, out: TextIO, err: TextIO) -> int:
    model = _load_model(args.file)
    r = classify(model)
    ids = lambda xs: "none" if xs is None else ",".join(map(str, xs))
    lines = [f"n={model.n}", f"proper={str(r.proper).lower()}", f"normal={str(r.normal).lower()}",
             f"helly={str(r.helly).lower()}", f"nhca={str(r.nhca).lower()}",
             f"interval={str(r.interval_point).lower()}",
             f"two_cover={ids(r.two_cover)}", f"three_cover={ids(r.three_cover)}"]
    out.write("\n".join(lines) + "\n")
    return OK


def _trace(args, err: TextIO, stage: str, model: CircularArcModel):
    if args.trace:
        err.write(f"trace stage={stage} model={model}\n")


def _phca(model: CircularArcModel, source: str | None, args, err: TextIO):
    if source is None:
        source = "nhca" if authenticate_nhca(model) is None else "pca"
    if source == "nhca":
        if authenticate_nhca(model) is not None:
            raise UsageError("--from nhca needs a model with no two or three arcs covering the circle")
        _trace(args, err, "phca_from_nhca", model)
        return phca_from_nhca(model)
    if not is_proper(model):
        raise UsageError("the model has two or three arcs covering the circle and is not proper; "
                         "phca recognition needs an NHCA or a proper model")
    _trace(args, err, "phca_from_pca", model)
    return phca_from_pca(model)


def _recognize(args, model: CircularArcModel, err: TextIO):
    cls = args.class_
    _trace(args, err, "input", model)
    if cls == "nhca":
        return recognize_nhca(model)
    if cls == "interval":
        found = recognize_interval(intersection_graph(model))
        return found
    if cls == "phca":
        return _phca(model, args.source, args, err)
    # uhca
    if args.unit_witness:
        witness = parse_witness(_read(args.unit_witness), args.unit_witness)
        try:
            return uhca_from_uca(model, witness)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if not (is_proper(model) and _three_cover(u_k(model, 1).reduced) is None):
        found = _phca(model, args.source, args, err)
        if not isinstance(found, Positive):
            return found
        model = found.model
        _trace(args, err, "phca_model", model)
    return uhca_from_phca(model)


def _recognize_one(args, path: str, out: TextIO, err: TextIO) -> int:
    model = _load_model(path)
    cert = _recognize(args, model, err)
    out.write("\n".join(describe(cert)) + "\n")
    if isinstance(cert, Positive):
        _trace(args, err, "output", cert.model)
        if args.emit_model:
            Path(args.emit_model).write_text(format_model(cert.model))
        if args.emit_witness and cert.witness is not None:
            Path(args.emit_witness).write_text(format_witness(cert.witness) + "\n")
        return OK
    return NEGATIVE


def cmd_recognize(args, out: TextIO, err: TextIO) -> int:
    return _each(args, out, err, _recognize_one)


def _check_one(args, path, out, err):
    return cmd_check(argparse.Namespace(file=path), out, err)


def _each(args, out: TextIO, err: TextIO, one) -> int:
    """Run `one` on args.file, or on every file of --batch in name order."""
    if args.batch is None:
        if args.file is None:
            raise UsageError("an input file (or --batch DIR) is required")
        return one(args, args.file, out, err)
    if args.file is not None:
        raise UsageError("give either an input file or --batch, not both")
    folder = Path(args.batch)
    if not folder.is_dir():
        raise UsageError(f"--batch: {folder} is not a directory")
    worst = OK
    for path in sorted(folder.glob("*.cam")):
        out.write(f"file={path.name}\n")
        try:
            code = one(args, str(path), out, err)
        except (FormatError, UsageError) as exc:
            err.write(f"error: {exc}\n")
            out.write("verdict=error\n")
            code = USAGE
        worst = max(worst, code)
    return worst


def cmd_cliques(args, out: TextIO, err: TextIO) -> int:
    text = _read(args.file)
    if args.file.endswith(".g"):
        graph = parse_graph(text, args.file)
    else:
        model = parse_model(text, args.file)
        graph = intersection_graph(model)
        if authenticate_nhca(model) is None:
            for k, arcs in clique_segments(model):
                out.write(f"clique_segment={k} arcs={','.join(map(str, sorted(arcs)))}\n")
    q = clique_matrix(graph)
    out.write(f"cliques={len(q.cliques)}\n")
    if args.matrix:
        for c, row in zip(q.cliques, q.rows):
            out.write(f"row={''.join(map(str, row))} clique={','.join(map(str, c))}\n")
    axes = ["rows", "columns"] if args.test == "both" else [args.test]
    for axis in axes:
        order = ones_property(q, axis, "circular")
        shown = "none" if order is None else ",".join(map(str, order))
        out.write(f"circular_ones_{axis}={shown}\n")
    return OK


def cmd_orient(args, out: TextIO, err: TextIO) -> int:
    model = _load_model(args.file)
    flavor = {"out-round": "OutRound", "round": "Round"}[args.flavor]
    try:
        d, e = orient_from_model(model, flavor)
    except ValueError as exc:
        out.write(f"verdict=negative\nreason={exc}\n")
        return NEGATIVE
    out.write(f"enumeration={','.join(map(str, e.order))}\n")
    out.write(f"arcs={' '.join(f'{v}>{w}' for v, w in d.arcs())}\n")
    kinds = ["OutRound", "OutStraight", "LocallyOutStraight"]
    if flavor == "Round":
        kinds += ["Round", "Straight", "LocallyStraight"]
    for kind in kinds:
        out.write(f"{kind}={str(verify_enumeration(d, Enumeration(e.order, kind))).lower()}\n")
    return OK if verify_enumeration(d, e) else NEGATIVE


def cmd_enumerate(args, out: TextIO, err: TextIO) -> int:
    graph = parse_graph(_read(args.file), args.file)
    try:
        models = enumerate_models(graph, CLASS_FILTERS[args.filter], args.limit)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(f"count={len(models)}\n")
    for m in models:
        out.write(f"model={m}\n")
    return OK if models else NEGATIVE


# --- entry points ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="carc", description="Circular-arc model recognition with certificates.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="emit a named family or a random model")
    g.add_argument("family")
    g.add_argument("params", nargs="*", type=int)
    g.add_argument("--as", dest="as_", choices=["model", "graph"], default="model")
    g.add_argument("--constraint", choices=["Any", "Proper"], default="Any")
    g.add_argument("--seed", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(run=cmd_generate)

    c = sub.add_parser("check", help="oracle class report of a model")
    c.add_argument("file", nargs="?")
    c.add_argument("--batch")
    c.set_defaults(run=lambda a, o, e: _each(a, o, e, _check_one))

    r = sub.add_parser("recognize", help="recognize a class and print a certificate")
    r.add_argument("file", nargs="?")
    r.add_argument("--class", dest="class_", choices=["nhca", "phca", "uhca", "interval"], required=True)
    r.add_argument("--from", dest="source", choices=["nhca", "pca"])
    r.add_argument("--unit-witness")
    r.add_argument("--emit-model")
    r.add_argument("--emit-witness")
    r.add_argument("--trace", action="store_true")
    r.add_argument("--batch")
    r.set_defaults(run=cmd_recognize)

    q = sub.add_parser("cliques", help="clique matrix and circular-ones tests")
    q.add_argument("file")
    q.add_argument("--matrix", action="store_true")
    q.add_argument("--test", choices=["rows", "columns", "both"], default="both")
    q.set_defaults(run=cmd_cliques)

    o = sub.add_parser("orient", help="orientation and enumeration of a model")
    o.add_argument("file")
    o.add_argument("--flavor", choices=["out-round", "round"], default="out-round")
    o.set_defaults(run=cmd_orient)

    e = sub.add_parser("enumerate", help="all small models of a graph")
    e.add_argument("file")
    e.add_argument("--filter", choices=sorted(CLASS_FILTERS), default="any")
    e.add_argument("--limit", type=int, default=5)
    e.set_defaults(run=cmd_enumerate)
    return p


def run(argv: list[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.run(args, out, err)
    except (UsageError, FormatError) as exc:
        err.write(f"error: {exc}\n")
        return USAGE
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
