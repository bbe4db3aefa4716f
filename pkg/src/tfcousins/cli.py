"""Command-line interface: ``python -m tfcousins <subcommand> ...``.

Exit codes: 0 success, 1 usage or parse error, 2 capacity exceeded,
3 internal assertion failure.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .canon import are_isomorphic
from .census import census_cousins, ingest, report, verify_conjecture, write_catalog
from .constructions import (
    ClawParams,
    add_entangled_edge,
    add_pin,
    add_split_image_edges,
    claw_companion,
    claw_graph,
    claw_tf_pair,
    named_graph,
    seed_pair,
    split_image_complement,
    substitute,
)
from .cover import TrivialReason, adc, cdc, instability_report
from .errors import CapacityError, TfCousinsError
from .graph6 import parse_graph6, write_graph6
from .graphs import Graph, MixedGraph
from .liftfold import base_graph_census
from .perm import Permutation
from .structure import bipartition
from .tfiso import TfPair, find_tf_isomorphism, tf_automorphism_group

EXIT_OK, EXIT_USAGE, EXIT_CAPACITY, EXIT_INTERNAL = 0, 1, 2, 3

ENV_ELEMENT_BOUND = "TFCOUSINS_ELEMENT_BOUND"
ENV_WORKERS = "TFCOUSINS_WORKERS"


@dataclass(frozen=True)
class CliConfig:
    element_bound: int = 10**6
    strict_parse: bool = True
    workers: int = 1
    output_format: str = "text"
    one_based: bool = False

    def __post_init__(self):
        if self.element_bound < 1:
            raise UsageError("element bound must be >= 1")
        if self.workers < 0:
            raise UsageError("workers must be >= 0")
        if self.output_format not in ("text", "catalog-lines"):
            raise UsageError(f"unknown output format {self.output_format!r}")


class UsageError(TfCousinsError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- input helpers -----------------------------------------------------------

def _read_graph(spec: str | None, named: str | None) -> Graph:
    if named is not None:
        return named_graph(named)
    if spec is None:
        raise UsageError("a graph6 string, a file, or --named is required")
    p = Path(spec)
    if p.is_file():
        for line in p.read_text(encoding="ascii").splitlines():
            if line.strip():
                return parse_graph6(line)
        raise UsageError(f"{spec}: no graph6 record")
    return parse_graph6(spec)


def _fmt_perm(p: Permutation, cfg: CliConfig) -> str:
    return p.cycle_notation(cfg.one_based)


def _fmt_pair(p: TfPair, cfg: CliConfig) -> str:
    return f"alpha={_fmt_perm(p.alpha, cfg)} beta={_fmt_perm(p.beta, cfg)}"


def _fmt_graph(g: Graph | MixedGraph, cfg: CliConfig) -> str:
    if isinstance(g, Graph):
        return write_graph6(g)
    off = 1 if cfg.one_based else 0
    loops = " ".join(str(v + off) for v in g.loop_vertices)
    return f"{write_graph6(g.underlying())} loops: {loops}"


def _parse_cycles(text: str, n: int, one_based: bool) -> Permutation:
    cycles = [[int(x) for x in grp.replace(",", " ").split()] for grp in re.findall(r"\(([^)]*)\)", text)]
    if not cycles and text.strip() not in ("", "()", "id", "identity"):
        raise UsageError(f"cannot read permutation {text!r}")
    return Permutation.from_cycles(n, [c for c in cycles if c], one_based=one_based)


# -- subcommands -------------------------------------------------------------

def _cmd_cdc(args, cfg: CliConfig, out) -> int:
    g = _read_graph(args.graph, args.named)
    print(write_graph6(cdc(g).graph), file=out)
    return EXIT_OK


def _cmd_adc(args, cfg: CliConfig, out) -> int:
    g = _read_graph(args.graph, args.named)
    off = 1 if cfg.one_based else 0
    for u, v in adc(g).digraph.arcs:
        print(f"{u + off} -> {v + off}", file=out)
    return EXIT_OK


def _cmd_tf_test(args, cfg: CliConfig, out) -> int:
    g = _read_graph(args.g, args.named_g)
    h = _read_graph(args.h, args.named_h)
    pair = find_tf_isomorphism(g, h)
    iso = are_isomorphic(g, h) if g.n == h.n else None
    if pair is None:
        print("UNRELATED", file=out)
        return EXIT_OK
    if iso is None:
        print("COUSINS", file=out)
        print(_fmt_pair(pair, cfg), file=out)
        return EXIT_OK
    rep = instability_report(g)
    if rep.unstable and rep.trivial_reason is TrivialReason.NONE:
        # isomorphic, and linked by a TF-isomorphism that no automorphism explains
        wit = tf_automorphism_group(g).nontrivial_witness()
        print("TF-EQUIVALENT-ISOMORPHIC", file=out)
        if wit is not None:
            composed = TfPair(iso * wit.alpha, iso * wit.beta)
            print(_fmt_pair(composed, cfg), file=out)
        return EXIT_OK
    print("ISOMORPHIC", file=out)
    print(_fmt_pair(TfPair(iso, iso), cfg), file=out)
    return EXIT_OK


def _cmd_unstable(args, cfg: CliConfig, out) -> int:
    g = _read_graph(args.graph, args.named)
    rep = instability_report(g)
    words = ["unstable" if rep.unstable else "stable"]
    if rep.aut_g_order == 1:
        words.append("asymmetric")
    words.append(f"index {rep.index}")
    print(", ".join(words), file=out)
    if rep.unstable and rep.trivial_reason is TrivialReason.BIPARTITE:
        print("trivially unstable (bipartite)", file=out)
    elif rep.unstable and rep.trivial_reason is TrivialReason.TWIN_VERTICES:
        print("trivially unstable (twin vertices)", file=out)
    if not rep.connected:
        print("note: input is disconnected", file=out)
    print(f"|Aut(G)| = {rep.aut_g_order}", file=out)
    print(f"|Aut(CDC)| = {rep.aut_cdc_order}", file=out)
    wit = tf_automorphism_group(g).nontrivial_witness()
    if wit is not None:
        print(f"witness: {_fmt_pair(wit, cfg)}", file=out)
    return EXIT_OK


def _cover_from_bipartite(g: Graph):
    from .cover import Cover

    col = bipartition(g)
    if col is None:
        raise UsageError("--cover input must be bipartite")
    side0 = [v for v in range(g.n) if col[v] == 0]
    side1 = [v for v in range(g.n) if col[v] == 1]
    if len(side0) != len(side1):
        raise UsageError("--cover input must have colour classes of equal size")
    order = side0 + side1
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return Cover(len(side0), g.relabel(Permutation(tuple(pos))))


def _cmd_fold_census(args, cfg: CliConfig, out) -> int:
    g = _read_graph(args.graph, args.named)
    mode = args.mode
    if args.cover:
        d = _cover_from_bipartite(g)
    else:
        d = cdc(g)
        if args.as_cover_of_two_copies:
            if bipartition(g) is None:
                raise UsageError("--as-cover-of-two-copies needs a bipartite graph")
            mode = "bipartite"
    classes = base_graph_census(d, cfg.element_bound, mode, include_loops=args.include_loops)
    loopless = [c for c in classes if c.loopless]
    print(f"loopless classes: {len(loopless)}", file=out)
    if args.include_loops:
        print(f"loop-carrying classes: {len(classes) - len(loopless)}", file=out)
    for c in classes:
        tag = "loopless" if c.loopless else "loops"
        print(f"{_fmt_graph(c.graph, cfg)}  [{tag}]  guide={_fmt_perm(c.guide.involution, cfg)}", file=out)
    return EXIT_OK


def _cmd_claw(args, cfg: CliConfig, out) -> int:
    params = ClawParams(args.n, args.k)
    g = claw_graph(params)
    print(write_graph6(g), file=out)
    if args.companion or args.tf_test:
        c = claw_companion(params)
        print(write_graph6(c), file=out)
        if (params.k * params.n) % 2 == 1:
            print(f"witness (companion -> claw): {_fmt_pair(claw_tf_pair(params), cfg)}", file=out)
        if args.tf_test:
            related = find_tf_isomorphism(c, g) is not None
            parity = "odd" if (params.k * params.n) % 2 else "even"
            label = "n" if params.k == 3 else "kn"
            verdict = "cousins" if related and are_isomorphic(c, g) is None else "not cousins"
            print(f"{verdict} ({parity} {label})", file=out)
    return EXIT_OK


def _emit_state(s, cfg: CliConfig, out) -> None:
    print(f"g: {_fmt_graph(s.g, cfg)}", file=out)
    print(f"h: {_fmt_graph(s.h, cfg)}", file=out)
    print(f"pair: {_fmt_pair(s.pair, cfg)}", file=out)


def _cmd_seed(args, cfg: CliConfig, out) -> int:
    s = seed_pair(args.k)
    ents = s.entangled_pairs
    if args.entangled_edges > len(ents):
        raise UsageError(f"only {len(ents)} entangled pairs are available")
    for x, y in ents[: args.entangled_edges]:
        s = add_entangled_edge(s, x, y)
    added = 0
    for u in range(s.g.n):
        for v in range(u + 1, s.g.n):
            if added >= args.split_pairs:
                break
            if (u, v) in ents or s.g.has_edge(u, v):
                continue
            partner = split_image_complement(s, (u, v))
            if partner is None or partner <= (u, v) or s.g.has_edge(*partner):
                continue
            try:
                s = add_split_image_edges(s, (u, v), partner)
            except TfCousinsError:
                continue
            added += 1
    if added < args.split_pairs:
        raise UsageError(f"only {added} complementary split-image pairs could be added")
    for _ in range(args.pins):
        s = add_pin(s, [s.entangled_pairs[0]])
    _emit_state(s, cfg, out)
    return EXIT_OK


def _cmd_substitute(args, cfg: CliConfig, out) -> int:
    if args.g is None:
        g = h = named_graph("complete_bipartite", 2, 3)
        pair = TfPair(Permutation.identity(5), Permutation.from_cycles(5, [(0, 1)]))
        u, v = 0, 1
    else:
        g = parse_graph6(args.g)
        h = parse_graph6(args.h) if args.h else g
        pair = TfPair(
            _parse_cycles(args.alpha or "", g.n, cfg.one_based),
            _parse_cycles(args.beta or "", g.n, cfg.one_based),
        )
        if args.u is None or args.v is None:
            raise UsageError("--u and --v are required with --g")
        off = 1 if cfg.one_based else 0
        u, v = args.u - off, args.v - off
    g2, h2, p2 = substitute(g, h, pair, u, v)
    print(f"g: {_fmt_graph(g2, cfg)}", file=out)
    print(f"h: {_fmt_graph(h2, cfg)}", file=out)
    print(f"pair: {_fmt_pair(p2, cfg)}", file=out)
    return EXIT_OK


def _cmd_census(args, cfg: CliConfig, out) -> int:
    records = census_cousins(
        ingest(args.file, strict=cfg.strict_parse, numbered=True),
        connected_only=not args.include_disconnected,
        workers=cfg.workers,
    )
    verdicts = [verify_conjecture(r) for r in records]
    if args.catalog:
        write_catalog(records, args.catalog, verdicts)
    if cfg.output_format == "catalog-lines":
        from .census import _record_line

        for r, v in zip(records, verdicts):
            print(_record_line(r, v), file=out)
    else:
        print(report(records, verdicts), end="", file=out)
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"{name}={raw!r} is not an integer") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--element-bound", type=int, default=None,
                        help=f"largest group listed element by element (env {ENV_ELEMENT_BOUND})")
    common.add_argument("--workers", type=int, default=None,
                        help=f"census worker processes, 0 = one per CPU (env {ENV_WORKERS})")
    common.add_argument("--one-based", action="store_true", help="print and read vertex labels from 1")
    common.add_argument("--lenient", action="store_true", help="skip unparsable graph6 lines with a warning")
    common.add_argument("--format", choices=("text", "catalog-lines"), default="text")

    p = _Parser(prog="tfcousins", description="TF-isomorphism and double-cover toolkit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("graph", nargs="?", help="graph6 string or file")
        sp.add_argument("--named", help="named graph, e.g. petersen, cycle6, hypercube5")
        sp.set_defaults(func=fn)
        return sp

    graph_cmd("cdc", _cmd_cdc, "print the canonical double cover in graph6")
    graph_cmd("adc", _cmd_adc, "print the alternating double cover as an arc list")
    graph_cmd("unstable", _cmd_unstable, "instability index and witness")

    sp = sub.add_parser("tf-test", parents=[common], help="classify two graphs")
    sp.add_argument("g", nargs="?")
    sp.add_argument("h", nargs="?")
    sp.add_argument("--named-g")
    sp.add_argument("--named-h")
    sp.set_defaults(func=_cmd_tf_test)

    sp = graph_cmd("fold-census", _cmd_fold_census, "distinct folds of a cover")
    sp.add_argument("--cover", action="store_true", help="treat the input itself as the cover")
    sp.add_argument("--as-cover-of-two-copies", action="store_true",
                    help="cover of a bipartite graph, guides restricted to polarities of one copy")
    sp.add_argument("--mode", choices=("auto", "exhaustive", "bipartite"), default="auto")
    sp.add_argument("--include-loops", action="store_true")

    sp = sub.add_parser("claw", parents=[common], help="claw graph and its companion")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, default=3)
    sp.add_argument("--companion", action="store_true")
    sp.add_argument("--tf-test", action="store_true")
    sp.set_defaults(func=_cmd_claw)

    sp = sub.add_parser("seed", parents=[common], help="seed pair with extensions")
    sp.add_argument("--k", type=int, default=3)
    sp.add_argument("--entangled-edges", type=int, default=0)
    sp.add_argument("--split-pairs", type=int, default=0)
    sp.add_argument("--pins", type=int, default=0)
    sp.set_defaults(func=_cmd_seed)

    sp = sub.add_parser("substitute", parents=[common],
                        help="odd-circuit substitution (default: the K_{2,3} example)")
    sp.add_argument("--g")
    sp.add_argument("--h")
    sp.add_argument("--alpha")
    sp.add_argument("--beta")
    sp.add_argument("--u", type=int)
    sp.add_argument("--v", type=int)
    sp.set_defaults(func=_cmd_substitute)

    sp = sub.add_parser("census", parents=[common], help="TF-cousin census of a graph6 file")
    sp.add_argument("file")
    sp.add_argument("--catalog", help="write newline-delimited records here")
    sp.add_argument("--include-disconnected", action="store_true")
    sp.set_defaults(func=_cmd_census)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        bound = args.element_bound if args.element_bound is not None else _env_int(ENV_ELEMENT_BOUND, 10**6)
        workers = args.workers if args.workers is not None else _env_int(ENV_WORKERS, 1)
        cfg = CliConfig(bound, not args.lenient, workers, args.format, args.one_based)
        return args.func(args, cfg, out)
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (TfCousinsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
