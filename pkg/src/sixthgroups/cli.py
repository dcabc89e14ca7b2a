"""Command-line surface.

Exit codes: 0 computed, 1 negative answer for yes/no queries, 2 usage or
parse error, 3 budget exceeded.  Reports are line oriented `key: value`.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import coding, graphs, randomgraph, reduction
from .presentation import (
    DEFAULT_DEHN_BUDGET,
    INFINITE,
    DehnBudgetError,
    check_c16,
    max_piece_length,
)
from .words import WordFormatError, format_word, parse_word

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class Config:
    max_code: int = 500
    conj_bound: int | None = None
    dehn_budget: int = DEFAULT_DEHN_BUDGET
    max_n: int = 8

    def __post_init__(self):
        if self.max_code <= 0 or self.dehn_budget <= 0 or self.max_n <= 0:
            raise ValueError("config values must be positive")


def _load_graph(path: str, cfg: Config) -> graphs.Graph:
    g = graphs.load_graph(path)
    if g.n > cfg.max_n:
        raise graphs.GraphFormatError(
            f"graph has {g.n} vertices, above --max-n {cfg.max_n}"
        )
    return g


def _cmd_relators(args, cfg, out):
    g = _load_graph(args.graph, cfg)
    pres = reduction.relators_from_graph(g)
    for seed in reduction.relator_seeds(g):
        out(f"seed: {format_word(seed)}")
    out(f"symmetrized-size: {len(pres.relators.relators)}")
    return EXIT_OK


def _cmd_check_c16(args, cfg, out):
    g = _load_graph(args.graph, cfg)
    rel = reduction.relators_from_graph(g).relators
    ok = check_c16(rel)
    out(f"c16: {'true' if ok else 'false'}")
    out(f"max-piece-length: {max_piece_length(rel)}")
    return EXIT_OK if ok else EXIT_NO


def _cmd_wp(args, cfg, out):
    g = _load_graph(args.graph, cfg)
    pres = reduction.relators_from_graph(g)
    w = parse_word(args.word)
    nf = pres.dehn_reduce(w, cfg.dehn_budget)
    out(f"identity: {'true' if not nf else 'false'}")
    out(f"normal-form: {format_word(nf)}")
    return EXIT_OK


def _cmd_order(args, cfg, out):
    g = _load_graph(args.graph, cfg)
    pres = reduction.relators_from_graph(g)
    n = pres.order(parse_word(args.word), cfg.dehn_budget)
    out(f"order: {'INFINITE' if n == INFINITE else int(n)}")
    return EXIT_OK


def _cmd_code(args, cfg, out):
    g = _load_graph(args.graph, cfg)
    ct = coding.CodingTable(g, dehn_budget=cfg.dehn_budget)
    for c, w in ct.enumerate_to(cfg.max_code):
        out(f"{c}: {format_word(w)}")
    return EXIT_OK


def _cmd_star_table(args, cfg, out):
    g = _load_graph(args.graph, cfg)
    ct = coding.CodingTable(g, dehn_budget=cfg.dehn_budget)
    codes = [c for c, _ in ct.enumerate_to(cfg.max_code)]
    out("n,m,star")
    for n in codes:
        for m in codes:
            out(f"{n},{m},{ct.star(n, m)}")
    return EXIT_OK


def _cmd_aut_extend(args, cfg, out):
    g = _load_graph(args.graph, cfg)
    with open(args.partialmap, encoding="utf-8") as fh:
        s = coding.parse_partial_map(fh.read())
    ct = coding.CodingTable(g, dehn_budget=cfg.dehn_budget)
    bound = cfg.conj_bound
    if bound is None:
        bound = coding.default_star_conj_bound(ct, s)
    ok, witness = coding.sigma_ns_nonempty(ct, s, bound)
    out(f"extends: {'true' if ok else 'false'}")
    out(f"conj-bound: {bound}")
    if witness is not None:
        out(f"witness-r: {dict(witness.r)}")
        out(f"witness-k: {witness.k}")
        out(f"witness-k-inverse: {witness.k_inv}")
        out(f"witness-l: {witness.l}")
    if args.oracle:
        oracle = coding.oracle_aut_extends(ct, s, bound)
        out(f"oracle: {'true' if oracle else 'false'}")
        if oracle != ok:
            out("disagreement: checker and oracle differ")
            raise AssertionError("checker/oracle disagreement")
    return EXIT_OK if ok else EXIT_NO


def _cmd_embed_graph(args, cfg, out):
    t = _load_graph(args.graph_t, cfg)
    s = _load_graph(args.graph_s, cfg)
    f = graphs.induced_embeds(t, s)
    out(f"embeds: {'true' if f is not None else 'false'}")
    if f is not None:
        for i, v in enumerate(f):
            out(f"{i}: {v}")
    return EXIT_OK if f is not None else EXIT_NO


def _cmd_graph_iso(args, cfg, out):
    t = _load_graph(args.graph_t, cfg)
    s = _load_graph(args.graph_s, cfg)
    f = graphs.graph_iso(t, s)
    out(f"isomorphic: {'true' if f is not None else 'false'}")
    if f is not None:
        for i, v in enumerate(f):
            out(f"{i}: {v}")
    return EXIT_OK if f is not None else EXIT_NO


def _cmd_hom_check(args, cfg, out):
    t = _load_graph(args.graph_t, cfg)
    s = _load_graph(args.graph_s, cfg)
    mapping = [None] * t.n
    with open(args.mapfile, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise ValueError(f"mapfile line {lineno}: expected '<i> <j>'")
            i, j = int(parts[0]), int(parts[1])
            if not 0 <= i < t.n or mapping[i] is not None:
                raise ValueError(f"mapfile line {lineno}: bad source vertex {i}")
            mapping[i] = j
    if any(v is None for v in mapping):
        raise ValueError("mapfile does not cover every vertex")
    gm = reduction.induced_hom(t, s, mapping)
    p_t = reduction.relators_from_graph(t)
    p_s = reduction.relators_from_graph(s)
    ok = reduction.is_homomorphism(p_t, p_s, gm, cfg.dehn_budget)
    out(f"homomorphism: {'true' if ok else 'false'}")
    if ok:
        inj = reduction.check_injective_up_to(p_t, p_s, gm, 3, cfg.dehn_budget)
        out(f"injective-up-to-3: {'true' if inj else 'false'}")
    return EXIT_OK if ok else EXIT_NO


def _cmd_rado_adj(args, cfg, out):
    ok = randomgraph.adjacent(args.m, args.n)
    out(f"adjacent: {'true' if ok else 'false'}")
    return EXIT_OK if ok else EXIT_NO


def _cmd_rado_embed(args, cfg, out):
    g = _load_graph(args.graph, cfg)
    images = randomgraph.embed_graph(g)
    for v in range(g.n):
        out(f"{v} {images[v]}")
    return EXIT_OK


def _cmd_rigid(args, cfg, out):
    g = _load_graph(args.graph, cfg)
    ok = graphs.is_rigid(g)
    out(f"rigid: {'true' if ok else 'false'}")
    return EXIT_OK if ok else EXIT_NO


def _cmd_tree(args, cfg, out):
    g = _load_graph(args.graph, cfg)
    ok = graphs.is_combinatorial_tree(g)
    out(f"tree: {'true' if ok else 'false'}")
    return EXIT_OK if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sixthgroups",
        description="small-cancellation graph-group computations",
    )
    def add_flags(p, top):
        # flags are accepted before or after the subcommand; subparser
        # defaults are suppressed so they never clobber a value already
        # parsed by the main parser
        def default(value):
            return value if top else argparse.SUPPRESS

        p.add_argument("--max-code", type=int, default=default(500))
        p.add_argument("--conj-bound", type=int, default=default(None))
        p.add_argument(
            "--dehn-budget", type=int, default=default(DEFAULT_DEHN_BUDGET)
        )
        p.add_argument("--max-n", type=int, default=default(8))

    add_flags(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, fn, *specs):
        p = sub.add_parser(name)
        add_flags(p, top=False)
        for spec in specs:
            p.add_argument(**spec)
        p.set_defaults(fn=fn)
        return p

    g = dict(dest="graph")
    cmd("relators", _cmd_relators, g)
    cmd("check-c16", _cmd_check_c16, g)
    cmd("wp", _cmd_wp, g, dict(dest="word"))
    cmd("order", _cmd_order, g, dict(dest="word"))
    cmd("code", _cmd_code, g)
    cmd("star-table", _cmd_star_table, g)
    p_aut = cmd("aut-extend", _cmd_aut_extend, g, dict(dest="partialmap"))
    p_aut.add_argument("--oracle", action="store_true")
    cmd("embed-graph", _cmd_embed_graph, dict(dest="graph_t"), dict(dest="graph_s"))
    cmd("graph-iso", _cmd_graph_iso, dict(dest="graph_t"), dict(dest="graph_s"))
    cmd(
        "hom-check",
        _cmd_hom_check,
        dict(dest="graph_t"),
        dict(dest="graph_s"),
        dict(dest="mapfile"),
    )
    cmd("rado-adj", _cmd_rado_adj, dict(dest="m", type=int), dict(dest="n", type=int))
    cmd("rado-embed", _cmd_rado_embed, g)
    cmd("rigid", _cmd_rigid, g)
    cmd("tree", _cmd_tree, g)
    return parser


def main(argv=None, stdout=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout

    def out(line):
        print(line, file=stdout)

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = Config(
            max_code=args.max_code,
            conj_bound=args.conj_bound,
            dehn_budget=args.dehn_budget,
            max_n=args.max_n,
        )
        return args.fn(args, cfg, out)
    except (
        WordFormatError,
        graphs.GraphFormatError,
        FileNotFoundError,
        ValueError,
    ) as exc:
        out(f"error: {exc}")
        return EXIT_USAGE
    except (DehnBudgetError, coding.CodingBudgetError, randomgraph.PrimeBudgetError) as exc:
        out(f"budget-error: {exc}")
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
