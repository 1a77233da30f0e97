"""Command-line surface: corpus management and verification campaigns.

Subcommands:

  gen        enumerate 5-Ore isomorphism classes into the corpus
  add        ingest a named construction or a graph file (text or graph6)
  verify     run a verification suite over every applicable corpus entry
  extend     build one critical extension and audit its inequalities
  t          packing number and witness for one graph
  potential  exact potentials for one graph
  discharge  charge ledger and closing inequalities for one graph

The corpus directory comes from --corpus, else $ORELAB_CORPUS, else
./corpus.  Exit codes: 0 all checks pass, 1 at least one FAIL row,
2 usage errors.  Output contains no timestamps; a command re-run with the
same corpus and seed produces identical bytes.
"""

from __future__ import annotations

import argparse
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import coloring as col
from . import discharge as dis
from . import ore
from . import packing
from .constructions import NAMED, named_graph
from .potential import (
    critical_extension,
    p_ky,
    potential,
    random_extension,
    verify_extension_inequalities,
    verify_main_theorem,
    verify_ore5_bounds,
)
from .corpus import Corpus, resolve_dir
from .graph_core import Graph, graph_from_graph6, graph_from_text
from .report import Report

SUITES = ("main", "ore5", "extensions", "lemma2", "discharge", "all")


# ---------------------------------------------------------------------------
# graph sources
# ---------------------------------------------------------------------------


def _graphs_from_file(path: Path) -> list[Graph]:
    text = path.read_text(encoding="utf-8")
    stripped = text.strip()
    if not stripped:
        raise ValueError(f"{path}: empty file")
    first = stripped.splitlines()[0].split()
    if len(first) == 2 and all(tok.isdigit() for tok in first):
        return [graph_from_text(text)]
    graphs = []
    for i, line in enumerate(stripped.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            graphs.append(graph_from_graph6(line))
        except ValueError as exc:
            raise ValueError(f"{path}:{i}: {exc}") from None
    return graphs


def _resolve_graph(corpus: Corpus, token: str) -> Graph:
    if token in corpus:
        return corpus.load(token).graph
    if token in NAMED:
        return named_graph(token)
    path = Path(token)
    if path.is_file():
        graphs = _graphs_from_file(path)
        if len(graphs) != 1:
            raise ValueError(f"{path}: expected exactly one graph, found {len(graphs)}")
        return graphs[0]
    known = ", ".join(sorted(NAMED))
    raise ValueError(
        f"{token!r} is not a corpus key, a named construction ({known}), or a file"
    )


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


def _lemma2_report(G: Graph, key: str) -> Report:
    rep = Report()
    recipe = ore.is_5_ore(G)
    if recipe is None:
        return rep
    t, _ = packing.t_number(G)
    if G.n > 5:
        # packing weight grows linearly along compositions: 4T >= n + 7
        rep.add(
            "packing-lower-bound",
            key,
            4 * t >= G.n + 7,
            note=f"4t={4 * t} need={G.n + 7}",
        )
    nodes: list[tuple[int, ore.Compose]] = []

    def walk(r: ore.OreRecipe):
        if isinstance(r, ore.Compose):
            nodes.append((len(nodes), r))
            walk(r.edge_side)
            walk(r.vertex_side)

    walk(recipe)
    for idx, node in nodes:
        g = ore.ore_compose(node)
        g1 = ore.ore_compose(node.edge_side)
        g2 = ore.ore_compose(node.vertex_side)
        tg, _ = packing.t_number(g)
        t1, _ = packing.t_number(g1)
        t2, _ = packing.t_number(g2)
        rep.add(
            "compose-superadditive",
            key,
            tg >= t1 + t2 - 2,
            note=f"node={idx} t={tg} sides={t1}+{t2}",
        )
        if isinstance(node.vertex_side, ore.Leaf):
            rep.add(
                "compose-k5-bump",
                key,
                tg >= t1 + 1,
                note=f"node={idx} t={tg} edge-side={t1}",
            )
    return rep


def _extension_report(G: Graph, key: str, seed: int, record_ids: list[int]) -> Report:
    rep = Report()
    for i in record_ids:
        rng = random.Random(seed * 1_000_003 + i)
        rec = random_extension(G, rng)
        rep.add(
            "extension-shape",
            key,
            True,
            note=(
                f"record={i} core={rec.core_size}"
                f" complete={'yes' if rec.complete else 'no'}"
                f" spanning={'yes' if rec.spanning else 'no'}"
                f" empty-classes={len(rec.empty_classes)}"
            ),
        )
        rep.extend(verify_extension_inequalities(rec))
    return rep


def _entry_report(
    root: str, suite: str, key: str, budget: int, seed: int, record_ids: list[int]
) -> tuple[str, list[str], bool]:
    corpus = Corpus(Path(root))
    rep = corpus.verify_entry(key)
    G = corpus.load(key).graph
    critical = col.is_5_critical(G)
    if suite in ("main", "all") and critical:
        rep.extend(verify_main_theorem(G))
    if suite in ("ore5", "all") and critical:
        rep.extend(verify_ore5_bounds(G, budget))
    if suite in ("lemma2", "all"):
        rep.extend(_lemma2_report(G, key))
    if suite in ("discharge", "all"):
        if critical:
            rep.extend(dis.closing_inequalities(G))
        else:
            ledger = dis.run_discharge(G)
            rep.add(
                "conservation",
                key,
                sum(ledger.final84) == ledger.total84,
                note=f"transfers={len(ledger.transfers)}",
            )
    if suite in ("extensions", "all") and record_ids:
        rep.extend(_extension_report(G, key, seed, record_ids))
    return key, rep.lines(), rep.ok


def cmd_verify(args) -> int:
    corpus = Corpus(resolve_dir(args.corpus))
    keys = corpus.keys()
    if not keys:
        print(f"warning: corpus at {corpus.root} is empty; nothing to verify")
        return 0
    record_map: dict[str, list[int]] = {k: [] for k in keys}
    if args.suite in ("extensions", "all"):
        eligible = []
        for k in keys:
            inv = corpus.load(k).invariants
            if inv.get("critical5") and 6 <= inv.get("n", 0) <= args.max_extend_n:
                eligible.append(k)
        if eligible:
            for i in range(args.records):
                record_map[eligible[i % len(eligible)]].append(i)
        else:
            print("warning: no corpus entry is eligible for extension records")
    tasks = [
        (str(corpus.root), args.suite, k, args.budget, args.seed, record_map[k])
        for k in keys
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_entry_report_packed, tasks))
    else:
        results = [_entry_report(*t) for t in tasks]
    checks = 0
    failures = 0
    for _, lines, _ok in results:
        for line in lines:
            print(line)
        checks += len(lines)
        failures += sum(1 for line in lines if " FAIL" in line)
    verdict = "PASS" if failures == 0 else "FAIL"
    print(f"SUITE {args.suite} {verdict} checks={checks} failures={failures}")
    corpus.log(f"verify {args.suite} checks={checks} failures={failures}")
    return 0 if failures == 0 else 1


def _entry_report_packed(task):
    return _entry_report(*task)


# ---------------------------------------------------------------------------
# corpus-building commands
# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    corpus = Corpus(resolve_dir(args.corpus))
    count = 0
    for G, recipe in ore.enumerate_5_ore(args.max_n):
        key, added = corpus.add(G, "recipe " + ore.recipe_to_text(recipe))
        print(f"{key} n={G.n} m={G.m} {'new' if added else 'known'}")
        count += 1
    print(f"generated {count} classes up to n={args.max_n}")
    return 0


def cmd_add(args) -> int:
    corpus = Corpus(resolve_dir(args.corpus))
    if args.source in NAMED:
        graphs = [(named_graph(args.source), f"named {args.source}")]
    else:
        path = Path(args.source)
        if not path.is_file():
            known = ", ".join(sorted(NAMED))
            raise ValueError(
                f"{args.source!r} is neither a named construction ({known}) "
                "nor a readable file"
            )
        graphs = [(g, f"file {path.name}") for g in _graphs_from_file(path)]
    for G, provenance in graphs:
        key, added = corpus.add(G, provenance)
        print(f"{key} n={G.n} m={G.m} {'new' if added else 'known'}")
    return 0


# ---------------------------------------------------------------------------
# single-graph commands
# ---------------------------------------------------------------------------


def cmd_extend(args) -> int:
    corpus = Corpus(resolve_dir(args.corpus))
    entry = corpus.load(args.key)
    G = entry.graph
    try:
        R = sorted({int(tok) for tok in args.r.split(",") if tok.strip() != ""})
    except ValueError:
        raise ValueError(f"--r must be a comma-separated vertex list, got {args.r!r}")
    if any(v < 0 or v >= G.n for v in R):
        raise ValueError(f"--r contains vertices outside 0..{G.n - 1}")
    if len(R) < 5:
        raise ValueError("--r needs at least 5 vertices")
    if len(R) >= G.n:
        raise ValueError("--r must be a proper subset of the vertices")
    from .graph_core import induced_subgraph

    sub = induced_subgraph(G, R)
    colors = col.seeded_coloring(sub, 4, random.Random(args.seed))
    if colors is None:
        raise ValueError("the induced subgraph on --r is not 4-colorable")
    phi = {v: colors[i] for i, v in enumerate(R)}
    rec = critical_extension(G, R, phi)
    print(f"extend {args.key} r={','.join(map(str, R))} seed={args.seed}")
    print("phi " + " ".join(f"{v}:{phi[v]}" for v in R))
    print(f"identified n={rec.identified.n} m={rec.identified.m}")
    print(
        f"extender n={rec.extender.n} m={rec.extender.m}"
        f" core-classes={','.join(map(str, rec.core_classes))}"
        f" complete={'yes' if rec.complete else 'no'}"
        f" spanning={'yes' if rec.spanning else 'no'}"
        f" empty-classes={','.join(map(str, rec.empty_classes)) or '-'}"
    )
    print("expanded " + ",".join(map(str, sorted(rec.expanded))))
    rep = verify_extension_inequalities(rec)
    for line in rep.lines():
        print(line)
    return 0 if rep.ok else 1


def cmd_t(args) -> int:
    corpus = Corpus(resolve_dir(args.corpus))
    G = _resolve_graph(corpus, args.key)
    t, pack = packing.t_number(G)
    print(f"t={t}")
    for piece in pack.pieces:
        kind = "K4" if len(piece) == 4 else "K3"
        print(f"piece {kind} " + " ".join(map(str, piece)))
    return 0


def cmd_potential(args) -> int:
    corpus = Corpus(resolve_dir(args.corpus))
    G = _resolve_graph(corpus, args.key)
    t, _ = packing.t_number(G)
    print(f"n={G.n}")
    print(f"m={G.m}")
    print(f"t={t}")
    print(f"p_ky={p_ky(G)}")
    print(f"p={potential(G)}")
    return 0


def cmd_discharge(args) -> int:
    corpus = Corpus(resolve_dir(args.corpus))
    G = _resolve_graph(corpus, args.key)
    ledger = dis.run_discharge(G)
    sys.stdout.write(dis.ledger_dump(ledger))
    if not col.is_5_critical(G):
        print("closing inequalities skipped: graph is not 5-critical")
        return 0
    rep = dis.closing_inequalities(G)
    for line in rep.lines():
        print(line)
    return 0 if rep.ok else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orelab",
        description="exact laboratory for 5-critical graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_corpus_arg(p):
        p.add_argument("--corpus", help="corpus directory (default $ORELAB_CORPUS or ./corpus)")

    p = sub.add_parser("gen", help="enumerate 5-Ore graphs into the corpus")
    p.add_argument("--max-n", type=int, required=True, help="largest vertex count")
    add_corpus_arg(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("add", help="add a named construction or graph file")
    p.add_argument("source", help="named construction or path (text / graph6)")
    add_corpus_arg(p)
    p.set_defaults(func=cmd_add)

    p = sub.add_parser("verify", help="run a verification suite over the corpus")
    p.add_argument("suite", choices=SUITES)
    add_corpus_arg(p)
    p.add_argument("--budget", type=int, default=4096, help="subset-sweep budget")
    p.add_argument("--records", type=int, default=100, help="extension record count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p.add_argument(
        "--max-extend-n",
        type=int,
        default=13,
        help="largest graph eligible for extension records",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extend", help="critical extension of a corpus entry")
    p.add_argument("key")
    p.add_argument("--r", required=True, help="comma-separated vertex list")
    p.add_argument("--seed", type=int, default=0)
    add_corpus_arg(p)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("t", help="packing number of a graph")
    p.add_argument("key", help="corpus key, named construction, or file")
    add_corpus_arg(p)
    p.set_defaults(func=cmd_t)

    p = sub.add_parser("potential", help="exact potentials of a graph")
    p.add_argument("key", help="corpus key, named construction, or file")
    add_corpus_arg(p)
    p.set_defaults(func=cmd_potential)

    p = sub.add_parser("discharge", help="charge ledger of a graph")
    p.add_argument("key", help="corpus key, named construction, or file")
    add_corpus_arg(p)
    p.set_defaults(func=cmd_discharge)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
