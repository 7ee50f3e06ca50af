"""Command-line front end.

Exit codes: 0 on success, 1 when a decision question answers negatively
(not a module, not prime, no cut, ...), 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from . import io as gio
from .abmodule import closure_naive, closure_refined, is_ab_module, splitter_set
from .bipartite import maximal_one_sided_modules
from .decomposition import (
    decomposition_tree,
    is_ab_cograph,
    matching_cut,
    tree_to_dot,
    tree_to_json_dict,
)
from .enumeration import all_modules_oracle, covering, is_brittle, minimal_nontrivial_modules, primality
from .graph import AbParams, VertexSet
from .ksplitter import k_splitter_report


def _add_common(sub, *, needs_file=True, needs_set=False):
    sub.add_argument("--alpha", type=int, default=0)
    sub.add_argument("--beta", type=int, default=0)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--json", action="store_true", help="emit a JSON result document")
    sub.add_argument("--timing", action="store_true", help="include wall time in JSON output")
    if needs_set:
        sub.add_argument("--set", required=True, help="comma-separated vertex ids or labels")
    if needs_file:
        sub.add_argument("file", help="input graph file ('-' for stdin)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="abmod", description=__doc__)
    sp = ap.add_subparsers(dest="command", required=True)

    _add_common(sp.add_parser("check", help="test whether a set is a module"), needs_set=True)
    _add_common(sp.add_parser("splitters", help="classify the outside of a set"), needs_set=True)
    closure = sp.add_parser("closure", help="minimal module containing a set")
    closure.add_argument("--naive", action="store_true", help="use the round-based algorithm")
    _add_common(closure, needs_set=True)
    minimal = sp.add_parser("minimal", help="all minimal non-trivial modules")
    minimal.add_argument("--driver", choices=("batched", "tuple"), default="batched")
    minimal.add_argument("--jobs", type=int, default=1, help="worker threads for the seed sweep")
    _add_common(minimal)
    _add_common(sp.add_parser("cover", help="module covering of the vertex set"))
    _add_common(sp.add_parser("prime", help="test for only trivial modules"))
    brittle = sp.add_parser("brittle", help="test whether every subset is a module")
    brittle.add_argument("--mode", choices=("exact", "fast"), default="exact")
    brittle.add_argument("--max-n", type=int, default=None)
    _add_common(brittle)
    tree = sp.add_parser("tree", help="decomposition tree")
    tree.add_argument("--strategy", choices=("exact", "grow"), default="exact")
    tree.add_argument("--dot", action="store_true", help="emit DOT instead of JSON/text")
    tree.add_argument("--max-n", type=int, default=None, help="cap for the exact strategy")
    _add_common(tree)
    cograph = sp.add_parser("cograph", help="total decomposability test")
    cograph.add_argument("--max-n", type=int, default=None)
    _add_common(cograph)
    mc = sp.add_parser("matching-cut", help="find a matching cut")
    mc.add_argument("--max-n", type=int, default=None)
    _add_common(mc)
    bm = sp.add_parser("bipartite-max", help="maximal modules inside the X side")
    bm.add_argument("--side-file", default=None, help="file with X side ids (overrides the s line)")
    bm.add_argument("--jobs", type=int, default=1, help="worker threads over twin classes")
    _add_common(bm)
    ks = sp.add_parser("ksplitter", help="classical splitter count report")
    ks.add_argument("-k", type=int, required=True, dest="k")
    _add_common(ks, needs_set=True)

    gen = sp.add_parser("gen", help="graph generators")
    gsp = gen.add_subparsers(dest="generator", required=True)
    gr = gsp.add_parser("random")
    gr.add_argument("--n", type=int, required=True)
    gr.add_argument("--p", type=float, required=True)
    gr.add_argument("--seed", type=int, default=0)
    gr.add_argument("-o", "--output", default=None)
    gp = gsp.add_parser("pmg4")
    gp.add_argument("--depth", type=int, required=True)
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--seed-graphs", default=None, help="comma list from: " + ",".join(sorted(gio.PMG4_SEEDS)))
    gp.add_argument("-o", "--output", default=None)

    oracle = sp.add_parser("oracle", help="exhaustive verification helpers")
    osp = oracle.add_subparsers(dest="oracle_command", required=True)
    om = osp.add_parser("all-modules")
    om.add_argument("--max-n", type=int, default=None)
    _add_common(om)
    return ap


def _read_document(path: str) -> gio.GraphDocument:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return gio.parse_graph(text)


def _parse_set(doc: gio.GraphDocument, spec: str) -> VertexSet:
    by_label = {lab: v for v, lab in doc.labels.items()}
    ids = []
    for tok in spec.replace(",", " ").split():
        if tok in by_label:
            ids.append(by_label[tok])
        else:
            try:
                ids.append(int(tok))
            except ValueError:
                raise ValueError(f"unknown vertex {tok!r}") from None
    return VertexSet.from_ids(doc.graph.n, ids)


def _emit(args, command, payload, *, human: str, algorithm=None, strategy=None, wall_ms=None):
    if getattr(args, "json", False):
        doc = gio.result_document(
            command,
            payload,
            alpha=getattr(args, "alpha", None),
            beta=getattr(args, "beta", None),
            algorithm=algorithm,
            strategy=strategy,
            seed=getattr(args, "seed", None),
            wall_ms=wall_ms if getattr(args, "timing", False) else None,
        )
        print(json.dumps(doc, sort_keys=False))
    else:
        print(human)


def _names(doc: gio.GraphDocument):
    return doc.labels if doc.labels else None


def _fmt_set(s: VertexSet, doc) -> str:
    labels = _names(doc)
    if labels:
        return "{" + ",".join(labels.get(v, str(v)) for v in s) + "}"
    return "{" + ",".join(map(str, s)) + "}"


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:  # noqa: C901  (one arm per subcommand)
    cmd = args.command
    start = time.perf_counter()

    if cmd == "gen":
        if args.generator == "random":
            g = gio.gen_random(args.n, args.p, args.seed)
        else:
            seeds = args.seed_graphs.split(",") if args.seed_graphs else None
            g = gio.gen_pmg4(args.depth, args.seed, seeds)
        text = gio.serialize_graph(gio.GraphDocument(g))
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0

    doc = _read_document(args.file)
    g = doc.graph
    p = AbParams(getattr(args, "alpha", 0), getattr(args, "beta", 0))
    p.check_for(g.n)
    if cmd in ("minimal", "cover", "prime") and p.alpha + p.beta > 3:
        print(
            f"warning: enumeration sweeps all {p.alpha + p.beta + 2}-vertex seeds; "
            f"budgets this large scale poorly",
            file=sys.stderr,
        )
    wall = lambda: (time.perf_counter() - start) * 1000.0  # noqa: E731

    if cmd == "check":
        s = _parse_set(doc, args.set)
        ok = is_ab_module(g, s, p)
        _emit(args, cmd, ok, human="true" if ok else "false", wall_ms=wall())
        return 0 if ok else 1

    if cmd == "splitters":
        s = _parse_set(doc, args.set)
        rep = splitter_set(g, s, p)
        payload = {
            "alpha_neighbours": gio.set_payload(rep.n_alpha, _names(doc)),
            "beta_non_neighbours": gio.set_payload(rep.n_bar_beta, _names(doc)),
            "splitters": gio.set_payload(rep.splitters, _names(doc)),
            "counts": {str(x): c for x, c in sorted(rep.counts.items())},
        }
        human = (
            f"alpha-neighbours {_fmt_set(rep.n_alpha, doc)}  "
            f"beta-non-neighbours {_fmt_set(rep.n_bar_beta, doc)}  "
            f"splitters {_fmt_set(rep.splitters, doc)}"
        )
        _emit(args, cmd, payload, human=human, wall_ms=wall())
        return 0

    if cmd == "closure":
        s = _parse_set(doc, args.set)
        algorithm = "naive" if args.naive else "refined"
        trace = (closure_naive if args.naive else closure_refined)(g, s, p)
        _emit(
            args,
            cmd,
            gio.set_payload(trace.result, _names(doc)),
            human=_fmt_set(trace.result, doc),
            algorithm=algorithm,
            wall_ms=wall(),
        )
        return 0

    if cmd == "minimal":
        fam = minimal_nontrivial_modules(g, p, driver=args.driver, jobs=args.jobs)
        _emit(
            args,
            cmd,
            gio.family_payload(fam.members, _names(doc)),
            human="\n".join(_fmt_set(m, doc) for m in fam.members) or "(none)",
            algorithm=args.driver,
            wall_ms=wall(),
        )
        return 0

    if cmd == "cover":
        fam = covering(g, p)
        _emit(
            args,
            cmd,
            gio.family_payload(fam.members, _names(doc)),
            human="\n".join(_fmt_set(m, doc) for m in fam.members),
            wall_ms=wall(),
        )
        return 0

    if cmd == "prime":
        rep = primality(g, p)
        word = "prime" if rep.prime else "not prime"
        if rep.degenerate:
            word += " (degenerate)"
        _emit(args, cmd, {"prime": rep.prime, "degenerate": rep.degenerate}, human=word, wall_ms=wall())
        return 0 if rep.prime else 1

    if cmd == "brittle":
        verdict = is_brittle(g, p, max_n=args.max_n, mode=args.mode)
        human = {True: "brittle", False: "not brittle", None: "undetermined"}[verdict]
        _emit(args, cmd, verdict, human=human, algorithm=args.mode, wall_ms=wall())
        return 0 if verdict else 1

    if cmd == "tree":
        node = decomposition_tree(g, p, strategy=args.strategy, max_n=args.max_n)
        if args.dot:
            sys.stdout.write(tree_to_dot(node, _names(doc)))
            return 0
        payload = tree_to_json_dict(node, _names(doc))
        _emit(
            args,
            cmd,
            payload,
            human=json.dumps(payload, indent=2),
            strategy=args.strategy,
            wall_ms=wall(),
        )
        return 0

    if cmd == "cograph":
        res = is_ab_cograph(g, p, max_n=args.max_n)
        payload = {
            "cograph": res.is_cograph,
            "cotree": tree_to_json_dict(res.cotree, _names(doc)) if res.cotree else None,
        }
        _emit(args, cmd, payload, human="cograph" if res else "not a cograph", wall_ms=wall())
        return 0 if res.is_cograph else 1

    if cmd == "matching-cut":
        cut = matching_cut(g, max_n=args.max_n)
        if cut is None:
            _emit(args, cmd, None, human="none", wall_ms=wall())
            return 1
        payload = {
            "side_a": gio.set_payload(cut.side_a, _names(doc)),
            "side_b": gio.set_payload(cut.side_b, _names(doc)),
            "cut_edges": [list(e) for e in cut.cut_edges],
        }
        human = f"{_fmt_set(cut.side_a, doc)} | {_fmt_set(cut.side_b, doc)}  cut={len(cut.cut_edges)} edges"
        _emit(args, cmd, payload, human=human, wall_ms=wall())
        return 0

    if cmd == "bipartite-max":
        if args.side_file:
            with open(args.side_file, "r", encoding="utf-8") as fh:
                ids = [int(t) for t in fh.read().replace(",", " ").split()]
            doc.x_side = VertexSet.from_ids(g.n, ids)
        bg = doc.bipartite()
        fam = maximal_one_sided_modules(bg, p, jobs=args.jobs)
        _emit(
            args,
            cmd,
            gio.family_payload(fam.maximal_members, _names(doc)),
            human="\n".join(_fmt_set(m, doc) for m in fam.maximal_members),
            wall_ms=wall(),
        )
        return 0

    if cmd == "ksplitter":
        s = _parse_set(doc, args.set)
        rep = k_splitter_report(g, s, args.k)
        payload = {
            "splitters": gio.set_payload(rep.classical_splitters, _names(doc)),
            "k": rep.k,
            "is_k_module": rep.is_k_module,
        }
        human = (
            f"splitters {_fmt_set(rep.classical_splitters, doc)}  "
            f"{'within' if rep.is_k_module else 'over'} budget k={rep.k}"
        )
        _emit(args, cmd, payload, human=human, wall_ms=wall())
        return 0 if rep.is_k_module else 1

    if cmd == "oracle":
        fam = all_modules_oracle(g, p, max_n=args.max_n)
        _emit(
            args,
            "oracle all-modules",
            gio.family_payload(fam.members, _names(doc)),
            human="\n".join(_fmt_set(m, doc) for m in fam.members),
            wall_ms=wall(),
        )
        return 0

    raise ValueError(f"unhandled command {cmd!r}")


if __name__ == "__main__":
    sys.exit(main())
