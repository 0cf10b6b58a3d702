"""``borsukoid`` command line."""

from __future__ import annotations

import argparse
import json
import sys

from . import io as bio
from .coloring import borsuk_number, chromatic_number, default_budget_ms
from .errors import BorsukoidError, BudgetExhausted
from .families import (
    catalan,
    catalan_minus,
    complete_graph,
    cycle_graph,
    fano,
    figure_graph,
    graphic,
    lattice_path,
    non_pappus,
    path_graph,
    theta,
    triangle_with_loop,
    uniform,
    v_line,
)
from .graphs import classical_kneser, kneser_graph, schrijver_graph, to_json
from .graphs import from_edges as graph_from_edges
from .matroid import Matroid, coloops, connected_components, diameter, loops
from . import verify as V

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_INCONCLUSIVE = 0, 1, 2, 3

SUBCOMMANDS = ("gen", "borsuk", "chroma", "props", "verify", "search", "product")

GRAMMAR = (
    "borsukoid <subcommand> [--in PATH] [--out PATH] [--family NAME] [--n INT] [--r INT] [--m INT] "
    "[--h INT] [--budget-ms INT=60000] [--seed INT=0] [--deterministic BOOL=true] [--claim ID]\n"
    f"subcommands: {' | '.join(SUBCOMMANDS)}"
)

# family -> (required params, builder); builders return a Matroid or a graph doc
MATROID_FAMILIES = {
    "uniform": (("r", "n"), lambda a: uniform(a.r, a.n)),
    "theta": (("n",), lambda a: theta(a.n)),
    "fano": ((), lambda a: fano()),
    "non-pappus": ((), lambda a: non_pappus()),
    "v-line": (("h",), lambda a: v_line(a.h)),
    "catalan": (("r", "m"), lambda a: catalan(a.r, a.m)),
    "catalan-minus": (("r", "m"), lambda a: catalan_minus(a.r, a.m)),
    "triangle-loop": ((), lambda a: triangle_with_loop()),
    "graphic-complete": (("n",), lambda a: graphic(complete_graph(a.n), f"M(K{a.n})")),
    "graphic-cycle": (("n",), lambda a: graphic(cycle_graph(a.n), f"M(C{a.n})")),
    "graphic-figure": ((), lambda a: graphic(figure_graph(), "M(G)")),
}
GRAPH_FAMILIES = {
    "kneser": (("n", "r"), lambda a: classical_kneser(a.n, a.r)),
    "schrijver": (("n", "r"), lambda a: schrijver_graph(a.n, a.r)),
    "complete-graph": (("n",), lambda a: complete_graph(a.n)),
    "cycle-graph": (("n",), lambda a: cycle_graph(a.n)),
    "path-graph": (("n",), lambda a: path_graph(a.n)),
    "figure-graph": ((), lambda a: figure_graph()),
}
FILE_FAMILIES = ("lattice-path", "graphic")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("true", "1", "yes", "on"):
        return True
    if t in ("false", "0", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="borsukoid", usage=GRAMMAR, add_help=True)
    p.add_argument("subcommand", choices=SUBCOMMANDS)
    p.add_argument("--in", dest="inputs", action="append", default=[], metavar="PATH")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--family")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--count", type=int, default=1000, help="sample size for `search --family random`")
    p.add_argument("--budget-ms", type=_positive)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--deterministic", type=_bool, default=True)
    p.add_argument("--claim")
    return p


# ---------------------------------------------------------------------------
# helpers


def _emit(args, text: str):
    if args.out:
        bio.write_text(args.out, text)
    else:
        sys.stdout.write(text)


def _meta(args, **extra) -> dict:
    out = dict(extra)
    out["seed"] = args.seed
    return out


def _one_input(args):
    if len(args.inputs) != 1:
        raise UsageError(f"{args.subcommand} needs exactly one --in")
    return bio.read_json(args.inputs[0])


def _load_matroid(path) -> Matroid:
    return bio.matroid_from_json(bio.read_json(path))


def _require(args, names, family):
    missing = [k for k in names if getattr(args, k) is None]
    if missing:
        raise UsageError(f"family {family!r} needs " + ", ".join(f"--{k}" for k in missing))


def _budget(args) -> int:
    return args.budget_ms if args.budget_ms is not None else default_budget_ms()


def _labels(M: Matroid, mask: int) -> list:
    return M.label_set(mask)


# ---------------------------------------------------------------------------
# subcommands


def cmd_gen(args) -> int:
    fam = args.family
    if fam is None:
        raise UsageError("gen needs --family; choose from " + ", ".join(sorted(MATROID_FAMILIES) + sorted(GRAPH_FAMILIES) + list(FILE_FAMILIES)))
    params = {k: getattr(args, k) for k in ("n", "r", "m", "h") if getattr(args, k) is not None}
    if fam in MATROID_FAMILIES:
        need, build = MATROID_FAMILIES[fam]
        _require(args, need, fam)
        doc = bio.matroid_to_json(build(args))
    elif fam in GRAPH_FAMILIES:
        need, build = GRAPH_FAMILIES[fam]
        _require(args, need, fam)
        obj = build(args)
        doc = to_json(obj) if not hasattr(obj, "vertex_labels") else bio.graph_to_json(obj)
    elif fam == "lattice-path":
        spec = bio.path_spec_from_json(_one_input(args))
        doc = bio.matroid_to_json(lattice_path(spec))
    elif fam == "graphic":
        doc = bio.matroid_to_json(graphic(bio.graph_from_json(_one_input(args))))
    else:
        raise UsageError(f"unknown family {fam!r}")
    doc["meta"] = _meta(args, family=fam, params=params)
    _emit(args, bio.dumps(doc))
    return EXIT_OK


def cmd_borsuk(args) -> int:
    M = bio.matroid_from_json(_one_input(args))
    res = borsuk_number(M, _budget(args))
    doc = res.to_json()
    if res.certificate is not None:
        doc["certificate"] = res.certificate.to_json()
    if res.lower_bound_witness is not None:
        doc["lower_bound_witness"] = [_labels(M, M.bases[i]) for i in res.lower_bound_witness]
    doc["meta"] = _meta(args, matroid=M.name, bases=len(M.bases))
    _emit(args, bio.dumps(doc))
    return EXIT_OK if res.exact else EXIT_INCONCLUSIVE


def _graph_from_doc(doc):
    if bio.is_matroid_doc(doc):
        M = bio.matroid_from_json(doc)
        return kneser_graph(M), M
    G = bio.graph_from_json(doc)
    return graph_from_edges(G.vertex_count, G.edges), None


def cmd_chroma(args) -> int:
    G, M = _graph_from_doc(_one_input(args))
    res = chromatic_number(G, _budget(args))
    doc = {"exact": res.exact}
    if res.exact:
        doc["chi"] = res.upper
    doc["lower"] = res.lower
    doc["upper"] = res.upper
    doc["coloring"] = list(res.coloring.assignment)
    doc["clique"] = list(res.clique)
    if M is not None:
        doc["vertices"] = [_labels(M, b) for b in M.bases]
    doc["meta"] = _meta(args, graph=G.name, vertices=G.vertex_count, edges=G.edge_count)
    _emit(args, bio.dumps(doc))
    return EXIT_OK if res.exact else EXIT_INCONCLUSIVE


def cmd_props(args) -> int:
    M = bio.matroid_from_json(_one_input(args))
    comps = connected_components(M)
    doc = {
        "loops": _labels(M, loops(M)),
        "coloops": _labels(M, coloops(M)),
        "rank": M.rank,
        "components": [_labels(M, p) for p in comps.parts],
        "bip": V.has_bip(M),
        "strong_bip": V.has_strong_bip(M),
        "two_disjoint_bases": V.has_two_disjoint_bases(M),
        "diameter": diameter(M),
        "meta": _meta(args, matroid=M.name, elements=M.n, bases=len(M.bases)),
    }
    _emit(args, bio.dumps(doc))
    return EXIT_OK


def _report_lines(reports, args) -> str:
    timing = not args.deterministic
    return "".join(json.dumps(r.to_json(timing), ensure_ascii=False) + "\n" for r in reports)


def _summary_table(title, counts, extra=()) -> str:
    rows = [(s, counts.get(s, 0)) for s in V.STATUSES] + list(extra)
    width = max(len(k) for k, _ in rows)
    lines = [title] + [f"  {k.ljust(width)}  {v}" for k, v in rows]
    return "\n".join(lines) + "\n"


def _status_exit(counts) -> int:
    if counts.get(V.FAIL):
        return EXIT_FAIL
    if counts.get(V.INCONCLUSIVE):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _write_reports(args, reports, summary):
    body = _report_lines(reports, args)
    if args.out:
        bio.write_text(args.out, body)
        sys.stdout.write(summary)
    else:
        sys.stdout.write(body)
        sys.stderr.write(summary)


def cmd_verify(args) -> int:
    budget = _budget(args)
    if args.claim:
        if args.inputs:
            instances = [tuple(_load_matroid(p) for p in args.inputs)]
            reports = V.sort_reports(V.check_claim(args.claim, *inst, budget_ms=budget) for inst in instances)
        else:
            reports = V.run_claim(args.claim, budget)
    else:
        reports = V.run_suite(budget)
    counts = V.summarize(reports)
    _write_reports(args, reports, _summary_table(f"verify ({len(reports)} reports, seed {args.seed})", counts))
    return _status_exit(counts)


def _search_source(args) -> V.Source:
    fam = args.family or "catalog"
    if fam == "catalog":
        return V.Source("catalog")
    if fam == "enumeration":
        _require(args, ("n", "r"), fam)
        return V.Source("enumeration", (args.n, args.r))
    if fam == "random":
        n = args.n if args.n is not None else 6
        r = args.r if args.r is not None else 3
        return V.Source("random", (args.count, args.seed, n, r))
    raise UsageError("search --family is catalog, enumeration or random")


def cmd_search(args) -> int:
    src = _search_source(args)
    reports = V.search_counterexamples(src, _budget(args))
    counts = V.summarize(reports)
    extra = [("violators", len(V.violators(reports))), ("interesting", len(V.interesting(reports)))]
    title = f"search {src} ({len(reports)} matroids with two bases, seed {args.seed})"
    _write_reports(args, reports, _summary_table(title, counts, extra))
    return _status_exit(counts)


def cmd_product(args) -> int:
    if len(args.inputs) != 2:
        raise UsageError("product needs two --in matroid files")
    M, N = (_load_matroid(p) for p in args.inputs)
    budget = _budget(args)
    reports = [V.check_hedetniemi_instance(M, N, budget), V.check_claim("eq:kg-product", M, N, budget_ms=budget)]
    counts = V.summarize(reports)
    _write_reports(args, reports, _summary_table(f"product (seed {args.seed})", counts))
    return _status_exit(counts)


COMMANDS = {
    "gen": cmd_gen,
    "borsuk": cmd_borsuk,
    "chroma": cmd_chroma,
    "props": cmd_props,
    "verify": cmd_verify,
    "search": cmd_search,
    "product": cmd_product,
}


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.subcommand](args)
    except UsageError as exc:
        sys.stderr.write(f"usage: {GRAMMAR}\nerror: {exc}\n")
        return EXIT_USAGE
    except bio.FormatError as exc:
        sys.stderr.write(f"error: malformed input at {exc}\n")
        return EXIT_USAGE
    except (OSError, BorsukoidError, KeyError) as exc:
        if isinstance(exc, BudgetExhausted):
            sys.stderr.write(f"inconclusive: {exc}\n")
            return EXIT_INCONCLUSIVE
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
