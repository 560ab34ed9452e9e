"""Command-line entry point: ``bpglab <verb> ...``.

Exit codes: 0 yes/success, 1 no, 2 usage or format error, 3 unsupported
instance (solver precondition or size cap).
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from . import named, parameters, universal
from ._caps import check_cap
from .canon import enumerate_graphs
from .errors import GraphFormatError, NotBPGError, UnsupportedInstance
from .graph import Graph, local_complement, pivot, read_graph, write_graph, write_graphs
from .isi import choose_solver, isi_bruteforce, isi_linear_forest, isi_p5free, BRUTE_G_CAP, BRUTE_H_CAP
from .letters import LetterSystem, encode_bpg, encode_chain, enumerate_bpg, graph_of_system
from .recognition import SIMPLE_TAGS, PARAM_TAGS, is_member, parse_class

YES, NO, USAGE, UNSUPPORTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> Graph:
    return read_graph(_read_text(path))


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _ints(values: list[str], what: str) -> list[int]:
    try:
        return [int(v) for v in values]
    except ValueError:
        raise UsageError(f"{what}: parameters must be integers, got {values}") from None


# -- gen --------------------------------------------------------------------------------

def _gen_graph(family: str, params: list[str]) -> Graph:
    if family == "ufk":
        if len(params) != 3:
            raise UsageError("gen ufk F.graph K.json COPIES")
        f = _load_graph(params[0])
        k = parameters.KGraph.from_json(_read_text(params[1]))
        return parameters.build_UFK(f, k, _ints(params[2:], family)[0])
    if family == "uwk":
        if len(params) != 3:
            raise UsageError("gen uwk WORD.json K.json N")
        src = parameters.WordSource.from_json(_read_text(params[0]))
        k = parameters.KGraph.from_json(_read_text(params[1]))
        return parameters.build_UwK(src, k, _ints(params[2:], family)[0])
    nums = _ints(params, family)
    builders = {
        "hnn": (universal.universal_bpg, 1),
        "zn": (universal.universal_chain, 1),
        "fstar": (universal.universal_star_forest, 1),
        "star-forest-bounded": (universal.universal_star_forest_bounded, 2),
        "qt": (lambda t: universal.rigid_graph(t).graph, 1),
        "rnt": (lambda n, t: universal.witness_rnt(n, t).graph, 2),
    }
    if family == "rnT":
        if len(nums) < 2:
            raise UsageError("gen rnT N T1 [T2 ...]")
        return universal.witness_rnT(nums[0], nums[1:]).graph
    if family in builders:
        fn, arity = builders[family]
        if len(nums) != arity:
            raise UsageError(f"{family} takes {arity} integer parameter(s), got {len(nums)}")
        return fn(*nums)
    if family not in named.FAMILIES:
        raise UsageError(f"unknown family {family!r}; known: {', '.join(GEN_FAMILIES)}")
    return named.make_named(family, *nums)


GEN_FAMILIES = sorted(list(named.FAMILIES) + ["hnn", "zn", "fstar", "star-forest-bounded",
                                              "qt", "rnt", "rnT", "ufk", "uwk"])


def cmd_gen(args) -> int:
    g = _gen_graph(args.family, args.params)
    _emit(args, write_graph(g, f"{args.family} {' '.join(args.params)}".strip()))
    return YES


# -- recognize ----------------------------------------------------------------------------

def cmd_recognize(args) -> int:
    g = _load_graph(args.file)
    res = is_member(args.cls, g, mode=args.mode)
    print("yes" if res else "no")
    if args.certificate:
        print(f"reason: {res.reason}")
        if res.certificate is not None:
            print(f"certificate: {res.certificate}")
    return YES if res else NO


# -- encode / decode ------------------------------------------------------------------------

def cmd_encode(args) -> int:
    g = _load_graph(args.file)
    if args.kind == "letters":
        _emit(args, encode_bpg(g).to_json())
        return YES
    pair = encode_chain(g)
    _emit(args, f"{pair.w1}\n{pair.w2}")
    return YES


def cmd_decode(args) -> int:
    sys_ = LetterSystem.from_json(_read_text(args.file))
    _emit(args, write_graph(graph_of_system(sys_)))
    return YES


# -- isi --------------------------------------------------------------------------------

def cmd_isi(args) -> int:
    g = _load_graph(args.g)
    h = _load_graph(args.h)
    solver = choose_solver(g, h) if args.solver == "auto" else args.solver
    lines: list[str] = []
    if solver == "linear-forest-ilp":
        res = isi_linear_forest(g, h)
        found = bool(res)
        lines = res.certificate_lines()
    elif solver == "p5free-matching":
        for name, gr in (("G", g), ("H", h)):
            if not is_member("p5free_bipartite", gr):
                raise UnsupportedInstance(f"{name} is not P5-free bipartite")
        res = isi_p5free(g, h, literal=args.literal)
        found = bool(res)
        if res.embedding is not None:
            lines = [f"{u} -> {v}" for u, v in sorted(res.embedding.map.items())]
    else:
        if h.n > BRUTE_H_CAP or g.n > BRUTE_G_CAP:
            raise UnsupportedInstance(
                f"brute force capped at |V(H)| <= {BRUTE_H_CAP}, |V(G)| <= {BRUTE_G_CAP}")
        emb = isi_bruteforce(g, h)
        found = emb is not None
        if emb is not None:
            lines = [f"{u} -> {v}" for u, v in sorted(emb.map.items())]
    print("yes" if found else "no")
    if args.certificate:
        print(f"solver: {solver}")
        for line in lines:
            print(line)
    return YES if found else NO


# -- params -------------------------------------------------------------------------------

def cmd_params(args) -> int:
    g = _load_graph(args.file)
    which = args.which
    out = []
    if which in ("nd", "all"):
        out.append(f"nd: {parameters.neighbourhood_diversity(g)}")
    if which in ("dist", "all") and (which == "dist" or g.n <= parameters.DIST_CAP):
        out.append(f"distinguishing_number: {parameters.distinguishing_number(g)}")
    if which in ("metrics", "all"):
        m = parameters.graph_metrics(g)
        out.append(f"components: {len(m.components)}")
        finite = [d for row in m.distances.values() for d in row.values() if d != float("inf")]
        out.append(f"diameter: {int(max(finite)) if finite else 0}"
                   + ("" if len(m.components) <= 1 else " (largest finite)"))
        out.append(f"mis: {m.mis if m.mis is not None else 'n/a'}")
        out.append(f"path_number: {m.path_number if m.path_number is not None else 'n/a'}")
    _emit(args, "\n".join(out))
    return YES


# -- pivot / lc ------------------------------------------------------------------------------

def cmd_pivot(args) -> int:
    g = _load_graph(args.file)
    nums = _ints(args.vertices, "pivot")
    if not nums or len(nums) % 2:
        raise UsageError("pivot needs vertex pairs: U V [U V ...]")
    for u, v in zip(nums[::2], nums[1::2]):
        if not (1 <= u <= g.n and 1 <= v <= g.n):
            raise UsageError(f"vertex out of range 1..{g.n}")
        if not g.has_edge(u, v):
            raise UsageError(f"pivot needs an edge, {u} and {v} are not adjacent")
        g = pivot(g, u, v)
    _emit(args, write_graph(g))
    return YES


def cmd_lc(args) -> int:
    g = _load_graph(args.file)
    for v in _ints(args.vertices, "lc"):
        if not 1 <= v <= g.n:
            raise UsageError(f"vertex {v} out of range 1..{g.n}")
        g = local_complement(g, v)
    _emit(args, write_graph(g))
    return YES


# -- verify-universal / enumerate ----------------------------------------------------------------

def cmd_verify_universal(args) -> int:
    u = _load_graph(args.file)
    report = universal.verify_universal(args.cls, args.n, u)
    print("yes" if report.passed else "no")
    print(report.summary())
    return YES if report.passed else NO


def _member_flag(job):
    cls, g = job
    return bool(is_member(cls, g))


def cmd_enumerate(args) -> int:
    what = args.what
    if what == "graphs":
        gs = list(enumerate_graphs(args.n, allow_large=args.allow_large))
    else:
        c = parse_class(what)
        if args.jobs > 1 and c.tag not in universal.CLASS_CAPS:
            # filter-based classes: parallel membership tests, order preserved by map
            gs = _parallel_filter(c, args.n, args.jobs, args.allow_large)
        else:
            gs = list(universal.enumerate_class(c, args.n, allow_large=args.allow_large))
    if args.count:
        _emit(args, str(len(gs)))
    else:
        _emit(args, write_graphs(gs) if gs else "")
    return YES


def _parallel_filter(c, n: int, jobs: int, allow_large: bool) -> list[Graph]:
    check_cap(n, universal.FILTER_CAP, f"enumerate_class({c})", allow_large)
    source = list(enumerate_bpg(n) if n <= 8 and c.tag not in ("bipartite", "kSk_free")
                  else enumerate_graphs(n, allow_large=allow_large or n == 8))
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        flags = list(ex.map(_member_flag, [(c, g) for g in source], chunksize=16))
    return [g for g, ok in zip(source, flags) if ok]


# -- parser ---------------------------------------------------------------------------------

CLASS_HELP = ", ".join(SIMPLE_TAGS) + ", " + ", ".join(f"{t}(k)" for t in PARAM_TAGS)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bpglab", description="Bipartite permutation graph toolkit.")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    def out(sp):
        sp.add_argument("-o", "--output", metavar="FILE", help="write result to FILE instead of stdout")

    sp = sub.add_parser("gen", help="generate a named graph or construction")
    sp.add_argument("family", help="one of: " + ", ".join(GEN_FAMILIES))
    sp.add_argument("params", nargs="*")
    out(sp)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("recognize", help="class membership test")
    sp.add_argument("cls", metavar="CLASS", help=CLASS_HELP)
    sp.add_argument("file")
    sp.add_argument("--mode", choices=("forbidden", "constructive"), default="forbidden")
    sp.add_argument("--certificate", action="store_true")
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("encode", help="graph -> letter system JSON or chain words")
    sp.add_argument("kind", choices=("letters", "chain"))
    sp.add_argument("file")
    out(sp)
    sp.set_defaults(func=cmd_encode)

    sp = sub.add_parser("decode", help="letter system JSON -> graph")
    sp.add_argument("kind", choices=("letters",))
    sp.add_argument("file")
    out(sp)
    sp.set_defaults(func=cmd_decode)

    sp = sub.add_parser("isi", help="is H an induced subgraph of G")
    sp.add_argument("--solver", default="auto",
                    choices=("auto", "bruteforce", "linear-forest-ilp", "p5free-matching"))
    sp.add_argument("--literal", action="store_true", help="unpadded assignment rule (p5free-matching)")
    sp.add_argument("--certificate", action="store_true")
    sp.add_argument("g", metavar="G")
    sp.add_argument("h", metavar="H")
    sp.set_defaults(func=cmd_isi)

    sp = sub.add_parser("params", help="graph parameters")
    sp.add_argument("which", choices=("nd", "dist", "metrics", "all"))
    sp.add_argument("file")
    out(sp)
    sp.set_defaults(func=cmd_params)

    sp = sub.add_parser("pivot", help="pivot on edges U V, in order")
    sp.add_argument("file")
    sp.add_argument("vertices", nargs="+", metavar="U V")
    out(sp)
    sp.set_defaults(func=cmd_pivot)

    sp = sub.add_parser("lc", help="local complementation at vertices, in order")
    sp.add_argument("file")
    sp.add_argument("vertices", nargs="+", metavar="V")
    out(sp)
    sp.set_defaults(func=cmd_lc)

    sp = sub.add_parser("verify-universal", help="check that FILE contains every n-vertex member of a class")
    sp.add_argument("--class", dest="cls", required=True, help=CLASS_HELP)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("file")
    sp.set_defaults(func=cmd_verify_universal)

    sp = sub.add_parser("enumerate", help="all n-vertex graphs, or members of a class, up to isomorphism")
    sp.add_argument("what", metavar="graphs|CLASS")
    sp.add_argument("n", type=int)
    sp.add_argument("--count", action="store_true", help="print only the number of graphs")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--allow-large", action="store_true")
    out(sp)
    sp.set_defaults(func=cmd_enumerate)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else YES
    try:
        return args.func(args)
    except (UnsupportedInstance, NotBPGError) as exc:
        print(f"bpglab: unsupported instance: {exc}", file=sys.stderr)
        return UNSUPPORTED
    except (UsageError, GraphFormatError, ValueError, KeyError, OSError) as exc:
        print(f"bpglab: error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
