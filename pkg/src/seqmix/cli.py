"""``seqmix`` command line.

Subcommands read and write the plain text graph format (see :mod:`seqmix.io`)
on files or standard streams, so they compose with pipes::

    seqmix generate kautz --d 2 --n 2 | seqmix build seqmix --l 2 | seqmix analyze

Exit codes: 0 success, 1 failed check, 2 usage error, 3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io as gio
from .census import measure_census, predict_census
from .core import GraphError, as_digraph, degree_extremes, total_regularity
from .gen import bosak, complete_bipartite, complete_symmetric, cycle, kautz
from .lineage import iterated_line_digraph, sequence_graph, sequence_mixed_direct, sequence_mixed_quotient
from .metrics import all_pairs, diameter
from .moore import MooreError, classify_moore, moore_layers
from .reduce import reduce_sequence_graph, reduction_report
from .route import route

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3

ALL_PAIRS_LIMIT = 5000


class InputError(Exception):
    pass


def _read_text(path: str | None) -> str:
    try:
        if path in (None, "-"):
            return sys.stdin.read()
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _load(path: str | None, digraph: bool = False):
    text = _read_text(path)
    try:
        return gio.read_digraph(text) if digraph else gio.read_graph(text)
    except GraphError as exc:
        raise InputError(f"{path or '<stdin>'}: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise InputError(str(exc)) from exc


def cmd_generate(args) -> int:
    fam = args.family
    if fam == "kautz":
        G = kautz(args.d, args.n, pure_digraph=args.pure_digraph)
        note = f"Kautz K({args.d},{args.n})" + (" pure digraph" if args.pure_digraph else "")
    elif fam == "ksym":
        G = complete_symmetric(args.n, args.mode)
        note = f"complete symmetric on {args.n} vertices ({args.mode})"
    elif fam == "kbipartite":
        G = complete_bipartite(args.m, args.n)
        note = f"K_{args.m},{args.n}"
    elif fam == "cycle":
        G = cycle(args.n, args.directed)
        note = f"{'directed' if args.directed else 'undirected'} cycle on {args.n} vertices"
    else:
        G = bosak()
        note = "Bosak graph"
    _emit(gio.write_graph(G, note), args.output)
    return 0


def cmd_build(args) -> int:
    G = _load(args.graph, args.digraph)
    if args.kind == "line":
        H = iterated_line_digraph(as_digraph(G), args.l)
    elif args.kind == "seq":
        H = sequence_graph(G, args.l)
    elif args.method == "quotient":
        H = sequence_mixed_quotient(G, args.l)
    else:
        H = sequence_mixed_direct(G, args.l)
    _emit(gio.write_graph(H, f"{args.kind} l={args.l}"), args.output)
    if args.emit_labels:
        _emit(gio.write_labels(H), args.emit_labels)
    return 0


def cmd_analyze(args) -> int:
    G = _load(args.graph, args.digraph)
    out = [f"vertices\t{G.n}", f"edges\t{len(G.edges)}", f"arcs\t{len(G.arcs)}"]
    if not args.digraph:
        d, do, di = degree_extremes(G)
        out += [f"max_undirected_degree\t{d}", f"max_out_degree\t{do}", f"max_in_degree\t{di}"]
        reg = total_regularity(G)
        out.append(f"total_regularity\t{reg if reg else 'none'}")
    if G.n <= ALL_PAIRS_LIMIT:
        rep = all_pairs(G)
        out.append(f"diameter\t{rep.diameter if rep.diameter is not None else 'undefined'}")
        if rep.avg is not None:
            out.append(f"average_distance\t{rep.avg}\t{float(rep.avg):.6f}")
        else:
            out.append("average_distance\tundefined")
        out.append("layer_profile\tcount")
        profiles: dict = {}
        for layer in rep.layers:
            profiles[layer] = profiles.get(layer, 0) + 1
        for layer, count in sorted(profiles.items()):
            out.append(f"{','.join(map(str, layer))}\t{count}")
    else:
        k = diameter(G)
        out.append(f"diameter\t{k if k is not None else 'undefined'}")
    sys.stdout.write("\n".join(out) + "\n")
    return 0


def cmd_census(args) -> int:
    G = _load(args.graph)
    reg = total_regularity(G)
    if reg is None:
        raise GraphError("census needs a totally regular graph")
    r, z = reg
    ok = True
    rows = ["l\tquantity\tpredicted\tmeasured\tstatus"]
    for l in args.l:
        pred = predict_census(G.n, r, z, l)
        meas = measure_census(sequence_mixed_direct(G, l), r, z)
        pairs = [
            ("V1", pred.v1, meas.v1, pred.v1 == meas.v1),
            ("V2", pred.v2, meas.v2, pred.v2 == meas.v2),
            ("order", pred.n_total, meas.n_total, pred.n_total == meas.n_total),
            ("max_undirected", pred.delta, meas.delta, meas.delta <= pred.delta),
            ("max_directed", pred.delta_star, meas.delta_star, meas.delta_star <= pred.delta_star),
        ]
        for name, p, m, good in pairs:
            ok &= good
            rows.append(f"{l}\t{name}\t{p}\t{m}\t{'PASS' if good else 'FAIL'}")
    sys.stdout.write("\n".join(rows) + "\n")
    return 0 if ok else EXIT_FAIL


def cmd_moore(args) -> int:
    if args.check:
        v = classify_moore(_load(args.check))
        sys.stdout.write(
            f"status\t{v.status.value}\nr\t{v.r}\nz\t{v.z}\nk\t{v.k}\n"
            f"bound\t{v.bound}\ndeficit\t{v.deficit}\ndegenerate_cycle\t{v.degenerate_cycle}\n"
        )
        return 0
    if args.r is None or args.z is None or args.k is None:
        raise GraphError("moore needs --r, --z and --k (or --check FILE)")
    try:
        t = moore_layers(args.r, args.z, args.k)
    except MooreError as exc:
        raise GraphError(str(exc)) from exc
    out = [f"M({t.r},{t.z},{t.k})\t{t.total}"]
    if t.closed_form is not None:
        out.append(f"closed_form\t{t.closed_form:.6f}")
    if args.table:
        out.append("i\tR_i\tZ_i\tN_i")
        out += [f"{i}\t{R}\t{Z}\t{N}" for i, (R, Z, N) in enumerate(t.layers)]
    sys.stdout.write("\n".join(out) + "\n")
    return 0


def cmd_reduce(args) -> int:
    G = _load(args.graph, args.digraph)
    red = reduce_sequence_graph(G, args.l, args.rprime)
    rep = reduction_report(G, args.l, args.rprime, red)
    ratio = f"{rep.ratio} ({float(rep.ratio):.6f})" if rep.ratio is not None else "undefined"
    report = "\n".join([
        f"reduced l={args.l} r'={args.rprime}",
        "quantity\tsource\treduced",
        f"order\t{red.source.n}\t{rep.order}",
        f"max_undirected\t{rep.source_delta}\t{rep.delta}",
        f"max_out\t{rep.source_delta_out}\t{rep.delta_out}",
        f"diameter\t{rep.source_diameter}\t{rep.diameter}",
        f"moore_ref\t{rep.source_moore_ref}\t{rep.moore_ref}",
        f"ratio\t-\t{ratio}",
        f"factor_arcs\t{rep.factor_arcs}",
        f"new_edges\t{rep.new_edges}",
        f"factor_arcs_on_existing_edges\t{rep.already_edges}",
        f"collapsed_opposite_pairs\t{rep.collapsed_pairs}",
    ])
    _emit(gio.write_graph(red.graph, report), args.output)
    return 0


def cmd_route(args) -> int:
    G = _load(args.graph, args.digraph)
    path = route(G, args.l, gio.parse_walk(args.src), gio.parse_walk(args.dst))
    lines = [f"{i}\t{lab}" for i, lab in enumerate(path.steps)]
    lines.append(f"length\t{path.length}\np\t{path.p}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_export(args) -> int:
    G = _load(args.graph)
    _emit(gio.export_dot(G) if args.format == "dot" else gio.write_graph(G), args.output)
    return 0


def cmd_reproduce(args) -> int:
    from .reproduce import format_table, format_trend, headline_checks, ratio_trend

    checks = headline_checks()
    table = format_table(checks)
    sys.stdout.write(table)
    trend_ds = [int(x) for x in args.trend.split(",")] if args.trend else []
    rows = ratio_trend(trend_ds) if trend_ds else []
    if rows:
        sys.stdout.write("\n" + format_trend(rows))
    if args.out:
        out = Path(args.out)
        try:
            out.mkdir(parents=True, exist_ok=True)
            (out / "checks.tsv").write_text(table)
            if rows:
                (out / "trend.tsv").write_text(format_trend(rows))
        except OSError as exc:
            raise InputError(str(exc)) from exc
        if not args.no_figures:
            for p in _figures(out, rows):
                sys.stderr.write(f"wrote {p}\n")
    return 0 if all(c.passed for c in checks) else EXIT_FAIL


def _figures(out: Path, rows) -> list[Path]:
    from .metrics import layer_counts
    from .moore import moore_bound
    from .plotting import plot_layers, plot_moore_growth, plot_ratio_trend

    paths = []
    B = bosak()
    moore_n = [N for _, _, N in moore_layers(3, 1, 2).layers]
    paths.append(plot_layers(layer_counts(B, 0), moore_n, "Bosak graph vs M(3,1,2) layers",
                             out / "bosak_layers.png"))
    ks = list(range(1, 7))
    growth = {f"M({r},{z},k)": [moore_bound(r, z, k) for k in ks]
              for r, z in ((4, 4), (4, 3), (3, 1), (1, 2))}
    paths.append(plot_moore_growth(growth, ks, out / "moore_growth.png"))
    if rows:
        paths.append(plot_ratio_trend(rows, out / "ratio_trend.png"))
    return paths


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="seqmix", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="emit a standard graph")
    gsub = g.add_subparsers(dest="family", required=True)
    k = gsub.add_parser("kautz")
    k.add_argument("--d", type=int, required=True)
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--pure-digraph", action="store_true")
    ks = gsub.add_parser("ksym")
    ks.add_argument("--n", type=int, required=True)
    ks.add_argument("--mode", choices=("mixed", "digraph"), default="digraph")
    kb = gsub.add_parser("kbipartite")
    kb.add_argument("--m", type=int, required=True)
    kb.add_argument("--n", type=int, required=True)
    c = gsub.add_parser("cycle")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--directed", action="store_true")
    gsub.add_parser("bosak")
    for sp in (k, ks, kb, c, gsub.choices["bosak"]):
        sp.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    def graph_arg(sp, digraph=True):
        sp.add_argument("graph", nargs="?", default="-", help="graph file (default stdin)")
        if digraph:
            sp.add_argument("--digraph", action="store_true",
                            help="read opposite arcs as a digon instead of an edge")

    b = sub.add_parser("build", help="line digraph / sequence graph constructions")
    bsub = b.add_subparsers(dest="kind", required=True)
    for kind, text in (("line", "iterated line digraph"), ("seq", "sequence graph (no arcs)"),
                       ("seqmix", "sequence mixed graph")):
        bk = bsub.add_parser(kind, help=text)
        bk.add_argument("--l", type=int, required=True)
        if kind == "seqmix":
            bk.add_argument("--method", choices=("direct", "quotient"), default="direct")
        bk.add_argument("--emit-labels", metavar="PATH")
        bk.add_argument("-o", "--output")
        graph_arg(bk)
    b.set_defaults(func=cmd_build)

    a = sub.add_parser("analyze", help="degrees, diameter, average distance, layers")
    graph_arg(a)
    a.set_defaults(func=cmd_analyze)

    cs = sub.add_parser("census", help="predicted vs measured order and degrees")
    cs.add_argument("--l", type=int, action="append", required=True)
    graph_arg(cs, digraph=False)
    cs.set_defaults(func=cmd_census)

    m = sub.add_parser("moore", help="mixed Moore bound")
    m.add_argument("--r", type=int)
    m.add_argument("--z", type=int)
    m.add_argument("--k", type=int)
    m.add_argument("--table", action="store_true")
    m.add_argument("--check", metavar="GRAPHFILE")
    m.set_defaults(func=cmd_moore)

    r = sub.add_parser("reduce", help="r'-factor degree reduction")
    r.add_argument("--l", type=int, required=True)
    r.add_argument("--rprime", type=int, required=True)
    r.add_argument("-o", "--output")
    graph_arg(r)
    r.set_defaults(func=cmd_reduce)

    rt = sub.add_parser("route", help="shift route between two walks")
    rt.add_argument("--l", type=int, required=True)
    rt.add_argument("--from", dest="src", required=True)
    rt.add_argument("--to", dest="dst", required=True)
    graph_arg(rt)
    rt.set_defaults(func=cmd_route)

    e = sub.add_parser("export", help="convert to text or DOT")
    e.add_argument("--format", choices=("text", "dot"), default="text")
    e.add_argument("-o", "--output")
    graph_arg(e, digraph=False)
    e.set_defaults(func=cmd_export)

    rp = sub.add_parser("reproduce", help="recompute every headline number")
    rp.add_argument("--out", metavar="DIR", help="write TSV tables and figures here")
    rp.add_argument("--trend", default="4,8,16",
                    help="comma-separated d values for the reduction ratio trend ('' to skip)")
    rp.add_argument("--no-figures", action="store_true")
    rp.set_defaults(func=cmd_reproduce)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"seqmix: {exc}\n")
        return EXIT_IO
    except GraphError as exc:
        sys.stderr.write(f"seqmix: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
