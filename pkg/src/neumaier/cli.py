"""Command-line interface: ``neumaier <command> ...``.

Exit status is 0 iff every assertion made by the command holds; input
errors exit with 2.  ``--json`` prints a versioned, byte-stable report.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import logging
import os
import sys
from pathlib import Path
from typing import Optional

from . import catalog
from .automorphisms import are_isomorphic, is_vertex_transitive
from .circulant import scan_srg_neumaier_circulants
from .cliques import InvariantViolation, check_edges, classify, clique_quotient, equitable_partition
from .graph import Graph, GraphError, diameter, from_edge_list, from_graph6, to_edge_list, to_graph6
from .groups import GroupError, cayley_graph, make_group, split_top_level
from .parameters import check_all, enumerate_feasible, enumerate_srg_feasible, parse_params
from .spectrum import char_poly, integer_eigenvalues_of_matrix, integer_spectrum, verify_neumaier_eigenvalues

SCHEMA = "neumaier-report/1"

log = logging.getLogger("neumaier")


class CliError(Exception):
    pass


def _configure_logging() -> None:
    level = os.environ.get("NEUMAIER_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format="%(levelname)s %(name)s: %(message)s")


def resolve_graph(token: Optional[str] = None, *, name=None, g6=None, edges=None) -> Graph:
    """Catalog name, graph6 string or edge-list file, in that order."""
    if name is not None:
        return catalog.get(name)
    if g6 is not None:
        return from_graph6(g6)
    if edges is not None:
        return from_edge_list(Path(edges).read_text(), label=Path(edges).stem)
    if token is None:
        raise CliError("no graph given (use --name, --g6 or --edges)")
    if token in catalog.ENTRIES:
        return catalog.get(token)
    if Path(token).is_file():
        return from_edge_list(Path(token).read_text(), label=Path(token).stem)
    return from_graph6(token)


def _graph_info(g: Graph) -> dict:
    g6 = to_graph6(g)
    return {"label": g.label, "n": g.n, "edges": g.num_edges, "graph6": g6, "sha256": hashlib.sha256(g6.encode()).hexdigest()}


def _add_graph_args(p: argparse.ArgumentParser, positional: bool = True) -> None:
    if positional:
        p.add_argument("graph", nargs="?", help="catalog name, graph6 string or edge-list file")
    p.add_argument("--name", help="catalog graph name")
    p.add_argument("--g6", help="graph6 string")
    p.add_argument("--edges", help="edge-list file: 'n' then one 'u v' per line")


def _graph_from(args) -> Graph:
    return resolve_graph(getattr(args, "graph", None), name=args.name, g6=args.g6, edges=args.edges)


# --- commands -------------------------------------------------------------------------


def cmd_classify(args) -> tuple[bool, dict, str]:
    g = _graph_from(args)
    cls = classify(g, fast=args.fast)
    data = {"graph": _graph_info(g), "classification": cls.as_dict()}
    lines = [f"{g.label or to_graph6(g)}: {cls.verdict.value} {cls.params_text()}"]
    if cls.is_neumaier:
        lines.append(f"  regular cliques: {len(cls.cliques)} of size {cls.c}, nexus {cls.a}")
        lines.append("  checks: " + ", ".join(f"{r.rule}={'ok' if r.ok else 'FAIL'}" for r in cls.checks if r.applicable))
    elif cls.regularity_witness is not None:
        w = cls.regularity_witness
        lines.append(f"  witness ({w.kind}): {w.first}->{w.first_count} vs {w.second}->{w.second_count}")
    return True, data, "\n".join(lines)


def cmd_params(args) -> tuple[bool, dict, str]:
    if args.action == "check":
        p = parse_params(args.values)
        rep = check_all(p)
        lines = [f"{p}: {'feasible' if rep.ok else 'infeasible'}"]
        for r in rep.rules:
            if r.applicable:
                lines.append(f"  {r.rule:<12} {'ok  ' if r.ok else 'FAIL'} {r.note} [{r.lhs} vs {r.rhs}]")
        return rep.ok, rep.as_dict(), "\n".join(lines)
    tuples = enumerate_srg_feasible(args.k_max, args.jobs) if args.srg else enumerate_feasible(args.k_max, args.jobs)
    fields = ["n", "k", "lambda", "a", "c"] + (["mu"] if args.srg else [])
    rows = [list(t) for t in tuples]
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(fields)
        w.writerows(rows)
        text = buf.getvalue().rstrip("\n")
    else:
        text = "\n".join(str(t) for t in tuples)
    return True, {"k_max": args.k_max, "fields": fields, "tuples": rows, "count": len(rows)}, text


def cmd_table1(args) -> tuple[bool, dict, str]:
    rows = catalog.table1(args.jobs)
    ok = all(r.match for r in rows)
    data = {"rows": [r.as_dict() for r in rows], "all_match": ok}
    header = ["Parameters", "Name", "Neumaier", "Cayley", "Vertex-transitive", "Match"]
    body = []
    for r in rows:
        t = r.entry.table1
        body.append([t["params"], t["name"], "Yes" if r.classification.is_neumaier else "No", r.cayley,
                     "Yes" if r.transitive else "No", "ok" if r.match else "MISMATCH " + ",".join(r.mismatches)])
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(body)
        text = buf.getvalue().rstrip("\n")
    else:
        text = "\n".join(["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
                         + ["| " + " | ".join(row) + " |" for row in body])
    return ok, data, text


def cmd_build(args) -> tuple[bool, dict, str]:
    g = catalog.get(args.name_pos)
    text = to_edge_list(g).rstrip("\n") if args.format == "edges" else to_graph6(g)
    return True, {"graph": _graph_info(g)}, text


def cmd_cayley(args) -> tuple[bool, dict, str]:
    group = make_group(args.group)
    tokens = split_top_level(args.set)
    g = cayley_graph(group, tokens, f"Cay({group.name})")
    cls = classify(g)
    data = {"group": group.name, "order": group.order, "connection_set": tokens,
            "graph": _graph_info(g), "classification": cls.as_dict()}
    return True, data, f"{to_graph6(g)}\n{cls.verdict.value} {cls.params_text()}"


def cmd_spectrum(args) -> tuple[bool, dict, str]:
    g = _graph_from(args)
    p = char_poly(g)
    rep = integer_spectrum(p)
    ok = rep.expand() == p
    data = {"graph": _graph_info(g), "char_poly": [str(c) for c in p.coeffs], "integer_roots": {str(r): m for r, m in rep.integer_roots.items()},
            "residual": str(rep.residual), "reconstructs": ok}
    lines = [f"char poly: {p}", "integer roots: " + ", ".join(f"{r}^{m}" for r, m in rep.integer_roots.items()),
             f"residual: {rep.residual}"]
    if args.neumaier:
        cls = classify(g)
        if cls.is_neumaier:
            v = verify_neumaier_eigenvalues(g, cls.params, rep)
            data["neumaier_eigenvalues"] = {"ok": v.ok, "reason": v.reason}
            ok = ok and v.ok
            lines.append(f"k={cls.k} and c-a-1={cls.c - cls.a - 1} eigenvalues: {'ok' if v.ok else v.reason}")
    return ok, data, "\n".join(lines)


def cmd_aut(args) -> tuple[bool, dict, str]:
    g = _graph_from(args)
    vt = is_vertex_transitive(g)
    data = {"graph": _graph_info(g), "aut": vt.aut.as_dict(), "vertex_transitive": vt.transitive}
    if vt.transitive:
        data["certificate"] = {str(v): w for v, w in vt.words.items()}
    text = f"|Aut| = {vt.aut.order}, {len(vt.aut.generators)} generators, orbits {len(vt.orbits)}, vertex-transitive: {vt.transitive}"
    return True, data, text


def cmd_iso(args) -> tuple[bool, dict, str]:
    g, h = resolve_graph(args.first), resolve_graph(args.second)
    res = are_isomorphic(g, h)
    verdict = "ISOMORPHIC" if res.isomorphic else "NOT_ISOMORPHIC"
    data = {"first": _graph_info(g), "second": _graph_info(h), "verdict": verdict, "reason": res.reason, "mapping": res.mapping}
    return True, data, f"{verdict} ({res.reason})"


def cmd_circulant_scan(args) -> tuple[bool, dict, str]:
    rep = scan_srg_neumaier_circulants(args.max_n, args.jobs)
    ok = not rep.nontrivial_neumaier
    data = rep.as_dict()
    if args.report:
        Path(args.report).write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    lines = [f"scanned {rep.scanned} connected circulants with n <= {rep.n_max}",
             f"edge-regular: {rep.edge_regular}, strongly regular: {len(rep.srg)}",
             f"nontrivial SRG Neumaier circulants: {len(rep.nontrivial_neumaier)}",
             f"trivial (complete multipartite) Neumaier circulants: {len(rep.trivial_neumaier)}"]
    for h in rep.nontrivial_srg:
        lines.append(f"  nontrivial SRG {h.spec} {tuple(h.srg)} integral={h.integral}")
    return ok, data, "\n".join(lines)


def cmd_equitable(args) -> tuple[bool, dict, str]:
    g = _graph_from(args)
    cls = classify(g)
    if not cls.is_neumaier:
        raise CliError(f"{g.label or 'graph'} is not a Neumaier graph ({cls.verdict.value})")
    clique = cls.cliques[args.clique].clique
    e = clique[0] if args.vertex is None else args.vertex
    part = equitable_partition(g, clique, e, cls.params)
    two = clique_quotient(cls.params)
    two_eigs = integer_eigenvalues_of_matrix(two)
    edges = check_edges(g, cls.params)
    ok = part.forced_ok and edges.ok and set(two_eigs) == {cls.k, cls.c - cls.a - 1}
    data = {"graph": _graph_info(g), "params": cls.params_text(), "clique": list(clique), "e": e,
            "partition": part.as_dict(), "two_part_quotient": two, "two_part_eigenvalues": sorted(two_eigs),
            "edge_bound": {"bound": edges.bound, "edges": edges.edges, "ok": edges.ok}, "diameter": diameter(g)}
    rows = "\n".join("  " + " ".join("?" if x is None else str(x) for x in row) for row in part.quotient)
    text = f"{cls.params_text()} clique {list(clique)} e={e} equitable={part.equitable}\n{rows}"
    return ok, data, text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="neumaier", description="Neumaier graph toolkit")
    parser.add_argument("--json", action="store_true", help="emit the JSON report")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for enumerations and scans")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a graph")
    _add_graph_args(p)
    p.add_argument("--fast", action="store_true", help="stop at the first regular clique")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("params", help="parameter feasibility")
    psub = p.add_subparsers(dest="action", required=True)
    q = psub.add_parser("check", help="check n k lambda a c [mu]")
    q.add_argument("values", nargs="+")
    q.set_defaults(func=cmd_params)
    q = psub.add_parser("enumerate", help="all feasible tuples with k <= k-max")
    q.add_argument("--k-max", type=int, default=10)
    q.add_argument("--srg", action="store_true", help="strongly regular tuples (with mu)")
    q.add_argument("--csv", action="store_true")
    q.set_defaults(func=cmd_params)

    p = sub.add_parser("table1", help="reproduce the table of SRG Neumaier graphs with k <= 10")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("build", help="emit a catalog graph")
    p.add_argument("name_pos", metavar="name")
    p.add_argument("--format", choices=["graph6", "edges"], default="graph6")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("cayley", help="build and classify Cay(G, S)")
    p.add_argument("group", help="e.g. Z28, D16, S4, A4xZ2, Z4xZ4")
    p.add_argument("set", help="comma-separated elements, e.g. 1,-1,4 or (1,3)(2,4),(1,2,4)")
    p.set_defaults(func=cmd_cayley)

    p = sub.add_parser("spectrum", help="exact characteristic polynomial and integer roots")
    _add_graph_args(p)
    p.add_argument("--neumaier", action="store_true", help="also check k and c-a-1 are eigenvalues")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("aut", help="automorphism group")
    _add_graph_args(p)
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("iso", help="isomorphism test")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("circulant-scan", help="scan circulants for SRG Neumaier graphs")
    p.add_argument("--max-n", type=int, default=30)
    p.add_argument("--report", help="write the JSON report to this file")
    p.set_defaults(func=cmd_circulant_scan)

    p = sub.add_parser("equitable", help="four-part partition around a regular clique")
    _add_graph_args(p)
    p.add_argument("--clique", type=int, default=0, help="index into the sorted regular cliques")
    p.add_argument("--vertex", type=int, help="vertex e of the clique (default: its smallest)")
    p.set_defaults(func=cmd_equitable)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    _configure_logging()
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ok, data, text = args.func(args)
    except (CliError, GraphError, GroupError, KeyError, ValueError) as exc:
        if isinstance(exc, InvariantViolation):
            raise
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return 1
    if args.json:
        report = {"schema": SCHEMA, "command": argv, "ok": ok, **data}
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
