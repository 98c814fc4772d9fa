"""Command-line front end.

Exit codes: 0 for yes / polynomial / success, 1 for no / NP-complete,
2 for usage or input errors.  Reports start with a machine-readable line,
then ``---`` and human-readable detail.  ``--format json`` prints the same
fields as a JSON document instead.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coloured_graph import GraphError, abelianize_graph, parse_graph, serialize_graph
from .dichotomy import (
    NearlyMonoCertificate,
    OddCycleCertificate,
    classify_target,
    hardness_report,
    indicator_construction,
    serialize_digraph,
    smooth_and_periods,
)
from .homomorphism import check_witness, decide_switch_hom, format_witness, parse_witness
from .oracle import CapExceeded, DEFAULT_CAP, brute_witness
from .perm_groups import (
    GroupError,
    abelianization,
    block_system,
    commutator_subgroup,
    group_properties,
    max_commutator_word_length,
    parse_group,
)
from .switch_graph import build_switch_graph, serialize_switch_graph
from .switching import (
    apply_sequence,
    can_switch_monochromatic,
    format_sequence,
    parse_sequence,
    switch_equivalent,
)


class Report:
    def __init__(self, code: int, headline: str, data: dict, detail: list[str] = (),
                 body: str | None = None):
        self.code = code
        self.headline = headline
        self.data = data
        self.detail = list(detail)
        self.body = body  # raw file-format output replaces headline/detail

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.data, indent=2, ensure_ascii=False, sort_keys=True) + "\n"
        if self.body is not None:
            return self.body
        lines = [self.headline]
        if self.detail:
            lines += ["---"] + self.detail
        return "\n".join(lines) + "\n"


def _read(path: str) -> str:
    return Path(path).read_text()


def _group(path):
    return parse_group(_read(path))


def _graph(path):
    return parse_graph(_read(path))


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _seq_json(seq):
    return [[v, str(p)] for v, p in seq]


def _blocks_text(bs) -> list[str]:
    return [f"Δ{k} = {{{','.join(map(str, b))}}}" for k, b in enumerate(bs.blocks, start=1)]


def cmd_group_info(args) -> Report:
    G = _group(args.group)
    props = group_properties(G)
    data = {"order": props.order, "transitive": props.is_transitive,
            "abelian": props.is_abelian, "regular": props.is_regular,
            "degree": G.degree, "generators": [str(g) for g in G.generators]}
    detail = [f"degree {G.degree}; generators: {' '.join(map(str, G.generators)) or '()'}"]
    head = (f"order={props.order} transitive={_yn(props.is_transitive)} "
            f"abelian={_yn(props.is_abelian)} regular={_yn(props.is_regular)}")
    D = commutator_subgroup(G)
    data["commutator_order"] = D.order
    head += f" commutator_order={D.order}"
    detail.append(f"commutator subgroup of order {D.order}: "
                  + " ".join(map(str, D.elements)))
    if G.is_transitive:
        ab = abelianization(G)
        data["m_prime"] = ab.blocks.m_prime
        data["blocks"] = [list(b) for b in ab.blocks.blocks]
        data["quotient_order"] = ab.quotient.order
        data["max_commutator_word"] = max_commutator_word_length(G)
        head += f" m_prime={ab.blocks.m_prime}"
        detail.append("blocks: " + "  ".join(_blocks_text(ab.blocks)))
        detail.append(f"Abelianization: order {ab.quotient.order} on "
                      f"{ab.blocks.m_prime} block label(s)")
    else:
        detail.append("group is not transitive: no block system")
    return Report(0, head, data, detail)


def cmd_abelianize(args) -> Report:
    G = _group(args.group)
    g = _graph(args.graph)
    ab = abelianization(G)
    gab = abelianize_graph(g, ab.blocks)
    comments = ["blocks: " + "  ".join(_blocks_text(ab.blocks)),
                f"quotient group of degree {ab.quotient.degree}, order {ab.quotient.order}"]
    comments += [f"quotient generator {q}" for q in ab.quotient.generators]
    comments += [f"project {p} -> {ab.project(p)}" for p in G.elements]
    data = {"graph": serialize_graph(gab), "blocks": [list(b) for b in ab.blocks.blocks],
            "m_prime": ab.blocks.m_prime,
            "quotient_generators": [str(q) for q in ab.quotient.generators],
            "projection": {str(p): str(ab.project(p)) for p in G.elements}}
    return Report(0, "", data, body=serialize_graph(gab, comments))


def cmd_switch(args) -> Report:
    G = _group(args.group)
    g = _graph(args.graph)
    seq = parse_sequence(_read(args.sequence), g.m)
    for v, p in seq:
        if p not in G:
            raise GroupError(f"switch {v} {p}: permutation not in the group")
    out = apply_sequence(g, seq)
    return Report(0, "", {"graph": serialize_graph(out)}, body=serialize_graph(out))


def cmd_equiv(args) -> Report:
    G = _group(args.group)
    a, b = _graph(args.graph_a), _graph(args.graph_b)
    seq = switch_equivalent(a, b, G)
    if seq is None:
        return Report(1, "NO", {"answer": "NO"}, ["the graphs are not switch equivalent"])
    return Report(0, "YES", {"answer": "YES", "sequence": _seq_json(seq)},
                  [f"{len(seq)} switches take the first graph to the second:",
                   format_sequence(seq).rstrip("\n")])


def cmd_mono(args) -> Report:
    G = _group(args.group)
    g = _graph(args.graph)
    ab = abelianization(G)
    gab = abelianize_graph(g, ab.blocks)
    res = can_switch_monochromatic(gab, ab.quotient)
    if res is None:
        return Report(1, "NO", {"answer": "NO"},
                      ["the Abelianized graph cannot be switched to one colour"])
    colour, seq = res
    return Report(0, f"YES Δ{colour}", {"answer": "YES", "colour": colour,
                                          "sequence": _seq_json(seq)},
                  [f"quotient switches making the Abelianized graph monochromatic Δ{colour}:",
                   format_sequence(seq).rstrip("\n")])


def cmd_switchgraph(args) -> Report:
    G = _group(args.group)
    g = _graph(args.graph)
    sw = build_switch_graph(g, G)
    text = serialize_switch_graph(sw)
    return Report(0, "", {"graph": serialize_graph(sw.graph),
                          "labels": [[v, str(p)] for v, p in map(sw.label, range(sw.graph.n))]},
                  body=text)


def cmd_decide(args) -> Report:
    G = _group(args.group)
    g, h = _graph(args.graph_g), _graph(args.graph_h)
    if args.oracle:
        w = brute_witness(g, h, G, cap=args.cap)
    else:
        w = decide_switch_hom(g, h, G)
    method = "oracle" if args.oracle else "abelianized switch graph"
    if w is None:
        return Report(1, "NO", {"answer": "NO", "method": method},
                      [f"no switchable homomorphism ({method})"])
    if args.witness:
        Path(args.witness).write_text(format_witness(w))
    return Report(0, "YES", {"answer": "YES", "method": method,
                             "sequence": _seq_json(w.sequence), "mapping": list(w.mapping)},
                  [f"switchable homomorphism found ({method}); "
                   f"{len(w.sequence)} switches", "mapping: " + " ".join(map(str, w.mapping))])


def cmd_check(args) -> Report:
    G = _group(args.group)
    g, h = _graph(args.graph_g), _graph(args.graph_h)
    w = parse_witness(_read(args.witness), g.m)
    ok = check_witness(g, h, G, w)
    word = "YES" if ok else "NO"
    return Report(0 if ok else 1, word, {"answer": word},
                  ["witness verified" if ok else "witness rejected"])


def _certificate_json(verdict) -> dict:
    cert = verdict.certificate
    out = {"kind": verdict.kind, "reason": verdict.reason}
    if verdict.reason == "mono-bipartite":
        out["colour"] = verdict.colour
        out["sequence"] = _seq_json(verdict.sequence)
    if isinstance(cert, OddCycleCertificate):
        out["cycle"] = list(cert.cycle)
    if isinstance(cert, NearlyMonoCertificate):
        out["cycle"] = list(cert.cycle)
        out["cotree_edge"] = list(cert.cotree_edge)
        out["block_colours"] = list(cert.colours)
        out["sequence"] = _seq_json(cert.sequence)
    return out


def cmd_classify(args) -> Report:
    G = _group(args.group)
    h = _graph(args.graph_h)
    verdict = classify_target(h, G)
    data = _certificate_json(verdict)
    if args.certificate:
        Path(args.certificate).write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n")
    cert = verdict.certificate
    detail = []
    if verdict.reason == "edgeless":
        detail.append("the target has no edges")
    elif verdict.reason == "mono-bipartite":
        detail.append(f"bipartite; the Abelianized target switches to block colour "
                      f"Δ{verdict.colour} with {len(verdict.sequence)} quotient switches")
    elif isinstance(cert, OddCycleCertificate):
        detail.append("odd cycle: " + " ".join(map(str, cert.cycle)))
    else:
        detail.append("fundamental cycle: " + " ".join(map(str, cert.cycle)))
        detail.append(f"co-tree edge {cert.cotree_edge[0]}-{cert.cotree_edge[1]} stays "
                      f"Δ{cert.colours[1]} after switching the tree path to Δ{cert.colours[0]}")
    return Report(0 if verdict.is_polynomial else 1, verdict.headline(), data, detail)


def cmd_indicator(args) -> Report:
    g = _graph(args.graph)
    d = indicator_construction(g, args.i, args.j)
    rep = smooth_and_periods(d)
    data = {"n": d.n, "arcs": [list(a) for a in d.arcs], "smooth": rep.is_smooth,
            "periods": list(rep.periods), "loops": list(rep.loops)}
    return Report(0, "", data, body=serialize_digraph(d))


def cmd_thm7(args) -> Report:
    G = _group(args.group)
    h = _graph(args.graph_h)
    rep = hardness_report(h, G)
    if rep is None:
        verdict = classify_target(h, G)
        return Report(1, f"NONE {verdict.headline()}", {"answer": "NONE",
                                                        "verdict": _certificate_json(verdict)},
                      ["the target has no nearly-monochromatic certificate"])
    cyc = rep.cycles
    d = cyc.pi.order()
    k = len(rep.verdict.certificate.cycle) // 2
    p = rep.periods
    head = (f"C1={len(cyc.c1)} C2={len(cyc.c2)} d={d} k={k} "
            f"smooth={_yn(p.is_smooth)} coprime={_yn(p.has_coprime_cycles)}")
    fmt = lambda c: " ".join(f"({v},{q})" for v, q in c)
    data = {"c1": [[v, str(q)] for v, q in cyc.c1], "c2": [[v, str(q)] for v, q in cyc.c2],
            "pi": str(cyc.pi), "d": d, "k": k, "colours": list(cyc.colours),
            "smooth": p.is_smooth, "periods": list(p.periods),
            "coprime": p.has_coprime_cycles, "loops": list(p.loops)}
    detail = [f"pi = {cyc.pi} of order {d}, colours Δ{cyc.colours[0]}/Δ{cyc.colours[1]}",
              f"C1 (length {len(cyc.c1)}): {fmt(cyc.c1)}",
              f"C2 (length {len(cyc.c2)}): {fmt(cyc.c2)}",
              f"indicator digraph: {rep.indicator.n} vertices, {len(rep.indicator.arcs)} arcs, "
              f"SCC periods {list(p.periods)}, loops {list(p.loops)}"]
    return Report(0, head, data, detail)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    parser = argparse.ArgumentParser(prog="edgeswitch", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *positional, help=None):
        p = sub.add_parser(name, parents=[common], help=help)
        for a in positional:
            p.add_argument(a)
        p.set_defaults(func=func)
        return p

    add("group-info", cmd_group_info, "group", help="group order, transitivity, blocks")
    add("abelianize", cmd_abelianize, "group", "graph", help="Abelianized graph and block table")
    add("switch", cmd_switch, "group", "graph", "sequence", help="apply a switch sequence")
    add("equiv", cmd_equiv, "group", "graph_a", "graph_b", help="switch equivalence")
    add("mono", cmd_mono, "group", "graph", help="switch to a single (block) colour")
    add("switchgraph", cmd_switchgraph, "group", "graph", help="switch graph (Abelian groups)")
    p = add("decide", cmd_decide, "group", "graph_g", "graph_h",
            help="decide a switchable homomorphism")
    p.add_argument("--witness", metavar="OUT")
    p.add_argument("--oracle", action="store_true", help="use exhaustive switch-class search")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    add("check", cmd_check, "group", "graph_g", "graph_h", "witness", help="verify a witness")
    p = add("classify", cmd_classify, "group", "graph_h", help="classify a target")
    p.add_argument("--certificate", metavar="OUT")
    p = sub.add_parser("indicator", parents=[common], help="2-path indicator digraph")
    p.add_argument("graph")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.set_defaults(func=cmd_indicator)
    add("thm7", cmd_thm7, "group", "graph_h", help="alternating cycles and indicator periods")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except (GraphError, GroupError, CapExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(report.render(args.format))
    return report.code


if __name__ == "__main__":
    sys.exit(main())
