"""Colour-preserving homomorphisms and switchable homomorphisms with witnesses."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .coloured_graph import EdgeColouredGraph, GraphError, abelianize_graph
from .perm_groups import GroupError, PermGroup, abelianization, max_commutator_word_length
from .switch_graph import build_switch_graph
from .switching import (
    Switch,
    apply_sequence,
    format_sequence,
    lift_quotient_switching,
    parse_sequence,
)


def _search_order(g: EdgeColouredGraph) -> list[int]:
    seen = [False] * g.n
    order = []
    for r in range(g.n):
        if seen[r]:
            continue
        seen[r] = True
        queue = deque([r])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y, _ in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return order


def find_hom(g: EdgeColouredGraph, h: EdgeColouredGraph) -> tuple[int, ...] | None:
    """Colour-preserving homomorphism ``g -> h`` by backtracking, or None.

    Vertices are assigned in BFS order from vertex 0 with candidates in
    ascending order, after an arc-consistency pass over the
    colour-compatible neighbourhoods; the search then forward-checks.
    """
    if g.m != h.m:
        raise GraphError(f"colour counts differ ({g.m} vs {h.m})")
    if g.n == 0:
        return ()
    if h.n == 0:
        return None
    # nbr[x][c]: colour-c neighbours of x in h
    nbr: list[dict[int, frozenset]] = []
    for x in range(h.n):
        by_colour: dict[int, set] = {}
        for y, c in h.adjacency[x]:
            by_colour.setdefault(c, set()).add(y)
        nbr.append({c: frozenset(s) for c, s in by_colour.items()})
    empty: frozenset = frozenset()

    domains = []
    for v in range(g.n):
        need = {c for _, c in g.adjacency[v]}
        domains.append({x for x in range(h.n) if all(c in nbr[x] for c in need)})

    # AC-3
    queue = deque((u, w, c) for u in range(g.n) for w, c in g.adjacency[u])
    while queue:
        u, w, c = queue.popleft()
        dw = domains[w]
        keep = {x for x in domains[u] if not nbr[x].get(c, empty).isdisjoint(dw)}
        if len(keep) != len(domains[u]):
            if not keep:
                return None
            domains[u] = keep
            queue.extend((z, u, cz) for z, cz in g.adjacency[u] if z != w)

    order = _search_order(g)
    f = [-1] * g.n

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for x in sorted(domains[v]):
            trail = []
            ok = True
            for w, c in g.adjacency[v]:
                if f[w] >= 0:
                    continue
                allowed = nbr[x].get(c, empty)
                dw = domains[w]
                if not dw <= allowed:
                    trail.append((w, dw))
                    domains[w] = dw & allowed
                    if not domains[w]:
                        ok = False
                        break
            if ok:
                f[v] = x
                if extend(k + 1):
                    return True
                f[v] = -1
            for w, dw in reversed(trail):
                domains[w] = dw
        return False

    return tuple(f) if extend(0) else None


def is_homomorphism(g: EdgeColouredGraph, h: EdgeColouredGraph, f: Sequence[int]) -> bool:
    if len(f) != g.n or any(not (0 <= x < h.n) for x in f):
        return False
    return all(h.colour(f[u], f[v]) == c for u, v, c in g.edges)


@dataclass(frozen=True)
class Witness:
    """Switches for the source graph and a homomorphism of the result."""

    sequence: tuple[Switch, ...]
    mapping: tuple[int, ...]


def witness_length_bound(g: EdgeColouredGraph, group: PermGroup) -> int:
    """One quotient switch per vertex plus one commutator repair per edge."""
    return g.n + 4 * max_commutator_word_length(group) * len(g.edges)


def decide_switch_hom(g: EdgeColouredGraph, h: EdgeColouredGraph,
                      group: PermGroup) -> Witness | None:
    """Decide whether ``g`` switches to a graph mapping into ``h``.

    Works at the block-quotient level: a plain homomorphism of the
    Abelianized ``g`` into the switch graph of the Abelianized ``h`` gives,
    for each vertex u sent to ``(x, q)``, the quotient switch ``q^-1`` at u and
    the image ``x``.  The quotient switches are then lifted to ``group`` with
    commutator repairs on individual edges.
    """
    if not (g.m == h.m == group.degree):
        raise GroupError("graphs and group must share the same number of colours")
    group.require_transitive("switchable homomorphism")
    ab = abelianization(group)
    gab = abelianize_graph(g, ab.blocks)
    hab = abelianize_graph(h, ab.blocks)
    sw = build_switch_graph(hab, ab.quotient)
    f = find_hom(gab, sw.graph)
    if f is None:
        return None
    labels = [sw.label(x) for x in f]
    mapping = tuple(x for x, _ in labels)
    assign = [q.inverse() for _, q in labels]
    targets = [h.colour(mapping[u], mapping[v]) for u, v, _ in g.edges]
    seq = lift_quotient_switching(g, ab, assign, targets)
    return Witness(tuple(seq), mapping)


def check_witness(g: EdgeColouredGraph, h: EdgeColouredGraph, group: PermGroup,
                  w: Witness) -> bool:
    """Replay the witness; malformed witnesses are rejected, never raised."""
    try:
        if g.m != h.m or group.degree != g.m:
            return False
        for v, p in w.sequence:
            if not 0 <= v < g.n or p not in group:
                return False
        switched = apply_sequence(g, w.sequence)
    except (GraphError, GroupError, TypeError, ValueError):
        return False
    return is_homomorphism(switched, h, w.mapping)


def format_witness(w: Witness) -> str:
    return format_sequence(w.sequence) + "\n" + "".join(
        f"map {u} {x}\n" for u, x in enumerate(w.mapping))


def parse_witness(text: str, m: int) -> Witness:
    seq_lines, mapping = [], {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("map"):
            parts = line.split()
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: expected 'map <u> <x>'")
            try:
                u, x = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphError(f"line {lineno}: non-integer map entry") from None
            if u in mapping:
                raise GraphError(f"line {lineno}: vertex {u} mapped twice")
            mapping[u] = x
        else:
            if mapping:
                raise GraphError(f"line {lineno}: switch line after map lines")
            seq_lines.append(raw)
    seq = parse_sequence("\n".join(seq_lines), m)
    if sorted(mapping) != list(range(len(mapping))):
        raise GraphError("map lines must cover vertices 0..n-1")
    return Witness(tuple(seq), tuple(mapping[u] for u in range(len(mapping))))
