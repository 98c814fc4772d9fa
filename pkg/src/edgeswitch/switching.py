"""Switching edge-coloured graphs at vertices.

A switch ``(v, p)`` replaces the colour ``i`` of every edge at ``v`` by
``p(i)``.  A switch sequence is a list of such pairs applied first to last.

For an Abelian transitive (hence regular) group, switching is determined by
one element per vertex, and along a tree each element is forced by its
parent's.  Everything here that searches for switches uses that fact; the
non-Abelian case is reduced to it through the block quotient and lifted
back with single-edge commutator repairs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .coloured_graph import (
    EdgeColouredGraph,
    GraphError,
    abelianize_graph,
    spanning_forest,
)
from .perm_groups import (
    Abelianization,
    GroupError,
    Permutation,
    PermGroup,
    abelianization,
    commutator_subgroup,
    commutator_words,
)

Switch = tuple[int, Permutation]
SwitchSequence = list[Switch]


def _check_switch(g: EdgeColouredGraph, v: int, p: Permutation):
    if not 0 <= v < g.n:
        raise GraphError(f"switch at vertex {v} outside 0..{g.n - 1}")
    if p.degree != g.m:
        raise GroupError(f"switch permutation {p} has degree {p.degree}, graph has {g.m} colours")


def switch_vertex(g: EdgeColouredGraph, v: int, p: Permutation) -> EdgeColouredGraph:
    return apply_sequence(g, [(v, p)])


def apply_sequence(g: EdgeColouredGraph, seq: Iterable[Switch]) -> EdgeColouredGraph:
    colours = list(g.colours)
    for v, p in seq:
        _check_switch(g, v, p)
        img = p.image
        for k in g.incident[v]:
            colours[k] = img[colours[k] - 1]
    return g.with_colours(colours)


def invert_sequence(seq: Sequence[Switch]) -> SwitchSequence:
    return [(v, p.inverse()) for v, p in reversed(seq)]


def assignment_to_sequence(assign: Sequence[Permutation]) -> SwitchSequence:
    """One switch per vertex, skipping identities, in vertex order."""
    return [(v, p) for v, p in enumerate(assign) if not p.is_identity()]


def parse_sequence(text: str, m: int) -> SwitchSequence:
    seq = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        try:
            v = int(head)
            p = Permutation.parse(rest, m)
        except (ValueError, GroupError) as exc:
            raise GraphError(f"line {lineno}: bad switch line {raw!r} ({exc})") from None
        seq.append((v, p))
    return seq


def format_sequence(seq: Iterable[Switch]) -> str:
    return "".join(f"{v} {p}\n" for v, p in seq)


# -- propagation core (Abelian transitive groups) -----------------------------

def _propagate(g: EdgeColouredGraph, group: PermGroup, targets: Sequence[int],
               vertices: Sequence[int], parent: Sequence[int],
               root_element: Permutation, assign: list) -> bool:
    """Fill ``assign`` on one component so every edge gets its target colour.

    ``vertices`` is the component in BFS order (root first).  Each child's
    element is the unique one taking the parent-switched tree edge to its
    target; afterwards every edge of the component is checked.
    """
    root = vertices[0]
    assign[root] = root_element
    for x in vertices[1:]:
        p = parent[x]
        k = g.edge_index[(min(p, x), max(p, x))]
        assign[x] = group.transporter(assign[p](g.colours[k]), targets[k])
    for x in vertices:
        for k in g.incident[x]:
            u, v, c = g.edges[k]
            if u == x and assign[v](assign[u](c)) != targets[k]:
                return False
    return True


def _component_lists(g: EdgeColouredGraph):
    forest = spanning_forest(g)
    comps: list[list[int]] = [[] for _ in forest.roots]
    for v in forest.order:
        comps[forest.component[v]].append(v)
    return forest, comps


def _abelian_equivalence(g: EdgeColouredGraph, targets: Sequence[int],
                         group: PermGroup) -> list[Permutation] | None:
    """Per-vertex elements switching ``g`` onto colour vector ``targets``."""
    forest, comps = _component_lists(g)
    assign: list = [group.identity] * g.n
    for verts in comps:
        if not any(g.incident[v] for v in verts):
            continue
        if not any(_propagate(g, group, targets, verts, forest.parent, r, assign)
                   for r in group.elements):
            return None
    return assign


def normalize_spanning_forest(g: EdgeColouredGraph, group: PermGroup, colour: int = 1):
    """Switch every spanning-tree edge to ``colour``, roots unswitched.

    Returns ``(assignment, switched_graph, bad_cotree_edges)`` where the last
    item lists co-tree edges whose colour differs from ``colour`` afterwards.
    """
    group.require_abelian_transitive("tree normalization")
    forest = spanning_forest(g)
    assign: list = [group.identity] * g.n
    for x in forest.order:
        p = forest.parent[x]
        if p >= 0:
            c = g.colour(p, x)
            assign[x] = group.transporter(assign[p](c), colour)
    switched = apply_sequence(g, assignment_to_sequence(assign))
    bad = [(u, v) for u, v in forest.cotree_edges if switched.colour(u, v) != colour]
    return assign, switched, bad


def can_switch_monochromatic(g: EdgeColouredGraph, group: PermGroup
                             ) -> tuple[int, SwitchSequence] | None:
    """A colour and a switch sequence making ``g`` monochromatic, if any.

    ``group`` must be Abelian and transitive (apply this to the Abelianized
    graph for general groups).  Each component is tried against every colour
    and every root element; the smallest colour achievable in all components
    is returned.  Bipartite components achieve every colour, so for
    bipartite graphs the answer is decided by the colour-1 tree
    normalization alone.
    """
    group.require_abelian_transitive("monochromatic switching")
    if g.m != group.degree:
        raise GroupError("graph colour count differs from group degree")
    forest, comps = _component_lists(g)
    choices = set(range(1, g.m + 1))
    per_comp: list[dict[int, list]] = []
    for verts in comps:
        if not any(g.incident[v] for v in verts):
            per_comp.append({})
            continue
        found: dict[int, list] = {}
        for colour in sorted(choices):
            targets = [colour] * len(g.edges)
            assign: list = [group.identity] * g.n
            for r in group.elements:
                if _propagate(g, group, targets, verts, forest.parent, r, assign):
                    found[colour] = list(assign)
                    break
        choices &= set(found)
        if not choices:
            return None
        per_comp.append(found)
    colour = min(choices)
    final = [group.identity] * g.n
    for verts, found in zip(comps, per_comp):
        if found:
            for v in verts:
                final[v] = found[colour][v]
    return colour, assignment_to_sequence(final)


# -- cycles ------------------------------------------------------------------

class CycleKind(enum.Enum):
    MONO_EVEN = "i"
    NEARLY_MONO_EVEN = "ii"
    MONO_ODD = "iii"


@dataclass(frozen=True)
class CycleClass:
    kind: CycleKind
    order: tuple[int, ...]  # v0, v1, ..., v_{n-1} around the cycle
    colours: tuple[int, int]  # (i, j): path colour and closing-edge colour
    sequence: tuple[Switch, ...]  # realizes the normal form described by colours


def cycle_order(c: EdgeColouredGraph) -> list[int]:
    """Vertices of a cycle graph starting at 0 towards its smaller neighbour."""
    if c.n < 3 or len(c.edges) != c.n or any(c.degree(v) != 2 for v in range(c.n)):
        raise GraphError("graph is not a cycle")
    order = [0, c.adjacency[0][0][0]]
    while len(order) < c.n:
        prev, cur = order[-2], order[-1]
        nxt = [w for w, _ in c.adjacency[cur] if w != prev][0]
        if nxt == 0:
            break
        order.append(nxt)
    if len(order) != c.n or not c.has_edge(order[-1], 0):
        raise GraphError("graph is not a single cycle")
    return order


def classify_cycle(c: EdgeColouredGraph, group: PermGroup) -> CycleClass:
    """Trichotomy class of a cycle under an Abelian transitive group.

    Switches along the path v0..v_{n-1} make every path edge colour 1 with
    v0 unswitched; the closing edge then has some colour j.
    """
    group.require_abelian_transitive("cycle classification")
    if c.m != group.degree:
        raise GroupError("graph colour count differs from group degree")
    order = cycle_order(c)
    n = len(order)
    assign = [group.identity] * n
    for s in range(n - 1):
        col = c.colour(order[s], order[s + 1])
        assign[s + 1] = group.transporter(assign[s](col), 1)
    j = assign[n - 1](c.colour(order[n - 1], order[0]))
    if n % 2 == 0:
        kind = CycleKind.MONO_EVEN if j == 1 else CycleKind.NEARLY_MONO_EVEN
        colours = (1, j)
    else:
        kind = CycleKind.MONO_ODD
        if j != 1:
            pi = group.transporter(1, j)
            for s in range(1, n - 1, 2):
                assign[s] = pi * assign[s]
        colours = (j, j)
    seq = tuple((order[s], p) for s, p in enumerate(assign) if not p.is_identity())
    return CycleClass(kind, tuple(order), colours, seq)


# -- commutator repairs and the general case -----------------------------------

def commutator_repair_sequence(u: int, w: int, tau: Permutation, group: PermGroup) -> SwitchSequence:
    """Switches at ``u`` and ``w`` acting as ``tau`` on edge ``uw`` only."""
    seq: SwitchSequence = []
    for pi, phi in reversed(commutator_words(group).word(tau)):
        seq += [(w, phi.inverse()), (u, pi.inverse()), (w, phi), (u, pi)]
    return seq


def single_edge_recolour(g: EdgeColouredGraph, edge: tuple[int, int], tau: Permutation,
                         group: PermGroup) -> tuple[EdgeColouredGraph, SwitchSequence]:
    if tau not in commutator_subgroup(group):
        raise GroupError(f"{tau} is not in the commutator subgroup")
    u, w = edge
    if not g.has_edge(u, w):
        raise GraphError(f"{u}-{w} is not an edge")
    seq = commutator_repair_sequence(u, w, tau, group)
    return apply_sequence(g, seq), seq


def lift_quotient_switching(g: EdgeColouredGraph, ab: Abelianization,
                            assign: Sequence[Permutation],
                            targets: Sequence[int]) -> SwitchSequence:
    """Realize quotient-level switches on ``g`` so edges reach ``targets``.

    Each vertex is switched once by the representative of its quotient
    element; every edge then lies in the block of its target colour and is
    fixed by a commutator repair.
    """
    group = ab.group
    seq = [(v, ab.representative(q)) for v, q in enumerate(assign) if not q.is_identity()]
    mid = apply_sequence(g, seq)
    words = commutator_words(group)
    for k, (u, v, c) in enumerate(mid.edges):
        t = targets[k]
        if c == t:
            continue
        if not ab.blocks.same_block(c, t):
            raise AssertionError(f"edge {u}-{v}: colour {c} not in the block of {t}")
        seq += commutator_repair_sequence(u, v, words.repair_element(c, t), group)
    return seq


def _check_same_underlying(g: EdgeColouredGraph, h: EdgeColouredGraph):
    if not g.same_underlying(h) or g.m != h.m:
        raise GraphError("graphs do not share the same underlying graph and colour count")


def switch_equivalent(g: EdgeColouredGraph, h: EdgeColouredGraph, group: PermGroup
                      ) -> SwitchSequence | None:
    """A switch sequence taking ``g`` to ``h``, or None if none exists."""
    _check_same_underlying(g, h)
    if group.degree != g.m:
        raise GroupError("graph colour count differs from group degree")
    group.require_transitive("switch equivalence")
    if group.is_abelian:
        assign = _abelian_equivalence(g, h.colours, group)
        return None if assign is None else assignment_to_sequence(assign)
    ab = abelianization(group)
    gab = abelianize_graph(g, ab.blocks)
    hab = abelianize_graph(h, ab.blocks)
    assign = _abelian_equivalence(gab, hab.colours, ab.quotient)
    if assign is None:
        return None
    return lift_quotient_switching(g, ab, assign, h.colours)


def per_vertex_product(seq: Iterable[Switch], n: int, identity: Permutation
                       ) -> list[Permutation]:
    """Total switch applied at each vertex (later switches on the left)."""
    total = [identity] * n
    for v, p in seq:
        total[v] = p * total[v]
    return total


def relabel(g: EdgeColouredGraph, perm: Mapping[int, int] | Sequence[int]) -> EdgeColouredGraph:
    """Rename vertex ``v`` to ``perm[v]``."""
    return EdgeColouredGraph(g.n, g.m, tuple((perm[u], perm[v], c) for u, v, c in g.edges))
