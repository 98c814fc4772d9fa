"""Target classification for switchable homomorphism problems.

A target ``h`` gives a polynomial problem when it is edgeless, or bipartite
with an Abelianized graph that switches to a single colour.  Otherwise it
is NP-complete, and the classifier returns a structural certificate: an odd
cycle, or a fundamental cycle of the Abelianized target that normalizes to
a nearly monochromatic cycle.  The hardness machinery (2-path indicator
digraph, smoothness, SCC periods, and the two alternating cycles in the
switch graph) is provided for inspecting those certificates.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from .coloured_graph import EdgeColouredGraph, abelianize_graph, structure
from .homomorphism import Witness
from .perm_groups import GroupError, Permutation, PermGroup, abelianization
from .switch_graph import SwitchGraph, build_switch_graph
from .switching import (
    Switch,
    apply_sequence,
    can_switch_monochromatic,
    lift_quotient_switching,
    normalize_spanning_forest,
    per_vertex_product,
)

POLYNOMIAL = "POLYNOMIAL"
NP_COMPLETE = "NP-COMPLETE"


@dataclass(frozen=True)
class OddCycleCertificate:
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class NearlyMonoCertificate:
    """A nearly monochromatic cycle of the Abelianized target.

    After ``sequence`` (quotient elements, on the Abelianized target) every
    edge of the tree path ``cycle`` has block colour ``colours[0]`` and the
    closing co-tree edge has block colour ``colours[1]``.
    """

    cycle: tuple[int, ...]
    cotree_edge: tuple[int, int]
    colours: tuple[int, int]
    sequence: tuple[Switch, ...]


@dataclass(frozen=True)
class Verdict:
    kind: str  # POLYNOMIAL or NP_COMPLETE
    reason: str  # edgeless, mono-bipartite, odd-cycle, nearly-monochromatic
    colour: int | None = None  # block colour of the monochromatic form
    sequence: tuple[Switch, ...] = ()
    certificate: OddCycleCertificate | NearlyMonoCertificate | None = None

    @property
    def is_polynomial(self) -> bool:
        return self.kind == POLYNOMIAL

    def headline(self) -> str:
        if self.reason == "mono-bipartite":
            return f"{POLYNOMIAL} mono-bipartite (Δ{self.colour})"
        if self.reason == "odd-cycle":
            return f"{NP_COMPLETE} odd-cycle ({','.join(map(str, self.certificate.cycle))})"
        if self.reason == "nearly-monochromatic":
            k, l = self.certificate.colours
            return f"{NP_COMPLETE} nearly-monochromatic (Δ{k},Δ{l})"
        return f"{self.kind} {self.reason}"


def _check_group(h: EdgeColouredGraph, group: PermGroup, what: str):
    group.require_transitive(what)
    if group.degree != h.m:
        raise GroupError("graph colour count differs from group degree")


def classify_target(h: EdgeColouredGraph, group: PermGroup) -> Verdict:
    _check_group(h, group, "target classification")
    if not h.edges:
        return Verdict(POLYNOMIAL, "edgeless")
    st = structure(h)
    if not st.is_bipartite:
        return Verdict(NP_COMPLETE, "odd-cycle", certificate=OddCycleCertificate(st.odd_cycle))
    ab = abelianization(group)
    hab = abelianize_graph(h, ab.blocks)
    mono = can_switch_monochromatic(hab, ab.quotient)
    if mono is not None:
        colour, seq = mono
        return Verdict(POLYNOMIAL, "mono-bipartite", colour, tuple(seq))
    assign, switched, bad = normalize_spanning_forest(hab, ab.quotient, 1)
    u, v = bad[0]
    cycle = tuple(st.forest.fundamental_cycle(u, v))
    cert = NearlyMonoCertificate(cycle, (u, v), (1, switched.colour(u, v)),
                                 tuple((x, p) for x, p in enumerate(assign)
                                       if not p.is_identity()))
    return Verdict(NP_COMPLETE, "nearly-monochromatic", certificate=cert)


def replay_certificate(h: EdgeColouredGraph, group: PermGroup, verdict: Verdict) -> bool:
    """Independently re-check the evidence carried by a verdict."""
    cert = verdict.certificate
    if verdict.reason == "edgeless":
        return not h.edges
    if isinstance(cert, OddCycleCertificate):
        cyc = cert.cycle
        return (len(cyc) % 2 == 1 and len(set(cyc)) == len(cyc) and
                all(h.has_edge(cyc[s], cyc[(s + 1) % len(cyc)]) for s in range(len(cyc))))
    ab = abelianization(group)
    hab = abelianize_graph(h, ab.blocks)
    if verdict.reason == "mono-bipartite":
        if any(p not in ab.quotient for _, p in verdict.sequence):
            return False
        return (structure(h).is_bipartite and
                apply_sequence(hab, verdict.sequence).is_monochromatic(verdict.colour))
    if isinstance(cert, NearlyMonoCertificate):
        if any(p not in ab.quotient for _, p in cert.sequence):
            return False
        sw = apply_sequence(hab, cert.sequence)
        cyc = cert.cycle
        k, l = cert.colours
        path_ok = all(sw.colour(cyc[s], cyc[s + 1]) == k for s in range(len(cyc) - 1))
        u, v = cert.cotree_edge
        return (len(cyc) % 2 == 0 and len(set(cyc)) == len(cyc) and path_ok and
                {u, v} == {cyc[0], cyc[-1]} and k != l and sw.colour(u, v) == l)
    return False


def solve_mono_bipartite_target(g: EdgeColouredGraph, group: PermGroup, colour: int,
                                verdict: Verdict | None = None) -> Witness | None:
    """Decide ``g -> K2^colour`` up to switching and return a full witness.

    Pass the target's verdict to have misuse on a hard target rejected.
    The witness maps ``g`` onto the edge ``0-1`` of the K2 target.
    """
    group.require_transitive("monochromatic-bipartite solver")
    if verdict is not None and not (verdict.is_polynomial and verdict.reason == "mono-bipartite"):
        raise GroupError("target is not a monochromatic-bipartite polynomial case")
    if g.m != group.degree or not 1 <= colour <= g.m:
        raise GroupError("colour or graph does not match the group degree")
    st = structure(g)
    if not st.is_bipartite:
        return None
    ab = abelianization(group)
    quotient = ab.quotient
    gab = abelianize_graph(g, ab.blocks)
    mono = can_switch_monochromatic(gab, quotient)
    if mono is None:
        return None
    achieved, seq = mono
    assign = per_vertex_product(seq, g.n, quotient.identity)
    want = ab.blocks.label(colour)
    if achieved != want:
        fix = quotient.transporter(achieved, want)
        assign = [fix * p if st.side[v] == 0 else p for v, p in enumerate(assign)]
    seq = lift_quotient_switching(g, ab, assign, [colour] * len(g.edges))
    return Witness(tuple(seq), st.side)


# -- indicator construction and periods --------------------------------------

@dataclass(frozen=True)
class IndicatorDigraph:
    n: int
    arcs: tuple[tuple[int, int], ...]

    def successors(self) -> list[list[int]]:
        succ: list[list[int]] = [[] for _ in range(self.n)]
        for x, y in self.arcs:
            succ[x].append(y)
        return succ

    @property
    def loops(self) -> list[int]:
        return [x for x, y in self.arcs if x == y]


def indicator_construction(s: EdgeColouredGraph, i: int, j: int) -> IndicatorDigraph:
    """Arc ``x -> y`` whenever some ``z`` has ``xz`` of colour i and ``zy`` of colour j."""
    for c in (i, j):
        if not 1 <= c <= s.m:
            raise GroupError(f"colour {c} outside 1..{s.m}")
    arcs = set()
    for z in range(s.n):
        ins = [x for x, c in s.adjacency[z] if c == i]
        outs = [y for y, c in s.adjacency[z] if c == j]
        arcs.update((x, y) for x in ins for y in outs)
    return IndicatorDigraph(s.n, tuple(sorted(arcs)))


def serialize_digraph(d: IndicatorDigraph) -> str:
    return f"digraph {d.n}\n" + "".join(f"{x} {y}\n" for x, y in d.arcs)


@dataclass(frozen=True)
class PeriodReport:
    is_smooth: bool
    components: tuple[tuple[int, ...], ...]  # SCCs containing an arc
    periods: tuple[int, ...]
    loops: tuple[int, ...]

    @property
    def has_coprime_cycles(self) -> bool:
        return 1 in self.periods


def _scc_period(comp: set[int], succ: list[list[int]]) -> int:
    # BFS levels from one vertex; the period is the gcd of level differences
    # over arcs inside the component.
    root = min(comp)
    level = {root: 0}
    queue = deque([root])
    period = 0
    while queue:
        x = queue.popleft()
        for y in succ[x]:
            if y not in comp:
                continue
            if y not in level:
                level[y] = level[x] + 1
                queue.append(y)
            else:
                period = math.gcd(period, level[x] + 1 - level[y])
    return period


def smooth_and_periods(d: IndicatorDigraph, relevant=None) -> PeriodReport:
    """Smoothness over ``relevant`` vertices (default all) and SCC periods."""
    succ = d.successors()
    indeg = [0] * d.n
    for _, y in d.arcs:
        indeg[y] += 1
    verts = range(d.n) if relevant is None else relevant
    smooth = all(indeg[x] > 0 and succ[x] for x in verts)
    dg = nx.DiGraph()
    dg.add_nodes_from(range(d.n))
    dg.add_edges_from(d.arcs)
    comps, periods = [], []
    for comp in nx.strongly_connected_components(dg):
        if len(comp) == 1:
            (x,) = comp
            if x not in succ[x]:
                continue
        comps.append(tuple(sorted(comp)))
    comps.sort()
    for comp in comps:
        periods.append(_scc_period(set(comp), succ))
    return PeriodReport(smooth, tuple(comps), tuple(periods), tuple(d.loops))


# -- alternating cycles in the switch graph -----------------------------------

@dataclass(frozen=True)
class AlternatingCycles:
    switch_graph: SwitchGraph = field(repr=False)
    pi: Permutation
    colours: tuple[int, int]
    c1: tuple[tuple[int, Permutation], ...]
    c2: tuple[tuple[int, Permutation], ...]

    def ids(self, cyc) -> list[int]:
        return [self.switch_graph.vertex_id(v, p) for v, p in cyc]

    def directed_lengths(self) -> tuple[int, int]:
        return len(self.c1) // 2, len(self.c2) // 2


def _check_alternating(sw: SwitchGraph, cyc, i: int, j: int) -> bool:
    ids = [sw.vertex_id(v, p) for v, p in cyc]
    if len(set(ids)) != len(ids):
        return False
    for s in range(len(ids)):
        want = i if s % 2 == 0 else j
        if sw.graph.colour(ids[s], ids[(s + 1) % len(ids)]) != want:
            return False
    return True


def build_theorem7_cycles(h: EdgeColouredGraph, group: PermGroup, pi: Permutation,
                          cycle) -> AlternatingCycles:
    """The two i/j-alternating cycles through ``(v0, e)`` in the switch graph.

    ``cycle`` lists v0..v_{2k-1}; its path edges have colour i and the
    closing edge ``v0 v_{2k-1}`` has colour ``j = pi(i)``.  With d the order
    of ``pi`` the first cycle has length 2d and the second 2d(k-1)+2.
    Both are checked against the materialized switch graph.
    """
    if not group.is_abelian:
        raise GroupError("alternating cycles need an Abelian group")
    if pi not in group:
        raise GroupError(f"{pi} is not in the group")
    cyc = list(cycle)
    if len(cyc) < 4 or len(cyc) % 2 or len(set(cyc)) != len(cyc):
        raise GroupError("need an even cycle with at least 4 distinct vertices")
    i = h.colour(cyc[0], cyc[1])
    if i is None or any(h.colour(cyc[s], cyc[s + 1]) != i for s in range(len(cyc) - 1)):
        raise GroupError("cycle path edges must exist and share one colour")
    j = h.colour(cyc[-1], cyc[0])
    if j is None or j == i:
        raise GroupError("closing edge must exist with a colour different from the path")
    if pi(i) != j:
        raise GroupError(f"{pi} does not send colour {i} to {j}")
    d = pi.order()
    k = len(cyc) // 2
    powers = [pi ** t for t in range(d)]
    e = powers[0]

    def power(t):
        return powers[t % d]

    v0, v1 = cyc[0], cyc[1]
    c1 = []
    for l in range(d):
        c1 += [(v0, power(l)), (v1, power(-l))]

    def path(t):
        vt, vt1 = cyc[t], cyc[t + 1]
        p = [(vt, e)]
        for l in range(1, d):
            p += [(vt1, power(l)), (vt, power(-l))]
        p += [(vt1, e), (cyc[t + 2], e)]
        return p

    c2 = [(v0, e)]
    for t in range(1, 2 * k - 2, 2):
        p = path(t)
        c2 += p[1:] if c2[-1] == p[0] else p
    if c2[-1] != (cyc[-1], e):
        c2.append((cyc[-1], e))

    sw = build_switch_graph(h, group)
    result = AlternatingCycles(sw, pi, (i, j), tuple(c1), tuple(c2))
    if len(c1) != 2 * d or len(c2) != 2 * d * (k - 1) + 2:
        raise AssertionError("alternating cycle lengths disagree with the construction")
    if not (_check_alternating(sw, c1, i, j) and _check_alternating(sw, c2, i, j)):
        raise AssertionError("constructed cycle is not an alternating cycle of the switch graph")
    return result


@dataclass(frozen=True)
class HardnessReport:
    verdict: Verdict
    switched: EdgeColouredGraph  # Abelianized target after the certificate switches
    quotient: PermGroup
    cycles: AlternatingCycles
    indicator: IndicatorDigraph
    periods: PeriodReport


def hardness_report(h: EdgeColouredGraph, group: PermGroup) -> HardnessReport | None:
    """Alternating cycles and indicator periods for a nearly-monochromatic target.

    Returns None when the target has no nearly-monochromatic certificate.
    """
    verdict = classify_target(h, group)
    cert = verdict.certificate
    if not isinstance(cert, NearlyMonoCertificate):
        return None
    ab = abelianization(group)
    switched = apply_sequence(abelianize_graph(h, ab.blocks), cert.sequence)
    i, j = cert.colours
    pi = ab.quotient.transporter(i, j)
    cycles = build_theorem7_cycles(switched, ab.quotient, pi, cert.cycle)
    sw = cycles.switch_graph
    ind = indicator_construction(sw.graph, i, j)
    relevant = [x for x in range(sw.graph.n) if switched.degree(sw.label(x)[0]) > 0]
    periods = smooth_and_periods(ind, relevant)
    return HardnessReport(verdict, switched, ab.quotient, cycles, ind, periods)
