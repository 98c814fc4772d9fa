"""The switch graph of an edge-coloured graph under an Abelian group.

Vertices are pairs ``(v, p)`` with ``p`` in the group.  A base edge ``xy`` of
colour ``i`` lifts to the edge ``(x, p)(y, q)`` of colour ``p(q(i))`` for every
pair ``p, q``.  Flat vertex ids are ``v * |group| + index(p)`` where
``index`` is the canonical enumeration (identity first).
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloured_graph import EdgeColouredGraph, serialize_graph
from .perm_groups import GroupError, Permutation, PermGroup


@dataclass(frozen=True, eq=False)
class SwitchGraph:
    base: EdgeColouredGraph
    group: PermGroup
    graph: EdgeColouredGraph

    @property
    def elements(self) -> tuple[Permutation, ...]:
        return self.group.elements

    def vertex_id(self, v: int, p: Permutation) -> int:
        return v * self.group.order + self.group.index[p]

    def label(self, x: int) -> tuple[int, Permutation]:
        v, k = divmod(x, self.group.order)
        return v, self.group.elements[k]

    def identity_copy(self) -> list[int]:
        """Flat ids of the vertices ``(v, e)`` in base-vertex order."""
        return [self.vertex_id(v, self.group.identity) for v in range(self.base.n)]


def build_switch_graph(h: EdgeColouredGraph, group: PermGroup) -> SwitchGraph:
    if not group.is_abelian:
        raise GroupError("switch graphs are defined for Abelian groups only")
    if group.degree != h.m:
        raise GroupError("graph colour count differs from group degree")
    elems = group.elements
    k = len(elems)
    edges = []
    for x, y, c in h.edges:
        for r, p in enumerate(elems):
            pc = p.image
            for s, q in enumerate(elems):
                edges.append((x * k + r, y * k + s, pc[q(c) - 1]))
    return SwitchGraph(h, group, EdgeColouredGraph(h.n * k, h.m, tuple(edges)))


def serialize_switch_graph(sw: SwitchGraph) -> str:
    header = ["switch graph vertex labels: <id> <base vertex> <group element>"]
    header += [f"{x} {v} {p}" for x in range(sw.graph.n) for v, p in [sw.label(x)]]
    return serialize_graph(sw.graph, comments=header)
