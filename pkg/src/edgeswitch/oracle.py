"""Brute-force references: switch classes by exhaustive closure.

Nothing here uses regularity, spanning trees, Abelianization or switch
graphs, so these results can cross-check the rest of the package.
Colourings are encoded as integers, base ``m`` over the canonical edge order
(digit ``k`` is ``colour(edge k) - 1``).
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .coloured_graph import EdgeColouredGraph
from .homomorphism import Witness
from .perm_groups import Permutation, PermGroup
from .switching import CycleKind, cycle_order

DEFAULT_CAP = 2_000_000


class CapExceeded(RuntimeError):
    """The switch class has more colourings than the configured cap."""


def encode(colours, m: int) -> int:
    s = 0
    for c in reversed(colours):
        s = s * m + (c - 1)
    return s


def decode(state: int, m: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        state, d = divmod(state, m)
        out.append(d + 1)
    return tuple(out)


@dataclass(eq=False)
class SwitchClass:
    """Every colouring reachable from ``start`` by switches."""

    graph: EdgeColouredGraph
    start: int
    parent: dict[int, tuple[int, int, Permutation] | None]

    def __len__(self):
        return len(self.parent)

    def __contains__(self, colours) -> bool:
        return encode(colours, self.graph.m) in self.parent

    def colourings(self):
        g = self.graph
        for s in self.parent:
            yield decode(s, g.m, len(g.edges))

    def sequence_to(self, colours) -> list[tuple[int, Permutation]]:
        """Switches from the start colouring to ``colours`` (a class member)."""
        s = encode(colours, self.graph.m)
        steps = []
        while self.parent[s] is not None:
            prev, v, p = self.parent[s]
            steps.append((v, p))
            s = prev
        return steps[::-1]


def enumerate_switch_class(g: EdgeColouredGraph, group: PermGroup,
                           cap: int = DEFAULT_CAP) -> SwitchClass:
    """Breadth-first closure of ``g``'s colouring under single switches.

    Closing under the generators at every vertex gives the same set as
    closing under all elements.  Raises :class:`CapExceeded` instead of
    truncating.
    """
    m = g.m
    weights = [m ** k for k in range(len(g.edges))]
    moves = []
    for v in range(g.n):
        ks = g.incident[v]
        if ks:
            for p in group.generators:
                moves.append((v, p, [(weights[k], k) for k in ks]))
    start = encode(g.colours, m)
    parent: dict = {start: None}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for v, p, ws in moves:
            t = s
            img = p.image
            for w, _ in ws:
                d = (s // w) % m
                t += (img[d] - 1 - d) * w
            if t not in parent:
                parent[t] = (s, v, p)
                if len(parent) > cap:
                    raise CapExceeded(f"switch class exceeds {cap} colourings")
                queue.append(t)
    return SwitchClass(g, start, parent)


def brute_witness(g: EdgeColouredGraph, h: EdgeColouredGraph, group: PermGroup,
                  cap: int = DEFAULT_CAP) -> Witness | None:
    """Try every vertex map whose induced colouring lies in g's switch class."""
    cls = enumerate_switch_class(g, group, cap)
    for f in itertools.product(range(h.n), repeat=g.n):
        colours = []
        for u, v, _ in g.edges:
            c = h.colour(f[u], f[v])
            if c is None:
                break
            colours.append(c)
        else:
            if colours in cls:
                return Witness(tuple(cls.sequence_to(colours)), tuple(f))
    return None


def brute_decide(g: EdgeColouredGraph, h: EdgeColouredGraph, group: PermGroup,
                 cap: int = DEFAULT_CAP) -> bool:
    return brute_witness(g, h, group, cap) is not None


def monochromatic_colours(cls: SwitchClass) -> list[int]:
    """Colours c such that the all-c colouring is in the class."""
    g = cls.graph
    return [c for c in range(1, g.m + 1) if [c] * len(g.edges) in cls]


def oracle_cycle_kind(c: EdgeColouredGraph, group: PermGroup) -> CycleKind:
    order = cycle_order(c)
    if len(order) % 2:
        return CycleKind.MONO_ODD
    cls = enumerate_switch_class(c, group)
    return CycleKind.MONO_EVEN if monochromatic_colours(cls) else CycleKind.NEARLY_MONO_EVEN
