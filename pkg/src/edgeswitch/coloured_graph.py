"""Simple graphs whose edges carry colours from {1..m}.

Vertices are ``0..n-1`` and colours are 1-based.  Edges are stored as
``(u, v, c)`` with ``u < v`` in sorted order; this order is the canonical
edge order used for colour vectors everywhere in the package.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .perm_groups import BlockSystem


class GraphError(ValueError):
    """Invalid graph data (loops, repeated edges, bad colours, bad syntax)."""


@dataclass(frozen=True)
class EdgeColouredGraph:
    n: int
    m: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.n < 0 or self.m < 1:
            raise GraphError(f"need n >= 0 and m >= 1, got n={self.n}, m={self.m}")
        norm = []
        seen = set()
        for u, v, c in self.edges:
            u, v, c = int(u), int(v), int(c)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {u}-{v} has a vertex outside 0..{self.n - 1}")
            if not 1 <= c <= self.m:
                raise GraphError(f"edge {u}-{v} has colour {c} outside 1..{self.m}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key[0]}-{key[1]}")
            seen.add(key)
            norm.append((key[0], key[1], c))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @classmethod
    def from_colours(cls, n: int, m: int, pairs: Sequence[tuple[int, int]],
                     colours: Sequence[int]) -> "EdgeColouredGraph":
        return cls(n, m, tuple((u, v, c) for (u, v), c in zip(pairs, colours)))

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, v, _ in self.edges)

    @cached_property
    def colours(self) -> tuple[int, ...]:
        return tuple(c for _, _, c in self.edges)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {p: k for k, p in enumerate(self.pairs)}

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident with each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for k, (u, v, _) in enumerate(self.edges):
            inc[u].append(k)
            inc[v].append(k)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """``adjacency[v]`` lists ``(neighbour, colour)`` by ascending neighbour."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for u, v, c in self.edges:
            adj[u].append((v, c))
            adj[v].append((u, c))
        return tuple(tuple(sorted(a)) for a in adj)

    def colour(self, u: int, v: int) -> int | None:
        k = self.edge_index.get((min(u, v), max(u, v)))
        return None if k is None else self.edges[k][2]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    def with_colours(self, colours: Sequence[int]) -> "EdgeColouredGraph":
        if len(colours) != len(self.edges):
            raise GraphError("colour vector length does not match edge count")
        return EdgeColouredGraph.from_colours(self.n, self.m, self.pairs, colours)

    def same_underlying(self, other: "EdgeColouredGraph") -> bool:
        return self.n == other.n and self.pairs == other.pairs

    def is_monochromatic(self, colour: int | None = None) -> bool:
        cs = set(self.colours)
        if colour is None:
            return len(cs) <= 1
        return cs <= {colour}


def k2(colour: int, m: int) -> EdgeColouredGraph:
    """The single edge ``0-1`` of the given colour."""
    return EdgeColouredGraph(2, m, ((0, 1, colour),))


def cycle_graph(colours: Sequence[int], m: int) -> EdgeColouredGraph:
    """Cycle ``0-1-...-(n-1)-0``; ``colours[s]`` colours edge ``s -> s+1``."""
    n = len(colours)
    return EdgeColouredGraph(n, m, tuple((s, (s + 1) % n, c) for s, c in enumerate(colours)))


# -- file format -------------------------------------------------------------

def parse_graph(text: str) -> EdgeColouredGraph:
    """Parse the ``ecg <m> <n>`` format; errors carry the line number."""
    header = None
    edges = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 3 or parts[0] != "ecg":
                raise GraphError(f"line {lineno}: expected 'ecg <m> <n>'")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise GraphError(f"line {lineno}: malformed header") from None
            if header[0] < 1 or header[1] < 0:
                raise GraphError(f"line {lineno}: need m >= 1 and n >= 0")
            continue
        if len(parts) != 3:
            raise GraphError(f"line {lineno}: expected '<u> <v> <c>'")
        try:
            u, v, c = (int(p) for p in parts)
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer field") from None
        m, n = header
        if u == v:
            raise GraphError(f"line {lineno}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if not 1 <= c <= m:
            raise GraphError(f"line {lineno}: colour {c} out of range 1..{m}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"line {lineno}: duplicate edge {key[0]}-{key[1]} "
                             f"(first on line {seen[key]})")
        seen[key] = lineno
        edges.append((u, v, c))
    if header is None:
        raise GraphError("missing 'ecg <m> <n>' header")
    m, n = header
    return EdgeColouredGraph(n, m, tuple(edges))


def serialize_graph(g: EdgeColouredGraph, comments: Iterable[str] = ()) -> str:
    lines = [f"ecg {g.m} {g.n}"]
    lines += [f"# {c}" for c in comments]
    lines += [f"{u} {v} {c}" for u, v, c in g.edges]
    return "\n".join(lines) + "\n"


# -- structure ---------------------------------------------------------------

@dataclass(frozen=True)
class SpanningForest:
    """BFS spanning forest; roots are the minimum vertex of each component."""

    roots: tuple[int, ...]
    parent: tuple[int, ...]  # -1 at roots
    depth: tuple[int, ...]
    component: tuple[int, ...]  # component index per vertex
    order: tuple[int, ...]  # BFS visiting order
    tree_edges: tuple[tuple[int, int], ...]
    cotree_edges: tuple[tuple[int, int], ...]

    def path_to_root(self, v: int) -> list[int]:
        path = [v]
        while self.parent[path[-1]] >= 0:
            path.append(self.parent[path[-1]])
        return path

    def tree_path(self, u: int, v: int) -> list[int]:
        """Vertices of the tree path from ``u`` to ``v``."""
        if self.component[u] != self.component[v]:
            raise GraphError(f"{u} and {v} lie in different components")
        pu, pv = self.path_to_root(u), self.path_to_root(v)
        on_v = set(pv)
        up = []
        for x in pu:
            up.append(x)
            if x in on_v:
                lca = x
                break
        down = pv[:pv.index(lca)]
        return up + down[::-1]

    def fundamental_cycle(self, u: int, v: int) -> list[int]:
        """Tree path from ``u`` to ``v``; the co-tree edge ``uv`` closes it."""
        return self.tree_path(u, v)

    def component_vertices(self, k: int) -> list[int]:
        return [v for v in self.order if self.component[v] == k]


def spanning_forest(g: EdgeColouredGraph) -> SpanningForest:
    n = g.n
    parent = [-1] * n
    depth = [-1] * n
    comp = [-1] * n
    order, roots, tree = [], [], []
    for r in range(n):
        if depth[r] >= 0:
            continue
        roots.append(r)
        depth[r] = 0
        comp[r] = len(roots) - 1
        queue = deque([r])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y, _ in g.adjacency[x]:
                if depth[y] < 0:
                    depth[y] = depth[x] + 1
                    parent[y] = x
                    comp[y] = comp[r]
                    tree.append((min(x, y), max(x, y)))
                    queue.append(y)
    tree_set = set(tree)
    cotree = tuple(p for p in g.pairs if p not in tree_set)
    return SpanningForest(tuple(roots), tuple(parent), tuple(depth), tuple(comp),
                          tuple(order), tuple(sorted(tree)), cotree)


@dataclass(frozen=True)
class GraphStructure:
    is_bipartite: bool
    side: tuple[int, ...] | None  # 0/1 per vertex when bipartite
    odd_cycle: tuple[int, ...] | None  # vertex list when not bipartite
    forest: SpanningForest

    @property
    def parts(self) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        if self.side is None:
            return None
        return (tuple(v for v, s in enumerate(self.side) if s == 0),
                tuple(v for v, s in enumerate(self.side) if s == 1))


def structure(g: EdgeColouredGraph) -> GraphStructure:
    """Bipartition (or an explicit odd cycle) together with a spanning forest."""
    forest = spanning_forest(g)
    side = tuple(d % 2 for d in forest.depth)
    for u, v in forest.cotree_edges:
        if side[u] == side[v]:
            # Rotate the odd fundamental cycle to start at the common ancestor.
            path = forest.tree_path(u, v)
            top = min(range(len(path)), key=lambda k: forest.depth[path[k]])
            cyc = path[top::-1] + path[:top:-1]
            return GraphStructure(False, None, tuple(cyc), forest)
    return GraphStructure(True, side, None, forest)


def is_bipartite(g: EdgeColouredGraph) -> bool:
    return structure(g).is_bipartite


def abelianize_graph(g: EdgeColouredGraph, blocks: BlockSystem) -> EdgeColouredGraph:
    """Recolour each edge by the label of its colour's block."""
    if g.m != blocks.degree:
        raise GraphError(f"graph has {g.m} colours but the block system has degree "
                         f"{blocks.degree}")
    return EdgeColouredGraph(g.n, blocks.m_prime,
                             tuple((u, v, blocks.label(c)) for u, v, c in g.edges))
