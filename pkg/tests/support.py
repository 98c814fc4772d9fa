"""Shared groups and random instance generators for the test suite."""

import itertools
import random

from edgeswitch.coloured_graph import EdgeColouredGraph
from edgeswitch.perm_groups import Permutation, generate_group


def perm(text, m):
    return Permutation.parse(text, m)


def group(m, *gens):
    return generate_group([perm(g, m) for g in gens], m)


def trivial1():
    return group(1)


def z2():
    return group(2, "(1 2)")


def z3():
    return group(3, "(1 2 3)")


def z4():
    return group(4, "(1 2 3 4)")


def klein():
    return group(4, "(1 2)(3 4)", "(1 3)(2 4)")


def z6():
    return group(6, "(1 2 3 4 5 6)")


def s3():
    return group(3, "(1 2 3)", "(1 2)")


def d4():
    return group(4, "(1 2 3 4)", "(1 3)")


ABELIAN_TRANSITIVE = {"z2": z2, "z3": z3, "z4": z4, "klein": klein}
NON_ABELIAN = {"s3": s3, "d4": d4}


def random_graph(rng: random.Random, n: int, m: int, p: float = 0.5) -> EdgeColouredGraph:
    edges = [(u, v, rng.randint(1, m))
             for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return EdgeColouredGraph(n, m, tuple(edges))


def random_recolour(rng: random.Random, g: EdgeColouredGraph) -> EdgeColouredGraph:
    return g.with_colours([rng.randint(1, g.m) for _ in g.edges])


def random_bipartite(rng: random.Random, n: int, m: int, p: float = 0.4) -> EdgeColouredGraph:
    side = [rng.randint(0, 1) for _ in range(n)]
    edges = [(u, v, rng.randint(1, m)) for u, v in itertools.combinations(range(n), 2)
             if side[u] != side[v] and rng.random() < p]
    return EdgeColouredGraph(n, m, tuple(edges))


def all_assignments(group_, n):
    """Every choice of one group element per vertex."""
    return itertools.product(group_.elements, repeat=n)
