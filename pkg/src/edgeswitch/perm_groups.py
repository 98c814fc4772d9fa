"""Permutations of the colours {1..m} and the finite groups they generate.

Composition is right-to-left: ``(p * q)(i) == p(q(i))``.  Commutators are
``[p, q] = p q p^-1 q^-1``.  Groups are small enough that every element is
materialized; the canonical enumeration order of a group is lexicographic
by image tuple, which puts the identity first.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

DEFAULT_ELEMENT_CAP = 100_000


class GroupError(ValueError):
    """Malformed permutation, inconsistent degrees or an unsupported group."""


class GroupTooLarge(GroupError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..m}; ``image[i - 1]`` is the image of ``i``."""

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(x) for x in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise GroupError(f"not a permutation of 1..{len(image)}: {image}")
        object.__setattr__(self, "image", image)

    @classmethod
    def _raw(cls, image: tuple[int, ...]) -> "Permutation":
        # Trusted constructor for results of composition/inversion.
        p = object.__new__(cls)
        object.__setattr__(p, "image", image)
        return p

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls._raw(tuple(range(1, m + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], m: int) -> "Permutation":
        image = list(range(1, m + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= m:
                    raise GroupError(f"point {x} outside 1..{m}")
                if x in seen:
                    raise GroupError(f"point {x} repeated in cycle notation")
                seen.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                image[a - 1] = b
        return cls._raw(tuple(image))

    @classmethod
    def parse(cls, text: str, m: int) -> "Permutation":
        """Parse disjoint-cycle notation such as ``(1 2 3)(4 5)`` or ``()``."""
        s = text.strip()
        if not s:
            raise GroupError("empty permutation")
        if re.sub(r"\([^()]*\)", "", s).strip():
            raise GroupError(f"malformed cycle notation: {text!r}")
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", s):
            pts = [p for p in re.split(r"[\s,]+", body.strip()) if p]
            try:
                cycles.append([int(p) for p in pts])
            except ValueError:
                raise GroupError(f"malformed cycle notation: {text!r}") from None
        return cls.from_cycles(cycles, m)

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise GroupError("degree mismatch in composition")
        img = self.image
        return Permutation._raw(tuple(img[x - 1] for x in other.image))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for i, x in enumerate(self.image, start=1):
            inv[x - 1] = i
        return Permutation._raw(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            result = base * result
        return result

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.image, start=1))

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p = self * p
            k += 1
        return k

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen, out = set(), []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def __repr__(self) -> str:
        return f"Permutation.parse({str(self)!r}, {self.degree})"

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def commutator(p: Permutation, q: Permutation) -> Permutation:
    return p * q * p.inverse() * q.inverse()


class PermGroup:
    """A finite permutation group with all of its elements listed.

    Build instances with :func:`generate_group`.  ``elements`` is in
    canonical order (identity first).
    """

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 elements: Sequence[Permutation]):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self.index = {p: k for k, p in enumerate(self.elements)}

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"PermGroup(degree={self.degree}, order={self.order}, gens=[{gens}])"

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p) -> bool:
        return p in self.index

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    @cached_property
    def orbits(self) -> list[tuple[int, ...]]:
        return _orbits(self.elements, self.degree)

    @cached_property
    def is_transitive(self) -> bool:
        return len(self.orbits) == 1

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    @property
    def is_regular(self) -> bool:
        return self.is_transitive and self.order == self.degree

    @cached_property
    def _transporters(self) -> dict[tuple[int, int], Permutation]:
        table: dict[tuple[int, int], Permutation] = {}
        for p in self.elements:
            for i in range(1, self.degree + 1):
                table.setdefault((i, p(i)), p)
        return table

    def transporter(self, i: int, j: int) -> Permutation:
        """First element (canonical order) sending colour ``i`` to ``j``.

        For a regular group this element is unique.
        """
        try:
            return self._transporters[(i, j)]
        except KeyError:
            raise GroupError(f"no element maps {i} to {j}") from None

    def require_transitive(self, what: str = "operation"):
        if not self.is_transitive:
            raise GroupError(f"{what} requires a transitive group")

    def require_abelian_transitive(self, what: str = "operation"):
        if not (self.is_abelian and self.is_transitive):
            raise GroupError(f"{what} requires an Abelian transitive group")


def _orbits(elements: Iterable[Permutation], m: int) -> list[tuple[int, ...]]:
    parent = list(range(m + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in elements:
        for i in range(1, m + 1):
            a, b = find(i), find(p(i))
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(1, m + 1):
        groups.setdefault(find(i), []).append(i)
    return sorted(tuple(v) for v in groups.values())


def generate_group(generators: Sequence[Permutation], m: int,
                   cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """Closure of ``generators`` inside S_m by breadth-first multiplication."""
    gens = []
    for g in generators:
        if g.degree != m:
            raise GroupError(f"generator {g} has degree {g.degree}, expected {m}")
        if g not in gens:
            gens.append(g)
    e = Permutation.identity(m)
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g * x
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise GroupTooLarge(f"group too large (more than {cap} elements)")
                queue.append(y)
    return PermGroup(m, gens, seen)


@dataclass(frozen=True)
class GroupProperties:
    order: int
    is_transitive: bool
    is_abelian: bool
    is_regular: bool


def group_properties(G: PermGroup) -> GroupProperties:
    return GroupProperties(G.order, G.is_transitive, G.is_abelian, G.is_regular)


def commutator_subgroup(G: PermGroup) -> PermGroup:
    """[G, G], generated by the commutators of all pairs of elements."""
    cached = G.__dict__.get("_derived")
    if cached is not None:
        return cached
    comms = sorted({commutator(p, q) for p in G.elements for q in G.elements})
    D = generate_group(comms, G.degree)
    for g in G.generators:
        gi = g.inverse()
        for c in D.generators:
            if g * c * gi not in D:
                raise AssertionError("commutator subgroup is not normal")
    G.__dict__["_derived"] = D
    return D


@dataclass(frozen=True)
class BlockSystem:
    """Orbits of the commutator subgroup, labelled 1..m' by smallest colour."""

    degree: int
    blocks: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...]  # labels[c - 1] is the block label of colour c

    @property
    def m_prime(self) -> int:
        return len(self.blocks)

    def label(self, colour: int) -> int:
        return self.labels[colour - 1]

    def block(self, label: int) -> tuple[int, ...]:
        return self.blocks[label - 1]

    def same_block(self, i: int, j: int) -> bool:
        return self.label(i) == self.label(j)


def block_system(G: PermGroup) -> BlockSystem:
    G.require_transitive("block system")
    cached = G.__dict__.get("_blocks")
    if cached is not None:
        return cached
    D = commutator_subgroup(G)
    blocks = tuple(D.orbits)  # sorted by minimum element
    labels = [0] * G.degree
    for k, b in enumerate(blocks, start=1):
        for c in b:
            labels[c - 1] = k
    bs = BlockSystem(G.degree, blocks, tuple(labels))
    G.__dict__["_blocks"] = bs
    return bs


@dataclass(frozen=True, eq=False)
class Abelianization:
    """Action of G on its commutator blocks, plus the projection from G."""

    group: PermGroup
    blocks: BlockSystem
    quotient: PermGroup
    projection: dict[Permutation, Permutation]
    representatives: dict[Permutation, Permutation]

    def project(self, p: Permutation) -> Permutation:
        return self.projection[p]

    def representative(self, q: Permutation) -> Permutation:
        """First element of G (canonical order) acting on blocks as ``q``."""
        return self.representatives[q]


def _block_action(p: Permutation, bs: BlockSystem) -> Permutation:
    image = []
    for b in bs.blocks:
        targets = {bs.label(p(c)) for c in b}
        if len(targets) != 1:
            raise AssertionError(f"{p} does not preserve the block system")
        image.append(targets.pop())
    return Permutation._raw(tuple(image))


def abelianization(G: PermGroup) -> Abelianization:
    G.require_transitive("Abelianization")
    cached = G.__dict__.get("_abelianization")
    if cached is not None:
        return cached
    bs = block_system(G)
    projection = {p: _block_action(p, bs) for p in G.elements}
    reps: dict[Permutation, Permutation] = {}
    for p in G.elements:
        reps.setdefault(projection[p], p)
    gens = sorted({projection[g] for g in G.generators})
    quotient = generate_group(gens, bs.m_prime)
    if set(quotient.elements) != set(reps):
        raise AssertionError("induced block actions do not form a group")
    if not (quotient.is_abelian and quotient.is_transitive):
        raise AssertionError("Abelianized group is not Abelian and transitive")
    ab = Abelianization(G, bs, quotient, projection, reps)
    G.__dict__["_abelianization"] = ab
    return ab


class CommutatorWords:
    """Breadth-first factorization of [G, G] into single commutators.

    ``word(t)`` is a shortest list of pairs ``(p, q)`` with
    ``t == [p1, q1] [p2, q2] ... [pk, qk]``.
    """

    def __init__(self, G: PermGroup):
        self.group = G
        self.derived = commutator_subgroup(G)
        pairs: dict[Permutation, tuple[Permutation, Permutation]] = {}
        for p in G.elements:
            for q in G.elements:
                pairs.setdefault(commutator(p, q), (p, q))
        e = G.identity
        words: dict[Permutation, tuple] = {e: ()}
        queue = deque([e])
        steps = sorted(c for c in pairs if not c.is_identity())
        while queue:
            x = queue.popleft()
            for c in steps:
                y = x * c
                if y not in words:
                    words[y] = words[x] + (pairs[c],)
                    queue.append(y)
        if set(words) != set(self.derived.elements):
            raise AssertionError("commutator words do not cover [G, G]")
        self.words = words
        self.max_length = max(len(w) for w in words.values())
        repair: dict[tuple[int, int], Permutation] = {}
        for t in sorted(words, key=lambda t: (len(words[t]), t)):
            for i in range(1, G.degree + 1):
                repair.setdefault((i, t(i)), t)
        self._repair = repair

    def word(self, t: Permutation) -> tuple[tuple[Permutation, Permutation], ...]:
        try:
            return self.words[t]
        except KeyError:
            raise GroupError(f"{t} is not in the commutator subgroup") from None

    def repair_element(self, i: int, j: int) -> Permutation:
        """Element of [G, G] with the shortest word that sends ``i`` to ``j``."""
        try:
            return self._repair[(i, j)]
        except KeyError:
            raise GroupError(f"colours {i} and {j} lie in different blocks") from None


def commutator_words(G: PermGroup) -> CommutatorWords:
    cached = G.__dict__.get("_words")
    if cached is None:
        cached = G.__dict__["_words"] = CommutatorWords(G)
    return cached


def max_commutator_word_length(G: PermGroup) -> int:
    return commutator_words(G).max_length


# -- group files -------------------------------------------------------------

def parse_group(text: str, cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """Parse a ``group <m>`` file: one generator per line, ``#`` comments."""
    m = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if m is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "group":
                raise GroupError(f"line {lineno}: expected 'group <m>'")
            try:
                m = int(parts[1])
            except ValueError:
                raise GroupError(f"line {lineno}: bad degree {parts[1]!r}") from None
            if m < 1:
                raise GroupError(f"line {lineno}: degree must be positive")
            continue
        try:
            gens.append(Permutation.parse(line, m))
        except GroupError as exc:
            raise GroupError(f"line {lineno}: {exc}") from None
    if m is None:
        raise GroupError("missing 'group <m>' header")
    return generate_group(gens, m, cap)


def format_group(G: PermGroup) -> str:
    lines = [f"group {G.degree}"]
    lines += [str(g) for g in G.generators]
    return "\n".join(lines) + "\n"
