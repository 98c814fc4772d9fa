import itertools

import pytest
from hypothesis import assume, given, settings, strategies as st

from edgeswitch.perm_groups import (
    GroupError,
    GroupTooLarge,
    Permutation,
    abelianization,
    block_system,
    commutator,
    commutator_subgroup,
    commutator_words,
    format_group,
    generate_group,
    group_properties,
    parse_group,
)

from support import d4, group, klein, perm, s3, z2, z4


def square_symmetries():
    """Permutations of 1..4 preserving the 4-cycle 1-2-3-4-1 (brute force)."""
    square = {frozenset(e) for e in [(1, 2), (2, 3), (3, 4), (4, 1)]}
    out = set()
    for img in itertools.permutations(range(1, 5)):
        p = Permutation(img)
        if {frozenset((p(a), p(b))) for a, b in map(tuple, square)} == square:
            out.add(p)
    return out


def naive_closure(elems):
    cur = set(elems)
    while True:
        nxt = cur | {a * b for a in cur for b in cur}
        if nxt == cur:
            return cur
        cur = nxt


def test_composition_is_right_to_left():
    p, q = perm("(1 2)", 3), perm("(2 3)", 3)
    assert (p * q)(2) == p(q(2)) == 3
    assert (p * q)(3) == 1 and (p * q)(1) == 2
    assert (q * p)(1) == 3


def test_cycle_notation_round_trip():
    for text in ["()", "(1 2)", "(1 3 2)(4 5)", "(2 5)"]:
        assert str(perm(text, 5)) == text
    assert perm("(3 1 2)", 3) == perm("(1 2 3)", 3)
    with pytest.raises(GroupError):
        perm("(1 2", 3)
    with pytest.raises(GroupError):
        perm("(1 4)", 3)
    with pytest.raises(GroupError):
        perm("(1 2)(2 3)", 3)
    with pytest.raises(GroupError):
        Permutation((1, 1, 2))


@pytest.mark.parametrize("make, order, transitive, abelian, regular", [
    (z2, 2, True, True, True),
    (s3, 6, True, False, False),
    (z4, 4, True, True, True),
    (d4, 8, True, False, False),
])
def test_group_properties(make, order, transitive, abelian, regular):
    props = group_properties(make())
    assert (props.order, props.is_transitive, props.is_abelian, props.is_regular) == (
        order, transitive, abelian, regular)


def test_dihedral_elements_match_square_symmetries():
    assert set(d4().elements) == square_symmetries()


def test_generate_degree_mismatch_and_cap():
    with pytest.raises(GroupError):
        generate_group([perm("(1 2)", 2), perm("(1 2 3)", 3)], 2)
    with pytest.raises(GroupTooLarge):
        generate_group([perm("(1 2 3 4 5)", 5), perm("(1 2)", 5)], 5, cap=50)


def test_canonical_order_identity_first():
    G = d4()
    assert G.elements[0].is_identity()
    assert list(G.elements) == sorted(G.elements, key=lambda p: p.image)


def test_commutator_subgroups():
    assert [p.is_identity() for p in commutator_subgroup(z2()).elements] == [True]
    A3 = {p for p in s3().elements if len(p.cycles()) != 1 or len(p.cycles()[0]) == 3}
    assert set(commutator_subgroup(s3()).elements) == A3
    G = d4()
    brute = naive_closure({commutator(a, b) for a in G.elements for b in G.elements})
    assert set(commutator_subgroup(G).elements) == brute == {
        Permutation.identity(4), perm("(1 3)(2 4)", 4)}


def test_symmetric_group_commutator_is_alternating():
    S4 = group(4, "(1 2 3 4)", "(1 2)")
    D = commutator_subgroup(S4)
    assert D.order == 12
    assert all(sum(len(c) - 1 for c in p.cycles()) % 2 == 0 for p in D.elements)


def test_block_systems():
    assert block_system(z4()).blocks == ((1,), (2,), (3,), (4,))
    assert block_system(s3()).blocks == ((1, 2, 3),)
    bs = block_system(d4())
    assert bs.blocks == ((1, 3), (2, 4)) and bs.m_prime == 2
    assert bs.label(3) == 1 and bs.label(4) == 2
    with pytest.raises(GroupError):
        block_system(group(4, "(1 2)", "(3 4)"))


def test_abelianizations():
    ab = abelianization(z4())
    assert set(ab.quotient.elements) == set(z4().elements)
    assert all(ab.project(p) == p for p in z4().elements)
    ab = abelianization(s3())
    assert ab.quotient.order == 1 and ab.quotient.degree == 1
    ab = abelianization(d4())
    assert ab.quotient.order == 2
    assert ab.project(perm("(1 2 3 4)", 4)) == perm("(1 2)", 2)
    assert ab.project(perm("(1 3)", 4)).is_identity()


def test_commutator_words_multiply_out():
    for G in (s3(), d4(), group(4, "(1 2 3 4)", "(1 2)")):
        words = commutator_words(G)
        for t in commutator_subgroup(G).elements:
            prod = Permutation.identity(G.degree)
            for a, b in words.word(t):
                prod = prod * commutator(a, b)
            assert prod == t
        with pytest.raises(GroupError):
            words.word(next(p for p in G.elements if p not in commutator_subgroup(G)))


def test_group_file_round_trip():
    text = "# dihedral\ngroup 4\n(1 2 3 4)\n\n(1 3)\n"
    G = parse_group(text)
    assert G.order == 8
    assert parse_group(format_group(G)).elements == G.elements
    with pytest.raises(GroupError, match="line 2"):
        parse_group("group 3\n(1 2 4)\n")
    with pytest.raises(GroupError):
        parse_group("(1 2)\n")


# -- properties over random groups ----------------------------------------------

@st.composite
def perm_groups(draw, transitive=False):
    m = draw(st.integers(1, 5))
    k = draw(st.integers(1, 3))
    gens = [Permutation(tuple(draw(st.permutations(range(1, m + 1))))) for _ in range(k)]
    G = generate_group(gens, m)
    if transitive:
        assume(G.is_transitive)
    return G


@settings(max_examples=60, deadline=None)
@given(perm_groups())
def test_closure_properties(G):
    assert set(generate_group(G.elements, G.degree).elements) == set(G.elements)
    assert all(g in G for g in G.generators)
    for p in G.elements:
        assert p * p.inverse() == G.identity
        assert p * p.inverse() in G
    sample = G.elements[:12]
    assert all(a * b in G for a in sample for b in sample)


@settings(max_examples=60, deadline=None)
@given(perm_groups())
def test_commutator_subgroup_is_normal(G):
    D = commutator_subgroup(G)
    assert all(g * c * g.inverse() in D for g in G.elements for c in D.elements)


@settings(max_examples=60, deadline=None)
@given(perm_groups(transitive=True))
def test_block_and_quotient_properties(G):
    ab = abelianization(G)
    bs = ab.blocks
    D = commutator_subgroup(G)
    for i in range(1, G.degree + 1):
        for j in range(1, G.degree + 1):
            assert bs.same_block(i, j) == any(t(i) == j for t in D.elements)
    blocks = {frozenset(b) for b in bs.blocks}
    for p in G.elements:
        for b in bs.blocks:
            assert frozenset(p(c) for c in b) in blocks
            assert ab.project(p)(bs.label(b[0])) == bs.label(p(b[0]))
    sample = G.elements[:10]
    for p in sample:
        for q in sample:
            assert ab.project(p * q) == ab.project(p) * ab.project(q)
            assert ab.project(p) * ab.project(q) == ab.project(q) * ab.project(p)
    Q = ab.quotient
    assert Q.is_abelian and Q.is_transitive and Q.order == bs.m_prime


@settings(max_examples=60, deadline=None)
@given(perm_groups(transitive=True))
def test_abelian_transitive_is_sharply_transitive(G):
    if G.is_abelian:
        assert G.order == G.degree and G.is_regular
        images = [p(1) for p in G.elements]
        assert len(set(images)) == len(images)


def test_klein_is_regular():
    assert klein().is_regular
