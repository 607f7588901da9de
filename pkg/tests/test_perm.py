import json
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from pikernels.perm import (GroupError, Permutation, conjugacy_classes, element_order, group_from_generators,
                            load_group)
from conftest import CORPUS_NAMES, corpus_group, group


def brute_closure(degree, gens):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i]] for i in range(degree))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def test_trivial_group():
    G = group_from_generators(1, [])
    assert G.order == 1
    assert len(conjugacy_classes(G)) == 1


def test_s3_from_transposition_and_cycle():
    G = group_from_generators(3, [Permutation.from_cycles(3, (0, 1)), Permutation.from_cycles(3, (0, 1, 2))])
    assert G.order == 6
    cl = conjugacy_classes(G)
    assert sorted((c.order, c.size) for c in cl) == [(1, 1), (2, 3), (3, 2)]
    assert cl[0].members == frozenset([0])


def test_abelian_order_6_has_singleton_classes():
    G = group_from_generators(6, [Permutation.from_cycles(6, (0, 1, 2)), Permutation.from_cycles(6, (3, 4))])
    assert G.order == 6
    assert [c.size for c in G.classes] == [1] * 6


def test_identity_has_id_zero():
    G = group("s4")
    assert G.elements[0] == tuple(range(4))
    assert element_order(G, 0) == 1


def test_element_orders():
    G = group("c6")
    gen = G.generator_ids()[0]
    assert element_order(G, gen) == 6
    S = group("s3")
    t = S.id_of(Permutation.from_cycles(3, (0, 1)))
    assert element_order(S, t) == 2
    with pytest.raises((GroupError, IndexError, ValueError)):
        element_order(S, 99)


def test_invalid_permutation_rejected():
    with pytest.raises(GroupError):
        Permutation((0, 0, 1))
    with pytest.raises(GroupError):
        group_from_generators(3, [(0, 1)])


def test_order_bound():
    with pytest.raises(GroupError):
        group_from_generators(6, [tuple(range(1, 6)) + (0,), (1, 0, 2, 3, 4, 5)], order_bound=100)


def test_left_to_right_product():
    a = Permutation.from_cycles(3, (0, 1))
    b = Permutation.from_cycles(3, (1, 2))
    # apply a first, then b
    assert (a * b).images == (2, 0, 1)


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_chain_order_matches_brute_force(name):
    G = corpus_group(name)
    gens = [g.images for g in G.generators]
    assert G.order == len(brute_closure(G.degree, gens))


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_class_sizes_partition_group(name):
    G = corpus_group(name)
    cl = G.classes
    assert sum(cl.sizes) == G.order
    assert all(G.order % s == 0 for s in cl.sizes)
    seen = set()
    for c in cl:
        assert not seen & c.members
        seen |= c.members
    assert len(seen) == G.order


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["s4", "sl23", "f21", "d12", "a5"]), st.data())
def test_conjugation_preserves_class(name, data):
    G = group(name)
    x = data.draw(st.integers(0, G.order - 1))
    g = data.draw(st.integers(0, G.order - 1))
    cl = G.classes
    assert cl.class_of[G.conj(x, g)] == cl.class_of[x]
    assert cl.class_of[G.mul(G.mul(g, x), G.inv(g))] == cl.class_of[x]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["s4", "sl23", "f20", "dic12", "q8"]), st.data())
def test_power_map_consistency(name, data):
    G = group(name)
    cl = G.classes
    x = data.draw(st.integers(0, G.order - 1))
    s = data.draw(st.integers(-30, 30))
    c = cl.class_of[x]
    assert cl.class_of[G.power(x, s)] == cl.power(c, s % cl[c].order)


def test_power_brute_force():
    G = group("s4")
    for x in range(G.order):
        y = 0
        for k in range(5):
            assert G.power(x, k) == y
            y = G.mul(y, x)


def test_json_round_trip(tmp_path):
    G = group("f20")
    path = tmp_path / "f20.json"
    path.write_text(json.dumps(G.to_json()))
    H = load_group(path)
    assert H.order == 20 and H.elements == G.elements and H.name == "f20"


def test_ids_are_deterministic():
    a = group_from_generators(4, [(1, 2, 3, 0), (1, 0, 2, 3)])
    b = group_from_generators(4, [(1, 2, 3, 0), (1, 0, 2, 3)])
    assert a.elements == b.elements


def test_multiplication_agrees_with_permutations():
    G = group("a4")
    for x, y in product(range(G.order), repeat=2):
        assert G.element(G.mul(x, y)) == G.element(x) * G.element(y)
