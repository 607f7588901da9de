from itertools import combinations

import pytest

from pikernels.normal import (LatticeError, PrimeSet, all_normal_subgroups, is_pi_number, is_pi_separable, join,
                              largest_normal_over, meet, normal_closure, o_pi, o_upper_pi_prime, pi_elements,
                              trivial_subgroup, whole_group)
from pikernels.perm import Permutation
from pikernels.verify import pi_menu
from conftest import SOLVABLE, class_with, corpus_group, group


def brute_normal_subgroups(G):
    """Every class union that is closed under multiplication."""
    cl = G.classes
    out = set()
    rest = range(1, len(cl))
    for k in range(len(cl)):
        for extra in combinations(rest, k):
            members = frozenset().union(cl[0].members, *(cl[c].members for c in extra))
            if all(G.mul(x, y) in members for x in members for y in members):
                out.add(members)
    return out


def orders(subs):
    return sorted(N.order for N in subs)


def test_prime_set_parsing():
    assert PrimeSet.parse("2,3") == PrimeSet.of(2, 3)
    assert PrimeSet.parse("p'5") == PrimeSet.complement(5)
    assert PrimeSet.parse("") == PrimeSet.parse("{}") == PrimeSet()
    assert PrimeSet.parse("2, 3").spec() == "2,3"
    assert PrimeSet().spec() == "{}"
    for bad in ("4", "2,x", "p'6", "1"):
        with pytest.raises(ValueError):
            PrimeSet.parse(bad)


def test_complement_resolution():
    G = group("f20")
    assert PrimeSet.complement(5).resolve(G) == {2}
    assert PrimeSet.complement(3).resolve(G) == {2, 5}
    pi = PrimeSet.of(2)
    assert pi.prime_complement(G).resolve(G) | pi.resolve(G) == set(G.prime_divisors)


def test_pi_elements_s3():
    G = group("s3")
    cl = G.classes
    assert pi_elements(G, cl, PrimeSet.of(2)) == {0, class_with(cl, 2)}
    assert pi_elements(G, cl, PrimeSet.of(2, 3)) == set(range(3))
    assert pi_elements(G, cl, PrimeSet()) == {0}


@pytest.mark.parametrize("name", SOLVABLE)
def test_pi_and_complement_meet_in_identity(name):
    G = corpus_group(name)
    for pi in pi_menu(G):
        a = pi_elements(G, G.classes, pi)
        b = pi_elements(G, G.classes, pi.prime_complement(G))
        assert a & b == {0}


def test_normal_closure_examples():
    S = group("s3")
    assert normal_closure(S, S.classes, [0]).order == 1
    t = S.id_of(Permutation.from_cycles(3, (0, 1)))
    assert normal_closure(S, S.classes, [t]).order == 6
    A = group("a4")
    d = A.id_of(Permutation.from_cycles(4, (0, 1), (2, 3)))
    assert normal_closure(A, A.classes, [d]).order == 4


def test_lattice_examples():
    assert orders(all_normal_subgroups(group("c6"), group("c6").classes)) == [1, 2, 3, 6]
    assert orders(all_normal_subgroups(group("s3"), group("s3").classes)) == [1, 3, 6]
    assert len(all_normal_subgroups(group("c1"), group("c1").classes)) == 1


def test_class_bound():
    G = group("c12")
    with pytest.raises(LatticeError):
        all_normal_subgroups(G, conjugacy_copy(G), class_bound=5)


def conjugacy_copy(G):
    from pikernels.perm import conjugacy_classes
    return conjugacy_classes(G)


@pytest.mark.parametrize("name", ["c12", "d8", "d12", "q8", "s4", "a4", "sl23", "dic12", "f20", "f21", "a5"])
def test_lattice_matches_brute_force(name):
    G = corpus_group(name)
    found = all_normal_subgroups(G, G.classes)
    assert {N.members for N in found} == brute_normal_subgroups(G)


@pytest.mark.parametrize("name", SOLVABLE)
def test_lattice_closed_under_join_and_meet(name):
    G = corpus_group(name)
    cl = G.classes
    subs = all_normal_subgroups(G, cl)
    members = {N.members for N in subs}
    for A, B in combinations(subs, 2):
        assert meet(A, B).members in members
        assert join(G, cl, A, B).members in members


def test_core_examples():
    S, A = group("s3"), group("a4")
    assert o_pi(S, S.classes, PrimeSet.of(3)).order == 3
    assert o_pi(S, S.classes, PrimeSet.of(2)).order == 1
    assert o_pi(A, A.classes, PrimeSet.of(2)).order == 4
    C = group("c6")
    assert largest_normal_over(C, C.classes, trivial_subgroup(C.classes), PrimeSet.of(2)).order == 2
    top = whole_group(S.classes)
    assert largest_normal_over(S, S.classes, top, PrimeSet.of(2)) == top


@pytest.mark.parametrize("name", SOLVABLE)
def test_core_is_largest_normal_pi_subgroup(name):
    G = corpus_group(name)
    cl = G.classes
    subs = all_normal_subgroups(G, cl)
    for pi in pi_menu(G):
        primes = pi.resolve(G)
        core = o_pi(G, cl, pi)
        assert is_pi_number(core.order, primes)
        assert all(N <= core for N in subs if is_pi_number(N.order, primes))
        assert core == largest_normal_over(G, cl, trivial_subgroup(cl), pi)


def test_upper_pi_prime_examples():
    C = group("c6")
    cl = C.classes
    top = whole_group(cl)
    assert o_upper_pi_prime(C, cl, top, PrimeSet.of(3)).order == 3
    two = o_pi(C, cl, PrimeSet.of(2))
    assert o_upper_pi_prime(C, cl, two, PrimeSet.of(2)) == two
    assert o_upper_pi_prime(C, cl, two, PrimeSet.of(3)).order == 1


@pytest.mark.parametrize("name", SOLVABLE)
def test_upper_pi_prime_is_smallest_with_pi_prime_index(name):
    G = corpus_group(name)
    cl = G.classes
    subs = all_normal_subgroups(G, cl)
    for pi in pi_menu(G):
        pip = pi.prime_complement(G).resolve(G)
        for N in subs:
            R = o_upper_pi_prime(G, cl, N, pi)
            assert R <= N and is_pi_number(N.order // R.order, pip)
            assert all(R <= M for M in subs if M <= N and is_pi_number(N.order // M.order, pip))


@pytest.mark.parametrize("name", SOLVABLE)
def test_solvable_groups_are_separable(name):
    G = corpus_group(name)
    for pi in pi_menu(G):
        ok, series = is_pi_separable(G, G.classes, pi)
        assert ok and series[-1].order == G.order


def test_a5_is_not_23_separable():
    G = group("a5")
    ok, _ = is_pi_separable(G, G.classes, PrimeSet.of(2, 3))
    assert not ok
    assert is_pi_separable(G, G.classes, PrimeSet.of(2, 3, 5))[0]
    assert is_pi_separable(G, G.classes, PrimeSet())[0]
