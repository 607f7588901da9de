from itertools import combinations

import pytest

from pikernels.chartab import compute_table, kernel_of_character
from pikernels.groups import cyclic, klein
from pikernels.kernels import (brauer_kernel, check_exists_lift_with_kernel_K, check_lemma_quotient,
                               check_lift_sandwich, counterexample_group, intersection_theorem, k_subgroup,
                               kernel_report, l_subgroup, largest_normal_coset_constant,
                               largest_normal_constant_on_pi_part)
from pikernels.normal import PrimeSet, is_pi_number, o_pi
from pikernels.partial import irreducible_partial_characters, restrict
from pikernels.verify import pi_menu
from conftest import SOLVABLE, corpus_group, corpus_table, group


def partials(name, pi):
    T = compute_table(group(name))
    return T, irreducible_partial_characters(T, pi)


def find(phis, vals):
    return next(phi for phi in phis if phi.values == vals)


def brute_normal_members(G):
    cl = G.classes
    out = []
    for k in range(len(cl)):
        for extra in combinations(range(1, len(cl)), k):
            members = frozenset().union(cl[0].members, *(cl[c].members for c in extra))
            if all(G.mul(x, y) in members for x in members for y in members):
                out.append(members)
    return out


def brute_k(G, phi):
    """Union of every normal N over L(phi) with pi'-index; it must itself be one of them."""
    pip = phi.pi.prime_complement(G).resolve(G)
    good = set(x for c, v in zip(phi.pi_classes, phi.values) if v == phi.degree for x in G.classes[c].members)
    normals = brute_normal_members(G)
    L = min((N for N in normals if good <= N), key=len)
    over = [N for N in normals if L <= N and is_pi_number(len(N) // len(L), pip)]
    top = frozenset().union(*over)
    assert top in over
    return L, top


def test_s3_at_p2():
    T, ibr = partials("s3", PrimeSet.complement(2))
    principal, two = find(ibr, (1, 1)), find(ibr, (2, -1))
    assert l_subgroup(principal).order == 3 and k_subgroup(principal).order == 6
    assert l_subgroup(two).order == 1 and k_subgroup(two).order == 1
    assert brauer_kernel(two).order == 1
    assert brauer_kernel(principal).order == 6


def test_s3_sign_at_p3():
    T, ibr = partials("s3", PrimeSet.of(2))
    sign = find(ibr, (1, -1))
    assert l_subgroup(sign).order == 1
    K = k_subgroup(sign)
    assert K.order == 3
    assert K == kernel_of_character(T.irreducibles[1])
    assert largest_normal_coset_constant(sign) == K
    assert brauer_kernel(find(partials("s3", PrimeSet.complement(3))[1], (1, -1))).order == 3


def test_principal_partial_character():
    T, ipi = partials("s4", PrimeSet.of(3))
    phi = find(ipi, (1, 1))
    G = T.group
    assert l_subgroup(phi).order == 12
    assert largest_normal_constant_on_pi_part(phi).order == G.order


def test_c6_at_pi3():
    T, ipi = partials("c6", PrimeSet.of(3))
    nonprincipal = [phi for phi in ipi if not phi.is_principal]
    assert sorted(k_subgroup(phi).order for phi in ipi) == [2, 2, 6]
    for phi in nonprincipal:
        assert largest_normal_constant_on_pi_part(phi).order == 2
        rep = kernel_report(phi, T)
        assert sorted(M.order for _, M in rep.lifts) == [1, 2]
        assert rep.passed


def test_brauer_kernel_needs_single_prime():
    # pi' = {2, 3} is not the complement of a single prime
    T, ipi = partials("c6", PrimeSet())
    with pytest.raises(ValueError):
        brauer_kernel(ipi[0])


@pytest.mark.parametrize("name", SOLVABLE)
def test_three_computations_of_k_agree(name):
    G = corpus_group(name)
    T = corpus_table(name)
    for pi in pi_menu(G):
        for phi in irreducible_partial_characters(T, pi):
            K = k_subgroup(phi)
            assert largest_normal_constant_on_pi_part(phi) == K
            assert largest_normal_coset_constant(phi) == K


@pytest.mark.parametrize("name", ["s3", "s4", "d8", "q8", "a4", "dic12", "f20", "f21", "sl23", "d12"])
def test_k_matches_brute_force_quotient_core(name):
    G = corpus_group(name)
    T = corpus_table(name)
    for pi in pi_menu(G):
        for phi in irreducible_partial_characters(T, pi):
            L, K = brute_k(G, phi)
            assert l_subgroup(phi).members == L
            assert k_subgroup(phi).members == K


@pytest.mark.parametrize("name", SOLVABLE)
def test_lift_checks(name):
    G = corpus_group(name)
    T = corpus_table(name)
    for pi in pi_menu(G):
        ipi = irreducible_partial_characters(T, pi)
        for phi in ipi:
            assert check_lift_sandwich(phi, T).passed
            assert check_exists_lift_with_kernel_K(phi, T).passed
            assert check_lemma_quotient(phi, T).passed
        assert intersection_theorem(G, T, pi, ipi).passed


@pytest.mark.parametrize("name", SOLVABLE)
def test_sandwich_for_reducible_restrictions(name):
    G = corpus_group(name)
    T = corpus_table(name)
    for pi in pi_menu(G):
        for chi in T:
            phi = restrict(chi, pi)
            L, K = l_subgroup(phi), k_subgroup(phi)
            assert L <= kernel_of_character(chi) <= K


def test_intersection_spot_values():
    for name, p, order in [("s3", 3, 3), ("a4", 2, 4)]:
        T, ibr = partials(name, PrimeSet.complement(p))
        inter = frozenset(range(T.order))
        for phi in ibr:
            inter &= k_subgroup(phi).members
        assert len(inter) == order
        assert inter == o_pi(T.group, T.classes, PrimeSet.of(p)).members


def test_report_json_shape():
    T, ipi = partials("s3", PrimeSet.of(2))
    obj = kernel_report(ipi[0], T).to_json()
    assert {"values", "pi_classes", "L_order", "K_order", "L_classes", "K_classes", "lifts", "checks"} <= set(obj)
    assert all(isinstance(v, bool) for v in obj["checks"].values())


@pytest.mark.parametrize("c_order,h,k_order,strict", [(3, "c2", 2, 1), (3, "v4", 4, 2), (5, "c3", 3, 1)])
def test_counterexample_family(c_order, h, k_order, strict):
    H = cyclic(int(h[1:])) if h.startswith("c") else klein()
    G, pi, res = counterexample_group(c_order, H)
    assert G.order == c_order * H.order
    assert pi.resolve(G) == {c_order}
    rep = res.report
    assert rep.L.order == 1 and rep.K.order == k_order
    assert res.strict_lifts and all(M.order == strict for _, M in res.strict_lifts)
    assert any(M == rep.K for _, M in rep.lifts)
    assert rep.passed


@pytest.mark.parametrize("c_order,h", [(3, 1), (4, 2), (1, 2)])
def test_counterexample_preconditions(c_order, h):
    with pytest.raises(ValueError):
        counterexample_group(c_order, cyclic(h))
