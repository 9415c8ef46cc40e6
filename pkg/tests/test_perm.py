from itertools import permutations
from math import factorial

import pytest
from sympy.functions.combinatorial.numbers import partition as npartitions

from defectscope.errors import LimitExceeded, NotAMember, NotASubgroup
from defectscope.perm import (Permutation, PermGroup, centralizer, centralizer_of_subgroup,
                              intersection, is_p_nilpotent, normalizer, nu, product_subgroup,
                              subgroup, sylow)
from defectscope.presets import load_group, sl23


def P(cycles, n):
    return Permutation.from_cycles(cycles, n)


def brute_normalizer_order(G, H):
    hs = set(H.elements())
    return sum(1 for g in G.elements() if {h.conjugate(g) for h in hs} == hs)


def test_composition_is_left_to_right():
    a, b = P([[1, 2]], 3), P([[2, 3]], 3)
    # apply a then b: 1 -> 2 -> 3
    assert (a * b)[0] == 2
    assert repr(a * b) == "(1,3,2)"


def test_cycle_type_and_order():
    x = P([[1, 2, 3], [4, 5]], 6)
    assert x.cycle_type() == (3, 2, 1)
    assert x.order() == 6
    assert (x ** 6).is_identity()
    assert x * x.inverse() == Permutation.identity(6)


def test_from_cycles_rejects_bad_points():
    with pytest.raises(ValueError):
        P([[1, 7]], 3)
    with pytest.raises(ValueError):
        P([[1, 2], [2, 3]], 3)


@pytest.mark.parametrize("gens,n,order", [
    ([[[1, 2]], [[1, 2, 3, 4]]], 4, 24),
    ([], 3, 1),
    ([[[1, 2, 3, 4, 5]], [[3, 4, 5]]], 5, 60),
])
def test_enumeration_orders(gens, n, order):
    G = PermGroup([P(c, n) for c in gens], degree=n)
    assert G.order == order


def test_enumeration_matches_itertools_for_s5():
    G = load_group("sym(5)")
    assert set(G.elements()) == {Permutation(p) for p in permutations(range(5))}


@pytest.mark.parametrize("spec,order", [
    ("alt(5)", 60), ("dihedral(8)", 8), ("quaternion8", 8), ("sl23", 24), ("gl32", 168),
    ("psl33", 5616), ("cyclic(12)", 12),
])
def test_preset_orders(spec, order):
    assert load_group(spec).order == order


def test_limit_exceeded():
    with pytest.raises(LimitExceeded):
        PermGroup(load_group("sym(6)").generators, degree=6, limit=100).order


@pytest.mark.parametrize("n", range(1, 8))
def test_class_count_is_partition_count(n):
    assert len(load_group(f"sym({n})").conjugacy_classes()) == npartitions(n)


def test_trivial_group_has_one_class():
    assert len(PermGroup.trivial(3).conjugacy_classes()) == 1


@pytest.mark.parametrize("spec", ["sym(4)", "alt(5)", "sl23", "gl32", "quaternion8"])
def test_class_equation(spec):
    G = load_group(spec)
    classes = G.conjugacy_classes()
    assert sum(c.size for c in classes) == G.order
    for c in classes:
        assert c.size * centralizer(G, c.representative).order == G.order


def test_class_order_is_canonical_and_deterministic():
    a = load_group("gl32").conjugacy_classes()
    b = load_group("gl32").conjugacy_classes()
    assert a == b
    keys = [(c.size, c.element_order, tuple(c.representative)) for c in a]
    assert keys == sorted(keys)


def test_class_representatives_are_lex_least():
    G = load_group("sym(4)")
    for i, c in enumerate(G.conjugacy_classes()):
        assert tuple(c.representative) == min(tuple(x) for x in G.class_elements(i))


def test_centralizer_examples():
    S3 = load_group("sym(3)")
    assert centralizer(S3, Permutation.identity(3)).order == 6
    assert centralizer(S3, P([[1, 2, 3]], 3)).order == 3
    A5 = load_group("alt(5)")
    x = P([[1, 2, 3, 4, 5]], 5)
    C = centralizer(A5, x)
    assert C.order == 5
    assert set(C.elements()) == {g for g in A5.elements() if g * x == x * g}


def test_centralizer_requires_member():
    with pytest.raises(NotAMember):
        centralizer(load_group("alt(4)"), P([[1, 2]], 4))


def test_trivial_subgroup_centralizer_and_normalizer():
    G = load_group("sym(4)")
    T = PermGroup.trivial(4)
    assert centralizer_of_subgroup(G, T).order == 24
    assert normalizer(G, T).order == 24


@pytest.mark.parametrize("spec,p,order", [("alt(5)", 5, 10), ("gl32", 7, 21), ("sym(4)", 2, 8)])
def test_normalizer_of_sylow(spec, p, order):
    G = load_group(spec)
    D = sylow(G, p)
    N = normalizer(G, D)
    assert N.order == order == brute_normalizer_order(G, D)


def test_normalizer_requires_subgroup():
    with pytest.raises(NotASubgroup):
        normalizer(load_group("alt(4)"), PermGroup([P([[1, 2]], 4)], degree=4))


@pytest.mark.parametrize("spec,p", [("alt(4)", 2), ("alt(5)", 5), ("sym(5)", 2), ("sl23", 2),
                                    ("gl32", 7), ("gl32", 2), ("psl33", 3), ("sym(6)", 3)])
def test_sylow_order(spec, p):
    G = load_group(spec)
    D = sylow(G, p)
    assert D.order == p ** nu(G.order, p)
    assert D.is_p_group(p)
    assert D.is_subgroup_of(G)


def test_sylow_conjugates_cover_all_sylows_in_s4():
    G = load_group("sym(4)")
    D = sylow(G, 2)
    conj = {frozenset(x.conjugate(g) for x in D.elements()) for g in G.elements()}
    # S_4 has exactly three dihedral subgroups of order 8
    assert len(conj) == G.order // normalizer(G, D).order == 3


def test_sylow_a5_p5_is_cyclic():
    D = sylow(load_group("alt(5)"), 5)
    assert D.order == 5 and D.is_cyclic()


def test_sylow_s9_p3():
    from defectscope.symfunc import principal_defect_group_sn
    D = principal_defect_group_sn(9, 3)
    assert D.order == 81
    assert len(D.conjugacy_classes()) == 17


def test_product_subgroup():
    A5 = load_group("alt(5)")
    D = sylow(A5, 5)
    C = centralizer_of_subgroup(A5, D)
    assert C.order == 5
    assert product_subgroup(A5, D, C).order == 5
    assert set(product_subgroup(A5, D, D).elements()) == set(D.elements())

    G = sl23()
    Q = sylow(G, 2)
    Z = centralizer_of_subgroup(G, G)
    assert Q.order == 8 and Z.order == 2
    assert centralizer_of_subgroup(G, Q).order == 2
    assert product_subgroup(G, Q, centralizer_of_subgroup(G, Q)).order == 8


@pytest.mark.parametrize("spec,p,expected", [
    ("sym(3)", 2, True),
    ("sym(3)", 3, False),
    ("alt(4)", 2, False),
    ("alt(4)", 3, True),
    ("dihedral(8)", 2, True),
    ("quaternion8", 2, True),
    ("alt(5)", 5, False),
])
def test_is_p_nilpotent(spec, p, expected):
    assert is_p_nilpotent(load_group(spec), p) is expected


def test_is_p_nilpotent_oracle_normal_complement():
    # oracle: the p'-elements form a normal subgroup of index |G|_p
    for spec in ["sym(3)", "sym(4)", "alt(4)", "dihedral(12)", "sl23", "cyclic(12)"]:
        G = load_group(spec)
        for p in (2, 3):
            pp = G.order // p ** nu(G.order, p)
            prime_to_p = [g for g in G.elements() if g.order() % p]
            closed = all((a * b).order() % p for a in prime_to_p for b in prime_to_p)
            assert is_p_nilpotent(G, p) == (len(prime_to_p) == pp and closed)


def test_subgroup_and_intersection():
    G = load_group("sym(4)")
    H = subgroup(G, [P([[1, 2, 3, 4]], 4)])
    K = subgroup(G, [P([[1, 3]], 4), P([[2, 4]], 4)])
    assert H.order == 4 and K.order == 4
    assert intersection(H, K).order == 2


def test_s_n_orders():
    for n in range(1, 8):
        assert load_group(f"sym({n})").order == factorial(n)
