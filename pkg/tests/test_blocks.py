from dataclasses import replace

import pytest

from defectscope.blocks import (block_partition, brauer_bound_check, central_character,
                                defect_class_and_group, defect_class_candidates, heights, k0,
                                k_of_defect_group, with_defect_groups)
from defectscope.chartab import attach_group, dixon_schneider, mn_table
from defectscope.errors import NoDefectClass
from defectscope.perm import ConjugacyClass, PermGroup, nu, sylow
from defectscope.presets import load_group
from defectscope.symfunc import nakayama_blocks, principal_defect_group_sn

GROUPS = ["sym(3)", "sym(4)", "alt(4)", "dihedral(8)", "quaternion8", "sl23", "alt(5)", "gl32",
          "dihedral(12)", "sym(5)"]


@pytest.fixture(scope="module")
def systems():
    out = {}
    for g in GROUPS:
        G = load_group(g)
        T = dixon_schneider(G)
        for p in (2, 3, 5, 7):
            out[g, p] = (G, with_defect_groups(block_partition(T, p), G))
    return out


def test_central_character_trivial_cases():
    T = dixon_schneider(load_group("sl23"))
    for chi in range(T.k):
        assert central_character(T, chi, 0) == 1
    for j, c in enumerate(T.classes):
        assert central_character(T, 0, j) == c.size


def test_central_character_sl23_central_involution():
    T = dixon_schneider(load_group("sl23"))
    z = next(j for j, c in enumerate(T.classes) if c.size == 1 and c.element_order == 2)
    for chi, d in enumerate(T.degrees()):
        w = central_character(T, chi, z)
        assert w == T.values[chi][z] / d
        assert w in (1, -1)


@pytest.mark.parametrize("g", GROUPS)
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_block_invariants(systems, g, p):
    G, S = systems[g, p]
    T = S.table
    assert sum(b.kB for b in S.blocks) == T.k
    assert sorted(c for b in S.blocks for c in b.characters) == list(range(T.k))
    assert S.principal.is_principal()
    full = nu(G.order, p)
    for b in S.blocks:
        assert all(h >= 0 for h in heights(b))
        assert k0(b) >= 1
        assert b.defect_group.order == p ** b.defect
        assert b.defect_group.is_p_group(p)
        assert brauer_bound_check(b, p)
        if b.defect_group.is_abelian():
            assert k0(b) == b.kB
    assert S.principal.defect_group.order == p ** full == sylow(G, p).order


@pytest.mark.parametrize("g", GROUPS)
@pytest.mark.parametrize("p", [2, 3, 5])
def test_k_of_defect_group_is_independent_of_defect_class(systems, g, p):
    G, S = systems[g, p]
    for b in S.blocks:
        counts = set()
        orders = set()
        for j in defect_class_candidates(S.table, b, p):
            _, D = defect_class_and_group(G, S, b, cls=j)
            counts.add(k_of_defect_group(D))
            orders.add(D.order)
        assert len(counts) == 1 and orders == {p ** b.defect}


def test_coprime_prime_gives_singletons():
    T = dixon_schneider(load_group("alt(5)"))
    S = block_partition(T, 7)
    assert S.reduction is None
    assert all(b.kB == 1 and b.defect == 0 for b in S.blocks)


def test_a4_blocks(systems):
    _, S3 = systems["alt(4)", 3]
    assert sorted(b.kB for b in S3.blocks) == [1, 3]
    assert S3.principal.kB == 3 and S3.principal.kD == 3
    _, S2 = systems["alt(4)", 2]
    assert [b.kB for b in S2.blocks] == [4]
    assert S2.principal.kD == 4


def test_defects(systems):
    _, S = systems["alt(5)", 5]
    assert S.principal.defect == 1
    assert [b.defect for b in S.blocks if not b.is_principal()] == [0]
    _, S = systems["sym(5)", 5]
    assert S.principal.defect == 1


def test_defect_zero_block_has_trivial_group(systems):
    _, S = systems["alt(4)", 3]
    b = next(b for b in S.blocks if b.defect == 0)
    assert b.defect_group.order == 1 and b.kD == 1
    assert b.heights == (0,)


def test_sl23_principal_block(systems):
    _, S = systems["sl23", 2]
    b = S.principal
    assert b.kB == 7 and b.defect == 3
    assert b.defect_group.order == 8 and not b.defect_group.is_abelian()
    assert b.kD == 5
    # degrees 1,1,1,2,2,2,3 with |G|_2 = 8: the degree-2 characters have height 1
    assert b.degrees == (1, 1, 1, 2, 2, 2, 3)
    assert b.heights == (0, 0, 0, 1, 1, 1, 0)
    assert b.k0B == 4


def test_d8_single_block(systems):
    _, S = systems["dihedral(8)", 2]
    assert len(S.blocks) == 1 and S.principal.kB == 5 == S.principal.kD


def test_brauer_bound_examples(systems):
    _, S = systems["alt(5)", 5]
    assert S.principal.kB == 4 <= 5 and brauer_bound_check(S.principal, 5)
    T = mn_table(9)
    b = block_partition(T, 3).principal
    assert b.defect == 4 and b.kB == 22 <= 3**6 and brauer_bound_check(b, 3)


def test_s9_principal_block():
    T = mn_table(9)
    S = block_partition(T, 3)
    assert S.principal.kB == 22 and S.principal.defect == 4
    assert k_of_defect_group(principal_defect_group_sn(9, 3)) == 17


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_generic_partition_equals_nakayama(n, p):
    T = mn_table(n)
    S = block_partition(T, p)
    generic = sorted(sorted(T.row_labels[c] for c in b.characters) for b in S.blocks)
    combinatorial = sorted(sorted(b.partitions) for b in nakayama_blocks(n, p))
    assert generic == combinatorial
    assert [T.row_labels[c] for c in S.principal.characters].count((n,)) == 1


@pytest.mark.parametrize("n", [3, 4, 5, 6])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_dixon_blocks_equal_mn_blocks(n, p):
    G = load_group(f"sym({n})")
    a = block_partition(dixon_schneider(G), p)
    b = block_partition(attach_group(mn_table(n), G), p)
    assert [x.characters for x in a.blocks] == [x.characters for x in b.blocks]
    assert [x.defect for x in a.blocks] == [x.defect for x in b.blocks]


def test_defect_group_needs_representatives():
    T = mn_table(4)
    bare = replace(T, classes=tuple(ConjugacyClass(None, c.size, c.element_order) for c in T.classes))
    S = block_partition(bare, 2)
    with pytest.raises(NoDefectClass):
        defect_class_and_group(load_group("sym(4)"), S, S.principal)


def test_with_defect_groups_needs_a_source():
    S = block_partition(mn_table(3), 3)
    with pytest.raises(ValueError):
        with_defect_groups(S)
    assert with_defect_groups(S, provider=lambda s, b: PermGroup.trivial(3)).principal.kD == 1
