import json
from dataclasses import replace
from math import factorial, lcm

import pytest
from sympy.functions.combinatorial.numbers import partition as npartitions

from defectscope.chartab import (attach_group, character_table, class_constants, dixon_prime,
                                 dixon_schneider, ingest, mn_table, validate_table, write_table)
from defectscope.cyclo import CycloNum, is_algebraic_integer
from defectscope.errors import SchemaError, ValidationError
from defectscope.perm import is_prime
from defectscope.presets import load_group
from defectscope.symfunc import class_size, lexmin_permutation, mn_value, partitions, power_cycle_type

DIXON_GROUPS = ["cyclic(2)", "sym(3)", "sym(4)", "alt(4)", "dihedral(8)", "quaternion8", "sl23",
                "alt(5)", "dihedral(10)", "cyclic(12)", "gl32"]


@pytest.fixture(scope="module")
def tables():
    return {g: dixon_schneider(load_group(g)) for g in DIXON_GROUPS}


def test_class_constants_s3_by_convolution():
    G = load_group("sym(3)")
    classes = G.conjugacy_classes()
    a = class_constants(G)
    # brute-force oracle over all pairs
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            for k, ck in enumerate(classes):
                z = ck.representative
                count = sum(1 for x in G.class_elements(i) for y in G.class_elements(j) if x * y == z)
                assert a[i][j][k] == count
    t = next(i for i, c in enumerate(classes) if c.element_order == 2)
    r = next(i for i, c in enumerate(classes) if c.element_order == 3)
    # transpositions squared: three products give 1, six give 3-cycles (three per 3-cycle)
    assert (a[t][t][0], a[t][t][r], a[t][t][t]) == (3, 3, 0)


def test_dixon_prime():
    q = dixon_prime(60, 30)
    assert is_prime(q) and q % 30 == 1 and q > 2 * 8
    assert dixon_prime(60, 30, after=q) > q


def test_c2_table(tables):
    T = tables["cyclic(2)"]
    assert [[int(v.rational()) for v in row] for row in T.values] == [[1, 1], [1, -1]]


@pytest.mark.parametrize("g,degrees", [
    ("sym(3)", [1, 1, 2]),
    ("sl23", [1, 1, 1, 2, 2, 2, 3]),
    ("alt(5)", [1, 3, 3, 4, 5]),
    ("gl32", [1, 3, 3, 6, 7, 8]),
    ("quaternion8", [1, 1, 1, 1, 2]),
])
def test_degrees(tables, g, degrees):
    assert tables[g].degrees() == degrees


@pytest.mark.parametrize("g", DIXON_GROUPS)
def test_dixon_tables_validate(tables, g):
    T = tables[g]
    validate_table(T)
    G = load_group(g)
    assert T.k == len(G.conjugacy_classes())
    assert all(is_algebraic_integer(v) for row in T.values for v in row)


@pytest.mark.parametrize("g", DIXON_GROUPS)
def test_values_match_brute_force_class_functions(tables, g):
    # oracle: chi(g) is the trace of a representation, so chi(x^-1) = conj(chi(x))
    T = tables[g]
    G = load_group(g)
    idx = G.class_index()
    for j, c in enumerate(T.classes):
        jinv = idx[c.representative.inverse()]
        for row in T.values:
            assert row[jinv] == row[j].conj()


def test_psl33_table():
    T = dixon_schneider(load_group("psl33"))
    assert T.k == 12
    assert sorted(T.degrees()) == [1, 12, 13, 16, 16, 16, 16, 26, 26, 26, 27, 39]
    validate_table(T)


def test_determinism(tables):
    assert dixon_schneider(load_group("sl23")).dumps() == tables["sl23"].dumps()
    assert mn_table(6).dumps() == mn_table(6).dumps()


def test_mn_small():
    assert [[int(v.rational()) for v in row] for row in mn_table(2).values] == [[1, 1], [1, -1]]


@pytest.mark.parametrize("n", range(1, 10))
def test_mn_table_validates(n):
    T = mn_table(n)
    assert T.k == npartitions(n)
    assert T.order == factorial(n)


def test_mn_rows_reproduce_mn_value():
    T = mn_table(7)
    for lam, row in zip(T.row_labels, T.values):
        for mu, v in zip(T.class_labels, row):
            assert v == mn_value(lam, mu)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_dixon_agrees_with_mn(n):
    D = dixon_schneider(load_group(f"sym({n})"))
    M = mn_table(n)
    assert D.class_sizes() == M.class_sizes()
    assert [c.element_order for c in D.classes] == [c.element_order for c in M.classes]
    assert D.values == M.values


@pytest.mark.parametrize("n", range(2, 8))
def test_lexmin_reps_match_enumerated_classes(n):
    G = load_group(f"sym({n})")
    M = attach_group(mn_table(n), G)
    for c, mu in zip(M.classes, mn_table(n).class_labels):
        assert c.representative == lexmin_permutation(mu)
        assert sorted(x for x in c.representative.cycle_type()) == sorted(mu)


def _perturbed(T):
    rows = [list(r) for r in T.values]
    rows[1][1] = rows[1][1] + 1
    return replace(T, values=tuple(tuple(r) for r in rows))


def test_perturbed_value_fails_row_orthogonality(tables):
    with pytest.raises(ValidationError) as exc:
        validate_table(_perturbed(tables["sym(4)"]))
    assert exc.value.invariant == "row_orthogonality"


def test_ingest_roundtrip_and_perturbation(tables, tmp_path):
    T = tables["cyclic(2)"]
    path = tmp_path / "c2.json"
    write_table(T, path)
    U = ingest(path)
    assert U.values == T.values
    write_table(_perturbed(T), path)
    with pytest.raises(ValidationError):
        ingest(path)


def test_ingest_irrational_table_with_group(tables, tmp_path):
    path = tmp_path / "a5.json"
    write_table(tables["alt(5)"], path)
    U = ingest(path, load_group("alt(5)"))
    assert U.values == tables["alt(5)"].values
    assert U.classes[1].representative is not None
    with pytest.raises(ValidationError):
        ingest(path, load_group("sym(4)"))


def test_ingest_rejects_bad_schema(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"order": 2}))
    with pytest.raises(SchemaError):
        ingest(path)
    path.write_text("not json")
    with pytest.raises(SchemaError):
        ingest(path)


def write_sn_table_independently(n, path):
    """A writer sharing no code with the package's serializer; values have modulus 1."""
    mus = partitions(n)
    lams = partitions(n)
    exp = lcm(*range(1, n + 1))
    order = factorial(n)
    # identity class first, then the rest in partition order
    mus = [mus[-1]] + mus[:-1]
    where = {tuple(mu): j for j, mu in enumerate(mus)}
    pmaps = {}
    for q in (2, 3, 5, 7, 11, 13):
        if exp % q == 0:
            pmaps[str(q)] = [where[tuple(power_cycle_type(mu, q))] for mu in mus]
    rows = []
    for lam in [lams[0]] + lams[1:]:
        rows.append([{"m": 1, "coeffs": [str(mn_value(lam, mu))]} for mu in mus])
    data = {
        "order": order,
        "exponent": exp,
        "classes": [{"size": class_size(mu), "element_order": lcm(*mu)} for mu in mus],
        "power_maps": pmaps,
        "values": rows,
    }
    path.write_text(json.dumps(data))


def test_ingest_external_s10(tmp_path):
    path = tmp_path / "s10.json"
    write_sn_table_independently(10, path)
    T = ingest(path)
    assert T.k == 42 == npartitions(10)
    assert T.order == 3628800


def test_character_table_front_door(tmp_path):
    G = load_group("sym(4)")
    assert character_table(G).values == character_table(n=4, method="mn").values
    path = tmp_path / "s4.json"
    write_table(mn_table(4), path)
    assert character_table(G, "ingest", path=path).k == 5
    with pytest.raises(ValueError):
        character_table(G, "nonsense")
