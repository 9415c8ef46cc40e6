"""Named groups and the JSON group format.

A group spec is one of

* a preset name: ``sym(n)``, ``alt(n)``, ``cyclic(n)``, ``dihedral(2n)``,
  ``quaternion8``, ``sl23``, ``gl32``, ``psl33``;
* inline JSON ``{"degree": n, "generators": [[[1, 2, 3], [4, 5]], ...]}``
  where each generator is a list of 1-based cycles (a single flat cycle
  ``[1, 2, 3]`` is accepted as well);
* a path to a file holding that JSON.

Matrix groups enter through their natural permutation actions: SL(2,3) on
the 8 nonzero vectors of F_3^2, GL(3,2) on the 7 nonzero vectors of F_2^3
and PSL(3,3) on the 13 points of the projective plane over F_3.
"""

from __future__ import annotations

import itertools
import json
import re
from pathlib import Path

from .perm import Permutation, PermGroup

# sym(n), alt(n), cyclic(n), dihedral(n); the parentheses are optional (dihedral8)
_PRESET_RE = re.compile(r"^\s*(sym|alt|cyclic|dihedral)\s*(?:\(\s*(\d+)\s*\)|(\d+))\s*$")


def symmetric_group(n: int) -> PermGroup:
    if n <= 1:
        return PermGroup([], degree=max(n, 1), name=f"sym({n})")
    gens = [Permutation.from_cycles([[1, 2]], n)]
    if n > 2:
        gens.append(Permutation.from_cycles([list(range(1, n + 1))], n))
    return PermGroup(gens, degree=n, name=f"sym({n})")


def alternating_group(n: int) -> PermGroup:
    if n < 3:
        return PermGroup([], degree=max(n, 1), name=f"alt({n})")
    gens = [Permutation.from_cycles([[1, 2, 3]], n)]
    if n > 3:
        long_cycle = list(range(1, n + 1)) if n % 2 else list(range(2, n + 1))
        gens.append(Permutation.from_cycles([long_cycle], n))
    return PermGroup(gens, degree=n, name=f"alt({n})")


def cyclic_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup([], degree=1, name="cyclic(1)")
    return PermGroup([Permutation.from_cycles([list(range(1, n + 1))], n)],
                     degree=n, name=f"cyclic({n})")


def dihedral_group(order: int) -> PermGroup:
    """Dihedral group of the given order acting on ``order/2`` points."""
    if order % 2 or order < 4:
        raise ValueError(f"dihedral order must be even and >= 4, got {order}")
    n = order // 2
    if n == 2:
        gens = [Permutation.from_cycles([[1, 2]], 4), Permutation.from_cycles([[3, 4]], 4)]
        return PermGroup(gens, degree=4, name="dihedral(4)")
    rot = Permutation.from_cycles([list(range(1, n + 1))], n)
    refl = Permutation._raw([(n - 1 - i) for i in range(n)])
    return PermGroup([rot, refl], degree=n, name=f"dihedral({order})")


def quaternion_group() -> PermGroup:
    """Q8 in its regular representation on 8 points."""
    # elements as (sign, unit) with unit in 1,i,j,k
    table = {("1", "1"): (1, "1")}
    units = ["1", "i", "j", "k"]
    prod = {
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }
    for u in units:
        table[("1", u)] = (1, u)
        table[(u, "1")] = (1, u)
        if u != "1":
            table[(u, u)] = (-1, "1")
    table.update(prod)
    elems = [(s, u) for s in (1, -1) for u in units]
    idx = {e: i for i, e in enumerate(elems)}

    def mul(a, b):
        s, u = table[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    def right_mult(g):
        return Permutation._raw([idx[mul(e, g)] for e in elems])

    return PermGroup([right_mult((1, "i")), right_mult((1, "j"))], degree=8, name="quaternion8")


def _matrix_action(q: int, dim: int, mats, projective: bool, name: str) -> PermGroup:
    vecs = [v for v in itertools.product(range(q), repeat=dim) if any(v)]
    if projective:
        def normal(v):
            lead = next(x for x in v if x)
            inv = pow(lead, -1, q)
            return tuple((x * inv) % q for x in v)
        points = sorted({normal(v) for v in vecs})
    else:
        def normal(v):
            return tuple(v)
        points = vecs
    idx = {v: i for i, v in enumerate(points)}
    gens = []
    for M in mats:
        img = []
        for v in points:
            w = tuple(sum(v[r] * M[r][c] for r in range(dim)) % q for c in range(dim))
            img.append(idx[normal(w)])
        gens.append(Permutation(img))
    return PermGroup(gens, degree=len(points), name=name)


def sl23() -> PermGroup:
    return _matrix_action(3, 2, [((1, 1), (0, 1)), ((1, 0), (1, 1))], False, "sl23")


def gl32() -> PermGroup:
    mats = [((1, 1, 0), (0, 1, 0), (0, 0, 1)), ((0, 1, 0), (0, 0, 1), (1, 0, 0))]
    return _matrix_action(2, 3, mats, False, "gl32")


def psl33() -> PermGroup:
    mats = [((1, 1, 0), (0, 1, 0), (0, 0, 1)), ((0, 1, 0), (0, 0, 1), (1, 0, 0))]
    return _matrix_action(3, 3, mats, True, "psl33")


_FIXED = {"quaternion8": quaternion_group, "sl23": sl23, "gl32": gl32, "psl33": psl33}


def symmetric_degree(spec: str) -> int | None:
    """``n`` when ``spec`` names the preset ``sym(n)``, else None."""
    m = _PRESET_RE.match(spec) if isinstance(spec, str) else None
    if m and m.group(1) == "sym":
        return int(m.group(2) or m.group(3))
    return None


def group_from_json(data: dict, name: str | None = None) -> PermGroup:
    try:
        degree = int(data["degree"])
        raw_gens = data["generators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"group JSON needs 'degree' and 'generators': {exc}") from None
    gens = []
    for g in raw_gens:
        cycles = [g] if g and isinstance(g[0], int) else g
        gens.append(Permutation.from_cycles(cycles, degree))
    return PermGroup(gens, degree=degree, name=name or data.get("name"))


def load_group(spec) -> PermGroup:
    """Resolve a group spec (preset name, inline JSON, dict, or file path)."""
    if isinstance(spec, dict):
        return group_from_json(spec)
    text = str(spec).strip()
    m = _PRESET_RE.match(text)
    if m:
        kind, n = m.group(1), int(m.group(2) or m.group(3))
        return {"sym": symmetric_group, "alt": alternating_group,
                "cyclic": cyclic_group, "dihedral": dihedral_group}[kind](n)
    if text in _FIXED:
        return _FIXED[text]()
    if text.startswith("{"):
        return group_from_json(json.loads(text))
    path = Path(text)
    if path.exists():
        return group_from_json(json.loads(path.read_text()), name=path.stem)
    raise ValueError(f"unknown group spec {spec!r}")


def spec_label(spec) -> str:
    if isinstance(spec, dict):
        return spec.get("name") or json.dumps(spec, sort_keys=True)
    return str(spec).strip()
