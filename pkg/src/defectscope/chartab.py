"""Ordinary character tables: Dixon-Schneider, Murnaghan-Nakayama, and JSON ingest.

Columns follow the canonical class order of :mod:`defectscope.perm`
(size, element order, least representative).  Rows are sorted by degree
and then by their value vectors, with the trivial character forced first.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import factorial, gcd, isqrt, lcm
from pathlib import Path

import jsonschema

from . import modp
from .cyclo import CycloNum, _phi, cyclo_dot
from .errors import LimitExceeded, SchemaError, SplitFailure, ValidationError
from .perm import ConjugacyClass, PermGroup, is_prime, prime_divisors
from . import symfunc

log = logging.getLogger(__name__)

MAX_CLASSES = 50


@dataclass(frozen=True)
class CharacterTable:
    order: int
    exponent: int
    classes: tuple
    power_maps: dict
    values: tuple
    row_labels: tuple | None = None
    class_labels: tuple | None = None
    method: str = ""
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def k(self) -> int:
        return len(self.classes)

    def degrees(self) -> list[int]:
        return [int(row[0].rational()) for row in self.values]

    def class_sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    def is_rational(self) -> bool:
        return all(v.is_rational() for row in self.values for v in row)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "exponent": self.exponent,
            "classes": [{"size": c.size, "element_order": c.element_order} for c in self.classes],
            "power_maps": {str(q): list(m) for q, m in sorted(self.power_maps.items())},
            "values": [[v.to_json() for v in row] for row in self.values],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


# --- validation ------------------------------------------------------------------

def _rational_matrix(table):
    return [[Fraction(v.num[0], v.den) for v in row] for row in table.values]


def validate_table(table: CharacterTable) -> CharacterTable:
    """Check every table invariant exactly; raise ValidationError naming the first failure."""
    k = table.k
    N = table.order
    vals = table.values
    if len(vals) != k or any(len(r) != k for r in vals):
        raise ValidationError("shape", (len(vals), k))
    sizes = table.class_sizes()
    if sum(sizes) != N:
        raise ValidationError("class_equation", (), f"sizes sum to {sum(sizes)}, order is {N}")
    for j, s in enumerate(sizes):
        if s <= 0 or N % s:
            raise ValidationError("class_size", (j,))
    if table.classes[0].size != 1 or table.classes[0].element_order != 1:
        raise ValidationError("identity_class", (0,))
    for j, v in enumerate(vals[0]):
        if v != 1:
            raise ValidationError("trivial_row", (0, j))
    degs = []
    for i, row in enumerate(vals):
        d = row[0]
        if not d.is_rational() or d.rational().denominator != 1 or d.rational() <= 0 \
                or N % int(d.rational()):
            raise ValidationError("degree", (i, 0))
        degs.append(int(d.rational()))
    if sum(d * d for d in degs) != N:
        raise ValidationError("degree_sum", (), f"sum of squares {sum(d * d for d in degs)} != {N}")
    for i, row in enumerate(vals):
        for j, v in enumerate(row):
            if not v.is_integral():
                raise ValidationError("integrality", (i, j))
    if table.is_rational():
        X = _rational_matrix(table)
        for i in range(k):
            for j in range(i, k):
                s = sum(sz * a * b for sz, a, b in zip(sizes, X[i], X[j]))
                if s != (N if i == j else 0):
                    raise ValidationError("row_orthogonality", (i, j), f"inner product {s}")
        for a in range(k):
            for b in range(a, k):
                s = sum(X[i][a] * X[i][b] for i in range(k))
                if s != (N // sizes[a] if a == b else 0):
                    raise ValidationError("column_orthogonality", (a, b), f"sum {s}")
    else:
        conj = [[v.conj() for v in row] for row in vals]
        for i in range(k):
            for j in range(i, k):
                s = cyclo_dot(vals[i], conj[j], sizes)
                if s != (N if i == j else 0):
                    raise ValidationError("row_orthogonality", (i, j), f"inner product {s!r}")
        for a in range(k):
            col_a = [vals[i][a] for i in range(k)]
            for b in range(a, k):
                s = cyclo_dot(col_a, [conj[i][b] for i in range(k)])
                if s != (N // sizes[a] if a == b else 0):
                    raise ValidationError("column_orthogonality", (a, b), f"sum {s!r}")
    orders = [c.element_order for c in table.classes]
    for q, pm in table.power_maps.items():
        if len(pm) != k:
            raise ValidationError("power_maps", (q,), "wrong length")
        for j, t in enumerate(pm):
            o = orders[j]
            want = o // gcd(o, q)
            if not 0 <= t < k or orders[t] != want:
                raise ValidationError("power_maps", (q, j), f"class {t} has wrong element order")
    return table


# --- shared construction helpers -------------------------------------------------

def _row_key(row):
    return tuple(v.sort_key() for v in row)


def _canonical_rows(rows, labels=None):
    """Sort rows by (degree, value vector) keeping the trivial character first."""
    idx = list(range(len(rows)))

    def key(i):
        row = rows[i]
        trivial = all(v == 1 for v in row)
        return (int(row[0].rational()), not trivial, _row_key(row))

    idx.sort(key=key)
    new_rows = tuple(tuple(rows[i]) for i in idx)
    new_labels = tuple(labels[i] for i in idx) if labels is not None else None
    return new_rows, new_labels


def _power_maps_from_group(G: PermGroup, classes) -> dict:
    class_of = G.class_index()
    out = {}
    for q in prime_divisors(G.exponent) if G.exponent > 1 else []:
        out[q] = tuple(class_of[c.representative ** q] for c in classes)
    return out


# --- Dixon-Schneider -------------------------------------------------------------

def class_constants(G: PermGroup) -> list:
    """``a[i][j][k]`` = number of pairs (x, y) in C_i x C_j with xy = z, z a fixed element of C_k."""
    classes = G.conjugacy_classes()
    class_of = G.class_index()
    k = len(classes)
    elems = G.elements()
    cls = [class_of[x] for x in elems]
    invs = [x.inverse() for x in elems]
    a = [[[0] * k for _ in range(k)] for _ in range(k)]
    for kk, c in enumerate(classes):
        z = c.representative
        for xi, xinv in zip(cls, invs):
            y = xinv * z
            a[xi][class_of[y]][kk] += 1
    return a


def dixon_prime(order: int, exponent: int, after: int = 0) -> int:
    """Least prime q = 1 mod exponent with q > 2*ceil(sqrt(order)) and q > after."""
    root = isqrt(order)
    if root * root < order:
        root += 1
    bound = max(2 * root, after)
    q = (bound // exponent) * exponent + 1
    if q <= bound:
        q += exponent
    while not is_prime(q):
        q += exponent
    return q


def _split(basis, M, q):
    """Split a common invariant subspace (rows in RREF) into eigenspaces of M."""
    r = len(basis)
    _, pivots = modp.rref(basis, q)
    images = [modp.matvec(M, v, q) for v in basis]
    # A^T c = lambda c describes eigenvectors sum_s c_s v_s
    At = [[images[s][pivots[t]] for s in range(r)] for t in range(r)]
    eig = modp.roots(modp.charpoly(At, q), q)
    pieces = []
    total = 0
    for lam in eig:
        shifted = [[(At[i][j] - (lam if i == j else 0)) % q for j in range(r)] for i in range(r)]
        cs = modp.nullspace(shifted, q)
        vecs = []
        for c in cs:
            v = [0] * len(basis[0])
            for s, cc in enumerate(c):
                if cc:
                    v = [(x + cc * y) % q for x, y in zip(v, basis[s])]
            vecs.append(v)
        R, _ = modp.rref(vecs, q)
        pieces.append(R)
        total += len(R)
    if total != r:
        raise SplitFailure(f"eigenspaces of dimension {total} inside a space of dimension {r}")
    return pieces


def _dixon_mod(G, A, q):
    classes = G.conjugacy_classes()
    class_of = G.class_index()
    k = len(classes)
    N = G.order
    m = G.exponent
    spaces = [[[1 if i == j else 0 for j in range(k)] for i in range(k)]]
    for j in range(k):
        if all(len(s) == 1 for s in spaces):
            break
        M = [[A[i][j][kk] % q for kk in range(k)] for i in range(k)]
        nxt = []
        for s in spaces:
            nxt.extend([s] if len(s) == 1 else _split(s, M, q))
        spaces = nxt
    if any(len(s) != 1 for s in spaces) or len(spaces) != k:
        raise SplitFailure(f"class matrices did not separate all characters mod {q}")
    sizes = [c.size for c in classes]
    inv_class = [class_of[c.representative.inverse()] for c in classes]
    bound = isqrt(N)
    z = pow(modp.primitive_root(q), (q - 1) // m, q)
    rows = []
    for (v,) in spaces:
        if v[0] == 0:
            raise SplitFailure("eigenvector vanishes on the identity class")
        inv0 = pow(v[0], -1, q)
        w = [x * inv0 % q for x in v]
        s = sum(w[i] * w[inv_class[i]] * pow(sizes[i], -1, q) for i in range(k)) % q
        if s == 0:
            raise SplitFailure("degenerate norm")
        d = modp.sqrt_small(N * pow(s, -1, q), q, bound)
        if d is None:
            raise SplitFailure(f"no admissible degree mod {q}")
        chi = [w[i] * d * pow(sizes[i], -1, q) % q for i in range(k)]
        row = []
        for i, c in enumerate(classes):
            o = c.element_order
            g = c.representative
            pcls = []
            x = G.identity()
            for _ in range(o):
                pcls.append(class_of[x])
                x = x * g
            zo = pow(z, m // o, q)
            o_inv = pow(o, -1, q)
            terms = {}
            for t in range(o):
                mult = sum(chi[pcls[l]] * pow(zo, (-t * l) % o, q) for l in range(o)) * o_inv % q
                if mult > d:
                    raise SplitFailure(f"eigenvalue multiplicity {mult} exceeds degree {d}")
                if mult:
                    terms[t * (m // o)] = mult
            if sum(terms.values()) != d:
                raise SplitFailure("multiplicities do not add up to the degree")
            row.append(CycloNum.from_exponents(m, terms))
        rows.append(row)
    return rows


def dixon_schneider(G: PermGroup, max_classes: int = MAX_CLASSES, attempts: int = 6) -> CharacterTable:
    """Character table of G from the class algebra, eigenvectors computed mod a prime."""
    classes = G.conjugacy_classes()
    if len(classes) > max_classes:
        raise LimitExceeded(f"{len(classes)} classes exceeds the limit of {max_classes}")
    A = class_constants(G)
    N, m = G.order, G.exponent
    q = dixon_prime(N, m)
    last = None
    for _ in range(attempts):
        try:
            rows = _dixon_mod(G, A, q)
            break
        except SplitFailure as exc:
            log.warning("Dixon-Schneider failed mod %d (%s); trying next prime", q, exc)
            last = exc
            q = dixon_prime(N, m, after=q)
    else:
        raise last
    rows, _ = _canonical_rows(rows)
    table = CharacterTable(
        order=N, exponent=m, classes=tuple(classes),
        power_maps=_power_maps_from_group(G, classes), values=rows,
        method="dixon", meta={"prime": q},
    )
    return validate_table(table)


# --- symmetric groups ------------------------------------------------------------

def sn_classes(n: int):
    """Canonical class list of S_n with the matching cycle types."""
    items = []
    for mu in symfunc.partitions(n):
        rep = symfunc.lexmin_permutation(mu)
        items.append((symfunc.class_size(mu), lcm(1, *mu), rep, mu))
    items.sort(key=lambda t: t[:3])
    classes = tuple(ConjugacyClass(rep, s, o) for s, o, rep, _ in items)
    return classes, tuple(t[3] for t in items)


def mn_table(n: int) -> CharacterTable:
    """Character table of S_n from the Murnaghan-Nakayama rule."""
    if n > 14:
        raise LimitExceeded(f"mn_table supports n <= 14, got {n}")
    classes, mus = sn_classes(n)
    m = symfunc.sn_exponent(n)
    where = {mu: j for j, mu in enumerate(mus)}
    power_maps = {}
    for q in prime_divisors(m) if m > 1 else []:
        power_maps[q] = tuple(where[symfunc.power_cycle_type(mu, q)] for mu in mus)
    lams = symfunc.partitions(n)
    rows = [[CycloNum.from_int(symfunc.mn_value(lam, mu), m) for mu in mus] for lam in lams]
    rows, labels = _canonical_rows(rows, lams)
    table = CharacterTable(
        order=factorial(n), exponent=m, classes=classes, power_maps=power_maps,
        values=rows, row_labels=labels, class_labels=mus, method="mn",
    )
    return validate_table(table)


# --- JSON ingest -----------------------------------------------------------------

_CYCLO_SCHEMA = {
    "type": "object",
    "required": ["m", "coeffs"],
    "properties": {
        "m": {"type": "integer", "minimum": 1},
        "coeffs": {"type": "array", "items": {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}},
    },
}

TABLE_SCHEMA = {
    "type": "object",
    "required": ["order", "exponent", "classes", "power_maps", "values"],
    "properties": {
        "order": {"type": "integer", "minimum": 1},
        "exponent": {"type": "integer", "minimum": 1},
        "classes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["size", "element_order"],
                "properties": {
                    "size": {"type": "integer", "minimum": 1},
                    "element_order": {"type": "integer", "minimum": 1},
                },
            },
        },
        "power_maps": {
            "type": "object",
            "patternProperties": {r"^\d+$": {"type": "array", "items": {"type": "integer"}}},
            "additionalProperties": False,
        },
        "values": {"type": "array", "items": {"type": "array", "items": _CYCLO_SCHEMA}},
    },
}


def table_from_json(data: dict) -> CharacterTable:
    try:
        jsonschema.validate(data, TABLE_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise SchemaError(f"table JSON: {exc.message} at {list(exc.absolute_path)}") from None
    m = data["exponent"]
    rows = []
    for i, row in enumerate(data["values"]):
        out = []
        for j, v in enumerate(row):
            if m % v["m"]:
                raise SchemaError(f"value ({i},{j}) has modulus {v['m']} not dividing exponent {m}")
            if len(v["coeffs"]) != _phi(v["m"])[0]:
                raise SchemaError(f"value ({i},{j}) needs {_phi(v['m'])[0]} coefficients")
            out.append(CycloNum.from_json(v).lift(m))
        rows.append(tuple(out))
    classes = tuple(ConjugacyClass(None, c["size"], c["element_order"]) for c in data["classes"])
    pmaps = {int(q): tuple(v) for q, v in data["power_maps"].items()}
    return CharacterTable(order=data["order"], exponent=m, classes=classes,
                          power_maps=pmaps, values=tuple(rows), method="ingest")


def ingest(path, group: PermGroup | None = None) -> CharacterTable:
    """Load a table from JSON and accept it only if every invariant holds.

    With ``group`` given, the class sizes and element orders must also match
    the group's canonical classes, whose representatives are then attached.
    """
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not JSON: {exc}") from None
    table = validate_table(table_from_json(data))
    if group is not None:
        table = attach_group(table, group)
    return table


def attach_group(table: CharacterTable, G: PermGroup) -> CharacterTable:
    gcls = G.conjugacy_classes()
    if table.order != G.order or len(gcls) != table.k:
        raise ValidationError("group_mismatch", (), f"table order {table.order}/{table.k} classes vs group {G.order}/{len(gcls)}")
    for j, (a, b) in enumerate(zip(table.classes, gcls)):
        if (a.size, a.element_order) != (b.size, b.element_order):
            raise ValidationError("group_mismatch", (j,), "class size or element order differs")
    return replace(table, classes=tuple(gcls))


def write_table(table: CharacterTable, path) -> None:
    Path(path).write_text(json.dumps(table.to_json(), sort_keys=True, indent=1) + "\n")


def character_table(G: PermGroup | None = None, method: str = "dixon", *, n: int | None = None,
                    path=None) -> CharacterTable:
    """Front door used by the pipeline: ``dixon``, ``mn`` (needs n) or ``ingest`` (needs path)."""
    if method == "dixon":
        return dixon_schneider(G)
    if method == "mn":
        if n is None:
            raise ValueError("method 'mn' needs the symmetric degree n")
        return mn_table(n)
    if method == "ingest":
        if path is None:
            raise ValueError("method 'ingest' needs a table file")
        return ingest(path, G)
    raise ValueError(f"unknown method {method!r}")
