"""Blocks with cyclic defect groups: roots, inertial indices and Dade's count.

The root of a block B with defect group D is a block b of H = D C_G(D)
whose Brauer induction b^G is B.  The inertial index is
e = [I_G(b) : H], where I_G(b) is the stabilizer of b in N_G(D).
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import Block, BlockSystem, block_partition, central_character
from .chartab import CharacterTable, dixon_schneider
from .cyclo import reduce
from .errors import Mismatch, NonDivisor, NoRootFound
from .perm import (PermGroup, centralizer_of_subgroup, normalizer, product_subgroup)


@dataclass(frozen=True)
class RootData:
    H: PermGroup
    root: Block | None
    inertial_order: int
    e: int
    method: str


@dataclass(frozen=True)
class DadePrediction:
    p: int
    d: int
    e: int
    predicted_k: int


def _check(p: int, d: int, e: int) -> int:
    if e < 1 or (p**d - 1) % e:
        raise NonDivisor(f"e={e} does not divide p^d - 1 = {p**d - 1}")
    return p**d


def dade_k(p: int, d: int, e: int) -> DadePrediction:
    """Number of irreducible characters of a cyclic-defect block: e + (p^d - 1)/e."""
    pd = _check(p, d, e)
    return DadePrediction(p, d, e, e + (pd - 1) // e)


def classify_cyclic_strong(p: int, d: int, e: int) -> bool:
    """Whether the predicted k(B) equals k(D) = p^d."""
    pd = _check(p, d, e)
    return e + (pd - 1) // e == pd


def classify_cyclic_congruent(p: int, d: int, e: int) -> bool:
    """Whether the predicted k(B) is congruent to p^d modulo p."""
    pd = _check(p, d, e)
    return (e + (pd - 1) // e - pd) % p == 0


def strong_closed_form(p: int, d: int, e: int) -> bool:
    return e == 1 or (e == p - 1 and d == 1)


def congruent_closed_form(p: int, d: int, e: int) -> bool:
    return e % p in (1, p - 1)


def valid_inertial_indices(p: int) -> list[int]:
    return [e for e in range(1, p) if (p - 1) % e == 0]


# --- roots and inertial indices -----------------------------------------------------

def _induced_signature(G: PermGroup, table_G: CharacterTable, H: PermGroup,
                       table_H: CharacterTable, chi_H: int, R) -> tuple:
    """lambda_b^G on each G-class: sum of lambda_b over the H-classes inside C cap H."""
    cls_G = G.class_index()
    cls_H = H.class_index()
    inside = [set() for _ in range(table_G.k)]
    for h in H.elements():
        inside[cls_G[h]].add(cls_H[h])
    zero = R.field.zero()
    out = []
    for j in range(table_G.k):
        acc = zero
        for t in sorted(inside[j]):
            acc = acc + reduce(central_character(table_H, chi_H, t), R)
        out.append(acc)
    return tuple(out)


def local_subgroups(G: PermGroup, D: PermGroup) -> tuple[PermGroup, PermGroup]:
    """``(H, N)`` with H = D C_G(D) and N = N_G(D)."""
    C = centralizer_of_subgroup(G, D)
    H = product_subgroup(G, D, C)
    N = normalizer(G, D)
    return H, N


def brauer_correspondent(G: PermGroup, system: BlockSystem, block: Block, D: PermGroup,
                         method: str = "auto", cross_check: bool = True) -> RootData:
    """Root b of ``block`` in D C_G(D) and the inertial index e = [I_G(b) : D C_G(D)].

    ``method`` is ``general`` (Brauer map on blocks of H), ``principal``
    (e = [N_G(D) : H], principal blocks only) or ``auto`` (the fast path
    for principal blocks, cross-checked against the general one when
    ``cross_check`` is set).
    """
    H, N = local_subgroups(G, D)
    if method == "auto":
        method = "principal" if block.is_principal() else "general"
        if method == "principal" and cross_check:
            fast = _principal_root(H, N)
            slow = _general_root(G, system, block, H, N)
            if fast.e != slow.e:
                raise Mismatch(f"principal fast path e={fast.e} but Brauer map gives e={slow.e}")
            return slow
    if method == "principal":
        if not block.is_principal():
            raise ValueError("the principal fast path only applies to the principal block")
        return _principal_root(H, N)
    if method == "general":
        return _general_root(G, system, block, H, N)
    raise ValueError(f"unknown method {method!r}")


def _principal_root(H: PermGroup, N: PermGroup) -> RootData:
    return RootData(H, None, N.order, N.order // H.order, "principal")


def _general_root(G, system, block, H, N) -> RootData:
    R = system.reduction
    table_G = system.table
    table_H = dixon_schneider(H)
    sys_H = block_partition(table_H, system.p, reduction=R)
    target = block.signature
    root = None
    for b in sys_H.blocks:
        if _induced_signature(G, table_G, H, table_H, b.characters[0], R) == target:
            root = b
            break
    if root is None:
        raise NoRootFound(f"no block of D C_G(D) induces to block {block.characters}")
    cls_H = H.class_index()
    reps = [c.representative for c in H.conjugacy_classes()]
    sig = root.signature
    # one representative per coset nH of H in N
    seen = set()
    stab = 0
    H.elements()
    for n in N.elements():
        if n in seen:
            continue
        for h in H.elements():
            seen.add(h * n)
        moved = tuple(sig[cls_H[r.conjugate(n)]] for r in reps)
        if moved == sig:
            stab += 1
    return RootData(H, root, stab * H.order, stab, "general")


@dataclass(frozen=True)
class DadeReport:
    p: int
    d: int
    e: int
    kB: int
    predicted_k: int

    @property
    def ok(self) -> bool:
        return self.kB == self.predicted_k


def verify_dade(G: PermGroup, system: BlockSystem, block: Block, D: PermGroup | None = None,
                e: int | None = None, method: str = "auto") -> DadeReport:
    """Compare k(B) with e + (p^d - 1)/e; raise Mismatch when they differ."""
    D = block.defect_group if D is None else D
    if D is None or not D.is_cyclic():
        raise ValueError("verify_dade needs a block with a cyclic defect group")
    p, d = system.p, block.defect
    if e is None:
        e = brauer_correspondent(G, system, block, D, method=method).e
    pred = dade_k(p, d, e).predicted_k
    rep = DadeReport(p, d, e, block.kB, pred)
    if not rep.ok:
        raise Mismatch(f"k(B) = {block.kB} but Dade predicts {pred} (p={p}, d={d}, e={e})")
    return rep
