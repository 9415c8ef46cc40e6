"""p-blocks of a character table.

Two irreducible characters share a block when their central characters
agree on every class sum after reduction modulo a prime ideal above p.
Defects come from degrees; defect groups are Sylow p-subgroups of the
centralizer of a defect-class representative.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable

from .chartab import CharacterTable
from .cyclo import CycloNum, PrimeIdealReduction, build_reduction, reduce
from .errors import IntegralityViolation, NoDefectClass
from .perm import PermGroup, centralizer, nu, sylow


@dataclass(frozen=True)
class Block:
    characters: tuple
    degrees: tuple
    signature: tuple
    defect: int
    heights: tuple
    defect_class: int | None = None
    defect_group: PermGroup | None = field(default=None, compare=False)

    @property
    def kB(self) -> int:
        return len(self.characters)

    @property
    def k0B(self) -> int:
        return sum(1 for h in self.heights if h == 0)

    @property
    def kD(self) -> int | None:
        if self.defect_group is None:
            return None
        return k_of_defect_group(self.defect_group)

    def is_principal(self) -> bool:
        return 0 in self.characters


@dataclass(frozen=True)
class BlockSystem:
    p: int
    table: CharacterTable
    reduction: PrimeIdealReduction | None
    blocks: tuple
    principal_index: int = 0

    @property
    def principal(self) -> Block:
        return self.blocks[self.principal_index]

    def block_of(self, chi: int) -> Block:
        return next(b for b in self.blocks if chi in b.characters)


def central_character(table: CharacterTable, chi: int, cls: int) -> CycloNum:
    """omega_chi of a class sum: |C| chi(g) / chi(1)."""
    row = table.values[chi]
    value = row[cls] * table.classes[cls].size / row[0]
    if not value.is_integral():
        raise IntegralityViolation(f"omega_{chi}(C_{cls}) = {value!r} is not an algebraic integer")
    return value


def central_signature(table: CharacterTable, chi: int, R: PrimeIdealReduction) -> tuple:
    return tuple(reduce(central_character(table, chi, j), R) for j in range(table.k))


def _heights(degrees, p, full, d):
    return tuple(nu(x, p) - (full - d) for x in degrees)


def block_partition(table: CharacterTable, p: int,
                    reduction: PrimeIdealReduction | None = None) -> BlockSystem:
    """Split Irr(G) into p-blocks, principal block first, then by size and least index."""
    N = table.order
    degs = table.degrees()
    full = nu(N, p)
    if N % p:
        blocks = tuple(
            Block((i,), (degs[i],), (), 0, (0,), defect_class=0) for i in range(table.k))
        return BlockSystem(p, table, None, blocks, 0)
    R = reduction or build_reduction(p, table.exponent)
    groups: dict = {}
    for chi in range(table.k):
        groups.setdefault(central_signature(table, chi, R), []).append(chi)
    blocks = []
    for sig, chars in groups.items():
        bd = tuple(degs[i] for i in chars)
        d = max(full - nu(x, p) for x in bd)
        blk = Block(tuple(chars), bd, sig, d, _heights(bd, p, full, d))
        blocks.append(replace(blk, defect_class=_first_defect_class(table, blk, p)))
    blocks.sort(key=lambda b: (not b.is_principal(), -b.kB, b.characters[0]))
    return BlockSystem(p, table, R, tuple(blocks), 0)


def defect(block: Block) -> int:
    return block.defect


def defect_class_candidates(table: CharacterTable, block: Block, p: int) -> list[int]:
    """Classes C with lambda_B(C) != 0 mod p and nu_p(|C_G(x)|) equal to the defect."""
    N = table.order
    out = []
    for j, c in enumerate(table.classes):
        if nu(N // c.size, p) != block.defect:
            continue
        if block.signature and block.signature[j].is_zero():
            continue
        out.append(j)
    return out


def _first_defect_class(table, block, p):
    cands = defect_class_candidates(table, block, p)
    if not cands:
        raise NoDefectClass(f"no defect class for block {block.characters}")
    return cands[0]


def defect_class_and_group(G: PermGroup, system: BlockSystem, block: Block,
                           cls: int | None = None) -> tuple[int, PermGroup]:
    """A defect class of the block and a Sylow p-subgroup of the centralizer of its representative."""
    table = system.table
    j = block.defect_class if cls is None else cls
    if j is None:
        j = _first_defect_class(table, block, system.p)
    if block.defect == 0:
        return j, PermGroup.trivial(G.degree)
    x = table.classes[j].representative
    if x is None:
        raise NoDefectClass("table classes carry no representatives; attach a group first")
    D = sylow(centralizer(G, x), system.p)
    if D.order != system.p ** block.defect:
        raise NoDefectClass(f"Sylow subgroup of order {D.order} in the centralizer of class {j}, "
                            f"expected {system.p}^{block.defect}")
    return j, D


def k_of_defect_group(D: PermGroup) -> int:
    return len(D.conjugacy_classes())


def heights(block: Block) -> tuple:
    return block.heights


def k0(block: Block) -> int:
    return block.k0B


def brauer_bound_check(block: Block, p: int) -> bool:
    d = block.defect
    bound = p ** (2 * d - 2) if d >= 3 else p**d
    return block.kB <= bound


DefectGroupProvider = Callable[[BlockSystem, Block], PermGroup]


def with_defect_groups(system: BlockSystem, G: PermGroup | None = None,
                       provider: DefectGroupProvider | None = None) -> BlockSystem:
    """Attach defect groups, from centralizers in ``G`` or from a custom provider."""
    new = []
    for b in system.blocks:
        if provider is not None:
            D = provider(system, b)
        elif G is not None:
            _, D = defect_class_and_group(G, system, b)
        else:
            raise ValueError("need a group or a defect-group provider")
        new.append(replace(b, defect_group=D))
    return replace(system, blocks=tuple(new))
