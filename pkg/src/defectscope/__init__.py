"""p-blocks of finite groups and the k(B) against k(D) comparison.

Character tables (Dixon-Schneider, Murnaghan-Nakayama, or ingested),
blocks from central characters reduced modulo a prime ideal above p,
defect groups, Dade's count for cyclic defect and per-block verdicts.
"""

from .blocks import Block, BlockSystem, block_partition, with_defect_groups
from .chartab import CharacterTable, character_table, dixon_schneider, ingest, mn_table, validate_table
from .classify import (BlockClassification, GroupReport, Verdict, analyze, classify_block, scan,
                       verify_general_cases)
from .cyclo import CycloNum, build_reduction, reduce
from .dade import brauer_correspondent, classify_cyclic_congruent, classify_cyclic_strong, dade_k
from .perm import Permutation, PermGroup, is_p_nilpotent, sylow
from .presets import load_group

__version__ = "0.1.0"

__all__ = [
    "Block", "BlockSystem", "block_partition", "with_defect_groups",
    "CharacterTable", "character_table", "dixon_schneider", "ingest", "mn_table", "validate_table",
    "BlockClassification", "GroupReport", "Verdict", "analyze", "classify_block", "scan",
    "verify_general_cases",
    "CycloNum", "build_reduction", "reduce",
    "brauer_correspondent", "classify_cyclic_congruent", "classify_cyclic_strong", "dade_k",
    "Permutation", "PermGroup", "is_p_nilpotent", "sylow",
    "load_group",
]
