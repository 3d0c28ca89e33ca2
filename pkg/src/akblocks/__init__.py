"""e-cores, e-weights and blocks of Ariki-Koike algebras via the Uglov map."""

from .beta_core import (
    EMPTY,
    BetaSet,
    EQuotient,
    Partition,
    beta_set,
    delta,
    e_core,
    e_quotient,
    e_quotient_inverse,
    e_weight,
    hub,
    members_above,
    partition_of,
    partitions,
    shift,
)
from .blocks import (
    BlockDescriptor,
    GuardExceeded,
    ScopesStatus,
    block_of,
    enumerate_block,
    same_block,
    scopes_status,
    si_dot_block,
    wk_pair,
)
from .multipartition import (
    ChargedMultipartition,
    Node,
    boundary_nodes,
    charged,
    multi_hub,
    residue,
    residue_content,
)
from .uglov import UglovImage, pair_core, pair_weight, uglov_inverse, uglov_map, uglov_partition, upsilon
from .weyl import (
    DomainClass,
    WeylElement,
    act_right,
    canonicalize,
    classify_charge,
    dot_ej_beta,
    dot_si_beta,
    dot_si_multipartition,
)

__version__ = "0.1.0"
