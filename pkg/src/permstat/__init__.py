"""Permutation statistics, insertion codes and the maj/stat involution.

The public surface is re-exported here; see the submodules for details:
``perm`` (statistics), ``patterns`` (dashed patterns), ``labeling``
(insertion maps and code tables), ``bijections`` and ``harness``
(exhaustive sweeps).
"""

__version__ = "0.1.0"

from .bijections import (
    BijectionReport,
    apply_map,
    burstein,
    carlitz,
    check_first_max_relations,
    rho,
    rho_trace,
)
from .harness import (
    PROPERTIES,
    DistributionTable,
    VerificationReport,
    distribution,
    export_table,
    parse_table,
    verify,
)
from .labeling import CodeWord, Labeling, Scheme, code_of, code_trace, decode, insert, make_labeling, uninsert
from .patterns import (
    DashedPattern,
    MultisetQuadruple,
    PatternSyntaxError,
    check_anchored_identity,
    compute_abcd,
    count_occurrences,
    count_occurrences_naive,
    maj_via_patterns,
    parse_pattern,
)
from .perm import (
    Permutation,
    StatVector,
    adj,
    asc,
    ascents,
    des,
    descents,
    inv,
    maj,
    prefix_transform,
    restrict,
    stat,
    stat_vector,
)
