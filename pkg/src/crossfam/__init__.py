"""Exact combinatorics of cross-intersecting set families.

Subset orders with O(k) rank/unrank, exact minimum shadows, the product and
sum bounds for cross-intersecting families with their extremal constructions,
and brute-force oracles that re-derive every bound at desk scale.
"""

from .core import (
    KSubset,
    Params,
    SetFamily,
    binom,
    complement,
    elements_from_mask,
    family_complement,
    mask_from_elements,
    restrict,
)
from .families import (
    BipartiteGraph,
    BoundReport,
    ExtremalPair,
    Thm2Bound,
    UnsaturatedMatchingError,
    build_extremal_pair,
    build_lemma7_decomposition,
    build_prop1_graph,
    check_proof_inequalities,
    extremal_pair_sizes,
    find_block_matching,
    hilton_compress,
    is_cross_intersecting,
    is_cross_union,
    lemma7_bound,
    max_compatible_b,
    prop1_sum_bound,
    pyber_bound,
    segment_shadow_sizes,
    segments_cross_intersecting,
    thm1_bound,
    thm2_bound,
)
from .matching import hopcroft_karp
from .oracle import (
    SweepConfig,
    Verdict,
    brute_max_compatible_b_table,
    sweep_pyber,
    sweep_thm1,
    sweep_thm2,
    verify_hilton_exhaustive,
    verify_kk,
    verify_kk_and_mors,
    verify_lemma7,
    verify_mors,
    verify_prop1,
)
from .orders import (
    Order,
    SegmentSpec,
    compare,
    initial_segment,
    iter_order,
    rank,
    rank_duality_check,
    sort_key,
    unrank,
)
from .shadows import (
    LovaszRoot,
    ShadowQuery,
    cascade_decomposition,
    cascade_min_shadow,
    colex_segment_shadow_size,
    kk_min_shadow,
    lovasz_bound,
    lovasz_root,
    mors_bound,
    real_binomial,
    shadow,
)

__version__ = "0.1.0"
