"""Shared independent oracles: definitional orders and brute-force shadows.

Everything here is deliberately naive. Orders are decided straight from the
min/max symmetric-difference definitions and layers are sorted with a
pairwise comparator, so none of the library's ranking arithmetic is trusted
by the tests that use these helpers.
"""

from functools import cmp_to_key
from itertools import combinations


def definitional_compare(a, b, order: str) -> int:
    """-1/0/+1 from the defining min/max symmetric-difference conditions."""
    sa, sb = set(a), set(b)
    if sa == sb:
        return 0
    only_a, only_b = sa - sb, sb - sa
    if order == "lex":
        return -1 if min(only_a) < min(only_b) else 1
    if order == "colex":
        return -1 if max(only_a) < max(only_b) else 1
    if order == "revcolex":
        return -1 if min(only_a) > min(only_b) else 1
    raise ValueError(order)


def sorted_layer(n: int, k: int, order: str) -> list[tuple[int, ...]]:
    """All k-subsets of [n], sorted by the definitional comparator."""
    sets = list(combinations(range(1, n + 1), k))
    return sorted(sets, key=cmp_to_key(lambda x, y: definitional_compare(x, y, order)))


def brute_shadow(sets, t: int) -> set[tuple[int, ...]]:
    """t-subsets contained in at least one of the given element tuples."""
    out: set[tuple[int, ...]] = set()
    for elems in sets:
        out.update(combinations(elems, t))
    return out


def brute_cross_intersecting(a_sets, b_sets) -> bool:
    return all(set(x) & set(y) for x in a_sets for y in b_sets)
