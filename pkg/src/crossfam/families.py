"""Cross-intersecting families: predicates, compression, bounds, and graphs.

Two families are cross-intersecting when every set of one meets every set of
the other, and cross-union when no pair of sets covers the ground set. The
central computational device is segment compression: any cross-intersecting
pair can be replaced by lex initial segments of the same sizes (Hilton's
lemma), which turns two-family questions into questions about a single
monotone compatibility curve.

The curve itself comes from a complement argument: the lex segments of sizes
(a, b) on the (n, k) layer are cross-intersecting exactly when

    a + sigma(b) <= C(n, k),

where sigma(b) is the minimum k-shadow of b sets on the (n, n-k) layer.
Complementation maps a lex segment to a reversed-colex initial segment, whose
k-shadow is again a reversed-colex initial segment of minimum size, i.e. it
occupies the last sigma(b) lex positions.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

from .core import KSubset, Params, SetFamily, binom
from .matching import hopcroft_karp
from .orders import Order, SegmentSpec
from .shadows import cascade_min_shadow


class UnsaturatedMatchingError(RuntimeError):
    """Raised when a matching expected to saturate the smaller side does not."""


def is_cross_intersecting(a: SetFamily, b: SetFamily) -> bool:
    """True iff every member of `a` meets every member of `b`.

    The two families must share the ground set; their layer sizes may differ.
    Empty families are cross-intersecting with everything (vacuous truth).
    """
    if a.params.n != b.params.n:
        raise ValueError(
            f"ground sets differ: n={a.params.n} vs n={b.params.n}"
        )
    b_masks = b.member_masks()
    for ma in a.member_masks():
        for mb in b_masks:
            if not ma & mb:
                return False
    return True


def is_cross_union(c: SetFamily, d: SetFamily) -> bool:
    """True iff no pair (C, D) covers the whole ground set."""
    if c.params.n != d.params.n:
        raise ValueError(
            f"ground sets differ: n={c.params.n} vs n={d.params.n}"
        )
    full = (1 << c.params.n) - 1
    d_masks = d.member_masks()
    for mc in c.member_masks():
        for md in d_masks:
            if (mc | md) == full:
                return False
    return True


def hilton_compress(a: SetFamily, b: SetFamily) -> tuple[SegmentSpec, SegmentSpec]:
    """Replace a cross-intersecting pair by lex segments of the same sizes.

    The returned segment pair is cross-intersecting again; callers that want
    the materialized families can pass the specs to `orders.initial_segment`.
    """
    if not is_cross_intersecting(a, b):
        raise ValueError("input families are not cross-intersecting")
    return (
        SegmentSpec(Order.LEX, a.params, len(a)),
        SegmentSpec(Order.LEX, b.params, len(b)),
    )


@lru_cache(maxsize=None)
def segment_shadow_sizes(n: int, k: int) -> tuple[int, ...]:
    """sigma(b) for b = 0 .. C(n, k): min k-shadow of b sets of the (n, n-k) layer."""
    if n < 2 * k:
        raise ValueError(f"need n >= 2k, got n={n}, k={k}")
    total = binom(n, k)
    return tuple(cascade_min_shadow(n - k, k, b) for b in range(total + 1))


def segments_cross_intersecting(n: int, k: int, a_size: int, b_size: int) -> bool:
    """Whether the lex segments of sizes (a_size, b_size) are cross-intersecting."""
    total = binom(n, k)
    for size in (a_size, b_size):
        if not 0 <= size <= total:
            raise ValueError(f"segment size {size} outside [0, {total}]")
    return a_size + segment_shadow_sizes(n, k)[b_size] <= total


def max_compatible_b(n: int, k: int, a_size: int) -> int:
    """Largest b such that the lex segments of sizes (a_size, b) are cross-intersecting.

    Computed from the compatibility curve; sigma is nondecreasing in b, so a
    bisection finds the answer in O(log C(n, k)) probes. Nonincreasing in
    a_size, and symmetric: b <= max_compatible_b(a) iff a <= max_compatible_b(b).
    """
    total = binom(n, k)
    if not 0 <= a_size <= total:
        raise ValueError(f"a_size {a_size} outside [0, {total}]")
    sigma = segment_shadow_sizes(n, k)
    return bisect_right(sigma, total - a_size) - 1


@dataclass(frozen=True)
class ExtremalPair:
    """The two-family construction attaining the sharpened product bounds.

    For 2 <= i <= k+1 over [n]:
      a_family = all k-sets containing 1 that meet [2, i]
      b_family = all k-sets containing 1, plus those avoiding 1 that contain [2, i]
    """

    i: int
    a_family: SetFamily
    b_family: SetFamily
    sizes: tuple[int, int]

    @property
    def at_boundary(self) -> bool:
        """True when n = 2k, where the product bound has many optima."""
        return self.a_family.params.n == 2 * self.a_family.params.k


def extremal_pair_sizes(n: int, k: int, i: int) -> tuple[int, int]:
    """Closed-form sizes of the extremal pair: (|A_i|, |B_i|)."""
    a_size = binom(n - 1, k - 1) - binom(n - i, k - 1)
    b_size = binom(n - 1, k - 1) + binom(n - i, k - i + 1)
    return a_size, b_size


def build_extremal_pair(n: int, k: int, i: int) -> ExtremalPair:
    """Materialize the extremal pair and check its sizes against the closed forms."""
    if not 2 <= i <= k + 1:
        raise ValueError(f"need 2 <= i <= k+1, got i={i}, k={k}")
    if n < 2 * k or k < 1:
        raise ValueError(f"need n >= 2k > 0, got n={n}, k={k}")
    params = Params(n, k)
    window = set(range(2, i + 1))
    a_members, b_members = [], []
    for elems in combinations(range(1, n + 1), k):
        has_one = elems[0] == 1
        if has_one:
            b_members.append(elems)
            if window & set(elems):
                a_members.append(elems)
        elif window.issubset(elems):
            b_members.append(elems)
    pair = ExtremalPair(
        i,
        SetFamily.of(params, a_members),
        SetFamily.of(params, b_members),
        (len(a_members), len(b_members)),
    )
    if pair.sizes != extremal_pair_sizes(n, k, i):
        raise AssertionError(
            f"constructed sizes {pair.sizes} disagree with closed forms "
            f"{extremal_pair_sizes(n, k, i)} at (n={n}, k={k}, i={i})"
        )
    return pair


def pyber_bound(n: int, k: int) -> int:
    """C(n-1, k-1)^2, the product bound for cross-intersecting pairs, n >= 2k."""
    if k < 1 or n < 2 * k:
        raise ValueError(f"need n >= 2k > 0, got n={n}, k={k}")
    return binom(n - 1, k - 1) ** 2


def thm1_bound(n: int, k: int) -> int:
    """(C(n-1,k-1) + 1) (C(n-1,k-1) - C(n-k-1,k-1)).

    The empty-core hypothesis behind this bound needs n > 2k; the formula
    itself is evaluated for any n >= 2k, and sweeps flag the boundary.
    """
    if k < 1 or n < 2 * k:
        raise ValueError(f"need n >= 2k > 0, got n={n}, k={k}")
    star = binom(n - 1, k - 1)
    return (star + 1) * (star - binom(n - k - 1, k - 1))


class Thm2Bound(NamedTuple):
    b_threshold: int
    product_bound: int


def thm2_bound(n: int, k: int, i: int) -> Thm2Bound:
    """Size threshold and product bound of the sharpened inequality at parameter i."""
    if not 3 <= i <= k + 1:
        raise ValueError(f"need 3 <= i <= k+1, got i={i}, k={k}")
    if k < 1 or n < 2 * k:
        raise ValueError(f"need n >= 2k > 0, got n={n}, k={k}")
    star = binom(n - 1, k - 1)
    b_threshold = star + binom(n - i, k - i + 1)
    return Thm2Bound(b_threshold, b_threshold * (star - binom(n - i, k - 1)))


def prop1_sum_bound(n: int, k: int) -> int:
    """2 C(n-1, k-1): sum bound for segment pairs with both sizes >= C(n-2, k-2)."""
    if n < 2 * k:
        raise ValueError(f"need n >= 2k, got n={n}, k={k}")
    return 2 * binom(n - 1, k - 1)


def lemma7_bound(m: int, a: int, j: int) -> int:
    """C(m,a) + C(m-j,a-j) - C(m-j,a): sum bound under the size hypothesis at j."""
    if m < 2 * a:
        raise ValueError(f"need m >= 2a, got m={m}, a={a}")
    if j < 1:
        raise ValueError(f"need j >= 1, got j={j}")
    return binom(m, a) + binom(m - j, a - j) - binom(m - j, a)


@dataclass(frozen=True)
class BipartiteGraph:
    """Two families joined by all their disjoint pairs."""

    left: SetFamily
    right: SetFamily
    edges: tuple[tuple[KSubset, KSubset], ...]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if u.mask & v.mask:
                raise ValueError(f"edge joins intersecting sets: {u!r}, {v!r}")

    def adjacency(self) -> dict[KSubset, list[KSubset]]:
        adj: dict[KSubset, list[KSubset]] = {u: [] for u in self.left}
        for u, v in self.edges:
            adj[u].append(v)
        return adj

    def left_degrees(self) -> list[int]:
        counts = {u: 0 for u in self.left}
        for u, _ in self.edges:
            counts[u] += 1
        return [counts[u] for u in self.left]

    def right_degrees(self) -> list[int]:
        counts = {v: 0 for v in self.right}
        for _, v in self.edges:
            counts[v] += 1
        return [counts[v] for v in self.right]

    def is_regular(self, degree: int) -> bool:
        return all(d == degree for d in self.left_degrees()) and all(
            d == degree for d in self.right_degrees()
        )


def _disjointness_edges(
    left: SetFamily, right: SetFamily
) -> tuple[tuple[KSubset, KSubset], ...]:
    right_members = list(right)
    return tuple(
        (u, v) for u in left for v in right_members if not u.mask & v.mask
    )


def build_prop1_graph(n: int, k: int) -> BipartiteGraph:
    """Disjointness graph on the k-sets meeting {1, 2} in exactly one element.

    Left side: sets with 1 but not 2; right side: sets with 2 but not 1.
    The graph is regular of degree C(n-k-1, k-1).
    """
    if n < 2 * k:
        raise ValueError(f"need n >= 2k, got n={n}, k={k}")
    params = Params(n, k)
    left_sets, right_sets = [], []
    for elems in combinations(range(1, n + 1), k):
        has1, has2 = 1 in elems, 2 in elems
        if has1 and not has2:
            left_sets.append(elems)
        elif has2 and not has1:
            right_sets.append(elems)
    left = SetFamily.of(params, left_sets)
    right = SetFamily.of(params, right_sets)
    return BipartiteGraph(left, right, _disjointness_edges(left, right))


def build_lemma7_decomposition(
    m: int, a: int, j: int
) -> list[tuple[SetFamily, SetFamily]]:
    """Block decomposition used to match one side of the sum-bound graph.

    Over [m], with L the a-sets containing 1 and A1 those containing [1, j]:
      A0 = L - A1, B0 = a-sets avoiding 1 that meet [2, j].
    Block s (1 <= s <= j-1) takes the members whose trace on [2, j] is
    decided at position s+1:
      P_s = members of A0 containing [2, s] but not s+1,
      Q_s = members of B0 avoiding [2, s] and containing s+1.
    The blocks partition A0 and B0 with |P_s| = C(m-s-1, a-s) and
    |Q_s| = C(m-s-1, a-1).
    """
    if m < 2 * a:
        raise ValueError(f"need m >= 2a, got m={m}, a={a}")
    if j < 2:
        raise ValueError(f"need j >= 2, got j={j}")
    params = Params(m, a)
    blocks = []
    for s in range(1, j):
        head = list(range(1, s + 1))  # [1, s]
        rest = [e for e in range(s + 2, m + 1)]
        p_sets = [
            tuple(head + list(tail)) for tail in combinations(rest, a - s)
        ] if a - s >= 0 else []
        q_sets = [
            tuple(sorted((s + 1,) + tail)) for tail in combinations(rest, a - 1)
        ]
        blocks.append(
            (SetFamily.of(params, p_sets), SetFamily.of(params, q_sets))
        )
    return blocks


def find_block_matching(
    p: SetFamily, q: SetFamily
) -> list[tuple[KSubset, KSubset]]:
    """A matching of `p` into `q` along disjointness edges, saturating `p`.

    Raises UnsaturatedMatchingError when the maximum matching leaves part of
    `p` unmatched; truncating silently would mask a counterexample.
    """
    if len(p) > len(q):
        raise ValueError(f"expected |p| <= |q|, got {len(p)} > {len(q)}")
    q_members = list(q)
    adjacency = {
        u: [v for v in q_members if not u.mask & v.mask] for u in p
    }
    matching = hopcroft_karp(adjacency)
    if len(matching) < len(p):
        raise UnsaturatedMatchingError(
            f"maximum matching covers {len(matching)} of {len(p)} vertices"
        )
    return sorted(matching.items(), key=lambda uv: uv[0].elements)


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one exact bound or inequality evaluation."""

    bound_name: str
    parameters: dict
    bound_value: int
    attained_at: tuple | None
    verdict: str  # "holds", "fails", or "attained"

    @property
    def passed(self) -> bool:
        return self.verdict in ("holds", "attained")


def check_proof_inequalities(n: int, k: int) -> list[BoundReport]:
    """Exact-integer checks of the auxiliary binomial inequalities at (n, k).

    Covers the cross-product step used to dismiss small first families, the
    strict product gap and ratio-monotonicity steps of the complementary
    (cross-union) analysis, the two corner-product comparisons, and binomial
    log-concavity in the top argument. A failing row is a verdict, not an
    exception.
    """
    if k < 1 or n < 2 * k:
        raise ValueError(f"need n >= 2k > 0, got n={n}, k={k}")
    l = n - k
    reports = []

    # C(n-i, k-i) C(n, k) < C(n-i+1, k-i+1) C(n-1, k-1), strict, for 2 <= i <= k
    for i in range(2, k + 1):
        lhs = binom(n - i, k - i) * binom(n, k)
        rhs = binom(n - i + 1, k - i + 1) * binom(n - 1, k - 1)
        reports.append(
            BoundReport(
                "binom_step",
                {"n": n, "k": k, "i": i, "lhs": lhs, "rhs": rhs},
                rhs,
                None,
                "holds" if lhs < rhs else "fails",
            )
        )

    # strict gap C(n-1, l) C(n-3, l-1) > C(n-2, l) C(n-2, l-1); meaningful for k >= 2
    if k >= 2:
        lhs = binom(n - 2, l) * binom(n - 2, l - 1)
        rhs = binom(n - 1, l) * binom(n - 3, l - 1)
        f_value = binom(n - 1, k - 1) * (binom(n - 2, k - 2) + binom(n - 3, k - 2))
        reports.append(
            BoundReport(
                "product_gap",
                {"n": n, "k": k, "lhs": lhs, "rhs": rhs, "f": f_value},
                rhs,
                None,
                "holds" if rhs > lhs else "fails",
            )
        )

    # C(x, l-2) C(n-2, l) <= C(x, n-l-2) C(n-1, l) for l-2 <= x <= n-3
    for x in range(l - 2, n - 2):
        lhs = binom(x, l - 2) * binom(n - 2, l)
        rhs = binom(x, n - l - 2) * binom(n - 1, l)
        reports.append(
            BoundReport(
                "ratio_step",
                {"n": n, "k": k, "x": x, "lhs": lhs, "rhs": rhs},
                rhs,
                None,
                "holds" if lhs <= rhs else "fails",
            )
        )

    # corner products of the final two-bracket comparison
    lhs1 = binom(n - 4, l - 1) * binom(n - 1, l)
    rhs1 = binom(n - 3, l - 1) * binom(n - 2, l)
    reports.append(
        BoundReport(
            "corner_product_1",
            {"n": n, "k": k, "lhs": lhs1, "rhs": rhs1},
            rhs1,
            None,
            "holds" if lhs1 <= rhs1 else "fails",
        )
    )
    lhs2 = binom(n - 4, l - 1) * binom(n - 2, l - 1)
    rhs2 = binom(n - 3, l - 1) ** 2
    reports.append(
        BoundReport(
            "corner_product_2",
            {"n": n, "k": k, "lhs": lhs2, "rhs": rhs2},
            rhs2,
            None,
            "holds" if lhs2 <= rhs2 else "fails",
        )
    )

    # C(m, b)^2 >= C(m-1, b) C(m+1, b) for 1 <= b < m <= n
    bad = sum(
        1
        for m in range(2, n + 1)
        for b in range(1, m)
        if binom(m, b) ** 2 < binom(m - 1, b) * binom(m + 1, b)
    )
    reports.append(
        BoundReport(
            "log_concavity",
            {"n": n, "k": k, "violations": bad},
            0,
            None,
            "holds" if bad == 0 else "fails",
        )
    )
    return reports
