"""Shadows of uniform families and exact/approximate minimum-shadow bounds.

The t-shadow of a k-uniform family is the set of t-subsets contained in at
least one member. The exact minimum shadow over all families of a given size
is attained by a colex initial segment (Kruskal-Katona); it is computed here
both by materializing the segment and by the greedy binomial-cascade
decomposition, so either path can audit the other. The Lovasz real-exponent
form gives a weaker but closed-form lower bound, and the Mors bound covers
families whose union is the whole ground set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, count
from typing import Iterator

from .core import KSubset, Params, SetFamily, binom, mask_from_elements

# Largest family size for which the default minimum-shadow path materializes
# the colex segment; beyond this the cascade formula is used.
SEGMENT_PATH_LIMIT = 10**6


@dataclass(frozen=True)
class ShadowQuery:
    """Parameters of a minimum-shadow question: layer (n, k), target t, size m."""

    params: Params
    t: int
    m: int

    def __post_init__(self) -> None:
        if not 0 <= self.t <= self.params.k:
            raise ValueError(f"need 0 <= t <= k, got t={self.t}, k={self.params.k}")
        if not 0 <= self.m <= self.params.layer_size:
            raise ValueError(
                f"family size {self.m} outside [0, {self.params.layer_size}]"
            )


@dataclass(frozen=True)
class LovaszRoot:
    """The real x >= k-1 with C(x, k) = m, where C(x, k) is the degree-k polynomial."""

    x: float
    m: int


def shadow(f: SetFamily, t: int) -> SetFamily:
    """All t-subsets contained in at least one member of `f`.

    For t = k this is `f` itself. The 0-shadow of a nonempty family is the
    single empty set, while the 0-shadow of the empty family is empty, exactly
    as the defining set comprehension reads.
    """
    k = f.params.k
    if not 0 <= t <= k:
        raise ValueError(f"need 0 <= t <= k, got t={t}, k={k}")
    n = f.params.n
    seen: set[tuple[int, ...]] = set()
    for s in f.members:
        seen.update(combinations(s.elements, t))
    return SetFamily(Params(n, t), frozenset(KSubset(n, e) for e in seen))


def _iter_colex_unbounded(k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for top in count(k):
        for rest in _iter_colex_prefix(top - 1, k - 1):
            yield rest + (top,)


def _iter_colex_prefix(limit: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for top in range(k, limit + 1):
        for rest in _iter_colex_prefix(top - 1, k - 1):
            yield rest + (top,)


def colex_segment_shadow_size(k: int, t: int, m: int) -> int:
    """|t-shadow| of the first m k-sets in colex, by direct expansion.

    The colex segment does not depend on the ambient ground set, so neither
    does this count.
    """
    if m == 0:
        return 0
    seen: set[int] = set()
    produced = 0
    for elems in _iter_colex_unbounded(k):
        for sub in combinations(elems, t):
            seen.add(mask_from_elements(sub))
        produced += 1
        if produced == m:
            break
    return len(seen)


def cascade_decomposition(m: int, k: int) -> list[tuple[int, int]]:
    """Greedy maximal representation m = sum of C(a_j, j), j = k, k-1, ...

    Returns [(a_k, k), (a_{k-1}, k-1), ...] with a_k > a_{k-1} > ... >= j.
    Requires m >= 1 and k >= 1.
    """
    if m < 1 or k < 1:
        raise ValueError(f"need m >= 1 and k >= 1, got m={m}, k={k}")
    terms: list[tuple[int, int]] = []
    rem = m
    for j in range(k, 0, -1):
        if rem == 0:
            break
        if j == 1:
            a = rem
        else:
            a = j
            while binom(a + 1, j) <= rem:
                a += 1
        terms.append((a, j))
        rem -= binom(a, j)
    if rem != 0:
        raise AssertionError(f"cascade decomposition failed for m={m}, k={k}")
    return terms


def cascade_min_shadow(k: int, t: int, m: int) -> int:
    """Minimum |t-shadow| of m k-sets, evaluated from the cascade terms."""
    if not 0 <= t <= k:
        raise ValueError(f"need 0 <= t <= k, got t={t}, k={k}")
    if m == 0:
        return 0
    return sum(binom(a, j - (k - t)) for a, j in cascade_decomposition(m, k))


def kk_min_shadow(query: ShadowQuery, method: str = "auto") -> int:
    """Exact minimum |t-shadow| over all families matching `query`.

    `method` selects the computation: "segment" materializes the colex
    segment (oracle grade), "cascade" evaluates the closed-form sum, "auto"
    uses the segment path up to SEGMENT_PATH_LIMIT members.
    """
    k, t, m = query.params.k, query.t, query.m
    if method == "auto":
        method = "segment" if m <= SEGMENT_PATH_LIMIT else "cascade"
    if method == "segment":
        return colex_segment_shadow_size(k, t, m)
    if method == "cascade":
        return cascade_min_shadow(k, t, m)
    raise ValueError(f"unknown method {method!r}")


def real_binomial(x: float, k: int) -> float:
    """C(x, k) for real x: x (x-1) ... (x-k+1) / k!."""
    prod = 1.0
    for i in range(k):
        prod *= x - i
    return prod / math.factorial(k)


def lovasz_root(m: int, k: int) -> LovaszRoot:
    """Solve C(x, k) = m for the unique x >= k-1.

    C(x, k) is strictly increasing for x >= k-1, so bisection on
    [k-1, k-1+m] followed by a Newton polish pins the root. Tolerance:
    |C(x, k) - m| <= max(1e-9 m, 1e-9).
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got k={k}")
    if m < 0:
        raise ValueError(f"need m >= 0, got m={m}")
    if m == 0:
        return LovaszRoot(float(k - 1), 0)
    lo, hi = float(k - 1), float(k - 1 + m)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if real_binomial(mid, k) < m:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    for _ in range(3):
        val = real_binomial(x, k)
        slope = val * sum(1.0 / (x - i) for i in range(k)) if x > k - 1 else 0.0
        if slope <= 0:
            break
        step = (val - m) / slope
        nxt = x - step
        if nxt > k - 1:
            x = nxt
    tol = max(1e-9 * m, 1e-9)
    if abs(real_binomial(x, k) - m) > tol:
        raise ArithmeticError(
            f"root solve did not converge for m={m}, k={k}: x={x}"
        )
    return LovaszRoot(x, m)


def lovasz_bound(m: int, k: int, t: int) -> float:
    """Lower bound C(x, t) on the minimum t-shadow, with C(x, k) = m."""
    if not 0 <= t <= k:
        raise ValueError(f"need 0 <= t <= k, got t={t}, k={k}")
    if m == 0:
        return 0.0
    return real_binomial(lovasz_root(m, k).x, t)


def mors_bound(n: int, l: int, t: int) -> int:
    """C(n-1, t) + C(l-1, t-1): minimum t-shadow of C(n-1, l) l-sets covering [n]."""
    if not (n >= l > t >= 1):
        raise ValueError(f"need n >= l > t >= 1, got n={n}, l={l}, t={t}")
    return binom(n - 1, t) + binom(l - 1, t - 1)
