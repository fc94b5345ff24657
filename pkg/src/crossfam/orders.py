"""Rank, unrank, and initial segments for three total orders on k-subsets.

Orders on the k-subsets of [n]:

  lex       F before G  iff  min(F - G) < min(G - F)
  colex     F before G  iff  max(F - G) < max(G - F)
  revcolex  colex after inverting the element order of [n];
            equivalently F before G iff min(F - G) > min(G - F)

Ranks are 0-based throughout. Relabeling x -> n+1-x turns lex into reversed
colex and vice versa, so every rank reduces to the colex rank, which the
combinatorial number system computes in O(k) arithmetic operations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .core import KSubset, Params, SetFamily, binom, complement


class Order(enum.Enum):
    """One of the three supported total orders."""

    LEX = "lex"
    COLEX = "colex"
    REVCOLEX = "revcolex"

    @classmethod
    def parse(cls, text: str) -> "Order":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(
                f"unknown order {text!r}; expected lex, colex, or revcolex"
            ) from None


@dataclass(frozen=True)
class SegmentSpec:
    """An initial segment: the first `size` k-subsets of [n] under `order`."""

    order: Order
    params: Params
    size: int

    def __post_init__(self) -> None:
        if not 0 <= self.size <= self.params.layer_size:
            raise ValueError(
                f"segment size {self.size} outside [0, {self.params.layer_size}]"
            )


def sort_key(s: KSubset, order: Order) -> tuple[int, ...]:
    """A tuple that sorts subsets of one layer into the given order."""
    if order is Order.LEX:
        return s.elements
    if order is Order.COLEX:
        return tuple(reversed(s.elements))
    return tuple(-e for e in s.elements)


def compare(a: KSubset, b: KSubset, order: Order) -> int:
    """-1, 0, or +1 as `a` precedes, equals, or follows `b`."""
    if a.n != b.n or a.k != b.k:
        raise ValueError(
            f"cannot compare subsets with different parameters: "
            f"(n={a.n}, k={a.k}) vs (n={b.n}, k={b.k})"
        )
    ka, kb = sort_key(a, order), sort_key(b, order)
    return (ka > kb) - (ka < kb)


def _relabel(elements: tuple[int, ...], n: int) -> tuple[int, ...]:
    # x -> n+1-x, re-sorted increasing
    return tuple(n + 1 - e for e in reversed(elements))


def _colex_rank(elements: tuple[int, ...]) -> int:
    return sum(binom(e - 1, j) for j, e in enumerate(elements, start=1))


def _colex_unrank(r: int, k: int) -> tuple[int, ...]:
    out = [0] * k
    for j in range(k, 0, -1):
        c = j - 1
        while binom(c + 1, j) <= r:
            c += 1
        out[j - 1] = c + 1
        r -= binom(c, j)
    return tuple(out)


def rank(s: KSubset, order: Order) -> int:
    """0-based position of `s` in the chosen order on its (n, k) layer."""
    if order is Order.COLEX:
        return _colex_rank(s.elements)
    if order is Order.REVCOLEX:
        return _colex_rank(_relabel(s.elements, s.n))
    return binom(s.n, s.k) - 1 - _colex_rank(_relabel(s.elements, s.n))


def unrank(r: int, order: Order, params: Params) -> KSubset:
    """The subset at 0-based position `r`; inverse of `rank`."""
    total = params.layer_size
    if not 0 <= r < total:
        raise ValueError(f"rank {r} outside [0, {total})")
    if order is Order.COLEX:
        return KSubset(params.n, _colex_unrank(r, params.k))
    if order is Order.REVCOLEX:
        return KSubset(params.n, _relabel(_colex_unrank(r, params.k), params.n))
    return KSubset(
        params.n, _relabel(_colex_unrank(total - 1 - r, params.k), params.n)
    )


def _iter_colex(limit: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for top in range(k, limit + 1):
        for rest in _iter_colex(top - 1, k - 1):
            yield rest + (top,)


def iter_order(order: Order, params: Params) -> Iterator[tuple[int, ...]]:
    """All k-subsets of [n] as element tuples, in the given order."""
    n, k = params.n, params.k
    if order is Order.LEX:
        yield from combinations(range(1, n + 1), k)
    elif order is Order.COLEX:
        yield from _iter_colex(n, k)
    else:
        for elems in _iter_colex(n, k):
            yield _relabel(elems, n)


def initial_segment(spec: SegmentSpec) -> SetFamily:
    """Materialize the first `spec.size` subsets under `spec.order`."""
    members = []
    it = iter_order(spec.order, spec.params)
    for _ in range(spec.size):
        members.append(KSubset(spec.params.n, next(it)))
    return SetFamily(spec.params, frozenset(members))


def rank_duality_check(s: KSubset) -> bool:
    """Confirm the 0-based rank dualities tying the orders to complementation.

    For a subset s of the (n, a) layer, with N = C(n, a) and the complement
    ranked on the (n, n-a) layer (which has the same size):
      rank_revcolex(s)           == N - 1 - rank_lex(s)
      rank_lex(complement(s))    == N - 1 - rank_lex(s)
      rank_colex(complement(s))  == N - 1 - rank_colex(s)
    The last two are equivalent under relabeling; together with the first
    they give rank_revcolex(complement(s)) == rank_lex(s).
    """
    total = binom(s.n, s.k)
    lex_rank = rank(s, Order.LEX)
    comp = complement(s)
    if rank(s, Order.REVCOLEX) != total - 1 - lex_rank:
        return False
    if rank(comp, Order.LEX) != total - 1 - lex_rank:
        return False
    return rank(comp, Order.COLEX) == total - 1 - rank(s, Order.COLEX)
