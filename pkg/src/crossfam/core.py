"""Exact combinatorics primitives: binomials, k-subsets, uniform families.

Subsets of [n] = {1, ..., n} are canonically encoded as strictly increasing
tuples of 1-based elements. Bitmask views (element e <-> bit e-1) back the
enumeration-heavy call sites. All types are immutable and hashable, so values
can be shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator


def binom(m: int, b: int) -> int:
    """C(m, b) as an exact integer; 0 whenever (m, b) is out of range.

    The out-of-range convention (b < 0, b > m, or m < 0 gives 0) is load
    bearing: several bound formulas rely on vanishing terms instead of
    special-casing degenerate parameters. Arithmetic is arbitrary precision,
    so results never wrap.
    """
    if m < 0 or b < 0 or b > m:
        return 0
    return math.comb(m, b)


def mask_from_elements(elements: Iterable[int]) -> int:
    """Pack 1-based elements into a bitmask (element e sets bit e-1)."""
    mask = 0
    for e in elements:
        mask |= 1 << (e - 1)
    return mask


def elements_from_mask(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into the sorted tuple of its 1-based elements."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Params:
    """Ground-set size n and layer size k of a uniform family, 0 <= k <= n."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 0 or not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got n={self.n}, k={self.k}")

    @property
    def complement_size(self) -> int:
        """Layer size of the complemented family, n - k."""
        return self.n - self.k

    @property
    def layer_size(self) -> int:
        """Number of k-subsets of [n]."""
        return binom(self.n, self.k)

    def complemented(self) -> "Params":
        return Params(self.n, self.n - self.k)


@dataclass(frozen=True)
class KSubset:
    """A k-subset of [n], stored as a strictly increasing element tuple."""

    n: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        prev = 0
        for e in elems:
            if not isinstance(e, int) or e <= prev:
                raise ValueError(f"elements must be strictly increasing, got {elems}")
            prev = e
        if elems and (elems[0] < 1 or elems[-1] > self.n):
            raise ValueError(f"elements must lie in [1, {self.n}], got {elems}")

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "KSubset":
        return cls(n, elements_from_mask(mask))

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> "KSubset":
        return cls(n, tuple(sorted(elements)))

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def params(self) -> Params:
        return Params(self.n, self.k)

    @cached_property
    def mask(self) -> int:
        return mask_from_elements(self.elements)

    def __contains__(self, element: int) -> bool:
        return element in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        body = ",".join(map(str, self.elements))
        return f"KSubset(n={self.n}, {{{body}}})"


@dataclass(frozen=True)
class SetFamily:
    """A finite set of k-subsets over a fixed (n, k); pure set semantics."""

    params: Params
    members: frozenset[KSubset]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.members))
        for s in self.members:
            if s.n != self.params.n or s.k != self.params.k:
                raise ValueError(
                    f"member {s!r} does not match params {self.params}"
                )

    @classmethod
    def empty(cls, params: Params) -> "SetFamily":
        return cls(params, frozenset())

    @classmethod
    def of(cls, params: Params, sets: Iterable[Iterable[int]]) -> "SetFamily":
        return cls(params, frozenset(KSubset.of(params.n, s) for s in sets))

    @classmethod
    def from_masks(cls, params: Params, masks: Iterable[int]) -> "SetFamily":
        return cls(
            params, frozenset(KSubset.from_mask(params.n, m) for m in masks)
        )

    @classmethod
    def full_layer(cls, params: Params) -> "SetFamily":
        sets = combinations(range(1, params.n + 1), params.k)
        return cls(params, frozenset(KSubset(params.n, s) for s in sets))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[KSubset]:
        return iter(sorted(self.members, key=lambda s: s.elements))

    def __contains__(self, s: KSubset) -> bool:
        return s in self.members

    def member_masks(self) -> list[int]:
        """Member bitmasks in a deterministic (element-sorted) order."""
        return [s.mask for s in self]

    def __repr__(self) -> str:
        return f"SetFamily(n={self.params.n}, k={self.params.k}, size={len(self)})"


def complement(s: KSubset) -> KSubset:
    """The complement [n] - s, an (n-k)-subset of the same ground set."""
    present = set(s.elements)
    return KSubset(s.n, tuple(e for e in range(1, s.n + 1) if e not in present))


def family_complement(f: SetFamily) -> SetFamily:
    """Elementwise complement; the result lives in the (n, n-k) layer."""
    return SetFamily(
        f.params.complemented(), frozenset(complement(s) for s in f.members)
    )


def restrict(f: SetFamily, required: int, forbidden: int) -> SetFamily:
    """Members containing `required` and avoiding `forbidden`, with `required` removed.

    Produces a (k-1)-uniform family over the same ground set.
    """
    n = f.params.n
    if required == forbidden:
        raise ValueError("required and forbidden elements must differ")
    for e in (required, forbidden):
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside [1, {n}]")
    out = frozenset(
        KSubset(n, tuple(e for e in s.elements if e != required))
        for s in f.members
        if required in s.elements and forbidden not in s.elements
    )
    return SetFamily(Params(n, f.params.k - 1), out)
