"""Exhaustive generation of all monotone self-maps of a chain.

The carrier set has binom(2n-1, n) elements; generation is lexicographic
in the image tuple, from the all-zero constant up to the all-(n-1)
constant.  A configurable cap keeps the enumeration at desk scale.
"""

from __future__ import annotations

import itertools
import math
from typing import Callable, Iterable, Iterator

from .core import Endo, fixed_points, is_idempotent, jump_points, omega

DEFAULT_CAP = 12

Predicate = Callable[[Endo], bool]


def _check_cap(n: int, cap: int | None) -> None:
    if n < 1:
        raise ValueError(f"chain size must be >= 1, got {n}")
    limit = DEFAULT_CAP if cap is None else cap
    if n > limit:
        raise ValueError(
            f"n = {n} exceeds the enumeration cap {limit}; raise the cap explicitly"
        )


def all_endos(n: int, cap: int | None = None) -> Iterator[Endo]:
    """Yield every monotone self-map of {0..n-1} in lexicographic order."""
    _check_cap(n, cap)
    for tup in itertools.combinations_with_replacement(range(n), n):
        yield Endo._wrap(bytes(tup))


def all_endos_with_prefix(n: int, prefix: Iterable[int], cap: int | None = None) -> Iterator[Endo]:
    """Yield the sub-range of all_endos(n) whose image tuple starts with prefix.

    Sub-ranges for distinct prefixes are disjoint, so workers can own
    prefixes independently and merge results.
    """
    _check_cap(n, cap)
    pre = tuple(prefix)
    if not pre:
        yield from all_endos(n, cap)
        return
    if any(not 0 <= v <= n - 1 for v in pre) or any(
        pre[i] > pre[i + 1] for i in range(len(pre) - 1)
    ):
        return
    head = bytes(pre)
    rest = n - len(pre)
    if rest == 0:
        yield Endo._wrap(head)
        return
    for tail in itertools.combinations_with_replacement(range(pre[-1], n), rest):
        yield Endo._wrap(head + bytes(tail))


def count_endos(n: int) -> int:
    """Closed form for the carrier size: binom(2n-1, n)."""
    if n < 1:
        raise ValueError(f"chain size must be >= 1, got {n}")
    return math.comb(2 * n - 1, n)


def filter_endos(n: int, *predicates: Predicate, cap: int | None = None) -> Iterator[Endo]:
    """Stream of all endomorphisms satisfying every given predicate."""
    for a in all_endos(n, cap):
        if all(p(a) for p in predicates):
            yield a


def has_fixed_set(points: Iterable[int]) -> Predicate:
    """Predicate: the fixed-point set equals exactly the given points."""
    want = tuple(sorted(set(points)))
    return lambda a: fixed_points(a) == want


def has_jump_set(points: Iterable[int]) -> Predicate:
    """Predicate: the jump-point set equals exactly the given points."""
    want = tuple(sorted(set(points)))
    return lambda a: jump_points(a) == want


def fixes_all(points: Iterable[int]) -> Predicate:
    """Predicate: every given point is fixed (others may be fixed too)."""
    want = tuple(set(points))
    return lambda a: all(a[k] == k for k in want)


def zero_preserving(a: Endo) -> bool:
    """Membership in the subsemiring of maps sending 0 to 0."""
    return a[0] == 0


def partition_by_omega(n: int, cap: int | None = None) -> dict[Endo, list[Endo]]:
    """Bucket every endomorphism under its unique idempotent power.

    Keys are the idempotents; each element lands in exactly one bucket,
    so bucket sizes sum to count_endos(n).
    """
    buckets: dict[Endo, list[Endo]] = {}
    for a in all_endos(n, cap):
        buckets.setdefault(omega(a).endo, []).append(a)
    return buckets


__all__ = [
    "DEFAULT_CAP",
    "all_endos",
    "all_endos_with_prefix",
    "count_endos",
    "filter_endos",
    "has_fixed_set",
    "has_jump_set",
    "fixes_all",
    "zero_preserving",
    "partition_by_omega",
    "is_idempotent",
]
