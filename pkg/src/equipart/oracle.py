"""Brute-force ground truth for small instances.

Everything here enumerates exhaustively and is capped hard on size; it is
the independent check the constructive algorithms are measured against.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence

from .errors import InstanceTooLarge
from .graph import Graph
from .partitioners import Partition
from .verify import PartitionSpec, _check_part

MAX_PARTITION_N = 12
MAX_MERGE_TOTAL = 40


def brute_partition_exists(g: Graph, spec: PartitionSpec) -> Optional[Partition]:
    """First assignment of vertices to spec.parts satisfying the spec, or
    None. Only equitable size profiles are enumerated when spec.equitable.

    Prunes on the constraint after every vertex placement; all supported
    per-part constraints are hereditary, so pruning is sound.
    """
    if g.n > MAX_PARTITION_N:
        raise InstanceTooLarge(f"n={g.n} exceeds cap {MAX_PARTITION_N}")
    p = spec.parts
    if spec.equitable:
        base, extra = divmod(g.n, p)
        caps = [base + 1] * extra + [base] * (p - extra)
    else:
        caps = [g.n] * p

    parts: list[list[int]] = [[] for _ in range(p)]

    def place(v: int) -> bool:
        if v == g.n:
            return True
        tried_empty_cap = set()
        for i in range(p):
            if len(parts[i]) >= caps[i]:
                continue
            if not parts[i]:
                # empty parts with equal caps are interchangeable
                if caps[i] in tried_empty_cap:
                    continue
                tried_empty_cap.add(caps[i])
            parts[i].append(v)
            if _check_part(g, parts[i], spec) is None and place(v + 1):
                return True
            parts[i].pop()
        return False

    if place(0):
        return Partition(parts=tuple(tuple(q) for q in parts))
    return None


def merge_bound_tight(class_sizes: Sequence[int], ell: int, target: int) -> bool:
    """Can ``ell`` disjoint sets of size >= target be carved out, each from
    the union of at most two classes, respecting class capacities?

    Only sizes matter; the search picks a (possibly equal) class pair per
    set and how much each contributes, with memoization on the remaining
    capacities.
    """
    sizes = tuple(int(s) for s in class_sizes)
    if any(s < 0 for s in sizes):
        raise ValueError("class sizes must be nonnegative")
    if sum(sizes) > MAX_MERGE_TOTAL:
        raise InstanceTooLarge(
            f"total size {sum(sizes)} exceeds cap {MAX_MERGE_TOTAL}")
    if ell <= 0 or target <= 0:
        return True
    k = len(sizes)
    pairs = [(i, j) for i in range(k) for j in range(i, k)]

    @lru_cache(maxsize=None)
    def rec(t: int, rem: tuple[int, ...], min_pair: int) -> bool:
        if t == ell:
            return True
        for pi in range(min_pair, len(pairs)):
            i, j = pairs[pi]
            if i == j:
                if rem[i] >= target:
                    nxt = list(rem)
                    nxt[i] -= target
                    if rec(t + 1, tuple(nxt), pi):
                        return True
                continue
            lo = max(0, target - rem[j])
            hi = min(rem[i], target)
            for x in range(lo, hi + 1):
                nxt = list(rem)
                nxt[i] -= x
                nxt[j] -= target - x
                if rec(t + 1, tuple(nxt), pi):
                    return True
        return False

    try:
        return rec(0, sizes, 0)
    finally:
        rec.cache_clear()
