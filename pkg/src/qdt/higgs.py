"""Higgs-type sequences ``H_(n,d)`` and their map to primitive cyclic classes.

``H_(n,d)`` consists of integer sequences ``(l_1, ..., l_n)`` with

1. ``l_(k+1) - l_k + (m-1) >= 0`` for ``k < n``,
2. ``sum l_i = d``,
3. ``n (l_1 + ... + l_k) >= d k`` for ``k < n`` (partial averages at least d/n).
"""
from __future__ import annotations

import math
from typing import Iterator, Sequence

from .dtinv import dt_formula
from .necklaces import CyclicClass, classify, rotate, seq_weight

HiggsSeq = tuple[int, ...]


def is_higgs(l: Sequence[int], d: int, m: int) -> bool:
    n = len(l)
    if n < 1 or sum(l) != d:
        return False
    if any(l[k + 1] - l[k] + (m - 1) < 0 for k in range(n - 1)):
        return False
    s = 0
    for k in range(1, n):
        s += l[k - 1]
        if n * s < d * k:
            return False
    return True


def enumerate_higgs(n: int, d: int, m: int) -> Iterator[HiggsSeq]:
    """Depth-first search over the finite window cut out by the conditions.

    With prefix sum ``S`` after k entries, the next entry ``x`` satisfies
    ``x >= l_k - (m-1)``, ``n (S + x) >= d (k+1)`` (before the last entry), and
    ``S + x + sum_(j=1..r) (x - (m-1) j) <= d`` where ``r`` entries remain
    after it, since condition 1 bounds each later entry from below.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        yield (d,)
        return

    def rec(prefix: list[int], s: int) -> Iterator[HiggsSeq]:
        k = len(prefix)
        if k == n - 1:
            x = d - s
            if x - prefix[-1] + (m - 1) >= 0:
                yield tuple(prefix) + (x,)
            return
        r = n - k - 1
        lo = -((-(d * (k + 1) - n * s)) // n)  # ceil((d(k+1) - nS)/n)
        if prefix:
            lo = max(lo, prefix[-1] - (m - 1))
        hi = (d - s + (m - 1) * r * (r + 1) // 2) // (r + 1)
        for x in range(lo, hi + 1):
            prefix.append(x)
            yield from rec(prefix, s + x)
            prefix.pop()

    yield from rec([], 0)


def higgs_to_class(l: Sequence[int], m: int) -> CyclicClass:
    """``a_k = l_(k+1) - l_k + (m-1)`` with ``l_(n+1) = l_1``, up to rotation."""
    return classify(higgs_to_sequence(l, m))


def higgs_to_sequence(l: Sequence[int], m: int) -> tuple[int, ...]:
    n = len(l)
    return tuple(l[(k + 1) % n] - l[k] + (m - 1) for k in range(n))


def class_to_higgs(C: CyclicClass | Sequence[int], d: int, m: int) -> HiggsSeq:
    """Inverse of :func:`higgs_to_class` on classes of weight ``-d mod n``."""
    a = C.rep if isinstance(C, CyclicClass) else tuple(C)
    n = len(a)
    w = seq_weight(a)
    if (w + d) % n:
        raise ValueError(f"class weight {w} is not congruent to -{d} mod {n}")
    l = [(w + d) // n]
    for k in range(1, n):
        l.append(l[-1] + a[k - 1] - (m - 1))
    # rotate to start after the last index where n*S_k - d*k is minimal
    best_k, best = 0, 0
    s = 0
    for k in range(1, n + 1):
        s += l[k - 1]
        v = n * s - d * k
        if v <= best:
            best_k, best = k, v
    return rotate(l, best_k)


def dual(l: Sequence[int]) -> HiggsSeq:
    """``(l_1, ..., l_n) -> (-l_n, ..., -l_1)``, mapping H_(n,d) to H_(n,-d)."""
    return tuple(-x for x in reversed(l))


def higgs_count_check(n: int, d: int, m: int) -> bool:
    if math.gcd(n, d) != 1:
        raise ValueError(f"gcd({n}, {d}) != 1")
    return sum(1 for _ in enumerate_higgs(n, d, m)) == dt_formula(m, n)
