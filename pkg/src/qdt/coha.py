"""Partition combinatorics of the degenerate Cohomological Hall algebra.

Partitions are weakly increasing tuples of nonnegative integers; the length
counts zero parts.  ``T_n`` holds the partitions with ``lam_i <= (m-1)(i-1)``.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Iterator, Sequence

from .exactmath import LaurentPoly, binomial

Partition = tuple[int, ...]
T0Word = tuple[Partition, ...]


def in_T(lam: Sequence[int], m: int) -> bool:
    return all(p <= (m - 1) * i for i, p in enumerate(lam)) and _is_partition(lam)


def in_T0(lam: Sequence[int], m: int) -> bool:
    if not lam or not in_T(lam, m):
        return False
    return all(p < (m - 1) * i for i, p in enumerate(lam) if i >= 1)


def _is_partition(lam: Sequence[int]) -> bool:
    return all(p >= 0 for p in lam) and all(a <= b for a, b in zip(lam, lam[1:]))


def shift(lam: Sequence[int], N: int) -> Partition:
    """``S^N``: add N to every part."""
    return tuple(p + N for p in lam)


def star(lam: Sequence[int], mu: Sequence[int], m: int) -> Partition:
    """``lam * mu = lam  union  S^((m-1) l(lam)) mu`` (parts re-sorted)."""
    return tuple(sorted(tuple(lam) + shift(mu, (m - 1) * len(lam))))


def star_all(parts: Sequence[Sequence[int]], m: int) -> Partition:
    out: Partition = ()
    for p in parts:
        out = star(out, p, m)
    return out


def weight(lam: Sequence[int], m: int) -> int:
    return (m - 1) * binomial(len(lam), 2) - sum(lam)


def enumerate_T(m: int, n: int) -> Iterator[Partition]:
    """All of ``T_n`` in lexicographic order."""

    def rec(prefix: list[int]) -> Iterator[Partition]:
        i = len(prefix)
        if i == n:
            yield tuple(prefix)
            return
        lo = prefix[-1] if prefix else 0
        for v in range(lo, (m - 1) * i + 1):
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def factorize_T0(lam: Sequence[int], m: int) -> T0Word:
    """Unique factorization of ``lam`` in T into a star product of T0 letters.

    Cuts sit exactly at the (1-based) positions ``l >= 2`` where
    ``lam_l = (m-1)(l-1)``.
    """
    lam = tuple(lam)
    if not in_T(lam, m):
        raise ValueError(f"{lam} is not in T for m={m}")
    if not lam:
        return ()
    cuts = [0] + [i for i in range(1, len(lam)) if lam[i] == (m - 1) * i] + [len(lam)]
    return tuple(shift(lam[a:b], -(m - 1) * a) for a, b in zip(cuts, cuts[1:]))


def is_lyndon(w: Sequence[Partition]) -> bool:
    """Strictly greater than each proper cyclic shift (letters compared
    lexicographically, a proper prefix being smaller)."""
    w = tuple(w)
    if not w:
        raise ValueError("empty word")
    return all(w > w[i:] + w[:i] for i in range(1, len(w)))


def enumerate_TL(m: int, n: int, plus: bool = False) -> Iterator[Partition]:
    """``T^L_n``, or ``T^(L,+)_n`` when ``plus`` (only differs for even m).

    The doubled elements ``lam * lam`` (``lam`` in ``T^L`` of odd length) are
    yielded after the Lyndon ones.
    """
    for lam in enumerate_T(m, n):
        if is_lyndon(factorize_T0(lam, m)):
            yield lam
    if plus and m % 2 == 0 and n % 4 == 2:
        for lam in enumerate_TL(m, n // 2):
            yield star(lam, lam, m)


def q_polys(m: int, n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """``(Qbar_n, Q_n)``: weight generating polynomials of ``T^L_n`` and ``T^(L,+)_n``."""
    qbar = _weight_poly(enumerate_TL(m, n), m)
    q = qbar
    if m % 2 == 0 and n % 4 == 2:
        q = qbar + _weight_poly(enumerate_TL(m, n // 2), m).adams(2)
    return qbar, q


def _weight_poly(parts, m: int) -> LaurentPoly:
    c: dict[int, int] = defaultdict(int)
    for lam in parts:
        c[weight(lam, m)] += 1
    return LaurentPoly(c)


def t_weight_poly(m: int, n: int) -> LaurentPoly:
    """``sum_(lam in T_n) q^wt(lam)``."""
    return _weight_poly(enumerate_T(m, n), m)


def _longest_T_prefix(lam: Partition, m: int) -> int:
    i = 0
    while i < len(lam) and lam[i] <= (m - 1) * i:
        i += 1
    return i


def decompose_A(lam: Sequence[int], m: int) -> list[tuple[int, Partition]]:
    """Factor ``lam = S^0 b_0 * S^1 b_1 * ...`` with every ``b_i`` in T.

    Returns the nonempty factors as ``(level, b)`` pairs.  At each level the
    longest prefix lying in T is split off and the rest, lowered by
    ``(m-1) i + 1``, is factored one level up.
    """
    lam = tuple(lam)
    if not _is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    out: list[tuple[int, Partition]] = []
    level = 0
    while lam:
        i = _longest_T_prefix(lam, m)
        if i:
            out.append((level, lam[:i]))
        lam = shift(lam[i:], -((m - 1) * i + 1))
        level += 1
    return out


def recompose_A(factors: Sequence[tuple[int, Partition]], m: int) -> Partition:
    return star_all([shift(b, level) for level, b in factors], m)


# --------------------------------------------------------------------------
# shuffle products of symmetric polynomials
#
# A polynomial in n variables is a dict from exponent tuples (length n) to
# integer coefficients.

SymPoly = dict[tuple[int, ...], int]


def p_lambda(lam: Sequence[int]) -> SymPoly:
    """``P_lam = sum_(sigma in S_n) x_sigma(1)^lam_1 ... x_sigma(n)^lam_n``."""
    n = len(lam)
    out: SymPoly = defaultdict(int)
    for perm in itertools.permutations(range(n)):
        e = [0] * n
        for i, j in enumerate(perm):
            e[j] = lam[i]
        out[tuple(e)] += 1
    return dict(out)


def _poly_mul(f: SymPoly, g: SymPoly) -> SymPoly:
    out: SymPoly = defaultdict(int)
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
    return {e: c for e, c in out.items() if c}


def _embed(f: SymPoly, positions: Sequence[int], n: int) -> SymPoly:
    out: SymPoly = {}
    for e, c in f.items():
        full = [0] * n
        for pos, k in zip(positions, e):
            full[pos] = k
        out[tuple(full)] = c
    return out


def _kernel(I: Sequence[int], J: Sequence[int], n: int, m: int, q) -> SymPoly:
    """``prod_(i in I, j in J) (x_j - q x_i)^(m-1)``."""
    out: SymPoly = {(0,) * n: 1}
    for i in I:
        for j in J:
            xj = [0] * n
            xj[j] = 1
            factor: SymPoly = {tuple(xj): 1}
            if q:
                xi = [0] * n
                xi[i] = 1
                factor[tuple(xi)] = -q
            for _ in range(m - 1):
                out = _poly_mul(out, factor)
    return out


def shuffle_product(f: SymPoly, n1: int, g: SymPoly, n2: int, m: int, q=1) -> SymPoly:
    """Shuffle product with kernel ``(x_j - q x_i)^(m-1)``.

    ``q = 1`` is the Cohomological Hall algebra product, ``q = 0`` its
    degeneration.
    """
    n = n1 + n2
    out: SymPoly = defaultdict(int)
    for I in itertools.combinations(range(n), n1):
        J = [j for j in range(n) if j not in I]
        term = _poly_mul(_embed(f, I, n), _embed(g, J, n))
        term = _poly_mul(term, _kernel(I, J, n, m, q))
        for e, c in term.items():
            out[e] += c
    return {e: c for e, c in out.items() if c}


def shuffle_q0(lam: Sequence[int], mu: Sequence[int], m: int) -> SymPoly:
    """``P_lam * P_mu`` in the q = 0 shuffle algebra."""
    return shuffle_product(p_lambda(lam), len(lam), p_lambda(mu), len(mu), m, q=0)


def format_partition(lam: Sequence[int]) -> str:
    """``(0013)`` when all parts are digits, else ``(0,10,12)``."""
    if all(p <= 9 for p in lam):
        return "(" + "".join(map(str, lam)) + ")"
    return "(" + ",".join(map(str, lam)) + ")"


def parse_partition(text: str) -> Partition:
    body = text.strip().strip("()")
    if "," in body:
        return tuple(int(p) for p in body.split(","))
    return tuple(int(ch) for ch in body)
