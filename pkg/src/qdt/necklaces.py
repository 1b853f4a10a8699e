"""Compositions ``U_n`` of ``(m-1) n`` into n parts, their cyclic classes and
weights, and the polynomials built from them.

The number of loops ``m`` is recovered from a sequence as ``sum(a)/n + 1``.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .coha import in_T
from .exactmath import LaurentPoly, binomial, cyclotomic, divisors, moebius, poly_rem

USequence = tuple[int, ...]


@dataclass(frozen=True, order=True)
class CyclicClass:
    """A C_n-orbit in U_n: least rotation, smallest period, maximal weight."""

    rep: USequence
    period: int
    weight: int

    @property
    def n(self) -> int:
        return len(self.rep)

    @property
    def primitive(self) -> bool:
        return self.period == len(self.rep)

    def to_json(self) -> dict:
        return {"rep": list(self.rep), "period": self.period, "weight": self.weight}

    @classmethod
    def from_json(cls, data: dict) -> CyclicClass:
        return cls(tuple(data["rep"]), int(data["period"]), int(data["weight"]))


def loops(a: Sequence[int]) -> int:
    n = len(a)
    if n == 0:
        raise ValueError("empty sequence")
    s = sum(a)
    if s % n or any(x < 0 for x in a):
        raise ValueError(f"{tuple(a)} is not in any U_n")
    return s // n + 1


def enumerate_U(m: int, n: int) -> Iterator[USequence]:
    """Compositions of ``(m-1) n`` into n nonnegative parts, lexicographically."""
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    total = (m - 1) * n

    def rec(prefix: list[int], rest: int) -> Iterator[USequence]:
        if len(prefix) == n - 1:
            yield tuple(prefix) + (rest,)
            return
        for v in range(rest + 1):
            prefix.append(v)
            yield from rec(prefix, rest - v)
            prefix.pop()

    yield from rec([], total)


def is_admissible(a: Sequence[int]) -> bool:
    m = loops(a)
    s = 0
    for i, x in enumerate(a, 1):
        s += x
        if s > (m - 1) * i:
            return False
    return True


def phi(lam: Sequence[int], m: int) -> USequence:
    lam = tuple(lam)
    if not lam or not in_T(lam, m):
        raise ValueError(f"{lam} is not in T_n for m={m}")
    n = len(lam)
    return tuple(b - a for a, b in zip(lam, lam[1:])) + ((m - 1) * n - lam[-1],)


def phi_inv(a: Sequence[int]) -> tuple[int, ...]:
    if not is_admissible(a):
        raise ValueError(f"{tuple(a)} is not admissible")
    out = [0]
    for x in a[:-1]:
        out.append(out[-1] + x)
    return tuple(out)


def seq_weight(a: Sequence[int]) -> int:
    m = loops(a)
    n = len(a)
    return sum((n - i) * (m - 1 - x) for i, x in enumerate(a, 1))


def rotate(a: Sequence[int], i: int) -> USequence:
    """``(a_(i+1), ..., a_n, a_1, ..., a_i)``."""
    a = tuple(a)
    i %= len(a)
    return a[i:] + a[:i]


def least_rotation(a: Sequence[int]) -> int:
    """Booth's algorithm: offset of the lexicographically least rotation."""
    s = list(a) * 2
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def period(a: Sequence[int]) -> int:
    a = tuple(a)
    for d in divisors(len(a)):
        if rotate(a, d) == a:
            return d
    raise AssertionError("unreachable")


def classify(a: Sequence[int]) -> CyclicClass:
    a = tuple(a)
    rep = rotate(a, least_rotation(a))
    p = period(a)
    w = max(seq_weight(rotate(a, i)) for i in range(p))
    return CyclicClass(rep, p, w)


def _min_first_sequences(m: int, n: int) -> Iterator[USequence]:
    """Members of U_n whose first entry is a minimum; every least rotation is one."""
    total = (m - 1) * n
    if n == 1:
        yield (total,)
        return
    for first in range(total // n + 1):

        def rec(prefix: list[int], rest: int) -> Iterator[USequence]:
            if len(prefix) == n - 1:
                yield tuple(prefix) + (rest,)
                return
            # leave at least `first` for each remaining slot
            slots = n - 1 - len(prefix)
            for v in range(first, rest - first * slots + 1):
                prefix.append(v)
                yield from rec(prefix, rest - v)
                prefix.pop()

        yield from rec([first], total - first)


def enumerate_classes(m: int, n: int, plus: bool = False) -> Iterator[CyclicClass]:
    """Primitive classes of U_n; with ``plus`` and m even, n = 2 mod 4, also
    the classes of 2-fold repetitions of primitive sequences of length n/2.

    Filters U_n (restricted to sequences starting at their minimum) down to
    the sequences equal to their own least rotation.
    """
    extra = plus and m % 2 == 0 and n % 4 == 2
    for a in _min_first_sequences(m, n):
        p = n
        canonical = True
        for i in range(1, n):
            r = a[i:] + a[:i]
            if r < a:
                canonical = False
                break
            if r == a and p == n:
                p = i
        if not canonical or (p != n and not (extra and p == n // 2)):
            continue
        yield CyclicClass(a, p, _class_weight(a, m, p))


def _class_weight(a: USequence, m: int, p: int) -> int:
    # wt(rotation by i) = wt(a) - n((m-1) i - a_1 - ... - a_i)
    n = len(a)
    w = best = seq_weight(a)
    s = 0
    for i in range(1, p):
        s += a[i - 1]
        best = max(best, w - n * ((m - 1) * i - s))
    return best


def class_poly(m: int, n: int, plus: bool = True) -> LaurentPoly:
    """``sum_C q^wt(C)`` over the (plus-)primitive classes."""
    c: dict[int, int] = defaultdict(int)
    for C in enumerate_classes(m, n, plus):
        c[C.weight] += 1
    return LaurentPoly(c)


def p_poly(m: int, n: int) -> LaurentPoly:
    """``sum_(a in U_n) q^wt(a)``, accumulated position by position.

    The state after i entries is (sum so far) -> {partial weight: count}.
    """
    total = (m - 1) * n
    states: dict[int, dict[int, int]] = {0: {0: 1}}
    for i in range(1, n + 1):
        nxt: dict[int, dict[int, int]] = defaultdict(lambda: defaultdict(int))
        for s, weights in states.items():
            choices = [total - s] if i == n else range(total - s + 1)
            for x in choices:
                dw = (n - i) * (m - 1 - x)
                row = nxt[s + x]
                for w, c in weights.items():
                    row[w + dw] += c
        states = nxt
    return LaurentPoly(states[total])


def p_root_closed_form(m: int, n: int, s: int) -> int:
    """Value of ``P_n`` at the root of unity ``zeta_n^s``, ``1 <= s <= n``."""
    if not 1 <= s <= n:
        raise ValueError("need 1 <= s <= n")
    g = math.gcd(s, n)
    sign = -1 if ((m - 1) * (n - 1) * s) % 2 else 1
    return sign * binomial(m * g - 1, g - 1)


def root_of_unity_value(f: LaurentPoly, n: int, s: int) -> LaurentPoly:
    """Exact value of ``f(zeta_n^s)`` as a polynomial in a primitive
    ``n/gcd(s,n)``-th root of unity ``w`` reduced modulo ``Phi_(n/g)(w)``.

    The value is rational exactly when the result is constant.
    """
    g = math.gcd(s, n)
    order = n // g
    if order == 1:
        return LaurentPoly.constant(f(1))
    # zeta_n^(s e) = w^(e s/g) with w a primitive order-th root of unity
    folded = LaurentPoly([((e * (s // g)) % order, v) for e, v in f.items()])
    return poly_rem(folded, cyclotomic(order))


def qbar_mod(m: int, n: int) -> LaurentPoly:
    """``(1/n) sum_(d|n) mu(n/d) P_d(q^(n/d))`` reduced modulo ``q^n - 1``."""
    s = LaurentPoly()
    for d in divisors(n):
        mu = moebius(n // d)
        if mu:
            s = s + p_poly(m, d).adams(n // d) * mu
    return (s * Fraction(1, n)).mod_cyclic(n)


def format_sequence(a: Sequence[int]) -> str:
    return "(" + ",".join(map(str, a)) + ")"
