"""Numeric and quantized Donaldson-Thomas invariants of the m-loop quiver.

Three independent routes are provided for each:

* numeric: closed Moebius formula, Euler-product extraction from F(t), and
  counting plus-primitive cyclic classes;
* quantized: plethystic logarithm of H(q, +-t), and the class weight
  polynomial divided by ``[n]``.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .exactmath import LaurentPoly, NotLaurent, binomial, divisors, moebius
from .hilbert import series_F, series_H
from .necklaces import class_poly, enumerate_classes
from .plethystic import pleth_log, series_log


class InternalInconsistency(ArithmeticError):
    """A division that theory guarantees to be exact was not."""


class NonIntegral(ArithmeticError):
    """An extracted Euler-product exponent is not an integer."""


class NonLaurent(ArithmeticError):
    """A quantized invariant came out as a non-Laurent rational function."""


def _sign(m: int, n: int) -> int:
    return -1 if ((m - 1) * n) % 2 else 1


def dt_formula(m: int, n: int, literal: bool = False) -> int | Fraction:
    """``(1/n^2) sum_(d|n) mu(n/d) (-1)^((m-1)(n-d)) C(md-1, d-1)``.

    With ``literal=True`` the binomial is taken as ``C(mn-1, n-1)`` for every
    divisor, which is what the formula looks like when the summation variable
    is dropped; the result is returned as a Fraction and is not an integer in
    general (3/2 at m = n = 2).
    """
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    total = 0
    for d in divisors(n):
        k = n if literal else d
        total += moebius(n // d) * _sign(m, n - d) * binomial(m * k - 1, k - 1)
    if literal:
        return Fraction(total, n * n)
    q, r = divmod(total, n * n)
    if r:
        raise InternalInconsistency(f"DT formula not integral at m={m}, n={n}")
    return q


def dt_from_series(m: int, N: int) -> dict[int, int]:
    """``DT_n`` for ``1 <= n < N`` from the Euler product of ``F((-1)^(m-1) t)``.

    With ``L = log F(+-t)`` and ``e_n`` the exponent of ``(1 - t^n)^-1`` one
    has ``j L_j = sum_(n|j) n e_n``; Moebius inversion recovers ``n e_n``.
    """
    if N < 2:
        raise ValueError("need N >= 2")
    F = series_F(m, N, mode="numeric").scale_t(-1 if m % 2 == 0 else 1)
    L = [c.constant_value() for c in series_log(F)]
    out = {}
    for n in range(1, N):
        ne = sum(moebius(n // d) * d * L[d] for d in divisors(n))
        e = Fraction(ne) / n
        if e.denominator != 1:
            raise NonIntegral(f"exponent of (1 - t^{n}) is {e}")
        dt = Fraction(_sign(m, n) * e.numerator, n)
        if dt.denominator != 1:
            raise NonIntegral(f"DT_{n} = {dt} for m={m}")
        out[n] = dt.numerator
    return out


def dt_from_classes(m: int, n: int) -> int:
    """``|U_n^(prim,+) / C_n| / n``."""
    count = sum(1 for _ in enumerate_classes(m, n, plus=True))
    q, r = divmod(count, n)
    if r:
        raise InternalInconsistency(f"{count} plus-classes not divisible by n={n}")
    return q


def dtq_from_series(m: int, N: int) -> dict[int, LaurentPoly]:
    """``DT_n(q) = (1 - q^-1) (-1)^((m-1)n) [t^n] Log H(q, (-1)^(m-1) t)``."""
    if N < 2:
        raise ValueError("need N >= 2")
    H = series_H(m, N).scale_t(-1 if m % 2 == 0 else 1)
    L = pleth_log(H)
    factor = LaurentPoly({0: 1, -1: -1})
    out = {}
    for n in range(1, N):
        c = L[n] * factor * _sign(m, n)
        try:
            poly = c.to_laurent()
        except NotLaurent:
            raise NonLaurent(f"DT_{n}(q) = {c} for m={m}") from None
        if not poly.is_integral():
            raise NonLaurent(f"DT_{n}(q) = {poly} has non-integer coefficients")
        out[n] = poly
    return out


def dtq_from_classes(m: int, n: int, literal_normalization: bool = False) -> LaurentPoly:
    """``q^(n-1) Q_n(q) / [n]`` with ``Q_n`` summed over plus-primitive classes.

    ``literal_normalization=True`` uses the prefactor ``q^(1-n)`` instead; it
    disagrees with the series route (``q^-1`` instead of ``q`` at m = n = 2).
    """
    Qn = class_poly(m, n, plus=True)
    quotient = Qn.div_exact(LaurentPoly.qint(n))
    return quotient.shift(1 - n if literal_normalization else n - 1)


def residue_counts(m: int, n: int) -> list[int]:
    """Number of plus-primitive classes with weight in each residue class mod n."""
    counts = Counter(C.weight % n for C in enumerate_classes(m, n, plus=True))
    return [counts.get(i, 0) for i in range(n)]


@dataclass
class DTRecord:
    m: int
    n: int
    dt_numeric: int
    dt_poly: LaurentPoly | None = None
    routes: dict[str, bool] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"m": self.m, "n": self.n, "dt": str(self.dt_numeric)}
        if self.dt_poly is not None:
            out["dt_poly"] = [[e, str(c)] for e, c in self.dt_poly.items()]
        out["routes"] = dict(self.routes)
        return out

    @classmethod
    def from_json(cls, data: dict) -> DTRecord:
        poly = data.get("dt_poly")
        return cls(
            m=int(data["m"]),
            n=int(data["n"]),
            dt_numeric=int(data["dt"]),
            dt_poly=None if poly is None else LaurentPoly.from_json(poly),
            routes={k: bool(v) for k, v in data.get("routes", {}).items()},
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)


def dt_record(m: int, n: int, quantized: bool = False, full: bool = True) -> DTRecord:
    """Compute one grid cell; ``full`` runs every route and records agreement."""
    dt = dt_formula(m, n)
    rec = DTRecord(m, n, dt)
    rec.routes["formula"] = True
    if full:
        rec.routes["series"] = dt_from_series(m, n + 1)[n] == dt
        rec.routes["classes"] = dt_from_classes(m, n) == dt
    if quantized:
        poly = dtq_from_classes(m, n)
        rec.dt_poly = poly
        if full:
            rec.routes["quantized"] = dtq_from_series(m, n + 1)[n] == poly and poly(1) == dt
    return rec
