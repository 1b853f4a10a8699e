"""Truncated power series in ``t`` over Q(q), Adams operations and the
lambda-ring exponential/logarithm.

A series of order ``N`` stores the coefficients of ``t^0 .. t^(N-1)``;
combining series of different orders truncates to the smaller order.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactmath import LaurentPoly, NotLaurent, RationalFunction, divisors, moebius

_ZERO = RationalFunction.coerce(0)
_ONE = RationalFunction.coerce(1)


class NotIntegral(ArithmeticError):
    """A plethystic logarithm coefficient is not an integral Laurent polynomial."""

    def __init__(self, degree: int, coefficient: RationalFunction):
        super().__init__(f"coefficient of t^{degree} is {coefficient}, not in Z[q, q^-1]")
        self.degree = degree
        self.coefficient = coefficient


class TruncSeries:
    __slots__ = ("order", "_c")

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        c = [RationalFunction.coerce(x) for x in coeffs]
        if order is None:
            order = len(c)
        if order < 1:
            raise ValueError("truncation order must be positive")
        c = c[:order]
        c.extend([_ZERO] * (order - len(c)))
        self.order = order
        self._c = tuple(c)

    @classmethod
    def _raw(cls, c: Sequence[RationalFunction]) -> TruncSeries:
        obj = cls.__new__(cls)
        obj.order = len(c)
        obj._c = tuple(c)
        return obj

    @classmethod
    def one(cls, order: int) -> TruncSeries:
        return cls([1], order)

    @classmethod
    def t(cls, order: int, k: int = 1, coeff=1) -> TruncSeries:
        """The monomial ``coeff * t^k``."""
        c = [0] * order
        if k < order:
            c[k] = coeff
        return cls(c, order)

    def __getitem__(self, n: int) -> RationalFunction:
        return self._c[n]

    def __iter__(self):
        return iter(self._c)

    def __len__(self) -> int:
        return self.order

    def coeffs(self) -> list[RationalFunction]:
        return list(self._c)

    def truncate(self, order: int) -> TruncSeries:
        return TruncSeries(self._c, order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self._c[:n] == other._c[:n]

    __hash__ = None

    # ring operations ------------------------------------------------------
    def _coerce(self, other) -> TruncSeries:
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries([RationalFunction.coerce(other)], self.order)

    def __add__(self, other) -> TruncSeries:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries._raw([self._c[i] + other._c[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> TruncSeries:
        return TruncSeries._raw([-c for c in self._c])

    def __sub__(self, other) -> TruncSeries:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> TruncSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncSeries:
        if not isinstance(other, TruncSeries):
            try:
                c = RationalFunction.coerce(other)
            except TypeError:
                return NotImplemented
            return TruncSeries._raw([x * c for x in self._c])
        n = min(self.order, other.order)
        a = [(i, x) for i, x in enumerate(self._c[:n]) if x]
        b = [(j, y) for j, y in enumerate(other._c[:n]) if y]
        out = [_ZERO] * n
        for i, x in a:
            for j, y in b:
                if i + j >= n:
                    break
                out[i + j] = out[i + j] + x * y
        return TruncSeries._raw(out)

    __rmul__ = __mul__

    def inverse(self) -> TruncSeries:
        c0 = self._c[0]
        if not c0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = c0.inverse()
        out = [inv0]
        for n in range(1, self.order):
            s = _ZERO
            for k in range(1, n + 1):
                if self._c[k]:
                    s = s + self._c[k] * out[n - k]
            out.append(-s * inv0)
        return TruncSeries._raw(out)

    def __truediv__(self, other) -> TruncSeries:
        if not isinstance(other, TruncSeries):
            return self * RationalFunction.coerce(other).inverse()
        return self * other.inverse()

    def __pow__(self, k: int) -> TruncSeries:
        if k < 0:
            return self.inverse() ** (-k)
        out = TruncSeries.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    # substitutions ----------------------------------------------------------
    def adams(self, i: int) -> TruncSeries:
        """Apply psi_i: ``q -> q^i`` in every coefficient and ``t -> t^i``."""
        if i < 1:
            raise ValueError("Adams operations need i >= 1")
        out = [_ZERO] * self.order
        for d in range(0, (self.order - 1) // i + 1):
            out[d * i] = self._c[d].adams(i)
        return TruncSeries._raw(out)

    def scale_t(self, c) -> TruncSeries:
        """Substitute ``t -> c*t`` for a coefficient ``c`` (e.g. ``q^k`` or -1)."""
        c = RationalFunction.coerce(c)
        out = []
        power = _ONE
        for x in self._c:
            out.append(x * power if x else x)
            power = power * c
        return TruncSeries._raw(out)

    def times_t(self, k: int = 1) -> TruncSeries:
        """Multiply by ``t^k`` (keeping the order)."""
        return TruncSeries._raw([_ZERO] * min(k, self.order) + list(self._c[: max(self.order - k, 0)]))

    def map_coeffs(self, fn) -> TruncSeries:
        return TruncSeries([fn(x) for x in self._c], self.order)

    # rendering --------------------------------------------------------------
    def to_text(self) -> str:
        """Degree by degree, coefficients rendered without spaces."""
        terms = []
        for n, c in enumerate(self._c):
            if not c:
                continue
            body = c.to_text().replace(" ", "")
            if n == 0:
                terms.append(body)
                continue
            mono = "t" if n == 1 else f"t^{n}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                if any(ch in body for ch in "+-/") and not body.lstrip("-").isdigit():
                    body = f"({body})"
                terms.append(f"{body}*{mono}")
        text = " + ".join(terms or ["0"]) + f" + O(t^{self.order})"
        return text.replace(" + -", " - ")

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self._c]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> TruncSeries:
        return cls([RationalFunction.from_json(d) for d in data])

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"TruncSeries({self.to_text()!r})"


def _require_constant(f: TruncSeries, value: int, what: str) -> None:
    if f[0] != value:
        raise ValueError(f"{what} needs constant term {value}, got {f[0]}")


def series_mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    return f * g


def series_exp(f: TruncSeries) -> TruncSeries:
    """Formal exponential via ``n g_n = sum_k k f_k g_(n-k)``."""
    _require_constant(f, 0, "exp")
    g = [_ONE]
    for n in range(1, f.order):
        s = _ZERO
        for k in range(1, n + 1):
            if f[k]:
                s = s + f[k] * g[n - k] * k
        g.append(s * Fraction(1, n))
    return TruncSeries._raw(g)


def series_log(g: TruncSeries) -> TruncSeries:
    """Formal logarithm via ``n f_n = n g_n - sum_(k<n) k f_k g_(n-k)``."""
    _require_constant(g, 1, "log")
    f = [_ZERO]
    for n in range(1, g.order):
        s = g[n] * n
        for k in range(1, n):
            if f[k] and g[n - k]:
                s = s - f[k] * g[n - k] * k
        f.append(s * Fraction(1, n))
    return TruncSeries._raw(f)


def series_adams(f: TruncSeries, i: int) -> TruncSeries:
    return f.adams(i)


def big_psi(f: TruncSeries) -> TruncSeries:
    """``sum_(i>=1) psi_i / i``; terms with ``i >= order`` vanish."""
    _require_constant(f, 0, "Psi")
    out = f
    for i in range(2, f.order):
        out = out + f.adams(i) * Fraction(1, i)
    return out


def big_psi_inv(f: TruncSeries) -> TruncSeries:
    """``sum_(i>=1) mu(i)/i psi_i``."""
    _require_constant(f, 0, "Psi^-1")
    out = f
    for i in range(2, f.order):
        mu = moebius(i)
        if mu:
            out = out + f.adams(i) * Fraction(mu, i)
    return out


def pleth_exp(f: TruncSeries) -> TruncSeries:
    return series_exp(big_psi(f))


def pleth_log(g: TruncSeries) -> TruncSeries:
    return big_psi_inv(series_log(g))


def product_expansion(g: TruncSeries) -> dict[tuple[int, int], int]:
    """Exponents ``c[n, k]`` with ``g = prod (1 - q^k t^n)^(-c[n, k])``.

    Raises :class:`NotIntegral` at the first degree whose plethystic
    logarithm coefficient is not in ``Z[q, q^-1]``.
    """
    _require_constant(g, 1, "product expansion")
    L = pleth_log(g)
    out: dict[tuple[int, int], int] = {}
    for n in range(1, g.order):
        try:
            poly = L[n].to_laurent()
        except NotLaurent:
            raise NotIntegral(n, L[n]) from None
        if not poly.is_integral():
            raise NotIntegral(n, L[n])
        for k, c in poly.items():
            out[(n, k)] = c
    return out


def euler_product(c: Mapping[tuple[int, int], int], order: int) -> TruncSeries:
    """Expand ``prod (1 - q^k t^n)^(-c[n, k])`` directly to the given order.

    Independent of :func:`pleth_exp`; used to check the product formula.
    """
    out = TruncSeries.one(order)
    for (n, k), e in sorted(c.items()):
        if n >= order or not e:
            continue
        factor = TruncSeries.one(order) - TruncSeries.t(order, n, LaurentPoly.monomial(k))
        out = out * factor ** (-e)
    return out


def q_moebius_forward(f: Mapping[int, LaurentPoly], N: int) -> dict[int, LaurentPoly]:
    """``g_n = (1/n) sum_(d|n) f_d(q^(n/d))`` for ``n = 1..N``."""
    out = {}
    for n in range(1, N + 1):
        s = LaurentPoly()
        for d in divisors(n):
            s = s + LaurentPoly.coerce(f.get(d, 0)).adams(n // d)
        out[n] = s * Fraction(1, n)
    return out


def q_moebius_invert(g: Mapping[int, LaurentPoly], N: int) -> dict[int, LaurentPoly]:
    """``f_n = sum_(d|n) mu(n/d) d g_d(q^(n/d))`` for ``n = 1..N``."""
    out = {}
    for n in range(1, N + 1):
        s = LaurentPoly()
        for d in divisors(n):
            mu = moebius(n // d)
            if mu:
                s = s + LaurentPoly.coerce(g[d]).adams(n // d) * (mu * d)
        out[n] = s
    return out
