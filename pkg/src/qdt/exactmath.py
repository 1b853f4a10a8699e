"""Exact arithmetic: number theory helpers, Laurent polynomials in ``q`` and
rational functions in ``q``.

Python integers are already unbounded and :class:`fractions.Fraction` is an
always-reduced rational, so both are used directly as the scalar types.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, Mapping, Union

Scalar = Union[int, Fraction]


class NotDivisible(ArithmeticError):
    """Exact division of Laurent polynomials has a nonzero remainder."""


class NotLaurent(ArithmeticError):
    """A rational function has a denominator that is not a monomial."""


# --------------------------------------------------------------------------
# number theory


def binomial(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return math.comb(a, b)


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as ``((p, e), ...)`` with increasing p."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("moebius is defined for n >= 1")
    mu = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        mu = -mu
    return mu


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of ``n`` in increasing order."""
    if n < 1:
        raise ValueError("divisors are defined for n >= 1")
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def signed_moebius_sum(f: Callable[[int], int] | Mapping[int, int], n: int, s: int, m: int) -> Fraction:
    """Return ``(1/n) * sum_{d|n} mu(n/d) (-1)^((m-1)(d-1)s) f(gcd(d, s))``.

    ``s`` must be a proper divisor of ``n``.  The sum vanishes except when
    m and n are even and s = n/2 is odd.
    """
    if n < 1 or s < 1 or n % s or s >= n:
        raise ValueError(f"s={s} is not a proper divisor of n={n}")
    get = f.__getitem__ if isinstance(f, Mapping) else f
    total = 0
    for d in divisors(n):
        sign = -1 if ((m - 1) * (d - 1) * s) % 2 else 1
        total += moebius(n // d) * sign * get(math.gcd(d, s))
    return Fraction(total, n)


# --------------------------------------------------------------------------
# scalar helpers


def _norm(c: Scalar) -> Scalar:
    """Store integral rationals as ``int`` (keeps the common path fast)."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _scalar(c) -> Scalar:
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"unsupported coefficient {c!r}")


def _fmt_scalar(c: Scalar) -> str:
    return str(c)


# --------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Element of ``Q[q, q^-1]``, stored sparsely as exponent -> coefficient.

    Zero coefficients are never stored.  Instances are immutable and
    hashable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] | None = None):
        items = coeffs.items() if isinstance(coeffs, Mapping) else (coeffs or ())
        c: Dict[int, Scalar] = {}
        for e, v in items:
            v = _scalar(v)
            if v:
                e = int(e)
                v = _norm(c.get(e, 0) + v)
                if v:
                    c[e] = v
                else:
                    c.pop(e, None)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: Dict[int, Scalar]) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    # constructors ---------------------------------------------------------
    @classmethod
    def constant(cls, c: Scalar) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: Scalar = 1) -> LaurentPoly:
        return cls({e: c})

    @classmethod
    def qint(cls, n: int) -> LaurentPoly:
        """The q-integer ``[n] = 1 + q + ... + q^(n-1)``."""
        return cls._raw({i: 1 for i in range(n)})

    @classmethod
    def coerce(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        return cls.constant(_scalar(x))

    # inspection -----------------------------------------------------------
    def coeffs(self) -> dict[int, Scalar]:
        return dict(self._c)

    def items(self) -> list[tuple[int, Scalar]]:
        return sorted(self._c.items())

    def __getitem__(self, e: int) -> Scalar:
        return self._c.get(e, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in self._c.values())

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._c)

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._c.values())

    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of zero")
        return max(self._c)

    def low_degree(self) -> int:
        if not self._c:
            raise ValueError("low degree of zero")
        return min(self._c)

    def __call__(self, x: Scalar) -> Scalar:
        """Evaluate at a nonzero rational (any rational if no negative powers)."""
        total = Fraction(0)
        for e, v in self._c.items():
            total += v * Fraction(x) ** e
        return _norm(total)

    # arithmetic -----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._c == ({0: _norm(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __add__(self, other) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.coerce(other)
            except TypeError:
                return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = _norm(c.get(e, 0) + v)
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __sub__(self, other) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return LaurentPoly()
            return LaurentPoly._raw({e: _norm(v * other) for e, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c: Dict[int, Scalar] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly._raw({e: _norm(v) for e, v in c.items() if v})

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Scalar division stays Laurent; division by a polynomial gives a
        :class:`RationalFunction`."""
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * (Fraction(1) / other)
        if isinstance(other, LaurentPoly):
            return RationalFunction(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        return RationalFunction(LaurentPoly.coerce(other), self)

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, v),) = self._c.items()
            return LaurentPoly._raw({e * k: _norm(Fraction(1) / Fraction(v) ** -k)})
        out = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q^k``."""
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def adams(self, i: int) -> LaurentPoly:
        """Substitute ``q -> q^i``."""
        if i < 1:
            raise ValueError("Adams operations need i >= 1")
        return LaurentPoly._raw({e * i: v for e, v in self._c.items()})

    def substitute_sign(self) -> LaurentPoly:
        """Substitute ``q -> -q``."""
        return LaurentPoly._raw({e: (-v if e % 2 else v) for e, v in self._c.items()})

    def mod_cyclic(self, n: int) -> LaurentPoly:
        """Reduce modulo ``q^n - 1``: exponents folded into ``0..n-1``."""
        c: Dict[int, Scalar] = {}
        for e, v in self._c.items():
            r = e % n
            c[r] = c.get(r, 0) + v
        return LaurentPoly._raw({e: _norm(v) for e, v in c.items() if v})

    def div_exact(self, g: LaurentPoly) -> LaurentPoly:
        """Return ``h`` with ``self == g * h`` or raise :class:`NotDivisible`.

        Both operands are shifted to ordinary polynomials and divided from the
        top exponent down.
        """
        g = LaurentPoly.coerce(g)
        if not g._c:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self._c:
            return LaurentPoly()
        flo, glo = self.low_degree(), g.low_degree()
        f = [Fraction(0)] * (self.degree() - flo + 1)
        for e, v in self._c.items():
            f[e - flo] = Fraction(v)
        d = [Fraction(0)] * (g.degree() - glo + 1)
        for e, v in g._c.items():
            d[e - glo] = Fraction(v)
        dg = len(d) - 1
        if len(f) - 1 < dg:
            raise NotDivisible(f"{self} is not divisible by {g}")
        lead = d[-1]
        quot = [Fraction(0)] * (len(f) - dg)
        for i in range(len(f) - 1, dg - 1, -1):
            c = f[i]
            if c:
                c = c / lead
                quot[i - dg] = c
                for j in range(dg + 1):
                    f[i - dg + j] -= c * d[j]
        if any(f[:dg]):
            raise NotDivisible(f"{self} is not divisible by {g}")
        return LaurentPoly({e + flo - glo: v for e, v in enumerate(quot) if v})

    # rendering ------------------------------------------------------------
    def to_text(self, descending: bool = False) -> str:
        """Canonical text, e.g. ``q^-2 + 3 + 2*q`` (increasing exponents)."""
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=descending):
            neg = v < 0
            a = -v if neg else v
            if e == 0:
                body = _fmt_scalar(a)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if a == 1 else f"{_fmt_scalar(a)}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def to_json(self) -> list[list]:
        return [[e, str(v)] for e, v in sorted(self._c.items())]

    @classmethod
    def from_json(cls, data: Iterable[Iterable]) -> LaurentPoly:
        return cls((int(e), Fraction(v)) for e, v in data)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"


Q = LaurentPoly.monomial(1)


def laurent_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return LaurentPoly.coerce(f) * LaurentPoly.coerce(g)


def laurent_div_exact(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return LaurentPoly.coerce(f).div_exact(g)


def laurent_adams(f: LaurentPoly, i: int) -> LaurentPoly:
    return LaurentPoly.coerce(f).adams(i)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> LaurentPoly:
    """The cyclotomic polynomial ``Phi_n(q)``."""
    f = LaurentPoly({n: 1, 0: -1})
    for d in divisors(n)[:-1]:
        f = f.div_exact(cyclotomic(d))
    return f


def poly_rem(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Remainder of the polynomial ``f`` modulo the polynomial ``g`` over Q."""
    if not (f.is_polynomial() and g.is_polynomial()):
        raise ValueError("poly_rem expects ordinary polynomials")
    if not f:
        return f
    rem = [Fraction(f[e]) for e in range(f.degree() + 1)]
    d = [Fraction(g[e]) for e in range(g.degree() + 1)]
    dg = len(d) - 1
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c:
            c = c / d[-1]
            for j in range(dg + 1):
                rem[i - dg + j] -= c * d[j]
    return LaurentPoly({e: v for e, v in enumerate(rem[:dg]) if v})


# --------------------------------------------------------------------------
# dense integer polynomials (private; coefficient lists, low degree first)


def _trim(p: list[int]) -> list[int]:
    while p and not p[-1]:
        p.pop()
    return p


def _padd(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return _trim(out)


def _pmul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) == 1:
        c = a[0]
        return [c * v for v in b]
    if len(b) == 1:
        c = b[0]
        return [c * v for v in a]
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _content(p: list[int]) -> int:
    g = 0
    for v in p:
        g = math.gcd(g, v)
        if g == 1:
            break
    return g


def _primitive(p: list[int]) -> list[int]:
    c = _content(p)
    if p and p[-1] < 0:
        c = -c
    return [v // c for v in p] if c not in (0, 1) else list(p)


def _pdivexact(a: list[int], b: list[int]) -> list[int]:
    """Quotient of integer polynomials known to divide exactly over Z."""
    if len(b) == 1:
        c = b[0]
        return [v // c for v in a]
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q, r = divmod(c, lead)
            if r:
                raise ArithmeticError("inexact integer polynomial division")
            quot[i - db] = q
            for j in range(db + 1):
                a[i - db + j] -= q * b[j]
    if any(a[:db]):
        raise ArithmeticError("inexact integer polynomial division")
    return quot


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b."""
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [v * lead for v in a]
        for j in range(db + 1):
            a[shift + j] -= c * b[j]
        _trim(a)
    return a


def _ord_q(p: list[int]) -> int:
    k = 0
    while k < len(p) and not p[k]:
        k += 1
    return k


def _eval_int(p: list[int], x: int) -> int:
    v = 0
    for c in reversed(p):
        v = v * x + c
    return v


def _divides(b: list[int], a: list[int]) -> bool:
    try:
        _pdivexact(a, b)
    except ArithmeticError:
        return False
    return True


def _heu_gcd(a: list[int], b: list[int]) -> list[int] | None:
    """Heuristic gcd via evaluation at a large integer (Char, Geddes, Gonnet).

    Returns None when the heuristic gives up; the caller falls back to PRS.
    """
    na = max(abs(v) for v in a)
    nb = max(abs(v) for v in b)
    x = 2 * min(na, nb) + 29
    for _ in range(6):
        h = math.gcd(_eval_int(a, x), _eval_int(b, x))
        cand = []
        while h:
            r = h % x
            if r > x // 2:
                r -= x
            cand.append(r)
            h = (h - r) // x
        cand = _primitive(_trim(cand))
        if cand and _divides(cand, a) and _divides(cand, b):
            return cand
        x = 73794 * x * math.isqrt(math.isqrt(x)) // 27011
    return None


def _prs_gcd(a: list[int], b: list[int]) -> list[int]:
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r)
    return _primitive(a)


def _pgcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd with positive leading coefficient (over Q, up to units)."""
    if not a:
        return _primitive(b) if b else [1]
    if not b:
        return _primitive(a)
    k = min(_ord_q(a), _ord_q(b))
    a, b = a[_ord_q(a):], b[_ord_q(b):]
    if len(a) == 1 or len(b) == 1:
        core = [1]
    else:
        a, b = _primitive(a), _primitive(b)
        core = _heu_gcd(a, b) or _prs_gcd(a, b)
    return [0] * k + core


# --------------------------------------------------------------------------
# rational functions


def _as_poly_fraction(f: LaurentPoly) -> tuple[list[int], list[int]]:
    """Write a Laurent polynomial as integer polynomial over integer polynomial."""
    if not f:
        return [], [1]
    lo = f.low_degree()
    den = 1
    for v in f._c.values():
        if isinstance(v, Fraction):
            den = den * v.denominator // math.gcd(den, v.denominator)
    num = [0] * (f.degree() - min(lo, 0) + 1)
    for e, v in f._c.items():
        num[e - min(lo, 0)] = int(v * den)
    d = [0] * (-min(lo, 0)) + [den]
    return num, d


class RationalFunction:
    """Reduced fraction ``num(q)/den(q)`` of integer-coefficient polynomials.

    Canonical form: ``gcd(num, den) = 1`` as polynomials over Q, the
    coefficients of ``num`` and ``den`` have no common integer factor, and the
    leading coefficient of ``den`` is positive.  Equality is structural.
    """

    __slots__ = ("_n", "_d")

    def __init__(self, num: LaurentPoly | Scalar = 0, den: LaurentPoly | Scalar = 1):
        n1, d1 = _as_poly_fraction(LaurentPoly.coerce(num))
        n2, d2 = _as_poly_fraction(LaurentPoly.coerce(den))
        if not n2:
            raise ZeroDivisionError("zero denominator")
        self._n, self._d = _reduce(_pmul(n1, d2), _pmul(d1, n2))

    @classmethod
    def _raw(cls, n: list[int], d: list[int]) -> RationalFunction:
        obj = cls.__new__(cls)
        obj._n = n
        obj._d = d
        return obj

    @classmethod
    def coerce(cls, x) -> RationalFunction:
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, LaurentPoly):
            return cls(x)
        x = _scalar(x)
        if isinstance(x, int):
            return cls._raw([x] if x else [], [1])
        return cls._raw([x.numerator], [x.denominator])

    @property
    def num(self) -> LaurentPoly:
        return LaurentPoly._raw({e: v for e, v in enumerate(self._n) if v})

    @property
    def den(self) -> LaurentPoly:
        return LaurentPoly._raw({e: v for e, v in enumerate(self._d) if v})

    def is_zero(self) -> bool:
        return not self._n

    def __bool__(self) -> bool:
        return bool(self._n)

    def is_constant(self) -> bool:
        return len(self._n) <= 1 and len(self._d) == 1

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return _norm(Fraction(self._n[0] if self._n else 0, self._d[0]))

    def is_laurent(self) -> bool:
        return all(v == 0 for v in self._d[:-1])

    def to_laurent(self) -> LaurentPoly:
        """Convert to a Laurent polynomial; raise :class:`NotLaurent` otherwise."""
        if not self.is_laurent():
            raise NotLaurent(f"{self} is not a Laurent polynomial")
        k = len(self._d) - 1
        c = self._d[-1]
        return LaurentPoly._raw({e - k: _norm(Fraction(v, c)) for e, v in enumerate(self._n) if v})

    def __call__(self, x: Scalar) -> Scalar:
        d = _eval_frac(self._d, x)
        if d == 0:
            raise ZeroDivisionError(f"{self} has a pole at {x}")
        return _norm(Fraction(_eval_frac(self._n, x)) / d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            try:
                other = RationalFunction.coerce(other)
            except TypeError:
                return NotImplemented
        return self._n == other._n and self._d == other._d

    def __hash__(self) -> int:
        return hash((tuple(self._n), tuple(self._d)))

    def __neg__(self) -> RationalFunction:
        return RationalFunction._raw([-v for v in self._n], self._d)

    def __add__(self, other) -> RationalFunction:
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._n:
            return self
        if not self._n:
            return other
        a, b, c, d = self._n, self._d, other._n, other._d
        if b == d:
            num = _padd(a, c)
            if len(b) == 1:
                return RationalFunction._raw(*_normalize(num, b))
            g = _pgcd(num, b)
            return RationalFunction._raw(*_normalize(_pdivexact(num, g), _pdivexact(b, g)))
        g = _pgcd(b, d)
        b1, d1 = _pdivexact(b, g), _pdivexact(d, g)
        num = _padd(_pmul(a, d1), _pmul(c, b1))
        if not num:
            return RationalFunction._raw([], [1])
        h = _pgcd(num, g)
        return RationalFunction._raw(*_normalize(_pdivexact(num, h), _pmul(b1, _pdivexact(d, h))))

    __radd__ = __add__

    def __sub__(self, other) -> RationalFunction:
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RationalFunction:
        return (-self) + other

    def __mul__(self, other) -> RationalFunction:
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if not self._n or not other._n:
            return RationalFunction._raw([], [1])
        a, b, c, d = self._n, self._d, other._n, other._d
        g1 = _pgcd(a, d)
        g2 = _pgcd(c, b)
        if g1 != [1]:
            a, d = _pdivexact(a, g1), _pdivexact(d, g1)
        if g2 != [1]:
            c, b = _pdivexact(c, g2), _pdivexact(b, g2)
        return RationalFunction._raw(*_normalize(_pmul(a, c), _pmul(b, d)))

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if not self._n:
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction._raw(*_normalize(self._d, self._n))

    def __truediv__(self, other) -> RationalFunction:
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> RationalFunction:
        return RationalFunction.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> RationalFunction:
        if k < 0:
            return self.inverse() ** (-k)
        out = RationalFunction.coerce(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def adams(self, i: int) -> RationalFunction:
        """Substitute ``q -> q^i``; coprimality is preserved by substitution."""
        if i < 1:
            raise ValueError("Adams operations need i >= 1")
        if i == 1:
            return self
        return RationalFunction._raw(_spread(self._n, i), _spread(self._d, i))

    # rendering ------------------------------------------------------------
    def to_text(self) -> str:
        """Render with the denominator as a polynomial in ``q^-1``.

        ``q/(q - 1)`` is shown as ``1/(1 - q^-1)``.
        """
        if len(self._d) == 1 and self._d[0] == 1:
            return self.num.to_text()
        k = len(self._d) - 1
        num = self.num.shift(-k)
        den = self.den.shift(-k)
        ntext = num.to_text()
        if len(num._c) > 1:
            ntext = f"({ntext})"
        return f"{ntext}/({den.to_text(descending=True)})" if len(den._c) > 1 else f"{ntext}/{den.to_text()}"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> RationalFunction:
        return cls(LaurentPoly.from_json(data["num"]), LaurentPoly.from_json(data["den"]))

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"RationalFunction({self.to_text()!r})"


RationalFunctionQ = RationalFunction


def _spread(p: list[int], i: int) -> list[int]:
    if not p:
        return []
    out = [0] * ((len(p) - 1) * i + 1)
    for e, v in enumerate(p):
        out[e * i] = v
    return out


def _eval_frac(p: list[int], x: Scalar) -> Scalar:
    v: Scalar = 0
    for c in reversed(p):
        v = v * x + c
    return v


def _normalize(n: list[int], d: list[int]) -> tuple[list[int], list[int]]:
    """Fix integer content and sign; assumes polynomial gcd already removed."""
    n = _trim(list(n))
    d = _trim(list(d))
    if not n:
        return [], [1]
    g = math.gcd(_content(n), _content(d))
    if d[-1] < 0:
        g = -g
    if g != 1:
        n = [v // g for v in n]
        d = [v // g for v in d]
    return n, d


def _reduce(n: list[int], d: list[int]) -> tuple[list[int], list[int]]:
    n, d = _trim(n), _trim(d)
    if not d:
        raise ZeroDivisionError("zero denominator")
    if not n:
        return [], [1]
    g = _pgcd(n, d)
    if g != [1]:
        n, d = _pdivexact(n, g), _pdivexact(d, g)
    return _normalize(n, d)
