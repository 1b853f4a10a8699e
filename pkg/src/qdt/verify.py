"""Named consistency checks run by ``qdt verify``.

Every check takes the m and n values to sweep and returns a list of failure
messages; an empty list means the check passed.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import coha, hilbert, necklaces
from .dtinv import (
    dt_formula,
    dt_from_classes,
    dt_from_series,
    dtq_from_classes,
    dtq_from_series,
    residue_counts,
)
from .exactmath import LaurentPoly, NotDivisible, divisors, moebius, signed_moebius_sum
from .higgs import class_to_higgs, enumerate_higgs, higgs_count_check, higgs_to_class
from .plethystic import (
    TruncSeries,
    big_psi,
    big_psi_inv,
    euler_product,
    pleth_exp,
    pleth_log,
    product_expansion,
    q_moebius_forward,
    q_moebius_invert,
    series_exp,
    series_log,
)

Q = LaurentPoly.monomial(1)


def tabulated_dt(m: int, n: int) -> Fraction:
    """Closed polynomial expressions in m for ``DT_1 .. DT_7``."""
    M = Fraction(m)
    if n == 1:
        return Fraction(1)
    if n == 2:
        return Fraction(m // 2)
    if n == 3:
        return M * (M - 1) / 2
    if n == 4:
        return M * (M - 1) * (2 * M - 1) / 3
    if n == 5:
        return 5 * M * (M - 1) * (5 * M**2 - 5 * M + 2) / 24
    if n == 6:
        c = Fraction(13 + (-1) ** (m - 1) * 5, 2)
        return M * (M - 1) * (36 * M**3 - 54 * M**2 + 31 * M - c) / 20
    if n == 7:
        return 7 * M * (M - 1) * (343 * M**4 - 686 * M**3 + 539 * M**2 - 196 * M + 36) / 720
    raise ValueError("closed expressions are only tabulated for n <= 7")


def check_dt_table(ms, ns) -> list[str]:
    return [
        f"m={m} n={n}: formula {dt_formula(m, n)} != tabulated {tabulated_dt(m, n)}"
        for m in ms
        for n in ns
        if n <= 7 and dt_formula(m, n) != tabulated_dt(m, n)
    ]


def check_three_routes(ms, ns) -> list[str]:
    out = []
    N = max(ns) + 1
    for m in ms:
        series = dt_from_series(m, max(N, 2))
        for n in ns:
            f, c = dt_formula(m, n), dt_from_classes(m, n)
            if not f == series[n] == c:
                out.append(f"m={m} n={n}: formula {f}, series {series[n]}, classes {c}")
    return out


def check_quantized(ms, ns) -> list[str]:
    out = []
    N = max(ns) + 1
    for m in ms:
        series = dtq_from_series(m, max(N, 2))
        for n in ns:
            poly = dtq_from_classes(m, n)
            if series[n] != poly:
                out.append(f"m={m} n={n}: series {series[n]} != classes {poly}")
            if not poly.is_integral():
                out.append(f"m={m} n={n}: {poly} not integral")
            if poly(1) != dt_formula(m, n):
                out.append(f"m={m} n={n}: DT(1) = {poly(1)} != {dt_formula(m, n)}")
    return out


def check_divisibility(ms, ns) -> list[str]:
    out = []
    for m in ms:
        for n in ns:
            qbar, Qn = coha.q_polys(m, n)
            try:
                Qn.div_exact(LaurentPoly.qint(n))
            except NotDivisible:
                out.append(f"m={m} n={n}: [n] does not divide Q_n = {Qn}")
            out.extend(_root_of_unity_reconciliation(m, n, qbar, Qn))
    return out


def _root_of_unity_reconciliation(m: int, n: int, qbar: LaurentPoly, Qn: LaurentPoly) -> list[str]:
    """Qbar_n(zeta_n^s) three ways: from the closed form of P_d at roots of
    unity, from the residue mod q^n - 1, and from Qbar_n itself."""
    out = []
    residue = necklaces.qbar_mod(m, n)
    if residue != qbar.mod_cyclic(n):
        out.append(f"m={m} n={n}: Qbar mod q^n-1 {qbar.mod_cyclic(n)} != {residue}")
    for s in range(1, n + 1):
        closed = Fraction(0)
        for d in divisors(n):
            sd = s % d or d
            closed += moebius(n // d) * necklaces.p_root_closed_form(m, d, sd)
        closed /= n
        via_residue = necklaces.root_of_unity_value(residue, n, s)
        via_poly = necklaces.root_of_unity_value(qbar, n, s)
        if not (via_residue == via_poly == closed):
            out.append(f"m={m} n={n} s={s}: closed {closed}, residue {via_residue}, Qbar {via_poly}")
        if s < n:
            if n % s == 0:
                f = {g: math.comb(m * g - 1, g - 1) for g in divisors(s)}
                if signed_moebius_sum(f, n, s, m) != closed:
                    out.append(f"m={m} n={n} s={s}: signed Moebius sum disagrees")
            qv = necklaces.root_of_unity_value(Qn, n, s)
            if qv != 0:
                out.append(f"m={m} n={n} s={s}: Q_n(zeta^s) = {qv} != 0")
    return out


def check_residues(ms, ns) -> list[str]:
    out = []
    for m in ms:
        for n in ns:
            counts = residue_counts(m, n)
            if counts != [dt_formula(m, n)] * n:
                out.append(f"m={m} n={n}: residue counts {counts}")
    return out


def check_hilbert(ms, ns) -> list[str]:
    out = []
    N = max(ns) + 1
    for m in ms:
        F = hilbert.series_F(m, N)
        rhs = TruncSeries.one(N)
        for k in range(m):
            rhs = rhs * F.scale_t(Q**k)
        if F != 1 + rhs.times_t(1):
            out.append(f"m={m}: F does not solve its q-difference equation")
        Fnum = hilbert.series_F(m, N, mode="numeric")
        if F.map_coeffs(lambda c: c.to_laurent()(1)) != Fnum:
            out.append(f"m={m}: F(1, t) != F(t)")
        if [c.constant_value() for c in Fnum] != [hilbert.fuss_catalan(m, n) for n in range(N)]:
            out.append(f"m={m}: F(t) coefficients are not Fuss-Catalan numbers")
        H = hilbert.series_H(m, N)
        if F != H / H.scale_t(Q**-1):
            out.append(f"m={m}: F != H(q,t)/H(q,t/q)")
        if H != H.scale_t(Q**-1) + H.scale_t(Q ** (m - 1)).times_t(1):
            out.append(f"m={m}: H recurrence fails")
        for n in ns:
            trees = list(hilbert.enumerate_trees(m, n))
            if len(trees) != hilbert.fuss_catalan(m, n):
                out.append(f"m={m} n={n}: {len(trees)} trees")
            wt = LaurentPoly([(hilbert.tree_weight(T, m), 1) for T in trees])
            if F[n] != wt:
                out.append(f"m={m} n={n}: tree weights {wt} != [t^n] F = {F[n]}")
            if coha.t_weight_poly(m, n) != wt:
                out.append(f"m={m} n={n}: partition weights differ from tree weights")
    return out


def check_bijections(ms, ns) -> list[str]:
    out = []
    for m in ms:
        for n in ns:
            for T in hilbert.enumerate_trees(m, n):
                lam = hilbert.tree_to_partition(T, m)
                if not coha.in_T(lam, m) or hilbert.partition_to_tree(lam, m) != T:
                    out.append(f"m={m}: tree {hilbert.format_tree(T)} does not round-trip")
                if coha.weight(lam, m) != hilbert.tree_weight(T, m):
                    out.append(f"m={m}: weight not preserved for {hilbert.format_tree(T)}")
                if len(hilbert.corona(T, m)) != (m - 1) * n + 1:
                    out.append(f"m={m}: corona size wrong for {hilbert.format_tree(T)}")
            TL = set()
            for lam in coha.enumerate_T(m, n):
                a = necklaces.phi(lam, m)
                if necklaces.phi_inv(a) != lam or not necklaces.is_admissible(a):
                    out.append(f"m={m}: phi does not round-trip on {lam}")
                if necklaces.seq_weight(a) != coha.weight(lam, m):
                    out.append(f"m={m}: phi does not preserve the weight of {lam}")
            for lam in coha.enumerate_TL(m, n):
                TL.add(necklaces.classify(necklaces.phi(lam, m)))
            prim = set(necklaces.enumerate_classes(m, n))
            if TL != prim:
                out.append(f"m={m} n={n}: T^L does not match primitive classes")
            for d in range(1, n + 1):
                if math.gcd(n, d) != 1:
                    continue
                H = list(enumerate_higgs(n, d, m))
                if not higgs_count_check(n, d, m):
                    out.append(f"m={m} n={n} d={d}: |H| = {len(H)} != DT")
                for l in H:
                    if class_to_higgs(higgs_to_class(l, m), d, m) != l:
                        out.append(f"m={m} n={n} d={d}: Phi does not round-trip on {l}")
    return out


WORKED_FACTORIZATIONS = {
    (0, 0, 0, 3): [(0, 0, 0), (0,)],
    (0, 0, 1, 3): [(0, 0, 1), (0,)],
    (0, 0, 2, 2): [(0, 0), (0, 0)],
    (0, 0, 2, 3): [(0, 0), (0,), (0,)],
    (0, 1, 1, 1): [(0,), (0, 0, 0)],
    (0, 1, 1, 2): [(0,), (0, 0, 1)],
    (0, 1, 1, 3): [(0,), (0, 0), (0,)],
    (0, 1, 2, 2): [(0,), (0,), (0, 0)],
    (0, 1, 2, 3): [(0,), (0,), (0,), (0,)],
}
WORKED_T4 = ["0000", "0001", "0002", "0003", "0011", "0012", "0013",
             "0022", "0023", "0111", "0112", "0113", "0122", "0123"]
WORKED_TL4 = ["0000", "0001", "0002", "0003", "0011", "0012", "0013", "0023"]


def check_worked_example(ms=(), ns=()) -> list[str]:
    out = []
    T4 = list(coha.enumerate_T(2, 4))
    if [coha.format_partition(p).strip("()") for p in T4] != WORKED_T4:
        out.append("T_4 for m=2 differs from the 14 listed partitions")
    T04 = [p for p in T4 if coha.in_T0(p, 2)]
    if len(T04) != 5 or set(T04) | set(WORKED_FACTORIZATIONS) != set(T4):
        out.append(f"T0_4 has {len(T04)} elements")
    for lam, factors in WORKED_FACTORIZATIONS.items():
        if list(coha.factorize_T0(lam, 2)) != factors or coha.star_all(factors, 2) != lam:
            out.append(f"factorization of {lam} differs")
    if [coha.format_partition(p).strip("()") for p in coha.enumerate_TL(2, 4)] != WORKED_TL4:
        out.append("T^L_4 differs from the eight listed elements")
    return out


def check_corqn(ms, ns) -> list[str]:
    out = []
    N = max(ns) + 1
    for m in ms:
        H = hilbert.series_H(m, N)
        qbar = [0] + [coha.q_polys(m, n)[0] for n in range(1, N)]
        qfull = [0] + [coha.q_polys(m, n)[1] for n in range(1, N)]
        gen = TruncSeries([0] + [qbar[n] / (1 - Q**-n) for n in range(1, N)], N)
        if pleth_exp(gen) != H:
            out.append(f"m={m}: H != Exp(sum Qbar_n/(1-q^-n) t^n)")
        sign = -1 if m % 2 == 0 else 1
        gen = TruncSeries([0] + [qfull[n] / (1 - Q**-n) for n in range(1, N)], N).scale_t(sign)
        if pleth_exp(gen) != H.scale_t(sign):
            out.append(f"m={m}: signed product expansion fails")
    return out


def _random_series(rng: random.Random, order: int, constant: int = 0) -> TruncSeries:
    coeffs = [constant]
    for _ in range(1, order):
        poly = LaurentPoly([(rng.randint(-2, 3), rng.randint(-3, 3)) for _ in range(2)])
        coeffs.append(poly)
    return TruncSeries(coeffs, order)


def check_appendix(ms=(), ns=(), seed: int = 20240101, trials: int = 10) -> list[str]:
    out = []
    rng = random.Random(seed)
    for _ in range(trials):
        f = _random_series(rng, 10)
        if series_log(series_exp(f)) != f:
            out.append("log(exp(f)) != f")
        if big_psi_inv(big_psi(f)) != f or big_psi(big_psi_inv(f)) != f:
            out.append("Psi and Psi^-1 are not inverse")
        if pleth_log(pleth_exp(f)) != f:
            out.append("Log(Exp(f)) != f")
        c = {(n, k): rng.randint(-2, 2) for n in range(1, 6) for k in range(-1, 2)}
        c = {key: v for key, v in c.items() if v}
        g = euler_product(c, 6)
        exponents = TruncSeries([0] + [LaurentPoly({k: v for (i, k), v in c.items() if i == n}) for n in range(1, 6)])
        if pleth_exp(exponents) != g or product_expansion(g) != c:
            out.append("product formula for Exp fails")
        table = {n: LaurentPoly([(rng.randint(-3, 3), rng.randint(-4, 4))]) for n in range(1, 13)}
        if q_moebius_forward(q_moebius_invert(table, 12), 12) != table:
            out.append("q-Moebius inversion does not round-trip")
    for n in range(1, 31):
        for s in divisors(n)[:-1]:
            for m in range(1, 5):
                for _ in range(5):
                    f = {g: rng.randint(-50, 50) for g in divisors(n)}
                    val = signed_moebius_sum(f, n, s, m)
                    if m % 2 == 0 and n % 2 == 0 and s == n // 2 and s % 2 == 1:
                        expect = -Fraction(sum(moebius(s // d) * f[d] for d in divisors(s)), s)
                    else:
                        expect = 0
                    if val != expect:
                        out.append(f"signed Moebius sum n={n} s={s} m={m}: {val} != {expect}")
    return out


def check_shuffle(ms, ns) -> list[str]:
    out = []
    for m in ms:
        for total in range(0, 5):
            for l1 in range(0, total + 1):
                for lam in _all_partitions(l1, (m - 1) * max(l1, 1) + 1):
                    for mu in _all_partitions(total - l1, (m - 1) * max(total - l1, 1) + 1):
                        if coha.shuffle_q0(lam, mu, m) != coha.p_lambda(coha.star(lam, mu, m)):
                            out.append(f"m={m}: P_lam * P_mu != P_(lam*mu) for {lam}, {mu}")
        for lam, mu in [((0,), (0,)), ((0, 1), (0,)), ((0,), (1, 2)), ((0, 0), (0, 1))]:
            f, g = coha.p_lambda(lam), coha.p_lambda(mu)
            n1, n2 = len(lam), len(mu)
            a = coha.shuffle_product(f, n1, g, n2, m, q=1)
            b = coha.shuffle_product(g, n2, f, n1, m, q=1)
            sign = (-1) ** ((m - 1) * n1 * n2)
            if a != {e: sign * c for e, c in b.items()}:
                out.append(f"m={m}: supercommutativity fails for {lam}, {mu}")
    return out


def _all_partitions(n: int, bound: int):
    """Weakly increasing tuples of length n with parts in ``0..bound``."""
    if n == 0:
        yield ()
        return

    def rec(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(prefix[-1] if prefix else 0, bound + 1):
            yield from rec(prefix + [v])

    yield from rec([])


def check_literal_forms(ms=(), ns=()) -> list[str]:
    out = []
    literal = dt_formula(2, 2, literal=True)
    if literal != Fraction(3, 2) or dt_formula(2, 2) != 1:
        out.append(f"literal DT formula gives {literal} at m=n=2")
    lit = dtq_from_classes(2, 2, literal_normalization=True)
    series = dtq_from_series(2, 3)[2]
    if lit != Q**-1 or series != Q or lit == series:
        out.append(f"q^(1-n) normalization gives {lit}, series gives {series}")
    return out


@dataclass(frozen=True)
class Check:
    name: str
    description: str
    run: Callable[[Sequence[int], Sequence[int]], list[str]]
    max_m: int | None = None
    max_n: int | None = None


CHECKS = [
    Check("dt-table", "closed DT formula vs tabulated expressions in m", check_dt_table, max_n=7),
    Check("three-routes", "formula = series = class count", check_three_routes),
    Check("quantized", "DT_n(q) by series and by classes", check_quantized),
    Check("divisibility", "[n] divides Q_n; root-of-unity values", check_divisibility),
    Check("residues", "class counts per weight residue equal DT_n", check_residues),
    Check("hilbert", "F/H functional equations and tree statistics", check_hilbert, max_m=3),
    Check("bijections", "trees, phi, T^L vs classes, Higgs sequences", check_bijections, max_m=3, max_n=7),
    Check("worked-example", "m=2, n=4 partitions and factorizations", check_worked_example),
    Check("corqn", "H as plethystic exponentials of Qbar_n and Q_n", check_corqn, max_m=3),
    Check("appendix", "Exp/Log, Psi, q-Moebius, signed Moebius sums", check_appendix),
    Check("shuffle", "q=0 shuffle product and supercommutativity", check_shuffle, max_m=3),
    Check("literal-forms", "literal readings of two closed formulas fail", check_literal_forms),
]
CHECKS_BY_NAME = {c.name: c for c in CHECKS}

LEVELS = {"fast": (2, 6), "full": (4, 8)}


def check_ranges(check: Check, m_max: int, n_max: int, m_min: int = 1, n_min: int = 1):
    mm = min(m_max, check.max_m) if check.max_m else m_max
    nn = min(n_max, check.max_n) if check.max_n else n_max
    return range(m_min, mm + 1), range(n_min, nn + 1)
