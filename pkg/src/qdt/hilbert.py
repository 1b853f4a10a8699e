"""m-ary trees, their cell statistics, and the series F(q,t), F(t), H(q,t).

Words are tuples of letters in ``1..m``; the empty tuple is the root.  Python
tuple comparison is exactly the lexicographic order in which a proper prefix
precedes its extensions (``() < (1,) < (1, 1) < (1, 2) < (2,)``).
"""
from __future__ import annotations

from typing import Iterator

from .coha import in_T
from .exactmath import LaurentPoly, RationalFunction, binomial
from .plethystic import TruncSeries

Word = tuple[int, ...]
Tree = tuple[Word, ...]


def _check_tree(T: Tree, m: int) -> None:
    words = set(T)
    for w in T:
        if any(not 1 <= a <= m for a in w):
            raise ValueError(f"word {w} has letters outside 1..{m}")
        if w and w[:-1] not in words:
            raise ValueError(f"{T} is not closed under prefixes")


def make_tree(words, m: int) -> Tree:
    T = tuple(sorted(set(tuple(w) for w in words)))
    _check_tree(T, m)
    return T


def corona(T: Tree, m: int) -> list[Word]:
    """One-letter extensions of tree words that leave the tree, sorted."""
    words = set(T)
    return sorted(w + (i,) for w in T for i in range(1, m + 1) if w + (i,) not in words)


def enumerate_trees(m: int, n: int) -> Iterator[Tree]:
    """All m-ary trees with n nodes, each once.

    A tree is built by adjoining its words in increasing order; each new word
    is a corona element larger than the previously added one.
    """
    if n == 0:
        yield ()
        return

    def grow(T: list[Word], last: Word) -> Iterator[Tree]:
        if len(T) == n:
            yield tuple(T)
            return
        for w in corona(tuple(T), m):
            if w > last:
                T.append(w)
                yield from grow(T, w)
                T.pop()

    yield from grow([()], ())


def cell_dim(T: Tree, m: int) -> int:
    """``d(T)``: pairs (corona word, tree word) with the tree word smaller."""
    return sum(1 for c in corona(T, m) for w in T if w < c)


def tree_weight(T: Tree, m: int) -> int:
    n = len(T)
    below = sum(1 for c in corona(T, m) for w in T if c < w)
    return (m - 1) * binomial(n, 2) - below


def tree_to_partition(T: Tree, m: int) -> tuple[int, ...]:
    C = corona(T, m)
    return tuple(sum(1 for c in C if c < w) for w in sorted(T))


def partition_to_tree(lam, m: int) -> Tree:
    lam = tuple(lam)
    if not in_T(lam, m):
        raise ValueError(f"{lam} is not in T_{len(lam)} for m={m}")
    T: list[Word] = []
    for k, part in enumerate(lam):
        # the first step adjoins the root; afterwards pick the (part+1)-th corona word
        candidates = [()] if k == 0 else corona(tuple(T), m)
        T.append(candidates[part])
    return tuple(sorted(T))


def fuss_catalan(m: int, n: int) -> int:
    if m < 1 or n < 0:
        raise ValueError("need m >= 1, n >= 0")
    num = binomial(m * n, n)
    den = (m - 1) * n + 1
    assert num % den == 0
    return num // den


def series_F(m: int, N: int, mode: str = "q") -> TruncSeries:
    """Solve ``F = 1 + t prod_(k<m) F(q, q^k t)`` (mode "q") or
    ``F = 1 + t F^m`` (mode "numeric") degree by degree."""
    if m < 1 or N < 1:
        raise ValueError("need m >= 1 and N >= 1")
    if mode not in ("q", "numeric"):
        raise ValueError(f"unknown mode {mode!r}")
    coeffs: list = [1]
    for n in range(1, N):
        # the t^(n-1) coefficient of the product only sees F_0..F_(n-1)
        F = TruncSeries(coeffs, n)
        prod = TruncSeries.one(n)
        for k in range(m):
            factor = F if (mode == "numeric" or k == 0) else F.scale_t(LaurentPoly.monomial(k))
            prod = prod * factor
        coeffs.append(prod[n - 1])
    return TruncSeries(coeffs, N)


def h_coefficient(m: int, n: int) -> RationalFunction:
    """``q^((m-1) C(n,2)) / ((1 - q^-1) ... (1 - q^-n))``."""
    den = RationalFunction.coerce(1)
    for i in range(1, n + 1):
        den = den * (1 - LaurentPoly.monomial(-i))
    return RationalFunction(LaurentPoly.monomial((m - 1) * binomial(n, 2))) / den


def series_H(m: int, N: int) -> TruncSeries:
    if m < 1:
        raise ValueError("need m >= 1")
    return TruncSeries([h_coefficient(m, n) for n in range(N)], N)


def format_tree(T: Tree) -> str:
    """Text form: comma-separated words, ``e`` for the root (e.g. ``e,1,12``)."""
    return ",".join("".join(map(str, w)) or "e" for w in sorted(T))


def parse_tree(text: str, m: int) -> Tree:
    text = text.strip()
    if not text:
        return ()
    words = [() if w == "e" else tuple(int(ch) for ch in w) for w in text.split(",")]
    return make_tree(words, m)


def tree_to_json(T: Tree) -> list[list[int]]:
    return [list(w) for w in sorted(T)]


def tree_from_json(data, m: int) -> Tree:
    return make_tree((tuple(w) for w in data), m)
