from __future__ import annotations

import math
from itertools import product

import pytest

from qdt.dtinv import dt_formula
from qdt.higgs import (
    class_to_higgs,
    dual,
    enumerate_higgs,
    higgs_count_check,
    higgs_to_class,
    higgs_to_sequence,
    is_higgs,
)
from qdt.necklaces import CyclicClass, classify, enumerate_classes, enumerate_U, seq_weight


def brute_higgs(n: int, d: int, m: int, box: int = 12):
    """Filter a box of integer sequences by the three defining conditions."""
    out = []
    for l in product(range(-box, box + 1), repeat=n - 1):
        l = l + (d - sum(l),)
        if not all(l[k + 1] - l[k] + (m - 1) >= 0 for k in range(n - 1)):
            continue
        if all(n * sum(l[:k]) >= d * k for k in range(1, n)):
            out.append(l)
    return sorted(out)


def test_enumerate_examples():
    assert list(enumerate_higgs(2, 1, 2)) == [(1, 0)]
    for d in (-3, 0, 5):
        assert list(enumerate_higgs(1, d, 3)) == [(d,)]


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("d", range(-4, 5))
@pytest.mark.parametrize("m", [1, 2, 3])
def test_enumerate_against_box(n, d, m):
    if n == 4 and m == 3:
        box = 8
    else:
        box = 12
    found = sorted(enumerate_higgs(n, d, m))
    assert found == brute_higgs(n, d, m, box)
    assert all(is_higgs(l, d, m) for l in found)


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("m", [1, 2, 3])
def test_shift_invariance(n, m):
    for d in range(-6, 7):
        assert sum(1 for _ in enumerate_higgs(n, d, m)) == sum(1 for _ in enumerate_higgs(n, d + n, m))


def test_to_class_examples():
    assert higgs_to_sequence((1, 0), 2) == (0, 2)
    assert higgs_to_class((1, 0), 2) == CyclicClass((0, 2), 2, 1)
    assert higgs_to_class((7,), 3) == classify((2,))
    assert class_to_higgs(CyclicClass((0, 2), 2, 1), 1, 2) == (1, 0)


def test_class_to_higgs_rejects_residue():
    with pytest.raises(ValueError):
        class_to_higgs(CyclicClass((0, 2), 2, 1), 2, 2)


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", range(1, 8))
def test_bijection_with_classes(m, n):
    for d in range(1, n + 1):
        if math.gcd(n, d) != 1:
            continue
        H = list(enumerate_higgs(n, d, m))
        classes = [higgs_to_class(l, m) for l in H]
        assert len(set(classes)) == len(H)
        target = sorted(C for C in enumerate_classes(m, n) if (C.weight + d) % n == 0)
        assert sorted(classes) == target
        for l, C in zip(H, classes):
            assert C.primitive
            assert seq_weight(higgs_to_sequence(l, m)) == n * l[0] - d
            assert (C.weight + d) % n == 0
            assert class_to_higgs(C, d, m) == l
        assert len(H) == dt_formula(m, n)
        assert higgs_count_check(n, d, m)


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", range(1, 7))
def test_nonprimitive_classes_avoid_coprime_residues(m, n):
    orbits = {}
    for a in enumerate_U(m, n):
        C = classify(a)
        orbits[C.rep] = C
    for C in orbits.values():
        if not C.primitive:
            for d in range(1, n + 1):
                if math.gcd(n, d) == 1:
                    assert (C.weight + d) % n != 0


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("m", [1, 2, 3])
def test_duality(n, m):
    for d in range(-4, 5):
        assert sorted(dual(l) for l in enumerate_higgs(n, d, m)) == sorted(enumerate_higgs(n, -d, m))


def test_count_check_examples():
    assert higgs_count_check(2, 1, 2)
    assert higgs_count_check(4, 1, 2)
    assert sum(1 for _ in enumerate_higgs(4, 1, 2)) == 2
    assert higgs_count_check(3, 2, 3)
    assert sum(1 for _ in enumerate_higgs(3, 2, 3)) == 3
    with pytest.raises(ValueError):
        higgs_count_check(4, 2, 2)
