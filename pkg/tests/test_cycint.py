import cmath
import math
import random

import pytest

from carlitzdigits.cycint import (
    CycloInt,
    cyclotomic_poly,
    exponent_sum,
    int_poly_resultant,
    root_of_unity,
)


def euler_phi(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def int_poly_mul(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] += x * y
    return out


def int_poly_eval(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def test_cyclotomic_poly_pinned():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_poly_degree_and_product():
    for n in range(1, 31):
        assert len(cyclotomic_poly(n)) - 1 == euler_phi(n)
        prod = [1]
        for d in range(1, n + 1):
            if n % d == 0:
                prod = int_poly_mul(prod, list(cyclotomic_poly(d)))
        expected = [0] * (n + 1)
        expected[0] = -1
        expected[n] = 1
        assert prod == expected


def test_ring_axioms_random():
    rng = random.Random(21)
    for _ in range(120):
        n = rng.choice((1, 2, 3, 4, 5, 6, 8, 12, 26))
        deg = len(cyclotomic_poly(n)) - 1
        mk = lambda: CycloInt(n, tuple(rng.randint(-9, 9) for _ in range(deg)))
        a, b, c = mk(), mk(), mk()
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + CycloInt.zero(n) == a
        assert a * CycloInt.one(n) == a
        assert a - a == CycloInt.zero(n)
        assert 3 * a == a + a + a


def test_geometric_sum_vanishes():
    for n in (2, 3, 4, 6, 8, 12, 26):
        for j in range(2 * n + 1):
            s = exponent_sum(n, ((j * k, 1) for k in range(n)))
            expected = n if j % n == 0 else 0
            assert s.as_integer() == expected


def test_inverse_roots():
    for n in (1, 2, 3, 5, 8, 24, 26, 30, 48):
        for k in range(n):
            prod = root_of_unity(n, k) * root_of_unity(n, n - k)
            assert prod == CycloInt.one(n)


def test_powers_match_exponents():
    for n in (4, 6, 26):
        z = root_of_unity(n, 1)
        for k in range(2 * n):
            assert z**k == root_of_unity(n, k)


def test_lift_consistency():
    rng = random.Random(22)
    pairs = [(2, 8), (4, 8), (3, 12), (8, 24), (2, 26), (13, 26), (1, 7)]
    for n, m in pairs:
        for a in range(n):
            assert root_of_unity(n, a).lift(m) == root_of_unity(m, a * (m // n))
        for _ in range(10):
            deg = len(cyclotomic_poly(n)) - 1
            x = CycloInt(n, tuple(rng.randint(-5, 5) for _ in range(deg)))
            y = CycloInt(n, tuple(rng.randint(-5, 5) for _ in range(deg)))
            assert (x * y).lift(m) == x.lift(m) * y.lift(m)
            assert (x + y).lift(m) == x.lift(m) + y.lift(m)
    with pytest.raises(ValueError):
        root_of_unity(8, 1).lift(12)


def test_order_mismatch_rejected():
    with pytest.raises(ValueError):
        root_of_unity(4, 1) + root_of_unity(8, 1)
    with pytest.raises(ValueError):
        root_of_unity(4, 1) * root_of_unity(8, 2)


def test_as_integer():
    assert CycloInt.from_int(12, -7).as_integer() == -7
    assert root_of_unity(2, 1).as_integer() == -1
    assert root_of_unity(4, 2).as_integer() == -1
    assert root_of_unity(4, 1).as_integer() is None
    assert root_of_unity(3, 1).as_integer() is None


def test_complex_eval_accuracy():
    for n in (2, 3, 4, 8, 26):
        for k in range(n):
            got = root_of_unity(n, k).complex_eval()
            want = cmath.exp(2j * cmath.pi * k / n)
            assert abs(got - want) < 1e-9
    x = exponent_sum(26, [(3, 2), (17, -5), (0, 1)])
    want = 2 * cmath.exp(2j * cmath.pi * 3 / 26) - 5 * cmath.exp(2j * cmath.pi * 17 / 26) + 1
    assert abs(x.complex_eval() - want) < 1e-9


def test_resultant_linear():
    rng = random.Random(23)
    for _ in range(50):
        a, b = rng.randint(-20, 20), rng.randint(-20, 20)
        assert int_poly_resultant((-a, 1), (-b, 1)) == a - b


def test_resultant_against_root_product():
    rng = random.Random(24)
    for _ in range(100):
        roots = [rng.randint(-6, 6) for _ in range(rng.randint(1, 4))]
        lead = rng.choice((1, 2, -3))
        f = [lead]
        for a in roots:
            f = int_poly_mul(f, [-a, 1])
        g = [rng.randint(-5, 5) for _ in range(rng.randint(1, 4))] + [rng.choice((1, -1, 2))]
        expected = lead ** (len(g) - 1)
        for a in roots:
            expected *= int_poly_eval(g, a)
        assert int_poly_resultant(f, g) == expected


def test_resultant_edge_cases():
    assert int_poly_resultant((), (1, 2)) == 0
    assert int_poly_resultant((0, 0), (1, 2)) == 0
    assert int_poly_resultant((5,), (7,)) == 1
    assert int_poly_resultant((3,), (1, 2, 1)) == 9
    assert int_poly_resultant((1, 2, 1), (3,)) == 9


def test_bad_coordinate_count():
    with pytest.raises(ValueError):
        CycloInt(4, (1, 2, 3))
