import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from schurweyl.radicals import (
    ONE,
    ZERO,
    Radical,
    radical_from_sqrt,
    squarefree_decompose,
)


def brute_squarefree(n):
    # Oracle: largest square divisor by direct search.
    best = 1
    s = 1
    while s * s <= n:
        if n % (s * s) == 0:
            best = s
        s += 1
    return best, n // (best * best)


def test_squarefree_decompose_small():
    assert squarefree_decompose(1) == (1, 1)
    assert squarefree_decompose(4) == (2, 1)
    assert squarefree_decompose(12) == (2, 3)
    assert squarefree_decompose(360) == (6, 10)
    for n in range(1, 2000):
        s, m = squarefree_decompose(n)
        assert s * s * m == n
        assert (s, m) == brute_squarefree(n)


def test_squarefree_decompose_large_remainders():
    # Remainder after cube-root trial division: 1, p, p^2 and p*q cases.
    p, q = 10007, 10009
    assert squarefree_decompose(p) == (1, p)
    assert squarefree_decompose(p * p) == (p, 1)
    assert squarefree_decompose(p * q) == (1, p * q)
    assert squarefree_decompose(4 * p * q) == (2, p * q)
    with pytest.raises(ValueError):
        squarefree_decompose(0)


def test_constructor_normalizes():
    # sqrt(8) == 2*sqrt(2); like terms merge; zeros drop.
    assert Radical({8: 1}) == Radical({2: 2})
    assert Radical({2: 1, 8: 1}) == Radical({2: 3})
    assert Radical({3: Fraction(1, 2), 12: Fraction(-1, 4)}).is_zero()
    assert Radical({}).is_zero()
    assert not ZERO
    assert ONE.is_rational()


def test_golden_string_forms():
    assert radical_from_sqrt(-1, 3, 4).to_string() == "-1/2*sqrt(3)"
    assert radical_from_sqrt(1, 1, 2).to_string() == "1/2*sqrt(2)"
    assert radical_from_sqrt(1, 2, 3).to_string() == "1/3*sqrt(6)"
    assert radical_from_sqrt(1, 1, 1).to_string() == "1"
    assert ZERO.to_string() == "0"
    assert (ONE + radical_from_sqrt(-1, 3, 1)).to_string() == "1-1*sqrt(3)"
    assert (radical_from_sqrt(-1, 1, 4) + radical_from_sqrt(1, 3, 9)).to_string() == "-1/2+1/3*sqrt(3)"


def test_from_sqrt_squares_back():
    for num in range(0, 40):
        for den in range(1, 40):
            for sign in (-1, 1):
                r = radical_from_sqrt(sign, num, den)
                assert r.square() == Radical({1: Fraction(num, den)})
                assert math.isclose(
                    r.to_float(), sign * math.sqrt(num / den), abs_tol=1e-12
                )


def test_mul_cross_radicands():
    r = radical_from_sqrt(1, 6, 1) * radical_from_sqrt(1, 10, 1)
    assert r == Radical({15: 2})
    assert (ONE + radical_from_sqrt(1, 2, 1)).square() == Radical({1: 3, 2: 2})


def test_json_round_trip():
    r = Radical({1: Fraction(-1, 2), 3: Fraction(1, 3)})
    obj = r.to_json_obj()
    assert obj["terms"] == [
        {"radicand": 1, "num": -1, "den": 2},
        {"radicand": 3, "num": 1, "den": 3},
    ]
    assert math.isclose(obj["approx"], r.to_float())
    assert Radical.from_json_obj(obj) == r
    with pytest.raises(ValueError):
        Radical.from_json_obj([1, 2])


rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=12
)
radicands = st.integers(min_value=1, max_value=60)


@st.composite
def radical_values(draw):
    n = draw(st.integers(min_value=0, max_value=4))
    terms = {}
    for _ in range(n):
        m = draw(radicands)
        c = draw(rationals)
        terms[m] = terms.get(m, 0) + c
    return Radical(terms)


@given(radical_values(), radical_values(), radical_values())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert (a - a).is_zero()


@given(radical_values())
def test_float_tracks_exact(a):
    total = sum(
        (float(c) * math.sqrt(m) for m, c in a.items()), 0.0
    )
    assert math.isclose(a.to_float(), total, rel_tol=1e-12, abs_tol=1e-12)


@given(radical_values(), radical_values())
def test_hash_consistent_with_eq(a, b):
    if a == b:
        assert hash(a) == hash(b)
