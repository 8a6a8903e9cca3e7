import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from bpscount.arith import (
    divisors,
    factorize,
    format_rational,
    gen_binomial,
    iset,
    mobius,
    omega,
    parse_rational,
    to_rational,
)
from oracles import brute_divisors, brute_iset, falling_binomial


@pytest.mark.parametrize("n, expected", [(1, []), (12, [(2, 2), (3, 1)]), (97, [(97, 1)])])
def test_factorize_examples(n, expected):
    assert factorize(n) == expected


@given(st.integers(1, 10**6))
def test_factorize_matches_sympy(n):
    fac = factorize(n)
    assert fac == sorted(sympy.factorint(n).items())
    assert math.prod(p**e for p, e in fac) == n


@pytest.mark.parametrize("fn", [factorize, omega, mobius, divisors, iset])
@pytest.mark.parametrize("bad", [0, -3])
def test_rejects_nonpositive(fn, bad):
    with pytest.raises(ValueError):
        fn(bad)


@pytest.mark.parametrize("n, expected", [(1, 0), (12, 2), (30, 3)])
def test_omega(n, expected):
    assert omega(n) == expected


@pytest.mark.parametrize("n, expected", [(1, 1), (4, 0), (6, 1), (30, -1), (7, -1)])
def test_mobius(n, expected):
    assert mobius(n) == expected


def test_mobius_agrees_with_sympy():
    assert all(mobius(n) == sympy.mobius(n) for n in range(1, 3000))


@pytest.mark.parametrize("n, expected", [(1, [1]), (12, [1, 2, 3, 4, 6, 12]), (7, [1, 7])])
def test_divisors(n, expected):
    assert divisors(n) == expected


@pytest.mark.parametrize("n, expected", [(1, [1]), (4, [2, 4]), (12, [2, 4, 6, 12])])
def test_iset(n, expected):
    assert iset(n) == expected


def test_mobius_sum_and_iset_properties():
    for n in range(1, 10**4 + 1):
        assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)
        i = iset(n)
        assert set(i) <= set(divisors(n)) and n in i


def test_divisors_and_iset_match_brute_force():
    for n in range(1, 2000):
        assert divisors(n) == brute_divisors(n)
        assert iset(n) == brute_iset(n)


@given(st.integers(1, 1000), st.integers(1, 1000))
def test_mobius_multiplicative(a, b):
    if math.gcd(a, b) == 1:
        assert mobius(a * b) == mobius(a) * mobius(b)


@pytest.mark.parametrize("a, b, expected", [(5, 2, 10), (17, 0, 1), (-4, 0, 1), (-1, 3, -1), (2, 5, 0)])
def test_gen_binomial_examples(a, b, expected):
    assert gen_binomial(a, b) == expected


def test_gen_binomial_factorial_ratio():
    for a in range(41):
        for b in range(a + 1):
            assert gen_binomial(a, b) == math.factorial(a) // (math.factorial(b) * math.factorial(a - b))


def test_gen_binomial_minus_one():
    assert [gen_binomial(-1, b) for b in range(31)] == [(-1) ** b for b in range(31)]


@given(st.integers(-60, 60), st.integers(0, 25))
def test_gen_binomial_is_falling_factorial(a, b):
    assert gen_binomial(a, b) == falling_binomial(a, b)


def test_gen_binomial_rejects_negative_lower():
    with pytest.raises(ValueError):
        gen_binomial(3, -1)


@pytest.mark.parametrize("text, expected", [
    ("3", Fraction(3)), ("-45/8", Fraction(-45, 8)), ("6/4", Fraction(3, 2)),
    ("+7", Fraction(7)), ("0/5", Fraction(0)), ("-6/4", Fraction(-3, 2)),
])
def test_parse_rational(text, expected):
    x = parse_rational(text)
    assert x == expected
    assert math.gcd(x.numerator, x.denominator) == 1 and x.denominator > 0


@pytest.mark.parametrize("text", ["1.5", "1e3", "", "3/", "/4", "a", "1/0", "2/-3"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_to_rational_refuses_floats():
    with pytest.raises(TypeError):
        to_rational(0.5)


rationals = st.fractions(max_denominator=10**6)


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a:
        assert a * (1 / a) == 1
    for x in (a + b, a * b, -a):
        assert math.gcd(x.numerator, x.denominator) == 1 and x.denominator >= 1
        assert parse_rational(format_rational(x)) == x
