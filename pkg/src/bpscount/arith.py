"""Exact integer/rational primitives: factorization, omega, Moebius, divisors,
the square-free quotient set I(n) and binomials with arbitrary upper argument.

Rationals are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

ExactRational = Fraction

_RATIONAL_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?")


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected an integer, got {n!r}")
    if n <= 0:
        raise ValueError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=4096)
def _factorize(n: int) -> tuple[tuple[int, int], ...]:
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return tuple(factors)


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of ``n`` by trial division, as ``[(p, e), ...]``
    with strictly increasing primes. ``factorize(1) == []``."""
    _check_positive(n)
    return list(_factorize(n))


def omega(n: int) -> int:
    """Number of distinct primes dividing ``n``."""
    _check_positive(n)
    return len(_factorize(n))


def mobius(n: int) -> int:
    _check_positive(n)
    fac = _factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def is_squarefree(n: int) -> bool:
    _check_positive(n)
    return all(e == 1 for _, e in _factorize(n))


@lru_cache(maxsize=4096)
def _divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in _factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in increasing order."""
    _check_positive(n)
    return list(_divisors(n))


def iset(n: int) -> list[int]:
    """Divisors ``k`` of ``n`` whose cofactor ``n // k`` is square-free.

    Always contains ``n`` itself.
    """
    _check_positive(n)
    return [k for k in _divisors(n) if is_squarefree(n // k)]


def gen_binomial(a: int, b: int) -> int:
    """Binomial coefficient a(a-1)...(a-b+1)/b! for any integer ``a``.

    Negative upper arguments use the reflection
    binom(a, b) = (-1)^b binom(b - a - 1, b), which is the same falling
    factorial product.
    """
    if b < 0:
        raise ValueError(f"lower argument must be nonnegative, got {b}")
    if a >= 0:
        return math.comb(a, b)
    return (-1) ** b * math.comb(b - a - 1, b)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a reduced Fraction.

    Decimal and exponent notation are rejected so no float can sneak in.
    """
    if not isinstance(text, str):
        raise TypeError(f"expected a string, got {type(text).__name__}")
    match = _RATIONAL_RE.fullmatch(text.strip())
    if match is None:
        raise ValueError(f"malformed rational: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(x: Fraction | int) -> str:
    return str(Fraction(x))


def to_rational(x) -> Fraction:
    """Coerce an int, Fraction or rational string to a Fraction; floats are refused."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")
