"""Exact arithmetic for hexagon tiling counts.

Everything in this module is integer or rational and exact: binomial
coefficients with the zero-outside-range convention, rising factorials,
ratios of Gamma values at integer arguments, terminating hypergeometric
sums, and the three classical product formulas that count hexagon tilings
and two of their symmetry classes.

All functions are pure and reentrant.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Union

Rational = Union[Fraction, int]


class GammaPoleError(ArithmeticError):
    """A Gamma pole appeared where nothing cancels it."""


class NonTerminatingSeriesError(ValueError):
    """A hypergeometric sum was requested that does not terminate."""


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, extended by 0 whenever k < 0 or k > n.

    This matches Gamma(n+1)/(Gamma(k+1)Gamma(n-k+1)) on 0 <= k <= n and is
    identically zero everywhere else, so Pascal's rule holds for all
    integer arguments with n >= 1.
    """
    if 0 <= k <= n:
        return math.comb(n, k)
    return 0


def pochhammer(a: Rational, b: int) -> Fraction:
    """Rising factorial a(a+1)...(a+b-1); the empty product (b = 0) is 1."""
    if b < 0:
        raise ValueError("pochhammer length must be nonnegative")
    result = Fraction(1)
    a = Fraction(a)
    for t in range(b):
        result *= a + t
    return result


def gamma_ratio(numerator_args: Sequence[int], denominator_args: Sequence[int]) -> Fraction:
    """Exact product(Gamma(a_i)) / product(Gamma(b_j)) for integer arguments.

    A pole among the denominator arguments (a nonpositive integer) makes the
    whole ratio zero.  A pole among the numerator arguments that is not
    matched by a denominator pole has no finite value and raises
    GammaPoleError; matched pole pairs are refused as well since no caller
    in this package needs reflection-style limits.
    """
    num_poles = sum(1 for a in numerator_args if a <= 0)
    den_poles = sum(1 for b in denominator_args if b <= 0)
    if num_poles > den_poles:
        raise GammaPoleError("gamma pole in numerator")
    if num_poles and num_poles == den_poles:
        raise GammaPoleError("pole-for-pole gamma ratio is undefined without limits")
    if den_poles:
        return Fraction(0)
    num = 1
    for a in numerator_args:
        num *= math.factorial(a - 1)
    den = 1
    for b in denominator_args:
        den *= math.factorial(b - 1)
    return Fraction(num, den)


def hyp_terminating(
    num_params: Sequence[Rational],
    den_params: Sequence[Rational],
    z: Rational,
) -> Fraction:
    """Exact value of a terminating generalised hypergeometric series.

    Sums sum_k (a_1)_k ... (a_p)_k / ((b_1)_k ... (b_q)_k) * z^k / k! over
    the terminating range.  The termination index is the smallest k at
    which some numerator Pochhammer vanishes, i.e. the smallest 1 - a over
    nonpositive-integer numerator parameters a; denominator parameters are
    only checked for poles up to that index.
    """
    num = [Fraction(a) for a in num_params]
    den = [Fraction(b) for b in den_params]
    z = Fraction(z)
    if z == 0:
        return Fraction(1)
    stops = [1 - a for a in num if a.denominator == 1 and a <= 0]
    if not stops:
        raise NonTerminatingSeriesError(
            "no nonpositive integer among the numerator parameters"
        )
    kmax = int(min(stops))
    total = Fraction(0)
    term = Fraction(1)
    for k in range(kmax):
        total += term
        if k + 1 == kmax:
            break
        factor = z
        for a in num:
            factor *= a + k
        for b in den:
            if b + k == 0:
                raise ZeroDivisionError(
                    f"denominator parameter {b} hits a pole at term {k + 1}"
                )
            factor /= b + k
        term *= factor / (k + 1)
    return total


PRODUCT_KINDS = ("box", "transpose_complement", "vertical_symmetric")


def product_formula(kind: str, n: int, m: int) -> int:
    """One of the three classical tiling-count products for the n,2m,n hexagon.

    ``box`` counts all tilings (equivalently plane partitions in an
    n x 2m x n box), ``transpose_complement`` counts the horizontally
    symmetric tilings, and ``vertical_symmetric`` the vertically symmetric
    ones.  Each product is accumulated as a single exact rational and
    asserted to be an integer at the end, which catches index-range
    transcription mistakes immediately.
    """
    if n < 1 or m < 1:
        raise ValueError("hexagon sides must be positive")
    if kind == "box":
        acc = Fraction(1)
        for i in range(1, n + 1):
            for j in range(1, 2 * m + 1):
                for k in range(1, n + 1):
                    acc *= Fraction(i + j + k - 1, i + j + k - 2)
    elif kind == "transpose_complement":
        if n % 2:
            raise ValueError("transpose_complement requires even n")
        acc = Fraction(binomial(n + m - 1, n - 1))
        for i in range(1, n - 1):
            for j in range(i, n - 1):
                acc *= Fraction(2 * m + i + j + 1, i + j + 1)
    elif kind == "vertical_symmetric":
        acc = Fraction(1)
        for i in range(1, n + 1):
            acc *= Fraction(2 * i + 2 * m - 1, 2 * i - 1)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                acc *= Fraction(i + j + 2 * m - 1, i + j - 1)
    else:
        raise ValueError(f"unknown product formula kind: {kind!r}")
    if acc.denominator != 1:
        raise ArithmeticError(f"{kind} product did not reduce to an integer")
    return acc.numerator
