"""Closed-form degrees of lambda_1^e and lambda_1 on one-dimensional spaces.

All spaces here are 4-pointed (dimension one). Each degree is computed along
one route and, where two equivalent closed forms exist, checked against the
second route before it is returned.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .monodromy import InvalidDatumError, MonodromyDatum, age_sum
from .numeric import multinomial

__all__ = [
    "ConsistencyError",
    "UnsupportedCaseError",
    "AgeCase",
    "Lambda1eCase",
    "classify_lambda1e",
    "lambda1e_degree",
    "lambda1e_degree_min_form",
    "lambda1e_degree_case_form",
    "lambda1_degree",
    "lambda1_degree_compact",
    "lambda1_degree_prime",
    "psi_integral",
    "is_prime",
]


class ConsistencyError(RuntimeError):
    """Two routes to the same number disagreed. Always a bug."""


class UnsupportedCaseError(ValueError):
    """The requested formula does not cover this input."""


class AgeCase(enum.Enum):
    AGE_SUM_ZERO = 0
    AGE_SUM_ONE = 1
    AGE_SUM_TWO_LOW = 2
    AGE_SUM_TWO_HIGH = 3
    AGE_SUM_THREE = 4


@dataclass(frozen=True)
class Lambda1eCase:
    case_id: AgeCase
    sorted_ages: tuple[Fraction, ...]


def _require_four(datum: MonodromyDatum) -> None:
    if datum.n != 4:
        raise InvalidDatumError(f"one-dimensional formulas need n = 4, got n = {datum.n}")


def _sorted_residues(datum: MonodromyDatum, e: int) -> list[int]:
    # numerators of the ages over d
    return sorted(e * x % datum.d for x in datum.m)


def classify_lambda1e(datum: MonodromyDatum, e: int) -> Lambda1eCase:
    _require_four(datum)
    s = age_sum(datum, e)
    r = _sorted_residues(datum, e)
    d = datum.d
    if s == 0:
        case = AgeCase.AGE_SUM_ZERO
    elif s == 1:
        case = AgeCase.AGE_SUM_ONE
    elif s == 2:
        case = AgeCase.AGE_SUM_TWO_LOW if r[0] + r[3] <= d else AgeCase.AGE_SUM_TWO_HIGH
    elif s == 3:
        case = AgeCase.AGE_SUM_THREE
    else:
        raise AssertionError(f"age sum {s} out of range for 4 points")
    return Lambda1eCase(case, tuple(Fraction(x, d) for x in r))


def lambda1e_degree_min_form(datum: MonodromyDatum, e: int) -> Fraction:
    """Compact two-branch min formula.

    A vanishing age sum is sent straight to 0: the bare formula would give
    ``min{0, -1} = -1`` there.
    """
    _require_four(datum)
    d = datum.d
    s = age_sum(datum, e)
    if e == 0 or s == 0:
        return Fraction(0)
    a1, _, _, a4 = _sorted_residues(datum, e)
    if a1 + a4 <= d:
        return min(Fraction(a1, d * d), Fraction(s - 1))
    return min(Fraction(d - a4, d * d), Fraction(3 - s))


def lambda1e_degree_case_form(datum: MonodromyDatum, e: int) -> Fraction:
    """Five-case formula, driven by the age sum and the extreme ages."""
    case = classify_lambda1e(datum, e)
    d = datum.d
    if case.case_id is AgeCase.AGE_SUM_TWO_LOW:
        return case.sorted_ages[0] / d
    if case.case_id is AgeCase.AGE_SUM_TWO_HIGH:
        return (1 - case.sorted_ages[3]) / d
    return Fraction(0)


def lambda1e_degree(datum: MonodromyDatum, e: int) -> Fraction:
    """Degree of lambda_1^e on the 4-pointed space of the (connected) datum."""
    _require_four(datum)
    if not datum.is_connected():
        raise InvalidDatumError(f"{datum} is not connected (gcd(m, d) > 1)")
    value = lambda1e_degree_min_form(datum, e)
    check = lambda1e_degree_case_form(datum, e)
    if value != check:
        raise ConsistencyError(
            f"lambda1^{e} on {datum}: min form gives {value}, case form gives {check}"
        )
    return value


def lambda1_degree(datum: MonodromyDatum) -> Fraction:
    """Degree of lambda_1 as an alternating gcd^2 sum over all subsets of the 4 points.

    Works on disconnected data too; callers that care look at
    ``datum.is_connected()``.
    """
    _require_four(datum)
    d = datum.d
    total = 0
    for k in range(5):
        for subset in combinations(datum.m, k):
            total += (-1) ** k * gcd(sum(subset), d) ** 2
    return Fraction(total, 24 * d * d)


def lambda1_degree_compact(datum: MonodromyDatum) -> Fraction:
    """Same degree, summing one subset per complementary pair and doubling."""
    _require_four(datum)
    d = datum.d
    m = datum.m
    total = d * d
    total -= sum(gcd(x, d) ** 2 for x in m)
    total += sum(gcd(m[i] + m[3], d) ** 2 for i in range(3))
    return Fraction(total, 12 * d * d)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def lambda1_degree_prime(datum: MonodromyDatum) -> tuple[Fraction, int]:
    """Degree of lambda_1 for an odd prime ``d``, with the case line (1-4) used.

    Lines: 1 = some monodromy is 0; 2 = no two monodromies are inverse;
    3 = two distinct inverse pairs {i, p-i, j, p-j}; 4 = one inverse pair
    taken twice, {i, i, p-i, p-i}.

    ``p = 2`` is refused: (1,1,1,1) has degree 1/4, while the line-4 value
    would be 3/16, so the case analysis only holds for odd primes.
    """
    _require_four(datum)
    p = datum.d
    if p == 2 or not is_prime(p):
        raise UnsupportedCaseError(f"prime-degree formula needs an odd prime, got d = {p}")
    m = datum.m
    scale = Fraction(p * p - 1, p * p)
    if 0 in m:
        return Fraction(0), 1
    inverse_pairs = [(i, j) for i, j in combinations(range(4), 2) if (m[i] + m[j]) % p == 0]
    if not inverse_pairs:
        return scale / 12, 2
    values = sorted(m)
    if len(set(values)) == 4 and len(inverse_pairs) == 2:
        return scale / 6, 3
    if len(set(values)) == 2 and values[0] == values[1] and values[2] == values[3]:
        return scale / 4, 4
    raise ConsistencyError(f"cannot classify {datum} into the prime-degree cases")


def psi_integral(datum: MonodromyDatum, k) -> Fraction:
    """Integral of ``prod psi_i^{k_i}``: the M_{0,n} multinomial divided by d."""
    k = list(k)
    if len(k) != datum.n:
        raise InvalidDatumError(f"need {datum.n} exponents, got {len(k)}")
    if sum(k) != datum.n - 3 or any(x < 0 for x in k):
        raise InvalidDatumError(
            f"psi exponents {k} must be nonnegative and sum to the dimension {datum.n - 3}"
        )
    return Fraction(multinomial(k), datum.d)
