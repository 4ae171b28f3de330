"""Localization relations that re-derive the one-dimensional degrees.

A vanishing auxiliary integral over parameterized admissible covers is
evaluated as a sum over torus fixed loci ``Gamma_I`` (points in ``I`` over
infinity, the rest over 0). Each locus adds ``alpha_part * L + beta_part``
where ``L`` is the unknown degree, and the relation ``alpha L + beta = 0``
is solved for ``L``. The global ``1/t`` factor is dropped throughout; loci
with the designated point 4 in ``I`` do not meet the integrand and are
omitted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd

from .degrees import UnsupportedCaseError, lambda1_degree, lambda1e_degree
from .monodromy import InvalidDatumError, MonodromyDatum, age_sum, cover_invariants
from .numeric import format_rational

__all__ = [
    "Contribution",
    "LocalizationRelation",
    "DegenerateRelationError",
    "FixedLocusData",
    "fixed_locus_data",
    "edge_constant",
    "vertex_constant",
    "orbifold_relation",
    "nonorbifold_relation",
    "solve",
    "relation_report",
]


class DegenerateRelationError(ArithmeticError):
    def __init__(self, relation: "LocalizationRelation"):
        self.relation = relation
        lines = ", ".join(f"{c.label}: ({c.alpha_part}, {c.beta_part})" for c in relation.contributions)
        super().__init__(f"relation has zero coefficient on the unknown; contributions {lines}")


@dataclass(frozen=True)
class Contribution:
    label: tuple[int, ...]
    alpha_part: Fraction
    beta_part: Fraction


@dataclass(frozen=True)
class LocalizationRelation:
    """``alpha * L + beta = 0`` together with its per-locus breakdown."""

    alpha: Fraction
    beta: Fraction
    contributions: tuple[Contribution, ...]

    @classmethod
    def from_contributions(cls, contributions) -> "LocalizationRelation":
        contributions = tuple(contributions)
        alpha = sum((c.alpha_part for c in contributions), Fraction(0))
        beta = sum((c.beta_part for c in contributions), Fraction(0))
        return cls(alpha, beta, contributions)


@dataclass(frozen=True)
class FixedLocusData:
    """Discrete invariants used by one non-orbifold fixed locus.

    ``genus``/``q`` describe the cover over the contracted side: for
    ``Gamma_{1,2,3}`` the cover genus and ``gcd(m_4, d)``; for
    ``Gamma_{i,j}`` the genus ``g_ij`` of the (possibly disconnected)
    curve over infinity and ``q_ij = gcd(m_i + m_j, d)``; for
    ``Gamma_{j}`` just ``q_j = gcd(m_j, d)``.
    """

    label: tuple[int, ...]
    genus: int | None
    q: int | None
    components: int | None = None


def fixed_locus_data(datum: MonodromyDatum) -> list[FixedLocusData]:
    """Invariants for each contributing locus (point 4 sent to infinity)."""
    if datum.n != 4:
        raise InvalidDatumError(f"localization is set up for n = 4, got n = {datum.n}")
    d, m = datum.d, datum.m
    inv = cover_invariants(datum)
    out = [FixedLocusData((), None, None)]
    for j in range(3):
        out.append(FixedLocusData((j + 1,), None, inv.q[j]))
    for i, j in combinations(range(3), 2):
        qij = gcd(m[i] + m[j], d)
        excess = inv.q[i] + inv.q[j] + qij - d
        if excess % 2:
            raise ArithmeticError(f"g_{i + 1}{j + 1} is not an integer for {datum}")
        gij = 1 - excess // 2
        out.append(FixedLocusData((i + 1, j + 1), gij, qij, reduce(gcd, (m[i], m[j]), d)))
    out.append(FixedLocusData((1, 2, 3), inv.genus, inv.q[3]))
    for locus in out:
        if locus.genus is None:
            continue
        # g_ij is an arithmetic genus and may be negative when the curve over
        # infinity is disconnected; the component genera must still sum to >= 0
        pieces = locus.components if locus.components is not None else 1
        if locus.genus + pieces - 1 < 0:
            raise ArithmeticError(f"negative total genus at locus {locus.label} for {datum}")
    return out


def edge_constant(d: int, q: int) -> Fraction:
    """Constant term of ``Gamma_{j}``: ``(d-q)(3d^2 - 3dq - 4d + 2q) / (24 d^2)``."""
    return Fraction((d - q) * (3 * d * d - 3 * d * q - 4 * d + 2 * q), 24 * d * d)


def vertex_constant(d: int, g: int, q: int) -> Fraction:
    """Constant term shared by ``Gamma_{1,2,3}`` and ``Gamma_{i,j}``, over ``24 d^2``."""
    num = (
        3 * d**3
        + 12 * g * d**2
        + 6 * d**2 * q
        - 16 * d**2
        + 12 * g**2 * d
        + 12 * g * d * q
        + 3 * q**2 * d
        - 36 * g * d
        - 18 * d * q
        + 24 * d
        - 2 * q**2
    )
    return Fraction(num, 24 * d * d)


def nonorbifold_relation(datum: MonodromyDatum, infinity_point: int = 4) -> LocalizationRelation:
    """Relation for ``L = deg lambda_1``, with ``infinity_point`` playing point 4."""
    if datum.n != 4:
        raise InvalidDatumError(f"localization is set up for n = 4, got n = {datum.n}")
    if not 1 <= infinity_point <= 4:
        raise InvalidDatumError(f"infinity_point must be 1..4, got {infinity_point}")
    order = [i for i in range(1, 5) if i != infinity_point] + [infinity_point]
    work = datum.permuted(order)
    d = work.d
    contributions = []
    for locus in fixed_locus_data(work):
        if len(locus.label) == 0:
            # lambda_2 pulled back along a forgetful map integrates to 0
            contributions.append(Contribution((), Fraction(0), Fraction(0)))
        elif len(locus.label) == 1:
            q = locus.q
            contributions.append(
                Contribution(locus.label, Fraction(d - q, 2), -edge_constant(d, q))
            )
        elif len(locus.label) == 2:
            contributions.append(
                Contribution(locus.label, Fraction(0), vertex_constant(d, locus.genus, locus.q))
            )
        else:
            g, q4 = locus.genus, locus.q
            contributions.append(
                Contribution(locus.label, Fraction(4 - d - q4 - 2 * g, 2), -vertex_constant(d, g, q4))
            )
    # report labels in the caller's numbering
    relabeled = tuple(
        Contribution(tuple(sorted(order[i - 1] for i in c.label)), c.alpha_part, c.beta_part)
        for c in contributions
    )
    return LocalizationRelation.from_contributions(relabeled)


def orbifold_relation(datum: MonodromyDatum, e: int) -> LocalizationRelation:
    """Relation for ``L = deg lambda_1^e`` when the ages sum to 2 and the
    smallest and largest ages sum to more than 1.

    The point of largest age is sent to infinity. Only ``Gamma_{j}`` and
    ``Gamma_{1,2,3}`` contribute; the psi degree ``1/d`` is folded into beta.
    """
    if datum.n != 4:
        raise InvalidDatumError(f"localization is set up for n = 4, got n = {datum.n}")
    if not datum.is_connected():
        raise InvalidDatumError(f"{datum} is not connected")
    d = datum.d
    s = age_sum(datum, e)
    residues = [e * x % d for x in datum.m]
    order = sorted(range(4), key=lambda i: residues[i])
    r = [residues[i] for i in order]
    if e == 0 or s != 2 or r[0] + r[3] <= d:
        raise UnsupportedCaseError(
            f"orbifold localization needs age sum 2 and a_min + a_max > 1; {datum}, e={e}"
        )
    ages = [Fraction(x, d) for x in r]
    labels = [i + 1 for i in order]
    contributions = [Contribution((), Fraction(0), Fraction(0))]
    for k in range(3):
        contributions.append(Contribution((labels[k],), ages[k], Fraction(0)))
    for a, b in combinations(range(3), 2):
        contributions.append(Contribution(tuple(sorted((labels[a], labels[b]))), Fraction(0), Fraction(0)))
    top = ages[3] - 1
    contributions.append(Contribution(tuple(sorted(labels[:3])), top, top / d))
    relation = LocalizationRelation.from_contributions(contributions)
    if relation.alpha != 1:
        raise AssertionError(f"orbifold relation should have alpha = 1, got {relation.alpha}")
    return relation


def solve(relation: LocalizationRelation) -> Fraction:
    if relation.alpha == 0:
        raise DegenerateRelationError(relation)
    return -relation.beta / relation.alpha


def relation_report(datum: MonodromyDatum, relation: LocalizationRelation, e: int | None = None) -> dict:
    """JSON-ready diagnostic: per-locus parts, solved degree and the closed form."""
    closed = lambda1_degree(datum) if e is None else lambda1e_degree(datum, e)
    solved = solve(relation)
    return {
        "d": datum.d,
        "m": list(datum.m),
        "e": e,
        "contributions": [
            {
                "locus": list(c.label),
                "alpha": format_rational(c.alpha_part),
                "beta": format_rational(c.beta_part),
            }
            for c in relation.contributions
        ],
        "alpha": format_rational(relation.alpha),
        "beta": format_rational(relation.beta),
        "solved": format_rational(solved),
        "closed_form": format_rational(closed),
        "agree": solved == closed,
    }
